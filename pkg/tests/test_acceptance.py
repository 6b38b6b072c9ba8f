"""Acceptance gate: the nine headline capabilities, one verdict line each.

Run with `pytest -v -s tests/test_acceptance.py` to see the per-criterion
PASS/FAIL lines; each criterion is also an ordinary assertion, so plain
`pytest` enforces the same gate.
"""

import random
from fractions import Fraction

from lineargames import (
    build_poset,
    chain_consistency,
    check_certificate,
    consensus_game,
    find_trade_failure,
    footprint_hierarchy,
    is_weighted,
    j_covers,
    normalized_realization,
    parse_game,
    probe_induced_conjecture,
    rank_generating_coefficients,
    symmetric_games_above_corner,
    verify_realization,
    vertical_chain,
    weakest_voter_game,
)
from lineargames.geometry import GenericityError
from lineargames.verify import run_suites

from test_games import all_games


def verdict(name: str, ok: bool) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}", flush=True)
    assert ok, name


def suite_ok(suite: str) -> bool:
    checks, ok = run_suites([suite])
    if not ok:
        for nm, passed, detail in checks:
            if not passed:
                print(f"    mismatch: {nm} — {detail}")
    return ok


def test_criterion_1_appendix_reproduction():
    verdict(
        "criterion 1: six-voter unweighted-games table reproduced",
        suite_ok("appendix-a"),
    )


def test_criterion_2_census_counts():
    verdict(
        "criterion 2: poset census counts (117 / 1171 / 60 / 41 / 21 / 40)",
        suite_ok("counts"),
    )


def test_criterion_3_enumeration_formula():
    verdict(
        "criterion 3: one-generator proper count formula and "
        "characterization, n = 1..10",
        suite_ok("enumeration-formula"),
    )


def test_criterion_4_facet_law():
    verdict(
        "criterion 4: facet count law n - k + d, exhaustive n <= 5, with "
        "corrected non-simplex census",
        suite_ok("facet-law"),
    )


def test_criterion_5_weightedness_certificates():
    ok = True
    v = parse_game("<987;8741>", 9)
    r = is_weighted(v)
    ok &= r is not None and verify_realization(v, r)
    ok &= verify_realization(
        v, normalized_realization(22, [9, 9, 9, 3, 3, 3, 1, 1, 1])
    )
    u = parse_game("<8741>", 9)
    ok &= is_weighted(u) is None
    cert = find_trade_failure(u, max_coalitions=2)
    ok &= cert is not None and check_certificate(u, cert)
    for v in build_poset(6, "J").nodes:
        if (is_weighted(v) is None) != (is_weighted(v.dual()) is None):
            ok = False
            break
    verdict(
        "criterion 5: exact weightedness with realization / trade "
        "certificates, dual-invariant across all 6-voter games",
        bool(ok),
    )


def test_criterion_6_generic_vertical_chains():
    rnd = random.Random(2026)
    ok = True
    for n in (4, 5):
        done = 0
        while done < 25:
            raw = sorted((rnd.randint(1, 10**6) for _ in range(n)), reverse=True)
            total = sum(raw)
            ws = [Fraction(x, total) for x in raw]
            try:
                chain = vertical_chain(ws, n)
            except GenericityError:
                continue
            done += 1
            report = chain_consistency(chain)
            ok &= len(chain) == (1 << n) - 1
            ok &= chain[0] == weakest_voter_game(n)
            ok &= chain[-1] == consensus_game(n)
            ok &= report.maximal and report.self_dual and report.consistent
            ok &= all(is_weighted(v) is not None for v in chain)
    verdict(
        "criterion 6: 50 generic weight vectors (n = 4, 5) give maximal "
        "self-dual all-weighted consistent chains",
        bool(ok),
    )


def test_criterion_7_chain_consistency_examples():
    verdict(
        "criterion 7: inconsistent 5-voter chain names its contradiction; "
        "all 14 maximal proper 4-voter chains consistent",
        suite_ok("chain-examples"),
    )


def test_criterion_8_geometric_hierarchy():
    ok = True
    for n in range(1, 6):
        for v in all_games(n):
            if footprint_hierarchy(v) != v.hierarchy():
                ok = False
                break
    thirds = symmetric_games_above_corner(3, 3)
    ok &= [iv for _, iv in thirds] == [
        (Fraction(0), Fraction(1, 3)),
        (Fraction(1, 3), Fraction(2, 3)),
        (Fraction(2, 3), Fraction(1)),
    ]
    halves = symmetric_games_above_corner(3, 2)
    ok &= [iv for _, iv in halves] == [
        (Fraction(0), Fraction(1, 2)),
        (Fraction(1, 2), Fraction(1)),
    ]
    verdict(
        "criterion 8: geometric hierarchy matches desirability for every "
        "weighted game n <= 5; symmetric corner quota intervals",
        bool(ok),
    )


def test_criterion_9_structural_properties():
    ok = True
    # duality is a rank-complementing involution
    for n in range(1, 6):
        for v in all_games(n):
            d = v.dual()
            ok &= d.dual() == v
            ok &= v.rank() + d.rank() == 1 << n
            if v != consensus_game(n):
                ok &= len(j_covers(v)) == len(v.generators)
    # realizations are scale-invariant under normalization
    v = parse_game("<321;43>", 4)
    base = is_weighted(v)
    scaled = normalized_realization(
        base.q * 7, [w * 7 for w in reversed(base.weights)]
    )
    ok &= scaled == base and verify_realization(v, scaled)
    # coalition rank generating function equals prod(1 + x^i), i = 1..n
    for n in range(1, 9):
        poly = [1]
        for i in range(1, n + 1):
            nxt = poly + [0] * i
            for t, c in enumerate(poly):
                nxt[t + i] += c
            poly = nxt
        ok &= rank_generating_coefficients(n) == poly
    probe = probe_induced_conjecture(6)
    ok &= probe.holds
    verdict(
        "criterion 9: duality / cover-count / scale-invariance / "
        "rank-polynomial properties; chain conjecture probe holds at n = 6",
        bool(ok),
    )
