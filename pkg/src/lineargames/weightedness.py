"""Deciding weightedness of linear games.

A game is weighted iff weights and a quota exist with every generator at
or above the quota and every shift-maximal losing coalition strictly
below it.  That system is decided by the exact LP engine; a positive
verdict comes with an exact realization, a negative one can be
complemented by a trade-robustness failure certificate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .coalitions import Coalition, empty_coalition, format_coalition
from .exactlp import LinearSystem, strictly_feasible
from .games import GameError, LinearGame, game_from_winning_bitmap


@dataclass(frozen=True)
class Realization:
    """An exact quota and normalized ordered weight vector.

    `weights[i-1]` is the weight of voter i (so the tuple is ascending in
    voter index, descending weights read right to left in display form).
    """

    q: Fraction
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if not 0 < self.q <= 1:
            raise GameError(f"quota {self.q} outside (0, 1]")
        if sum(self.weights) != 1:
            raise GameError("weights must sum to 1")
        if self.weights[0] < 0:
            raise GameError("weights must be nonnegative")
        if any(
            self.weights[i] > self.weights[i + 1]
            for i in range(len(self.weights) - 1)
        ):
            raise GameError("weights must be ascending in voter index")

    @property
    def n(self) -> int:
        return len(self.weights)

    def coalition_weight(self, a: Coalition) -> Fraction:
        return sum((self.weights[i - 1] for i in a.members()), Fraction(0))

    def __str__(self) -> str:
        return format_realization(self)


def format_realization(r: Realization) -> str:
    ws = ",".join(str(w) for w in reversed(r.weights))
    return f"({r.q}: {ws})"


def parse_realization(text: str) -> Realization:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise GameError(f"realization text must be (q: w_n,...,w_1), got {text!r}")
    head, _, tail = text[1:-1].partition(":")
    if not tail:
        raise GameError(f"missing ':' in realization {text!r}")
    q = Fraction(head.strip())
    ws = tuple(Fraction(tok.strip()) for tok in tail.split(","))
    return Realization(q, tuple(reversed(ws)))


def realization_to_json(r: Realization) -> dict:
    frac = lambda f: [f.numerator, f.denominator]
    return {"q": frac(r.q), "w": [frac(w) for w in reversed(r.weights)]}


def normalized_realization(quota, raw_weights) -> Realization:
    """Scale an unnormalized integer/rational certificate to total weight 1.

    `raw_weights` is given strongest voter first, matching the paper's
    (q: w_n, ..., w_1) display order.
    """
    ws = [Fraction(w) for w in raw_weights]
    total = sum(ws)
    return Realization(Fraction(quota) / total, tuple(w / total for w in reversed(ws)))


# -- the weightedness LP -----------------------------------------------------


def base_weight_system(n: int) -> LinearSystem:
    """Variables q, w1..wn with the normalization and ordering constraints."""
    sys = LinearSystem()
    sys.var("q")
    for i in range(1, n + 1):
        sys.var(f"w{i}")
    sys.eq({f"w{i}": Fraction(1) for i in range(1, n + 1)}, 1)
    for i in range(1, n):
        sys.geq({f"w{i + 1}": Fraction(1), f"w{i}": Fraction(-1)}, 0)
    sys.geq({"w1": Fraction(1)}, 0)
    sys.leq({"q": Fraction(1)}, 1)
    sys.gt({"q": Fraction(1)}, 0)
    return sys


def coalition_terms(a: Coalition, coeff=Fraction(1)) -> dict[str, Fraction]:
    return {f"w{i}": Fraction(coeff) for i in a.members()}


def _point_to_realization(point: dict[str, Fraction], n: int) -> Realization:
    return Realization(point["q"], tuple(point[f"w{i}"] for i in range(1, n + 1)))


_weighted_cache: dict[LinearGame, Optional[Realization]] = {}


def is_weighted(v: LinearGame) -> Optional[Realization]:
    """An exact realization if the game is weighted, else None.

    Only generators (weight >= quota) and shift-maximal losing coalitions
    (weight < quota) enter the LP; monotonicity makes the rest redundant.
    """
    if v in _weighted_cache:
        return _weighted_cache[v]
    sys = base_weight_system(v.n)
    for g in v.generators:
        terms = coalition_terms(g)
        terms["q"] = terms.get("q", Fraction(0)) - 1
        sys.geq(terms, 0)  # w_g - q >= 0
    for b in v.shift_maximal_losing():
        terms = coalition_terms(b)
        terms["q"] = terms.get("q", Fraction(0)) - 1
        sys.lt(terms, 0)  # w_b - q < 0
    point = strictly_feasible(sys)
    result = None
    if point is not None:
        result = _point_to_realization(point, v.n)
        assert verify_realization(v, result)
    _weighted_cache[v] = result
    return result


def verify_realization(v: LinearGame, r: Realization) -> bool:
    """Exhaustive check: weight-at-or-above-quota matches winning exactly."""
    if r.n != v.n:
        raise GameError(f"realization over {r.n} voters for {v.n}-voter game")
    bits = v.winning_bitmap()
    per_voter = r.weights
    for m in range(1 << v.n):
        w = Fraction(0)
        for i in range(v.n):
            if m >> i & 1:
                w += per_voter[i]
        if (w >= r.q) != bool(bits >> m & 1):
            return False
    return True


# -- trade robustness --------------------------------------------------------


@dataclass(frozen=True)
class TradeCertificate:
    """A trade-robustness failure: winning multiset X rearranged into an
    all-losing multiset Y with per-voter counts conserved."""

    winning_list: tuple[Coalition, ...]
    losing_list: tuple[Coalition, ...]

    def __str__(self) -> str:
        xs = ", ".join(format_coalition(c) for c in self.winning_list)
        ys = ", ".join(format_coalition(c) for c in self.losing_list)
        return f"X = {{{xs}}} -> Y = {{{ys}}}"


def check_certificate(v: LinearGame, c: TradeCertificate) -> bool:
    if len(c.winning_list) != len(c.losing_list) or not c.winning_list:
        return False
    counts_x = [0] * v.n
    counts_y = [0] * v.n
    for a in c.winning_list:
        if a.n != v.n or not v.is_winning(a):
            return False
        for i in a.members():
            counts_x[i - 1] += 1
    for b in c.losing_list:
        if b.n != v.n or v.is_winning(b):
            return False
        for i in b.members():
            counts_y[i - 1] += 1
    return counts_x == counts_y


def find_trade_failure(
    v: LinearGame, max_coalitions: int = 3
) -> Optional[TradeCertificate]:
    """Search for a trade failure with |X| = |Y| <= max_coalitions.

    Complete at the given bound; None proves nothing (is_weighted does).
    Search order: increasing |X|, then coalition rank order, so results
    are deterministic.
    """
    if max_coalitions < 2:
        raise GameError("trade search needs a bound of at least 2")
    n = v.n
    bits = v.winning_bitmap()
    order_key = lambda m: (Coalition(n, m).rank(), Coalition(n, m).members())
    winning = sorted(
        (m for m in range(1 << n) if bits >> m & 1), key=order_key
    )
    losing = sorted(
        (m for m in range(1 << n) if not bits >> m & 1), key=order_key
    )
    for j in range(2, max_coalitions + 1):
        for xs in itertools.combinations_with_replacement(winning, j):
            counts = [0] * n
            for m in xs:
                for i in range(n):
                    counts[i] += m >> i & 1
            ys = _losing_rearrangement(counts, j, losing, bits, n)
            if ys is not None:
                cert = TradeCertificate(
                    tuple(Coalition(n, m) for m in xs),
                    tuple(Coalition(n, m) for m in ys),
                )
                assert check_certificate(v, cert)
                return cert
    return None


def _losing_rearrangement(counts, j, losing, bits, n):
    """DFS for j losing coalitions with the given per-voter counts."""

    def rec(remaining, slots, start):
        if slots == 0:
            return [] if all(c == 0 for c in remaining) else None
        if any(c > slots for c in remaining):
            return None
        support = 0
        for i in range(n):
            if remaining[i] > 0:
                support |= 1 << i
        must = 0  # voters that must appear in every remaining coalition
        for i in range(n):
            if remaining[i] == slots:
                must |= 1 << i
        for idx in range(start, len(losing)):
            m = losing[idx]
            if m & ~support or must & ~m:
                continue
            nxt = remaining[:]
            for i in range(n):
                if m >> i & 1:
                    nxt[i] -= 1
            sub = rec(nxt, slots - 1, idx)
            if sub is not None:
                return [m] + sub
        return None

    return rec(list(counts), j, 0)


# -- the footprint method ----------------------------------------------------


def polytope_system(v: LinearGame) -> LinearSystem:
    """The realization polytope of v as an LP system over q, w1..wn:
    generators at or above the quota, shift-maximal losers strictly below."""
    sys = base_weight_system(v.n)
    for g in v.generators:
        terms = coalition_terms(g)
        terms["q"] = terms.get("q", Fraction(0)) - 1
        sys.geq(terms, 0)
    for b in v.shift_maximal_losing():
        terms = coalition_terms(b)
        terms["q"] = terms.get("q", Fraction(0)) - 1
        sys.lt(terms, 0)
    return sys


def footprint_weighted_cover(v: LinearGame, a: Coalition):
    """Decide weightedness of the cover u of v with W_u = W_v minus {a}.

    Feasibility of: some weight in the footprint of P_v has w_a strictly
    below every generator of u.  Returns (True, Realization-of-u) or
    (False, None).
    """
    if a not in v.generators:
        raise GameError(f"{a} is not a generator of {v}")
    if is_weighted(v) is None:
        raise GameError(f"{v} is not weighted")
    remaining = v.winning_bitmap() & ~(1 << a.mask)
    if remaining == 0:
        raise GameError("removing the only winning coalition leaves no game")
    u = game_from_winning_bitmap(remaining, v.n)
    sys = polytope_system(v)
    for g in u.generators:
        terms = coalition_terms(a)
        for name, c in coalition_terms(g, Fraction(-1)).items():
            terms[name] = terms.get(name, Fraction(0)) + c
        sys.lt(terms, 0)  # w_a - w_g < 0
    point = strictly_feasible(sys)
    if point is None:
        return False, None
    weights = tuple(point[f"w{i}"] for i in range(1, v.n + 1))
    w_a = sum(weights[i - 1] for i in a.members())
    w_min = min(
        sum(weights[i - 1] for i in g.members()) for g in u.generators
    )
    realization = Realization((w_a + w_min) / 2, weights)
    assert verify_realization(u, realization)
    return True, realization


def footprint_weighted_covered(u: LinearGame, b: Coalition):
    """Decide weightedness of the game below u obtained by letting b win.

    Mirror of footprint_weighted_cover: some weight in the footprint of
    P_u must put w_b strictly above every shift-maximal losing coalition
    of the lower game.
    """
    if b not in u.shift_maximal_losing():
        raise GameError(f"{b} is not shift-maximal losing in {u}")
    if is_weighted(u) is None:
        raise GameError(f"{u} is not weighted")
    v = game_from_winning_bitmap(u.winning_bitmap() | 1 << b.mask, u.n)
    sys = polytope_system(u)
    lower_losers = v.shift_maximal_losing()
    for c in lower_losers:
        terms = coalition_terms(b)
        for name, coeff in coalition_terms(c, Fraction(-1)).items():
            terms[name] = terms.get(name, Fraction(0)) + coeff
        sys.gt(terms, 0)  # w_b - w_c > 0
    if not lower_losers:
        sys.gt(coalition_terms(b), 0)  # only the empty coalition loses below b
    point = strictly_feasible(sys)
    if point is None:
        return False, None
    weights = tuple(point[f"w{i}"] for i in range(1, u.n + 1))
    coal_w = lambda c: sum(weights[i - 1] for i in c.members())
    w_top = min(coal_w(g) for g in v.generators)
    losers = v.shift_maximal_losing()
    w_low = max((coal_w(c) for c in losers), default=Fraction(0))
    realization = Realization((w_top + w_low) / 2, weights)
    assert verify_realization(v, realization)
    return True, realization
