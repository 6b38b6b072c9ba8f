"""Verification of the bundled table of unweighted 6-voter games."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from .coalitions import parse_coalition
from .games import LinearGame, format_game
from .posets import PosetError, build_poset
from .weightedness import is_weighted

GOLDEN_FILE = "appendix_a_n6.txt"


@dataclass(frozen=True)
class AppendixGolden:
    rank32: tuple[LinearGame, ...]
    higher: tuple[tuple[LinearGame, int], ...]


@dataclass
class AppendixReport:
    ok: bool = True
    mismatches: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.ok = False
        self.mismatches.append(message)


def load_golden(n: int = 6) -> AppendixGolden:
    if n != 6:
        raise PosetError("only the 6-voter table is bundled")
    text = (
        resources.files("lineargames.data").joinpath(GOLDEN_FILE).read_text()
    )
    section = None
    rank32: list[LinearGame] = []
    higher: list[tuple[LinearGame, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            section = line.strip("[]")
            continue
        if section == "rank32":
            gens = [parse_coalition(tok.strip(), 6) for tok in line.split(",")]
            rank32.append(LinearGame(6, gens))
        elif section == "higher":
            body, _, rank = line.partition("|")
            gens = [parse_coalition(tok.strip(), 6) for tok in body.split(",")]
            higher.append((LinearGame(6, gens), int(rank)))
        else:
            raise PosetError(f"stray line outside a section: {line!r}")
    return AppendixGolden(tuple(rank32), tuple(higher))


def verify_appendix(n: int = 6) -> AppendixReport:
    """Recompute the unweighted 6-voter games and diff them against the
    bundled table: 20 at rank 32, 20 of higher rank with listed ranks,
    duals of the latter below rank 32, all 60 improper."""
    golden = load_golden(n)
    report = AppendixReport()
    poset = build_poset(n, "J")
    unweighted = [v for v in poset.nodes if is_weighted(v) is None]
    if len(unweighted) != 60:
        report.fail(f"expected 60 unweighted games, found {len(unweighted)}")

    half = 1 << (n - 1)
    at_half = {v for v in unweighted if v.rank() == half}
    above = {v for v in unweighted if v.rank() > half}
    below = {v for v in unweighted if v.rank() < half}

    for v in sorted(
        at_half.symmetric_difference(golden.rank32),
        key=lambda g: format_game(g),
    ):
        side = "computed" if v in at_half else "table"
        report.fail(f"rank-32 column mismatch ({side} only): {format_game(v)}")

    golden_higher = {v: r for v, r in golden.higher}
    for v in sorted(
        above.symmetric_difference(golden_higher),
        key=lambda g: format_game(g),
    ):
        side = "computed" if v in above else "table"
        report.fail(f"higher-rank column mismatch ({side} only): {format_game(v)}")
    for v, r in golden.higher:
        if v in above and v.rank() != r:
            report.fail(
                f"rank mismatch for {format_game(v)}: computed {v.rank()}, table {r}"
            )

    duals = {v.dual() for v in golden_higher}
    for v in sorted(duals.symmetric_difference(below), key=format_game):
        side = "computed" if v in below else "dual-of-table"
        report.fail(f"below-32 dual mismatch ({side} only): {format_game(v)}")

    for v in unweighted:
        if v.classify()["proper"]:
            report.fail(f"unweighted game {format_game(v)} is unexpectedly proper")
    return report
