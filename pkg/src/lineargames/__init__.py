"""Linear simple games and weighted voting systems, with exact arithmetic.

The package analyzes monotone voting games that are linear (voters totally
ordered by desirability): classification, duality, hierarchies, posets of
games, the realization polytope of a weighted game, and consistency of
saturated chains.  Every feasibility question is decided by exact rational
linear programming — there is no floating point anywhere.
"""

from .coalitions import (
    Coalition,
    CoalitionError,
    CoalitionPoset,
    build_m_poset,
    format_coalition,
    parse_coalition,
    rank_generating_coefficients,
)
from .exactlp import LinearSystem, LPError, LPResult, solve, strictly_feasible
from .games import (
    GameError,
    Hierarchy,
    LinearGame,
    consensus_game,
    format_game,
    game_from_json,
    game_from_winning_bitmap,
    game_to_json,
    hierarchy,
    j_covered,
    j_covers,
    make_game,
    parse_game,
    weakest_voter_game,
)
from .geometry import (
    BOTTOM,
    DUMMY_FACE,
    TOP,
    VERTICAL,
    GenericityError,
    HalfSpace,
    PolytopeReport,
    classify_facets,
    dual_reflection_check,
    facets_containing_point,
    footprint_hierarchy,
    interior_point,
    quota_intervals,
    symmetric_games_above_corner,
    vertical_chain,
)
from .posets import (
    ChainReport,
    GamePoset,
    PosetError,
    build_poset,
    chain_consistency,
    enumerate_maximal_chains,
    one_generator_proper_count,
    one_generator_proper_list,
    probe_induced_conjecture,
    symmetric_game_counts,
    symmetric_games,
    weighted_covered,
    weighted_covers,
)
from .weightedness import (
    Realization,
    TradeCertificate,
    check_certificate,
    find_trade_failure,
    footprint_weighted_cover,
    footprint_weighted_covered,
    format_realization,
    is_weighted,
    normalized_realization,
    parse_realization,
    verify_realization,
)

__version__ = "1.0.0"

__all__ = [
    "Coalition",
    "CoalitionError",
    "CoalitionPoset",
    "build_m_poset",
    "format_coalition",
    "parse_coalition",
    "rank_generating_coefficients",
    "LinearSystem",
    "LPError",
    "LPResult",
    "solve",
    "strictly_feasible",
    "GameError",
    "Hierarchy",
    "LinearGame",
    "consensus_game",
    "format_game",
    "game_from_json",
    "game_from_winning_bitmap",
    "game_to_json",
    "hierarchy",
    "j_covered",
    "j_covers",
    "make_game",
    "parse_game",
    "weakest_voter_game",
    "GenericityError",
    "HalfSpace",
    "TOP",
    "BOTTOM",
    "VERTICAL",
    "DUMMY_FACE",
    "PolytopeReport",
    "classify_facets",
    "dual_reflection_check",
    "facets_containing_point",
    "footprint_hierarchy",
    "interior_point",
    "quota_intervals",
    "symmetric_games_above_corner",
    "vertical_chain",
    "ChainReport",
    "GamePoset",
    "PosetError",
    "build_poset",
    "chain_consistency",
    "enumerate_maximal_chains",
    "one_generator_proper_count",
    "one_generator_proper_list",
    "probe_induced_conjecture",
    "symmetric_game_counts",
    "symmetric_games",
    "weighted_covered",
    "weighted_covers",
    "Realization",
    "TradeCertificate",
    "check_certificate",
    "find_trade_failure",
    "footprint_weighted_cover",
    "footprint_weighted_covered",
    "format_realization",
    "is_weighted",
    "normalized_realization",
    "parse_realization",
    "verify_realization",
]
