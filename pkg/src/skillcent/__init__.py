"""Skill-game representations of network centrality.

Players hold skills, tasks need multisets of skills, and a coalition earns
the profits of the tasks it covers.  On top of a social graph this yields
the classical semivalue centralities plus the helping measures (how much a
player gains for coalitions by bringing its neighbors along), with exact
enumeration, veto-basis and pure-skill closed forms, a fixed-parameter
dynamic program, and seeded Monte Carlo estimators.
"""

from .charfn import (CSGValue, CentralityExtension, CharacteristicFunction,
                     DummyGame, LinearCombination, VetoGame, harsanyi_dividends,
                     reconstruct_from_dividends, ENUM_MAX_PLAYERS)
from .errors import (CapacityError, ConfigurationError, ParseError,
                     SkillcentError, ValidationError)
from .exact import (DeltaStar, delta_star, equivalence_classes, exact_cen_shapley,
                    exact_hc, exact_help, exact_hsh, exact_semivalue, exact_shapley)
from .fixtures import p2_veto, star_unanimity, veto_csg, wtc911
from .formulas import (PureSkillMeasures, VetoDecomposition, pure_skill_check,
                       pure_skill_measures, veto_help, veto_hsh, veto_shapley)
from .fpt import DPTable, SubmultisetIndex, dp_counts, fpt_semivalue
from .game import IncrementalEvaluator, SkillGame, Task
from .gameio import dump_game, load_game, parse_legacy, serialize_game
from .graph import Graph, mask_members, mask_of
from .multiset import SkillMultiset
from .represent import (betweenness_csg, betweenness_direct, centrality_to_csg,
                        degree_csg, degree_direct, trivial_centrality)
from .sampling import SampleConfig, sample_measure
from .semivalues import SemivalueSpec, load_custom_semivalue
from .vectors import CentralityVector, format_grouped, grouped_ordering

__version__ = "0.1.0"

__all__ = [
    "SkillMultiset", "SkillGame", "Task", "Graph", "IncrementalEvaluator",
    "mask_of", "mask_members",
    "CharacteristicFunction", "CSGValue", "VetoGame", "DummyGame",
    "CentralityExtension", "LinearCombination", "harsanyi_dividends",
    "reconstruct_from_dividends", "ENUM_MAX_PLAYERS",
    "SemivalueSpec", "load_custom_semivalue",
    "CentralityVector", "grouped_ordering", "format_grouped",
    "exact_semivalue", "exact_shapley", "exact_cen_shapley", "exact_hsh",
    "exact_help", "exact_hc", "DeltaStar", "delta_star", "equivalence_classes",
    "VetoDecomposition", "veto_shapley", "veto_hsh", "veto_help",
    "pure_skill_check", "pure_skill_measures", "PureSkillMeasures",
    "SubmultisetIndex", "DPTable", "dp_counts", "fpt_semivalue",
    "SampleConfig", "sample_measure",
    "centrality_to_csg", "degree_csg", "betweenness_csg", "trivial_centrality",
    "degree_direct", "betweenness_direct",
    "load_game", "dump_game", "parse_legacy", "serialize_game",
    "wtc911", "p2_veto", "veto_csg", "star_unanimity",
    "SkillcentError", "ValidationError", "ParseError", "CapacityError",
    "ConfigurationError",
]
