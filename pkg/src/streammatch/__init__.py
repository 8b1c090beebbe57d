"""Semi-streaming maximum-matching algorithms over random-order edge
streams, with exact offline oracles, instance generators, and a benchmark
harness for measuring approximation ratios and memory usage.
"""

from .core import (
    AugPath,
    AugPathSet,
    Bipartition,
    Edge,
    Graph,
    Matching,
    apply_augmenting_paths,
    filter_edges,
    validate_matching,
)
from .exact import (
    max_matching_bipartite,
    max_matching_bruteforce,
    max_matching_general,
)
from .stream import (
    EdgeStream,
    MemoryMeter,
    Segment,
    SinglePassViolation,
    segment_of_fraction,
    shuffle,
)
from .greedy import collect_residual, greedy_matching
from .augpaths import (
    WingContext,
    both_wing_paths,
    paths_from_connector,
    select_disjoint,
    three_aug_from_wings,
)
from .augmenters import (
    AugmenterParams,
    AugmenterRun,
    CandidateSet,
    augment_three,
    augment_three_five,
)
from .pipelines import (
    BipartiteView,
    RunArtifacts,
    bipartite_pipeline,
    general_pipeline,
)
from .generators import (
    gen_konrad_hard,
    gen_planted_bipartite,
    gen_random_general,
    load_edgelist,
    save_edgelist,
)

__version__ = "0.1.0"

__all__ = [
    "AugPath",
    "AugPathSet",
    "AugmenterParams",
    "AugmenterRun",
    "Bipartition",
    "BipartiteView",
    "CandidateSet",
    "Edge",
    "EdgeStream",
    "Graph",
    "Matching",
    "MemoryMeter",
    "RunArtifacts",
    "Segment",
    "SinglePassViolation",
    "WingContext",
    "apply_augmenting_paths",
    "augment_three",
    "augment_three_five",
    "bipartite_pipeline",
    "both_wing_paths",
    "collect_residual",
    "filter_edges",
    "gen_konrad_hard",
    "gen_planted_bipartite",
    "gen_random_general",
    "general_pipeline",
    "greedy_matching",
    "load_edgelist",
    "max_matching_bipartite",
    "max_matching_bruteforce",
    "max_matching_general",
    "paths_from_connector",
    "save_edgelist",
    "segment_of_fraction",
    "select_disjoint",
    "shuffle",
    "three_aug_from_wings",
    "validate_matching",
]
