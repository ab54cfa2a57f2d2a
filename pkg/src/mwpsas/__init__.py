"""Minimum-weight partitioning of a set with associated subsets.

Partition N into ``machines`` non-empty blocks so that the largest block
cost is minimal, where a block pays for its own elements and once for each
distinct M-element associated with them.
"""
from .approx import (
    STRATEGIES,
    BoundReport,
    InitialPartition,
    approximate_partition,
    compute_D,
    deviation_bound,
    lower_bound,
    strategy_group_m1,
    strategy_singletons,
    strategy_whole,
)
from .errors import *  # noqa: F401,F403
from .exact import Decision, ExactResult, brute_force_3partition, brute_force_clique, decide, exact_solve
from .generate import generate_instance
from .model import (
    Instance,
    Partition,
    block_term,
    check_partition,
    evaluate_objective,
    is_m1_instance,
    is_n1_instance,
    make_instance,
    validate_instance,
)
from .reductions import (
    DecisionInstance,
    Graph,
    Part3Instance,
    reduce_clique,
    reduce_part3_m1,
    reduce_part3_n1,
    validate_part3,
)
from .sched import MachineJobSet, lpt_partition, to_parallel_machines

__version__ = "0.1.0"
