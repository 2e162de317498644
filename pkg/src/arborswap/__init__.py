"""Arborescence packings: feasibility, decomposition and exchange-step reconfiguration."""

from .audit import LemmaAudit
from .digraph import Arc, Digraph, contains_arc, delta_between, delta_in, indegree
from .fileio import InstanceFile, SequenceFile
from .maxflow import CutResult, max_flow_min_cut
from .multiroot import (
    HatInstance,
    check_feasible_multiroot,
    decompose_multiroot,
    rebalance_roots,
    reconfigure_multiroot,
    verify_sequence_multiroot,
)
from .packing import (
    FeasibilityVerdict,
    InfeasibleError,
    PackingInstance,
    check_feasible,
    decompose,
    verify_decomposition,
)
from .reconfig import (
    LemmaViolation,
    ReconfigSequence,
    ReconfigStep,
    StepKind,
    length_bound,
    reconfigure,
    verify_sequence,
)
from .tightset import TightSet, is_tight, minimal_tight_set

__all__ = [
    "Arc",
    "CutResult",
    "Digraph",
    "FeasibilityVerdict",
    "HatInstance",
    "InfeasibleError",
    "InstanceFile",
    "LemmaAudit",
    "LemmaViolation",
    "PackingInstance",
    "ReconfigSequence",
    "ReconfigStep",
    "SequenceFile",
    "StepKind",
    "TightSet",
    "check_feasible",
    "check_feasible_multiroot",
    "contains_arc",
    "decompose",
    "decompose_multiroot",
    "delta_between",
    "delta_in",
    "indegree",
    "is_tight",
    "length_bound",
    "max_flow_min_cut",
    "minimal_tight_set",
    "rebalance_roots",
    "reconfigure",
    "reconfigure_multiroot",
    "verify_decomposition",
    "verify_sequence",
    "verify_sequence_multiroot",
]
