"""Argumentation frameworks with may/must acceptance and rejection scales.

Each argument carries a nuance tuple ((acc_may, acc_must), (rej_may, rej_must));
its acceptance scale is read against the number of attackers labelled OUT, its
rejection scale against the number labelled IN. On top of the per-argument
designation rules the package computes the exact and maximally-proper labelling
families (brute-force or SCC-bundle decomposition), consensus-operator
fixpoint semantics, and a classical-framework bridge, plus a file format,
generator and differential checker behind the `maymust` CLI.
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .adf import adf_complete, adf_grounded, adf_preferred, gamma, two_val
from .designation import (
    DESIGNATION_TABLE,
    AttackerCounts,
    Condition,
    ConditionProfile,
    attacker_counts,
    condition_profile,
    designated_labels,
    is_proper,
)
from .diffcheck import DiffReport, run_checks, run_fuzz
from .dung import DungFramework, dung_oracle, dung_oracle_all, dung_to_maymust
from .errors import (
    DomainMismatchError,
    DuplicateArgumentError,
    EmptyMeetError,
    FractionOrderError,
    FrozenLabelMissingError,
    InstanceTooLargeError,
    InvalidProbabilityError,
    MayExceedsMustError,
    MayMustError,
    MmafSyntaxError,
    NoMaximallyProperError,
    NonConvergentError,
    OverlappingDomainsError,
    UndefinedArgumentLabelError,
    UndefinedAttackerLabelError,
    UnknownArgumentError,
)
from .framework import Framework, NuanceTuple, build_framework, ratio_tuple
from .generate import generate_random
from .labels import (
    Label,
    Labelling,
    compose,
    labelling_leq,
    labelling_lt,
    labelling_meet,
    restrict,
)
from .mmaf import parse_mmaf, serialize_mmaf
from .scc import (
    DecompositionProbe,
    SccInfo,
    bottom_up_maxi,
    compute_sccs,
    conservative_reduction,
    decomposition_probe,
)
from .semantics import (
    SemanticsResult,
    brute_bound,
    enumerate_labellings,
    exact_semantics,
    maxi_grounded,
    maxi_preferred,
    maxi_stable,
    maximally_proper_semantics,
    pre_maximally_proper,
)
from .solver import ENGINES, SEMANTICS_NAMES, solve

__version__ = "0.1.0"

__all__ = [
    "AttackerCounts",
    "Condition",
    "ConditionProfile",
    "DESIGNATION_TABLE",
    "DecompositionProbe",
    "DiffReport",
    "DomainMismatchError",
    "DungFramework",
    "DuplicateArgumentError",
    "ENGINES",
    "EmptyMeetError",
    "FractionOrderError",
    "Framework",
    "FrozenLabelMissingError",
    "InstanceTooLargeError",
    "InvalidProbabilityError",
    "KERNEL_BACKEND",
    "Label",
    "Labelling",
    "MayExceedsMustError",
    "MayMustError",
    "MmafSyntaxError",
    "NoMaximallyProperError",
    "NonConvergentError",
    "NuanceTuple",
    "OverlappingDomainsError",
    "SEMANTICS_NAMES",
    "SccInfo",
    "SemanticsResult",
    "UndefinedArgumentLabelError",
    "UndefinedAttackerLabelError",
    "UnknownArgumentError",
    "adf_complete",
    "adf_grounded",
    "adf_preferred",
    "attacker_counts",
    "bottom_up_maxi",
    "brute_bound",
    "build_framework",
    "compose",
    "compute_sccs",
    "condition_profile",
    "conservative_reduction",
    "decomposition_probe",
    "designated_labels",
    "dung_oracle",
    "dung_oracle_all",
    "dung_to_maymust",
    "enumerate_labellings",
    "exact_semantics",
    "gamma",
    "generate_random",
    "is_proper",
    "labelling_leq",
    "labelling_lt",
    "labelling_meet",
    "maxi_grounded",
    "maxi_preferred",
    "maxi_stable",
    "maximally_proper_semantics",
    "parse_mmaf",
    "pre_maximally_proper",
    "ratio_tuple",
    "restrict",
    "run_checks",
    "run_fuzz",
    "serialize_mmaf",
    "solve",
    "two_val",
    "__version__",
]
