"""Per-argument designation: which labels a labelling sanctions for an argument.

The acceptance scale of an argument is read against its count of OUT-labelled
attackers, the rejection scale against its count of IN-labelled attackers.
Each scale lands in exactly one of three conditions:

* MUST   - the count reached the must threshold,
* MAY_S  - the count reached may but not must (the strict "may" band),
* NOT    - the count is below may.

From the two conditions the designated label set follows:

* IN is designated iff acceptance is at least MAY_S and rejection is not MUST;
* OUT is designated iff rejection is at least MAY_S and acceptance is not MUST;
* UNDEC is designated iff both scales are MUST, either scale is MAY_S, or both
  scales are NOT.

The solve paths always evaluate these clauses directly. DESIGNATION_TABLE spells
out the same nine cases as a constant; it exists for tests and cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import UndefinedArgumentLabelError, UndefinedAttackerLabelError
from .framework import Framework, NuanceTuple
from .labels import Label, Labelling


class Condition(Enum):
    """How far one scale's thresholds are satisfied by its attacker count."""

    NOT = 0
    MAY_S = 1
    MUST = 2


@dataclass(frozen=True, slots=True)
class AttackerCounts:
    n_out: int
    n_in: int


@dataclass(frozen=True, slots=True)
class ConditionProfile:
    acceptance: Condition
    rejection: Condition


#: The nine condition combinations and their designated label sets.
#: Read-only companion of the clause logic in designated_labels; the solver
#: never consults it.
DESIGNATION_TABLE: dict[tuple[Condition, Condition], frozenset[Label]] = {
    (Condition.MUST, Condition.MUST): frozenset({Label.UNDEC}),
    (Condition.MUST, Condition.MAY_S): frozenset({Label.IN, Label.UNDEC}),
    (Condition.MUST, Condition.NOT): frozenset({Label.IN}),
    (Condition.MAY_S, Condition.MUST): frozenset({Label.OUT, Label.UNDEC}),
    (Condition.MAY_S, Condition.MAY_S): frozenset({Label.IN, Label.OUT, Label.UNDEC}),
    (Condition.MAY_S, Condition.NOT): frozenset({Label.IN, Label.UNDEC}),
    (Condition.NOT, Condition.MUST): frozenset({Label.OUT}),
    (Condition.NOT, Condition.MAY_S): frozenset({Label.OUT, Label.UNDEC}),
    (Condition.NOT, Condition.NOT): frozenset({Label.UNDEC}),
}


def attacker_counts(f: Framework, l: Labelling, arg_id: str) -> AttackerCounts:
    """Count OUT- and IN-labelled attackers of arg_id under l.

    Every attacker must be labelled; a self-attacking argument counts its own
    label. UNDEC attackers contribute to neither count.
    """
    n_out = n_in = 0
    for att in f.attackers_of(arg_id):
        try:
            lab = l[att]
        except KeyError:
            raise UndefinedAttackerLabelError(
                f"attacker {att!r} of {arg_id!r} has no label"
            ) from None
        if lab is Label.OUT:
            n_out += 1
        elif lab is Label.IN:
            n_in += 1
    return AttackerCounts(n_out, n_in)


def _scale_condition(may: int, must: int, count: int) -> Condition:
    if count >= must:
        return Condition.MUST
    if count >= may:
        return Condition.MAY_S
    return Condition.NOT


def condition_profile(f: Framework, l: Labelling, arg_id: str) -> ConditionProfile:
    """Classify both scales of arg_id against its attacker counts under l."""
    counts = attacker_counts(f, l, arg_id)
    nt: NuanceTuple = f.tuple_of(arg_id)
    return ConditionProfile(
        acceptance=_scale_condition(nt.acc_may, nt.acc_must, counts.n_out),
        rejection=_scale_condition(nt.rej_may, nt.rej_must, counts.n_in),
    )


def designated_labels(f: Framework, l: Labelling, arg_id: str) -> frozenset[Label]:
    """The labels designated for arg_id by l. Never empty."""
    profile = condition_profile(f, l, arg_id)
    acc, rej = profile.acceptance, profile.rejection
    out: set[Label] = set()
    if acc is not Condition.NOT and rej is not Condition.MUST:
        out.add(Label.IN)
    if rej is not Condition.NOT and acc is not Condition.MUST:
        out.add(Label.OUT)
    if (
        (acc is Condition.MUST and rej is Condition.MUST)
        or acc is Condition.MAY_S
        or rej is Condition.MAY_S
        or (acc is Condition.NOT and rej is Condition.NOT)
    ):
        out.add(Label.UNDEC)
    return frozenset(out)


def is_proper(f: Framework, l: Labelling, arg_id: str) -> bool:
    """Whether l's own label for arg_id is among the labels it designates."""
    try:
        own = l[arg_id]
    except KeyError:
        raise UndefinedArgumentLabelError(f"{arg_id!r} has no label") from None
    return own in designated_labels(f, l, arg_id)
