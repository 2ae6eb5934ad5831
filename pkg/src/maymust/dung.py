"""Classical argumentation frameworks: the tuple encoding and a slow oracle.

A classical framework is an attack graph without nuance tuples. Giving every
argument the tuple ((indegree, indegree), (1, 1)) embeds it into the may/must
setting so that the maximally-proper family coincides with the classical
complete/preferred/stable/grounded labelling semantics.

The oracle here exists to check that claim from the other side. It enumerates
labellings and tests the two classical biconditionals directly (IN iff every
attacker is OUT, OUT iff some attacker is IN); it deliberately shares nothing
with the designation machinery beyond the label value types.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from .errors import DuplicateArgumentError, UnknownArgumentError
from .framework import Framework, NuanceTuple
from .labels import Label, Labelling, labelling_lt, labelling_meet


@dataclass(frozen=True)
class DungFramework:
    """A plain attack graph over identified arguments."""

    arguments: tuple[str, ...]
    attacks: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        seen = set()
        for a in self.arguments:
            if a in seen:
                raise DuplicateArgumentError(f"argument {a!r} declared twice")
            seen.add(a)
        for src, dst in self.attacks:
            if src not in seen:
                raise UnknownArgumentError(f"attack source {src!r} is not declared")
            if dst not in seen:
                raise UnknownArgumentError(f"attack target {dst!r} is not declared")

    def attackers_of(self, arg: str) -> tuple[str, ...]:
        order = {a: i for i, a in enumerate(self.arguments)}
        return tuple(
            sorted((s for s, d in self.attacks if d == arg), key=order.__getitem__)
        )


def dung_to_maymust(df: DungFramework) -> Framework:
    """Encode a classical framework with ((indeg, indeg), (1, 1)) tuples."""
    indeg = {a: 0 for a in df.arguments}
    for _, dst in df.attacks:
        indeg[dst] += 1
    return Framework(
        [(a, NuanceTuple(indeg[a], indeg[a], 1, 1)) for a in df.arguments],
        sorted(df.attacks),
    )


def _complete_labellings(df: DungFramework) -> list[Labelling]:
    attackers = {a: df.attackers_of(a) for a in df.arguments}
    out = []
    for labs in product((Label.IN, Label.OUT, Label.UNDEC), repeat=len(df.arguments)):
        l = dict(zip(df.arguments, labs))
        for a in df.arguments:
            legal_in = all(l[b] is Label.OUT for b in attackers[a])
            legal_out = any(l[b] is Label.IN for b in attackers[a])
            if (l[a] is Label.IN) != legal_in or (l[a] is Label.OUT) != legal_out:
                break
        else:
            out.append(Labelling(l))
    return out


def dung_oracle(df: DungFramework, semantics: str) -> frozenset[Labelling]:
    """Classical labelling semantics by brute definition-checking.

    semantics is one of complete, preferred, stable, grounded.
    """
    complete = _complete_labellings(df)
    if semantics == "complete":
        return frozenset(complete)
    if semantics == "preferred":
        return frozenset(
            l for l in complete if not any(labelling_lt(l, other) for other in complete)
        )
    if semantics == "stable":
        preferred = [
            l for l in complete if not any(labelling_lt(l, other) for other in complete)
        ]
        return frozenset(l for l in preferred if Label.UNDEC not in l.values())
    if semantics == "grounded":
        return frozenset((labelling_meet(complete),))
    raise ValueError(f"unknown classical semantics {semantics!r}")


def dung_oracle_all(df: DungFramework) -> dict[str, frozenset[Labelling]]:
    """All four classical semantics from one enumeration pass."""
    complete = _complete_labellings(df)
    preferred = [
        l for l in complete if not any(labelling_lt(l, other) for other in complete)
    ]
    return {
        "complete": frozenset(complete),
        "preferred": frozenset(preferred),
        "stable": frozenset(l for l in preferred if Label.UNDEC not in l.values()),
        "grounded": frozenset((labelling_meet(complete),)),
    }
