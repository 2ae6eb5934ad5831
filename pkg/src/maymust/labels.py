"""Labels, partial labellings, and the information order on them.

A labelling maps argument identifiers to one of the three labels. Labellings
are immutable mappings; all algebra on them (the componentwise order, meets,
restriction, composition) lives here and knows nothing about frameworks.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from enum import Enum

from .errors import DomainMismatchError, EmptyMeetError, OverlappingDomainsError


class Label(Enum):
    IN = "in"
    OUT = "out"
    UNDEC = "undec"

    @property
    def code(self) -> int:
        """Dense integer code; also the canonical sort rank (IN < OUT < UNDEC)."""
        return _CODE[self]

    def __repr__(self) -> str:  # Label.IN prints as 'in' inside containers
        return self.value


_CODE = {Label.IN: 0, Label.OUT: 1, Label.UNDEC: 2}

#: Labels indexed by their dense code, in canonical order.
LABELS_BY_CODE: tuple[Label, ...] = (Label.IN, Label.OUT, Label.UNDEC)


class Labelling(Mapping):
    """An immutable partial labelling: a finite map from argument ids to labels.

    Equality and hashing disregard insertion order; iteration preserves it so
    that rendering a labelling built from a framework follows declaration order.
    """

    __slots__ = ("_map", "_hash")

    def __init__(self, assignment: Mapping[str, Label] | Iterable[tuple[str, Label]] = ()):
        m = dict(assignment)
        for arg, lab in m.items():
            if not isinstance(lab, Label):
                raise TypeError(f"label of {arg!r} must be a Label, got {lab!r}")
        self._map = m
        self._hash = hash(frozenset(m.items()))

    def __getitem__(self, arg: str) -> Label:
        return self._map[arg]

    def __iter__(self) -> Iterator[str]:
        return iter(self._map)

    def __len__(self) -> int:
        return len(self._map)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Labelling):
            return self._map == other._map
        return NotImplemented

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self._map)

    def __repr__(self) -> str:
        body = ", ".join(f"{a}:{l.value}" for a, l in self._map.items())
        return f"[{body}]"


def labelling_leq(l1: Labelling, l2: Labelling) -> bool:
    """Componentwise information order over a shared domain.

    l1 <= l2 holds when every IN of l1 stays IN in l2 and every OUT stays OUT;
    UNDEC positions of l1 are unconstrained.
    """
    if l1.domain != l2.domain:
        raise DomainMismatchError(
            f"labellings compare only over equal domains: {sorted(l1.domain)} vs {sorted(l2.domain)}"
        )
    for arg, lab in l1.items():
        if lab is not Label.UNDEC and l2[arg] is not lab:
            return False
    return True


def labelling_lt(l1: Labelling, l2: Labelling) -> bool:
    """Strict version of labelling_leq."""
    return l1 != l2 and labelling_leq(l1, l2)


def labelling_meet(labellings: Iterable[Labelling]) -> Labelling:
    """Greatest lower bound of a nonempty collection over one shared domain.

    An argument keeps IN (resp. OUT) only when every member agrees on it;
    everything else collapses to UNDEC.
    """
    group = list(labellings)
    if not group:
        raise EmptyMeetError("meet of an empty collection of labellings")
    first = group[0]
    for other in group[1:]:
        if other.domain != first.domain:
            raise DomainMismatchError("meet requires labellings over one domain")
    out = {}
    for arg in first:
        labs = {l[arg] for l in group}
        out[arg] = labs.pop() if len(labs) == 1 else Label.UNDEC
    return Labelling(out)


def restrict(l: Labelling, args: Iterable[str]) -> Labelling:
    """Restrict a labelling to the given identifiers (ignoring absent ones)."""
    keep = set(args)
    return Labelling({a: lab for a, lab in l.items() if a in keep})


def compose(l1: Labelling, l2: Labelling, *, strict: bool = False) -> Labelling:
    """Combine two labellings on the symmetric difference of their domains.

    Where exactly one of the two is defined, its value is kept; arguments in
    both domains are dropped. With strict=True a nonempty intersection raises
    instead, which is the right diagnostic when the inputs were meant to be
    disjoint fragments of one labelling.
    """
    common = l1.domain & l2.domain
    if common and strict:
        raise OverlappingDomainsError(f"domains overlap on {sorted(common)}")
    out = {a: lab for a, lab in l1.items() if a not in common}
    out.update((a, lab) for a, lab in l2.items() if a not in common)
    return Labelling(out)
