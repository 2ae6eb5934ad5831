"""Attack frameworks whose arguments carry may/must acceptance and rejection scales.

Each argument owns a nuance tuple ((acc_may, acc_must), (rej_may, rej_must)).
The acceptance scale is read against the number of OUT-labelled attackers, the
rejection scale against the number of IN-labelled attackers; "may" thresholds
never exceed their "must" counterparts.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    DuplicateArgumentError,
    FractionOrderError,
    MayExceedsMustError,
    UnknownArgumentError,
)


@dataclass(frozen=True, slots=True)
class NuanceTuple:
    """Per-argument thresholds: ((acc_may, acc_must), (rej_may, rej_must))."""

    acc_may: int
    acc_must: int
    rej_may: int
    rej_must: int

    def __post_init__(self):
        for name in ("acc_may", "acc_must", "rej_may", "rej_must"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise MayExceedsMustError(f"{name} must be a natural number, got {value!r}")
        if self.acc_may > self.acc_must:
            raise MayExceedsMustError(
                f"acceptance scale out of order: may={self.acc_may} > must={self.acc_must}"
            )
        if self.rej_may > self.rej_must:
            raise MayExceedsMustError(
                f"rejection scale out of order: may={self.rej_may} > must={self.rej_must}"
            )

    @property
    def acceptance(self) -> tuple[int, int]:
        return (self.acc_may, self.acc_must)

    @property
    def rejection(self) -> tuple[int, int]:
        return (self.rej_may, self.rej_must)

    def __repr__(self) -> str:
        return f"(({self.acc_may},{self.acc_must}),({self.rej_may},{self.rej_must}))"


class DenseForm(NamedTuple):
    """Flat integer view of a framework, shaped for the enumeration kernel."""

    n: int
    att_flat: array  # attacker indices of all arguments, concatenated
    att_start: array  # n+1 offsets into att_flat
    acc_may: array
    acc_must: array
    rej_may: array
    rej_must: array


class Framework:
    """An immutable attack graph over identified arguments with nuance tuples.

    Arguments keep their declaration order and are addressed by identifier at
    the API surface; internally everything runs on dense indices 0..n-1 in that
    order. Attacks are a set (duplicates collapse); self-attacks are allowed.
    """

    __slots__ = ("ids", "index", "tuples", "attacks", "attackers", "_dense")

    def __init__(
        self,
        arguments: Sequence[tuple[str, NuanceTuple]],
        attacks: Iterable[tuple[str, str]] = (),
    ):
        ids = []
        tuples = []
        index: dict[str, int] = {}
        for arg_id, nt in arguments:
            if arg_id in index:
                raise DuplicateArgumentError(f"argument {arg_id!r} declared twice")
            if not isinstance(nt, NuanceTuple):
                raise TypeError(f"argument {arg_id!r} needs a NuanceTuple, got {nt!r}")
            index[arg_id] = len(ids)
            ids.append(arg_id)
            tuples.append(nt)

        pairs = set()
        for src, dst in attacks:
            if src not in index:
                raise UnknownArgumentError(f"attack source {src!r} is not a declared argument")
            if dst not in index:
                raise UnknownArgumentError(f"attack target {dst!r} is not a declared argument")
            pairs.add((index[src], index[dst]))

        attackers: list[list[int]] = [[] for _ in ids]
        for src_i, dst_i in pairs:
            attackers[dst_i].append(src_i)

        self.ids: tuple[str, ...] = tuple(ids)
        self.index: dict[str, int] = index
        self.tuples: tuple[NuanceTuple, ...] = tuple(tuples)
        self.attacks: tuple[tuple[int, int], ...] = tuple(sorted(pairs))
        self.attackers: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in attackers)
        self._dense: DenseForm | None = None

    @property
    def n(self) -> int:
        return len(self.ids)

    def tuple_of(self, arg_id: str) -> NuanceTuple:
        return self.tuples[self.index[arg_id]]

    def attackers_of(self, arg_id: str) -> tuple[str, ...]:
        return tuple(self.ids[i] for i in self.attackers[self.index[arg_id]])

    def indegree(self, arg_id: str) -> int:
        return len(self.attackers[self.index[arg_id]])

    def attack_pairs(self) -> tuple[tuple[str, str], ...]:
        """Attacks as identifier pairs, in canonical (index-sorted) order."""
        return tuple((self.ids[s], self.ids[d]) for s, d in self.attacks)

    def dense(self) -> DenseForm:
        if self._dense is None:
            flat: list[int] = []
            start = [0]
            for att in self.attackers:
                flat.extend(att)
                start.append(len(flat))
            self._dense = DenseForm(
                self.n,
                array("i", flat),
                array("i", start),
                array("i", (t.acc_may for t in self.tuples)),
                array("i", (t.acc_must for t in self.tuples)),
                array("i", (t.rej_may for t in self.tuples)),
                array("i", (t.rej_must for t in self.tuples)),
            )
        return self._dense

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Framework):
            return (
                self.ids == other.ids
                and self.tuples == other.tuples
                and self.attacks == other.attacks
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ids, self.tuples, self.attacks))

    def __repr__(self) -> str:
        return f"Framework(n={self.n}, attacks={len(self.attacks)})"


def build_framework(
    arguments: Sequence[tuple[str, NuanceTuple]],
    attacks: Iterable[tuple[str, str]] = (),
) -> Framework:
    """Validating constructor; see Framework for the accepted shape."""
    return Framework(arguments, attacks)


def _as_fraction(value, name: str) -> Fraction:
    if isinstance(value, float):
        raise TypeError(
            f"{name} must be exact (Fraction, int, or a numeric string); "
            f"binary floats round the thresholds"
        )
    return Fraction(value)


def ratio_tuple(
    in_degree: int,
    acc_may: Fraction | int | str,
    acc_must: Fraction | int | str,
    rej_may: Fraction | int | str,
    rej_must: Fraction | int | str,
    rej_floor: int = 1,
) -> NuanceTuple:
    """Scale four fractions by an argument's in-degree into a nuance tuple.

    Acceptance entries are ceilings of fraction * in_degree; rejection entries
    are the same but never drop below rej_floor, so an argument keeps a finite
    rejection threshold even when unattacked. All arithmetic is exact.
    """
    if in_degree < 0:
        raise ValueError(f"in_degree must be >= 0, got {in_degree}")
    if rej_floor < 0:
        raise ValueError(f"rej_floor must be >= 0, got {rej_floor}")
    am = _as_fraction(acc_may, "acc_may")
    aM = _as_fraction(acc_must, "acc_must")
    rm = _as_fraction(rej_may, "rej_may")
    rM = _as_fraction(rej_must, "rej_must")
    if am > aM:
        raise FractionOrderError(f"acceptance fractions out of order: {am} > {aM}")
    if rm > rM:
        raise FractionOrderError(f"rejection fractions out of order: {rm} > {rM}")
    return NuanceTuple(
        ceil(am * in_degree),
        ceil(aM * in_degree),
        max(rej_floor, ceil(rm * in_degree)),
        max(rej_floor, ceil(rM * in_degree)),
    )
