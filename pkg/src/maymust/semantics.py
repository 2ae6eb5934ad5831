"""Exhaustive labelling semantics: exact, pre-maximally and maximally proper.

The scan enumerates all 3^n total labellings in canonical order (lexicographic
by argument index, IN < OUT < UNDEC) through the kernel and keeps those whose
arguments all carry designated labels (exact) or designated-or-UNDEC labels
(pre-maximally proper). Maximally proper labellings are the pre-maximal ones
whose set of properly labelled arguments contains every other pre-maximal
labelling's; that reduces to attaining the union of all such sets.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from . import _kernel
from .errors import (
    InstanceTooLargeError,
    NoMaximallyProperError,
    UndefinedArgumentLabelError,
)
from .framework import Framework
from .labels import LABELS_BY_CODE, Label, Labelling, labelling_lt, labelling_meet

DEFAULT_BRUTE_BOUND = 12


def brute_bound() -> int:
    """Exhaustive-search argument bound; MAYMUST_MAX_BRUTE overrides it."""
    raw = os.environ.get("MAYMUST_MAX_BRUTE", "").strip()
    return int(raw) if raw else DEFAULT_BRUTE_BOUND


def _check_bound(f: Framework) -> None:
    bound = brute_bound()
    if f.n > bound:
        raise InstanceTooLargeError(
            f"{f.n} arguments exceed the exhaustive bound {bound} "
            f"(set MAYMUST_MAX_BRUTE to raise it)"
        )


@dataclass(frozen=True)
class SemanticsResult:
    """Labellings a semantics accepts, plus provenance.

    labellings are total over the framework and canonically ordered. For the
    maximally-proper family, proper_set is the set of arguments every member
    labels properly (shared by construction).
    """

    name: str
    engine: str
    labellings: tuple[Labelling, ...]
    proper_set: frozenset[str] | None = None

    @property
    def count(self) -> int:
        return len(self.labellings)

    def labelling_set(self) -> frozenset[Labelling]:
        return frozenset(self.labellings)


def labelling_from_codes(f: Framework, codes: bytes) -> Labelling:
    return Labelling({f.ids[i]: LABELS_BY_CODE[c] for i, c in enumerate(codes)})


def codes_from_labelling(f: Framework, l: Labelling) -> bytes:
    try:
        return bytes(l[a].code for a in f.ids)
    except KeyError as missing:
        raise UndefinedArgumentLabelError(f"{missing.args[0]!r} has no label") from None


def sort_canonical(f: Framework, labellings) -> tuple[Labelling, ...]:
    """Order total labellings canonically (argument-index lexicographic)."""
    return tuple(sorted(labellings, key=lambda l: codes_from_labelling(f, l)))


def enumerate_labellings(f: Framework) -> Iterator[Labelling]:
    """All 3^n total labellings of f, in canonical order."""
    for labs in product(LABELS_BY_CODE, repeat=f.n):
        yield Labelling(zip(f.ids, labs))


def _scan(f: Framework, require_all_proper: bool):
    _check_bound(f)
    d = f.dense()
    return _kernel.scan_proper(
        d.n, d.att_flat, d.att_start, d.acc_may, d.acc_must, d.rej_may, d.rej_must,
        require_all_proper,
    )


def exact_semantics(f: Framework) -> SemanticsResult:
    """Labellings every argument of which carries a designated label."""
    codes, _ = _scan(f, require_all_proper=True)
    labellings = tuple(labelling_from_codes(f, c) for c in codes)
    return SemanticsResult("exact", "brute", labellings)


def pre_maximally_proper(f: Framework) -> tuple[Labelling, ...]:
    """Labellings whose every argument is properly labelled or UNDEC."""
    codes, _ = _scan(f, require_all_proper=False)
    return tuple(labelling_from_codes(f, c) for c in codes)


def premax_proper_sets(f: Framework) -> tuple[tuple[Labelling, frozenset[str]], ...]:
    """Pre-maximally proper labellings paired with their properly labelled sets."""
    codes, masks = _scan(f, require_all_proper=False)
    return tuple(
        (labelling_from_codes(f, c), _mask_to_ids(f, m)) for c, m in zip(codes, masks)
    )


def _maxi_scan(f: Framework) -> tuple[list[bytes], int]:
    """Kernel-level maximally-proper computation: (label codes, shared mask)."""
    codes, masks = _scan(f, require_all_proper=False)
    union = 0
    for m in masks:
        union |= m
    best = [c for c, m in zip(codes, masks) if m == union]
    if not best and f.n > 0:
        from .mmaf import serialize_mmaf  # local import: mmaf depends on framework

        raise NoMaximallyProperError(
            "no labelling attains the union of proper sets; instance:\n"
            + serialize_mmaf(f)
        )
    return best, union


def _mask_to_ids(f: Framework, mask: int) -> frozenset[str]:
    return frozenset(f.ids[i] for i in range(f.n) if (mask >> i) & 1)


def maximally_proper_semantics(f: Framework) -> SemanticsResult:
    """Pre-maximally proper labellings with a maximal set of proper arguments.

    All members share that set; it is exposed as proper_set. Raises
    NoMaximallyProperError if a nonempty framework admits no such labelling.
    """
    best, union = _maxi_scan(f)
    labellings = tuple(labelling_from_codes(f, c) for c in best)
    return SemanticsResult("maxi-complete", "brute", labellings, _mask_to_ids(f, union))


def preferred_from(base: SemanticsResult) -> SemanticsResult:
    """Order-maximal members of a maximally-proper result."""
    members = base.labellings
    kept = tuple(
        l for l in members if not any(labelling_lt(l, other) for other in members)
    )
    return SemanticsResult("maxi-preferred", base.engine, kept, base.proper_set)


def stable_from(base: SemanticsResult) -> SemanticsResult:
    """Members of a maximally-proper result without UNDEC labels."""
    kept = tuple(
        l for l in base.labellings if Label.UNDEC not in l.values()
    )
    return SemanticsResult("maxi-stable", base.engine, kept, base.proper_set)


def grounded_from(base: SemanticsResult) -> SemanticsResult:
    """Singleton meet of a maximally-proper result (may fall outside it)."""
    meet = labelling_meet(base.labellings)
    return SemanticsResult("maxi-grounded", base.engine, (meet,), base.proper_set)


def maxi_preferred(f: Framework) -> SemanticsResult:
    return preferred_from(maximally_proper_semantics(f))


def maxi_stable(f: Framework) -> SemanticsResult:
    return stable_from(maximally_proper_semantics(f))


def maxi_grounded(f: Framework) -> SemanticsResult:
    return grounded_from(maximally_proper_semantics(f))
