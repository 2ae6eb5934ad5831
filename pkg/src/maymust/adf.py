"""Consensus-operator semantics: complete, preferred and grounded fixpoints.

A total labelling's two-valued completions are all ways of hardening its UNDEC
positions to IN or OUT. The operator resolves an argument to IN (resp. OUT)
exactly when every completion designates only that label for it, and to UNDEC
otherwise. Complete labellings are the operator's fixpoints, found by
exhaustive scan; preferred ones are the order-maximal fixpoints; grounded is
the least fixpoint, obtained by iterating from the all-UNDEC labelling and
cross-validated against the scan, since the operator has no monotonicity
guarantee to lean on.
"""

from __future__ import annotations

from itertools import product

from . import _kernel
from .errors import NonConvergentError, UndefinedArgumentLabelError
from .framework import Framework
from .labels import Label, Labelling, labelling_leq, labelling_lt
from .semantics import (
    SemanticsResult,
    _check_bound,
    codes_from_labelling,
    labelling_from_codes,
)


def two_val(f: Framework, l: Labelling) -> frozenset[Labelling]:
    """All two-valued completions of a total labelling.

    Exactly the order-maximal labellings above l: IN and OUT positions are
    pinned, each UNDEC position splits both ways, giving 2^(#UNDEC) members.
    """
    codes = codes_from_labelling(f, l)
    undec = [i for i, c in enumerate(codes) if c == Label.UNDEC.code]
    out = []
    for bits in product((Label.IN.code, Label.OUT.code), repeat=len(undec)):
        hardened = bytearray(codes)
        for pos, bit in zip(undec, bits):
            hardened[pos] = bit
        out.append(labelling_from_codes(f, bytes(hardened)))
    return frozenset(out)


def gamma(f: Framework, l: Labelling) -> Labelling:
    """One application of the consensus operator to a total labelling."""
    if l.domain != frozenset(f.ids):
        raise UndefinedArgumentLabelError("the operator applies to total labellings only")
    d = f.dense()
    out = _kernel.gamma_step(
        d.n, d.att_flat, d.att_start, d.acc_may, d.acc_must, d.rej_may, d.rej_must,
        codes_from_labelling(f, l),
    )
    return labelling_from_codes(f, out)


def _fixpoint_codes(f: Framework) -> list[bytes]:
    _check_bound(f)
    d = f.dense()
    fixed = []
    for labs in product((0, 1, 2), repeat=f.n):
        codes = bytes(labs)
        image = _kernel.gamma_step(
            d.n, d.att_flat, d.att_start, d.acc_may, d.acc_must, d.rej_may, d.rej_must,
            codes,
        )
        if image == codes:
            fixed.append(codes)
    return fixed


def adf_complete(f: Framework) -> SemanticsResult:
    """All fixpoints of the consensus operator, by exhaustive scan."""
    labellings = tuple(labelling_from_codes(f, c) for c in _fixpoint_codes(f))
    return SemanticsResult("adf-complete", "brute", labellings)


def adf_preferred(f: Framework) -> SemanticsResult:
    """Order-maximal fixpoints."""
    base = adf_complete(f)
    kept = tuple(
        l
        for l in base.labellings
        if not any(labelling_lt(l, other) for other in base.labellings)
    )
    return SemanticsResult("adf-preferred", "brute", kept)


def adf_grounded(f: Framework) -> SemanticsResult:
    """Least fixpoint, by iteration from all-UNDEC plus a least-ness audit.

    Raises NonConvergentError when iteration revisits a labelling without
    settling, exceeds the 3^n state budget, or converges to a fixpoint that is
    not below every scanned fixpoint. All three symptoms mean the operator
    acted non-monotonically on this instance, so no least fixpoint claim can
    be made by iteration.
    """
    current = Labelling({a: Label.UNDEC for a in f.ids})
    seen = {current}
    budget = 3**f.n
    for _ in range(budget + 1):
        image = gamma(f, current)
        if image == current:
            break
        if image in seen:
            raise NonConvergentError("iteration entered a cycle without a fixpoint")
        seen.add(image)
        current = image
    else:
        raise NonConvergentError("iteration exhausted its state budget")

    for other in adf_complete(f).labellings:
        if not labelling_leq(current, other):
            raise NonConvergentError(
                "iteration converged, but not to the least fixpoint"
            )
    return SemanticsResult("adf-grounded", "brute", (current,))
