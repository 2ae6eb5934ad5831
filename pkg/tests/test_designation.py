"""Designation rules: attacker counts, condition profiles, designated labels.

The cross-checks here pit the clause logic used by the solver against the
spelled-out nine-cell table, and both against small hand-worked instances.
"""

import pytest

from maymust import (
    DESIGNATION_TABLE,
    AttackerCounts,
    Condition,
    Label,
    attacker_counts,
    condition_profile,
    designated_labels,
    is_proper,
)
from maymust.designation import ConditionProfile, _scale_condition
from maymust.errors import UndefinedArgumentLabelError, UndefinedAttackerLabelError

from conftest import lab, mk

I, O, U = Label.IN, Label.OUT, Label.UNDEC


def star(k, tuple_of_center):
    """One center argument attacked by k satellites with inert tuples."""
    sats = [(f"b{i}", (0, 0, 1, 1)) for i in range(k)]
    return mk([("x", tuple_of_center)] + sats, [(f"b{i}", "x") for i in range(k)])


def test_attacker_counts_ignore_undec_and_count_self():
    f = mk(
        [("x", (0, 0, 1, 1)), ("y", (0, 0, 1, 1)), ("z", (0, 0, 1, 1))],
        [("x", "x"), ("y", "x"), ("z", "x")],
    )
    counts = attacker_counts(f, lab(x="o", y="i", z="u"), "x")
    assert counts == AttackerCounts(n_out=1, n_in=1)


def test_attacker_counts_require_labelled_attackers():
    f = mk([("x", (0, 0, 1, 1)), ("y", (0, 0, 1, 1))], [("y", "x")])
    with pytest.raises(UndefinedAttackerLabelError):
        attacker_counts(f, lab(x="i"), "x")


def test_scale_condition_thresholds():
    assert _scale_condition(1, 3, 0) is Condition.NOT
    assert _scale_condition(1, 3, 1) is Condition.MAY_S
    assert _scale_condition(1, 3, 2) is Condition.MAY_S
    assert _scale_condition(1, 3, 3) is Condition.MUST
    # degenerate scale: no strict may band
    assert _scale_condition(2, 2, 1) is Condition.NOT
    assert _scale_condition(2, 2, 2) is Condition.MUST


def test_self_attack_designations():
    f = mk([("a1", (0, 0, 1, 1))], [("a1", "a1")])
    assert designated_labels(f, lab(a1="i"), "a1") == {U}
    assert designated_labels(f, lab(a1="u"), "a1") == {I}
    assert designated_labels(f, lab(a1="o"), "a1") == {I}
    # whatever a1 carries, it is never designated: no label is ever proper
    for v in ("i", "o", "u"):
        assert not is_proper(f, lab(a1=v), "a1")


def test_chain_profile_golden(chain5):
    l = lab(a1="i", a2="o", a3="i", a4="o", a5="i")
    assert condition_profile(chain5, l, "a1") == ConditionProfile(
        Condition.MUST, Condition.NOT
    )
    assert designated_labels(chain5, l, "a1") == {I}
    # both of a3's attackers carry out here
    assert attacker_counts(chain5, l, "a3") == AttackerCounts(2, 0)
    assert designated_labels(chain5, l, "a3") == {I}
    assert all(is_proper(chain5, l, a) for a in chain5.ids)


def test_is_proper_requires_own_label():
    f = mk([("x", (0, 0, 1, 1))])
    with pytest.raises(UndefinedArgumentLabelError):
        is_proper(f, lab(), "x")


def realize(acc_cond, rej_cond):
    """A 1-argument instance plus labelling landing on the asked profile."""
    # center tuple (1, 2) on both scales; counts 0/1/2 realize NOT/MAY_S/MUST
    count = {Condition.NOT: 0, Condition.MAY_S: 1, Condition.MUST: 2}
    n_out, n_in = count[acc_cond], count[rej_cond]
    f = star(4, (1, 2, 1, 2))
    labels = {"x": U}
    sats = [a for a in f.ids if a != "x"]
    for i, a in enumerate(sats):
        labels[a] = O if i < n_out else (I if i < n_out + n_in else U)
    return f, lab(**labels)


@pytest.mark.parametrize("acc", list(Condition))
@pytest.mark.parametrize("rej", list(Condition))
def test_clauses_match_table_cell(acc, rej):
    f, l = realize(acc, rej)
    assert condition_profile(f, l, "x") == ConditionProfile(acc, rej)
    assert designated_labels(f, l, "x") == DESIGNATION_TABLE[(acc, rej)]


def test_table_is_total_and_never_empty():
    assert len(DESIGNATION_TABLE) == 9
    for cell in DESIGNATION_TABLE.values():
        assert cell


def test_may_band_cells_subsume_their_resolutions():
    # a strict-may scale designates exactly what both of its hardenings allow
    for other in Condition:
        assert (
            DESIGNATION_TABLE[(Condition.MAY_S, other)]
            == DESIGNATION_TABLE[(Condition.NOT, other)]
            | DESIGNATION_TABLE[(Condition.MUST, other)]
        )
        assert (
            DESIGNATION_TABLE[(other, Condition.MAY_S)]
            == DESIGNATION_TABLE[(other, Condition.NOT)]
            | DESIGNATION_TABLE[(other, Condition.MUST)]
        )


def test_conditions_monotone_in_counts_small():
    # unit-sized version of the exhaustive acceptance property
    for may in range(3):
        for must in range(may, 3):
            seen = [_scale_condition(may, must, c).value for c in range(4)]
            assert seen == sorted(seen)
