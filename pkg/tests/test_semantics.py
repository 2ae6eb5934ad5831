from fractions import Fraction

import pytest

from maymust import (
    Framework,
    InstanceTooLargeError,
    Label,
    Labelling,
    NoMaximallyProperError,
    brute_bound,
    enumerate_labellings,
    exact_semantics,
    generate_random,
    is_proper,
    labelling_leq,
    maxi_grounded,
    maxi_preferred,
    maxi_stable,
    maximally_proper_semantics,
    pre_maximally_proper,
)
from maymust.semantics import (
    codes_from_labelling,
    labelling_from_codes,
    premax_proper_sets,
    sort_canonical,
)

from conftest import lab, labs, mk

CHAIN_EXACT = (
    "i o i o i",
    "i i u o i",
    "i u i o i",
)


def test_chain_exact_golden(chain5):
    result = exact_semantics(chain5)
    assert result.labelling_set() == labs(chain5, *CHAIN_EXACT)
    assert result.count == 3
    assert result.name == "exact"
    assert result.engine == "brute"


def test_chain_maxi_equals_exact(chain5):
    maxi = maximally_proper_semantics(chain5)
    assert maxi.labelling_set() == labs(chain5, *CHAIN_EXACT)
    assert maxi.proper_set == frozenset(chain5.ids)


def test_chain_preferred_drops_dominated_member(chain5):
    # [i u i o i] hardens to [i o i o i]; the other two are incomparable
    assert maxi_preferred(chain5).labelling_set() == labs(
        chain5, "i o i o i", "i i u o i"
    )


def test_chain_stable_golden(chain5):
    assert maxi_stable(chain5).labelling_set() == labs(chain5, "i o i o i")


def test_chain_grounded_lies_outside_the_family(chain5):
    grounded = maxi_grounded(chain5)
    meet = lab(a1="i", a2="u", a3="u", a4="o", a5="i")
    assert grounded.labellings == (meet,)
    assert meet not in maximally_proper_semantics(chain5).labelling_set()


def test_self_attack_semantics(self_attack):
    assert exact_semantics(self_attack).labellings == ()
    maxi = maximally_proper_semantics(self_attack)
    assert maxi.labellings == (lab(a1="u"),)
    assert maxi.proper_set == frozenset()
    assert pre_maximally_proper(self_attack) == (lab(a1="u"),)


def test_enumeration_is_canonically_ordered(chain5):
    all_labellings = list(enumerate_labellings(chain5))
    assert len(all_labellings) == 3**5
    codes = [codes_from_labelling(chain5, l) for l in all_labellings]
    assert codes == sorted(codes)
    assert {all_labellings[0]} == labs(chain5, "i i i i i")
    assert {all_labellings[-1]} == labs(chain5, "u u u u u")


def test_code_round_trip(chain5):
    for l in (lab(a1="i", a2="o", a3="u", a4="i", a5="o"),):
        assert labelling_from_codes(chain5, codes_from_labelling(chain5, l)) == l


def test_sort_canonical_matches_enumeration_order(chain5):
    rows = labs(chain5, "u u u u u", "i o i o i", "i i u o i")
    ordered = sort_canonical(chain5, rows)
    assert ordered == tuple(l for l in enumerate_labellings(chain5) if l in rows)


def test_results_are_deterministic(chain5):
    assert exact_semantics(chain5).labellings == exact_semantics(chain5).labellings
    assert (
        maximally_proper_semantics(chain5).labellings
        == maximally_proper_semantics(chain5).labellings
    )


def test_empty_framework_has_the_empty_labelling():
    f = Framework([])
    assert exact_semantics(f).labellings == (Labelling(),)
    maxi = maximally_proper_semantics(f)
    assert maxi.labellings == (Labelling(),)
    assert maxi.proper_set == frozenset()


def test_brute_bound_env_override(monkeypatch):
    monkeypatch.setenv("MAYMUST_MAX_BRUTE", "3")
    assert brute_bound() == 3
    f = generate_random(4, Fraction(1, 4), "uniform", 5)
    with pytest.raises(InstanceTooLargeError):
        exact_semantics(f)
    monkeypatch.setenv("MAYMUST_MAX_BRUTE", "4")
    exact_semantics(f)  # now within bounds


def test_proper_set_agrees_with_designation_rules(chain5):
    maxi = maximally_proper_semantics(chain5)
    for l in maxi.labellings:
        proper = {a for a in chain5.ids if is_proper(chain5, l, a)}
        assert proper == maxi.proper_set


def test_premax_proper_sets_pairs_match(self_attack):
    pairs = premax_proper_sets(self_attack)
    assert pairs == ((lab(a1="u"), frozenset()),)


def test_no_maximally_proper_witness():
    """Two pre-maximal labellings can make incomparable argument sets proper.

    c is proper only when in (its self-attack then lands the rejection scale
    in the strict may band), but c:in leaves b improper under every label,
    while c:undec makes b:undec proper. Nothing attains the union {b, c}.
    """
    f = mk(
        [("b", (1, 1, 0, 1)), ("c", (0, 0, 1, 2))],
        [("b", "b"), ("c", "b"), ("c", "c")],
    )
    assert exact_semantics(f).labellings == ()
    premax = premax_proper_sets(f)
    assert {p for _, p in premax} == {frozenset({"b"}), frozenset({"c"})}
    with pytest.raises(NoMaximallyProperError) as exc:
        maximally_proper_semantics(f)
    # the message carries a replayable instance
    assert "arg b 1 1 0 1" in str(exc.value)


def test_family_invariants_on_random_instances():
    for seed in range(40):
        f = generate_random(1 + seed % 6, Fraction(2, 5), "uniform", seed)
        exact = exact_semantics(f).labelling_set()
        try:
            maxi = maximally_proper_semantics(f)
        except NoMaximallyProperError:
            assert not exact  # an exact labelling would attain the union
            continue
        maxi_set = maxi.labelling_set()
        assert exact <= maxi_set
        if exact:
            assert exact == maxi_set
        assert maxi.count > 0
        preferred = maxi_preferred(f).labelling_set()
        stable = maxi_stable(f).labelling_set()
        grounded = maxi_grounded(f).labellings[0]
        assert preferred <= maxi_set
        assert stable == {
            l for l in preferred if Label.UNDEC not in l.values()
        }
        assert all(labelling_leq(grounded, l) for l in maxi_set)
