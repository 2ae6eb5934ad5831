"""End-to-end acceptance checks, one per headline behavior of the package.

Each test below is a self-contained criterion with its own frozen expected
values and tolerances. The run prints one PASS/FAIL line per criterion in the
terminal summary (wired up in conftest), so the whole gate can be read off a
plain `pytest` invocation at a glance.
"""

import math
import random
import time
from fractions import Fraction

from maymust import (
    DungFramework,
    Label,
    Labelling,
    NoMaximallyProperError,
    NuanceTuple,
    adf_complete,
    adf_grounded,
    adf_preferred,
    decomposition_probe,
    designated_labels,
    dung_oracle_all,
    exact_semantics,
    gamma,
    generate_random,
    maximally_proper_semantics,
    ratio_tuple,
    serialize_mmaf,
)
from maymust.designation import DESIGNATION_TABLE, Condition, _scale_condition
from maymust.semantics import grounded_from, preferred_from, stable_from

from conftest import lab, labs, mk

CHAIN_ROWS = ("i o i o i", "i i u o i", "i u i o i")

# the consensus operator on the mutual pair, every total input
PAIR_GAMMA = {
    "i o": "i u",
    "o i": "u i",
    "i i": "u u",
    "o o": "i i",
    "u u": "u u",
    "i u": "u u",
    "u i": "u u",
    "o u": "u i",
    "u o": "i u",
}

ACCEPTANCE_SEED = 16
STREAM_SIZE = 500


def test_criterion_01_chain_exact_family(chain5):
    """exact family of the five-argument chain, inside one second"""
    start = time.perf_counter()
    result = exact_semantics(chain5)
    elapsed = time.perf_counter() - start
    assert result.labelling_set() == labs(chain5, *CHAIN_ROWS)
    assert elapsed < 1.0, f"took {elapsed:.3f}s"


def test_criterion_02_self_attacker(self_attack):
    """self-attacker: exact family empty, maximal family is the undecided labelling"""
    assert exact_semantics(self_attack).labellings == ()
    assert maximally_proper_semantics(self_attack).labellings == (lab(a1="u"),)


def test_criterion_03_semantics_family_goldens(chain5):
    """complete, preferred, stable, grounded goldens on the chain"""
    complete = maximally_proper_semantics(chain5)
    assert complete.labelling_set() == labs(chain5, *CHAIN_ROWS)
    assert preferred_from(complete).labelling_set() == labs(
        chain5, "i o i o i", "i i u o i"
    )
    assert stable_from(complete).labelling_set() == labs(chain5, "i o i o i")
    grounded = lab(a1="i", a2="u", a3="u", a4="o", a5="i")
    assert grounded_from(complete).labellings == (grounded,)
    assert grounded not in complete.labelling_set()


def test_criterion_04_operator_counterexample(mutual_pair):
    """consensus-operator table on the mutual pair; fixpoint and exact families disjoint"""
    for src, dst in PAIR_GAMMA.items():
        (src_l,) = labs(mutual_pair, src)
        (dst_l,) = labs(mutual_pair, dst)
        assert gamma(mutual_pair, src_l) == dst_l, f"gamma({src}) != {dst}"
    fixpoints = labs(mutual_pair, "u u")
    assert adf_complete(mutual_pair).labelling_set() == fixpoints
    assert adf_preferred(mutual_pair).labelling_set() == fixpoints
    assert frozenset(adf_grounded(mutual_pair).labellings) == fixpoints
    exact = exact_semantics(mutual_pair).labelling_set()
    assert exact == labs(mutual_pair, "i u", "u i")
    assert exact & fixpoints == frozenset()


def test_criterion_05_classical_correspondence():
    """500 seeded classical instances match the independent oracle on all four semantics"""
    rng = random.Random(ACCEPTANCE_SEED)
    start = time.perf_counter()
    for _ in range(STREAM_SIZE):
        n = rng.randint(1, 7)
        p = Fraction(rng.randint(5, 60), 100)
        f = generate_random(n, p, "dung", rng.getrandbits(32))
        oracle = dung_oracle_all(DungFramework(f.ids, frozenset(f.attack_pairs())))
        maxi = maximally_proper_semantics(f)
        assert maxi.labelling_set() == oracle["complete"]
        assert preferred_from(maxi).labelling_set() == oracle["preferred"]
        assert stable_from(maxi).labelling_set() == oracle["stable"]
        assert frozenset(grounded_from(maxi).labellings) == oracle["grounded"]
        assert exact_semantics(f).labelling_set() == oracle["complete"]
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"took {elapsed:.1f}s"


def test_criterion_06_containment_and_existence():
    """500 seeded instances: exact within maxi, equality when exact nonempty, maxi exists"""
    rng = random.Random(ACCEPTANCE_SEED)
    archived = []
    for _ in range(STREAM_SIZE):
        n = rng.randint(1, 7)
        f = generate_random(n, Fraction(3, 10), "uniform", rng.getrandbits(32))
        exact = exact_semantics(f).labelling_set()
        try:
            maxi = maximally_proper_semantics(f)
        except NoMaximallyProperError:
            archived.append(serialize_mmaf(f))
            continue
        assert maxi.count > 0
        assert exact <= maxi.labelling_set()
        if exact:
            assert exact == maxi.labelling_set()
    assert not archived, "nonempty instances without a maximal labelling:\n" + "\n".join(
        archived
    )


def test_criterion_07_engine_equivalence():
    """brute and bottom-up engines agree on the same 500, per-depth choices included"""
    rng = random.Random(ACCEPTANCE_SEED)
    for _ in range(STREAM_SIZE):
        n = rng.randint(1, 7)
        f = generate_random(n, Fraction(3, 10), "uniform", rng.getrandbits(32))
        brute = maximally_proper_semantics(f)
        probe = decomposition_probe(f)
        assert probe.result.labelling_set() == brute.labelling_set()
        assert probe.result.proper_set == brute.proper_set
        assert probe.restrictions_within_theta
        assert probe.theta_equal, serialize_mmaf(f)


_PROFILE_COUNT = {Condition.NOT: 0, Condition.MAY_S: 1, Condition.MUST: 2}


def _realize(acc: Condition, rej: Condition):
    """A concrete framework and labelling landing exactly on the given profile."""
    sats = [f"s{i}" for i in range(4)]
    f = mk(
        [("x", (1, 2, 1, 2))] + [(s, (0, 0, 1, 1)) for s in sats],
        [(s, "x") for s in sats],
    )
    labels = {"x": Label.UNDEC}
    n_out, n_in = _PROFILE_COUNT[acc], _PROFILE_COUNT[rej]
    for i, s in enumerate(sats):
        if i < n_out:
            labels[s] = Label.OUT
        elif i < n_out + n_in:
            labels[s] = Label.IN
        else:
            labels[s] = Label.UNDEC
    return f, Labelling(labels)


def test_criterion_08_designation_table_cross_check():
    """designation clauses reproduce the nine-profile table; may band subsumes its neighbours"""
    assert len(DESIGNATION_TABLE) == 9
    for (acc, rej), expected in DESIGNATION_TABLE.items():
        f, l = _realize(acc, rej)
        assert designated_labels(f, l, "x") == expected, (acc, rej)
    for c in Condition:
        assert (
            DESIGNATION_TABLE[(Condition.MAY_S, c)]
            == DESIGNATION_TABLE[(Condition.NOT, c)]
            | DESIGNATION_TABLE[(Condition.MUST, c)]
        )
        assert (
            DESIGNATION_TABLE[(c, Condition.MAY_S)]
            == DESIGNATION_TABLE[(c, Condition.NOT)]
            | DESIGNATION_TABLE[(c, Condition.MUST)]
        )


def test_criterion_09_condition_monotonicity():
    """scale conditions never step down as the attacker count grows (exhaustive)"""
    for may in range(6):
        for must in range(may, 6):
            conditions = [_scale_condition(may, must, c) for c in range(7)]
            values = [c.value for c in conditions]
            assert values == sorted(values), (may, must, conditions)


def test_criterion_10_ratio_construction():
    """degree-scaled tuples match independent exact-rational ceilings for degrees 0..10"""
    fracs = (Fraction(4, 5), Fraction(9, 10), Fraction(2, 5), Fraction(1, 2))
    for d in range(11):
        expected = NuanceTuple(
            math.ceil(fracs[0] * d),
            math.ceil(fracs[1] * d),
            max(1, math.ceil(fracs[2] * d)),
            max(1, math.ceil(fracs[3] * d)),
        )
        assert ratio_tuple(d, *fracs, rej_floor=1) == expected, d
