import pytest

from lowgarside.cones import cone_membership
from lowgarside.coxeter import catalog
from lowgarside.low import (
    EscapedLow,
    NotApplicable,
    enumerate_low,
    extremal_elements,
    extremal_elements_bruteforce,
    is_low,
    large_type_extremal_count,
    smallest_family,
    type_oracle,
    verify_family,
)
from lowgarside.roots import CapExceeded
from lowgarside.weak_order import CoxeterGroup

from conftest import build

RANK3 = [("A", 2), ("A", 3), ("B", 3), ("H", 3), ("affineA", 2), ("affineC", 2), ("large", 3)]
ALL = RANK3 + [("affineA", 3), ("affineB", 3), ("affineC", 3), ("large", 4)]


def test_is_low_examples():
    W, low, _ = build("affineC", 2)
    assert is_low(W, W.identity, low.table)
    assert is_low(W, W.element([0, 2, 1]), low.table)
    T, lowT, _ = build("affineA", 2)
    assert not is_low(T, T.element([0, 1, 2]), lowT.table)


@pytest.mark.parametrize("args,size", [(("A", 2), 6), (("affineC", 2), 25), (("affineA", 2), 16), (("H", 3), 120)])
def test_low_counts(args, size):
    assert len(build(*args)[1]) == size


def test_low_cap():
    W = CoxeterGroup(catalog("affineA", 2))
    with pytest.raises(CapExceeded):
        enumerate_low(W, cap=10)


@pytest.mark.parametrize("args,size", [(("affineA", 2), 16), (("affineC", 2), 24), (("A", 3), 24)])
def test_family_sizes(args, size):
    assert len(build(*args)[2]) == size


def test_affine_c2_gap():
    W, low, fam = build("affineC", 2)
    assert set(low) - set(fam) == {W.element([0, 2, 1])}


def test_affine_a2_extremals():
    W, _, fam = build("affineA", 2)
    expected = {W.element(w) for w in ([0, 1, 2, 1], [1, 2, 0, 2], [2, 0, 1, 0])}
    assert set(fam.extremals) == expected
    suffixes = set()
    for e in expected:
        suffixes |= W.suffixes(e)
    assert suffixes == set(fam)
    assert W.element([0, 1, 2]) not in fam and W.element([0, 2, 1]) not in fam


@pytest.mark.parametrize("args,count", [(("affineC", 2), 3), (("affineA", 3), 10), (("A", 3), 1)])
def test_extremal_counts(args, count):
    assert len(build(*args)[2].extremals) == count


@pytest.mark.parametrize("args", ALL)
def test_extremals_match_bruteforce(args):
    W, _, fam = build(*args)
    assert extremal_elements(fam) == extremal_elements_bruteforce(W, fam)


def test_extremals_need_family():
    W, low, _ = build("A", 2)
    with pytest.raises(TypeError):
        extremal_elements(low.elements)


@pytest.mark.parametrize("args", ALL)
def test_family_verifies_and_sits_in_low(args):
    _, low, fam = build(*args)
    rep = verify_family(fam, low)
    assert rep.ok, rep.lines()
    assert set(fam) <= set(low)


def test_verify_mutation():
    W, low, fam = build("affineA", 2)
    victim = W.element([0, 1, 0])
    mutated = [w for w in fam if w != victim]
    rep = verify_family(mutated, low)
    assert not rep.ok
    assert rep.suffix_violations or rep.join_violations


def test_verify_seed_only_misses_join():
    W, low, _ = build("affineA", 2)
    rep = verify_family([W.identity, *W.generators], low)
    assert rep.suffix_violations == [] and rep.missing_generators == []
    assert (W.generators[0], W.generators[1], W.element([0, 1, 0])) in rep.join_violations


def test_verify_bad_provenance():
    W, low, fam = build("affineA", 2)
    x = W.element([0, 1, 0])
    bogus = dict(fam.provenance)
    bogus[x] = ("suffix", W.generators[2])

    class Fake(list):
        provenance = bogus

    rep = verify_family(Fake(fam), low)
    assert x in rep.provenance_violations


def test_escaped_low():
    W, low, _ = build("A", 2)
    broken = type(low)(W, low.table, [w for w in low.elements if len(w) != 1 or w.word != (1,)],
                       {}, [dict() for _ in range(5)])
    with pytest.raises(EscapedLow):
        smallest_family(broken)


@pytest.mark.parametrize("args", ALL)
def test_low_set_closure(args):
    _, low, _ = build(*args)
    assert low.closure_report() == []


@pytest.mark.parametrize("args", [("A", 3), ("H", 3), ("large", 3), ("large", 4), ("affineA", 2)])
def test_triple_equality(args):
    W, low, fam = build(*args)
    assert set(fam) == set(low) == type_oracle(W)


def test_right_angled_oracle():
    W, low, fam = build("rightangled", 3, edges=[[1, 2]])
    expected = {W.identity, *W.generators, W.element([0, 1])}
    assert type_oracle(W) == expected == set(low) == set(fam)


def test_type_oracle_counts():
    assert len(type_oracle(build("affineA", 2)[0])) == 16
    assert large_type_extremal_count(4) == 12
    assert len(build("large", 4)[2].extremals) == 12


@pytest.mark.parametrize("args", [("large", 3), ("large", 4), ("affineA", 2)])
def test_large_type_extremal_lengths(args):
    W, _, fam = build(*args)
    assert all(len(e) == 4 for e in fam.extremals)


def test_type_oracle_not_applicable():
    with pytest.raises(NotApplicable):
        type_oracle(build("affineC", 2)[0])


@pytest.mark.parametrize("args", RANK3)
def test_joins_are_cones(args):
    W, _, fam = build(*args)
    R = W.roots
    assert fam.joins
    checked = set()
    for u, v, z in fam.joins:
        gens_ids = u.inversions | v.inversions
        if (gens_ids, z) in checked:
            continue
        checked.add((gens_ids, z))
        gens = [R.roots[r] for r in sorted(gens_ids)]
        for r in range(len(R.roots)):
            assert cone_membership(R.roots[r], gens) == (r in z.inversions), (u, v, z, r)
