"""Complement search and the supercomplemented / completely factorizable /
C-separating predicates."""

import pytest

import complementa as ca
from complementa.groups import PreconditionError
from complementa.subgroups import full_subgroup


def test_complements_of_extremes(s3):
    full = full_subgroup(s3)
    res = ca.complements(s3, full)
    assert [t.order for t in res.complements] == [1]
    res2 = ca.complements(s3, ca.trivial_subgroup(s3))
    assert [t.order for t in res2.complements] == [6]


def test_complements_in_s3(s3):
    refl = ca.generated_subgroup(s3, (1,))
    res = ca.complements(s3, refl, mode="all")
    assert res.exhaustive
    assert [t.order for t in res.complements] == [3]
    assert set(res.complements[0].elements()) == {0, 2, 5}


def test_complements_first_mode(s3):
    refl = ca.generated_subgroup(s3, (1,))
    res = ca.complements(s3, refl, mode="first")
    assert len(res.complements) == 1 and not res.exhaustive


def test_cyclic4_subgroup_not_complemented():
    c4 = ca.cyclic(4)
    half = ca.generated_subgroup(c4, (2,))
    assert not ca.is_complemented(c4, half)
    assert ca.is_complemented(c4, ca.trivial_subgroup(c4))


def test_listed_complement_of_xa_in_holomorph(hol8):
    g = hol8.group
    x, a, b = (hol8.elements[k] for k in "xab")
    k = ca.generated_subgroup(g, (x, a))
    res = ca.complements(g, k, mode="all")
    assert ca.generated_subgroup(g, (b,)).members in {t.members for t in res.complements}


def test_all_index2_subgroups_complemented(hol8):
    g = hol8.group
    for sub in ca.all_subgroups(g).by_order(16):
        assert ca.is_complemented(g, sub)


def test_supercomplemented_extremes(s3):
    full = full_subgroup(s3)
    ok, wit = ca.is_supercomplemented(s3, full)
    assert ok and wit is None


def test_supercomplemented_x_in_holomorph(hol8):
    ok, wit = ca.is_supercomplemented(hol8.group, hol8.subgroups["x"])
    assert ok and wit is None


def test_supercomplemented_false_with_witness():
    c4 = ca.cyclic(4)
    ok, wit = ca.is_supercomplemented(c4, ca.trivial_subgroup(c4))
    assert not ok
    assert set(wit.elements()) == {0, 2}


def test_holomorph_overgroup_complements_lie_in_V(hol8):
    g = hol8.group
    v = hol8.subgroups["V"]
    for k in ca.overgroups(g, hol8.subgroups["x"]):
        res = ca.complements(g, k, mode="all")
        assert any(v.contains(t) for t in res.complements)


def test_completely_factorizable(s3):
    assert ca.is_completely_factorizable(ca.trivial_group())[0]
    assert ca.is_completely_factorizable(s3)[0]
    ok, wit = ca.is_completely_factorizable(ca.cyclic(4))
    assert not ok and set(wit.elements()) == {0, 2}


def test_c_separating_in_completely_factorizable(s3):
    seps = ca.c_separating_subgroups(s3)
    lat = ca.all_subgroups(s3)
    proper = [s for s in lat.subgroups if s.order < 6]
    assert [s.members for s in seps] == [s.members for s in proper]


def test_c_separating_cyclic4():
    c4 = ca.cyclic(4)
    seps = ca.c_separating_subgroups(c4)
    assert [set(s.elements()) for s in seps] == [{0, 2}]
    assert ca.is_c_separating(c4, ca.generated_subgroup(c4, (2,)))
    assert not ca.is_c_separating(c4, ca.trivial_subgroup(c4))


def test_no_c_separating_in_holomorph(hol8):
    assert not ca.has_c_separating(hol8.group)
    assert ca.c_separating_subgroups(hol8.group, max_index=2) == ()


def test_c_separating_rejects_trivial_group():
    with pytest.raises(PreconditionError):
        ca.c_separating_subgroups(ca.trivial_group())


def test_c_separating_monotone():
    c8 = ca.cyclic(8)
    seps = {s.members for s in ca.c_separating_subgroups(c8)}
    for sub in ca.all_subgroups(c8).subgroups:
        if sub.members in seps:
            for over in ca.overgroups(c8, sub):
                if over.order < 8:
                    assert over.members in seps


def test_transport_with_n_equal_k(hol8):
    g = hol8.group
    full = full_subgroup(g)
    assert ca.quotient_transport_check(g, hol8.subgroups["x"], full, full)


def test_transport_with_trivial_n_reduces_to_plain_check(hol8):
    g = hol8.group
    x = hol8.subgroups["x"]
    k = ca.generated_subgroup(g, (hol8.elements["x"], hol8.elements["a"]))
    triv = ca.trivial_subgroup(g)
    assert ca.quotient_transport_check(g, x, k, triv) == \
        ca.is_supercomplemented(ca.subgroup_as_group(g, k)[0],
                                _relabel(g, k, x))[0]


def _relabel(g, k, sub):
    k_grp, to_local, _ = ca.subgroup_as_group(g, k)
    bits = 0
    for e in sub.elements():
        bits |= 1 << to_local[e]
    return ca.Subgroup(k_grp, bits)


def test_transport_quotient_by_derived(hol8):
    g = hol8.group
    x = hol8.elements["x"]
    x2 = ca.generated_subgroup(g, (g.mult[x][x],))
    assert ca.quotient_transport_check(g, hol8.subgroups["x"], full_subgroup(g), x2)


def test_transport_preconditions(hol8, s3):
    g = hol8.group
    with pytest.raises(PreconditionError):
        # K does not contain H
        ca.quotient_transport_check(g, hol8.subgroups["x"], hol8.subgroups["a"],
                                    ca.trivial_subgroup(g))
    refl = ca.generated_subgroup(s3, (1,))
    rot = ca.generated_subgroup(s3, (2,))
    with pytest.raises(PreconditionError):
        # N not normal in K
        ca.quotient_transport_check(s3, ca.trivial_subgroup(s3),
                                    full_subgroup(s3), refl)
    c4 = ca.cyclic(4)
    with pytest.raises(PreconditionError):
        # H not supercomplemented in K
        ca.quotient_transport_check(c4, ca.generated_subgroup(c4, (2,)),
                                    full_subgroup(c4), ca.trivial_subgroup(c4))


def test_uncomplemented_sets():
    c4 = ca.cyclic(4)
    bad = ca.uncomplemented_subgroups(c4)
    assert [set(s.elements()) for s in bad] == [{0, 2}]
    assert ca.uncomplemented_subgroups(ca.symmetric3().group) == ()
