from __future__ import annotations

import pytest

from cosetcx.errors import NotSurjective, TrivialGroup
from cosetcx.families import (
    SubgroupFamily,
    common_complement,
    cosets,
    cosets_of_family,
    family_all_proper,
    family_normal_proper,
    frattini,
    is_cofinal_pair,
    maximal_subfamily,
    maximal_subgroups,
    preimage_family,
)
from cosetcx.groups import (
    GroupHom,
    all_subgroups,
    build_group,
    coset_action_kernel,
    is_normal,
    normal_subgroups,
    product_is_group_complement,
    quotient,
    subgroup_generated,
    trivial_subgroup,
    whole_group,
)

from conftest import CORPUS, SMALL, element, group


def test_trivial_group_families_empty():
    G = build_group("cyclic:1")
    assert len(family_all_proper(G)) == 0
    assert len(family_normal_proper(G)) == 0


def test_klein_all_proper(klein):
    F = family_all_proper(klein)
    assert [len(H) for H in F] == [1, 2, 2, 2]
    assert F.kind == "all-proper" and F.intersection_closed


def test_s3_normal_proper(S3):
    F = family_normal_proper(S3)
    assert [len(H) for H in F] == [1, 3]


def test_family_rejects_whole_group(S3):
    with pytest.raises(ValueError):
        SubgroupFamily(S3, (whole_group(S3),))


def test_family_checks_intersection_flag(klein):
    a = subgroup_generated(klein, {1})
    b = subgroup_generated(klein, {2})
    with pytest.raises(ValueError):
        SubgroupFamily(klein, (a, b), "custom", intersection_closed=True)


def test_maximal_of_s3(S3):
    M = maximal_subfamily(family_all_proper(S3))
    assert sorted(len(H) for H in M) == [2, 2, 2, 3]
    assert M.kind == "maximal-of"


def test_maximal_of_z4():
    M = maximal_subfamily(family_all_proper(build_group("cyclic:4")))
    assert [H.members for H in M] == [(0, 2)]


def test_maximal_of_empty_family():
    G = build_group("cyclic:1")
    assert len(maximal_subfamily(family_all_proper(G))) == 0


def test_frattini_q8():
    G = group("Q8")
    phi = frattini(G)
    assert len(phi) == 2 and all(G.mul(z, g) == G.mul(g, z) for z in phi.members for g in range(8))


def test_frattini_s3(S3):
    assert frattini(S3).is_trivial


def test_frattini_z4():
    assert frattini(build_group("cyclic:4")).members == (0, 2)


def test_frattini_of_trivial_group():
    with pytest.raises(TrivialGroup):
        frattini(build_group("cyclic:1"))


@pytest.mark.parametrize("name", list(CORPUS))
def test_frattini_properties(name):
    G = group(name)
    phi = frattini(G)
    assert is_normal(G, phi)
    assert all(phi.issubset(M) for M in maximal_subgroups(G))
    assert coset_action_kernel(G, phi) == phi


def test_cosets_z2():
    assert len(cosets_of_family(family_all_proper(build_group("cyclic:2")))) == 2


def test_cosets_klein(klein):
    assert len(cosets_of_family(family_all_proper(klein))) == 10


def test_cosets_z6_normal():
    assert len(cosets_of_family(family_normal_proper(build_group("cyclic:6")))) == 11


def test_coset_invariants(S3):
    for H in all_subgroups(S3):
        cs = cosets(H)
        assert len(cs) * len(H) == S3.order
        for c in cs:
            assert c.rep == c.members[0]
            assert set(c.members) == {S3.mul(c.rep, h) for h in H.members}
        assert [c.rep for c in cs] == sorted(c.rep for c in cs)


def test_cofinal_with_maximal():
    for name in SMALL:
        F = family_all_proper(group(name))
        assert is_cofinal_pair(F, maximal_subfamily(F))


def test_cofinal_normal_s3(S3):
    F = family_normal_proper(S3)
    A3 = SubgroupFamily(S3, (normal_subgroups(S3)[1],))
    assert is_cofinal_pair(F, A3)


def test_not_cofinal(S3):
    triv = SubgroupFamily(S3, (trivial_subgroup(S3),))
    A3 = SubgroupFamily(S3, (normal_subgroups(S3)[1],))
    assert not is_cofinal_pair(triv, A3)


def test_common_complement_s3(S3):
    A3 = normal_subgroups(S3)[1]
    W = common_complement(S3, [A3], family_all_proper(S3))
    assert W is not None and len(W) == 2


def test_common_complement_z4_absent():
    G = build_group("cyclic:4")
    N = subgroup_generated(G, {2})
    assert common_complement(G, [N], family_all_proper(G)) is None


def test_trivial_target_has_no_complement():
    for name in SMALL:
        G = group(name)
        assert common_complement(G, [trivial_subgroup(G)], family_all_proper(G)) is None


def test_common_complement_of_several_targets(klein):
    a = subgroup_generated(klein, {1})
    b = subgroup_generated(klein, {2})
    # the intersection is trivial, so nothing proper complements it
    assert common_complement(klein, [a, b], family_all_proper(klein)) is None
    W = common_complement(klein, [a], family_all_proper(klein))
    assert W is not None and product_is_group_complement(klein, a, W)


def test_preimage_z4_to_z2():
    G = build_group("cyclic:4")
    Q, p = quotient(G, subgroup_generated(G, {2}))
    F = SubgroupFamily(Q, (trivial_subgroup(Q),))
    pre = preimage_family(p, F)
    assert [H.members for H in pre] == [(0, 2)]
    assert pre.kind == "custom"


def test_preimage_s3_to_z2(S3):
    A3 = normal_subgroups(S3)[1]
    Q, p = quotient(S3, A3)
    pre = preimage_family(p, maximal_subfamily(family_all_proper(Q)))
    assert [H for H in pre] == [A3]
    assert A3 in maximal_subgroups(S3)


def test_preimage_identity(S3):
    p = GroupHom(S3, S3, tuple(range(6)))
    F = family_all_proper(S3)
    assert [H.members for H in preimage_family(p, F)] == [H.members for H in F]


def test_preimage_requires_surjection():
    G = build_group("cyclic:2")
    Z4 = build_group("cyclic:4")
    p = GroupHom(G, Z4, (0, 2))
    with pytest.raises(NotSurjective):
        preimage_family(p, family_all_proper(Z4))


@pytest.mark.parametrize("name", SMALL + ["S4", "D6"])
def test_preimage_of_maximal_is_maximal(name):
    G = group(name)
    maximal = set(maximal_subgroups(G))
    for N in normal_subgroups(G):
        if not N.is_proper:
            continue
        Q, p = quotient(G, N)
        for M in maximal_subgroups(Q):
            assert p.preimage(M) in maximal


@pytest.mark.parametrize("name", list(CORPUS))
def test_standard_families_intersection_closed(name):
    G = group(name)
    assert family_all_proper(G).intersection_closed
    assert family_normal_proper(G).intersection_closed


@pytest.mark.parametrize("name,p", [("Z2", 2), ("Z4", 2), ("Klein", 2), ("D4", 2), ("Q8", 2), ("Z8", 2),
                                    ("Z2xZ4", 2), ("Z2^3", 2), ("Z3", 3), ("Z3xZ3", 3), ("Z5", 5)])
def test_p_group_maximals_have_index_p(name, p):
    G = group(name)
    assert all(M.index == p for M in maximal_subgroups(G))
