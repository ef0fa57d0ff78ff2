import pytest

from twistkit.groups import (
    EnumerationBoundError,
    GroupError,
    Permutation,
    elementary_2_quotient_subgroups,
    enumerate_group,
    make_subgroup,
    squaring_class_map,
)


def perm(*images):
    return Permutation.from_images(images)


def test_permutation_basics():
    p = perm(2, 3, 1)
    q = perm(2, 1, 3)
    assert (p * q).images == (3, 2, 1)  # p(q(x))
    assert p.inverse() * p == Permutation.identity(3)
    assert p.order() == 3
    with pytest.raises(GroupError):
        perm(1, 1, 2)


def test_s3_enumeration():
    g = enumerate_group([perm(2, 1, 3), perm(2, 3, 1)])
    assert g.order == 6
    assert [c.size for c in g.classes] == [1, 3, 2]
    assert g.elements[0] == Permutation.identity(3)
    assert g.exponent == 6


def test_trivial_group():
    g = enumerate_group([], degree=1)
    assert g.order == 1
    assert g.num_classes == 1
    assert squaring_class_map(g) == (0,)


def test_enumeration_bound():
    with pytest.raises(EnumerationBoundError):
        enumerate_group([perm(2, 3, 4, 5, 1)], max_order=3)


def test_c4_squaring_map():
    g = enumerate_group([perm(2, 3, 4, 1)])
    assert g.order == 4
    sq = squaring_class_map(g)
    gen_class = g.class_of_element(perm(2, 3, 4, 1))
    double_class = g.class_of_element(perm(3, 4, 1, 2))
    assert sq[gen_class] == double_class
    assert sq[0] == 0


def test_power_map_consistency():
    g = enumerate_group([perm(2, 1, 3), perm(2, 3, 1)])
    assert g.power_class_map(1) == tuple(range(g.num_classes))
    # class(s^(k*m)) computed transitively matches the direct map
    for k in range(g.exponent + 1):
        direct = g.power_class_map(k)
        for ci in range(g.num_classes):
            rep = g.elements[g.classes[ci].rep]
            acc = Permutation.identity(g.degree)
            for _ in range(k):
                acc = acc * rep
            assert g.class_of_element(acc) == direct[ci]


def test_odd_order_squaring_preserves_order():
    g = enumerate_group([perm(2, 3, 1), perm(1, 2, 3)])
    sq = squaring_class_map(g)
    for ci, image in enumerate(sq):
        if g.element_orders[ci] % 2 == 1:
            assert g.element_orders[image] == g.element_orders[ci]


def test_class_equation():
    for gens in [
        [perm(2, 1, 3), perm(2, 3, 1)],
        [perm(2, 3, 4, 1)],
        [perm(2, 1, 3, 4), perm(1, 2, 4, 3)],
    ]:
        g = enumerate_group(gens)
        assert sum(c.size for c in g.classes) == g.order
        seen = sorted(m for c in g.classes for m in c.members)
        assert seen == list(range(g.order))


def test_elementary_2_quotient_c4():
    g = enumerate_group([perm(2, 3, 4, 1)])
    subs = elementary_2_quotient_subgroups(g)
    assert [h.order for h in subs] == [2, 4]
    assert all(h.is_normal for h in subs)


def test_elementary_2_quotient_klein():
    g = enumerate_group([perm(2, 1, 3, 4), perm(1, 2, 4, 3)])
    subs = elementary_2_quotient_subgroups(g)
    assert [h.order for h in subs] == [1, 2, 2, 2, 4]


def test_elementary_2_quotient_odd_group():
    g = enumerate_group([perm(2, 3, 1)])
    subs = elementary_2_quotient_subgroups(g)
    assert len(subs) == 1
    assert subs[0].order == 3


def test_squares_image_by_brute_force():
    # image classes of the squaring map = classes of elements that are squares
    for gens in [
        [perm(2, 1, 3), perm(2, 3, 1)],
        [perm(2, 3, 4, 1)],
        [perm(2, 1, 3, 4), perm(1, 2, 4, 3)],
    ]:
        g = enumerate_group(gens)
        image = set(squaring_class_map(g))
        squares = {g.class_of[g.multiply(i, i)] for i in range(g.order)}
        assert image == squares


def test_subgroup_fusion_s3():
    g = enumerate_group([perm(2, 1, 3), perm(2, 3, 1)])
    transposition = g.index[perm(2, 1, 3)]
    h = make_subgroup(g, [0, transposition])
    assert h.order == 2
    assert not h.is_normal
    assert len(h.classes) == 2
    assert h.fusion[0] == 0
    assert g.classes[h.fusion[1]].size == 3


def test_subgroup_whole_group_fusion_identity():
    g = enumerate_group([perm(2, 3, 4, 1)])
    h = make_subgroup(g, range(g.order))
    assert h.fusion == tuple(range(g.num_classes))


def test_subgroup_not_closed_rejected():
    g = enumerate_group([perm(2, 3, 4, 1)])
    gen = g.index[perm(2, 3, 4, 1)]
    with pytest.raises(GroupError):
        make_subgroup(g, [0, gen])
