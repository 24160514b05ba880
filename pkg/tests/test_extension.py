"""Ordered extensions: cone, order-unit, interval preimage, witnesses, towers."""

import random

import pytest

from gammak0 import (
    CosetVector,
    DeltaNotNormal,
    ExtendedGroup,
    GroupRingElt,
    NotInCone,
    RelationNotZero,
    cyclic_group,
    dihedral_group,
    enumerate_interval,
    ext_interval_preimage,
    ext_order_unit_check,
    ext_sdp_witness,
    extend_tower,
    lift_vector,
    map_apply,
    tower_new,
    verify_sdp_witness,
)
from conftest import random_order_unit, random_vector, simplicial_over
from test_limits import z2_mult_tower


def z_over_z2():
    """Base Z (= coset module of the full subgroup of Z2) with unit 1."""
    Z2 = cyclic_group(2)
    G = simplicial_over(Z2, [0, 1], 1)
    u = G.element([[1]])
    return ExtendedGroup(base=G, unit=u)


def test_cone_examples():
    H = z_over_z2()
    G = H.base
    assert H.cone_contains(H.element(G.element([[-1]]), [1]))
    assert not H.cone_contains(H.element(G.element([[-2]]), [1]))
    assert H.cone_contains(H.zero())
    assert H.cone_contains(H.inject(G.element([[3]])))
    assert not H.cone_contains(H.element(G.zero(), [-1]))


def test_extension_requires_normal_stabilizer():
    d3 = dihedral_group(3)
    G = simplicial_over(d3, [3], 1)
    with pytest.raises(DeltaNotNormal):
        ExtendedGroup(base=G, unit=G.basis_vector(0))


def test_cone_is_strict_and_closed():
    rng = random.Random(111)
    Z2 = cyclic_group(2)
    G = simplicial_over(Z2, [], 1)
    H = ExtendedGroup(base=G, unit=G.element([[1, 1]]))
    elts = []
    for _ in range(40):
        e = H.element(random_vector(rng, G), [rng.randint(-2, 2), rng.randint(-2, 2)])
        elts.append(e)
        if H.cone_contains(e) and H.cone_contains(-e):
            assert e.is_zero()
    positives = [e for e in elts if H.cone_contains(e)]
    for e1 in positives[:6]:
        for e2 in positives[:6]:
            assert H.cone_contains(e1 + e2)
        for g in Z2.elements():
            assert H.cone_contains(e1.translate(g))


def test_top_element_reduction_matches_exhaustive_quantifier():
    # membership via the interval top agrees with trying every interval element
    rng = random.Random(113)
    Z2 = cyclic_group(2)
    G = simplicial_over(Z2, [], 1)
    u = G.element([[2, 1]])
    H = ExtendedGroup(base=G, unit=u)
    box = enumerate_interval(u)
    for _ in range(60):
        x = random_vector(rng, G)
        t = CosetVector(G.space, [rng.randint(0, 2), rng.randint(0, 2)])
        via_top = H.cone_contains(H.element(x, t))
        via_any = any(
            G.cone_contains(x + lift_vector(t) * d) for d in box
        )
        assert via_top == via_any


def test_order_unit_dominates_probes():
    rng = random.Random(115)
    for g in (cyclic_group(2), dihedral_group(3)):
        sub_gens = [] if g.order == 2 else [1]
        G = simplicial_over(g, sub_gens, 2)
        u = random_order_unit(rng, G, max_coeff=2)
        H = ExtendedGroup(base=G, unit=u)
        probes = [
            H.element(
                random_vector(rng, G, max_coeff=3),
                [rng.randint(-2, 2) for _ in range(G.space.num_cosets)],
            )
            for _ in range(15)
        ]
        assert ext_order_unit_check(H, probes)


def test_interval_preimage_is_the_box():
    Z2 = cyclic_group(2)
    G = simplicial_over(Z2, [], 1)
    u = G.element([[1, 1]])
    H = ExtendedGroup(base=G, unit=u)
    # oracle: direct enumeration of [0, u]
    box = sorted(enumerate_interval(u), key=lambda v: v.flatten())
    pre = sorted(ext_interval_preimage(H), key=lambda v: v.flatten())
    assert box == pre


def test_interval_preimage_zero_base():
    Z2 = cyclic_group(2)
    G = simplicial_over(Z2, [], 0)
    H = ExtendedGroup(base=G, unit=G.zero())
    assert ext_interval_preimage(H) == [G.zero()]
    # the extension of the zero group is the coset module itself
    assert H.cone_contains(H.element(G.zero(), [2, 1]))
    assert not H.cone_contains(H.element(G.zero(), [-1, 0]))


def test_ext_sdp_trivial_relation():
    H = z_over_z2()
    Z2 = H.base.space.parent
    one = GroupRingElt.one(Z2)
    unit = H.order_unit()
    a = [one, -one]
    X = [unit, unit]
    w = ext_sdp_witness(H, a, X)
    assert verify_sdp_witness(H, a, X, w)


def test_ext_sdp_spec_instance():
    H = z_over_z2()
    G = H.base
    Z2 = G.space.parent
    one = GroupRingElt.one(Z2)
    a = [one, one, -one]
    X = [
        H.element(G.element([[-1]]), [1]),
        H.element(G.element([[1]]), [0]),
        H.element(G.element([[0]]), [1]),
    ]
    w = ext_sdp_witness(H, a, X)
    assert w.m == G.rank + 1
    check = verify_sdp_witness(H, a, X, w)
    assert check, check.reason


def test_ext_sdp_errors():
    H = z_over_z2()
    G = H.base
    Z2 = G.space.parent
    one = GroupRingElt.one(Z2)
    with pytest.raises(RelationNotZero):
        ext_sdp_witness(H, [one], [H.order_unit()])
    with pytest.raises(NotInCone):
        ext_sdp_witness(H, [one - one], [H.element(G.element([[-1]]), [0])])


def test_ext_sdp_random_relations():
    rng = random.Random(117)
    for g in (cyclic_group(2), cyclic_group(4), dihedral_group(3)):
        sub_gens = [] if g.order <= 2 else [1]
        G = simplicial_over(g, sub_gens, 2)
        u = random_order_unit(rng, G, max_coeff=2)
        H = ExtendedGroup(base=G, unit=u)
        for _ in range(6):
            n = rng.randint(1, 3)
            pairs = []
            for _ in range(n):
                x = random_vector(rng, G, max_coeff=2)
                t = CosetVector(
                    G.space, [rng.randint(0, 2) for _ in range(G.space.num_cosets)]
                )
                e = H.element(x, t)
                if not H.cone_contains(e):
                    e = H.element(x.positive_part(), t)
                pairs.append(e)
            a, _ = _relation_among(rng, H, pairs)
            if a is None:
                continue
            w = ext_sdp_witness(H, a, pairs)
            check = verify_sdp_witness(H, a, pairs, w)
            assert check, check.reason


def _relation_among(rng, H, pairs):
    """Exact integer relation among extension elements, or (None, None)."""
    from gammak0 import intlinalg

    G = H.base
    group = G.space.parent
    nc = G.space.num_cosets
    dim = G.flat_dim() + nc
    cols = []
    for e in pairs:
        for g in group.elements():
            te = e.translate(g)
            cols.append(list(te.x.flatten()) + list(te.t.coeffs))
    matrix = [[cols[j][r] for j in range(len(cols))] for r in range(dim)]
    basis = intlinalg.kernel_basis(matrix, len(pairs) * group.order)
    if not basis:
        return None, None
    combo = [0] * (len(pairs) * group.order)
    for _ in range(rng.randint(1, 2)):
        row = rng.choice(basis)
        c = rng.randint(-2, 2)
        combo = [p + c * q for p, q in zip(combo, row)]
    coeffs = []
    for i in range(len(pairs)):
        chunk = combo[i * group.order : (i + 1) * group.order]
        coeffs.append(GroupRingElt(group, dict(enumerate(chunk))))
    return coeffs, pairs


def test_extend_constant_tower():
    d3 = dihedral_group(3)
    G = simplicial_over(d3, [1], 1)
    u = G.basis_vector(0)
    from gammak0 import identity_map

    t = tower_new([G, G], [identity_map(G)], units=[u, u], mode="interval")
    ext = extend_tower(t)
    assert len(ext.levels) == 2
    assert ext.unit_at(0) == ext.levels[0].order_unit()


def test_extend_mult_tower_squares_commute():
    rng = random.Random(119)
    G, t = z2_mult_tower(length=4)
    ext = extend_tower(t)
    for n in range(len(t.maps)):
        for _ in range(8):
            x = random_vector(rng, G)
            tpart = CosetVector(G.space, [rng.randint(-2, 2), rng.randint(-2, 2)])
            e = ext.levels[n].element(x, tpart)
            through = ext.map_apply(n, e)
            assert through.x == map_apply(t.maps[n], x)
            assert through.t == tpart
            # injection square
            assert ext.map_apply(n, ext.levels[n].inject(x)) == ext.levels[n + 1].inject(
                map_apply(t.maps[n], x)
            )
    # extension maps carry the order-unit to the order-unit
    for n in range(len(t.maps)):
        assert ext.map_apply(n, ext.unit_at(n)) == ext.unit_at(n + 1)


def test_extend_rejects_non_normal():
    d3 = dihedral_group(3)
    G = simplicial_over(d3, [3], 1)
    u = G.basis_vector(0)
    from gammak0 import identity_map

    t = tower_new([G, G], [identity_map(G)], units=[u, u], mode="interval")
    with pytest.raises(DeltaNotNormal):
        extend_tower(t)
