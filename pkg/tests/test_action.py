import pytest

from januarials.action import (
    DEGENERATE, JANUARIAL, M_FACE_MAP, ActionSpace, associate, build_explicit_action,
    build_pairs_action, build_projective_action, classify, coset_map, make_action,
)
from januarials.exceptions import InvalidInputError
from januarials.mobius import MobiusTransformation, iter_pgl2
from januarials.perm import is_identity, perm_inv, perm_mul, perm_pow
from januarials.presets import ALT16_X, ALT16_Y, PRESETS

F = MobiusTransformation.from_formula


def standard(p):
    return F(p, 0, -1, 1, 0), F(p, 1, -1, 1, 0), F(p, 0, 1, 1, 0)


def standard_associate(p):
    x, y, t = standard(p)
    return associate(build_projective_action(p, x, y), t)


def test_space_sizes_and_labels():
    assert ActionSpace.projective_line(13).size == 14
    assert ActionSpace.projective_line(13).labels[-1] == "∞"
    pairs = ActionSpace.unordered_pairs(11)
    assert pairs.size == 66
    assert pairs.labels[0] == "{0,1}"
    assert pairs.labels[-1] == "{10,∞}"
    assert ActionSpace.explicit(5).labels == ("1", "2", "3", "4", "5")


def test_projective_examples():
    p = 13
    x, y, _ = standard(p)
    a = build_projective_action(p, x, y)
    assert (a.k, a.l, a.size) == (3, 13, 14)
    b = build_projective_action(p, F(p, -1, 0, 0, 1), y)
    assert (b.k, b.l) == (3, 7)
    c = build_projective_action(43, F(43, 0, 21, 1, 0), F(43, 2, -1, 2, 0))
    assert (c.k, c.l) == (4, 43)


def test_pairs_examples():
    a = build_pairs_action(11, F(11, 0, -1, 1, 0), F(11, 1, 2, -1, 2))
    assert (a.size, a.k, a.l) == (66, 5, 5)
    sizes = sorted(len(o) for o in coset_map(a).y_orbits)
    assert sizes == [1] + [5] * 13


def test_pairs_action_p5():
    # the first order-3 element giving a transitive pair action, found by scanning
    x = F(5, 0, -1, 1, 0)
    found = None
    for y in iter_pgl2(5):
        if y.order() != 3:
            continue
        try:
            found = build_pairs_action(5, x, y)
            break
        except InvalidInputError:
            continue
    assert found is not None
    assert found.size == 15 and found.k == 3
    cm = coset_map(found)
    assert sum(len(o) for o in cm.y_orbits) == 15
    assert all(3 % len(o) == 0 for o in cm.y_orbits)


def test_explicit_examples():
    a = build_explicit_action(16, ALT16_X, ALT16_Y)
    assert (a.k, a.l) == (3, 8)
    assert sorted(len(o) for o in coset_map(a).xy_orbits) == [8, 8]
    s3 = build_explicit_action(3, "(1,2)", "(1,2,3)")
    assert (s3.k, s3.l) == (3, 2)
    with pytest.raises(InvalidInputError, match="trivial"):
        build_explicit_action(2, "(1,2)", "()")


def test_build_rejections():
    with pytest.raises(InvalidInputError, match="involution"):
        build_projective_action(13, F(13, 1, 1, 0, 1), F(13, 1, -1, 1, 0))
    with pytest.raises(InvalidInputError, match="2 components"):
        build_explicit_action(4, "(1,2)", "(3,4)")
    with pytest.raises(InvalidInputError, match="involution"):
        build_explicit_action(3, "(1,2,3)", "(1,2)")


def test_associate_examples():
    a = standard_associate(13)
    assert a.generators["x"].formula() == "z -> -z"
    assert a.l == 7
    assert standard_associate(113).l == 19
    base = build_projective_action(43, F(43, 0, 21, 1, 0), F(43, 2, -1, 2, 0))
    b = associate(base, F(43, 0, 22, 1, 0))
    assert sorted(len(o) for o in coset_map(b).xy_orbits) == [22, 22]
    assert b.generators["x"] == F(43, -1, 0, 0, 1)


def test_associate_rejections_name_the_identity():
    x, y, _ = standard(13)
    a = build_projective_action(13, x, y)
    with pytest.raises(InvalidInputError, match=r"t\^-1 y t"):
        associate(a, F(13, -1, 0, 0, 1))
    with pytest.raises(InvalidInputError, match=r"t\^2"):
        associate(a, F(13, 1, 1, 0, 1))
    with pytest.raises(InvalidInputError, match=r"t\^-1 x t"):
        associate(a, F(13, 0, 2, 1, 0))


def test_associate_properties():
    x, y, t = standard(17)
    base = build_projective_action(17, x, y)
    a = associate(base, t)
    tp = base.space.induced(t)
    # t inverts the new x
    assert perm_mul(perm_mul(perm_inv(tp), a.x), tp) == perm_inv(a.x)
    again = associate(a, t)
    assert (again.x, again.y) == (base.x, base.y)


def test_relations_hold_pointwise():
    actions = [standard_associate(p) for p in (13, 17, 73)]
    actions += [PRESETS[n].action() for n in PRESETS if n != "k3-standard"]
    for a in actions:
        n = a.size
        assert is_identity(perm_mul(a.x, a.x))
        assert is_identity(perm_pow(a.y, a.k))
        assert is_identity(perm_pow(a.xy, a.l))
        cm = coset_map(a)
        assert len(cm.x_fixed) + 2 * len(cm.x_pairs) == n
        assert sum(len(o) for o in cm.y_orbits) == n
        assert sum(len(o) for o in cm.xy_orbits) == n
        assert all(a.k % len(o) == 0 for o in cm.y_orbits)
        mc = classify(cm)
        if mc.is_januarial:
            assert n % 2 == 0 and mc.orbit_sizes == (n // 2, n // 2)


def test_orbits_are_cyclically_ordered():
    a = standard_associate(17)
    cm = coset_map(a)
    for orbit in cm.y_orbits:
        assert orbit[0] == min(orbit)
        for u, v in zip(orbit, orbit[1:] + orbit[:1]):
            assert a.y[u] == v
    starts = [o[0] for o in cm.xy_orbits]
    assert starts == sorted(starts)


def test_coset_map_examples():
    cm = coset_map(standard_associate(13))
    assert cm.x_fixed == (0, 13)
    assert (len(cm.x_pairs), len(cm.y_orbits)) == (6, 6)
    cm = coset_map(standard_associate(17))
    assert (len(cm.x_pairs), len(cm.y_orbits)) == (8, 6)
    cm = coset_map(standard_associate(73))
    assert (len(cm.x_pairs), len(cm.y_orbits)) == (36, 26)


def test_classify_examples():
    x, y, _ = standard(13)
    mc = classify(coset_map(build_projective_action(13, x, y)))
    assert (mc.m, mc.orbit_sizes, mc.verdict) == (2, (1, 13), M_FACE_MAP)
    mc = classify(coset_map(standard_associate(13)))
    assert (mc.orbit_sizes, mc.verdict) == ((7, 7), JANUARIAL)
    mc = classify(coset_map(PRESETS["portrait-psl2-11"].action()))
    assert (mc.m, mc.nontrivial_faces, mc.verdict) == (14, 13, M_FACE_MAP)


def test_degenerate_single_point():
    space = ActionSpace.explicit(1)
    # a one-point action cannot have a nontrivial y, so build the map by hand
    with pytest.raises(InvalidInputError):
        make_action(space, (0,), (0,))
    from januarials.action import CosetMap, TriangleAction
    a = TriangleAction(space, (0,), (0,), 1, 1)
    assert classify(CosetMap(a, (0,), (), ((0,),), ((0,),))).verdict == DEGENERATE
