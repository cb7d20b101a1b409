import pytest

from splicelink.invariants import thurston_norm
from splicelink.orbits import (LatticeMap, NotAGroup, face_orbits,
                               lattice_symmetries, min_structure_count)
from splicelink.polytope import unit_ball
from splicelink.splice import build_k2n
from splicelink.swtheory import canonical_classes

IDENTITY = LatticeMap(1, 0, 0, 1)
MINUS = LatticeMap(-1, 0, 0, -1)
SWAP = LatticeMap(0, 1, 1, 0)
MINUS_SWAP = LatticeMap(0, -1, -1, 0)


class TestLatticeMap:
    def test_apply(self):
        assert SWAP.apply((3, -1)) == (-1, 3)

    def test_compose(self):
        assert SWAP.compose(SWAP) == IDENTITY
        assert MINUS.compose(SWAP) == MINUS_SWAP

    def test_inverse(self):
        m = LatticeMap(2, 1, 1, 1)
        assert m.compose(m.inverse()) == IDENTITY
        with pytest.raises(ValueError):
            LatticeMap(2, 0, 0, 2).inverse()


class TestLatticeSymmetries:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_group_of_order_four(self, n):
        maps = lattice_symmetries(unit_ball(build_k2n(n)))
        assert sorted((m.a, m.b, m.c, m.d) for m in maps) == sorted([
            (1, 0, 0, 1), (-1, 0, 0, -1), (0, 1, 1, 0), (0, -1, -1, 0)])

    def test_always_contains_plus_minus_identity(self, k4):
        maps = lattice_symmetries(unit_ball(k4))
        assert IDENTITY in maps
        assert MINUS in maps

    def test_maps_preserve_norms(self, k4):
        maps = lattice_symmetries(unit_ball(k4))
        for m in maps:
            for m1 in range(-50, 51, 7):
                for m2 in range(-50, 51, 9):
                    assert thurston_norm(k4, m.apply((m1, m2))) == \
                        thurston_norm(k4, (m1, m2))

    def test_maps_permute_rays_with_norms(self, k8):
        ball = unit_ball(k8)
        norms = {r.primitive: r.norm for r in ball.rays}
        for m in lattice_symmetries(ball):
            for prim, norm in norms.items():
                assert norms[m.apply(prim)] == norm


class TestFaceOrbits:
    def test_identity_only_gives_singletons(self, k4):
        ball = unit_ball(k4)
        part = face_orbits(ball, [IDENTITY])
        assert part.orbit_count == len(ball.faces) == 8

    def test_k4_orbit_structure(self, k4):
        ball = unit_ball(k4)
        part = face_orbits(ball, lattice_symmetries(ball))
        assert part.orbit_count == 3
        sizes = {}
        for label in part.face_labels.values():
            sizes[label] = sizes.get(label, 0) + 1
        # the diagonal face and its negative; the two P-P / Q-Q pairs;
        # the middle face and its negative
        assert sorted(sizes.values()) == [2, 2, 4]

    def test_k2_orbits(self, k2):
        ball = unit_ball(k2)
        assert face_orbits(ball, lattice_symmetries(ball)).orbit_count == 2

    def test_orbit_sizes_divide_group_order(self, k8):
        ball = unit_ball(k8)
        maps = lattice_symmetries(ball)
        part = face_orbits(ball, maps)
        sizes = {}
        for label in part.face_labels.values():
            sizes[label] = sizes.get(label, 0) + 1
        assert all(len(maps) % size == 0 for size in sizes.values())

    def test_not_a_group(self, k4):
        ball = unit_ball(k4)
        with pytest.raises(NotAGroup):
            face_orbits(ball, [IDENTITY, MINUS, SWAP])
        with pytest.raises(NotAGroup):
            face_orbits(ball, [SWAP, MINUS_SWAP])

    def test_divisibility_constant_on_orbits(self, k8):
        ball = unit_ball(k8)
        part = face_orbits(ball, lattice_symmetries(ball))
        canon = canonical_classes(ball)
        by_orbit = {}
        for i, c in enumerate(canon):
            by_orbit.setdefault(part.face_labels[i], set()).add(c.divisibility)
        assert all(len(values) == 1 for values in by_orbit.values())


class TestMinStructureCount:
    @pytest.mark.parametrize("n,expected", [(1, 2), (2, 3), (4, 5)])
    def test_family_bound(self, n, expected):
        assert min_structure_count(build_k2n(n)) == expected
