from fractions import Fraction

import pytest

from splicelink.invariants import Ray, alexander_polynomial, thurston_norm
from splicelink.laurent import LaurentPoly, ZeroPolynomial
from splicelink.polytope import (FibredFace, NonIntegerDual, NormBall,
                                 alexander_norm, unit_ball)
from splicelink.splice import build_k2n
from splicelink.swtheory import (BasicClassSet, basic_classes,
                                 canonical_classes, homotopy_k3_check,
                                 sw_norm, sw_polynomial)


class TestSwPolynomial:
    def test_support_extrema(self, delta_k2):
        sw = sw_polynomial(delta_k2)
        assert (8, 8) in sw.support()
        assert (4, -4) in sw.support()

    def test_constant(self):
        assert sw_polynomial(LaurentPoly.one()) == 1

    def test_polygon_doubles(self, delta_k8):
        sw = sw_polynomial(delta_k8)
        assert sw.newton_polygon() == \
            [(2 * x, 2 * y) for x, y in delta_k8.newton_polygon()]

    def test_positive_leading_coefficient(self, delta_k2):
        sw = sw_polynomial(-delta_k2)
        assert sw.leading_term()[1] > 0


class TestBasicClasses:
    def test_k2_classes(self, delta_k2):
        bcs = basic_classes(sw_polynomial(delta_k2))
        assert len(bcs) == 9
        for v in [(8, 8), (-8, -8), (4, -4), (-4, 4)]:
            assert v in bcs.classes

    def test_monomial(self):
        bcs = basic_classes(LaurentPoly.monomial(2, -4, 5))
        assert bcs.classes == [(2, -4)]
        assert bcs.coefficients == [5]

    def test_k4_hull(self, delta_k4):
        bcs = basic_classes(sw_polynomial(delta_k4))
        assert set(bcs.hull()) == {
            (80, 80), (76, -28), (64, -64), (28, -76),
            (-80, -80), (-76, 28), (-64, 64), (-28, 76)}

    def test_negation_closed(self, delta_k8):
        bcs = basic_classes(sw_polynomial(delta_k8))
        table = dict(zip(bcs.classes, bcs.coefficients))
        for (e1, e2), c in table.items():
            assert table[(-e1, -e2)] == c

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            basic_classes(LaurentPoly.zero())


class TestSwNorm:
    def test_k4_ray(self, delta_k4):
        bcs = basic_classes(sw_polynomial(delta_k4))
        assert sw_norm(bcs, (27, -1)) == 2080

    def test_zero_class(self, delta_k8):
        bcs = basic_classes(sw_polynomial(delta_k8))
        assert sw_norm(bcs, (0, 0)) == 0

    def test_k2_diagonal(self, k2, delta_k2):
        # maximal pairing is with (8, 8); agrees with the tree norm
        bcs = basic_classes(sw_polynomial(delta_k2))
        assert sw_norm(bcs, (1, 1)) == 16
        assert thurston_norm(k2, (1, 1)) == 16

    def test_three_norms_sampled(self, k8, delta_k8):
        bcs = basic_classes(sw_polynomial(delta_k8))
        for m in [(1, 1), (5, -2), (-9, 4), (27, -1), (0, 7)]:
            tn = thurston_norm(k8, m)
            assert tn == alexander_norm(delta_k8, m)
            assert tn == sw_norm(bcs, m)

    def test_three_norms_sampled_n5(self):
        d = build_k2n(5)
        delta = alexander_polynomial(d)
        bcs = basic_classes(sw_polynomial(delta))
        for m1 in range(-100, 101, 23):
            for m2 in range(-100, 101, 31):
                tn = thurston_norm(d, (m1, m2))
                assert tn == alexander_norm(delta, (m1, m2))
                assert tn == sw_norm(bcs, (m1, m2))


class TestHomotopyK3:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_family(self, n):
        assert homotopy_k3_check(build_k2n(n))

    def test_even_linking_number_fails(self):
        from splicelink.splice import Edge, SpliceDiagram, Vertex, VertexKind
        d = SpliceDiagram("even", [
            Vertex("H1", VertexKind.NODE),
            Vertex("S1", VertexKind.BOUNDARY),
            Vertex("K1", VertexKind.ARROW),
            Vertex("K2", VertexKind.ARROW),
        ], [
            Edge("H1", "S1", 2, 1),
            Edge("H1", "K1", 1, 1),
            Edge("H1", "K2", 1, 1),
        ])
        assert not homotopy_k3_check(d)

    def test_all_classes_even(self, delta_k2):
        sw = sw_polynomial(delta_k2)
        assert all(e1 % 2 == 0 and e2 % 2 == 0 for e1, e2 in sw.support())


class TestCanonicalClasses:
    def test_k4_divisibilities(self, k4):
        canon = canonical_classes(unit_ball(k4))
        assert len(canon) == 8
        table = {c.klass: c.divisibility for c in canon}
        assert table[(80, 80)] == 80
        assert table[(76, -28)] == 4
        assert table[(64, -64)] == 64
        assert table[(-76, 28)] == 4

    def test_k2_classes(self, k2):
        canon = canonical_classes(unit_ball(k2))
        table = {c.klass: c.divisibility for c in canon}
        assert table == {(8, 8): 8, (4, -4): 4, (-8, -8): 8, (-4, 4): 4}

    def test_k8_divisibility_collision(self):
        # the doubled second and fourth outer duals share divisibility 4,
        # so divisibility separates at most 4 of the n+1 = 5 orbit classes
        canon = canonical_classes(unit_ball(build_k2n(4)))
        table = {c.klass: c.divisibility for c in canon}
        five = [table[(2 * x, 2 * y)] for x, y in
                [(3280, 3280), (3278, -1094), (3272, -2552),
                 (3254, -3038), (3200, -3200)]]
        assert five == [6560, 4, 16, 4, 6400]
        assert len(set(five)) == 4

    def test_classes_are_hull_vertices(self, k8, delta_k8):
        canon = canonical_classes(unit_ball(k8))
        hull = set(basic_classes(sw_polynomial(delta_k8)).hull())
        assert {c.klass for c in canon} == hull

    def test_positive_pairing_with_cone(self, k8):
        for c in canonical_classes(unit_ball(k8)):
            mid = (c.face.ray_lo.primitive[0] + c.face.ray_hi.primitive[0],
                   c.face.ray_lo.primitive[1] + c.face.ray_hi.primitive[1])
            assert c.klass[0] * mid[0] + c.klass[1] * mid[1] > 0

    def test_non_integer_dual(self):
        lo = Ray((1, 0), 1)
        hi = Ray((0, 1), 1)
        face = FibredFace(lo, hi, (Fraction(1, 4), Fraction(1, 4)))
        with pytest.raises(NonIntegerDual):
            canonical_classes(NormBall((lo, hi), (face,)))


class TestBasicClassSetValidation:
    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            BasicClassSet([(0, 0)], [1, 2])

    def test_zero_coefficient(self):
        with pytest.raises(ValueError):
            BasicClassSet([(0, 0)], [0])
