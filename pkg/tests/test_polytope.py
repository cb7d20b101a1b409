from fractions import Fraction

import pytest

from splicelink.invariants import Ray
from splicelink.laurent import LaurentPoly, ZeroPolynomial
from splicelink.polytope import (FibredFace, NonIntegerDual, NormBall,
                                 SingularSystem, ZeroVector, alexander_norm,
                                 check_duality, divisibility, dual_vertex,
                                 unit_ball)

K4_DUALS = [(14, -38), (32, -32), (38, -14), (40, 40),
            (-14, 38), (-32, 32), (-38, 14), (-40, -40)]


class TestDualVertex:
    def test_outer_face(self):
        assert dual_vertex((27, -1), 2080, (3, -1), 256) == (38, -14)

    def test_middle_face(self):
        assert dual_vertex((3, -1), 256, (1, -3), 256) == (32, -32)

    def test_diagonal_face(self):
        assert dual_vertex((-1, 27), 2080, (27, -1), 2080) == (40, 40)

    def test_singular(self):
        with pytest.raises(SingularSystem):
            dual_vertex((2, 4), 10, (1, 2), 5)

    def test_rational_output(self):
        x, y = dual_vertex((1, 0), 1, (0, 1), 1)
        assert (x, y) == (Fraction(1, 2), Fraction(1, 2))


class TestUnitBall:
    def test_k4_structure(self, k4):
        ball = unit_ball(k4)
        assert len(ball.rays) == 8
        assert len(ball.faces) == 8
        assert [r.primitive for r in ball.rays] == [
            (1, -27), (1, -3), (3, -1), (27, -1),
            (-1, 27), (-1, 3), (-3, 1), (-27, 1)]
        assert [(int(f.dual[0]), int(f.dual[1])) for f in ball.faces] == \
            K4_DUALS

    def test_k2_ball(self, k2):
        ball = unit_ball(k2)
        duals = {(int(f.dual[0]), int(f.dual[1])) for f in ball.faces}
        assert duals == {(4, 4), (2, -2), (-4, -4), (-2, 2)}

    def test_k8_outer_duals(self):
        from splicelink.splice import build_k2n
        ball = unit_ball(build_k2n(4))
        duals = {(int(f.dual[0]), int(f.dual[1])) for f in ball.faces}
        for v in [(3280, 3280), (3278, -1094), (3272, -2552),
                  (3254, -3038), (3200, -3200)]:
            assert v in duals

    def test_central_symmetry(self, k8):
        ball = unit_ball(k8)
        prims = {r.primitive for r in ball.rays}
        assert prims == {(-x, -y) for x, y in prims}
        duals = {f.dual for f in ball.faces}
        assert duals == {(-x, -y) for x, y in duals}

    def test_support_function_on_cones(self, k8):
        # inside each open cone the norm is linear with slope the dual
        from splicelink.invariants import thurston_norm
        ball = unit_ball(k8)
        for f in ball.faces:
            for a, b in [(1, 1), (1, 2), (3, 1)]:
                p = (a * f.ray_lo.primitive[0] + b * f.ray_hi.primitive[0],
                     a * f.ray_lo.primitive[1] + b * f.ray_hi.primitive[1])
                pairing = 2 * (p[0] * f.dual[0] + p[1] * f.dual[1])
                assert pairing == thurston_norm(k8, p)

    def test_boundary_consistency(self, k8):
        # a ray shared by two faces pairs to half its norm with both duals
        ball = unit_ball(k8)
        count = len(ball.faces)
        for i, face in enumerate(ball.faces):
            nxt = ball.faces[(i + 1) % count]
            r = face.ray_hi
            assert nxt.ray_lo == r
            for dual in (face.dual, nxt.dual):
                assert 2 * (r.primitive[0] * dual[0]
                            + r.primitive[1] * dual[1]) == r.norm


class TestAlexanderNorm:
    def test_ray_value(self, delta_k4):
        assert alexander_norm(delta_k4, (27, -1)) == 2080

    def test_zero_class(self, delta_k4):
        assert alexander_norm(delta_k4, (0, 0)) == 0

    def test_diagonal(self, delta_k4):
        assert alexander_norm(delta_k4, (1, 1)) == 160

    def test_zero_polynomial(self):
        with pytest.raises(ZeroPolynomial):
            alexander_norm(LaurentPoly.zero(), (1, 1))

    def test_matches_full_support_scan(self, delta_k4):
        for m in [(1, 1), (5, -2), (-7, 3), (2, 9)]:
            values = [m[0] * x + m[1] * y for x, y in delta_k4.support()]
            assert alexander_norm(delta_k4, m) == max(values) - min(values)


class TestDivisibility:
    def test_paper_pair(self):
        assert divisibility((3278, -1094)) == 2

    def test_euclid(self):
        assert divisibility((3272, -2552)) == 8

    def test_diagonal(self):
        assert divisibility((40, 40)) == 40

    def test_zero_vector(self):
        with pytest.raises(ZeroVector):
            divisibility((0, 0))


class TestCheckDuality:
    def test_k4(self, k4, delta_k4):
        assert check_duality(unit_ball(k4), delta_k4.newton_polygon())

    def test_k8(self, k8, delta_k8):
        assert check_duality(unit_ball(k8), delta_k8.newton_polygon())

    def test_k2(self, k2, delta_k2):
        assert check_duality(unit_ball(k2), delta_k2.newton_polygon())

    def test_mismatch(self, k4, delta_k2):
        assert not check_duality(unit_ball(k4), delta_k2.newton_polygon())

    @pytest.mark.parametrize("n", [3, 5])
    def test_remaining_family_members(self, n):
        from splicelink.invariants import alexander_polynomial
        from splicelink.splice import build_k2n
        d = build_k2n(n)
        assert check_duality(unit_ball(d),
                             alexander_polynomial(d).newton_polygon())

    def test_non_integer_dual(self):
        lo = Ray((1, 0), 1)
        hi = Ray((0, 1), 1)
        face = FibredFace(lo, hi, (Fraction(1, 2), Fraction(1, 2)))
        ball = NormBall((lo, hi), (face,))
        with pytest.raises(NonIntegerDual):
            check_duality(ball, [(0, 0)])

    def test_empty_rejected(self, k2, delta_k2):
        with pytest.raises(ValueError):
            check_duality(NormBall((), ()), delta_k2.newton_polygon())
