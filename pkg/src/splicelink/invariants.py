"""Fibration invariants of a 2-component graph link read off its diagram.

Everything here consumes only the linking numbers of the link components
with the virtual components (nodes and boundary vertices) and the vertex
degrees, via the standard weighted-tree formulas of splice calculus:

* a class (m1, m2) is fibered iff it pairs nontrivially with every virtual
  component;
* its norm is sum over virtual vertices v of
  (degree(v) - 2) * |m1 * lk(K1, v) + m2 * lk(K2, v)|,
  so boundary vertices (degree 1) contribute negatively;
* the Alexander polynomial is the alternating product of the binomials
  t1^lk(K1,v) t2^lk(K2,v) - 1 raised to degree(v) - 2, symmetrized.
"""

from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd

from .errors import ComputationError
from .laurent import LaurentPoly
from .splice import linking_number


class DegenerateForm(ComputationError):
    """A virtual component pairs trivially with both link components."""


class IndexOutOfRange(ComputationError):
    """Ray index outside 1..2n."""


class ZeroSlope(ComputationError):
    """The boundary slope vanishes."""


@dataclass(frozen=True)
class Ray:
    """A primitive lattice direction together with its norm."""
    primitive: tuple
    norm: int


@dataclass(frozen=True)
class BoundarySlope:
    """The cable curve cut out on one boundary torus by a fibration class.

    Coordinates are taken in the (meridian, longitude) basis of the
    component; the slope factors as divisibility * beta_primitive.
    """
    component_index: int
    meridian_coeff: int
    longitude_coeff: int
    divisibility: int
    beta_primitive: tuple


def is_fibered(d, m):
    """True iff (m1, m2) pairs nontrivially with every node and boundary
    vertex.  The zero class is never fibered."""
    m1, m2 = m
    if m1 == 0 and m2 == 0:
        return False
    return all(m1 * a + m2 * b != 0 for _v, a, b, _deg in d.virtual_forms())


def thurston_norm(d, m):
    """Weighted-tree norm of the class (m1, m2).

    Sum over nodes and boundary vertices of
    (degree - 2) * |m1 * lk(K1, v) + m2 * lk(K2, v)|; the degree-1
    boundary vertices subtract.
    """
    m1, m2 = m
    total = 0
    for _v, a, b, deg in d.virtual_forms():
        total += (deg - 2) * abs(m1 * a + m2 * b)
    return total


def _normalize_direction(x, y):
    g = gcd(x, y)
    x, y = x // g, y // g
    if x < 0 or (x == 0 and y < 0):
        x, y = -x, -y
    return x, y


def _cross(p, q):
    return p[0] * q[1] - p[1] * q[0]


def _descending_angle(p, q):
    c = _cross(p, q)
    if c < 0:
        return -1
    if c > 0:
        return 1
    return 0


def nonfibered_rays(d):
    """The non-fibered lattice directions of the diagram, with norms.

    Each virtual component contributes the kernel line of its pairing
    form (lk(K1, v), lk(K2, v)); proportional lines are reported once.
    Primitives are normalized to have positive first nonzero coordinate,
    and the list is ordered by decreasing angle from the positive m1-axis
    (for the chain family this is the natural index order of the rays).
    """
    prims = set()
    for v, a, b, _deg in d.virtual_forms():
        if a == 0 and b == 0:
            raise DegenerateForm("virtual component %r pairs trivially with "
                                 "both link components" % v.id)
        prims.add(_normalize_direction(b, -a))
    ordered = sorted(prims, key=cmp_to_key(_descending_angle))
    return [Ray(p, thurston_norm(d, p)) for p in ordered]


def alexander_polynomial(d):
    """The symmetrized 2-variable Alexander polynomial of the link.

    Built as the product over virtual vertices of
    (t1^lk(K1,v) t2^lk(K2,v) - 1)^(degree(v) - 2): vertices of degree 3 or
    more multiply into the numerator, degree-1 vertices are divided out
    one at a time (each division must be exact, otherwise NotDivisible
    propagates).  The result is centered and sign-normalized so that the
    graded-lex-leading coefficient is positive.
    """
    numerator = LaurentPoly.one()
    denominators = []
    for _v, a, b, deg in d.virtual_forms():
        factor = LaurentPoly({(a, b): 1, (0, 0): -1})
        if deg >= 3:
            for _ in range(deg - 2):
                numerator = numerator * factor
        elif deg == 1:
            denominators.append(factor)
    for factor in denominators:
        numerator = numerator.exact_divide(factor)
    centered, _shift = numerator.symmetrize()
    if centered.leading_term()[1] < 0:
        centered = -centered
    return centered


def closed_form_ray_norm(n, i):
    """Closed-form norm of the i-th non-fibered ray of the 2n-node chain.

    For i <= n the ray is (3^(2n+1-2i), -1); for i >= n+1 it is
    (1, -3^(2i-1-2n)).  Returns (Ray, norm).
    """
    if n < 1 or not 1 <= i <= 2 * n:
        raise IndexOutOfRange("need 1 <= i <= 2n, got i=%d, n=%d" % (i, n))
    if i <= n:
        primitive = (3 ** (2 * n + 1 - 2 * i), -1)
        norm = (3 ** (4 * n - 2 * i + 1) + 3 ** (2 * n - 2 * i + 1)
                + 3 ** (2 * n) - 2 * 3 ** (2 * n - i) - 2 * 3 ** (2 * n - i + 1)
                + 1)
    else:
        primitive = (1, -3 ** (2 * i - 1 - 2 * n))
        norm = (3 ** (2 * i - 1) + 3 ** (2 * i - 2 * n - 1) + 3 ** (2 * n)
                - 2 * 3 ** i - 2 * 3 ** (i - 1) + 1)
    return Ray(primitive, norm), norm


def boundary_slope(d, m, i):
    """Boundary slope of the class m on the i-th boundary torus (i in 1, 2).

    sigma_i = -(m_j * lk(K1, K2)) * meridian + m_i * longitude, j != i.
    Raises ZeroSlope when sigma_i vanishes (in particular for m = 0).
    """
    if i not in (1, 2):
        raise ValueError("component index must be 1 or 2")
    m1, m2 = m
    k1, k2 = d.arrowheads
    lk = linking_number(d, k1.id, k2.id)
    if i == 1:
        meridian, longitude = -m2 * lk, m1
    else:
        meridian, longitude = -m1 * lk, m2
    if meridian == 0 and longitude == 0:
        raise ZeroSlope("class (%d, %d) gives the zero slope on component %d"
                        % (m1, m2, i))
    div = gcd(meridian, longitude)
    return BoundarySlope(i, meridian, longitude, div,
                         (meridian // div, longitude // div))
