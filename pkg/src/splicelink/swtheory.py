"""The gauge-theoretic layer of the link-surgery 4-manifold, at the level
it can be computed from the link alone.

The Seiberg-Witten polynomial of the manifold built from two rational
elliptic pieces and the circle times the link exterior is, up to sign, the
symmetrized Alexander polynomial with both variables squared.  Its support
gives the basic classes; the induced norm on the relevant rank-2 slice is
the maximal pairing with a basic class; canonical classes of the fibered
faces are twice the dual vertices of the norm ball.
"""

from dataclasses import dataclass

from .laurent import ZeroPolynomial, convex_hull
from .polytope import NonIntegerDual, divisibility
from .invariants import alexander_polynomial
from .splice import linking_number


class BasicClassSet:
    """Support of the SW polynomial with coefficients.

    ``classes`` and ``coefficients`` run in parallel, ascending graded-lex.
    The convex hull of the classes is computed once on demand.
    """

    def __init__(self, classes, coefficients):
        if len(classes) != len(coefficients):
            raise ValueError("classes and coefficients must match in length")
        if any(c == 0 for c in coefficients):
            raise ValueError("basic classes carry nonzero coefficients")
        self.classes = list(classes)
        self.coefficients = list(coefficients)
        self._hull = None

    def __len__(self):
        return len(self.classes)

    def hull(self):
        if self._hull is None:
            self._hull = convex_hull(self.classes)
        return list(self._hull)


@dataclass(frozen=True)
class CanonicalClass:
    """Canonical class attached to a fibered face: twice its dual vertex,
    oriented to pair positively with the face's own cone."""
    face: object
    klass: tuple
    divisibility: int


def sw_polynomial(delta):
    """SW polynomial from a symmetrized Alexander polynomial: substitute
    t -> t^2 in both variables and normalize the leading coefficient to be
    positive."""
    sw = delta.substitute_power(2)
    if sw and sw.leading_term()[1] < 0:
        sw = -sw
    return sw


def basic_classes(sw):
    """All exponent pairs with nonzero coefficient in the SW polynomial."""
    if not sw:
        raise ZeroPolynomial("the zero polynomial has no basic classes")
    terms = sw.sorted_terms()
    return BasicClassSet([e for e, _c in terms], [c for _e, c in terms])


def sw_norm(bcs, m):
    """max over basic classes k of k1*m1 + k2*m2.

    The maximum of a linear functional over a finite set is attained on
    its convex hull, so only hull vertices are scanned.
    """
    if not bcs.classes:
        raise ValueError("need a nonempty basic class set")
    m1, m2 = m
    return max(k1 * m1 + k2 * m2 for k1, k2 in bcs.hull())


def homotopy_k3_check(d):
    """True iff the linking number of the two components is odd and every
    basic class of the SW polynomial has both exponents even (checked by
    direct inspection of the computed support)."""
    k1, k2 = d.arrowheads
    if linking_number(d, k1.id, k2.id) % 2 == 0:
        return False
    sw = sw_polynomial(alexander_polynomial(d))
    return all(e1 % 2 == 0 and e2 % 2 == 0 for e1, e2 in sw.support())


def canonical_classes(ball):
    """One canonical class per fibered face: twice the dual vertex, which
    must be a lattice point (NonIntegerDual otherwise), with its
    divisibility.  Twice the dual vertex already pairs positively with the
    face's open cone, since ray norms are positive."""
    out = []
    for f in ball.faces:
        x, y = 2 * f.dual[0], 2 * f.dual[1]
        if x.denominator != 1 or y.denominator != 1:
            raise NonIntegerDual("doubled dual vertex (%s, %s) is not a "
                                 "lattice point" % (f.dual[0], f.dual[1]))
        k = (int(x), int(y))
        out.append(CanonicalClass(f, k, divisibility(k)))
    return out
