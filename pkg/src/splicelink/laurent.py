"""Exact sparse arithmetic for Laurent polynomials in two variables t1, t2.

A polynomial is a finite map from exponent pairs (e1, e2), either of which
may be negative, to nonzero arbitrary-precision integer coefficients.  The
zero polynomial is the empty map.  Operations return new objects; instances
are never mutated after construction, so values are safe to share between
threads.

Leading terms, exact division and the canonical term order all use graded
lexicographic order on (e1, e2).
"""

import heapq
from fractions import Fraction

from .errors import ComputationError


class NotDivisible(ComputationError):
    """Exact division has no Laurent-polynomial quotient."""


class ZeroPolynomial(ComputationError):
    """The operation needs a nonzero polynomial."""


class OddSpan(ComputationError):
    """Centering is impossible because some exponent span is odd.

    Carries the uncentered polynomial (``poly``) and the half-integral
    shift (``shift``) that centering would require.
    """

    def __init__(self, poly, shift):
        super().__init__("cannot center: required shift %s is not integral"
                         % (shift,))
        self.poly = poly
        self.shift = shift


def grlex_key(e):
    """Graded-lexicographic sort key for an exponent pair."""
    return (e[0] + e[1], e[0], e[1])


def convex_hull(points):
    """Vertices of the convex hull of a set of integer points.

    Returned counterclockwise, starting from the lexicographically
    smallest vertex.  Collinear non-extreme points are excluded.  A single
    point gives itself; a collinear set gives its two endpoints.
    """
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


class LaurentPoly:
    """Sparse bivariate Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hull")

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for exps, coeff in items:
                if not coeff:
                    continue
                key = (int(exps[0]), int(exps[1]))
                c = data.get(key, 0) + coeff
                if c:
                    data[key] = c
                else:
                    data.pop(key, None)
        self._terms = data
        self._hull = None

    @classmethod
    def _raw(cls, data):
        # data must already be normalized (no zero coefficients)
        obj = cls.__new__(cls)
        obj._terms = data
        obj._hull = None
        return obj

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, e1, e2, coeff=1):
        return cls({(e1, e2): coeff})

    # ------------------------------------------------------------- inspection

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def support(self):
        """The set of exponent pairs carrying a nonzero coefficient."""
        return self._terms.keys()

    def items(self):
        return self._terms.items()

    def coefficient(self, e1, e2):
        return self._terms.get((e1, e2), 0)

    def sorted_terms(self):
        """Terms as ((e1, e2), coeff) pairs in ascending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]))

    def leading_term(self):
        """((e1, e2), coeff) at the graded-lex-largest exponent pair."""
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        e = max(self._terms, key=grlex_key)
        return e, self._terms[e]

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # ------------------------------------------------------------- arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return None

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for (a1, a2), c in self._terms.items():
            for (b1, b2), d in other._terms.items():
                e = (a1 + b1, a2 + b2)
                s = out.get(e, 0) + c * d
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def exact_divide(self, q):
        """Return r with r * q == self, or raise NotDivisible.

        Both operands are shifted so that their supports touch the
        coordinate axes (minimal exponents become zero); the shifted
        dividend is then reduced by leading-term elimination against the
        shifted divisor in graded-lex order.  A leading term whose
        exponents or coefficient the divisor's leading term does not
        divide proves there is no quotient over the integers.
        """
        q = self._coerce(q)
        if q is None:
            raise TypeError("divisor must be a LaurentPoly or int")
        if not q:
            raise ZeroPolynomial("division by the zero polynomial")
        if not self:
            return LaurentPoly.zero()

        sp1 = min(e[0] for e in self._terms)
        sp2 = min(e[1] for e in self._terms)
        sq1 = min(e[0] for e in q._terms)
        sq2 = min(e[1] for e in q._terms)
        rem = {(e[0] - sp1, e[1] - sp2): c for e, c in self._terms.items()}
        qd = {(e[0] - sq1, e[1] - sq2): c for e, c in q._terms.items()}
        qe = max(qd, key=grlex_key)
        qc = qd[qe]
        qrest = [(e, c) for e, c in qd.items() if e != qe]

        # max-heap on graded-lex order, with lazy deletion of stale entries
        heap = [(-(e[0] + e[1]), -e[0], -e[1]) for e in rem]
        heapq.heapify(heap)
        quot = {}
        while heap:
            key = heapq.heappop(heap)
            e = (-key[1], -key[2])
            c = rem.get(e, 0)
            if c == 0:
                continue
            de = (e[0] - qe[0], e[1] - qe[1])
            if de[0] < 0 or de[1] < 0 or c % qc != 0:
                raise NotDivisible("no exact Laurent quotient")
            f = c // qc
            quot[de] = f
            del rem[e]
            for oe, oc in qrest:
                ne = (de[0] + oe[0], de[1] + oe[1])
                s = rem.get(ne, 0) - f * oc
                if s:
                    if ne not in rem:
                        heapq.heappush(heap, (-(ne[0] + ne[1]), -ne[0], -ne[1]))
                    rem[ne] = s
                else:
                    rem.pop(ne, None)

        off1 = sp1 - sq1
        off2 = sp2 - sq2
        return LaurentPoly._raw(
            {(e[0] + off1, e[1] + off2): c for e, c in quot.items()})

    def substitute_power(self, k):
        """Substitute t1 -> t1^k and t2 -> t2^k for a positive integer k."""
        if k < 1:
            raise ValueError("power substitution needs k >= 1")
        if k == 1:
            return self
        return LaurentPoly._raw(
            {(k * e[0], k * e[1]): c for e, c in self._terms.items()})

    def shift(self, d1, d2):
        """Multiply by the monomial t1^d1 t2^d2."""
        if d1 == 0 and d2 == 0:
            return self
        return LaurentPoly._raw(
            {(e[0] + d1, e[1] + d2): c for e, c in self._terms.items()})

    def symmetrize(self):
        """Center the support about the origin.

        Divides by t1^s1 t2^s2 where s_i = (max_i + min_i) / 2 over the
        support, so that per variable the maximal exponent equals minus
        the minimal one.  Returns (centered polynomial, (s1, s2)).
        Raises OddSpan when a shift is half-integral and ZeroPolynomial
        on zero input.
        """
        if not self._terms:
            raise ZeroPolynomial("cannot symmetrize the zero polynomial")
        e1s = [e[0] for e in self._terms]
        e2s = [e[1] for e in self._terms]
        t1 = max(e1s) + min(e1s)
        t2 = max(e2s) + min(e2s)
        if t1 % 2 or t2 % 2:
            raise OddSpan(self, (Fraction(t1, 2), Fraction(t2, 2)))
        s1, s2 = t1 // 2, t2 // 2
        return self.shift(-s1, -s2), (s1, s2)

    def invert_variables(self):
        """Substitute t1 -> 1/t1 and t2 -> 1/t2."""
        return LaurentPoly._raw(
            {(-e[0], -e[1]): c for e, c in self._terms.items()})

    def swap_variables(self):
        """Exchange t1 and t2."""
        return LaurentPoly._raw(
            {(e[1], e[0]): c for e, c in self._terms.items()})

    def evaluate(self, a, b):
        """Exact value at nonzero rationals (a, b), as a Fraction."""
        a = Fraction(a)
        b = Fraction(b)
        if a == 0 or b == 0:
            raise ValueError("evaluation point must have nonzero coordinates")
        total = Fraction(0)
        for (e1, e2), c in self._terms.items():
            total += c * a ** e1 * b ** e2
        return total

    def newton_polygon(self):
        """Convex hull vertices of the support (see convex_hull).

        The hull is computed once and cached.
        """
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no Newton polygon")
        if self._hull is None:
            self._hull = convex_hull(self._terms.keys())
        return list(self._hull)

    # ---------------------------------------------------------- serialization

    def to_json_terms(self):
        """JSON form: [e1, e2, coefficient-as-decimal-string] triples,
        ascending graded-lex."""
        return [[e[0], e[1], str(c)] for e, c in self.sorted_terms()]

    @classmethod
    def from_json_terms(cls, triples):
        return cls({(int(a), int(b)): int(c) for a, b, c in triples})

    # --------------------------------------------------------------- printing

    def __str__(self):
        if not self._terms:
            return "0"

        def mono(e1, e2):
            bits = []
            if e1:
                bits.append("t1" if e1 == 1 else "t1^%d" % e1)
            if e2:
                bits.append("t2" if e2 == 1 else "t2^%d" % e2)
            return " ".join(bits)

        pieces = []
        ordered = sorted(self._terms.items(),
                         key=lambda t: grlex_key(t[0]), reverse=True)
        for (e1, e2), c in ordered:
            m = mono(e1, e2)
            if not m:
                body = str(abs(c))
            elif abs(c) == 1:
                body = m
            else:
                body = "%d %s" % (abs(c), m)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return "LaurentPoly(%r)" % (self._terms,)
