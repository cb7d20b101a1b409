"""Lattice-linear symmetries of the norm ball and orbits of its faces.

Any self-diffeomorphism of the link exterior acts on rank-2 cohomology as
a linear map that preserves the norm ball and the integer lattice.  The
full group of such maps is found by exhaustive search: a linear
ball-preserving map must send an adjacent pair of ball vertices to an
adjacent pair, so fixing one base pair and solving a 2x2 system for every
candidate image pair enumerates all possibilities.  Counting orbits of
fibered faces under this group gives a lower bound on the number of
inequivalent fibrations, hence of inequivalent symplectic structures on
the associated link-surgery 4-manifold (the geometric symmetry group can
only over-approximate the realizable actions).
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ComputationError
from .polytope import unit_ball


class NotAGroup(ComputationError):
    """The supplied maps are not closed under composition and inverse."""


@dataclass(frozen=True)
class LatticeMap:
    """A 2x2 integer matrix (a, b; c, d) of determinant +-1."""
    a: int
    b: int
    c: int
    d: int

    @property
    def entries(self):
        return ((self.a, self.b), (self.c, self.d))

    def det(self):
        return self.a * self.d - self.b * self.c

    def apply(self, v):
        x, y = v
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def compose(self, other):
        """self after other, as matrices: self @ other."""
        return LatticeMap(self.a * other.a + self.b * other.c,
                          self.a * other.b + self.b * other.d,
                          self.c * other.a + self.d * other.c,
                          self.c * other.b + self.d * other.d)

    def inverse(self):
        det = self.det()
        if det not in (1, -1):
            raise ValueError("not invertible over the integers")
        return LatticeMap(self.d * det, -self.b * det,
                          -self.c * det, self.a * det)

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)


@dataclass(frozen=True)
class OrbitPartition:
    """Face index -> orbit label, labels numbered in face order."""
    face_labels: dict
    orbit_count: int


def lattice_symmetries(ball):
    """All determinant +-1 integer matrices permuting the ball vertices.

    Ball vertices are the exact rational points primitive / norm.  The
    base adjacent pair (first two rays in cyclic order) is matched against
    every ordered adjacent pair; each match determines one candidate map,
    which is kept when it is integral, unimodular and maps the vertex set
    bijectively to itself.  Results are deduplicated and sorted by matrix
    entries; the identity and minus identity are always present.
    """
    rays = ball.rays
    if len(rays) < 2:
        raise ValueError("need at least two rays")
    verts = [(Fraction(r.primitive[0], r.norm), Fraction(r.primitive[1], r.norm))
             for r in rays]
    count = len(verts)
    v0, v1 = verts[0], verts[1]
    base_det = v0[0] * v1[1] - v0[1] * v1[0]
    vert_set = set(verts)
    found = set()
    for j in range(count):
        for step in (1, count - 1):
            u = verts[j]
            w = verts[(j + step) % count]
            # rows of the matrix solve [[v0], [v1]] row = (u_i, w_i)
            a = (u[0] * v1[1] - v0[1] * w[0]) / base_det
            b = (v0[0] * w[0] - u[0] * v1[0]) / base_det
            c = (u[1] * v1[1] - v0[1] * w[1]) / base_det
            d = (v0[0] * w[1] - u[1] * v1[0]) / base_det
            if any(f.denominator != 1 for f in (a, b, c, d)):
                continue
            m = LatticeMap(int(a), int(b), int(c), int(d))
            if m.det() not in (1, -1):
                continue
            if {m.apply(v) for v in verts} != vert_set:
                continue
            found.add((m.a, m.b, m.c, m.d))
    return [LatticeMap(*entries) for entries in sorted(found)]


def _require_group(maps):
    entries = {(m.a, m.b, m.c, m.d) for m in maps}
    if (1, 0, 0, 1) not in entries:
        raise NotAGroup("identity is missing")
    for m in maps:
        inv = m.inverse()
        if (inv.a, inv.b, inv.c, inv.d) not in entries:
            raise NotAGroup("inverse of %s is missing" % (m.entries,))
        for g in maps:
            comp = m.compose(g)
            if (comp.a, comp.b, comp.c, comp.d) not in entries:
                raise NotAGroup("composite of %s and %s is missing"
                                % (m.entries, g.entries))


def face_orbits(ball, maps):
    """Partition of the fibered faces under the given group of maps.

    A face is identified by the unordered pair of its ray primitives; each
    map sends ray primitives to ray primitives, so face images can be
    looked up directly.  Union-find joins every face to its images.
    Raises NotAGroup when the maps are not a group.
    """
    _require_group(maps)
    faces = ball.faces
    index_of = {frozenset((f.ray_lo.primitive, f.ray_hi.primitive)): i
                for i, f in enumerate(faces)}

    parent = list(range(len(faces)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri

    for m in maps:
        for i, f in enumerate(faces):
            key = frozenset((m.apply(f.ray_lo.primitive),
                             m.apply(f.ray_hi.primitive)))
            try:
                union(i, index_of[key])
            except KeyError:
                raise ValueError("map %s does not permute the faces"
                                 % (m.entries,)) from None

    labels = {}
    face_labels = {}
    for i in range(len(faces)):
        root = find(i)
        if root not in labels:
            labels[root] = len(labels)
        face_labels[i] = labels[root]
    return OrbitPartition(face_labels, len(labels))


def min_structure_count(d):
    """Number of face orbits under the full lattice symmetry group of the
    diagram's norm ball: a lower bound on the number of inequivalent
    fibration classes, hence of inequivalent symplectic structures on the
    link-surgery manifold."""
    ball = unit_ball(d)
    return face_orbits(ball, lattice_symmetries(ball)).orbit_count
