"""Splice diagrams of 2-component graph links: data model, DSL, generators.

A splice diagram is a weighted tree.  Nodes stand for the Seifert-fibered
pieces of the link exterior, boundary vertices for tubular neighborhoods of
singular fibers, and arrowheads for the actual link components.  Each edge
end carries a positive integer weight (the order of the corresponding
fiber); only the weights written at node ends enter linking-number
computations, leaf-end weights are conventionally 1.

Diagrams are written in a line-oriented DSL (UTF-8, ``#`` starts a comment):

    diagram <name>
    node <id>
    bvertex <id>
    arrow <id>
    edge <idA> <idB> <weight_at_A> <weight_at_B>

Arrowheads are numbered K1, K2 in declaration order.  A valid diagram is a
tree with exactly two arrowheads, and arrowheads and boundary vertices must
be leaves.

Linking numbers follow the classical splice-calculus path rule: the linking
number of two (possibly virtual) components is the product, over all nodes
on the tree path joining them, of the node-end weights of the edges incident
to that node but not lying on the path.
"""

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .errors import ComputationError


class DiagramSyntaxError(ComputationError):
    """Malformed DSL text.  Carries the 1-based line number."""

    def __init__(self, line, message):
        super().__init__("line %d: %s" % (line, message))
        self.line = line
        self.message = message


class ValidationError(ComputationError):
    """A structurally invalid diagram.  Carries the violation list."""

    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class UnknownVertex(ComputationError):
    """A vertex id that does not occur in the diagram."""


class VertexKind(Enum):
    NODE = "node"
    BOUNDARY = "bvertex"
    ARROW = "arrow"


@dataclass(frozen=True)
class Vertex:
    id: str
    kind: VertexKind


@dataclass(frozen=True)
class Edge:
    a: str
    b: str
    weight_a: int
    weight_b: int

    def weight_at(self, vid):
        if vid == self.a:
            return self.weight_a
        if vid == self.b:
            return self.weight_b
        raise UnknownVertex("edge %s-%s has no end %r" % (self.a, self.b, vid))

    def other(self, vid):
        if vid == self.a:
            return self.b
        if vid == self.b:
            return self.a
        raise UnknownVertex("edge %s-%s has no end %r" % (self.a, self.b, vid))


class SpliceDiagram:
    """A named weighted tree of nodes, boundary vertices and arrowheads.

    Instances are treated as immutable after construction; derived data
    (the linking forms of the virtual components) is computed once and
    cached.
    """

    def __init__(self, name, vertices, edges):
        self.name = name
        self.vertices = list(vertices)
        self.edges = list(edges)
        self._by_id = {}
        for v in self.vertices:
            self._by_id.setdefault(v.id, v)
        self._forms = None

    def vertex(self, vid):
        try:
            return self._by_id[vid]
        except KeyError:
            raise UnknownVertex("no vertex %r in diagram %r"
                                % (vid, self.name)) from None

    def has_vertex(self, vid):
        return vid in self._by_id

    def incident(self, vid):
        return [e for e in self.edges if vid in (e.a, e.b)]

    def degree(self, vid):
        return sum(1 for e in self.edges for end in (e.a, e.b) if end == vid)

    @property
    def arrowheads(self):
        return tuple(v for v in self.vertices if v.kind is VertexKind.ARROW)

    @property
    def nodes(self):
        return [v for v in self.vertices if v.kind is VertexKind.NODE]

    @property
    def boundary_vertices(self):
        return [v for v in self.vertices if v.kind is VertexKind.BOUNDARY]

    def path(self, start, goal):
        """Vertex ids along the unique tree path, endpoints included."""
        self.vertex(start)
        self.vertex(goal)
        parents = {start: None}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            if cur == goal:
                out = []
                while cur is not None:
                    out.append(cur)
                    cur = parents[cur]
                return out[::-1]
            for e in self.incident(cur):
                nxt = e.other(cur)
                if nxt not in parents:
                    parents[nxt] = cur
                    queue.append(nxt)
        raise ValueError("no path from %r to %r (diagram is not connected)"
                         % (start, goal))

    def virtual_forms(self):
        """(vertex, lk(K1, v), lk(K2, v), degree) for every node and
        boundary vertex, in declaration order.  Cached on first use."""
        if self._forms is None:
            k1, k2 = self.arrowheads
            forms = []
            for v in self.vertices:
                if v.kind is VertexKind.ARROW:
                    continue
                forms.append((v,
                              linking_number(self, k1.id, v.id),
                              linking_number(self, k2.id, v.id),
                              self.degree(v.id)))
            self._forms = forms
        return self._forms


def linking_number(d, v, w):
    """Linking number of the (real or virtual) components at vertices v, w.

    Product over all nodes on the tree path from v to w (endpoints count
    when they are nodes) of the node-end weights of every incident edge
    not on the path.
    """
    if v == w:
        raise ValueError("linking number needs two distinct vertices")
    d.vertex(v)
    d.vertex(w)
    path = d.path(v, w)
    on_path = {frozenset(pair) for pair in zip(path, path[1:])}
    result = 1
    for vid in path:
        if d.vertex(vid).kind is not VertexKind.NODE:
            continue
        for e in d.incident(vid):
            if frozenset((e.a, e.b)) in on_path:
                continue
            result *= e.weight_at(vid)
    return result


def validate(d):
    """Structural checks; returns a list of violation strings (empty when
    valid).  Codes: DuplicateId, UnknownVertex, NonpositiveWeight,
    ArrowheadCount, LeafDegree, NotATree."""
    problems = []

    seen = set()
    for v in d.vertices:
        if v.id in seen:
            problems.append("DuplicateId: vertex id %r declared more than once"
                            % v.id)
        seen.add(v.id)

    ids = {v.id for v in d.vertices}
    usable = []
    for e in d.edges:
        missing = [x for x in (e.a, e.b) if x not in ids]
        if missing:
            problems.append("UnknownVertex: edge %s-%s references undeclared %s"
                            % (e.a, e.b, ", ".join(repr(x) for x in missing)))
        elif e.a == e.b:
            problems.append("NotATree: self-loop at %r" % e.a)
        else:
            usable.append(e)
        if e.weight_a < 1 or e.weight_b < 1:
            problems.append("NonpositiveWeight: edge %s-%s carries weights "
                            "(%d, %d)" % (e.a, e.b, e.weight_a, e.weight_b))

    arrows = [v for v in d.vertices if v.kind is VertexKind.ARROW]
    if len(arrows) != 2:
        problems.append("ArrowheadCount: expected 2 arrowheads, found %d"
                        % len(arrows))

    deg = {v.id: 0 for v in d.vertices}
    for e in usable:
        deg[e.a] += 1
        deg[e.b] += 1
    for v in d.vertices:
        if v.kind is not VertexKind.NODE and deg.get(v.id, 0) != 1:
            problems.append("LeafDegree: %s %r has degree %d, leaves must "
                            "have degree 1" % (v.kind.value, v.id, deg[v.id]))

    if not d.vertices:
        problems.append("NotATree: empty diagram")
    elif len(usable) != len(ids) - 1:
        problems.append("NotATree: %d vertices need %d edges, found %d"
                        % (len(ids), len(ids) - 1, len(usable)))
    else:
        adj = {v.id: [] for v in d.vertices}
        for e in usable:
            adj[e.a].append(e.b)
            adj[e.b].append(e.a)
        start = d.vertices[0].id
        reached = {start}
        queue = deque([start])
        while queue:
            for nxt in adj[queue.popleft()]:
                if nxt not in reached:
                    reached.add(nxt)
                    queue.append(nxt)
        if reached != ids:
            problems.append("NotATree: diagram is disconnected")

    return problems


def parse_diagram(text):
    """Parse DSL text into a validated SpliceDiagram.

    Raises DiagramSyntaxError on malformed lines and ValidationError when
    the described graph is not a valid diagram.
    """
    name = None
    vertices = []
    edges = []
    kinds = {"node": VertexKind.NODE,
             "bvertex": VertexKind.BOUNDARY,
             "arrow": VertexKind.ARROW}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        last_line = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kw = parts[0]
        if name is None and kw != "diagram":
            raise DiagramSyntaxError(lineno, "first directive must be 'diagram'")
        if kw == "diagram":
            if name is not None:
                raise DiagramSyntaxError(lineno, "duplicate 'diagram' header")
            if len(parts) != 2:
                raise DiagramSyntaxError(lineno, "usage: diagram <name>")
            name = parts[1]
        elif kw in kinds:
            if len(parts) != 2:
                raise DiagramSyntaxError(lineno, "usage: %s <id>" % kw)
            vertices.append(Vertex(parts[1], kinds[kw]))
        elif kw == "edge":
            if len(parts) != 5:
                raise DiagramSyntaxError(
                    lineno, "usage: edge <idA> <idB> <weightA> <weightB>")
            try:
                wa, wb = int(parts[3]), int(parts[4])
            except ValueError:
                raise DiagramSyntaxError(
                    lineno, "edge weights must be integers") from None
            edges.append(Edge(parts[1], parts[2], wa, wb))
        else:
            raise DiagramSyntaxError(lineno, "unknown directive %r" % kw)
    if name is None:
        raise DiagramSyntaxError(last_line + 1, "missing 'diagram' header")
    d = SpliceDiagram(name, vertices, edges)
    violations = validate(d)
    if violations:
        raise ValidationError(violations)
    return d


def render_diagram(d):
    """Canonical DSL text for a diagram; inverse of parse_diagram."""
    lines = ["diagram %s" % d.name]
    for v in d.vertices:
        lines.append("%s %s" % (v.kind.value, v.id))
    for e in d.edges:
        lines.append("edge %s %s %d %d" % (e.a, e.b, e.weight_a, e.weight_b))
    return "\n".join(lines) + "\n"


def build_k2n(n):
    """The 2n-node chain link obtained from the unknot by iterating the
    (3,1)-cable-and-splice construction 2n times.

    Nodes H1..H{2n} form a chain; node Hi carries a boundary vertex Si on
    an edge of weight 3 at the node end; the two link components K1, K2
    hang off the end nodes on weight-1 edges.  With these weights the
    linking numbers come out as lk(K1, Hi) = 3^i, lk(K2, Hi) = 3^(2n-i+1),
    lk(K1, Si) = 3^(i-1), lk(K2, Si) = 3^(2n-i) and lk(K1, K2) = 3^(2n).
    """
    if n < 1:
        raise ValueError("the family is defined for n >= 1")
    count = 2 * n
    vertices = [Vertex("H%d" % i, VertexKind.NODE) for i in range(1, count + 1)]
    vertices += [Vertex("S%d" % i, VertexKind.BOUNDARY)
                 for i in range(1, count + 1)]
    vertices += [Vertex("K1", VertexKind.ARROW), Vertex("K2", VertexKind.ARROW)]
    edges = [Edge("H1", "K1", 1, 1)]
    for i in range(1, count + 1):
        edges.append(Edge("H%d" % i, "S%d" % i, 3, 1))
        if i < count:
            edges.append(Edge("H%d" % i, "H%d" % (i + 1), 1, 1))
    edges.append(Edge("H%d" % count, "K2", 1, 1))
    return SpliceDiagram("K%d" % count, vertices, edges)
