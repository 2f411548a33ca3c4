"""Coxeter diagrams: parsing, finite-type recognition, component analysis.

A diagram stores only the labels m(s,t) != 2; an absent pair commutes.
Labels are integers >= 3 or INF.
"""

from __future__ import annotations

from dataclasses import dataclass, field

INF = float("inf")

#: Coxeter numbers of the irreducible finite types, keyed by family.
#: A_n: n+1, B_n: 2n, D_n: 2(n-1), I_2(p): p, plus the exceptional values.
_EXCEPTIONAL_H = {
    ("E", 6): 12,
    ("E", 7): 18,
    ("E", 8): 30,
    ("F", 4): 12,
    ("G", 2): 6,
    ("H", 2): 5,
    ("H", 3): 10,
    ("H", 4): 30,
}


class DiagramError(ValueError):
    """Malformed diagram source or invalid diagram operation."""


def _pair(a, b):
    return frozenset((a, b))


def sort_key(name):
    """Deterministic vertex ordering; short names before long ones."""
    return (len(name), name)


@dataclass(frozen=True)
class CoxeterDiagram:
    """A Coxeter diagram: ordered vertex names plus labels m(s,t) != 2."""

    vertices: tuple
    labels: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise DiagramError("duplicate vertex name")
        for pair, m in self.labels.items():
            if len(pair) != 2:
                raise DiagramError("self-label or malformed edge %r" % (pair,))
            if not all(v in self.vertices for v in pair):
                raise DiagramError("edge with unknown vertex %r" % (pair,))
            if m != INF and (not isinstance(m, int) or m < 3):
                raise DiagramError("label must be an integer >= 3 or inf, got %r" % (m,))

    def m(self, a, b):
        """Coxeter label m(a,b); 2 when no edge is stored, 1 on the diagonal."""
        if a == b:
            return 1
        return self.labels.get(_pair(a, b), 2)

    def edges(self, subset=None):
        """Edge list [(a, b, m)] of the (induced) diagram, deterministic order."""
        keep = set(self.vertices if subset is None else subset)
        out = []
        for pair, m in self.labels.items():
            a, b = sorted(pair, key=sort_key)
            if a in keep and b in keep:
                out.append((a, b, m))
        out.sort(key=lambda e: (sort_key(e[0]), sort_key(e[1])))
        return out

    def neighbors(self, v, subset=None):
        keep = set(self.vertices if subset is None else subset)
        out = set()
        for pair in self.labels:
            if v in pair:
                (w,) = pair - {v}
                if w in keep:
                    out.add(w)
        return out

    def induced(self, subset):
        """Full subdiagram on `subset`, vertex order inherited."""
        keep = set(subset)
        unknown = keep - set(self.vertices)
        if unknown:
            raise DiagramError("unknown vertices %s" % sorted(unknown))
        verts = tuple(v for v in self.vertices if v in keep)
        labels = {p: m for p, m in self.labels.items() if p <= keep}
        return CoxeterDiagram(verts, labels)

    def has_infinite_label(self):
        return any(m == INF for m in self.labels.values())


def irreducible_components(diagram, subset=None):
    """Partition `subset` into connected components of the induced diagram.

    Edges are the pairs with m != 2, so components correspond to the
    irreducible factors of the special subgroup.
    """
    verts = list(diagram.vertices if subset is None else subset)
    unknown = set(verts) - set(diagram.vertices)
    if unknown:
        raise DiagramError("unknown vertices %s" % sorted(unknown))
    seen = set()
    comps = []
    for start in sorted(verts, key=sort_key):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in diagram.neighbors(v, verts):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: sort_key(min(c, key=sort_key)))
    return comps


@dataclass(frozen=True)
class ComponentType:
    """Classified irreducible finite type with vertices in standard order."""

    family: str  # one of A B D E F G H I
    rank: int
    order: tuple  # vertices in the standard enumeration for the family
    p: int = 0  # dihedral label, only for family I

    @property
    def tag(self):
        if self.family == "I":
            return "I_2(%d)" % self.p
        return "%s_%d" % (self.family, self.rank)

    @property
    def coxeter_number(self):
        if self.family == "A":
            return self.rank + 1
        if self.family == "B":
            return 2 * self.rank
        if self.family == "D":
            return 2 * (self.rank - 1)
        if self.family == "I":
            return self.p
        return _EXCEPTIONAL_H[(self.family, self.rank)]

    @property
    def reflection_count(self):
        # |R| = rank * h / 2 for every irreducible finite type.
        n = self.rank * self.coxeter_number
        assert n % 2 == 0
        return n // 2


@dataclass(frozen=True)
class FiniteTypeReport:
    is_spherical: bool
    components: tuple  # ComponentType per spherical component, () if not spherical


def _classify_rank2(diagram, a, b):
    m = diagram.m(a, b)
    a, b = sorted((a, b), key=sort_key)
    if m == INF:
        return None
    if m == 3:
        return ComponentType("A", 2, (a, b))
    if m == 4:
        return ComponentType("B", 2, (a, b))
    if m == 5:
        return ComponentType("H", 2, (a, b))
    if m == 6:
        return ComponentType("G", 2, (a, b))
    return ComponentType("I", 2, (a, b), p=m)


def _path_order(diagram, comp):
    """Vertices of a path subdiagram from one endpoint to the other, or None."""
    degs = {v: len(diagram.neighbors(v, comp)) for v in comp}
    ends = sorted((v for v, d in degs.items() if d == 1), key=sort_key)
    if len(ends) != 2 or any(d > 2 for d in degs.values()):
        return None
    order = [ends[0]]
    prev = None
    while len(order) < len(comp):
        nxt = [w for w in diagram.neighbors(order[-1], comp) if w != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order


def _branch_data(diagram, comp):
    """(center, branches) for a tree with one degree-3 vertex, else None.

    Each branch is listed from the vertex adjacent to the center outward.
    """
    degs = {v: len(diagram.neighbors(v, comp)) for v in comp}
    if any(d > 3 for d in degs.values()):
        return None
    centers = [v for v, d in degs.items() if d == 3]
    if len(centers) != 1:
        return None
    center = centers[0]
    branches = []
    for first in sorted(diagram.neighbors(center, comp), key=sort_key):
        branch = [first]
        prev = center
        while True:
            nxt = [w for w in diagram.neighbors(branch[-1], comp) if w != prev]
            if not nxt:
                break
            if len(nxt) > 1:
                return None
            prev = branch[-1]
            branch.append(nxt[0])
        branches.append(branch)
    branches.sort(key=lambda b: (len(b), sort_key(b[0])))
    return center, branches


def _classify_component(diagram, comp):
    """ComponentType of a connected induced subdiagram, or None if infinite."""
    comp = sorted(comp, key=sort_key)
    n = len(comp)
    if n == 1:
        return ComponentType("A", 1, tuple(comp))
    if n == 2:
        return _classify_rank2(diagram, *comp)

    edges = diagram.edges(comp)
    if len(edges) != n - 1:  # a cycle never has finite type
        return None
    if any(m == INF for _, _, m in edges):
        return None
    big = [(a, b, m) for a, b, m in edges if m >= 4]
    if len(big) > 1 or any(m >= 6 for _, _, m in big):
        return None

    if not big:
        # simply laced: A_n, D_n or E_n
        path = _path_order(diagram, comp)
        if path is not None:
            return ComponentType("A", n, tuple(path))
        branched = _branch_data(diagram, comp)
        if branched is None:
            return None
        center, branches = branched
        lens = tuple(len(b) for b in branches)
        if lens[0] == 1 and lens[1] == 1:
            # D_n: long tail first, then the two forks
            tail = branches[2][::-1] + [center]
            forks = sorted((branches[0][0], branches[1][0]), key=sort_key)
            return ComponentType("D", n, tuple(tail) + tuple(forks))
        if lens[0] == 1 and lens[1] == 2 and lens[2] in (2, 3, 4):
            # E_n, standard order: long t-chain then the short branch vertex
            chain = branches[1][::-1] + [center] + branches[2]
            return ComponentType("E", n, tuple(chain) + (branches[0][0],))
        return None

    path = _path_order(diagram, comp)
    if path is None:
        return None  # label >= 4 on a branched tree
    a, b, m = big[0]
    pos = sorted((path.index(a), path.index(b)))
    if m == 4:
        if pos == [n - 2, n - 1]:
            return ComponentType("B", n, tuple(path))
        if pos == [0, 1]:
            return ComponentType("B", n, tuple(path[::-1]))
        if n == 4 and pos == [1, 2]:
            order = path if sort_key(path[0]) < sort_key(path[-1]) else path[::-1]
            return ComponentType("F", 4, tuple(order))
        return None
    # m == 5: H_3 / H_4 carry the 5-label on the first edge
    if n > 4:
        return None
    if pos == [0, 1]:
        return ComponentType("H", n, tuple(path))
    if pos == [n - 2, n - 1]:
        return ComponentType("H", n, tuple(path[::-1]))
    return None


def finite_type(diagram, subset=None):
    """Decompose the induced diagram and match each component against the
    classification of irreducible finite Coxeter groups.

    >>> d = type_diagram("H", 3)
    >>> finite_type(d).components[0].tag
    'H_3'
    """
    comps = irreducible_components(diagram, subset)
    out = []
    for comp in comps:
        t = _classify_component(diagram, comp)
        if t is None:
            return FiniteTypeReport(False, ())
        out.append(t)
    return FiniteTypeReport(True, tuple(out))


def is_spherical(diagram, subset=None):
    return finite_type(diagram, subset).is_spherical


def is_irreducible(diagram, subset=None):
    return len(irreducible_components(diagram, subset)) == 1


def type_diagram(family, n, p=None, prefix="s"):
    """The standard diagram of an irreducible finite type.

    Vertices are named prefix1..prefixN along the standard enumeration
    (the one produced by finite_type).
    """
    family = family.upper()
    names = tuple("%s%d" % (prefix, i) for i in range(1, n + 1))
    labels = {}

    def edge(i, j, m=3):
        labels[_pair(names[i], names[j])] = m

    if family == "A":
        if n < 1:
            raise DiagramError("A_n needs n >= 1")
        for i in range(n - 1):
            edge(i, i + 1)
    elif family == "B" or family == "C":
        if n < 2:
            raise DiagramError("B_n needs n >= 2")
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 2, n - 1, 4)
    elif family == "D":
        if n < 4:
            raise DiagramError("D_n needs n >= 4")
        for i in range(n - 3):
            edge(i, i + 1)
        edge(n - 3, n - 2)
        edge(n - 3, n - 1)
    elif family == "E":
        if n not in (6, 7, 8):
            raise DiagramError("E_n needs n in 6..8")
        for i in range(n - 2):
            edge(i, i + 1)
        edge(2, n - 1)  # short branch at the third chain vertex
    elif family == "F":
        if n != 4:
            raise DiagramError("F_n needs n = 4")
        edge(0, 1)
        edge(1, 2, 4)
        edge(2, 3)
    elif family == "G":
        if n != 2:
            raise DiagramError("G_n needs n = 2")
        edge(0, 1, 6)
    elif family == "H":
        if n not in (2, 3, 4):
            raise DiagramError("H_n needs n in 2..4")
        edge(0, 1, 5)
        for i in range(1, n - 1):
            edge(i, i + 1)
    elif family == "I":
        if n != 2 or p is None or p < 3:
            raise DiagramError("I_2(p) needs rank 2 and p >= 3")
        edge(0, 1, p)
    else:
        raise DiagramError("unknown type tag %r" % family)
    return CoxeterDiagram(names, labels)


def parse_diagram(text):
    """Parse the textual diagram format.

    Lines: ``vertex <name>``, ``edge <a> <b> <m|inf>`` or
    ``type <letter> <n> [<p>]``.  Comments start with '#'; semicolons
    separate logical lines.
    """
    vertices = []
    labels = {}

    def add_vertex(name):
        if name in vertices:
            raise DiagramError("duplicate vertex %r" % name)
        vertices.append(name)

    lines = []
    for raw in text.replace(";", "\n").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    for line in lines:
        parts = line.split()
        kind = parts[0].lower()
        if kind == "vertex" and len(parts) == 2:
            add_vertex(parts[1])
        elif kind == "edge" and len(parts) == 4:
            a, b, raw_m = parts[1], parts[2], parts[3]
            for v in (a, b):
                if v not in vertices:
                    raise DiagramError("edge references unknown vertex %r" % v)
            if a == b:
                raise DiagramError("self-edge on %r" % a)
            m = INF if raw_m.lower() in ("inf", "infinity", "oo") else int(raw_m)
            if m != INF and m < 2:
                raise DiagramError("label below 2 on edge %s %s" % (a, b))
            if m != 2:  # m = 2 is the default and is not stored
                labels[_pair(a, b)] = m
        elif kind == "type" and len(parts) in (3, 4):
            fam = parts[1]
            n = int(parts[2])
            p = int(parts[3]) if len(parts) == 4 else None
            sub = type_diagram(fam, n, p)
            for v in sub.vertices:
                add_vertex(v)
            labels.update(sub.labels)
        else:
            raise DiagramError("cannot parse line %r" % line)
    return CoxeterDiagram(tuple(vertices), labels)


def cone_diagram(diagram, subset, new_name="cone"):
    """Adjoin a new generator with m = 2 over `subset` and m = inf elsewhere."""
    if new_name in diagram.vertices:
        raise DiagramError("cone vertex %r collides with an existing vertex" % new_name)
    keep = set(subset)
    unknown = keep - set(diagram.vertices)
    if unknown:
        raise DiagramError("unknown vertices %s" % sorted(unknown))
    labels = dict(diagram.labels)
    for v in diagram.vertices:
        if v not in keep:
            labels[_pair(new_name, v)] = INF
    return CoxeterDiagram(diagram.vertices + (new_name,), labels)


def diagram_to_json(diagram):
    return {
        "vertices": list(diagram.vertices),
        "edges": [[a, b, "inf" if m == INF else m] for a, b, m in diagram.edges()],
    }
