"""The Crisp-Paris folding of an Artin group into a small-type Artin group.

Each generator s gets a fiber I(s) of N = lcm(m_st - 1) fresh generators;
every labeled edge is replaced by parallel copies of the diagram of
A_(m-1) x A_(m-1), wired in the standard zig-zag pattern.  The layout is
deterministic so folds are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .diagram import (
    CoxeterDiagram,
    DiagramError,
    finite_type,
    irreducible_components,
    sort_key,
)
from .nerve import subset_name


@dataclass(frozen=True)
class FoldedDiagram:
    source: CoxeterDiagram
    target: CoxeterDiagram
    fibers: dict  # generator -> tuple of fiber vertex names
    fiber_size: int
    # per labeled edge: the fiber-index blocks, each wired as one copy of
    # the A_(m-1) x A_(m-1) diagram
    block_layout: dict = None

    def fiber(self, g):
        return self.fibers[g]

    def project(self, fiber_vertex):
        for g, fib in self.fibers.items():
            if fiber_vertex in fib:
                return g
        raise DiagramError("not a fiber vertex: %r" % (fiber_vertex,))

    def preimage(self, subset):
        out = set()
        for g in subset:
            out |= set(self.fibers[g])
        return frozenset(out)

    def to_json(self):
        from .diagram import diagram_to_json

        return {
            "source": diagram_to_json(self.source),
            "target": diagram_to_json(self.target),
            "fiber_size": self.fiber_size,
            "fibers": {g: list(f) for g, f in sorted(self.fibers.items(),
                                                     key=lambda kv: sort_key(kv[0]))},
            "blocks": {
                "%s|%s" % tuple(sorted(pair, key=sort_key)): blocks
                for pair, blocks in sorted(
                    (self.block_layout or {}).items(),
                    key=lambda kv: sorted(map(sort_key, kv[0])),
                )
            },
        }


def _zigzag_edges(left, right):
    """Gamma(m) on fibers `left`, `right` of equal size m-1: the two
    alternating paths left[0]-right[1]-left[2]-... and right[0]-left[1]-..."""
    k = len(left)
    edges = []
    for start in (0, 1):
        path = []
        for i in range(k):
            path.append(left[i] if (i + start) % 2 == 0 else right[i])
        for a, b in zip(path, path[1:]):
            edges.append((a, b))
    return edges


def build_folded(diagram):
    """Fold a connected diagram with finite labels into small type."""
    comps = irreducible_components(diagram)
    if len(comps) != 1:
        raise DiagramError("folding needs a connected diagram")
    if diagram.has_infinite_label():
        raise DiagramError("folding needs finite labels")
    labels = [m for _, _, m in diagram.edges()]
    n = lcm(*[m - 1 for m in labels]) if labels else 1

    fibers = {
        g: tuple("%s~%d" % (g, i) for i in range(1, n + 1))
        for g in diagram.vertices
    }
    vertices = tuple(v for g in sorted(diagram.vertices, key=sort_key)
                     for v in fibers[g])
    new_labels = {}
    layout = {}
    for a, b, m in diagram.edges():
        block = m - 1
        blocks = []
        for j in range(n // block):
            lo = j * block
            blocks.append(list(range(lo + 1, lo + block + 1)))
            left = fibers[a][lo:lo + block]
            right = fibers[b][lo:lo + block]
            for x, y in _zigzag_edges(left, right):
                new_labels[frozenset((x, y))] = 3
        layout[frozenset((a, b))] = blocks
    fold = FoldedDiagram(diagram, CoxeterDiagram(vertices, new_labels),
                         fibers, n, layout)
    _validate_fold(fold)
    return fold


def _validate_fold(fold):
    src, tgt = fold.source, fold.target
    for g in src.vertices:
        fib = fold.fibers[g]
        assert len(fib) == fold.fiber_size
        for i, x in enumerate(fib):
            for y in fib[i + 1:]:
                assert tgt.m(x, y) == 2, "edge inside a fiber"
    for a in src.vertices:
        for b in src.vertices:
            if sort_key(a) >= sort_key(b):
                continue
            m = src.m(a, b)
            cross = [
                (x, y)
                for x in fold.fibers[a]
                for y in fold.fibers[b]
                if tgt.m(x, y) != 2
            ]
            if m == 2:
                assert not cross, "fibers of commuting generators must not touch"
            else:
                # the induced graph on the two fibers must be exactly
                # N/(m-1) copies of Gamma(m), i.e. 2N/(m-1) paths of type A_(m-1)
                pair = set(fold.fibers[a]) | set(fold.fibers[b])
                sub = tgt.induced(pair)
                comps = irreducible_components(sub)
                assert len(comps) == 2 * fold.fiber_size // (m - 1)
                for c in comps:
                    ct = finite_type(sub, c)
                    assert ct.is_spherical and ct.components[0].family == "A"
                    assert ct.components[0].rank == m - 1


def psi_word(fold, word):
    """Image of an Artin word: each letter becomes its whole fiber."""
    out = []
    for g, e in word:
        if g not in fold.fibers:
            raise DiagramError("unknown generator %r" % (g,))
        fib = fold.fibers[g]  # fiber letters pairwise commute
        if e >= 0:
            out.extend((x, 1) for x in fib for _ in range(e))
        else:
            out.extend((x, -1) for x in fib for _ in range(-e))
    return out


def component_subsets(fold, subset=None):
    """Connected components of the preimage of `subset` in the fold target."""
    pre = fold.preimage(subset if subset is not None else fold.source.vertices)
    return irreducible_components(fold.target, pre)


def f_word(fold, raag_word, source_names=None):
    """Image of a word of RA(source) in RA(target): z_T becomes the product
    of the z's of the irreducible components of the preimage of T."""
    if source_names is None:
        from .nerve import subdivision

        source_names = subdivision(fold.source).vertex_subsets
    out = []
    for name, exp in raag_word:
        subset = source_names[name]
        comps = component_subsets(fold, subset)
        for c in comps:
            if not finite_type(fold.target, c).is_spherical:
                raise AssertionError(
                    "component %s of a spherical preimage is not spherical"
                    % sorted(c)
                )
        for c in comps:
            out.append((subset_name(c), exp))
    return out


@dataclass(frozen=True)
class ComponentReport:
    subset: frozenset
    tag: str
    coxeter_number: int


def component_report(fold):
    """Type and Coxeter number of every component of the fold target.

    Each component's Coxeter number must equal that of the source system.
    """
    src_report = finite_type(fold.source)
    if not src_report.is_spherical or len(src_report.components) != 1:
        raise DiagramError("component report needs an irreducible spherical source")
    h_src = src_report.components[0].coxeter_number
    out = []
    for comp in irreducible_components(fold.target):
        rep = finite_type(fold.target, comp)
        if not rep.is_spherical:
            raise AssertionError("fold produced a non-spherical component")
        ct = rep.components[0]
        if ct.coxeter_number != h_src:
            raise AssertionError(
                "component %s has Coxeter number %d, source has %d"
                % (ct.tag, ct.coxeter_number, h_src)
            )
        out.append(ComponentReport(comp, ct.tag, ct.coxeter_number))
    out.sort(key=lambda r: sorted(map(sort_key, r.subset)))
    return out
