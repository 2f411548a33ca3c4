"""Finite Coxeter groups as permutation groups on their root systems.

Elements are permutations of the root index set; all coordinates are exact
(rationals, extended by sqrt(5) for the H family).  Rank-2 components use a
closed-form dihedral action on root indices, so arbitrary I_2(p) needs no
per-p table.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .diagram import (
    DiagramError,
    finite_type,
    sort_key,
)


class Sqrt5(object):
    """Exact element a + b*sqrt(5) of the quadratic ring containing the
    golden ratio; supports ring ops, exact division and sign comparison."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __add__(self, other):
        other = _lift(other)
        return Sqrt5(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        return Sqrt5(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        return Sqrt5(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift(other)
        d = other.a * other.a - 5 * other.b * other.b
        if d == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 5)")
        return self * Sqrt5(other.a / d, -other.b / d)

    def __neg__(self):
        return Sqrt5(-self.a, -self.b)

    def __eq__(self, other):
        other = _lift(other)
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def sign(self):
        a, b = self.a, self.b
        if b == 0:
            return -1 if a < 0 else (0 if a == 0 else 1)
        if a == 0:
            return -1 if b < 0 else 1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with 5 b^2, the sign follows the larger
        big_a = a * a > 5 * b * b
        return (1 if a > 0 else -1) if big_a else (1 if b > 0 else -1)

    def __lt__(self, other):
        return (self - _lift(other)).sign() < 0

    def __le__(self, other):
        return (self - _lift(other)).sign() <= 0

    def __gt__(self, other):
        return (self - _lift(other)).sign() > 0

    def __ge__(self, other):
        return (self - _lift(other)).sign() >= 0

    def __repr__(self):
        return "Sqrt5(%s, %s)" % (self.a, self.b)


def _lift(x):
    return x if isinstance(x, Sqrt5) else Sqrt5(x)


GOLDEN_HALF = Sqrt5(Fraction(1, 4), Fraction(1, 4))  # cos(pi/5)


def _dot(u, v):
    s = u[0] * v[0]
    for x, y in zip(u[1:], v[1:]):
        s = s + x * y
    return s


class _ComponentModel(object):
    """Root permutation model of one irreducible component.

    Local root indices: 0..n_pos-1 the positive roots, i + n_pos their
    negatives.  simple_perms maps each generator name to its permutation.
    """

    def __init__(self, ctype, n_pos, simple_perms, reflection_perms):
        self.ctype = ctype
        self.n_pos = n_pos
        self.simple_perms = simple_perms
        self.reflection_perms = reflection_perms  # per positive root


def _vector_model(ctype, simple_vectors, inner=_dot):
    """Close the root set under reflections and return the component model.

    Tracks each root's expansion in the simple basis; a root is positive
    exactly when its expansion coefficients are all >= 0.
    """
    rank = len(simple_vectors)
    norms = [inner(a, a) for a in simple_vectors]
    unit = []
    for i in range(rank):
        e = [Fraction(0)] * rank
        e[i] = Fraction(1)
        unit.append(tuple(e))

    def reflect(i, vec, exp):
        c = 2 * inner(simple_vectors[i], vec) / norms[i]
        new_vec = tuple(x - c * a for x, a in zip(vec, simple_vectors[i]))
        new_exp = tuple(x - c if j == i else x for j, x in enumerate(exp))
        return new_vec, new_exp

    roots = {}
    queue = list(zip(simple_vectors, unit))
    for vec, exp in queue:
        roots[vec] = exp
    while queue:
        vec, exp = queue.pop()
        for i in range(rank):
            nv, ne = reflect(i, vec, exp)
            if nv not in roots:
                roots[nv] = ne
                queue.append((nv, ne))

    def expansion_sign(exp):
        neg = any((x.sign() if isinstance(x, Sqrt5) else (1 if x > 0 else -1 if x < 0 else 0)) < 0 for x in exp if x != 0)
        return -1 if neg else 1

    def exp_key(exp):
        out = []
        for x in exp:
            if isinstance(x, Sqrt5):
                out.append((float(x.a) + float(x.b) * 5 ** 0.5, str(x.a), str(x.b)))
            else:
                out.append((float(x), str(x), ""))
        return tuple(out)

    positives = sorted(
        (vec for vec, exp in roots.items() if expansion_sign(exp) > 0),
        key=lambda v: exp_key(roots[v]),
    )
    n_pos = len(positives)
    assert 2 * n_pos == len(roots), "root set not symmetric"
    assert n_pos == ctype.reflection_count, (
        "unexpected root count for %s: %d" % (ctype.tag, n_pos)
    )
    index = {}
    for i, vec in enumerate(positives):
        index[vec] = i
        index[tuple(-x for x in vec)] = i + n_pos
    ordered = positives + [tuple(-x for x in vec) for vec in positives]

    def perm_of_reflection(mirror):
        nrm = inner(mirror, mirror)
        out = []
        for vec in ordered:
            c = 2 * inner(mirror, vec) / nrm
            out.append(index[tuple(x - c * a for x, a in zip(vec, mirror))])
        return tuple(out)

    simple_perms = {
        g: perm_of_reflection(simple_vectors[i]) for i, g in enumerate(ctype.order)
    }
    reflection_perms = [perm_of_reflection(vec) for vec in positives]
    return _ComponentModel(ctype, n_pos, simple_perms, reflection_perms)


def _dihedral_model(ctype, p):
    """I_2(p) on root indices: rays at angle k*pi/p, k mod 2p, positives k < p."""
    n = 2 * p

    def perm(f):
        return tuple(f(j) % n for j in range(n))

    s_name, t_name = ctype.order
    simple_perms = {
        s_name: perm(lambda j: p - j),
        t_name: perm(lambda j: p - 2 - j),
    }
    # reflection across the line perpendicular to beta_k
    reflection_perms = [perm(lambda j, k=k: 2 * k + p - j) for k in range(p)]
    return _ComponentModel(ctype, p, simple_perms, reflection_perms)


def _rank1_model(ctype):
    (g,) = ctype.order
    return _ComponentModel(ctype, 1, {g: (1, 0)}, [(1, 0)])


def _e8_simple_vectors():
    half = Fraction(1, 2)
    a1 = (half, -half, -half, -half, -half, -half, -half, half)
    a2 = tuple(Fraction(x) for x in (1, 1, 0, 0, 0, 0, 0, 0))
    rest = []
    for i in range(6):
        v = [Fraction(0)] * 8
        v[i] = Fraction(-1)
        v[i + 1] = Fraction(1)
        rest.append(tuple(v))
    # Bourbaki alpha_3..alpha_8 are e_{i+1} - e_i for i = 1..6
    return a1, a2, rest


def _build_component(ctype):
    fam, n = ctype.family, ctype.rank
    if n == 1:
        return _rank1_model(ctype)
    if n == 2:
        p = {"A": 3, "B": 4, "H": 5, "G": 6}.get(fam, ctype.p)
        return _dihedral_model(ctype, p)
    if fam == "A":
        vs = []
        for i in range(n):
            v = [Fraction(0)] * (n + 1)
            v[i] = Fraction(1)
            v[i + 1] = Fraction(-1)
            vs.append(tuple(v))
        return _vector_model(ctype, vs)
    if fam == "B":
        vs = []
        for i in range(n - 1):
            v = [Fraction(0)] * n
            v[i] = Fraction(1)
            v[i + 1] = Fraction(-1)
            vs.append(tuple(v))
        last = [Fraction(0)] * n
        last[n - 1] = Fraction(1)
        vs.append(tuple(last))
        return _vector_model(ctype, vs)
    if fam == "D":
        vs = []
        for i in range(n - 1):
            v = [Fraction(0)] * n
            v[i] = Fraction(1)
            v[i + 1] = Fraction(-1)
            vs.append(tuple(v))
        last = [Fraction(0)] * n
        last[n - 2] = Fraction(1)
        last[n - 1] = Fraction(1)
        vs.append(tuple(last))
        return _vector_model(ctype, vs)
    if fam == "E":
        a1, a2, rest = _e8_simple_vectors()
        chain = [a1] + rest[: n - 2]
        return _vector_model(ctype, chain + [a2])
    if fam == "F":
        f = Fraction
        vs = [
            (f(0), f(1), f(-1), f(0)),
            (f(0), f(0), f(1), f(-1)),
            (f(0), f(0), f(0), f(1)),
            (f(1, 2), f(-1, 2), f(-1, 2), f(-1, 2)),
        ]
        return _vector_model(ctype, vs)
    if fam == "H":
        # geometric representation over Q(sqrt 5), basis = simple roots
        one = Sqrt5(1)
        zero = Sqrt5(0)
        gram = [[one if i == j else zero for j in range(n)] for i in range(n)]

        def set_pair(i, j, val):
            gram[i][j] = val
            gram[j][i] = val

        set_pair(0, 1, -GOLDEN_HALF)
        for i in range(1, n - 1):
            set_pair(i, i + 1, Sqrt5(Fraction(-1, 2)))

        def inner(u, v):
            s = zero
            for i, x in enumerate(u):
                if x == zero:
                    continue
                for j, y in enumerate(v):
                    if y == zero:
                        continue
                    s = s + x * gram[i][j] * y
            return s

        basis = []
        for i in range(n):
            v = [zero] * n
            v[i] = one
            basis.append(tuple(v))
        return _vector_model(ctype, basis, inner)
    raise DiagramError("no root model for %s" % ctype.tag)


_MODEL_CACHE = {}


def _component_model(ctype):
    key = (ctype.family, ctype.rank, ctype.p)
    if key not in _MODEL_CACHE:
        anon = ctype.__class__(ctype.family, ctype.rank,
                               tuple(range(ctype.rank)), ctype.p)
        _MODEL_CACHE[key] = _build_component(anon)
    model = _MODEL_CACHE[key]
    # re-key the cached generator permutations by this component's names
    simple_perms = {
        name: model.simple_perms[i] for i, name in enumerate(ctype.order)
    }
    return _ComponentModel(ctype, model.n_pos, simple_perms, model.reflection_perms)


class WGroup(object):
    """A finite Coxeter group acting on its root index set.

    Elements are tuples: position i holds the image of root i.  Roots
    0..n_pos-1 are positive; root i + n_pos is the negative of root i.
    """

    def __init__(self, diagram, subset=None):
        subset = tuple(sorted(diagram.vertices if subset is None else subset,
                              key=sort_key))
        report = finite_type(diagram, subset)
        if not report.is_spherical:
            raise DiagramError("subset %s is not spherical" % (list(subset),))
        self.diagram = diagram
        self.subset = subset
        self.report = report
        self.gens = subset

        self._models = [_component_model(c) for c in report.components]
        self.n_pos = sum(m.n_pos for m in self._models)
        self.size = 2 * self.n_pos

        self.identity = tuple(range(self.size))
        self._simple = {}
        self._alpha = {}
        self._reflections = [None] * self.n_pos
        self._reflection_root_comp = []
        offset = 0
        for model in self._models:
            def glob(j, off=offset, n=model.n_pos):
                return off + j if j < n else self.n_pos + off + (j - n)

            for g, perm in model.simple_perms.items():
                full = list(self.identity)
                for j, img in enumerate(perm):
                    full[glob(j)] = glob(img)
                self._simple[g] = tuple(full)
            for k, perm in enumerate(model.reflection_perms):
                full = list(self.identity)
                for j, img in enumerate(perm):
                    full[glob(j)] = glob(img)
                self._reflections[offset + k] = tuple(full)
            offset += model.n_pos

        # index of the simple root of each generator: the unique positive
        # root its reflection sends negative
        for g, perm in self._simple.items():
            sent = [i for i in range(self.n_pos) if perm[i] >= self.n_pos]
            assert len(sent) == 1
            self._alpha[g] = sent[0]

        self._inv_cache = {self.identity: self.identity}
        self._rd_cache = {}
        self._word_cache = {}
        self.w0 = self._longest()

    # -- basic permutation algebra -------------------------------------

    def compose(self, u, v):
        """u then-after v, i.e. the element acting by r -> u(v(r))."""
        return tuple(map(u.__getitem__, v))

    def inverse(self, w):
        inv = self._inv_cache.get(w)
        if inv is None:
            out = [0] * self.size
            for i, img in enumerate(w):
                out[img] = i
            inv = tuple(out)
            self._inv_cache[w] = inv
        return inv

    def mul_gen(self, w, g):
        """w * s_g (right multiplication by a generator)."""
        return self.compose(w, self._simple[g])

    def gen_mul(self, g, w):
        """s_g * w."""
        return self.compose(self._simple[g], w)

    def simple(self, g):
        return self._simple[g]

    def alpha_index(self, g):
        return self._alpha[g]

    def length(self, w):
        n = self.n_pos
        return sum(1 for i in range(n) if w[i] >= n)

    def right_descents(self, w):
        rd = self._rd_cache.get(w)
        if rd is None:
            n = self.n_pos
            rd = frozenset(g for g in self.gens if w[self._alpha[g]] >= n)
            self._rd_cache[w] = rd
        return rd

    def left_descents(self, w):
        return self.right_descents(self.inverse(w))

    def is_identity(self, w):
        return w == self.identity

    def word_to_element(self, word):
        """Product of simple reflections, letters applied left to right."""
        w = self.identity
        for g in word:
            if g not in self._simple:
                raise DiagramError("unknown generator %r" % (g,))
            w = self.mul_gen(w, g)
        return w

    def reduced_word(self, w):
        """A reduced word for w, greedy on smallest left descent."""
        cached = self._word_cache.get(w)
        if cached is not None:
            return cached
        out = []
        cur = w
        while cur != self.identity:
            g = min(self.left_descents(cur), key=sort_key)
            out.append(g)
            cur = self.gen_mul(g, cur)
        word = tuple(out)
        self._word_cache[w] = word
        return word

    def order(self, w):
        k = 1
        cur = w
        while cur != self.identity:
            cur = self.compose(cur, w)
            k += 1
        return k

    # -- distinguished elements -----------------------------------------

    def _longest(self):
        w = self.identity
        n = self.n_pos
        while True:
            up = [g for g in self.gens if w[self._alpha[g]] < n]
            if not up:
                return w
            w = self.mul_gen(w, up[0])

    def longest(self):
        return self.w0

    def coxeter_element(self, ordering=None):
        return self.word_to_element(ordering if ordering is not None else self.gens)

    def coxeter_number(self):
        return self.order(self.coxeter_element())

    def distinct_coxeter_elements(self, max_rank_exhaustive=8):
        """All Coxeter elements over generator orderings, deduplicated."""
        if len(self.gens) > max_rank_exhaustive:
            raise DiagramError("rank too large for exhaustive orderings")
        return {self.coxeter_element(p) for p in permutations(self.gens)}

    def reflections(self):
        """Reflection permutations indexed by the positive root they negate."""
        return list(self._reflections)

    def reflection_perm(self, root_index):
        return self._reflections[root_index]

    def neg(self, root_index):
        return (root_index + self.n_pos) % self.size


def build_group(diagram, subset=None):
    """WGroup for a spherical (subset of a) diagram; errors otherwise."""
    return WGroup(diagram, subset)
