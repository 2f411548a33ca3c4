"""The abelianization of the pure Artin group: Z^R via signed hyperplane
crossings, linear independence certificates, and the dihedral audit that the
image of a short pure word misses a longest hyperplane."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import DiagramError, type_diagram
from .wgroup import build_group


@dataclass(frozen=True)
class H1Vector:
    """Finitely supported vector over the reflection basis e_r.

    Coordinates are keyed by the positive root index of the reflection.
    """

    coeffs: tuple  # sorted tuple of (root_index, coefficient)

    @staticmethod
    def from_dict(d):
        return H1Vector(tuple(sorted((r, c) for r, c in d.items() if c)))

    def as_dict(self):
        return dict(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        d = self.as_dict()
        for r, c in other.coeffs:
            d[r] = d.get(r, 0) + c
        return H1Vector.from_dict(d)

    def __neg__(self):
        return H1Vector(tuple((r, -c) for r, c in self.coeffs))

    def coefficient(self, root_index):
        return self.as_dict().get(root_index, 0)


def projection(group, word):
    """Image of an Artin word in W (both signs of a letter map to s)."""
    w = group.identity
    for g, e in word:
        if g not in group._simple:
            raise DiagramError("unknown generator %r" % (g,))
        if e % 2:
            w = group.mul_gen(w, g)
    return w


def is_pure(group, word):
    """True iff the word lies in the kernel of A -> W."""
    return projection(group, word) == group.identity


def h1_image(group, word):
    """Class of a pure Artin word in H_1 of the pure Artin group.

    Walks the word letter by letter; the letter x_s^(+-1) after a prefix
    mapping to w crosses the hyperplane of the reflection w s w^-1, i.e.
    the one keyed by the positive root w(alpha_s).  Every hyperplane is
    crossed an even number of times for a pure word, and the class is
    half of the accumulated signed count.
    """
    if not is_pure(group, word):
        raise DiagramError("word is not pure")
    n = group.n_pos
    acc = {}
    prefix = group.identity
    for g, e in word:
        step = 1 if e > 0 else -1
        for _ in range(abs(e)):
            root = prefix[group.alpha_index(g)] % n
            acc[root] = acc.get(root, 0) + step
            prefix = group.mul_gen(prefix, g)
    for r, c in acc.items():
        if c % 2:
            raise AssertionError(
                "odd crossing count on hyperplane %d for a pure word" % r
            )
    return H1Vector.from_dict({r: c // 2 for r, c in acc.items()})


def integer_rank(rows):
    """Rank over Q of integer row vectors (exact Gaussian elimination)."""
    mat = [[Fraction(x) for x in row] for row in rows if any(row)]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for col in range(cols):
        pivot = None
        for i in range(rank, len(mat)):
            if mat[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                f = mat[i][col] / pv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def independence_check(group, words):
    """True iff the H1 images of the given pure words are Z-independent."""
    vectors = [h1_image(group, w) for w in words]
    support = sorted({r for v in vectors for r, _ in v.coeffs})
    idx = {r: i for i, r in enumerate(support)}
    rows = []
    for v in vectors:
        row = [0] * len(support)
        for r, c in v.coeffs:
            row[idx[r]] = c
        rows.append(row)
    return integer_rank(rows) == len(words)


def reflection_label(group, root_index):
    """Reduced word of the reflection negating the given positive root."""
    return "".join(group.reduced_word(group.reflection_perm(root_index)))


def longest_hyperplane_indices(m):
    """Root indices of the longest hyperplane(s) in the dihedral model.

    One middle root when m is odd, the two middle roots when m is even.
    """
    if m % 2:
        return ((m - 1) // 2,)
    return (m // 2 - 1, m // 2)


@dataclass
class AuditReport:
    ok: bool
    words_scanned: int
    pure_words: int
    failures: list


def longest_hyperplane_audit(m, max_syllables=None, exponent_bound=3):
    """Exhaustively check that pure dihedral words of syllable length < m
    have an H1 image missing a longest hyperplane.

    This is exactly the inductive claim inside the dihedral distance
    proposition; failures are collected and reported loudly.
    """
    if m < 3:
        raise DiagramError("dihedral audit needs m >= 3")
    limit = (m - 1) if max_syllables is None else min(max_syllables, m - 1)
    group = build_group(type_diagram("I", 2, m))
    s, t = group.gens
    longest = longest_hyperplane_indices(m)

    exps = [e for e in range(-exponent_bound, exponent_bound + 1) if e]
    words = [[]]
    scanned = 0
    pure = 0
    failures = []

    def extend(word, remaining, last):
        nonlocal scanned, pure
        scanned += 1
        if word and is_pure(group, word):
            pure += 1
            vec = h1_image(group, word)
            if all(vec.coefficient(r) for r in longest):
                failures.append(list(word))
        if remaining == 0:
            return
        for g in (s, t):
            if g == last:
                continue
            for e in exps:
                word.append((g, e))
                extend(word, remaining - 1, g)
                word.pop()

    extend([], limit, None)
    return AuditReport(not failures, scanned, pure, failures)
