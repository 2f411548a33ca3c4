"""Right-angled Artin groups on flag complexes: normal form, word problem,
Property PP search, avoidance and the generalized ping-pong certificate.

Words are syllable lists [(vertex, exponent)].  The canonical form is the
lexicographically least shuffle of the fully reduced word, so equality of
group elements is equality of canonical forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import sort_key


class RaagError(ValueError):
    pass


@dataclass(frozen=True)
class FlagComplex:
    """A flag simplicial complex, stored as its graph (simplices = cliques)."""

    vertices: tuple
    edges: frozenset  # frozenset of 2-element frozensets

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2 or not e <= set(self.vertices):
                raise RaagError("bad edge %r" % (e,))

    @staticmethod
    def build(vertices, edge_pairs):
        verts = tuple(sorted(set(vertices), key=sort_key))
        edges = frozenset(frozenset(p) for p in edge_pairs)
        return FlagComplex(verts, edges)

    def adjacent(self, a, b):
        return a != b and frozenset((a, b)) in self.edges

    def is_clique(self, vs):
        vs = list(vs)
        return all(
            self.adjacent(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]
        )

    def full_subcomplex(self, keep):
        keep = set(keep)
        unknown = keep - set(self.vertices)
        if unknown:
            raise RaagError("unknown vertices %s" % sorted(unknown))
        return FlagComplex(
            tuple(v for v in self.vertices if v in keep),
            frozenset(e for e in self.edges if e <= keep),
        )

    def degree(self, v):
        return sum(1 for e in self.edges if v in e)

    def cliques(self, max_size=None):
        """All nonempty cliques, smallest-vertex-first enumeration order."""
        order = list(self.vertices)
        out = []

        def grow(base, candidates):
            for i, v in enumerate(candidates):
                cur = base + [v]
                out.append(frozenset(cur))
                if max_size is None or len(cur) < max_size:
                    grow(cur, [w for w in candidates[i + 1:] if self.adjacent(v, w)])

        grow([], order)
        return out

    def to_json(self):
        return {
            "vertices": list(self.vertices),
            "edges": sorted(
                [sorted(e, key=sort_key) for e in self.edges],
                key=lambda p: (sort_key(p[0]), sort_key(p[1])),
            ),
        }

    def to_dot(self, name="complex"):
        lines = ["graph %s {" % name]
        for v in self.vertices:
            lines.append('  "%s";' % v)
        for a, b in self.to_json()["edges"]:
            lines.append('  "%s" -- "%s";' % (a, b))
        lines.append("}")
        return "\n".join(lines)


def complex_from_json(doc):
    return FlagComplex.build(doc["vertices"], [tuple(e) for e in doc["edges"]])


# -- words -------------------------------------------------------------------

def normalize_syllables(word):
    out = []
    for v, e in word:
        if e == 0:
            continue
        if out and out[-1][0] == v:
            m = out[-1][1] + e
            out.pop()
            if m:
                out.append((v, m))
        else:
            out.append((v, e))
    return out


def raag_inverse(word):
    return [(v, -e) for v, e in reversed(word)]


def raag_commutator(w1, w2):
    return list(w1) + list(w2) + raag_inverse(w1) + raag_inverse(w2)


def _check_letters(complex_, word):
    for v, _ in word:
        if v not in complex_.vertices:
            raise RaagError("unknown vertex %r" % (v,))


def raag_normal_form(complex_, word):
    """Canonical shortest representative of a RAAG word.

    Cancels syllables separated by commuting letters, then emits the
    lexicographically least ordering reachable by commutation moves.
    """
    _check_letters(complex_, word)
    sylls = normalize_syllables(word)

    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(sylls):
            v = sylls[i][0]
            j = i + 1
            while j < len(sylls):
                u = sylls[j][0]
                if u == v:
                    merged = sylls[i][1] + sylls[j][1]
                    del sylls[j]
                    if merged:
                        sylls[i] = (v, merged)
                    else:
                        del sylls[i]
                    changed = True
                    break
                if not complex_.adjacent(u, v):
                    break
                j += 1
            if changed:
                break
            i += 1

    # greedy least-vertex linearization of the syllable dependency order
    n = len(sylls)
    preds = [0] * n
    succs = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if sylls[i][0] == sylls[j][0] or not complex_.adjacent(sylls[i][0], sylls[j][0]):
                preds[j] += 1
                succs[i].append(j)
    ready = [i for i in range(n) if preds[i] == 0]
    out = []
    while ready:
        ready.sort(key=lambda i: (sort_key(sylls[i][0]), i))
        i = ready.pop(0)
        out.append(sylls[i])
        for j in succs[i]:
            preds[j] -= 1
            if preds[j] == 0:
                ready.append(j)
    return out


def raag_equals(complex_, w1, w2):
    return raag_normal_form(complex_, w1) == raag_normal_form(complex_, w2)


def raag_is_trivial(complex_, word):
    return not raag_normal_form(complex_, word)


def raag_commutes(complex_, w1, w2):
    return raag_equals(complex_, list(w1) + list(w2), list(w2) + list(w1))


def raag_length(complex_, word):
    return sum(abs(e) for _, e in raag_normal_form(complex_, word))


def retraction(complex_, keep, word):
    """Kill the letters outside `keep`; a retraction onto a full subcomplex."""
    keep = set(keep)
    unknown = keep - set(complex_.vertices)
    if unknown:
        raise RaagError("unknown vertices %s" % sorted(unknown))
    _check_letters(complex_, word)
    return normalize_syllables([(v, e) for v, e in word if v in keep])


def enumerate_reduced_words(complex_, max_len, skip_cyclically_reducible=False):
    """Yield every nontrivial element of length <= max_len exactly once,
    as its canonical syllable form.

    Generates only lexicographic normal forms: a syllable may be appended
    when no commuting-past earlier syllable has the same vertex (reduced)
    or a larger vertex (canonical).  Prefixes of canonical words are
    canonical, so the search tree has no dead duplicates.
    """
    verts = list(complex_.vertices)

    def may_append(word, v):
        for u, _ in reversed(word):
            if u == v:
                return False
            if not complex_.adjacent(u, v):
                return True
            if sort_key(u) > sort_key(v):
                return False
        return True

    def emit(word):
        if skip_cyclically_reducible and len(word) >= 2:
            v0, e0 = word[0]
            v1, e1 = word[-1]
            if v0 == v1 and (e0 > 0) != (e1 > 0):
                return False
        return True

    def rec(word, used):
        for v in verts:
            if not may_append(word, v):
                continue
            for mag in range(1, max_len - used + 1):
                for e in (mag, -mag):
                    word.append((v, e))
                    if emit(word):
                        yield list(word)
                    if used + mag < max_len:
                        yield from rec(word, used + mag)
                    word.pop()

    yield from rec([], 0)


# -- word systems and Property PP --------------------------------------------

@dataclass
class WordSystem:
    """Words w_sigma attached to simplices of a flag complex.

    Each nontrivial word uses a nontrivial power of every vertex of its
    simplex, with all exponents of one sign.
    """

    complex: FlagComplex
    words: dict  # frozenset simplex -> syllable list (nontrivial entries only)

    def __post_init__(self):
        clean = {}
        for simplex, word in self.words.items():
            simplex = frozenset(simplex)
            word = normalize_syllables(word)
            if not word:
                continue
            if not simplex <= set(self.complex.vertices):
                raise RaagError("simplex %s not in complex" % sorted(simplex))
            if not self.complex.is_clique(simplex):
                raise RaagError("%s is not a simplex" % sorted(simplex))
            support = {v for v, _ in word}
            if support != simplex:
                raise RaagError(
                    "word on %s must use every vertex" % sorted(simplex)
                )
            signs = {e > 0 for _, e in word}
            if len(signs) != 1:
                raise RaagError(
                    "word on %s must have all positive or all negative powers"
                    % sorted(simplex)
                )
            clean[simplex] = word
        self.words = clean

    def simplices(self):
        return sorted(self.words, key=lambda s: (len(s), sorted(map(sort_key, s))))

    def commute(self, s1, s2):
        """w_s1 and w_s2 commute iff s1 * s2 is a simplex."""
        return self.complex.is_clique(s1 | s2)

    def induced_complex(self):
        """L': one vertex per nontrivial word, edges where the words commute."""
        sims = self.simplices()
        edges = [
            (i, j)
            for i, a in enumerate(sims)
            for j, b in enumerate(sims[: i])
            if self.commute(a, b)
        ]
        return sims, edges

    def restricted(self, keep_vertices):
        keep = set(keep_vertices)
        return WordSystem(
            self.complex.full_subcomplex(keep),
            {s: w for s, w in self.words.items() if s <= keep},
        )


@dataclass(frozen=True)
class ChoiceMap:
    """A Property PP witness: simplex -> representative vertex."""

    assignment: dict

    def __getitem__(self, simplex):
        return self.assignment[frozenset(simplex)]

    def items(self):
        return self.assignment.items()

    def to_json(self):
        return {
            "+".join(sorted(s, key=sort_key)): v
            for s, v in sorted(
                self.assignment.items(),
                key=lambda kv: sorted(map(sort_key, kv[0])),
            )
        }


def _pp_consistent(system, sims, chosen, i):
    """Chosen vertices so far must reproduce commutation exactly."""
    a = sims[i]
    va = chosen[a]
    for j in range(i):
        b = sims[j]
        vb = chosen[b]
        if va == vb:
            return False
        commute = system.commute(a, b)
        if commute != system.complex.adjacent(va, vb):
            return False
    return True


def pp_search_all(system, order=None):
    """Yield every valid Property PP choice map (exhaustive backtracking)."""
    sims = system.simplices()
    if order is None:
        deg = {}
        for i, a in enumerate(sims):
            deg[a] = sum(1 for b in sims if b != a and system.commute(a, b))
        sims = sorted(sims, key=lambda s: (-deg[s], sorted(map(sort_key, s))))
    chosen = {}

    def rec(i):
        if i == len(sims):
            yield ChoiceMap(dict(chosen))
            return
        simplex = sims[i]
        for v in sorted(simplex, key=sort_key):
            chosen[simplex] = v
            if _pp_consistent(system, sims, chosen, i):
                yield from rec(i + 1)
            del chosen[simplex]

    yield from rec(0)


def pp_search(system):
    """First Property PP choice map, or None when none exists."""
    for cm in pp_search_all(system):
        return cm
    return None


def validate_choice(system, choice):
    """Check a candidate map satisfies Property PP; returns list of defects."""
    sims = system.simplices()
    defects = []
    for s in sims:
        v = choice.assignment.get(s)
        if v is None:
            defects.append("no choice for %s" % sorted(s))
        elif v not in s:
            defects.append("choice for %s is not one of its vertices" % sorted(s))
    seen = {}
    for s in sims:
        v = choice.assignment.get(s)
        if v in seen:
            defects.append("choice %r reused" % (v,))
        seen[v] = s
    for i, a in enumerate(sims):
        for b in sims[:i]:
            va, vb = choice.assignment.get(a), choice.assignment.get(b)
            if va is None or vb is None:
                continue
            if system.commute(a, b) != system.complex.adjacent(va, vb):
                defects.append(
                    "pair %s / %s breaks PP" % (sorted(a), sorted(b))
                )
    return defects


def avoidance_check(system, l0_vertices, choice):
    """Both conditions for the choice map to avoid the subcomplex on l0."""
    l0 = set(l0_vertices)
    unknown = l0 - set(system.complex.vertices)
    if unknown:
        raise RaagError("unknown vertices %s" % sorted(unknown))
    sims = system.simplices()
    for s in sims:
        if s <= l0:
            continue
        v = choice.assignment[s]
        if v in l0:
            return False
        for t in sims:
            if t != s and v in t:
                return False
    return True


@dataclass(frozen=True)
class PPVerdict:
    certified: bool
    reason: str
    choice: ChoiceMap | None = None
    split: tuple | None = None  # (choice1, choice2) for a certified split
    conclusion: str = ""


def _describe_subgroup(system):
    sims, edges = system.induced_complex()
    n, m = len(sims), len(edges)
    if m == 0:
        shape = "free of rank %d" % n
    elif m == n * (n - 1) // 2:
        shape = "free abelian of rank %d" % n
    else:
        shape = "RAAG on %d vertices and %d edges" % (n, m)
    return "subgroup generated by the words is %s" % shape


def generalized_pp_check(system, l1_vertices, l2_vertices):
    """Certify the generalized ping-pong condition over L = L1 union L2.

    Requires every edge of L to lie in L1 or L2; searches all PP choices
    per side for one avoiding L0 = L1 cap L2.
    """
    l1, l2 = set(l1_vertices), set(l2_vertices)
    all_vs = set(system.complex.vertices)
    if l1 | l2 != all_vs:
        raise RaagError("L1 and L2 must cover the vertex set")
    for e in system.complex.edges:
        if not (e <= l1 or e <= l2):
            raise RaagError("edge %s lies in neither part" % sorted(e))
    l0 = l1 & l2

    sides = []
    for li in (l1, l2):
        sub = system.restricted(li)
        found = None
        for cm in pp_search_all(sub):
            if avoidance_check(sub, l0 & li, cm):
                found = cm
                break
        if found is None:
            return PPVerdict(
                False,
                "no PP choice avoiding the intersection on side %s"
                % sorted(li, key=sort_key),
            )
        sides.append(found)
    return PPVerdict(
        True,
        "each side satisfies PP avoiding the intersection",
        split=tuple(sides),
        conclusion=_describe_subgroup(system),
    )


# -- bounded injectivity certificates ----------------------------------------

@dataclass
class InjectivityReport:
    ok: bool
    words_checked: int
    slow_path_checked: int
    violation: list | None = None
    detail: str = ""


def verify_injectivity_bounded(
    complex_, images, target_is_trivial, max_len,
    commute_check=None, abelian_certificate=None,
):
    """Certify no nontrivial word of length <= max_len dies in the target.

    `images` maps each vertex to a target word; `target_is_trivial` decides
    triviality of a substituted word.  `commute_check(w1, w2)` is used first
    on every commuting generator pair (the homomorphism precondition).
    When `abelian_certificate` is true, words with a nonzero exponent-sum
    vector are accepted without calling the target: the generator images
    were proven independent in the target's abelianization.
    """
    missing = [v for v in complex_.vertices if v not in images]
    if missing:
        raise RaagError("no image for vertices %s" % missing)
    if commute_check is not None:
        for e in complex_.edges:
            a, b = sorted(e, key=sort_key)
            if not commute_check(images[a], images[b]):
                return InjectivityReport(
                    False, 0, 0, [(a, 1), (b, 1)],
                    "images of commuting pair %s,%s do not commute" % (a, b),
                )

    checked = 0
    slow = 0
    for word in enumerate_reduced_words(
        complex_, max_len, skip_cyclically_reducible=True
    ):
        checked += 1
        if abelian_certificate:
            sums = {}
            for v, e in word:
                sums[v] = sums.get(v, 0) + e
            if any(sums.values()):
                continue
        slow += 1
        substituted = []
        for v, e in word:
            img = images[v]
            if e > 0:
                substituted.extend(list(img) * e)
            else:
                inv = [(g, -x) for g, x in reversed(img)]
                substituted.extend(inv * (-e))
        if target_is_trivial(substituted):
            return InjectivityReport(
                False, checked, slow, word, "nontrivial word maps to identity"
            )
    return InjectivityReport(True, checked, slow, None, "no violation")
