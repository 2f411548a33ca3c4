import random

import pytest

from coxart.diagram import parse_diagram, type_diagram
from coxart.garside import (
    ArtinEngine,
    BudgetExceeded,
    delta_power,
    delta_word,
    inverse_word,
    parse_word,
    word_length,
)
from coxart.wgroup import build_group

A2 = parse_diagram("vertex s; vertex t; edge s t 3")


@pytest.fixture(scope="module")
def a2_engine():
    return ArtinEngine(build_group(A2))


def test_parse_word_syntax():
    assert parse_word("s^2 t^-2 s") == [("s", 2), ("t", -2), ("s", 1)]
    assert parse_word("") == []


def test_sigma_lift_identity_and_generator(a2_engine):
    eng = a2_engine
    assert eng.sigma_lift(eng.w.identity) == []
    g = eng.w.gens[0]
    assert eng.sigma_lift(eng.w.simple(g)) == [(g, 1)]


def test_sigma_lift_longest_is_delta(a2_engine):
    eng = a2_engine
    lift = eng.sigma_lift(eng.w.w0)
    nf = eng.normal_form(lift)
    assert nf.inf == 1 and nf.canon == ()
    # both reduced words of the longest element are the same group element
    assert eng.equals(parse_word("s t s"), parse_word("t s t"))


def test_braid_relation_trivial_word(a2_engine):
    assert a2_engine.is_trivial(parse_word("s t s t^-1 s^-1 t^-1"))


def test_delta_squared_two_positive_forms(a2_engine):
    delta_sq = delta_word(A2, A2.vertices, 2)
    assert a2_engine.equals(delta_sq, parse_word("s t^2 s t^2"))
    assert a2_engine.equals(delta_sq, parse_word("t^2 s t^2 s"))


def test_i24_braid_relation():
    d = type_diagram("I", 2, 4)
    eng = ArtinEngine(build_group(d))
    nf1 = eng.normal_form(parse_word("s1 s2 s1 s2"))
    nf2 = eng.normal_form(parse_word("s2 s1 s2 s1"))
    assert nf1 == nf2
    assert nf1.inf == 1 and nf1.canon == ()


def test_equals_examples(a2_engine):
    eng = a2_engine
    assert eng.equals(parse_word("s^2"), parse_word("s^2"))
    assert not eng.equals(parse_word("s^2 t^2"), parse_word("t^2 s^2"))
    delta_sq = delta_word(A2, A2.vertices, 2)
    assert eng.equals(delta_sq + [("s", 1)], [("s", 1)] + delta_sq)


def test_commutes_examples():
    d = parse_diagram("vertex s; vertex t; vertex u; edge s t 3; edge t u 3")
    eng = ArtinEngine(build_group(d))
    assert eng.commutes(parse_word("s^2"), parse_word("u^2"))
    assert not eng.commutes(parse_word("s^2"), parse_word("t^2"))


def test_delta_power_rank1():
    d = type_diagram("A", 3)
    assert delta_power(d, ("s1",), 4) == [("s1", 1)] * 4


def test_delta_power_a2_length_and_value(a2_engine):
    word = delta_power(A2, ("s", "t"), 2)
    assert word_length(word) == 6
    assert a2_engine.equals(word, parse_word("s t") * 3)


def test_delta_power_requires_irreducible():
    d = type_diagram("A", 3)
    with pytest.raises(Exception):
        delta_power(d, ("s1", "s3"), 2)


def test_delta_power_braid_subgroup_central():
    # Delta^2 of the 5-strand braid subgroup is central in that subgroup
    d = type_diagram("A", 7)
    subset = ("s1", "s2", "s3", "s4")
    word = delta_power(d, subset, 2)
    eng = ArtinEngine(build_group(d, subset))
    for g in subset:
        assert eng.commutes(word, [(g, 1)])


def test_negative_letters_and_inverses(a2_engine):
    eng = a2_engine
    w = parse_word("s t^-2 s^3 t")
    assert eng.is_trivial(w + inverse_word(w))
    nf = eng.normal_form(parse_word("t^-1"))
    assert nf.inf == -1 and len(nf.canon) == 1


def test_round_trip_random_words(a2_engine):
    rng = random.Random(7)
    eng = a2_engine
    gens = list(A2.vertices)
    for _ in range(60):
        word = [(rng.choice(gens), rng.choice((-2, -1, 1, 2))) for _ in range(7)]
        nf = eng.normal_form(word)
        back = delta_word(A2, A2.vertices, nf.inf)
        for simple in nf.canon:
            back = back + [(g, 1) for g in eng.w.reduced_word(simple)]
        assert eng.normal_form(back) == nf


def test_canonical_form_is_left_weighted(a2_engine):
    rng = random.Random(11)
    eng = a2_engine
    group = eng.w
    gens = list(A2.vertices)
    for _ in range(40):
        word = [(rng.choice(gens), 1) for _ in range(9)]
        nf = eng.normal_form(word)
        assert all(u != group.identity and u != group.w0 for u in nf.canon)
        for u, v in zip(nf.canon, nf.canon[1:]):
            assert group.left_descents(v) <= group.right_descents(u)


def test_delta_conjugation_sends_generators_to_generators():
    for fam, n, p in (("A", 3, None), ("B", 3, None), ("I", 2, 5)):
        d = type_diagram(fam, n, p)
        eng = ArtinEngine(build_group(d))
        delta = delta_word(d, d.vertices, 1)
        for g in d.vertices:
            image = eng.tau_generator(g)
            assert eng.equals(
                inverse_word(delta) + [(g, 1)] + delta, [(image, 1)]
            )


def test_budget_guard():
    eng = ArtinEngine(build_group(A2), budget=10)
    with pytest.raises(BudgetExceeded):
        eng.normal_form([("s", 6), ("t", 6)])
    assert eng.normal_form([("s", 5)]).canonical_length == 5


# -- brute-force oracle: positive-word equality in the dihedral Artin monoid --
#
# Positive words are equal in the Artin group iff they lie in the same orbit
# under braid-relation replacements (the monoid embeds for spherical type).
# The orbit enumeration is independent of the Garside machinery.

def _alt(a, b, m):
    return tuple((a, b)[i % 2] for i in range(m))


def _braid_orbit(word, s, t, m, cap=200000):
    lhs, rhs = _alt(s, t, m), _alt(t, s, m)
    seen = {word}
    stack = [word]
    while stack:
        w = stack.pop()
        for i in range(len(w) - m + 1):
            seg = w[i:i + m]
            if seg == lhs:
                new = w[:i] + rhs + w[i + m:]
            elif seg == rhs:
                new = w[:i] + lhs + w[i + m:]
            else:
                continue
            if new not in seen:
                if len(seen) > cap:
                    raise RuntimeError("orbit cap exceeded")
                seen.add(new)
                stack.append(new)
    return seen


@pytest.mark.parametrize("m", (3, 4, 5))
def test_equals_agrees_with_rewriting_oracle(m):
    from itertools import product

    d = type_diagram("I", 2, m)
    eng = ArtinEngine(build_group(d))
    s, t = d.vertices
    words = [w for length in range(9) for w in product((s, t), repeat=length)]
    # the orbit of a positive word under braid replacements is its whole
    # equivalence class; words are equal iff they share an orbit
    rep = {}
    for w in words:
        if w in rep:
            continue
        orbit = _braid_orbit(w, s, t, m)
        canon = min(orbit)
        for member in orbit:
            rep[member] = canon
    engine_nf = {w: eng.normal_form([(g, 1) for g in w]) for w in words}
    for w1 in words:
        for w2 in words:
            oracle = rep[w1] == rep[w2]
            assert (engine_nf[w1] == engine_nf[w2]) == oracle, (m, w1, w2)


def test_delta_squared_central_e7_restricted():
    # the restricted large-type check: Delta^2 commutes with every generator
    d = type_diagram("E", 7)
    eng = ArtinEngine(build_group(d))
    delta_sq = delta_word(d, d.vertices, 2)
    for g in d.vertices:
        assert eng.commutes(delta_sq, [(g, 1)])


# -- property tests ----------------------------------------------------------

from hypothesis import given, settings, strategies as st

_letters = st.lists(
    st.tuples(st.sampled_from(("s", "t")), st.sampled_from((-2, -1, 1, 2))),
    max_size=6,
)


@settings(max_examples=60, deadline=None, derandomize=True)
@given(_letters)
def test_word_times_inverse_is_trivial(word):
    eng = ArtinEngine(build_group(A2))
    assert eng.is_trivial(list(word) + inverse_word(word))


@settings(max_examples=60, deadline=None, derandomize=True)
@given(_letters, _letters)
def test_equals_is_a_congruence(w1, w2):
    eng = ArtinEngine(build_group(A2))
    # appending the same tail preserves equality/inequality
    tail = [("t", 1), ("s", -1)]
    assert eng.equals(list(w1), list(w2)) == eng.equals(
        list(w1) + tail, list(w2) + tail
    )


@pytest.mark.parametrize("spec", ("type A 3", "type B 3", "type I 2 6"))
def test_round_trip_across_types(spec):
    d = parse_diagram(spec)
    eng = ArtinEngine(build_group(d))
    rng = random.Random(13)
    gens = list(d.vertices)
    for _ in range(25):
        word = [(rng.choice(gens), rng.choice((-2, -1, 1, 2))) for _ in range(6)]
        nf = eng.normal_form(word)
        back = delta_word(d, d.vertices, nf.inf)
        for simple in nf.canon:
            back = back + [(g, 1) for g in eng.w.reduced_word(simple)]
        assert eng.normal_form(back) == nf
        for u, v in zip(nf.canon, nf.canon[1:]):
            assert eng.w.left_descents(v) <= eng.w.right_descents(u)


# -- independent oracle: the reduced Burau representation of the 3-strand
# braid group, faithful for this group, over exact Laurent polynomials ----

def _lp(d=None):
    return {k: v for k, v in (d or {}).items() if v}


def _lp_add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
        if not out[k]:
            del out[k]
    return out


def _lp_mul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            k = i + j
            out[k] = out.get(k, 0) + x * y
            if not out[k]:
                del out[k]
    return out


def _mat_mul(p, q):
    return tuple(
        tuple(
            _lp_add(_lp_mul(p[i][0], q[0][j]), _lp_mul(p[i][1], q[1][j]))
            for j in range(2)
        )
        for i in range(2)
    )


def _freeze(m):
    return tuple(tuple(tuple(sorted(e.items())) for e in row) for row in m)


def test_equals_matches_burau_on_signed_words():
    one, zero, tt = _lp({0: 1}), _lp(), _lp({1: 1})
    tinv, neg_t, neg_tinv = _lp({-1: 1}), _lp({1: -1}), _lp({-1: -1})
    burau = {
        ("s", 1): ((neg_t, one), (zero, one)),
        ("t", 1): ((one, zero), (tt, neg_t)),
        ("s", -1): ((neg_tinv, tinv), (zero, one)),
        ("t", -1): ((one, zero), (one, neg_tinv)),
    }
    ident = ((one, zero), (zero, one))
    for key in (("s", 1), ("t", 1)):
        inv = (key[0], -1)
        assert _freeze(_mat_mul(burau[key], burau[inv])) == _freeze(ident)

    def burau_of(word):
        m = ident
        for g, e in word:
            step = burau[(g, 1 if e > 0 else -1)]
            for _ in range(abs(e)):
                m = _mat_mul(m, step)
        return _freeze(m)

    eng = ArtinEngine(build_group(A2))
    rng = random.Random(21)
    gens = list(A2.vertices)
    words = [
        [(rng.choice(gens), rng.choice((-2, -1, 1, 2))) for _ in range(rng.randrange(0, 6))]
        for _ in range(40)
    ]
    mats = [burau_of(w) for w in words]
    nfs = [eng.normal_form(w) for w in words]
    for i in range(len(words)):
        for j in range(len(words)):
            assert (nfs[i] == nfs[j]) == (mats[i] == mats[j]), (
                words[i], words[j]
            )


def test_reducible_spherical_group_normal_form():
    # the engine works verbatim on products: A_1 x A_1 and A_2 x A_1
    d = parse_diagram("vertex a; vertex b")
    eng = ArtinEngine(build_group(d))
    assert eng.equals(parse_word("a b"), parse_word("b a"))
    nf = eng.normal_form(parse_word("a b"))
    assert nf.inf == 1 and nf.canon == ()  # Delta = ab for A_1 x A_1

    d2 = parse_diagram("vertex a; vertex b; vertex c; edge a b 3")
    eng2 = ArtinEngine(build_group(d2))
    assert eng2.commutes(parse_word("c^3"), parse_word("a b a"))
    delta_sq = delta_word(d2, d2.vertices, 2)
    for g in d2.vertices:
        assert eng2.commutes(delta_sq, [(g, 1)])


def test_normalize_letters_merges_adjacent():
    from coxart.garside import normalize_letters

    assert normalize_letters([("s", 1), ("s", 2), ("t", 0), ("s", -3)]) == []
    assert normalize_letters([("s", 1), ("t", 1), ("t", -1), ("s", 1)]) == [
        ("s", 2)
    ]
