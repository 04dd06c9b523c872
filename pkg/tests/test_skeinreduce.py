import random

import pytest

from oracle import oracle_kauffman

from dubrovnik.brauer import BrauerMatching, basis, lift_word
from dubrovnik.coeffring import ONE, RatFunc, ZERO, alpha, delta, svar
from dubrovnik.skeinreduce import (
    SkeinElement,
    assert_relation_suite,
    kauffman_poly,
    reduce_terms,
    reduce_word,
)
from dubrovnik.tangle import (
    Slice,
    TangleWord,
    closure,
    compose,
    crossing_word,
    encircling_word,
    hook_word,
    identity,
    kink_word,
    tensor,
)

Z = svar() - svar(-1)


def random_word(rng, n, n_crossings, caps=0):
    word = identity(n)
    for _ in range(n_crossings):
        i = rng.randrange(1, n)
        word = compose(crossing_word(n, i, rng.choice([1, -1])), word)
    for _ in range(caps):
        i = rng.randrange(1, n)
        word = compose(hook_word(n, i), word)
    return word


def test_relation_suite_passes():
    report = assert_relation_suite()
    assert report.passed, str(report)
    assert report.epsilon == -1


def test_free_loop_is_delta():
    w = TangleWord(0, 0, (Slice("CUP", 1), Slice("CAP", 1)))
    assert kauffman_poly(w) == delta()


def test_switch_relation_as_elements():
    lhs = reduce_terms([(ONE, crossing_word(2, 1)), (-ONE, crossing_word(2, 1, -1))])
    rhs = (reduce_word(identity(2)) - reduce_word(hook_word(2, 1))).scale(Z)
    assert lhs == rhs


def test_reduce_is_idempotent_on_lifts():
    for n in range(1, 4):
        for m in basis(n):
            el = reduce_word(lift_word(m))
            assert el == SkeinElement(n, n, {m: ONE}), m


def test_reduce_linear():
    rng = random.Random(11)
    for _ in range(8):
        w1 = random_word(rng, 3, 3)
        w2 = random_word(rng, 3, 2, caps=1)
        a = RatFunc(rng.randrange(-3, 4)) * svar(rng.randrange(-2, 3))
        b = alpha(rng.randrange(-1, 2))
        combined = reduce_terms([(a, w1), (b, w2)])
        split = reduce_word(w1).scale(a) + reduce_word(w2).scale(b)
        assert combined == split


def test_matches_oracle_on_small_corpus():
    rng = random.Random(23)
    for trial in range(40):
        n = rng.choice([2, 3])
        w = random_word(rng, n, rng.randrange(0, 5), caps=rng.randrange(0, 2))
        closed = closure(w)
        assert kauffman_poly(closed) == oracle_kauffman(closed), (trial, closed)


def test_trace_property():
    rng = random.Random(5)
    for _ in range(10):
        n = rng.choice([2, 3])
        f = random_word(rng, n, rng.randrange(0, 3), caps=rng.randrange(0, 2))
        g = random_word(rng, n, rng.randrange(0, 3))
        assert kauffman_poly(closure(compose(f, g))) == kauffman_poly(
            closure(compose(g, f))
        )


def test_reidemeister_two_invariance():
    rng = random.Random(9)
    for _ in range(10):
        n = 3
        w = random_word(rng, n, rng.randrange(0, 4), caps=rng.randrange(0, 2))
        i = rng.randrange(1, n)
        pair = compose(crossing_word(n, i), crossing_word(n, i, -1))
        assert reduce_word(compose(pair, w)) == reduce_word(w)
        assert reduce_word(compose(w, pair)) == reduce_word(w)


def test_reidemeister_three_invariance():
    a = compose(crossing_word(3, 1), compose(crossing_word(3, 2), crossing_word(3, 1)))
    b = compose(crossing_word(3, 2), compose(crossing_word(3, 1), crossing_word(3, 2)))
    rng = random.Random(2)
    for _ in range(6):
        w = random_word(rng, 3, 2, caps=1)
        assert reduce_word(compose(a, w)) == reduce_word(compose(b, w))


def test_interchange_law_up_to_reduction():
    f1 = crossing_word(2, 1)
    f2 = hook_word(2, 1)
    g1 = kink_word(1)
    g2 = kink_word(-1)
    lhs = reduce_word(compose(tensor(f1, g1), tensor(f2, g2)))
    rhs = reduce_word(tensor(compose(f1, f2), compose(g1, g2)))
    assert lhs == rhs


def test_confluence_randomized_small():
    # full-size randomized confluence lives in the acceptance suite
    rng = random.Random(31)
    for _ in range(40):
        w = random_word(rng, 3, rng.randrange(1, 5), caps=rng.randrange(0, 2))
        expected = reduce_word(w)
        trial_rng = random.Random(rng.randrange(1 << 30))
        assert reduce_word(w, rng=trial_rng) == expected


def test_termination_instrumentation():
    rng = random.Random(13)
    for _ in range(10):
        w = random_word(rng, 3, rng.randrange(1, 6), caps=rng.randrange(0, 2))
        stats = {}
        reduce_word(closure(w), stats=stats)
        k = closure(w).crossing_count
        # every recursion path drops the (crossings, bad) measure; its length
        # is at most 2k + 1 and the tree has at most 3^k branch nodes
        assert stats.get("max_depth", 0) <= 2 * k + 1
        assert stats.get("nodes", 1) <= 3 ** (k + 1)


def test_closures_of_basis_elements():
    # closure of the identity lift = delta^n; closure of a hook lift = delta^(n-1)
    assert kauffman_poly(closure(lift_word(basis(2)[_find_identity(2)]))) == delta() ** 2
    h = hook_word(2, 1)
    assert kauffman_poly(closure(h)) == delta()


def _find_identity(n):
    from dubrovnik.brauer import identity_matching

    return basis(n).index(identity_matching(n))


def test_encircling_eigenvalue_on_strand():
    from dubrovnik.young import YoungDiagram, c_lambda

    el = reduce_word(encircling_word(1))
    expected = c_lambda(YoungDiagram((1,))) + delta()
    assert el == reduce_word(identity(1)).scale(expected)


def test_encircling_zero_strands_is_free_loop():
    assert kauffman_poly(encircling_word(0)) == delta()
