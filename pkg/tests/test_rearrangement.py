import random
from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from thetadp.closed_forms import dp_theta3
from thetadp.rearrangement import (
    PARITY_PATTERNS,
    StepVector,
    check_aligned_maximal,
    check_rearrangement,
    check_staggered_equals_min,
    exhaustive_min_pairing,
    min_triple_pairing_sum,
    min_triple_pairing_sum_expanded,
    paired_sum,
    random_suite,
    reversal_and_shift,
    reversal_failure,
    search_k3_reversal_failure,
    staggered_blocks,
    staggered_sum,
    step_vector_for_path,
)
from thetadp.theta import canonicalize

parity_st = st.sampled_from(["odd", "even"])


@st.composite
def triples(draw, m=None, max_base=10):
    m = m or draw(st.integers(3, 6))
    b1 = draw(st.integers(0, max_base))
    xs = [StepVector(m, b1, draw(parity_st))]
    xs += [StepVector(m, draw(st.integers(b1, max_base)), draw(parity_st)) for _ in range(2)]
    return xs


def test_step_vector_shape():
    odd, even = StepVector(3, 4, "odd"), StepVector(3, 4, "even")
    assert odd.expand() == [4] * 3 + [5] * 6
    assert even.expand() == [4] * 6 + [5] * 3
    assert (odd.s, odd.o, even.s, even.o) == (4, 5, 5, 4)
    with pytest.raises(ValueError):
        StepVector(1, 0, "odd")
    with pytest.raises(ValueError):
        StepVector(3, 0, "none")


@pytest.mark.parametrize("length", range(1, 8))
@pytest.mark.parametrize("m", [3, 4, 5])
def test_step_vector_from_path(length, m):
    x = step_vector_for_path(length, m)
    assert x.parity == ("even" if length % 2 == 0 else "odd")
    from thetadp.arith import pair_counts
    c = pair_counts(length, m)
    # s is the aligned count, taken on m of the m*m pairs
    assert (x.s, x.o) == (c.aligned, c.split)


def test_rearrangement_examples():
    v = check_rearrangement([(1, 2, 3), (1, 2, 3)], [(0, 1, 2), (0, 1, 2)])
    assert v and v.values["reversed"] == 10 and v.values["aligned"] == 14
    v = check_rearrangement([(0, 0, 0)] * 3, [(2, 1, 0), (1, 0, 2), (0, 2, 1)])
    assert v and set(v.values.values()) == {0}


def test_rearrangement_exhaustive_small():
    rng = random.Random(1)
    for _ in range(20):
        n = rng.randint(1, 4)
        rows = [sorted(rng.randint(0, 5) for _ in range(n)) for _ in range(3)]
        for perms in product(permutations(range(n)), repeat=3):
            assert check_rearrangement(rows, perms)


def test_rearrangement_rejects():
    with pytest.raises(ValueError):
        check_rearrangement([(2, 1)], [(0, 1)])
    with pytest.raises(ValueError):
        check_rearrangement([(-1, 1)], [(0, 1)])
    with pytest.raises(ValueError):
        check_rearrangement([(1, 2), (1, 2)], [(0, 1)])


def test_reversal_and_shift_examples():
    f, g = reversal_and_shift(3, 3)
    assert tuple(x + 1 for x in g) == (7, 8, 9, 1, 2, 3, 4, 5, 6)
    for n in (3, 6):
        f, _ = reversal_and_shift(3, n)
        assert f[0] + 1 == 9 and f[8] + 1 == 1
    _, g = reversal_and_shift(3, 6)
    assert g[5] + 1 == 9 and g[6] + 1 == 1
    with pytest.raises(ValueError):
        reversal_and_shift(3, 4)


def test_min_pairing_examples():
    xs = StepVector(3, 0, "odd"), StepVector(3, 0, "even"), StepVector(3, 0, "even")
    # the three high entries of x2 and of x3 fit on the low block of x1
    assert min_triple_pairing_sum(*xs) == 0 == exhaustive_min_pairing(*xs)
    f, g = reversal_and_shift(3, 3)
    assert paired_sum([x.expand() for x in xs], [range(9), f, g]) == 0
    xs = StepVector(3, 1, "even"), StepVector(3, 1, "odd"), StepVector(3, 1, "odd")
    assert min_triple_pairing_sum(*xs) == exhaustive_min_pairing(*xs)


def test_min_pairing_exhaustive_m3():
    for b1, b2, b3 in product(range(3), repeat=3):
        if b1 > min(b2, b3):
            continue
        for ps in PARITY_PATTERNS:
            xs = [StepVector(3, b, p) for b, p in zip((b1, b2, b3), ps)]
            least = min_triple_pairing_sum(*xs)
            assert least == min_triple_pairing_sum_expanded(*xs) == exhaustive_min_pairing(*xs)
            assert staggered_sum(*xs) == least


@settings(max_examples=100, deadline=None)
@given(triples(), st.randoms(use_true_random=False))
def test_min_pairing_is_a_lower_bound(xs, rng):
    least = min_triple_pairing_sum(*xs)
    assert least == min_triple_pairing_sum_expanded(*xs)
    rows = [x.expand() for x in xs]
    mm = len(rows[0])
    for _ in range(20):
        s1, s2 = rng.sample(range(mm), mm), rng.sample(range(mm), mm)
        assert paired_sum(rows, [range(mm), s1, s2]) >= least


@pytest.mark.parametrize(
    "parities, blocks",
    [
        (("even", "odd", "odd"), (0, 0, 0)),
        (("even", "odd", "even"), (0, 0, 1)),
        (("odd", "odd", "odd"), (0, 1, 2)),
        (("odd", "odd", "even"), (0, 1, 0)),
    ],
)
def test_staggered_block_examples(parities, blocks):
    got = staggered_blocks(parities, 3)
    assert got == tuple(range(3 * b, 3 * b + 3) for b in blocks)


@pytest.mark.parametrize(
    "m, bases, parities",
    [(3, (0, 0, 0), ("even", "odd", "odd")), (3, (1, 2, 2), ("odd", "even", "even")), (4, (2, 2, 2), ("odd", "odd", "odd"))],
)
def test_staggered_equality_examples(m, bases, parities):
    xs = [StepVector(m, b, p) for b, p in zip(bases, parities)]
    assert check_staggered_equals_min(*xs)


@settings(max_examples=100, deadline=None)
@given(triples())
def test_staggered_equality_property(xs):
    v = check_staggered_equals_min(*xs)
    assert v, v.values


def test_aligned_maximal_examples():
    xs = [StepVector(3, 1, "odd"), StepVector(3, 2, "even")]
    assert check_aligned_maximal(xs, [range(9)] * 2).values["permuted"] == check_aligned_maximal(xs, [range(9)] * 2).values["aligned"]
    rng = random.Random(2)
    for _ in range(30):
        xs = [StepVector(3, rng.randint(0, 5), rng.choice(("odd", "even"))) for _ in range(4)]
        perms = [rng.sample(range(9), 9) for _ in range(4)]
        assert check_aligned_maximal(xs, perms)
    # constant rows: every pairing gives the same sum
    rows = [(4,) * 9, (2,) * 9, (7,) * 9]
    assert len({paired_sum(rows, [rng.sample(range(9), 9) for _ in rows]) for _ in range(10)}) == 1


@pytest.mark.parametrize("lengths", [xs for xs in product(range(1, 6), repeat=3) if xs.count(1) <= 1])
@pytest.mark.parametrize("m", [3, 4])
def test_staggered_sum_of_path_vectors_is_the_closed_form(lengths, m):
    spec = canonicalize(lengths)
    xs = [step_vector_for_path(l, m) for l in spec.lengths]
    assert staggered_sum(*xs) == min_triple_pairing_sum(*xs) == dp_theta3(spec, m).value


def test_reversal_failure_edge_cases():
    assert reversal_failure((3,), (1,), (2,)) is None
    assert reversal_failure((2, 2, 2), (2, 2, 2), (2, 2, 2)) is None
    assert search_k3_reversal_failure(3, 1) is None
    assert search_k3_reversal_failure(0, 3) is None


def test_reversal_failure_found():
    w = search_k3_reversal_failure(3, 3)
    assert w is not None
    assert w.permuted < w.reversed
    n = len(w.rows[0])
    rev = list(range(n - 1, -1, -1))
    assert paired_sum(w.rows, [range(n), *w.perms]) == w.permuted
    assert paired_sum(w.rows, [range(n), rev, rev]) == w.reversed


def test_random_suite_smoke():
    rep = random_suite(instances=40, seed=3, pairings=20)
    assert rep.ok
    assert set(rep.checked.values()) == {40}
    assert all(h == 5 for h in rep.pattern_hits.values())
