"""Exit criteria. Each test carries a ``criterion`` marker; conftest prints one
PASS/FAIL line per criterion at the end of the run."""

import time
from collections import Counter
from math import gcd

import pytest

from regdistinct.bijection import BijectionConfig, analyze, forward, inverse
from regdistinct.glaisher import double_glaisher, phi, to_matrices
from regdistinct.orbit import Cycle, Success, census, classify_orbit, in_target
from regdistinct.partition import is_distinct, is_regular, parse, weight
from regdistinct.qseries import (
    check_intermediate_identity,
    eta_quotient,
    gf_regular_distinct,
    gf_regular_regular,
    gf_theorem9,
)

from conftest import partitions_of

P = parse


def best_time(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def source(n, s, t):
    return [p for p in partitions_of(n) if is_regular(p, s) and is_distinct(p, t)]


def target(n, s, t):
    return {p for p in partitions_of(n) if is_regular(p, t) and is_distinct(p, s)}


@pytest.mark.criterion(1, "Glaisher example (108,18^4) <-> (3^60), base 6")
def test_criterion_01_glaisher_example():
    a, b = P("108,18^4"), P("3^60")
    assert phi(a, 6) == b
    assert phi(b, 6) == a
    assert best_time(lambda: (phi(a, 6), phi(b, 6))) < 1e-3


@pytest.mark.criterion(2, "part-frequency matrix figure for (20,5^2,4,2^2,1^5), base 2")
def test_criterion_02_matrix_figure():
    p = P("20,5^2,4,2^2,1^5")
    fam = to_matrices(p, 2)
    assert fam.dense(1, 3, 3) == [[1, 0, 1], [0, 1, 0], [1, 0, 0]]
    assert fam.dense(3, 3, 3) == [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
    assert fam.dense(5, 3, 3) == [[0, 1, 0], [0, 0, 0], [1, 0, 0]]
    assert set(fam.matrices) == {1, 5}
    assert best_time(lambda: to_matrices(p, 2)) < 1e-3


@pytest.mark.criterion(3, "worked example s=9, t=15 forward and inverse")
def test_criterion_03_main_example():
    src, img = P("10^4,5^7,3^5,1^2"), P("25,18^2,9,5^3,3,2^2")
    assert forward(src, 9, 15) == img
    assert inverse(img, 9, 15) == src
    assert best_time(lambda: forward(src, 9, 15)) < 1e-3
    assert best_time(lambda: inverse(img, 9, 15)) < 1e-3


@pytest.mark.criterion(4, "prime order changes the image of (9), s=18, t=30")
def test_criterion_04_prime_order():
    assert forward(P("9"), 18, 30, BijectionConfig(prime_order=(3, 2))) == P("1^9")
    assert forward(P("9"), 18, 30, BijectionConfig(prime_order=(2, 3))) == P("9")


@pytest.mark.criterion(5, "orbit of (50), s=6, t=10: success with ell=2")
def test_criterion_05_orbit_of_fifty():
    r = classify_orbit(P("50"), 6, 10)
    assert r.outcome == Success(2)
    assert r.trajectory[1:] == [P("30,5^4"), P("18,5^4,3^4")]


@pytest.mark.criterion(6, "orbit of (108,18^4), s=10, t=6: 3-cycle, never in target")
def test_criterion_06_counterexample():
    r = classify_orbit(P("108,18^4"), 10, 6)
    assert isinstance(r.outcome, Cycle) and r.outcome.length == 3
    assert P("30^6") in r.trajectory and P("3^60") in r.trajectory
    assert not any(is_regular(p, 6) and is_distinct(p, 10) for p in r.trajectory)


CRITERION_7_PAIRS = [(6, 10), (9, 15), (18, 30), (4, 6), (6, 4), (12, 18)]


@pytest.mark.criterion(7, "exhaustive bijectivity, n <= 30, six modulus pairs")
def test_criterion_07_exhaustive_bijectivity():
    t0 = time.perf_counter()
    for s, t in CRITERION_7_PAIRS:
        for n in range(31):
            src = source(n, s, t)
            images = [forward(p, s, t) for p in src]
            assert len(set(images)) == len(src), (s, t, n)
            assert all(is_regular(q, t) and is_distinct(q, s) for q in images)
            assert set(images) == target(n, s, t), (s, t, n)
            assert all(inverse(q, s, t) == p for p, q in zip(src, images)), (s, t, n)
    assert time.perf_counter() - t0 < 120


@pytest.mark.criterion(8, "phi is a weight-preserving involution, n <= 25, m = 2..12")
def test_criterion_08_involution():
    t0 = time.perf_counter()
    for n in range(26):
        for p in partitions_of(n):
            for m in range(2, 13):
                q = phi(p, m)
                assert weight(q) == n
                assert phi(q, m) == p
    assert time.perf_counter() - t0 < 60


def _feature_counts(N, moduli):
    """Counter over (n, max frequency, bitmask of moduli the partition is regular for)."""
    counts = Counter()
    for n in range(N + 1):
        for p in partitions_of(n):
            maxf = max((f for _, f in p.parts), default=0)
            mask = 0
            for i, m in enumerate(moduli):
                if all(s % m for s, _ in p.parts):
                    mask |= 1 << i
            counts[n, maxf, mask] += 1
    return counts


@pytest.mark.criterion(9, "generating functions agree with enumeration, n <= 40, moduli <= 18")
def test_criterion_09_gf_agreement():
    N = 40
    moduli = list(range(2, 19))
    bit = {m: 1 << i for i, m in enumerate(moduli)}
    feats = _feature_counts(N, moduli)

    def oracle(pred):
        out = [0] * (N + 1)
        for (n, maxf, mask), c in feats.items():
            if pred(maxf, mask):
                out[n] += c
        return out

    for m in moduli:
        g = list(eta_quotient([m], [1], N))
        assert g == oracle(lambda maxf, mask: mask & bit[m])
        assert g == oracle(lambda maxf, mask: maxf < m)
    for s in moduli:
        for t in moduli:
            assert list(gf_regular_distinct(s, t, N)) == oracle(
                lambda maxf, mask: mask & bit[s] and maxf < t), (s, t)
            assert list(gf_regular_regular(s, t, N)) == oracle(
                lambda maxf, mask: mask & bit[s] and mask & bit[t]), (s, t)
            assert gf_regular_distinct(s, t, 80) == gf_regular_distinct(t, s, 80)


ZERO_STEP_PAIRS = [(2, 3), (2, 5), (3, 4), (6, 10)]


@pytest.mark.criterion(10, "s-regular, t-regular, s-distinct generating function and census zero counts")
def test_criterion_10_zero_step_gf():
    for s, t in ZERO_STEP_PAIRS:
        g = gf_theorem9(s, t, 40)
        for n in range(41):
            expected = sum(1 for p in partitions_of(n)
                           if is_regular(p, s) and is_regular(p, t) and is_distinct(p, s))
            assert g[n] == expected, (s, t, n)
            c = census(n, s, t)
            assert c.zero_count == expected and c.zero_count_agrees, (s, t, n)


@pytest.mark.criterion(11, "intermediate eta-quotient identity for d | s, s, t <= 12, degree 80")
def test_criterion_11_intermediate_identity():
    for s in range(2, 13):
        for t in range(2, 13):
            for d in range(1, s + 1):
                if s % d == 0:
                    assert check_intermediate_identity(s, d, t, 80), (s, d, t)


EXCLUSIVE_PAIRS = [(6, 10), (10, 6), (6, 4), (15, 9)]


@pytest.mark.criterion(12, "restriction to parts / frequencies not all divisible by s', n <= 24")
def test_criterion_12_exclusive_factor_restriction():
    for s, t in EXCLUSIVE_PAIRS:
        sp = analyze(s, t).s_exclusive
        assert sp > 1
        for n in range(25):
            dom = [p for p in source(n, s, t) if any(x % sp for x, _ in p.parts)]
            cod = {q for q in target(n, s, t) if any(f % sp for _, f in q.parts)}
            images = [forward(p, s, t) for p in dom]
            assert len(set(images)) == len(dom)
            assert set(images) == cod, (s, t, n)


COPRIME_PAIRS = [(2, 3), (3, 2), (3, 5), (9, 5), (4, 9), (5, 8), (7, 4)]


@pytest.mark.criterion(13, "coprime moduli: bijection equals double Glaisher, weight <= 25")
def test_criterion_13_coprime_degeneration():
    for s, t in COPRIME_PAIRS:
        assert gcd(s, t) == 1
        for n in range(26):
            for p in source(n, s, t):
                assert forward(p, s, t) == double_glaisher(p, s, t)
