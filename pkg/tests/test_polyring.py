import random

import pytest
from hypothesis import given, settings, strategies as st

from gerrymander.polyring import (
    CountPolynomial,
    CRTError,
    InterpolationError,
    ResidueVector,
    binomial_bound,
    crt_reconstruct,
    height_bound,
    interpolate_palindromic,
    pack,
    primes_below,
    primes_for_bound,
    truncated_mul,
    unpack,
)

coeff_lists = st.lists(st.integers(0, 10 ** 30), min_size=1, max_size=12)


def schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_truncated_mul_examples():
    one_x = CountPolynomial([1, 1])
    assert truncated_mul(one_x, one_x, 1) == [1, 2]
    sq = CountPolynomial([1, 2, 1])
    assert truncated_mul(sq, sq, 4) == [1, 4, 6, 4, 1]
    with pytest.raises(ValueError):
        truncated_mul(sq, sq, -1)


@given(coeff_lists, coeff_lists, st.integers(0, 30))
def test_truncated_mul_agrees_with_schoolbook(a, b, cap):
    full = schoolbook(a, b)
    assert truncated_mul(CountPolynomial(a), CountPolynomial(b), None) == full
    assert truncated_mul(CountPolynomial(a), CountPolynomial(b), cap) == full[: cap + 1]


@given(coeff_lists, coeff_lists, coeff_lists, st.integers(0, 30))
def test_truncation_commutes_with_addition(a, b, c, cap):
    pa, pb, pc = map(CountPolynomial, (a, b, c))
    lhs = truncated_mul(pa + pb, pc, cap)
    rhs = truncated_mul(pa, pc, cap) + truncated_mul(pb, pc, cap)
    assert lhs == rhs


@given(st.lists(st.integers(0, 2 ** 64 - 1), min_size=1, max_size=20), st.sampled_from([64, 65, 72, 100]))
def test_pack_roundtrip(coeffs, bits):
    got = unpack(pack(coeffs, bits), bits)
    assert CountPolynomial(got) == CountPolynomial(coeffs)


def test_pack_overflow():
    with pytest.raises(ValueError):
        pack([256], 8)


def palindrome(half, degree):
    coeffs = [0] * (degree + 1)
    for i in range(degree // 2 + 1):
        coeffs[i] = coeffs[degree - i] = half[i]
    return coeffs


def eval_points(coeffs, xs, p):
    poly = CountPolynomial(list(coeffs))
    return [(x, poly(x, p)) for x in xs]


def test_interpolate_m2_polynomial():
    p = 101
    target = [1, 4, 4, 4, 1]
    got = interpolate_palindromic(eval_points(target, [2, 3, 4], p), 4, p)
    assert got.values == target


def test_interpolate_odd_degree():
    p = 101
    target = [1, 6, 6, 6, 6, 1]
    got = interpolate_palindromic(eval_points(target, [1, 2, 3], p), 5, p)
    assert got.values == target


def test_interpolate_rejects_bad_points():
    p = 101
    pts = eval_points([1, 2, 1], [3, 3], p)
    with pytest.raises(InterpolationError):
        interpolate_palindromic(pts, 2, p)
    # x and 1/x give the same node
    pts = eval_points([1, 2, 1], [2, pow(2, -1, p)], p)
    with pytest.raises(InterpolationError):
        interpolate_palindromic(pts, 2, p)
    with pytest.raises(InterpolationError):
        interpolate_palindromic(eval_points([1, 2, 1], [0, 1], p), 2, p)
    with pytest.raises(InterpolationError):
        interpolate_palindromic(eval_points([1, 2, 1], [1], p), 2, p)


def test_interpolate_degree_eight_mod_mersenne():
    p = 2 ** 31 - 1
    rng = random.Random(8)
    target = palindrome([rng.randrange(p) for _ in range(5)], 8)
    got = interpolate_palindromic(eval_points(target, [1, 2, 3, 4, 5], p), 8, p)
    assert got.values == target


PRIMES = primes_below(count=8) + (101, 10007, 65537)


@settings(max_examples=1200, deadline=None)
@given(st.integers(0, 40), st.sampled_from(PRIMES), st.randoms(use_true_random=False))
def test_interpolation_roundtrip(degree, p, rng):
    target = palindrome([rng.randrange(p) for _ in range(degree // 2 + 1)], degree)
    need = degree // 2 + 1
    xs = []
    seen = set()
    x = 1
    while len(xs) < need:
        y = (x + pow(x, -1, p)) % p
        if x % p != p - 1 and y not in seen:
            seen.add(y)
            xs.append(x)
        x += 1
    assert interpolate_palindromic(eval_points(target, xs, p), degree, p).values == target


def test_crt_examples():
    assert crt_reconstruct([ResidueVector(101, [70 % 101]), ResidueVector(103, [70 % 103])], 70) == [70]
    big = 7157114189
    ps = primes_below(count=4)
    assert crt_reconstruct([ResidueVector(p, [big % p]) for p in ps], big) == [big]
    assert crt_reconstruct([ResidueVector(p, [0, 0]) for p in ps], 1) == [0]


def test_crt_errors():
    with pytest.raises(CRTError):
        crt_reconstruct([ResidueVector(101, [1])], 200)
    with pytest.raises(CRTError):
        crt_reconstruct([ResidueVector(101, [1]), ResidueVector(101, [1])], None)
    with pytest.raises(CRTError):
        crt_reconstruct([ResidueVector(101, [1]), ResidueVector(103, [1, 2])], None)
    with pytest.raises(ValueError):
        ResidueVector(7, [7])


@given(st.lists(st.integers(0, 10 ** 40), min_size=1, max_size=6))
def test_crt_matches_integers(values):
    bound = max(values)
    ps = primes_for_bound(bound)
    got = crt_reconstruct([ResidueVector(p, [v % p for v in values]) for p in ps], bound)
    assert got == CountPolynomial(values)


def test_height_bound():
    b = height_bound(393878, 16384, 12)
    assert f"{b:.4g}" == "5.804e+61"
    assert len(primes_for_bound(b)) == 7
    assert height_bound(1, 1, 50) == 1


def test_primes():
    ps = primes_below(count=5)
    assert ps[0] == 2 ** 31 - 1
    assert list(ps) == sorted(ps, reverse=True)
    assert all(p < 2 ** 31 for p in ps)
    assert binomial_bound(4) == 6
