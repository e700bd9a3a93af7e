"""Exact polynomial arithmetic: big-integer coefficients, residues, CRT.

Besides plain coefficient lists, polynomials with nonnegative coefficients
below ``2**bits`` can be packed into a single Python integer (Kronecker
substitution at ``x = 2**bits``).  Adding packed values adds polynomials
and shifting multiplies by a power of x, which is all the transfer engine
needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

from sympy import prevprime


class InterpolationError(ValueError):
    pass


class CRTError(ValueError):
    pass


@dataclass
class CountPolynomial:
    """Dense coefficient list, index = power of x."""

    coeffs: list[int]

    def __post_init__(self):
        while len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            self.coeffs.pop()
        if not self.coeffs:
            self.coeffs = [0]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if any(self.coeffs) else -1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, CountPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == CountPolynomial(list(other)).coeffs
        return NotImplemented

    def __add__(self, other: CountPolynomial) -> CountPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return CountPolynomial([self[i] + other[i] for i in range(n)])

    def __call__(self, x: int, mod: int | None = None) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
            if mod is not None:
                acc %= mod
        return acc

    def height(self) -> int:
        return max(abs(a) for a in self.coeffs)

    def is_palindromic(self, degree: int | None = None) -> bool:
        d = self.degree if degree is None else degree
        return all(self[i] == self[d - i] for i in range(d + 1))

    def truncate(self, cap: int) -> CountPolynomial:
        return CountPolynomial(self.coeffs[: cap + 1])

    def pack(self, bits: int) -> int:
        return pack(self.coeffs, bits)

    @classmethod
    def unpack(cls, value: int, bits: int) -> CountPolynomial:
        return cls(unpack(value, bits))


def pack(coeffs: Sequence[int], bits: int) -> int:
    value = 0
    for a in reversed(coeffs):
        if not 0 <= a < (1 << bits):
            raise ValueError(f"coefficient {a} does not fit in {bits} bits")
        value = (value << bits) | a
    return value


def unpack(value: int, bits: int) -> list[int]:
    if value < 0:
        raise ValueError("packed polynomial must be nonnegative")
    nbytes = -(-bits // 8)
    if bits % 8 == 0:
        raw = value.to_bytes(max(1, -(-value.bit_length() // 8)), "little")
        return [int.from_bytes(raw[i:i + nbytes], "little") for i in range(0, len(raw), nbytes)] or [0]
    mask = (1 << bits) - 1
    out = []
    while value:
        out.append(value & mask)
        value >>= bits
    return out or [0]


def truncated_mul(a: CountPolynomial, b: CountPolynomial, cap: int | None) -> CountPolynomial:
    """Product of ``a`` and ``b`` with every power above ``cap`` dropped."""
    if cap is not None and cap < 0:
        raise ValueError("cap must be nonnegative")
    da, db = len(a.coeffs), len(b.coeffs)
    n = da + db - 1 if cap is None else min(da + db - 1, cap + 1)
    out = [0] * n
    for i, ai in enumerate(a.coeffs[:n]):
        if ai:
            for j in range(min(db, n - i)):
                out[i + j] += ai * b.coeffs[j]
    return CountPolynomial(out)


@dataclass
class ResidueVector:
    prime: int
    values: list[int]

    def __post_init__(self):
        if any(not 0 <= v < self.prime for v in self.values):
            raise ValueError("residue out of range")


@lru_cache(maxsize=None)
def primes_below(limit: int = 2 ** 31, count: int = 16) -> tuple[int, ...]:
    """The ``count`` largest primes below ``limit``, descending."""
    out = []
    n = limit
    while len(out) < count:
        n = prevprime(n)
        out.append(n)
    return tuple(out)


def primes_for_bound(bound: int, limit: int = 2 ** 31) -> list[int]:
    """Fewest of the largest primes below ``limit`` whose product exceeds ``bound``."""
    chosen = []
    product = 1
    count = 16
    while product <= bound or not chosen:
        primes = primes_below(limit, count)
        for p in primes[len(chosen):]:
            chosen.append(p)
            product *= p
            if product > bound:
                break
        count *= 2
    return chosen


def height_bound(ell: int, k: int, steps: int) -> int:
    """A-priori height bound ell**2 * k**steps for a transfer-matrix product."""
    return ell * ell * k ** max(steps, 0)


def binomial_bound(cells: int) -> int:
    """Largest possible coefficient of a count polynomial over ``cells`` cells."""
    return comb(cells, cells // 2)


def _newton_coeffs(ys: list[int], vals: list[int], p: int) -> list[int]:
    # Monomial coefficients of the interpolant through (ys[i], vals[i]) mod p.
    n = len(ys)
    dd = list(vals)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            den = (ys[i] - ys[i - j]) % p
            if den == 0:
                raise InterpolationError("repeated interpolation node")
            dd[i] = (dd[i] - dd[i - 1]) * pow(den, -1, p) % p
    poly = [0] * n
    poly[0] = dd[n - 1]
    deg = 0
    for i in range(n - 2, -1, -1):
        # poly = poly * (y - ys[i]) + dd[i]
        deg += 1
        for t in range(deg, 0, -1):
            poly[t] = (poly[t - 1] - ys[i] * poly[t]) % p
        poly[0] = (dd[i] - ys[i] * poly[0]) % p
    return poly


def _palindromic_even(points: list[tuple[int, int]], degree: int, p: int) -> list[int]:
    # p(x) / x**h = q(x + 1/x) with deg q = h = degree / 2.
    h = degree // 2
    ys, vals = [], []
    for x, v in points[: h + 1]:
        x %= p
        if x == 0:
            raise InterpolationError("evaluation point 0 is not allowed")
        xinv = pow(x, -1, p)
        ys.append((x + xinv) % p)
        vals.append(v * pow(xinv, h, p) % p)
    if len(ys) < h + 1:
        raise InterpolationError(f"need {h + 1} points for degree {degree}, got {len(ys)}")
    q = _newton_coeffs(ys, vals, p)
    coeffs = [0] * (degree + 1)
    for k, qk in enumerate(q):
        if qk:
            for i in range(k + 1):
                coeffs[h + k - 2 * i] = (coeffs[h + k - 2 * i] + qk * comb(k, i)) % p
    return coeffs


def interpolate_palindromic(points: Sequence[tuple[int, int]], degree: int, prime: int) -> ResidueVector:
    """Coefficients mod ``prime`` of a palindromic polynomial of the given degree.

    Needs ``degree // 2 + 1`` points, with ``x`` nonzero and no two points
    satisfying ``x * x' == 1``.  Odd degrees are handled by factoring out
    ``1 + x``, so ``x == -1`` is excluded there.
    """
    p = prime
    pts = list(points)
    if degree < 0:
        raise InterpolationError("degree must be nonnegative")
    if degree % 2 == 0:
        return ResidueVector(p, _palindromic_even(pts, degree, p))
    reduced = []
    for x, v in pts:
        d = (1 + x) % p
        if d == 0:
            raise InterpolationError("evaluation point -1 is not allowed for odd degree")
        reduced.append((x, v * pow(d, -1, p) % p))
    half = _palindromic_even(reduced, degree - 1, p)
    coeffs = [0] * (degree + 1)
    for i, a in enumerate(half):
        coeffs[i] = (coeffs[i] + a) % p
        coeffs[i + 1] = (coeffs[i + 1] + a) % p
    return ResidueVector(p, coeffs)


def crt_reconstruct(slices: Sequence[ResidueVector], bound: int | None) -> CountPolynomial:
    """Nonnegative coefficients below the prime product matching every slice.

    ``bound`` is an upper bound on the true coefficients; reconstruction
    refuses to run unless the prime product exceeds it.  Pass None to skip
    the check (the result is then only correct if enough primes were used).
    """
    if not slices:
        raise CRTError("no residue slices")
    primes = [s.prime for s in slices]
    if len(set(primes)) != len(primes):
        raise CRTError("primes must be pairwise distinct")
    n = len(slices[0].values)
    if any(len(s.values) != n for s in slices):
        raise CRTError("residue slices differ in length")
    modulus = 1
    for p in primes:
        modulus *= p
    if bound is not None and modulus <= bound:
        raise CRTError(f"product of {len(primes)} primes does not exceed the bound {bound}")
    # Garner-style incremental combination.
    values = list(slices[0].values)
    m = primes[0]
    for s in slices[1:]:
        p = s.prime
        inv = pow(m, -1, p)
        for i, r in enumerate(s.values):
            t = (r - values[i]) * inv % p
            values[i] += m * t
        m *= p
    return CountPolynomial(values)
