"""Counting pipeline: p(x) = v_init^T (M' X)^(w-1) v_final.

The vector stays on the left and each step applies M' (sum over sources)
and then X (shift by the target's white count).  Three strategies compute
the same polynomial:

* ``full``  -- exact big-integer coefficients, packed one polynomial per int;
* ``trunc`` -- the same, with powers above the target area discarded;
* ``crt``   -- residues at evaluation points for several word-size primes,
  then palindromic interpolation and Chinese remaindering.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from operator import itemgetter
from typing import Iterator

import numpy as np

from .polyring import (
    CountPolynomial,
    binomial_bound,
    crt_reconstruct,
    height_bound,
    interpolate_palindromic,
    primes_for_bound,
    primes_below,
    unpack,
)
from .states import build_state_space
from .transfer import TransferSystem, build_transfer, max_row_nnz

log = logging.getLogger(__name__)

STRATEGIES = ("full", "trunc", "crt")


@dataclass(frozen=True)
class Strategy:
    kind: str = "full"
    certified: bool = False
    primes: int | None = None  # fixed prime count, overrides the bound
    threads: int = 1

    def __post_init__(self):
        if self.kind not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.kind!r}; choose from {STRATEGIES}")
        if self.primes is not None and self.primes < 1:
            raise ValueError("prime count must be positive")


@dataclass(frozen=True)
class BoardSpec:
    rows: int
    width: int
    target: int | None = None  # white area; defaults to half the board

    def __post_init__(self):
        if self.rows < 1 or self.width < 1:
            raise ValueError(f"board {self.rows}x{self.width} must have positive sides")
        if self.target is not None and not 0 <= self.target <= self.cells:
            raise ValueError(f"target area {self.target} outside 0..{self.cells}")

    @property
    def cells(self) -> int:
        return self.rows * self.width

    @property
    def area(self) -> int:
        return self.cells // 2 if self.target is None else self.target


@dataclass
class RunInfo:
    """Provenance of the last pipeline run, filled in by the strategies."""

    products: int = 0
    primes: tuple[int, ...] = ()
    bound: int | None = None
    certified: bool = False


@lru_cache(maxsize=16)
def transfer_system(rows: int, workers: int = 1) -> TransferSystem:
    """Cached transfer system for ``rows`` rows."""
    return build_transfer(build_state_space(rows), workers=workers)


def _coef_bits(cells: int) -> int:
    # Every coefficient counts colorings, so lies below 2**cells; round to
    # whole bytes for fast unpacking.
    return -(-(cells + 1) // 8) * 8


def _packed_widths(ts: TransferSystem, max_width: int, cap: int | None, bits: int,
                   info: RunInfo) -> Iterator[int]:
    # Yields p(x) packed at x = 2**bits for widths 1..max_width.
    mask = (1 << (bits * (cap + 1))) - 1 if cap is not None else None
    shifts = [e * bits for e in ts.xdiag]
    final = [i for i, f in enumerate(ts.vfinal) if f]
    v = [0 if e is None else 1 << (e * bits) for e in ts.vinit]
    if mask is not None:
        v = [a & mask for a in v]
    getters = [itemgetter(*src) if len(src) > 1 else None for src in ts.sources()]
    sources = ts.sources()
    for width in range(1, max_width + 1):
        if width > 1:
            new = []
            for j, src in enumerate(sources):
                g = getters[j]
                if g is not None:
                    acc = sum(g(v))
                elif src:
                    acc = v[src[0]]
                else:
                    acc = 0
                acc <<= shifts[j]
                if mask is not None:
                    acc &= mask
                new.append(acc)
            v = new
            info.products += 1
        yield sum(v[i] for i in final)


def _bigint_widths(ts, max_width, cap, info) -> Iterator[CountPolynomial]:
    bits = _coef_bits(ts.space.row_count * max_width)
    for packed in _packed_widths(ts, max_width, cap, bits, info):
        yield CountPolynomial(unpack(packed, bits))


def evaluation_points(count: int, prime: int) -> list[int]:
    """Points 1, 2, 3, ... skipping 0, -1 and reciprocal clashes mod ``prime``."""
    pts: list[int] = []
    seen_y: set[int] = set()
    x = 1
    while len(pts) < count:
        xm = x % prime
        if xm not in (0, prime - 1):
            y = (xm + pow(xm, -1, prime)) % prime
            if y not in seen_y:
                seen_y.add(y)
                pts.append(xm)
        x += 1
    return pts


def _residue_widths(ts: TransferSystem, max_width: int, prime: int, npoints: int,
                    info: RunInfo | None) -> Iterator[tuple[list[int], np.ndarray]]:
    # Yields (points, p(points) mod prime) for widths 1..max_width.
    r = ts.space.row_count
    pts = evaluation_points(npoints, prime)
    xs = np.array(pts, dtype=np.int64)
    powers = np.ones((r + 1, npoints), dtype=np.int64)
    for e in range(1, r + 1):
        powers[e] = powers[e - 1] * xs % prime
    xpow = powers[np.array(ts.xdiag)]
    vinit = np.array([-1 if e is None else e for e in ts.vinit])
    v = np.where(vinit[:, None] >= 0, powers[np.maximum(vinit, 0)], 0)
    mt = ts.to_scipy().T.tocsr()
    final = np.flatnonzero(ts.vfinal)
    for width in range(1, max_width + 1):
        if width > 1:
            v = (mt @ v) % prime
            v = v * xpow % prime
            if info is not None:
                info.products += 1
        yield pts, v[final].sum(axis=0) % prime


def _crt_widths(ts, max_width, strategy: Strategy, info: RunInfo) -> Iterator[CountPolynomial]:
    r = ts.space.row_count
    degree = r * max_width
    npoints = degree // 2 + 1
    if strategy.primes is not None:
        primes = list(primes_below(count=strategy.primes))
        bound = None
    else:
        if strategy.certified:
            bound = height_bound(len(ts.space), max_row_nnz(ts), max_width - 2)
        else:
            bound = binomial_bound(degree)
        primes = primes_for_bound(bound)
    info.primes = tuple(primes)
    info.bound = bound
    info.certified = bound is not None
    log.info("crt: %d primes, %d points, bound %s", len(primes), npoints, bound)

    def run(idx_p):
        idx, p = idx_p
        return list(_residue_widths(ts, max_width, p, npoints, info if idx == 0 else None))

    if strategy.threads > 1 and len(primes) > 1:
        with ThreadPoolExecutor(strategy.threads) as pool:
            per_prime = list(pool.map(run, enumerate(primes)))
    else:
        per_prime = [run(ip) for ip in enumerate(primes)]
    for w in range(max_width):
        deg = r * (w + 1)
        slices = []
        for p, runs in zip(primes, per_prime):
            pts, vals = runs[w]
            need = deg // 2 + 1 if deg % 2 == 0 else (deg + 1) // 2
            slices.append(interpolate_palindromic(
                list(zip(pts[:need], (int(a) for a in vals[:need]))), deg, p))
        yield crt_reconstruct(slices, bound)


def iterate_widths(rows: int, max_width: int, strategy: Strategy = Strategy(),
                   cap: int | None = None, info: RunInfo | None = None,
                   ts: TransferSystem | None = None) -> Iterator[CountPolynomial]:
    """p(x) for boards ``rows`` x 1 .. ``rows`` x ``max_width``, one product per width.

    ``cap`` truncates powers above it (``trunc`` strategy only).
    """
    if max_width < 1:
        raise ValueError("width must be positive")
    ts = ts or transfer_system(rows)
    info = info if info is not None else RunInfo()
    if strategy.kind == "crt":
        return _crt_widths(ts, max_width, strategy, info)
    info.certified = True
    return _bigint_widths(ts, max_width, cap if strategy.kind == "trunc" else None, info)


def count_polynomial(spec: BoardSpec, strategy: Strategy = Strategy(),
                     info: RunInfo | None = None) -> CountPolynomial:
    """Count polynomial of the board; coefficient k counts white areas of k.

    With the ``trunc`` strategy only coefficients up to ``spec.area`` are
    returned.
    """
    cap = spec.area if strategy.kind == "trunc" else None
    *_, last = iterate_widths(spec.rows, spec.width, strategy, cap=cap, info=info)
    return last


def gerrymander_term(n: int, strategy: Strategy = Strategy(), info: RunInfo | None = None) -> int:
    """Number of dissections of a 2n x 2n board into two polyominoes of area 2n^2."""
    if n < 1:
        raise ValueError("n must be positive")
    p = count_polynomial(BoardSpec(2 * n, 2 * n), strategy, info)
    c = p[2 * n * n]
    if c % 2:
        raise ArithmeticError(f"middle coefficient {c} is odd")
    return c // 2


def fixed_m_sequence(m: int, count: int, strategy: Strategy = Strategy(),
                     info: RunInfo | None = None) -> list[int]:
    """a_1..a_count for boards m x n (m even) or m x 2n (m odd), equal areas."""
    if m < 1 or count < 1:
        raise ValueError("m and count must be positive")
    step = 1 if m % 2 == 0 else 2
    max_width = step * count
    # Target area for width w is m*w/2; the largest one caps the truncation.
    cap = m * max_width // 2
    out = []
    for w, p in enumerate(iterate_widths(m, max_width, strategy, cap=cap, info=info), start=1):
        if w % step == 0:
            c = p[m * w // 2]
            if c % 2:
                raise ArithmeticError(f"coefficient {c} for width {w} is odd")
            out.append(c // 2)
    return out
