"""Brute-force reference counts by exhaustive enumeration of colorings.

Every q-coloring of an m x n grid is generated, each color class is flood
filled from its lowest cell, and the coloring is kept when every color is
present and forms a single 4-connected region.  Colorings are processed in
blocks with each cell set encoded as a bitmask over ``m*n`` bits.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

import numpy as np

MAX_COLORINGS = 2 ** 30
BLOCK = 2 ** 20


class GuardError(ValueError):
    """Board too large for exhaustive enumeration."""


@dataclass
class OracleResult:
    m: int
    n: int
    q: int
    histogram: dict[tuple[int, ...], int]  # areas of colors 0..q-2 -> count

    def by_white_area(self) -> dict[int, int]:
        if self.q != 2:
            raise ValueError("white-area view needs two colors")
        return {k[0]: v for k, v in self.histogram.items()}

    def total(self) -> int:
        return sum(self.histogram.values())

    def to_json(self) -> str:
        hist = {",".join(map(str, k)): v for k, v in sorted(self.histogram.items())}
        return json.dumps(hist, sort_keys=False)


def _neighbors(s: np.ndarray, m: int, n: int) -> np.ndarray:
    full = (1 << (m * n)) - 1
    first_col = sum(1 << (i * n) for i in range(m))
    not_first = np.uint64(full & ~first_col)
    not_last = np.uint64(full & ~(first_col << (n - 1)))
    full = np.uint64(full)
    one, step = np.uint64(1), np.uint64(n)
    out = s | ((s << one) & not_first) | ((s >> one) & not_last)
    out |= (s << step) | (s >> step)
    return out & full


def _single_region(mask: np.ndarray, m: int, n: int) -> np.ndarray:
    # True where mask is nonempty and 4-connected.
    region = mask & (~mask + np.uint64(1))
    while True:
        grown = _neighbors(region, m, n) & mask
        if np.array_equal(grown, region):
            break
        region = grown
    return (mask != 0) & (region == mask)


def _color_masks(codes: np.ndarray, cells: int, q: int) -> list[np.ndarray]:
    if q == 2:
        full = np.uint64((1 << cells) - 1)
        return [full ^ codes, codes]
    masks = [np.zeros_like(codes) for _ in range(q)]
    rest = codes.copy()
    qq = np.uint64(q)
    for cell in range(cells):
        digit = rest % qq
        rest //= qq
        bit = np.uint64(1 << cell)
        for color in range(q):
            masks[color] |= np.where(digit == color, bit, np.uint64(0))
    return masks


def oracle_histogram(m: int, n: int, q: int = 2) -> OracleResult:
    """Count colorings splitting the m x n grid into q connected regions."""
    if m < 1 or n < 1 or q < 1:
        raise ValueError("m, n and q must be positive")
    cells = m * n
    total = q ** cells
    if total > MAX_COLORINGS:
        raise GuardError(f"{q}^{cells} colorings exceed the limit of {MAX_COLORINGS}")
    hist: Counter = Counter()
    for lo in range(0, total, BLOCK):
        codes = np.arange(lo, min(lo + BLOCK, total), dtype=np.uint64)
        masks = _color_masks(codes, cells, q)
        ok = np.ones(len(codes), dtype=bool)
        for mask in masks:
            ok &= _single_region(mask, m, n)
        if not ok.any():
            continue
        areas = np.stack([np.bitwise_count(mask[ok]) for mask in masks[:-1]], axis=1)
        keys, counts = np.unique(areas, axis=0, return_counts=True)
        for key, cnt in zip(keys, counts):
            hist[tuple(int(a) for a in key)] += int(cnt)
    return OracleResult(m, n, q, dict(sorted(hist.items())))
