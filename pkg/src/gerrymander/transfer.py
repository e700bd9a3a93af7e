"""Sparse transfer system over a state space.

The full transfer matrix has entry ``x**w(s')`` at ``(s, s')`` whenever
column ``s'.coloring`` may follow state ``s``, where ``w`` counts white
cells.  Since every column of that matrix carries a single power of x, it is
stored as a 0/1 adjacency structure ``mprime`` plus the exponent vector
``xdiag``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import TextIO

from .states import (
    Coloring,
    State,
    StateSpace,
    build_state_space,
    chunks,
    coloring_from_int,
    is_uninteresting,
)

MATRIX_MAGIC = "gerrymatrix v1"


class _Column:
    """Precomputed chunk layout of one candidate column."""

    __slots__ = ("coloring", "chunk_of", "nchunks", "mono")

    def __init__(self, c: Coloring):
        self.coloring = c
        ch = chunks(c)
        self.nchunks = len(ch)
        self.chunk_of = [j for j, (lo, hi, _) in enumerate(ch) for _ in range(lo, hi + 1)]
        self.mono = self.nchunks == 1


class _Source:
    """Cell-level block labels of a state, blocks numbered 0..k-1."""

    __slots__ = ("state", "coloring", "label", "nblocks", "block_color")

    def __init__(self, s: State):
        self.state = s
        self.coloring = s.coloring
        ch = chunks(s.coloring)
        number: dict[int, int] = {}
        for lead in s.leaders:
            number.setdefault(lead, len(number))
        self.nblocks = len(number)
        self.label = []
        self.block_color = [0] * self.nblocks
        for j, (lo, hi, color) in enumerate(ch):
            b = number[s.leaders[j]]
            self.block_color[b] = color
            self.label.extend([b] * (hi - lo + 1))


def _successor(src: _Source, col: _Column) -> State | None:
    # Successor state before the interestingness check.
    c, cn = src.coloring, col.coloring
    if src.state.primed:
        return src.state if cn == c else None
    k = src.nblocks
    parent = list(range(k + col.nchunks))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    touched = [False] * k
    label, chunk_of = src.label, col.chunk_of
    for i in range(len(c)):
        if c[i] == cn[i]:
            b = label[i]
            touched[b] = True
            ra, rb = find(b), find(k + chunk_of[i])
            if ra != rb:
                parent[ra] = rb
    if not all(touched):
        # A region got sealed off.  Only allowed when the new column is
        # monochromatic and the sealed region is the only one of its color.
        if not col.mono:
            return None
        other = 1 - cn[0]
        if sum(1 for color in src.block_color if color == other) != 1:
            return None
        return State(cn, (0,), True)
    root_leader: dict[int, int] = {}
    leaders = tuple(root_leader.setdefault(find(k + j), j) for j in range(col.nchunks))
    return State(cn, leaders, False)


def transition(s: State, cnew: Coloring, space: StateSpace | None = None) -> State | None:
    """State reached by appending column ``cnew`` to ``s``, or None.

    With ``space`` given, a successor outside it counts as uninteresting;
    otherwise the pruning predicate is evaluated directly.
    """
    if len(cnew) != len(s.coloring):
        raise ValueError(f"column of length {len(cnew)} for a state of {len(s.coloring)} rows")
    nxt = _successor(_Source(s), _Column(tuple(cnew)))
    if nxt is None:
        return None
    if space is not None:
        return nxt if nxt in space else None
    if not nxt.primed and is_uninteresting(nxt.coloring, nxt.leaders):
        return None
    return nxt


def successors(space: StateSpace, rows: range | None = None) -> list[list[int]]:
    """Target ordinals reachable in one step, per source state in ``rows``."""
    r = space.row_count
    columns = [_Column(coloring_from_int(v, r)) for v in range(2 ** r)]
    index = space.index
    out = []
    for i in rows if rows is not None else range(len(space)):
        src = _Source(space[i])
        targets = []
        for col in columns:
            nxt = _successor(src, col)
            if nxt is not None:
                j = index.get(nxt)
                if j is not None:
                    targets.append(j)
        targets.sort()
        out.append(targets)
    return out


_worker_space: StateSpace | None = None


def _init_worker(r: int) -> None:
    global _worker_space
    _worker_space = build_state_space(r)


def _worker_rows(bounds: tuple[int, int]) -> list[list[int]]:
    return successors(_worker_space, range(*bounds))


@dataclass
class TransferSystem:
    space: StateSpace
    mprime: list[list[int]]  # row-major: source -> sorted target ordinals
    xdiag: list[int]
    vinit: list[int | None]
    vfinal: list[bool]
    _csc: list[list[int]] | None = field(default=None, init=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.space)

    @property
    def nnz(self) -> int:
        return sum(map(len, self.mprime))

    @property
    def nnz_init(self) -> int:
        return sum(e is not None for e in self.vinit)

    @property
    def nnz_final(self) -> int:
        return sum(self.vfinal)

    def sources(self) -> list[list[int]]:
        """Column-major view: target -> source ordinals."""
        if self._csc is None:
            cols: list[list[int]] = [[] for _ in range(self.size)]
            for i, targets in enumerate(self.mprime):
                for j in targets:
                    cols[j].append(i)
            self._csc = cols
        return self._csc

    def stats(self) -> dict[str, int]:
        return {
            "states": self.size,
            "nnz_init": self.nnz_init,
            "nnz_final": self.nnz_final,
            "nnz_matrix": self.nnz,
        }

    def to_scipy(self):
        """M' as a scipy CSR matrix of int64."""
        import numpy as np
        from scipy import sparse

        indptr = np.zeros(self.size + 1, dtype=np.int64)
        np.cumsum([len(t) for t in self.mprime], out=indptr[1:])
        indices = np.fromiter((j for t in self.mprime for j in t), dtype=np.int64, count=int(indptr[-1]))
        data = np.ones(len(indices), dtype=np.int64)
        return sparse.csr_matrix((data, indices, indptr), shape=(self.size, self.size))

    def dump(self, fp: TextIO) -> None:
        fp.write(f"{MATRIX_MAGIC} r={self.space.row_count} nnz={self.nnz}\n")
        for i, targets in enumerate(self.mprime):
            for j in targets:
                fp.write(f"{i} {j}\n")


def build_transfer(space: StateSpace, workers: int = 1) -> TransferSystem:
    """Transfer system for ``space``; ``workers > 1`` splits rows over processes."""
    n = len(space)
    if workers > 1 and n > 2000:
        step = -(-n // (workers * 4))
        bounds = [(lo, min(lo + step, n)) for lo in range(0, n, step)]
        with ProcessPoolExecutor(workers, initializer=_init_worker,
                                 initargs=(space.row_count,)) as pool:
            mprime = [row for part in pool.map(_worker_rows, bounds) for row in part]
    else:
        mprime = successors(space)
    return TransferSystem(space, mprime, *_vectors(space))


def _vectors(space: StateSpace) -> tuple[list[int], list[int | None], list[bool]]:
    # Exponents of X; start exponents for arc-free unprimed states (a single
    # column carries no hidden connectivity); accept flags for <= 2 regions.
    xdiag = [s.white_count for s in space]
    vinit = [None if (s.primed or s.has_arcs) else s.white_count for s in space]
    vfinal = [s.nblocks <= 2 for s in space]
    return xdiag, vinit, vfinal


def default_workers() -> int:
    return os.cpu_count() or 1


def max_row_nnz(ts: TransferSystem) -> int:
    """Largest number of nonzeros in any row of M.

    This is the branching factor that bounds path counts: it never exceeds
    ``2**r`` and reaches it at the monochromatic unprimed states.
    """
    return max(map(len, ts.mprime))


def max_col_nnz(ts: TransferSystem) -> int:
    """Largest number of nonzeros in any column of M (the primed columns win)."""
    return max(map(len, ts.sources()))


def load_matrix_dump(fp: TextIO, space: StateSpace) -> TransferSystem:
    header = fp.readline().split()
    if " ".join(header[:2]) != MATRIX_MAGIC:
        raise ValueError(f"not a matrix dump: {' '.join(header)!r}")
    fields = dict(item.split("=") for item in header[2:])
    if int(fields["r"]) != space.row_count:
        raise ValueError("matrix dump row count does not match the state space")
    mprime: list[list[int]] = [[] for _ in range(len(space))]
    for line in fp:
        i, j = map(int, line.split())
        mprime[i].append(j)
    ts = TransferSystem(space, mprime, *_vectors(space))
    if ts.nnz != int(fields["nnz"]):
        raise ValueError("matrix dump is truncated")
    return ts
