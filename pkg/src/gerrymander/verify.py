"""Self-check harness behind ``gerrymander verify``.

Each check yields ``(name, passed, detail)``; the CLI prints one line per
check and exits nonzero if any fails.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .analytic import knuth_series
from .engine import BoardSpec, Strategy, count_polynomial, fixed_m_sequence, gerrymander_term, transfer_system
from .oracle import oracle_histogram

# (n, states, nnz v_init, nnz v_final, nnz M) for rows = 2n
STATE_TABLE = [
    (1, 6, 4, 6, 16),
    (2, 26, 14, 16, 178),
    (3, 154, 32, 34, 2546),
    (4, 1026, 58, 60, 44008),
    (5, 7222, 92, 94, 832454),
]

TERMS = [2, 70, 80518, 7157114189, 49852157614583644]

M2_SERIES = {1: [1, 2, 1], 2: [1, 4, 4, 4, 1], 3: [1, 6, 6, 6, 6, 6, 1]}

Check = tuple[str, bool, str]

LEVELS = {
    # table rows, terms, knuth length, oracle cells, oracle max rows, strategy cells
    "quick": (3, 3, 10, 12, 8, 16),
    "full": (5, 4, 20, 20, 10, 36),
}


def boards(max_cells: int, max_rows: int = 10) -> Iterator[tuple[int, int]]:
    """(rows, width) pairs covering every m x n board with m*n <= max_cells.

    Each unordered board appears once with rows = the shorter side; the
    transposed orientation is added when it stays within ``max_rows``.
    """
    for m in range(1, max_cells + 1):
        for n in range(m, max_cells // m + 1):
            yield m, n
            if m != n and n <= max_rows:
                yield n, m


def check_table(upto: int) -> Iterator[Check]:
    for n, ell, vi, vf, nnz in STATE_TABLE[:upto]:
        got = transfer_system(2 * n).stats()
        want = {"states": ell, "nnz_init": vi, "nnz_final": vf, "nnz_matrix": nnz}
        yield f"table n={n}", got == want, str(got)


def check_terms(upto: int) -> Iterator[Check]:
    for n in range(1, upto + 1):
        got = gerrymander_term(n, Strategy("trunc"))
        yield f"term n={n}", got == TERMS[n - 1], str(got)


def check_m2() -> Iterator[Check]:
    for w, want in M2_SERIES.items():
        got = count_polynomial(BoardSpec(2, w)).coeffs
        yield f"poly 2x{w}", got == want, str(got)


def check_knuth(length: int) -> Iterator[Check]:
    engine = fixed_m_sequence(3, length)
    analytic = knuth_series(length)[1:]
    yield f"knuth a_1..a_{length}", engine == analytic, ""


def check_oracle(max_cells: int, max_rows: int = 10) -> Iterator[Check]:
    for r, w in boards(max_cells, max_rows):
        p = count_polynomial(BoardSpec(r, w))
        hist = oracle_histogram(r, w).by_white_area()
        inner = {a: p[a] for a in range(1, r * w) if p[a]}
        ok = inner == hist and p[0] == 1 and p[r * w] == 1
        yield f"oracle {r}x{w}", ok, ""


def check_strategies(max_cells: int) -> Iterator[Check]:
    for r, w in boards(max_cells, max_rows=8):
        spec = BoardSpec(r, w)
        vals = {kind: count_polynomial(spec, Strategy(kind))[spec.area] for kind in ("full", "trunc", "crt")}
        yield f"strategies {r}x{w}", len(set(vals.values())) == 1, str(vals)


def run(level: str = "quick", report: Callable[[Check], None] | None = None) -> bool:
    t_rows, t_terms, k_len, o_cells, o_rows, s_cells = LEVELS[level]
    suites = [
        check_table(t_rows), check_terms(t_terms), check_m2(),
        check_knuth(k_len), check_oracle(o_cells, o_rows), check_strategies(s_cells),
    ]
    ok = True
    for suite in suites:
        for check in suite:
            ok &= check[1]
            if report:
                report(check)
    return ok
