"""Command line front end.

Results go to stdout as one JSON document; a short human-readable summary
goes to stderr.  Exit codes: 0 success, 1 verification failure, 2 usage
error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any

from . import engine, verify
from .analytic import knuth_series
from .engine import STRATEGIES, BoardSpec, RunInfo, Strategy
from .oracle import GuardError, oracle_histogram
from .polyring import CRTError
from .transfer import max_row_nnz

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def _strategy(args) -> Strategy:
    return Strategy(args.strategy, certified=args.certified, primes=args.primes,
                    threads=args.threads)


def _system(rows: int, args):
    ts = engine.transfer_system(rows, workers=args.threads)
    if args.dump_states:
        with open(args.dump_states, "w") as fp:
            ts.space.dump(fp)
    return ts


def _report(args, board: dict | None, result: Any, info: RunInfo | None, ts, t0: tuple[float, float]) -> dict:
    rep: dict[str, Any] = {
        "command": args.echo,
        "board": board,
        "strategy": args.strategy,
        "result": result,
        "wall_seconds": round(time.perf_counter() - t0[0], 3),
        "cpu_seconds": round(time.process_time() - t0[1], 3),
    }
    if info is not None:
        rep["primes"] = list(info.primes)
        rep["certified"] = info.certified
        rep["bound"] = None if info.bound is None else str(info.bound)
        rep["products"] = info.products
    if ts is not None:
        rep["stats"] = dict(ts.stats(), max_row_nnz=max_row_nnz(ts))
    return rep


def cmd_states(args, t0):
    ts = _system(args.rows, args)
    if args.out:
        with open(args.out, "w") as fp:
            ts.space.dump(fp)
    if args.matrix_out:
        with open(args.matrix_out, "w") as fp:
            ts.dump(fp)
    st = ts.stats()
    print(f"r={args.rows}  states={st['states']}  v_init={st['nnz_init']}  "
          f"v_final={st['nnz_final']}  M={st['nnz_matrix']}", file=sys.stderr)
    return _report(args, {"rows": args.rows}, st["states"], None, ts, t0)


def cmd_term(args, t0):
    ts = _system(2 * args.n, args)
    info = RunInfo()
    value = engine.gerrymander_term(args.n, _strategy(args), info)
    print(f"a({args.n}) = {value}", file=sys.stderr)
    return _report(args, {"rows": 2 * args.n, "width": 2 * args.n}, value, info, ts, t0)


def cmd_poly(args, t0):
    ts = _system(args.rows, args)
    info = RunInfo()
    p = engine.count_polynomial(BoardSpec(args.rows, args.width), _strategy(args), info)
    print(f"p(x) for {args.rows}x{args.width}: {p.coeffs}", file=sys.stderr)
    return _report(args, {"rows": args.rows, "width": args.width}, p.coeffs, info, ts, t0)


def cmd_sequence(args, t0):
    ts = _system(args.m, args)
    info = RunInfo()
    seq = engine.fixed_m_sequence(args.m, args.count, _strategy(args), info)
    rep = _report(args, {"rows": args.m}, seq, info, ts, t0)
    if args.check_analytic:
        if args.m != 3:
            raise ValueError("the analytic check exists only for m = 3")
        ref = knuth_series(args.count)[1:]
        rep["analytic_match"] = ref == seq
        if not rep["analytic_match"]:
            rep["exit"] = EXIT_VERIFY
    print(" ".join(map(str, seq)), file=sys.stderr)
    return rep


def cmd_oracle(args, t0):
    res = oracle_histogram(args.m, args.n, args.q)
    print(f"{res.total()} valid colorings", file=sys.stderr)
    return json.loads(res.to_json())


def cmd_verify(args, t0):
    def show(check):
        name, ok, detail = check
        print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip(), file=sys.stderr)

    ok = verify.run(args.level, show)
    rep = _report(args, None, "pass" if ok else "fail", None, None, t0)
    if not ok:
        rep["exit"] = EXIT_VERIFY
    return rep


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--strategy", choices=STRATEGIES, default="full")
    common.add_argument("--primes", type=int, default=None, help="fixed number of CRT primes")
    common.add_argument("--certified", action="store_true", help="size CRT primes by the height bound")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--dump-states", metavar="PATH")

    p = argparse.ArgumentParser(prog="gerrymander", description="Count two-region grid dissections.")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("states", parents=[common], help="build and dump the state space")
    s.add_argument("rows", type=int)
    s.add_argument("--out", metavar="PATH")
    s.add_argument("--matrix-out", metavar="PATH")
    s.set_defaults(func=cmd_states)

    s = sub.add_parser("term", parents=[common], help="n-th gerrymander term")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_term)

    s = sub.add_parser("poly", parents=[common], help="count polynomial of a rows x width board")
    s.add_argument("rows", type=int)
    s.add_argument("width", type=int)
    s.set_defaults(func=cmd_poly)

    s = sub.add_parser("sequence", parents=[common], help="fixed-m sequence a_1..a_N")
    s.add_argument("m", type=int)
    s.add_argument("count", type=int)
    s.add_argument("--check-analytic", action="store_true")
    s.set_defaults(func=cmd_sequence)

    s = sub.add_parser("oracle", parents=[common], help="brute-force histogram")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.add_argument("q", type=int, nargs="?", default=2)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("verify", parents=[common], help="run the self-check suites")
    s.add_argument("level", choices=sorted(verify.LEVELS), nargs="?", default="quick")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(argv)
    args.echo = " ".join(argv)
    t0 = (time.perf_counter(), time.process_time())
    try:
        rep = args.func(args, t0)
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, CRTError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    code = rep.pop("exit", EXIT_OK) if isinstance(rep, dict) else EXIT_OK
    print(json.dumps(rep, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
