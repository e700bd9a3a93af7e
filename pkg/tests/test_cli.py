import json

import pytest

from gerrymander.cli import main
from gerrymander.states import load_state_space

TIMING = ("wall_seconds", "cpu_seconds")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def untimed(rep):
    return {k: v for k, v in rep.items() if k not in TIMING}


@pytest.mark.parametrize("r,ell", [(2, 6), (4, 26), (6, 154)])
def test_states(capsys, tmp_path, r, ell):
    out = tmp_path / "s.txt"
    code, rep = run(capsys, "states", str(r), "--out", str(out), "--matrix-out", str(tmp_path / "m.txt"))
    assert code == 0 and rep["result"] == ell
    with open(out) as fp:
        assert len(load_state_space(fp)) == ell
    assert (tmp_path / "m.txt").read_text().startswith(f"gerrymatrix v1 r={r} ")


def test_term(capsys):
    assert run(capsys, "term", "1")[1]["result"] == 2
    code, rep = run(capsys, "term", "3")
    assert code == 0 and rep["result"] == 80518
    assert rep["stats"]["states"] == 154


def test_term_certified(capsys):
    code, rep = run(capsys, "term", "4", "--strategy", "crt", "--certified")
    assert code == 0 and rep["result"] == 7157114189
    assert rep["certified"] and len(rep["primes"]) >= 3
    assert int(rep["bound"]) > 7157114189


@pytest.mark.parametrize("argv,want", [
    (("poly", "2", "2"), [1, 4, 4, 4, 1]),
    (("poly", "2", "1"), [1, 2, 1]),
    (("poly", "1", "1"), [1, 1]),
])
def test_poly(capsys, argv, want):
    assert run(capsys, *argv)[1]["result"] == want


def test_oracle(capsys):
    code, rep = run(capsys, "oracle", "2", "2", "2")
    assert code == 0 and rep == {"1": 4, "2": 4, "3": 4}


def test_sequence_analytic(capsys):
    code, rep = run(capsys, "sequence", "3", "10", "--check-analytic")
    assert code == 0 and rep["analytic_match"]
    assert rep["result"][:4] == [3, 19, 85, 355]


def test_verify_quick(capsys):
    code, rep = run(capsys, "verify", "quick")
    assert code == 0 and rep["result"] == "pass"


def test_exit_codes(capsys):
    assert run(capsys, "oracle", "6", "6")[0] == 3
    assert run(capsys, "poly", "2", "0")[0] == 2
    assert run(capsys, "sequence", "2", "3", "--check-analytic")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["term", "2", "--strategy", "fft"])
    assert exc.value.code == 2


def test_reports_are_reproducible(capsys):
    argv = ("poly", "3", "4", "--strategy", "crt")
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert untimed(first) == untimed(second)


def test_threads_flag(capsys):
    one = run(capsys, "poly", "4", "5", "--strategy", "crt", "--threads", "1")[1]
    two = run(capsys, "poly", "4", "5", "--strategy", "crt", "--threads", "2")[1]
    assert one["result"] == two["result"] and one["primes"] == two["primes"]


def test_dump_states(capsys, tmp_path):
    path = tmp_path / "dump.txt"
    run(capsys, "term", "2", "--dump-states", str(path))
    assert path.read_text().splitlines()[0] == "gerrystates v1 r=4 count=26"
