import json
import subprocess
import sys
from pathlib import Path

import pytest
from click.testing import CliRunner

from hoprimes import sieve_core
from hoprimes.cli import cli

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(autouse=True)
def restore_default_source():
    saved = sieve_core._default
    yield
    sieve_core._default = saved


@pytest.fixture
def run(tmp_path):
    runner = CliRunner()

    def _run(*args):
        return runner.invoke(cli, list(args), env={"HOPRIMES_CACHE_DIR": str(tmp_path / "c")})

    return _run


def lines(result):
    return result.output.split()


def test_gen_order_k(run):
    r = run("gen", "order-k", "5", "--count", "3")
    assert r.exit_code == 0 and lines(r) == ["31", "127", "709"]


def test_gen_class_bound(run):
    r = run("gen", "class", "2", "--bound", "41")
    assert r.exit_code == 0 and lines(r) == ["3", "11", "17", "41"]


def test_gen_order_zero_is_usage_error(run):
    r = run("gen", "order-k", "0")
    assert r.exit_code == 2 and "Usage" in r.output


@pytest.mark.parametrize("method", ["bulk", "parity", "sieve", "lateral"])
def test_gen_class_methods(run, method):
    r = run("gen", "class", "1", "--count", "15", "--method", method)
    assert lines(r) == "2 5 7 13 19 23 29 31 37 43 47 53 59 61 71".split()


def test_gen_lateral_only_for_class_one(run):
    assert run("gen", "class", "2", "--method", "lateral", "--bound", "50").exit_code == 2


def test_gen_formats(run):
    r = run("gen", "order-k", "2", "--count", "3", "--format", "tsv")
    assert r.output == "1\t3\n2\t5\n3\t11\n"
    r = run("gen", "class", "1", "--bound", "13", "--format", "json-lines")
    recs = [json.loads(l) for l in r.output.splitlines()]
    assert recs[1] == {"index": 2, "value": 5, "order_of_primeness": 3}
    assert [x["value"] for x in recs] == [2, 5, 7, 13]


def test_gen_count_and_bound_conflict(run):
    assert run("gen", "order-k", "2", "--count", "3", "--bound", "10").exit_code == 2


def test_ceiling_gives_exit_3(run):
    r = run("gen", "order-k", "7", "--count", "20", "--ceiling", "100000")
    assert r.exit_code == 3


def test_sieve_naturals_golden(run):
    r = run("sieve", "N", "--horizon", "100")
    assert r.exit_code == 0
    assert r.output == (GOLDEN / "naturals_sieve_100.txt").read_text(encoding="utf-8")


def test_sieve_steps(run):
    r = run("sieve", "order-k", "1", "--horizon", "73", "--steps")
    assert r.exit_code == 0
    pairs = [tuple(map(int, l.split("\t"))) for l in r.output.splitlines() if not l.startswith("#")]
    assert pairs == [(2, 3), (5, 11), (7, 17), (13, 41), (19, 67)]


@pytest.mark.parametrize("i", ["1", "2", "3"])
def test_sieve_class_not_sievable(run, i):
    r = run("sieve", "class", i)
    assert r.exit_code == 4
    assert "cannot be N-sieved" in r.output


def test_sieve_unicode(run):
    r = run("sieve", "N", "--horizon", "5", "--unicode")
    assert r.output == "1 2⃝ 3 4 5⃝\n"


def test_verify_partition(run):
    r = run("verify", "partition", "--class", "1", "--bound", "10000")
    assert r.exit_code == 0 and "verdict: pass" in r.output


def test_verify_equivalence(run):
    r = run("verify", "equivalence", "--bound", "100000")
    assert r.exit_code == 0
    assert r.output.count("\tpass\t") == 9
    assert r.output.endswith("verdict: pass\n")


def test_verify_decompose(run):
    r = run("verify", "decompose", "--order", "2", "--bound", "17")
    assert r.exit_code == 0
    assert "class_2_count: 3\nclass_3_count: 1\n" in r.output


def test_verify_failure_exit_1(run, monkeypatch):
    import hoprimes.cli as cli_mod
    from hoprimes.partition import PartitionWitness, Verdict

    monkeypatch.setattr(
        cli_mod, "verify_partition", lambda i, b: PartitionWitness(i, (), (), b, Verdict(False, 3, "forced"))
    )
    r = run("verify", "partition", "--class", "1", "--bound", "10")
    assert r.exit_code == 1 and "fail at 3" in r.output


def test_verify_rings(run):
    r = run("verify", "rings", "--bound", "100")
    assert r.exit_code == 0 and r.output.startswith("# rings over 1..100\nring 1\t75\t")


def test_oeis_check_one(run):
    r = run("oeis-check", "A333242", "--terms", "15", "--offline")
    assert r.exit_code == 0 and "A333242\tpass\tcompared=15" in r.output


def test_oeis_check_all_offline(run):
    r = run("oeis-check", "--all", "--offline")
    assert r.exit_code == 0
    assert len([l for l in r.output.splitlines() if "\tpass\t" in l]) == 9


def test_oeis_check_unknown(run):
    assert run("oeis-check", "A999999").exit_code == 2
    assert run("oeis-check").exit_code == 2


def test_oeis_check_mismatch_exit_1(run, monkeypatch):
    import hoprimes.cli as cli_mod

    monkeypatch.setattr(cli_mod, "generate", lambda sid, n: (2, 5, 7, 14))
    r = run("oeis-check", "A333242", "--offline")
    assert r.exit_code == 1 and "expected 13, actual 14" in r.output


def test_oeis_check_network_failure_exit_5(run, monkeypatch):
    import hoprimes.oeis_client as oc
    import urllib.error

    def down(url, timeout):
        raise urllib.error.URLError("unreachable")

    monkeypatch.setattr(oc, "_urllib_get", down)
    r = run("oeis-check", "A000040")
    assert r.exit_code == 5


def _subprocess(*args):
    return subprocess.run(
        [sys.executable, "-m", "hoprimes.cli", *args], capture_output=True, text=True, timeout=120
    )


def test_real_process_exit_codes_and_determinism():
    a = _subprocess("sieve", "order-k", "2", "--horizon", "500")
    b = _subprocess("sieve", "order-k", "2", "--horizon", "500")
    assert a.returncode == 0 and a.stdout == b.stdout
    assert _subprocess("sieve", "class", "1").returncode == 4
    assert _subprocess("gen", "order-k", "0").returncode == 2


def test_gen_lateral_rows(run):
    r = run("gen", "lateral-rows", "--count", "11")
    assert lines(r) == "2 0 5 7 0 13 0 19 23 29 31".split()
    r = run("gen", "lateral-rows", "--count", "2", "--format", "tsv")
    assert r.output == "1\t2\n2\t0\n"
