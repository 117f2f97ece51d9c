import csv
import io
import json

import pytest

from permlis.cli import main
from permlis.counting import catalan
from permlis.limits import theta_cdf
from permlis.permutations import avoids


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_count_with_k(capsys):
    rc, out, _ = run_cli(capsys, "count", "--pattern", "231", "--n", "4", "--k", "2")
    assert rc == 0
    assert out.strip() == "6"


def test_count_without_k_gives_class_size(capsys):
    rc, out, _ = run_cli(capsys, "count", "--pattern", "321", "--n", "12")
    assert rc == 0
    assert out.strip() == str(catalan(12))


def test_count_big_n_is_exact(capsys):
    rc, out, _ = run_cli(capsys, "count", "--pattern", "231", "--n", "60", "--k", "30")
    assert rc == 0
    assert int(out.strip()) > 10**30  # far beyond 64-bit range, printed exactly


def test_table_csv(capsys):
    rc, out, _ = run_cli(capsys, "table", "--pattern", "321", "--n", "4")
    assert rc == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["k"]) for r in rows] == [2, 3, 4]
    assert [int(r["count"]) for r in rows] == [4, 9, 1]
    assert abs(sum(float(r["probability"]) for r in rows) - 1.0) < 1e-15


def test_table_json(capsys):
    rc, out, _ = run_cli(capsys, "table", "--pattern", "123", "--n", "5", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["counts"] == {"1": 1, "2": 41}
    assert payload["total"] == 42


def test_verify_ok(capsys):
    rc, out, _ = run_cli(capsys, "verify", "--n-max", "5")
    assert rc == 0
    assert "FAIL" not in out
    assert "table(231)" in out


def test_sample_reproducible(capsys):
    rc1, out1, _ = run_cli(
        capsys, "sample", "--pattern", "132", "--n", "20", "--count", "5", "--seed", "11"
    )
    rc2, out2, _ = run_cli(
        capsys, "sample", "--pattern", "132", "--n", "20", "--count", "5", "--seed", "11"
    )
    assert rc1 == rc2 == 0
    assert out1 == out2
    rows = list(csv.DictReader(io.StringIO(out1)))
    assert len(rows) == 5
    for row in rows:
        values = tuple(int(v) for v in row["values"].split())
        assert avoids(values, "132")
        assert sorted(values) == list(range(1, 21))


def test_sample_json_and_entropy_seed(capsys):
    rc, out, err = run_cli(
        capsys, "sample", "--pattern", "321", "--n", "6", "--count", "3", "--format", "json"
    )
    assert rc == 0
    assert err.startswith("seed:")
    payload = json.loads(out)
    assert len(payload["samples"]) == 3
    for sample in payload["samples"]:
        assert avoids(tuple(sample["values"]), "321")
        assert sample["lis"] >= 3  # Erdos-Szekeres floor for n = 6


def test_cdf_value(capsys):
    rc, out, _ = run_cli(capsys, "cdf", "--law", "theta132", "--theta", "0.25")
    assert rc == 0
    assert float(out.strip()) == pytest.approx(theta_cdf(0.25), abs=1e-15)
    # 17 significant digits round-trip
    assert float(out.strip()) == theta_cdf(0.25)


def test_cdf_domain_error_exit_2(capsys):
    rc, _, err = run_cli(capsys, "cdf", "--law", "theta132", "--theta", "-2.0")
    assert rc == 2
    assert "error" in err


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--pattern", "999", "--n", "4"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_converge_csv(capsys):
    rc, out, _ = run_cli(capsys, "converge", "--pattern", "321", "--n-list", "25,100")
    assert rc == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["n"]) for r in rows] == [25, 100]
    assert float(rows[1]["ks_distance"]) < float(rows[0]["ks_distance"])
    assert all(r["law"] == "gamma321" for r in rows)


def test_converge_json(capsys):
    rc, out, _ = run_cli(
        capsys, "converge", "--pattern", "132", "--n-list", "50", "--format", "json"
    )
    assert rc == 0
    payload = json.loads(out)
    assert payload["law"] == "theta132"
    assert len(payload["rows"]) == 1


def test_converge_rejects_123(capsys):
    rc, _, err = run_cli(capsys, "converge", "--pattern", "123", "--n-list", "50")
    assert rc == 2
    assert "123" in err


def test_converge_bad_n_list(capsys):
    rc, _, err = run_cli(capsys, "converge", "--pattern", "132", "--n-list", "a,b")
    assert rc == 2
    assert "error" in err
