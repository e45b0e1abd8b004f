import csv
import io
import json
import subprocess
import sys

import pytest

from permhomomesy.cli import CSV_COLUMNS, main
from permhomomesy.homomesy import HomomesyVerdict


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestSearch:
    def test_rotation_n3_all(self, capsys):
        code, out, err = run(capsys, "search", "--n", "3", "--gen", "rot", "--stats", "all")
        assert code == 0
        recs = [json.loads(line) for line in out.splitlines()]
        by_stat = {r["statistic"]: r for r in recs}
        hom = [r for r in recs if r["outcome"] == "homomesic"]
        assert len(hom) >= 34
        assert by_stat[22]["constant"] == "1"
        assert by_stat["inversion_number"]["outcome"] == "not_homomesic"
        assert "search:" in err

    def test_jsonl_round_trip(self, capsys):
        _, out, _ = run(capsys, "search", "--n", "3", "--gen", "rot", "--stats", "22,inversion_number")
        for line in out.splitlines():
            rec = json.loads(line)
            v = HomomesyVerdict.from_record(rec)
            assert {k: v.to_record()[k] for k in v.to_record()} == \
                {k: rec[k] for k in v.to_record()}

    def test_pair_swap(self, capsys):
        _, out, _ = run(capsys, "search", "--n", "4", "--gen", "ps", "--stats", "1114")
        rec = json.loads(out)
        assert rec["outcome"] == "homomesic" and rec["constant"] == "1"

    def test_valley_hopping(self, capsys):
        _, out, _ = run(capsys, "search", "--n", "5", "--gen", "vh", "--stats", "21")
        assert json.loads(out)["constant"] == "2"

    def test_csv(self, capsys):
        _, out, _ = run(capsys, "search", "--n", "3", "--gen", "rot", "--stats", "22,inversion_number",
                        "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert list(rows[0]) == CSV_COLUMNS
        assert rows[0]["constant"] == "1" and rows[0]["stat_name"] == "fixed_points"
        assert rows[1]["witness_a_avg"] == "4/3" and rows[1]["witness_b_avg"] == "5/3"

    def test_timing_adds_column(self, capsys):
        _, out, _ = run(capsys, "search", "--n", "3", "--gen", "rot", "--stats", "22",
                        "--format", "csv", "--timing")
        assert out.splitlines()[0].endswith(",elapsed")

    def test_text(self, capsys):
        _, out, _ = run(capsys, "search", "--n", "3", "--gen", "rot", "--stats", "22", "--format", "text")
        assert "homomesic, constant 1" in out
        assert "search: 1 records, 1 homomesic" in out

    def test_output_file(self, tmp_path, capsys):
        path = tmp_path / "out.jsonl"
        code, out, _ = run(capsys, "search", "--n", "3", "--gen", "rot", "--stats", "22", "--out", str(path))
        assert code == 0 and out == ""
        assert json.loads(path.read_text())["constant"] == "1"


class TestVerify:
    def test_rotation(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "3", "--n-max", "5", "--gen", "rot")
        assert code == 0
        assert "MISMATCH" not in out
        assert out.splitlines()[-1] == "verify: 105 rows checked, 0 mismatches"

    def test_parrot_even(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "4", "--gen", "parrot")
        assert code == 0
        assert out.count("ok ") == 2

    def test_coxeter_all(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "3", "--n-max", "4", "--gen", "coxeter-all")
        assert code == 0
        assert "coxeter:312" in out and "coxeter:4123" in out

    def test_jsonl(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "3", "--gen", "ps", "--format", "jsonl")
        recs = [json.loads(x) for x in out.splitlines()[:-1]]
        assert code == 0 and all(r["match"] for r in recs)

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        from permhomomesy import formulas
        monkeypatch.setitem(formulas.FORMULAS, ("ps", 1114),
                            formulas.Formula("ps", 1114, "wrong", lambda n: formulas.F(7)))
        code, out, _ = run(capsys, "verify", "--n", "4", "--gen", "ps", "--stats", "1114")
        assert code == 1
        assert "MISMATCH" in out and "expected=7 got=1" in out


class TestOrbits:
    def test_valley_hopping_seed(self, capsys):
        code, out, _ = run(capsys, "orbits", "--n", "6", "--gen", "vh", "--seed", "246135")
        lines = out.splitlines()
        assert code == 0
        assert set(lines[:-1]) == {"246135", "426135", "246315", "246513",
                                   "426315", "426513", "246531", "426531"}
        assert lines[-1] == "orbit size 8"

    def test_parity_rotation_seed(self, capsys):
        _, out, _ = run(capsys, "orbits", "--n", "5", "--gen", "parrot", "--seed", "12345")
        assert out.splitlines() == ["12345", "34521", "52143", "14325", "32541", "54123", "orbit size 6"]

    def test_histogram(self, capsys):
        _, out, _ = run(capsys, "orbits", "--n", "3", "--gen", "rot")
        assert out.splitlines() == ["n=3 gen=rot orbits=2", "size 3: 2"]

    def test_histogram_jsonl(self, capsys):
        _, out, _ = run(capsys, "orbits", "--n", "3", "--gen", "rot", "--format", "jsonl", "--members")
        rec = json.loads(out)
        assert rec["histogram"] == {"3": 2}
        assert rec["orbits"] == [["123", "231", "312"], ["132", "321", "213"]]

    def test_malformed_seed(self, capsys):
        code, _, err = run(capsys, "orbits", "--n", "3", "--gen", "rot", "--seed", "112")
        assert code == 2 and "malformed seed" in err
        code, _, _ = run(capsys, "orbits", "--n", "4", "--gen", "rot", "--seed", "123")
        assert code == 2


class TestErrors:
    def test_bad_generator(self, capsys):
        code, _, err = run(capsys, "search", "--n", "3", "--gen", "flip")
        assert code == 2 and err.startswith("error:")

    def test_bad_statistic(self, capsys):
        code, _, err = run(capsys, "search", "--n", "3", "--gen", "rot", "--stats", "99999")
        assert code == 2 and "known ids" in err

    def test_guard(self, capsys):
        assert run(capsys, "search", "--n", "9", "--gen", "rot", "--stats", "22")[0] == 3
        assert run(capsys, "verify", "--n", "7", "--gen", "coxeter-all")[0] == 3
        assert run(capsys, "search", "--n", "5", "--gen", "rot", "--stats", "22",
                   "--max-n-guard", "4")[0] == 3

    def test_cycle_size_must_match(self, capsys):
        assert run(capsys, "search", "--n", "5", "--gen", "coxeter:2341")[0] == 2

    def test_bad_range(self, capsys):
        assert run(capsys, "search", "--n", "5", "--n-max", "3", "--gen", "rot")[0] == 2

    def test_argparse_usage(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["search"])
        assert exc.value.code == 2


class TestDumps:
    def test_registry(self, capsys):
        code, out, _ = run(capsys, "registry")
        doc = json.loads(out)
        assert code == 0 and len(doc["statistics"]) >= 40 and doc["conventions"]

    def test_registry_text(self, capsys):
        _, out, _ = run(capsys, "registry", "--format", "text", "--stats", "22")
        assert out.startswith("22\tfixed_points\t")

    def test_formulas(self, capsys):
        _, out, _ = run(capsys, "formulas", "--n", "3", "--gen", "rot", "--stats", "1293")
        rec = json.loads(out)
        assert rec["constant"] == "149/3" and rec["generator"] == "rotation"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "permhomomesy", "orbits", "--n", "3", "--gen", "rot"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("n=3 gen=rot orbits=2")
