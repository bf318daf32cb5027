import csv
import io
import json
import subprocess
import sys

import pytest

from permbin.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    assert out.endswith("\n")
    return json.loads(out)


def test_field_info():
    doc = call_json("field-info", "--p", "2", "--m", "4")
    assert doc["modulus"] == [1, 1, 0, 0, 1] and doc["order"] == 16
    assert doc["header"]["command"] == "field-info"
    assert doc["header"]["flags"]["p"] == 2


def test_test_pb():
    doc = call_json("test-pb", "--q", "4", "--e", "2", "--n", "13", "--d", "3", "--a-log", "5", "--method", "both")
    assert doc["brute"] is True and doc["mu"] is True
    doc = call_json("test-pb", "--q", "3", "--n", "1", "--d", "2", "--a-vec", "0,1", "--method", "brute")
    assert set(doc) == {"header", "brute"}


def test_test_pb_errors():
    code, _, err = call("test-pb", "--q", "4", "--n", "15", "--d", "1", "--a-log", "1")
    assert code == 1 and "n" in err
    code, _, err = call("test-pb", "--q", "4", "--n", "1", "--d", "1", "--a-zero")
    assert code == 1
    code, _, _ = call("test-pb", "--q", "3", "--n", "1", "--d", "2", "--a-vec", "0,7")
    assert code == 1


def test_nd_gdn_adn():
    doc = call_json("nd", "--p", "2", "--m", "4", "--d", "3")
    assert doc["N_d"] == [1, 2, 3, 4, 6, 12]
    assert [12, 15] in doc["orbits"]
    assert call_json("gdn", "--p", "2", "--m", "4", "--d", "15", "--n", "1")["G_dn"] == [1, 2, 4, 7, 8, 11, 13, 14]
    assert call_json("adn", "--p", "2", "--m", "4", "--d", "3", "--n", "1")["A_dn"] == [0, 1]
    code, _, err = call("nd", "--p", "2", "--m", "4", "--d", "4")
    assert code == 1 and "divide" in err


def test_formats():
    code, out, _ = call("nd", "--p", "5", "--d", "1", "--format", "csv")
    assert code == 0
    assert list(csv.DictReader(io.StringIO(out))) == [{"n": "1"}, {"n": "3"}]
    code, out, _ = call("nd", "--p", "5", "--d", "1", "--format", "text")
    assert code == 0 and out.startswith("# permbin nd") and "N_d: [1,3]" in out
    code, out, _ = call("field-info", "--p", "3", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "key,value"


def test_out_flag(tmp_path):
    path = tmp_path / "nd.json"
    code, out, _ = call("nd", "--p", "2", "--m", "4", "--d", "3", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["N_d"] == [1, 2, 3, 4, 6, 12]


def test_usage_errors_exit_1():
    assert call("nd", "--p", "2", "--bogus", "1")[0] == 1
    assert call("no-such-command")[0] == 1
    assert call()[0] == 1
    assert call("nd", "--p", "2", "--d", "1", "--format", "xml")[0] == 1


def test_capacity_errors_exit_2():
    code, _, err = call("field-info", "--p", "2", "--m", "70")
    assert code == 2 and "capacity" in err
    code, _, _ = call("test-pb", "--q", "1024", "--n", "1", "--d", "1", "--a-log", "1", "--method", "brute")
    assert code == 2


def test_canonical():
    doc = call_json("canonical", "--q", "9", "--term", "0:3", "--term", "1:1")
    assert doc["is_pb"] is True
    assert set(doc["triple"]) == {"d", "n", "a_log"}
    assert doc["chain"] == []  # X(X^2 + xi) is already canonical
    doc = call_json("canonical", "--q", "9", "--term", "3:3", "--term", "4:1")
    assert doc["chain"] and set(doc["witness"]) == {"u_log", "v_log", "s", "i"}
    code, _, err = call("canonical", "--q", "9", "--term", "0:2", "--term", "0:1")
    assert code == 1 and "not a permutation" in err
    assert call("canonical", "--q", "9", "--term", "0:3")[0] == 1
    assert call("canonical", "--q", "9", "--term", "x", "--term", "0:1")[0] == 1


def test_classify_feeds_equiv(tmp_path):
    path = tmp_path / "classes.jsonl"
    assert call("classify", "--q", "9", "--out", str(path))[0] == 0
    lines = path.read_text().splitlines()
    head = json.loads(lines[0])
    assert head["pb_count"] == 96 and head["class_count"] == 2
    assert len(lines) == 97
    doc = call_json("equiv", "--from-file", str(path), "--oracle")
    assert doc["consistent"] and doc["checked"] == 96 and doc["classes"] == 2
    # tamper with one recorded triple
    recs = [json.loads(x) for x in lines[1:]]
    recs[0]["triple"]["a_log"] += 1
    bad = tmp_path / "bad.jsonl"
    bad.write_text("\n".join(json.dumps(r) for r in recs) + "\n")
    doc = call_json("equiv", "--from-file", str(bad))
    assert not doc["consistent"] and len(doc["violations"]) == 1


def test_classify_csv():
    code, out, _ = call("classify", "--q", "7", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and sum(int(r["count"]) for r in rows) == 24


def test_equiv_pairs(tmp_path):
    doc = call_json("equiv", "--q", "9", "--f", "0:3", "1:1", "--g", "0:3", "1:1", "--oracle")
    assert doc["equivalent"] and doc["oracle"]
    assert call("equiv", "--f", "0:3", "1:1", "--g", "0:3", "1:1")[0] == 1
    from permbin.binomial import Binomial
    from permbin.field import field_of_order

    F = field_of_order(9)
    f = Binomial.from_logs(F, 0, 3, 1, 1)
    g = Binomial.from_logs(F, 2, 3, 3, 1)
    path = tmp_path / "pair.json"
    path.write_text(json.dumps({"f": f.to_json(), "g": g.to_json()}))
    doc = call_json("equiv", "--from-file", str(path), "--oracle")
    assert doc["equivalent"] == doc["oracle"]


def test_curve():
    doc = call_json("curve", "--q", "8", "--n", "2", "--d", "3", "--a-log", "5", "--count-points")
    assert doc["degG"] == 4
    assert doc["diagnostics"]["degree"] <= doc["diagnostics"]["degree_bound"]
    assert doc["diagnostics"]["affine_count"] is not None
    doc = call_json("curve", "--q", "8", "--n", "2", "--d", "3", "--a-log", "5", "--count-points", "--mu-only")
    assert doc["diagnostics"]["affine_count"] is None
    code, out, _ = call("curve", "--q", "8", "--n", "2", "--d", "3", "--a-log", "5", "--format", "csv")
    assert out.splitlines()[0] == "i,j,coeff_log"


def test_scan_outputs(tmp_path):
    summary = tmp_path / "s.csv"
    code, out, _ = call("scan", "--family", "t19", "--q", "4", "--summary", str(summary), "--no-timing")
    assert code == 0
    lines = out.splitlines()
    assert json.loads(lines[0])["header"]["command"] == "scan"
    recs = [json.loads(x) for x in lines[1:]]
    assert sorted({r["n"] for r in recs}) == [8, 13]
    assert all(r["elapsed"] is None for r in recs)
    rows = list(csv.DictReader(summary.open()))
    assert list(rows[0]) == ["q", "e", "n", "d", "count_pb", "count_tested", "seconds"]
    assert len(rows) == 15 and sum(int(r["count_pb"]) for r in rows) == len(recs)
    code, out, _ = call("scan", "--family", "t110", "--q", "5", "--n-max", "4", "--format", "text")
    assert code == 0 and "positives:" in out


def test_scan_workers_match(tmp_path):
    outs = []
    for w in ("1", "4"):
        path = tmp_path / f"w{w}.jsonl"
        args = ["scan", "--family", "all", "--q", "4", "5", "--workers", w, "--no-timing", "--out", str(path)]
        assert call(*args)[0] == 0
        outs.append(path.read_text().splitlines()[1:])
    assert outs[0] == outs[1] and outs[0]


def test_scan_errors():
    assert call("scan", "--family", "t19")[0] == 1
    assert call("scan", "--family", "t19", "--q", "9")[0] == 1
    assert call("scan", "--family", "t110", "--q", "4", "--d", "4")[0] == 1
    assert call("scan", "--family", "t19", "--q", "4", "--workers", "0")[0] == 1


def test_verify():
    doc = call_json("verify", "--result", "r1.6", "--q", "3", "--no-timing")
    assert doc["result"] == "R1.6" and doc["mismatches"] == [] and doc["tested"] > 0
    assert doc["seconds"] is None
    assert call("verify", "--result", "R9.9", "--q", "3")[0] == 1


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "permbin.cli", "nd", "--p", "2", "--m", "4", "--d", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["N_d"] == [1, 2, 3, 4, 6, 12]
    proc = subprocess.run([sys.executable, "-m", "permbin.cli", "nd", "--nope"], capture_output=True, text=True)
    assert proc.returncode == 1


@pytest.mark.parametrize("cmd", ["field-info", "test-pb", "nd", "gdn", "adn", "canonical", "classify",
                                 "equiv", "curve", "scan", "verify"])
def test_every_command_has_format_and_out(cmd):
    from permbin.cli import build_parser

    sub = build_parser()._subparsers._group_actions[0].choices[cmd]
    opts = {o for a in sub._actions for o in a.option_strings}
    assert {"--format", "--out"} <= opts
