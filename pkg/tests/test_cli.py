import json

import pytest

from pattern_ideals.cli import run
from pattern_ideals.monomials import MonomialIdeal


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_example(capsys):
    assert call(capsys, "count", "--family", "W", "--n", "3") == (0, "14\n", "")


def test_sequence_example(capsys):
    code, out, _ = call(capsys, "sequence", "--family", "S1", "--n", "1..5")
    assert code == 0 and out.strip() == "1, 3, 12, 60, 360"


def test_verify_t4(capsys):
    code, out, _ = call(capsys, "verify", "t4", "--max-n", "6")
    assert code == 0 and out.strip().endswith("t4: ok")


def test_verify_failure_exit_code(capsys):
    # the S1 minimality line of the betti suite fails; see the acceptance notes
    code, out, _ = call(capsys, "verify", "betti", "--max-n", "4")
    assert code == 1 and "FAIL SIGMA_S1 n=4" in out


def test_csv_rows(capsys):
    code, out, _ = call(capsys, "sequence", "--family", "T1", "--n", "1..4", "--csv")
    assert out.splitlines() == ["family,n,count", "T1,1,1", "T1,2,3", "T1,3,11", "T1,4,50"]


def test_count_methods_agree(capsys):
    results = set()
    for method in ("box", "chain", "parking"):
        _, out, _ = call(capsys, "count", "--family", "W", "--n", "4", "--c", "2", "--method", method)
        results.add(out)
    assert results == {"342\n"}
    _, out, _ = call(capsys, "count", "--family", "PERM", "--n", "1..4", "--method", "parking")
    assert out.split() == ["1", "3", "16", "125"]


def test_dual_json_round_trip(capsys):
    _, closed, _ = call(capsys, "dual", "--family", "U", "--n", "4", "--json")
    _, generic, _ = call(capsys, "dual", "--family", "U", "--n", "4", "--method", "generic", "--json")
    assert closed == generic
    text = closed.strip()
    assert MonomialIdeal.from_json(text).to_json() == text


def test_weighted_dual(capsys):
    _, closed, _ = call(capsys, "dual", "--family", "W", "--n", "3", "--u", "1,3,4", "--c", "2")
    _, generic, _ = call(capsys, "dual", "--family", "W", "--n", "3", "--u", "1,3,4", "--c", "2", "--method", "generic")
    assert closed == generic and len(closed.splitlines()) == 7


def test_perms(capsys):
    _, out, _ = call(capsys, "perms", "--family", "W", "--n", "3")
    assert out.split() == ["123", "213", "231", "321"]


def test_usage_errors(capsys):
    assert call(capsys, "count", "--family", "X")[0] == 2
    assert call(capsys, "count", "--n", "5..2")[0] == 2
    assert call(capsys, "bogus")[0] == 2
    assert call(capsys, "count", "--family", "S1", "--c", "2")[0] == 2
    assert call(capsys, "count", "--family", "W", "--n", "3", "--u", "1,2")[0] == 2
    assert call(capsys, "oeis", "--candidates", "A12", "--offline")[0] == 2


def test_oeis_offline(capsys, tmp_path):
    code, out, _ = call(capsys, "oeis", "--family", "U", "--n", "1..6", "--candidates", "A003319", "--offline", "--cache-dir", str(tmp_path))
    assert code == 0 and "A003319: consistent up to n = 6" in out
    code, _, err = call(capsys, "oeis", "--family", "U", "--n", "1..3", "--candidates", "A999999", "--offline", "--cache-dir", str(tmp_path))
    assert code == 3 and "A999999" in err


def test_oeis_json(capsys, tmp_path):
    code, out, _ = call(capsys, "oeis", "--family", "W", "--n", "1..5", "--offline", "--json", "--cache-dir", str(tmp_path))
    data = json.loads(out)
    assert data["candidates"][0] == {"id": "A007840", "shift": 0, "length": 5, "full": True}


def test_hilbert_and_export(capsys):
    code, out, _ = call(capsys, "hilbert", "--family", "S2", "--n", "2..3")
    assert code == 0 and out.count("PASS") == 2
    code, out, _ = call(capsys, "export-poset", "--kind", "LAMBDA_N", "--n", "3")
    assert code == 0 and out.startswith('digraph "LAMBDA_N_3"') and '"12" -> "123";' in out
