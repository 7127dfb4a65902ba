import json
import os
import tempfile

from k3siegel.intpoly import IntPoly, cyclotomic
from k3siegel import cli
from k3siegel.salemlib import load_store
from k3siegel.setup2 import enumerate_setup2

STORE = load_store()
Z2 = IntPoly([-1, 0, 1])
CANDS = enumerate_setup2()


def test_cyclotomic_sets():
    assert cli.cyclotomic_sets(0) == [()]
    sets2 = cli.cyclotomic_sets(2)
    assert sets2 == [(3,), (4,), (6,)]
    for cs in cli.cyclotomic_sets(16)[:10]:
        from k3siegel.intpoly import euler_phi
        assert sum(euler_phi(j) for j in cs) == 16
        assert all(j >= 3 for j in cs)
        assert len(set(cs)) == len(cs)


def test_analyze_rejected_pair():
    phi = Z2 * STORE[(20, 1)].salem_poly
    psi = STORE[(10, 1)].salem_poly * cyclotomic(4) * cyclotomic(5) * cyclotomic(7)
    row = cli.analyze_pair(phi, psi)
    assert not row.accepted()
    assert "resultant" in row.rejection


def test_analyze_entry2():
    phi = Z2 * STORE[(18, 22)].salem_poly * cyclotomic(4)
    psi = STORE[(6, 1)].salem_poly * cyclotomic(48)
    row = cli.analyze_pair(phi, psi, s_label="S22^(18)", c_label="C4")
    assert row.accepted()
    assert (row.st_index, row.dynkin, row.phi1_tilde, row.trace_a_tilde) == \
        (4, "A1^2", "C1 C2 C4", -1)
    assert row.sd == "S"
    assert row.verdicts[0].rule == "1-i"


def test_analyze_entry6():
    phi = Z2 * STORE[(10, 1)].salem_poly * cyclotomic(4) * cyclotomic(16)
    psi = STORE[(6, 1)].salem_poly * cyclotomic(40)
    row = cli.analyze_pair(phi, psi)
    assert row.accepted()
    assert (row.st_index, row.dynkin, row.phi1_tilde, row.trace_a_tilde) == \
        (2, "E6^2", "C1^4 C2^4 C4^2", -1)
    assert row.sd == "S"


def test_emit_roundtrip():
    phi = Z2 * STORE[(18, 22)].salem_poly * cyclotomic(4)
    psi = STORE[(6, 1)].salem_poly * cyclotomic(48)
    rows = [cli.analyze_pair(phi, psi, s_label="S22^(18)", c_label="C4",
                             aux_s_label="S1^(6)", aux_c_label="C48")]
    text = cli.emit(rows, "json")
    back = cli.parse_rows_json(text)
    assert [r.to_json() for r in back] == [r.to_json() for r in rows]
    csv_text = cli.emit(rows, "csv")
    lines = csv_text.strip().split("\n")
    assert lines[0] == "S,C,s,c_or_psi,ST,Dynkin,phi1,TrA,SD"
    assert lines[1] == "S22^(18),C4,S1^(6),C48,tau4,A1^2,C1 C2 C4,-1,S"


def test_search_setup2_worker_independence():
    subset = CANDS[500:560]
    rows1 = cli.search_setup2(workers=1, candidates=subset)
    rows2 = cli.search_setup2(workers=2, candidates=subset)
    assert cli.emit(rows1, "csv") == cli.emit(rows2, "csv")
    ids = [r.aux_c_label for r in rows1]
    assert "523" in ids


def test_cli_main_analyze(capsys):
    phi = Z2 * STORE[(18, 22)].salem_poly * cyclotomic(4)
    psi = STORE[(6, 1)].salem_poly * cyclotomic(48)
    rc = cli.main(["analyze", "--phi", phi.text(), "--psi", psi.text()])
    out = capsys.readouterr().out
    assert rc == 0
    assert "tau4" in out and "A1^2" in out


def test_cli_main_setup2_enum(tmp_path, capsys):
    out = tmp_path / "cands.json"
    rc = cli.main(["setup2-enum", "--format", "json", "--out", str(out)])
    assert rc == 0
    data = json.loads(out.read_text())
    assert len(data) == 1019
    assert data[522]["id"] == 523
    assert data[522]["coeffs"] == [-1, -2, 0, 2, 1, 0, -1, -2, 0, 1, 1]


def test_empty_emit():
    text = cli.emit([], "csv")
    assert text == "S,C,s,c_or_psi,ST,Dynkin,phi1,TrA,SD\n"


def test_search_setup1_data_unavailable_marker():
    rows = cli.search_setup1(STORE, 20, index_range=(5, 9))
    assert len(rows) == 1
    assert rows[0].rejection.startswith("data unavailable")


def test_poly_arg_accepts_files(tmp_path):
    p = tmp_path / "st.txt"
    p.write_text("[-3,-1,1]\n")
    assert cli._poly_arg(str(p)) == IntPoly([-3, -1, 1])
    assert cli._poly_arg("[-3,-1,1]") == IntPoly([-3, -1, 1])
