"""CLI exit codes, reports, determinism, and rendered artifacts."""

import json


from etalelab.catalog import export_doc
from etalelab.cli import main


def run(args):
    return main(args)


def test_validate_catalog_entry(capsys):
    assert run(["validate", "catalog:fibonacci"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["valid"] and report["conductor"] == 5


def test_validate_broken_document_exits_2(tmp_path, capsys):
    doc = export_doc("fibonacci")
    # flip one F-symbol sign
    blk = next(b for b in doc["F"] if b["abc_d"] == ["t", "t", "t", "t"])
    entry = blk["matrix"][1][1]
    blk["matrix"][1][1] = {"N": entry["N"],
                           "terms": [[-n, d, e]
                                     for n, d, e in entry["terms"]]}
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(doc))
    assert run(["validate", str(path)]) == 2
    assert "Pentagon" in capsys.readouterr().err


def test_check_algebra_exit_codes(tmp_path):
    assert run(["check-algebra", "--category", "catalog:toric-code",
                "--algebra", "catalog:one-plus-e"]) == 0
    # 1+f is not commutative: write its document by hand
    doc = export_doc("one-plus-e")
    bad = tmp_path / "one-plus-f.json"
    text = json.dumps(doc).replace('"e"', '"f"')
    bad.write_text(text)
    assert run(["check-algebra", "--category", "catalog:toric-code",
                "--algebra", str(bad)]) == 1


def test_missing_inputs_exit_2(capsys):
    assert run(["check-algebra", "--algebra", "/nonexistent.json"]) == 2
    assert run(["validate", "catalog:nope"]) == 2
    assert run(["nonsense"]) == 2
    capsys.readouterr()


def test_hypergroup_report_and_artifacts(tmp_path, capsys):
    out = tmp_path / "hyp.json"
    assert run(["hypergroup", "--algebra", "catalog:k-z2",
                "--out", str(out)]) == 0
    capsys.readouterr()
    report = json.loads(out.read_text())
    assert report["dimQ"] == 2 and report["exact"]
    assert len(report["idempotents"]) == 2
    assert (tmp_path / "hyp.csv").exists()
    assert (tmp_path / "hyp.png").exists()


def test_reports_are_deterministic(tmp_path, capsys):
    (tmp_path / "d1").mkdir()
    (tmp_path / "d2").mkdir()
    out1 = tmp_path / "d1" / "report.json"
    out2 = tmp_path / "d2" / "report.json"
    for out in (out1, out2):
        assert run(["symmetry-report", "--algebra", "catalog:k-z2",
                    "--seed", "99", "--out", str(out)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()


def test_fourier_check_passes(capsys):
    assert run(["fourier-check", "--algebra", "catalog:one-plus-e"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["multiplicative"] and report["unit"]
    assert report["roundtrip_inverse_of_forward"]
    assert report["roundtrip_forward_of_inverse"]


def test_check_action_verdicts(capsys):
    assert run(["check-action", "--action", "catalog:kz2-on-k-z2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "GroupAction"
    assert run(["check-action", "--action", "catalog:h8-on-k-v4"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "NotFaithful"


def test_check_action_from_documents(tmp_path, capsys):
    hopf = tmp_path / "hopf.json"
    hopf.write_text(json.dumps(export_doc("kz2")))
    action = tmp_path / "action.json"
    action.write_text(json.dumps(export_doc("kz2-on-k-z2")))
    assert run(["check-action", "--hopf", str(hopf),
                "--algebra", "catalog:k-z2", "--action", str(action)]) == 0
    capsys.readouterr()


def test_etale_scan_command(capsys):
    assert run(["etale-scan", "--category", "catalog:toric-code",
                "--max-qdim", "4"]) == 0
    out = capsys.readouterr().out
    assert "1+e" in out and "1+m" in out


def test_catalog_commands(tmp_path, capsys):
    assert run(["catalog", "list"]) == 0
    assert "toric-code" in capsys.readouterr().out
    out = tmp_path / "fib.json"
    assert run(["catalog", "export", "fibonacci", "--out", str(out)]) == 0
    capsys.readouterr()
    assert json.loads(out.read_text())["name"] == "fibonacci"
    assert run(["catalog", "selftest"]) == 0
    capsys.readouterr()


def test_automorphisms_and_characters(capsys):
    assert run(["automorphisms", "--algebra", "catalog:k-z2"]) == 0
    report = json.loads(capsys.readouterr().out.split("\n", 2)[2])
    assert report["group"] == "Z/2"
    assert run(["characters", "--algebra", "catalog:k-z2"]) == 0
    capsys.readouterr()


def test_convolution_table(capsys):
    assert run(["convolution-table", "--algebra", "catalog:k-z2"]) == 0
    report_text = capsys.readouterr().out
    assert '"commutative": true' in report_text
