import json
import os

import pytest

from twocheck import cli, deffile
from twocheck.errors import DefinitionError, ParseError, UnknownAudit, UnresolvedReference
from twocheck.fixtures import load_fixture
from twocheck.report import as_document, render_json


def test_parse_bundled_inner_s3():
    defs = deffile.parse_document(load_fixture("inner_s3"), source="fixture:inner_s3")
    assert "xm" in defs.crossed_modules
    assert len(defs.reps["hreps"]) == 3
    assert defs.two_reps["tr"].carrier is not None


def test_unresolved_reference():
    doc = {"crossed_modules": {"x": {"h": "nope", "g": "nope", "action": "a"}}}
    with pytest.raises(UnresolvedReference):
        deffile.parse_document(doc)


def test_validation_error_carries_witness():
    doc = {
        "groups": {
            "bad": {
                "kind": "table",
                "elements": ["0", "1", "2"],
                "table": {
                    f"{a}|{b}": str((a - b) % 3) for a in range(3) for b in range(3)
                },
            }
        }
    }
    with pytest.raises(DefinitionError) as ei:
        deffile.parse_document(doc)
    section, name, witness = ei.value.witness
    assert section == "groups" and name == "bad"
    assert witness is not None


def test_parse_error_on_bad_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(ParseError):
        deffile.parse(str(p))
    with pytest.raises(ParseError):
        deffile.parse(str(tmp_path / "missing.json"))


def test_unknown_audit():
    defs = deffile.parse_document({"audits": [{"run": "nope"}]})
    with pytest.raises(UnknownAudit):
        deffile.run_audits(defs)


def test_cli_audit_pass_exit_zero(tmp_path, capsys):
    doc = load_fixture("id_z3")
    p = tmp_path / "f.json"
    p.write_text(json.dumps(doc))
    rc = cli.main(["audit", str(p)])
    out = capsys.readouterr().out
    assert rc == 0
    assert "PASS" in out and "pentagon" in out


def test_cli_audit_fail_exit_one(capsys):
    rc = cli.main(["audit", "mut_pentagon"])
    out = capsys.readouterr().out
    assert rc == 1
    assert "FAIL" in out
    assert "counterexample" in out


def test_cli_audit_missing_exit_two(capsys):
    rc = cli.main(["audit", "/definitely/not/here.json"])
    assert rc == 2


def test_cli_only_filter(capsys):
    rc = cli.main(["audit", "id_z2", "--only", "pentagon"])
    out = capsys.readouterr().out
    assert rc == 0
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    assert len(lines) == 1 and lines[0].startswith("pentagon")


def test_cli_json_reports_byte_identical(tmp_path, capsys):
    p1, p2 = tmp_path / "r1.json", tmp_path / "r2.json"
    cli.main(["audit", "id_z2", "--json", str(p1), "--seed", "7"])
    cli.main(["audit", "id_z2", "--json", str(p2), "--seed", "7"])
    capsys.readouterr()
    assert p1.read_bytes() == p2.read_bytes()
    doc = json.loads(p1.read_text())
    assert doc["schema"] == "twocheck-report/1"
    assert doc["seed"] == 7


def test_cli_seed_env(monkeypatch, tmp_path, capsys):
    monkeypatch.setenv(cli.SEED_ENV, "99")
    p = tmp_path / "r.json"
    cli.main(["audit", "id_z2", "--json", str(p)])
    capsys.readouterr()
    assert json.loads(p.read_text())["seed"] == 99


def test_cli_figure_written(tmp_path, capsys):
    fig = tmp_path / "summary.png"
    rc = cli.main(["audit", "id_z2", "--figure", str(fig)])
    capsys.readouterr()
    assert rc == 0
    assert fig.exists() and fig.stat().st_size > 0


def test_cli_fixtures_list_and_show(capsys):
    rc = cli.main(["fixtures", "list"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "inner_s3" in out
    rc = cli.main(["fixtures", "show", "inner_s3"])
    out = capsys.readouterr().out
    assert rc == 0
    doc = json.loads(out)
    assert "crossed_modules" in doc
    rc = cli.main(["fixtures", "show", "nope"])
    assert rc == 2


def test_shipped_fixture_files_parse():
    here = os.path.join(os.path.dirname(cli.__file__), "data")
    names = sorted(os.listdir(here))
    assert "inner_s3.json" in names
    defs = deffile.parse(os.path.join(here, "inner_s3.json"))
    assert "tr" in defs.two_reps


def test_report_document_counterexample_cap():
    from twocheck.report import AuditReport

    r = AuditReport("law", "t")
    for i in range(10):
        r.fail(i)
    doc = as_document([r], max_counterexamples=3)
    assert len(doc["audits"][0]["counterexamples"]) == 3
    assert doc["audits"][0]["failures"] == 10
    assert render_json(doc).endswith("\n")


def test_parse_groupoid_and_inclusion_sections():
    doc = {
        "groups": {"Z3": {"kind": "cyclic", "order": 3}},
        "groupoids": {
            "b3": {"kind": "delooping", "group": "Z3"},
            "d2": {"kind": "discrete", "objects": ["a", "b"]},
            "act": {"kind": "action", "h_group": "Z3", "base_group": "Z3"},
        },
        "inclusions": {
            "inc": {"kind": "double", "of": "b3", "object": "*", "copy": "*2"}
        },
    }
    defs = deffile.parse_document(doc)
    assert len(defs.groupoids["b3"].arrows) == 3
    assert len(defs.groupoids["d2"].objects) == 2
    assert defs.groupoids["act"].iso("0", "2")
    inc = defs.inclusions["inc"]
    assert "*2" in inc.ambient.objects
    from twocheck.groupoids import quasi_inverse

    xi, eps, eta = quasi_inverse(inc)
    assert xi.obj_map["*2"] == "*"


def test_parse_rep_tables_section():
    doc = {
        "groups": {"Z2": {"kind": "cyclic", "order": 2}},
        "groupoids": {"b2": {"kind": "delooping", "group": "Z2"}},
        "reps": {
            "sgn": {
                "kind": "tables",
                "groupoid": "b2",
                "dims": {"*": 1},
                "mats": {"0": [["1"]], "1": [["-1"]]},
            }
        },
    }
    defs = deffile.parse_document(doc)
    rep = defs.reps["sgn"][0]
    assert rep.mats["1"].entries[0][0] == -1


def test_cli_empty_selection_exits_zero(capsys):
    rc = cli.main(["audit", "id_z2", "--only", "no-such-law"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "# 0 audits, 0 failing" in out


def test_cli_figure_for_failing_report(tmp_path, capsys):
    fig = tmp_path / "bad.png"
    rc = cli.main(["audit", "mut_pentagon", "--figure", str(fig)])
    capsys.readouterr()
    assert rc == 1
    assert fig.exists() and fig.stat().st_size > 0
