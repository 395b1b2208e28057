import json
import os

import pytest

from halab.cli import main

DOCS = os.path.join(os.path.dirname(__file__), os.pardir, "documents")


def doc_paths():
    out = []
    for name in sorted(os.listdir(DOCS)):
        if name.endswith(".json"):
            out.append(os.path.join(DOCS, name))
    return out


class TestCheckDocuments:
    def test_shipped_documents(self, capsys):
        assert doc_paths(), "document corpus missing"
        for path in doc_paths():
            expected = 1 if os.path.basename(path).startswith("mut_") else 0
            code = main(["check", path])
            capsys.readouterr()
            assert code == expected, path

    def test_mutation_reports_name_the_tag(self, capsys):
        path = os.path.join(DOCS, "mut_broken_counit.json")
        assert main(["check", path, "--json"]) == 1
        report = json.loads(capsys.readouterr().out)
        text = json.dumps(report)
        assert "counit" in text

    def test_json_output_is_deterministic(self, capsys):
        path = os.path.join(DOCS, "kz3_hopf.json")
        assert main(["check", path, "--json"]) == 0
        first = capsys.readouterr().out
        assert main(["check", path, "--json"]) == 0
        assert capsys.readouterr().out == first

    def test_level_override(self, capsys):
        path = os.path.join(DOCS, "kz3_hopf.json")
        assert main(["check", path, "--level", "algebra"]) == 0
        capsys.readouterr()


class TestSchemaErrors:
    def test_missing_file(self, capsys):
        assert main(["check", "no-such-file.json"]) == 2
        capsys.readouterr()

    def test_invalid_json(self, tmp_path, capsys):
        p = tmp_path / "broken.json"
        p.write_text("{not json")
        assert main(["check", str(p)]) == 2
        capsys.readouterr()

    def test_unknown_kind(self, tmp_path, capsys):
        p = tmp_path / "odd.json"
        p.write_text(json.dumps({"kind": "mystery", "field": None,
                                 "payload": {}}))
        assert main(["check", str(p)]) == 2
        capsys.readouterr()

    def test_field_flag_conflicts_with_declared_field(self, capsys):
        path = os.path.join(DOCS, "kz3_hopf.json")
        with open(path, encoding="utf-8") as fh:
            declared = json.load(fh)["field"]
        assert declared is not None
        assert main(["check", path, "--field", "Q"]) == 2
        capsys.readouterr()


class TestBuild:
    def test_groupoid_algebra_round_trip(self, tmp_path, capsys):
        out = tmp_path / "built.json"
        src = os.path.join(DOCS, "z3_groupoid.json")
        assert main(["build", "groupoid-algebra", src, "-o", str(out)]) == 0
        capsys.readouterr()
        assert main(["check", str(out)]) == 0
        capsys.readouterr()

    def test_function_algebroid_round_trip(self, tmp_path, capsys):
        out = tmp_path / "func.json"
        src = os.path.join(DOCS, "z3_groupoid.json")
        assert main(["build", "function-algebroid", src, "-o", str(out)]) == 0
        capsys.readouterr()
        assert main(["check", str(out), "--level", "hopf-algebroid"]) == 0
        capsys.readouterr()

    def test_twisted_build(self, tmp_path, capsys):
        out = tmp_path / "twisted.json"
        assert main(["build", "twisted", "--n", "2", "--t", "1",
                     "-o", str(out)]) == 0
        capsys.readouterr()
        assert main(["check", str(out)]) == 0
        capsys.readouterr()
        with open(out, encoding="utf-8") as fh:
            doc = json.load(fh)
        assert doc["kind"] == "algebra"

    def test_classical_covering_build(self, tmp_path, capsys):
        out = tmp_path / "cover.json"
        src = os.path.join(DOCS, "regular_z2_gset.json")
        assert main(["build", "classical-covering", src,
                     "-o", str(out)]) == 0
        capsys.readouterr()
        assert main(["check", str(out), "--level", "covering"]) == 0
        capsys.readouterr()

    def test_coupled_build_from_raw_payload(self, tmp_path, capsys):
        out = tmp_path / "coupled.json"
        src = os.path.join(DOCS, "inputs", "z4_character.json")
        assert main(["build", "coupled", src, "-o", str(out)]) == 0
        capsys.readouterr()
        assert main(["check", str(out)]) == 0
        capsys.readouterr()


def test_torus_battery(capsys):
    assert main(["torus", "--n", "2", "--samples", "40"]) == 0
    out = capsys.readouterr().out
    assert "pass" in out
