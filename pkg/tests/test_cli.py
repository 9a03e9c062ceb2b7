"""Tests for the dst command-line interface, run in-process."""

import json
import shutil
from pathlib import Path

import pytest

from .dst_testkit import fixture_path, run_cli

REPO_ROOT = Path(__file__).resolve().parent.parent

MORPHISM = fixture_path("example_morphism.json")
POINT = fixture_path("point_n2.json")
TERMINAL = fixture_path("terminal_a2.json")


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    """Run every command in an empty directory with reports written there."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("DST_CONFIG", raising=False)
    monkeypatch.setenv("DST_OUTPUT_DIR", str(tmp_path))
    return tmp_path


def run_json(argv):
    code, out, _ = run_cli(argv + ["--json"])
    return code, json.loads(out)


class TestTreeCommands:
    def test_enum_counts(self):
        code, out, _ = run_cli(["tree", "enum", "--max-vertices", "1", "--max-arity", "2"])
        assert code == 0
        assert out.strip().splitlines()[-1] == "4 trees"

    def test_enum_json(self):
        code, data = run_json(["tree", "enum", "--max-vertices", "2", "--max-arity", "2"])
        assert code == 0
        assert data["count"] == 13
        assert data["bounds"] == {"max_vertices": 2, "max_arity": 2}

    def test_enum_symmetric_classes(self):
        code, pl = run_json(["tree", "enum", "--max-vertices", "2", "--max-arity", "2"])
        code, sym = run_json(["tree", "enum", "--max-vertices", "2", "--max-arity", "2", "--kind", "sym"])
        assert code == 0
        assert sym["kind"] == "sym"
        assert sym["count"] < pl["count"]

    def test_graft(self):
        code, out, _ = run_cli(["tree", "graft", "[e,e]", "0", "[e]"])
        assert code == 0
        assert out.splitlines()[0] == "[[e],e]"

    def test_graft_onto_a_non_leaf(self):
        code, _, err = run_cli(["tree", "graft", "[[e],e]", "0", "[e]"])
        assert code == 2
        assert err.startswith("Error:")

    def test_canon(self):
        code, data = run_json(["tree", "canon", "[[e,e],e]", "--kind", "sym"])
        assert code == 0
        assert data["kind"] == "sym"


class TestMorphismCommands:
    def test_hom_from_eta(self):
        code, data = run_json(["hom", "e", "[e,e]"])
        assert code == 0
        assert data["count"] == 3

    def test_hom_empty(self):
        code, out, _ = run_cli(["hom", "[e,e]", "e"])
        assert code == 0
        assert out.strip().endswith("0 morphisms")

    def test_localize_plane(self):
        code, data = run_json(["localize", "pl", MORPHISM])
        assert code == 0
        assert data["functor"] == "pl"
        assert data["map"]["values"] == [0, 1, 2, 4, 4]

    def test_localize_symmetric(self):
        code, data = run_json(["localize", "sym", MORPHISM])
        assert code == 0
        assert data["functor"] == "sym"

    def test_localize_malformed_document(self):
        code, _, _ = run_cli(["localize", "pl", '{"source": "e"}'])
        assert code == 2

    def test_adjoint(self):
        code, out, _ = run_cli(["adjoint", MORPHISM])
        assert code == 0
        assert "T_f = [[[[e],[e],[e,e],[]]]]" in out

    def test_adjoint_with_explicit_map(self):
        code, data = run_json(["adjoint", MORPHISM, "--map", fixture_path("lpl_example.json")])
        assert code == 0
        assert data["unique"] is True
        assert data["candidates"] == 1


class TestCheckCommands:
    def test_two_segal_point(self):
        code, data = run_json(["check", "2segal", POINT])
        assert code == 0
        assert data["result"] is True
        assert data["counterexample"] is None

    def test_presheaf(self):
        code, _, _ = run_cli(["check", "presheaf", POINT])
        assert code == 0

    def test_dendroidal_segal_of_a_restriction(self):
        code, _, _ = run_cli(["check", "dsegal", POINT, "--max-vertices", "2", "--max-arity", "2"])
        assert code == 0

    def test_operad(self):
        code, _, _ = run_cli(["check", "operad", TERMINAL])
        assert code == 0

    def test_invertible_reports_the_criteria(self):
        code, data = run_json(["check", "invertible", TERMINAL])
        assert code == 0
        assert set(data["criteria"]) == {"bp_inverted", "collapse_inverted", "invertible"}

    def test_wrong_document_kind(self):
        code, _, err = run_cli(["check", "presheaf", TERMINAL])
        assert code == 2
        assert "expects a simplicial set" in err

    def test_unknown_predicate(self):
        code, _, _ = run_cli(["check", "3segal", POINT])
        assert code == 2

    def test_nerve(self):
        code, out, _ = run_cli(["nerve", TERMINAL, "[e,e]"])
        assert code == 0
        assert out.strip().endswith("1 elements at [e,e]")


class TestEquivalenceCommands:
    def test_to_operad(self):
        code, data = run_json(["to-operad", POINT])
        assert code == 0
        assert data["direction"] == "simplicial→operad"
        assert data["verified"] is True
        assert len(data["value"]["colors"]) == 1

    def test_to_simplicial(self):
        code, data = run_json(["to-simplicial", TERMINAL])
        assert code == 0
        assert data["value"]["truncation"] == 2

    def test_to_simplicial_beyond_the_bound(self):
        code, data = run_json(["to-simplicial", TERMINAL, "--trunc", "3"])
        assert code == 1
        assert data["verified"] is False

    def test_roundtrip_operad(self):
        code, out, _ = run_cli(["roundtrip", TERMINAL])
        assert code == 0
        assert out.startswith("operad→simplicial→operad: verified")

    def test_roundtrip_simplicial_with_log(self):
        code, out, _ = run_cli(["roundtrip", POINT, "--log"])
        assert code == 0
        assert "exactly one filler" in out


class TestSuiteCommands:
    def test_list(self):
        code, out, _ = run_cli(["list"])
        assert code == 0
        assert "Trees" in out
        assert "Equivalence" in out

    def test_unknown_suite_module(self):
        code, _, err = run_cli(["suite", "--only", "Nope"])
        assert code == 2
        assert "Nope" in err

    @pytest.mark.slow
    def test_suite_only_trees(self, isolated):
        code, out, _ = run_cli(["suite", "--only", "Trees", "--max-vertices", "2", "--max-arity", "2"])
        assert code == 0
        report = json.loads((isolated / "dst-suite-report.json").read_text(encoding="utf-8"))
        assert report["failed"] == 0
        assert report["errors"] == []
        assert all(v["check"].startswith("trees.") for v in report["verdicts"])

    @pytest.mark.slow
    def test_equivalence_suite_with_shipped_configuration(self, isolated):
        for name in ("dst-config.yaml", "dst-user-config.json"):
            shutil.copy(REPO_ROOT / name, isolated / name)
        code, out, _ = run_cli(["suite", "--only", "Equivalence"])
        report = json.loads((isolated / "dst-suite-report.json").read_text(encoding="utf-8"))
        assert [v["counterexample"] for v in report["verdicts"] if not v["result"]] == []
        assert code == 0
        assert "4/4 checks passed" in out
        assert all("N=3, arity<=3" in v["scope"] for v in report["verdicts"])

    @pytest.mark.slow
    def test_suite_with_shipped_configuration(self, isolated):
        for name in ("dst-config.yaml", "dst-user-config.json"):
            shutil.copy(REPO_ROOT / name, isolated / name)
        code, _, _ = run_cli(["suite"])
        report = json.loads((isolated / "dst-suite-report.json").read_text(encoding="utf-8"))
        failures = [f"{v['check']}: {v['counterexample']}" for v in report["verdicts"] if not v["result"]]
        assert failures == []
        assert report["errors"] == []
        assert code == 0
        scopes = {v["check"]: v["scope"] for v in report["verdicts"]}
        assert {check.split(".")[0] for check in scopes} == {
            "trees",
            "tree_hom",
            "simplex_targets",
            "localization",
            "presheaves",
            "operads",
            "equivalence",
        }
        assert scopes["tree_hom.category_laws.pl"] == (
            "all triples at vertices<=2, arity<=3; 200 sampled triples at vertices<=4, arity<=3"
        )
        assert scopes["tree_hom.functoriality"] == "vertices<=3, arity<=3"
        assert scopes["localization.initiality.pl"] == "vertices<=4, arity<=3"
        assert scopes["localization.functoriality.pl"] == "vertices<=3, arity<=3"
        assert scopes["localization.bp_invertible"] == "pl vertices<=3, arity<=3; sym, cyc, rootable vertices<=2, arity<=2"
        assert scopes["equivalence.to_operad"] == "N=3, arity<=3"


class TestUsage:
    def test_no_command(self):
        assert run_cli([])[0] == 2

    def test_version(self):
        assert run_cli(["--version"])[0] == 0

    def test_missing_config_file(self, isolated):
        code, _, err = run_cli(["list", "--config", str(isolated / "absent.yaml")])
        assert code == 2
        assert "does not exist" in err

    def test_missing_document(self, isolated):
        code, _, _ = run_cli(["to-operad", str(isolated / "absent.json")])
        assert code == 2
