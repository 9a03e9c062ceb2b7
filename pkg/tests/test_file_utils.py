"""Tests for JSON document IO and the bundled fixture documents."""

import json

import pytest

from dendro_segal_toolkit.dendro_segal.file_utils import dumps, output_directory, read_json_argument, write_json
from dendro_segal_toolkit.dst_core.exceptions import SerializationError
from dendro_segal_toolkit.modules.operads import FiniteOperad, validate_operad
from dendro_segal_toolkit.modules.presheaves import TruncatedSimplicialSet, constant_point, validate_presheaf
from dendro_segal_toolkit.modules.simplex_targets import DeltaMap
from dendro_segal_toolkit.modules.tree_hom import morphism_from_json

from .dst_testkit import example_morphism, fixture_path, load_fixture, terminal_operad


class TestReadJsonArgument:
    def test_inline_document(self):
        assert read_json_argument('{"a": [1, 2]}') == {"a": [1, 2]}
        assert read_json_argument("  [1]") == [1]
        assert read_json_argument("true") is True
        assert read_json_argument('"e"') == "e"

    def test_file(self):
        assert read_json_argument(fixture_path("lpl_example.json"))["values"] == [0, 1, 2, 4, 4]

    def test_missing_file(self, tmp_path):
        with pytest.raises(SerializationError):
            read_json_argument(str(tmp_path / "absent.json"))

    def test_invalid_inline_document(self):
        with pytest.raises(SerializationError):
            read_json_argument("{unquoted: 1}")

    def test_invalid_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("[1,", encoding="utf-8")
        with pytest.raises(SerializationError):
            read_json_argument(str(path))


class TestWriteJson:
    def test_write_into_output_dir(self, output_dir):
        path = write_json("report.json", {"passed": 3})
        assert path.parent == output_dir
        assert json.loads(path.read_text(encoding="utf-8")) == {"passed": 3}

    def test_output_directory_is_created(self, tmp_path, monkeypatch):
        target = tmp_path / "reports" / "today"
        monkeypatch.setenv("DST_OUTPUT_DIR", str(target))
        assert output_directory() == target
        assert target.is_dir()

    def test_dumps(self):
        assert dumps({"a": 1}, pretty=False) == '{"a": 1}'
        assert dumps([1], pretty=True) == "[\n  1\n]"
        assert dumps("η→T") == '"η→T"'


class TestFixtureDocuments:
    def test_example_morphism(self):
        assert morphism_from_json(load_fixture("example_morphism.json")) == example_morphism()

    def test_lpl_example(self):
        assert DeltaMap.from_json(load_fixture("lpl_example.json")) == DeltaMap(4, 4, (0, 1, 2, 4, 4))

    def test_point(self):
        X = TruncatedSimplicialSet.from_json(load_fixture("point_n2.json"))
        assert X == constant_point(2)
        assert validate_presheaf(X)

    def test_terminal_operad(self):
        operad = FiniteOperad.from_json(load_fixture("terminal_a2.json"))
        assert operad == terminal_operad(2)
        assert validate_operad(operad)
