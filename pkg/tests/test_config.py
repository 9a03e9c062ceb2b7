"""Tests for ToolkitConfig and the config_utils helpers."""

import json
from pathlib import Path

import pytest

from dendro_segal_toolkit.dendro_segal.config_utils import (
    load_json_config,
    load_yaml_config,
    save_json_config,
    validate_config_structure,
)
from dendro_segal_toolkit.dst_core.config import CONFIG_ENV, ToolkitConfig, load_user_config
from dendro_segal_toolkit.dst_core.exceptions import ConfigurationError

REPO_ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture
def clean_dir(tmp_path, monkeypatch):
    """A working directory without dst-config.yaml and no DST_CONFIG."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(CONFIG_ENV, raising=False)
    return tmp_path


def write_yaml(path, text):
    path.write_text(text, encoding="utf-8")
    return str(path)


class TestToolkitConfig:
    def test_defaults(self, clean_dir):
        config = ToolkitConfig()
        assert config.path is None
        assert config.truncation == 4
        assert config.tree_bounds == {"max_vertices": 4, "max_arity": 3}
        assert config.operad_bounds["arity_bound"] == 3
        assert config.seed == 0
        assert config.samples == 200
        assert [m["name"] for m in config.modules][0] == "Trees"

    def test_defaults_are_not_shared(self, clean_dir):
        config = ToolkitConfig()
        config.tree_bounds["max_vertices"] = 1
        assert ToolkitConfig().tree_bounds["max_vertices"] == 4

    def test_yaml_is_merged(self, clean_dir):
        path = write_yaml(clean_dir / "bounds.yaml", "bounds:\n  trees:\n    max_vertices: 2\n  truncation: 3\n")
        config = ToolkitConfig(path)
        assert config.tree_bounds == {"max_vertices": 2, "max_arity": 3}
        assert config.truncation == 3
        assert config.operad_bounds["max_colors"] == 3

    def test_local_file_is_found(self, clean_dir):
        write_yaml(clean_dir / "dst-config.yaml", "suite:\n  seed: 11\n")
        config = ToolkitConfig()
        assert config.seed == 11
        assert config.samples == 200

    def test_environment_variable(self, clean_dir, monkeypatch):
        path = write_yaml(clean_dir / "env.yaml", "bounds:\n  truncation: 2\n")
        monkeypatch.setenv(CONFIG_ENV, path)
        assert ToolkitConfig().truncation == 2

    def test_missing_config_flag(self, clean_dir):
        with pytest.raises(ConfigurationError):
            ToolkitConfig(str(clean_dir / "missing.yaml"))

    def test_environment_points_to_missing_file(self, clean_dir, monkeypatch):
        monkeypatch.setenv(CONFIG_ENV, str(clean_dir / "missing.yaml"))
        with pytest.raises(ConfigurationError):
            ToolkitConfig()

    @pytest.mark.parametrize(
        "text",
        [
            "bounds:\n  trees:\n    max_vertices: -1\n",
            "bounds:\n  truncation: three\n",
            "modules:\n  - required: true\n",
            "- just\n- a list\n",
            "bounds: [unclosed\n",
        ],
    )
    def test_invalid_files(self, clean_dir, text):
        path = write_yaml(clean_dir / "bad.yaml", text)
        with pytest.raises(ConfigurationError):
            ToolkitConfig(path)

    def test_apply_overrides(self, clean_dir):
        config = ToolkitConfig()
        config.apply_overrides({"trees": {"max_arity": 1}, "truncation": 2}, seed=5)
        assert config.tree_bounds == {"max_vertices": 4, "max_arity": 1}
        assert config.truncation == 2
        assert config.seed == 5

    def test_apply_overrides_keeps_seed(self, clean_dir):
        config = ToolkitConfig()
        config.apply_overrides({})
        assert config.seed == 0

    def test_suite_context_is_a_copy(self, clean_dir):
        config = ToolkitConfig()
        context = config.suite_context()
        context["bounds"]["truncation"] = 1
        assert config.truncation == 4
        assert context["seed"] == 0

    def test_module_config(self, clean_dir):
        section = ToolkitConfig().module_config()
        assert set(section) == {"modules", "global_config"}
        assert section["global_config"] == {}

    def test_shipped_files_match_the_defaults(self, clean_dir):
        config = ToolkitConfig(str(REPO_ROOT / "dst-config.yaml"))
        assert config.config == ToolkitConfig.DEFAULT_CONFIG
        assert config.bounds["pairs"] == {"max_vertices": 3, "max_arity": 3}

    def test_shipped_user_config_keeps_the_bounds(self):
        user_config = load_user_config(str(REPO_ROOT / "dst-user-config.json"))
        assert user_config["moduleOverrides"] == {}
        assert user_config["disabledModules"] == []


class TestConfigUtils:
    def test_missing_json_file(self, tmp_path):
        assert load_json_config(str(tmp_path / "absent.json")) is None

    def test_invalid_json_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        assert load_json_config(str(path)) is None

    def test_wrongly_typed_field(self, tmp_path):
        path = tmp_path / "user.json"
        path.write_text(json.dumps({"disabledModules": "Operads"}), encoding="utf-8")
        assert load_json_config(str(path)) is None

    def test_valid_user_config(self, tmp_path):
        path = tmp_path / "user.json"
        data = {"disabledModules": ["Equivalence"], "moduleOverrides": {"Trees": {"samples": 3}}}
        path.write_text(json.dumps(data), encoding="utf-8")
        assert load_user_config(str(path)) == data

    def test_save_json_config(self, tmp_path):
        path = tmp_path / "nested" / "user.json"
        assert save_json_config(str(path), {"enabledModules": []})
        saved = json.loads(path.read_text(encoding="utf-8"))
        assert "lastUpdated" in saved

    def test_save_without_timestamp(self, tmp_path):
        path = tmp_path / "user.json"
        save_json_config(str(path), {"enabledModules": []}, update_timestamp=False)
        assert json.loads(path.read_text(encoding="utf-8")) == {"enabledModules": []}

    def test_load_yaml_empty_file(self, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("", encoding="utf-8")
        assert load_yaml_config(str(path)) == {}

    def test_load_yaml_missing_file(self, tmp_path):
        with pytest.raises(ConfigurationError):
            load_yaml_config(str(tmp_path / "absent.yaml"))

    def test_validate_config_structure(self):
        assert validate_config_structure({"a": 1}, ["a"]) == (True, "")
        assert validate_config_structure([], []) == (False, "Configuration must be a dictionary")
        valid, error = validate_config_structure({}, ["a", "b"])
        assert not valid
        assert "a, b" in error
        valid, error = validate_config_structure({"a": "x"}, [], {"a": int})
        assert not valid
        assert "must be int, got str" in error
