"""
Toolkit configuration.

Defaults are deep-merged with a YAML file, found through the ``--config``
flag, the ``DST_CONFIG`` environment variable or ``dst-config.yaml`` in the
working directory, in that order.
"""

import copy
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

from dendro_segal_toolkit.dendro_segal.config_utils import load_json_config, load_yaml_config

from .exceptions import ConfigurationError

logger = logging.getLogger(__name__)

CONFIG_ENV = "DST_CONFIG"
CONFIG_FILENAME = "dst-config.yaml"
USER_CONFIG_FILENAME = "dst-user-config.json"


class ToolkitConfig:
    """Configuration management for the dendro-segal toolkit."""

    DEFAULT_CONFIG = {
        'bounds': {
            'trees': {'max_vertices': 4, 'max_arity': 3},
            'pairs': {'max_vertices': 3, 'max_arity': 3},
            'morphisms': {'max_vertices': 2, 'max_arity': 3},
            'variants': {'max_vertices': 2, 'max_arity': 2},
            'truncation': 4,
            'operads': {'max_colors': 3, 'arity_bound': 3, 'nerve_max_vertices': 3},
        },
        'suite': {
            'seed': 0,
            'samples': 200,
        },
        'modules': [
            {'name': 'Trees', 'required': True},
            {'name': 'TreeHom', 'dependencies': ['Trees']},
            {'name': 'SimplexTargets'},
            {'name': 'Localization', 'dependencies': ['TreeHom', 'SimplexTargets']},
            {'name': 'Presheaves', 'dependencies': ['Localization']},
            {'name': 'Operads', 'dependencies': ['Presheaves']},
            {'name': 'Equivalence', 'dependencies': ['Operads']},
        ],
    }

    def __init__(self, config_path: Optional[str] = None):
        self.path = self.locate(config_path)
        self.config = self._load_config(self.path)

    @staticmethod
    def locate(config_path: Optional[str] = None) -> Optional[Path]:
        """The config file to read, or None for the built-in defaults."""
        if config_path:
            path = Path(config_path)
            if not path.exists():
                raise ConfigurationError(f"Config file {config_path} does not exist")
            return path
        env_path = os.environ.get(CONFIG_ENV)
        if env_path:
            path = Path(env_path)
            if not path.exists():
                raise ConfigurationError(f"{CONFIG_ENV} points to missing file {env_path}")
            return path
        local = Path(CONFIG_FILENAME)
        return local if local.exists() else None

    def _load_config(self, path: Optional[Path]) -> Dict[str, Any]:
        """Load configuration from file or use defaults."""
        config = copy.deepcopy(self.DEFAULT_CONFIG)
        if path is None:
            logger.info("No config file found, using built-in defaults")
            return config
        logger.info(f"Loading configuration from {path}")
        _deep_merge(config, load_yaml_config(str(path)))
        self._validate(config)
        return config

    @staticmethod
    def _validate(config: Dict[str, Any]) -> None:
        bounds = config['bounds']
        for section in ('trees', 'pairs', 'morphisms', 'variants', 'operads'):
            for key, value in bounds[section].items():
                if not isinstance(value, int) or value < 0:
                    raise ConfigurationError(f"bounds.{section}.{key} must be a non-negative integer, got {value!r}")
        if not isinstance(bounds['truncation'], int) or bounds['truncation'] < 0:
            raise ConfigurationError(f"bounds.truncation must be a non-negative integer, got {bounds['truncation']!r}")
        if not isinstance(config['modules'], list) or not all(
            isinstance(m, dict) and 'name' in m for m in config['modules']
        ):
            raise ConfigurationError("modules must be a list of entries with a 'name'")

    def apply_overrides(self, bounds: Dict[str, Any], seed: Optional[int] = None) -> None:
        """Apply CLI flags on top of the loaded file."""
        _deep_merge(self.config['bounds'], copy.deepcopy(bounds))
        if seed is not None:
            self.config['suite']['seed'] = seed
        if bounds:
            logger.info(f"Bounds after CLI overrides: {self.config['bounds']}")

    @property
    def bounds(self) -> Dict[str, Any]:
        return self.config['bounds']

    @property
    def tree_bounds(self) -> Dict[str, int]:
        return self.config['bounds']['trees']

    @property
    def truncation(self) -> int:
        return self.config['bounds']['truncation']

    @property
    def operad_bounds(self) -> Dict[str, int]:
        return self.config['bounds']['operads']

    @property
    def seed(self) -> int:
        return self.config['suite'].get('seed', self.DEFAULT_CONFIG['suite']['seed'])

    @property
    def samples(self) -> int:
        return self.config['suite'].get('samples', self.DEFAULT_CONFIG['suite']['samples'])

    @property
    def modules(self) -> List[Dict[str, Any]]:
        return self.config['modules']

    def module_config(self) -> Dict[str, Any]:
        """The section handed to ModuleSequencer.load_configurations."""
        return {'modules': self.modules, 'global_config': self.config.get('global_config', {})}

    def suite_context(self) -> Dict[str, Any]:
        return {'bounds': copy.deepcopy(self.bounds), 'seed': self.seed, 'samples': self.samples}


def load_user_config(path: str = USER_CONFIG_FILENAME) -> Optional[Dict[str, Any]]:
    """The optional JSON user preferences."""
    return load_json_config(path)


def _deep_merge(base: Dict[str, Any], update: Dict[str, Any]) -> Dict[str, Any]:
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _deep_merge(base[key], value)
        else:
            base[key] = value
    return base
