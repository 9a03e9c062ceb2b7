"""
config_utils.py - Configuration file helpers.

JSON user configuration (enabled/disabled suite modules and per-module
overrides), YAML toolkit configuration, and a small structural validator.

Example:
    config = load_json_config("dst-user-config.json")
    if config:
        print(config.get("disabledModules", []))
"""

import json
import logging
import os
from datetime import datetime
from typing import Any, Dict, List, Optional, Tuple

import yaml

from dendro_segal_toolkit.dst_core.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

USER_CONFIG_FIELDS = {
    "enabledModules": list,
    "disabledModules": list,
    "moduleOverrides": dict,
}


def load_json_config(config_path: str) -> Optional[Dict[str, Any]]:
    """
    Load configuration from a JSON file.

    Returns:
        Dictionary with configuration data or None if the file doesn't exist or is invalid
    """
    expanded_path = os.path.expanduser(config_path)
    if not os.path.exists(expanded_path):
        return None

    try:
        with open(expanded_path, "r", encoding="utf-8") as f:
            config = json.load(f)
    except (json.JSONDecodeError, IOError) as e:
        logger.warning(f"Could not load configuration from {expanded_path}: {e}")
        return None

    is_valid, error = validate_config_structure(config, [], USER_CONFIG_FIELDS)
    if not is_valid:
        logger.warning(f"Ignoring {expanded_path}: {error}")
        return None
    return config


def save_json_config(config_path: str, config_data: Dict[str, Any], update_timestamp: bool = True) -> bool:
    """Save configuration to a JSON file; returns False on IO errors."""
    expanded_path = os.path.expanduser(config_path)
    try:
        dir_name = os.path.dirname(expanded_path)
        if dir_name:
            os.makedirs(dir_name, exist_ok=True)
        if update_timestamp:
            config_data["lastUpdated"] = datetime.now().isoformat()
        with open(expanded_path, "w", encoding="utf-8") as f:
            json.dump(config_data, f, indent=2)
        return True
    except (IOError, OSError) as e:
        logger.error(f"Could not save configuration to {expanded_path}: {e}")
        return False


def load_yaml_config(config_path: str) -> Dict[str, Any]:
    """
    Load a YAML mapping.

    Raises:
        ConfigurationError: if the file cannot be parsed or is not a mapping
    """
    try:
        with open(config_path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Could not parse {config_path}: {e}") from e
    except OSError as e:
        raise ConfigurationError(f"Could not read {config_path}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigurationError(f"{config_path} must contain a mapping, got {type(data).__name__}")
    return data


def validate_config_structure(
    config: Any,
    required_fields: List[str],
    field_types: Optional[Dict[str, type]] = None,
) -> Tuple[bool, str]:
    """
    Generic configuration validation with type checking.

    Returns:
        Tuple of (is_valid, error_message); the message is empty when valid
    """
    if not isinstance(config, dict):
        return False, "Configuration must be a dictionary"

    missing_fields = [field for field in required_fields if field not in config]
    if missing_fields:
        return False, f"Missing required fields: {', '.join(missing_fields)}"

    if field_types:
        for field, expected_type in field_types.items():
            if field in config and not isinstance(config[field], expected_type):
                actual_type = type(config[field]).__name__
                return False, f"Field '{field}' must be {expected_type.__name__}, got {actual_type}"

    return True, ""
