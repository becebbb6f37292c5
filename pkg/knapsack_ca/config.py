"""
Configuration loading.

Bundled defaults live in config.yaml next to this module. A named preset from
presets/ is laid over them next, then a user file passed with --config, each
section by section and key by key.
"""

import copy
from pathlib import Path
from typing import Any, Mapping, Optional

import yaml

from knapsack_ca.exceptions import ConfigError
from knapsack_ca.logger import setup_logger

logger = setup_logger("config")

DEFAULT_CONFIG_PATH = Path(__file__).parent / "config.yaml"
PRESETS_DIR = Path(__file__).parent / "presets"

SECTIONS = ("evolution", "cultural", "bench", "oracle")


def _read_yaml(path: Path) -> dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except OSError as e:
        raise ConfigError(f"Cannot read config file '{path}': {e}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"Config file '{path}' is not valid YAML: {e}") from e

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"Config file '{path}' must contain a mapping at the top level")
    return data


def merge_config(base: Mapping[str, Any], override: Mapping[str, Any]) -> dict[str, Any]:
    """Overlay `override` on `base` one section deep; unknown sections are rejected."""
    merged = copy.deepcopy(dict(base))
    for section, values in override.items():
        if section not in SECTIONS:
            raise ConfigError(f"Unknown config section '{section}' (expected one of {', '.join(SECTIONS)})")
        if values is None:
            continue
        if not isinstance(values, dict):
            raise ConfigError(f"Config section '{section}' must be a mapping")
        merged.setdefault(section, {}).update(values)
    return merged


def available_presets() -> list[str]:
    return sorted(p.stem for p in PRESETS_DIR.glob("*.yaml"))


def load_config(path: Optional[str | Path] = None, preset: Optional[str] = None) -> dict[str, Any]:
    """
    Return the bundled defaults, overlaid with `preset` and then with the YAML
    file at `path`, if given.

    Example:
        load_config()["evolution"]["population_size"]
        -> 100
    """
    config = _read_yaml(DEFAULT_CONFIG_PATH)
    if preset is not None:
        if preset not in available_presets():
            raise ConfigError(f"Unknown preset '{preset}' (available: {', '.join(available_presets())})")
        logger.info(f"Applying preset '{preset}'")
        config = merge_config(config, _read_yaml(PRESETS_DIR / f"{preset}.yaml"))
    if path is not None:
        logger.info(f"Loading config overrides from {path}")
        config = merge_config(config, _read_yaml(Path(path)))
    return config
