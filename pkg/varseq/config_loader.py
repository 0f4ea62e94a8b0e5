"""
Configuration loading and management for VarSeq
"""

import os
import sys
from copy import deepcopy
from pathlib import Path

import yaml

from .constants import (
    ORANGE, RESET,
    DEFAULT_CONFIG, HARD_ORACLE_LIMIT, THREADS_ENV
)


def get_config_dir():
    """Return the config directory path."""
    return Path(__file__).parent.parent / 'config'


def normalize_config(config):
    """Coerce config values to the types the rest of the package expects.

    Booleans accept the usual YAML spellings and strings like 'True'.
    `oracle_limit` is clamped to the hard refusal limit and `threads`
    may be overridden by VARSEQ_THREADS.
    """
    for key in ('exact_decimals', 'debug', 'log_runs'):
        config[key] = str(config.get(key, False)).lower() == 'true'

    try:
        config['threads'] = max(1, int(config.get('threads', 1)))
    except (TypeError, ValueError):
        print(f"{ORANGE}Warning: invalid threads value {config.get('threads')!r}, using 1{RESET}",
              file=sys.stderr)
        config['threads'] = 1

    env_threads = os.environ.get(THREADS_ENV, '').strip()
    if env_threads:
        try:
            config['threads'] = max(1, int(env_threads))
        except ValueError:
            print(f"{ORANGE}Warning: ignoring {THREADS_ENV}={env_threads!r} (not an integer){RESET}",
                  file=sys.stderr)

    try:
        limit = int(config.get('oracle_limit', DEFAULT_CONFIG['oracle_limit']))
    except (TypeError, ValueError):
        limit = DEFAULT_CONFIG['oracle_limit']
    config['oracle_limit'] = max(1, min(limit, HARD_ORACLE_LIMIT))

    config['color'] = str(config.get('color', 'auto')).lower()
    return config


def load_config(file_path=None):
    """Load configuration with defaults for every missing key"""
    if file_path is None:
        file_path = get_config_dir() / 'config.yml'

    # Start with a deep copy of defaults
    config = deepcopy(DEFAULT_CONFIG)

    try:
        with open(file_path, 'r', encoding='utf-8') as file:
            user_config = yaml.safe_load(file)
            if user_config:
                if not isinstance(user_config, dict):
                    raise yaml.YAMLError("top level must be a mapping")
                for key, value in user_config.items():
                    if key in config:
                        config[key] = value
                    else:
                        print(f"{ORANGE}Warning: unknown config key '{key}' ignored{RESET}", file=sys.stderr)
    except FileNotFoundError:
        # Silently use defaults if file doesn't exist
        pass
    except yaml.YAMLError as e:
        print(f"{ORANGE}Warning: Error parsing config file, using defaults: {e}{RESET}", file=sys.stderr)
    except OSError as e:
        print(f"{ORANGE}Warning: Could not load config file, using defaults: {e}{RESET}", file=sys.stderr)

    return normalize_config(config)
