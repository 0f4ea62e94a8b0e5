"""
Constants and configuration values for VarSeq
"""

VERSION = "2026.10.18"

# ANSI color codes
GREEN = '\033[32m'
ORANGE = '\033[33m'
BLUE = '\033[34m'
RED = '\033[31m'
RESET = '\033[0m'
BOLD = '\033[1m'

# Relative tolerance for the float path
REL_TOL = 1e-9

# Oracle limits
DEFAULT_ORACLE_LIMIT = 9
HARD_ORACLE_LIMIT = 11

# Exit codes
EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_TOO_LARGE = 2

THREADS_ENV = 'VARSEQ_THREADS'

# Defaults merged under the user's config.yml
DEFAULT_CONFIG = {
    'threads': 1,
    'oracle_limit': DEFAULT_ORACLE_LIMIT,
    'exact_decimals': False,
    'color': 'auto',
    'debug': False,
    'log_runs': False,
}
