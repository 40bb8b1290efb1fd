SCHEMA_VERSION = 1

FLOAT_REL_TOL = 1e-9
NUMERIC_DIFF_REL_TOL = 1e-7
ORACLE_DPS = 50

MAX_EXPR_NODES = 64
MAX_DERIVATIVE_ORDER = 20
DEFAULT_ORDER = 5
DECIMAL_DIGITS = 15

FORMAT_ENV_VAR = "COMPOSITAE_FORMAT"
LOG_LEVEL_ENV_VAR = "COMPOSITAE_LOG_LEVEL"
DEFAULT_FORMAT = "text"
DEFAULT_LOG_LEVEL = "WARNING"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
