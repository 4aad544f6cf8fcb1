# gacalc/config.py

import os

from dotenv import load_dotenv

load_dotenv()

# --- Defaults (overridable through the environment or a .env file) ---
DEFAULT_ALGEBRA = "pga3"
DEFAULT_SCALARS = "float"

# Hard cap on the number of basis vectors; 2**12 = 4096 blades.
MAX_DIM = 12

FLOAT_TOLERANCE = float(os.getenv("GACALC_FLOAT_TOL", "1e-12"))
CHECK_SEED = int(os.getenv("GACALC_CHECK_SEED", "20240101"))
CHECK_SCALE = float(os.getenv("GACALC_CHECK_SCALE", "1.0"))

API_HOST = os.getenv("GACALC_API_HOST", "127.0.0.1")
API_PORT = int(os.getenv("GACALC_API_PORT", "8000"))


def default_algebra() -> str:
    """Algebra selector used when the command line names none."""
    return os.getenv("GACALC_ALGEBRA", DEFAULT_ALGEBRA)


def default_scalars() -> str:
    """Scalar mode used when the command line names none."""
    return os.getenv("GACALC_SCALARS", DEFAULT_SCALARS)
