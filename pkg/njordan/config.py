import logging
import os
from dotenv import load_dotenv

load_dotenv()

"""
This file is used to load the environment variables and the desk-scale guards
It is used by the CLI and by every service that enumerates or samples
"""

# raw strings, converted and validated by the command line parser
THREADS = os.getenv("NJORDAN_THREADS", "1")
DEFAULT_SEED = os.getenv("NJORDAN_SEED", "0")
LOG_LEVEL = os.getenv("NJORDAN_LOG_LEVEL", "WARNING")

# ---- Guards ----
ENUMERATION_CAP = 10**7
ASSIGNMENT_CAP = 10**5
ELEMENT_CAP = 10**6
TUPLE_CAP = 10**7
INSTANCE_VARS_CAP = 4
COEFF_RANGE_CAP = 2
MAX_MATRIX_SIZE = 4
MAX_POINTS = 4
ALLOWED_MODULI = (2, 3, 5, 7)

# ---- Numeric checks ----
DEFAULT_SAMPLES = 256
FILTER_TOL = 1e-9
ALGEBRA_TOL = 1e-12


def configure_logging(verbose: bool = False):
    level = logging.DEBUG if verbose else getattr(logging, LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
    )
