"""
Application logger for probvar.

Diagnostics go to standard error so that standard output stays reserved for the
JSON documents written by the command-line front end.
"""

import logging
import sys

from config.config import get_settings

logger = logging.getLogger("probvar")
logger.setLevel(get_settings().LOG_LEVEL.upper())

# Handler bound to stderr; stdout is the data channel
ch = logging.StreamHandler(sys.stderr)
ch.setLevel(logging.DEBUG)

formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
ch.setFormatter(formatter)

if not logger.handlers:
    logger.addHandler(ch)
logger.propagate = False
