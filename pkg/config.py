"""
config.py

Runtime knobs for knotbracket. Every knob is an env var (a local .env file
is honoured) so limits can be tuned without code changes; CLI flags always
override these defaults.

    KNOTBRACKET_LOG_LEVEL        default WARNING level of the knotbracket logger tree
    KNOTBRACKET_SEARCH_LIMIT     default 2000000 node budget of the coefficient search
    KNOTBRACKET_MAX_RING_SIZE    default 7       largest modulus the search accepts
    KNOTBRACKET_MAX_CROSSINGS    default 9       crossing cap for random move sequences
    KNOTBRACKET_CANONICAL_LIMIT  default 200000  symmetry variants canonical_code may inspect
"""

import os

from dotenv import load_dotenv

load_dotenv()

# ─────────────────────────────────────────────────────────────────────────────
# Configuration
# ─────────────────────────────────────────────────────────────────────────────

LOG_LEVEL:       str = os.getenv("KNOTBRACKET_LOG_LEVEL", "WARNING").upper()
SEARCH_LIMIT:    int = int(os.getenv("KNOTBRACKET_SEARCH_LIMIT",    "2000000"))
MAX_RING_SIZE:   int = int(os.getenv("KNOTBRACKET_MAX_RING_SIZE",   "7"))
MAX_CROSSINGS:   int = int(os.getenv("KNOTBRACKET_MAX_CROSSINGS",   "9"))
CANONICAL_LIMIT: int = int(os.getenv("KNOTBRACKET_CANONICAL_LIMIT", "200000"))

LOGGER_NAME = "knotbracket"
