"""Runtime-adjustable safety bounds for the brute-force oracles."""

import os

_DEFAULTS = {"moc": 2000, "adic": 20, "corr": 2048}

_ENV_VAR = "SEQLAB_ORACLE_BOUNDS"


def oracle_bound(name: str) -> int:
    """Return the active bound for one oracle.

    Bounds are raised (or lowered) via the environment variable
    SEQLAB_ORACLE_BOUNDS, a comma-separated list of name=value pairs,
    e.g. SEQLAB_ORACLE_BOUNDS="moc=5000,adic=24,corr=4096".
    """
    raw = os.environ.get(_ENV_VAR, "")
    for part in raw.split(","):
        if "=" in part:
            key, value = part.split("=", 1)
            if key.strip() == name:
                return int(value)
    return _DEFAULTS[name]
