"""Feasibility guards for exhaustive scans.

All-pairs scans grow quadratically in the involution count (764 elements at
n=8 already), single-pass scans stay cheap up to n=10.  Guards can be lifted
per call (``max_n=...``) or globally through the ``ORBIT_POSET_MAX_N``
environment variable.
"""

import os

from .errors import TooLarge

ENV_MAX_N = "ORBIT_POSET_MAX_N"

HASSE_MAX_N = 10
ALL_PAIRS_MAX_N = 8
SINGLE_PASS_MAX_N = 10


def effective_cap(default_cap: int, override: int | None = None) -> int:
    """Resolve a guard: explicit override, then environment, then default."""
    if override is not None:
        return override
    env = os.environ.get(ENV_MAX_N)
    if env is not None:
        return int(env)
    return default_cap


def check_guard(n: int, default_cap: int, override: int | None = None) -> None:
    cap = effective_cap(default_cap, override)
    if n > cap:
        raise TooLarge(
            f"n={n} exceeds the feasibility guard {cap}; "
            f"pass a larger max_n or set {ENV_MAX_N}"
        )
