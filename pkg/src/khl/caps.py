"""Work caps guarding loops and enumerations.

``KHL_WORK_CAP`` in the environment overrides the default cap for both
the k-scan in the counting module and lattice-point enumeration.
"""

from __future__ import annotations

import os

DEFAULT_WORK_CAP = 2**31
DEFAULT_ENUM_CAP = 2**23

ENV_VAR = "KHL_WORK_CAP"


def work_cap() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_WORK_CAP
    return int(raw)


def enum_cap() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_ENUM_CAP
    return int(raw)
