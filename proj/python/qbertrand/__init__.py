"""Python access to the qbertrand C++ core."""

from ._core import *  # noqa: F401,F403
from ._core import Error, run_verification

__all__ = [name for name in dir() if not name.startswith("_")]


def all_passed(results):
    """True when every non-informational check passed."""
    return all(r.passed for r in results if not r.informational)
