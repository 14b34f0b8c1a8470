"""Kernel backend selection: compiled extension if importable, numpy otherwise.

Set PNCSIM_BACKEND=python or PNCSIM_BACKEND=compiled to force a choice; the
default "auto" prefers the compiled core. Both backends expose the same
kernel functions and produce bit-identical results for the same inputs.
"""

from __future__ import annotations

import os
from types import ModuleType

_CHOICES = ("auto", "compiled", "python")


def load_backend(name: str = "auto") -> ModuleType:
    """Return the kernel module for `name`, raising if it is unavailable."""
    if name not in _CHOICES:
        raise ValueError(f"unknown backend {name!r}; choose from {_CHOICES}")
    if name in ("auto", "compiled"):
        try:
            from . import _core

            return _core
        except ImportError:
            if name == "compiled":
                raise
    from . import _core_py

    return _core_py


_kernels = load_backend(os.environ.get("PNCSIM_BACKEND", "auto"))


def get_kernels() -> ModuleType:
    """The kernel module selected at import time."""
    return _kernels


def backend_name() -> str:
    """"compiled" or "python"."""
    return _kernels.BACKEND
