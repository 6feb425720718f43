"""Backend selection for the numerical hot loops.

The compiled Cython extension is preferred; the numpy fallback is used when it
is not built or when ``PEMC_CASIMIR_PURE_PYTHON=1`` is set in the environment.
"""

import os

from . import _kernels_py

adaptive_gk = _kernels_py.adaptive_gk

if os.environ.get("PEMC_CASIMIR_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

li_partial_sum = _impl.li_partial_sum
force_integrand = _impl.force_integrand
integrate_force = _impl.integrate_force


def available_backends():
    """Names of importable backends, compiled first."""
    names = []
    try:
        from . import _ckernels  # noqa: F401
        names.append("cython")
    except ImportError:
        pass
    names.append("python")
    return names


def get_backend(name):
    """Return the kernel module for ``name`` ("cython" or "python")."""
    if name == "python":
        return _kernels_py
    if name == "cython":
        from . import _ckernels
        return _ckernels
    raise ValueError(f"unknown kernel backend {name!r}")
