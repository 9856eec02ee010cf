"""Selects the compiled kernels when importable, else the numpy fallback."""

try:
    from . import _kernels as _impl

    BACKEND = "cython"
except ImportError:  # extension not built
    from . import _kernels_py as _impl

    BACKEND = "python"

partner_values = _impl.partner_values
region_distances = _impl.region_distances
