"""Backend selection for the orbit-enumeration kernel.

The compiled extension is preferred when it was built; otherwise the
pure-Python twin is used.  Both expose count_profile_orbits with identical
semantics, and both can be obtained explicitly (for benchmarks and
cross-checking) via available_backends().
"""

from __future__ import annotations

from . import _orbit_kernel_py

try:
    from . import _orbit_kernel as _compiled  # type: ignore[attr-defined]
except ImportError:
    _compiled = None

OrbitCheckError = _orbit_kernel_py.OrbitCheckError

if _compiled is not None:
    BACKEND = "compiled"
    count_profile_orbits = _compiled.count_profile_orbits
else:
    BACKEND = "python"
    count_profile_orbits = _orbit_kernel_py.count_profile_orbits


def available_backends() -> dict:
    """Name -> count_profile_orbits callable, for every importable backend."""
    backends = {"python": _orbit_kernel_py.count_profile_orbits}
    if _compiled is not None:
        backends["compiled"] = _compiled.count_profile_orbits
    return backends
