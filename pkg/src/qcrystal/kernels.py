"""Backend selection for the word kernels.

The compiled extension is used when it imports; set ``QCRYSTAL_PURE_PYTHON=1``
to force the pure-Python implementation.
"""

import os

_NAMES = (
    "weight", "eps", "phi", "f_even", "e_even", "f_odd1", "e_odd1",
    "s_action", "s_apply", "conjugator", "f_odd", "e_odd", "f_all", "e_all",
)


def _load_backend():
    if not os.environ.get("QCRYSTAL_PURE_PYTHON"):
        try:
            from . import _kernels
            return _kernels, "cython"
        except ImportError:
            pass
    from . import _kernels_py
    return _kernels_py, "python"


_backend, BACKEND = _load_backend()

weight = _backend.weight
eps = _backend.eps
phi = _backend.phi
f_even = _backend.f_even
e_even = _backend.e_even
f_odd1 = _backend.f_odd1
e_odd1 = _backend.e_odd1
s_action = _backend.s_action
s_apply = _backend.s_apply
conjugator = _backend.conjugator
f_odd = _backend.f_odd
e_odd = _backend.e_odd
f_all = _backend.f_all
e_all = _backend.e_all

__all__ = ["BACKEND", *_NAMES]
