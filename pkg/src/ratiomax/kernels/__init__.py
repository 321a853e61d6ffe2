"""Hot scan kernels, compiled when available.

The Cython build (``_ckernels``) is used when it imports; otherwise the
NumPy implementation in ``_pykernels`` is selected. Setting the environment
variable ``RATIOMAX_PURE_PYTHON=1`` forces the fallback.

``BACKEND`` names the active implementation ("cython" or "python").
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("RATIOMAX_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

_active = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

ratio_argmax = _active.ratio_argmax
polar_scan = _active.polar_scan
ball_j_sweep = _active.ball_j_sweep

__all__ = [
    "BACKEND",
    "ball_j_sweep",
    "compiled_backend",
    "polar_scan",
    "python_backend",
    "ratio_argmax",
]
