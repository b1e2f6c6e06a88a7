"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``CYBELAB_PURE=1`` to force the pure-Python kernel (used by the
benchmark and by tests that compare the two implementations).
"""

from __future__ import annotations

import os

if os.environ.get("CYBELAB_PURE"):
    from cybelab import _poly_pure as impl
else:
    try:
        from cybelab import _poly_core as impl  # type: ignore[no-redef]
    except ImportError:
        from cybelab import _poly_pure as impl  # type: ignore[no-redef]

NVARS = impl.NVARS
ZERO_KEY = impl.ZERO_KEY
EXP_LIMIT = impl.EXP_LIMIT
KERNEL_NAME = impl.KERNEL_NAME

pack = impl.pack
unpack = impl.unpack
add = impl.add
sub = impl.sub
neg = impl.neg
scale = impl.scale
mul = impl.mul
mul_term = impl.mul_term
div_exact = impl.div_exact
divides = impl.divides
