"""Kernel selection.

Uses the compiled ``_kernels`` extension when it imports, the pure-Python
``_pykernels`` otherwise. Setting ``THRESHDIM_PURE_PYTHON=1`` forces the
fallback. Both expose the same functions with identical results.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("THRESHDIM_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pykernels

IMPLEMENTATION: str = _impl.IMPLEMENTATION

#: Largest vertex count the compiled bitmask kernels accept.
MAX_VERTICES = 64


def apsp(n: int, masks: list[int]) -> list[list[int]]:
    # the compiled BFS packs rows into 64-bit words
    if n > MAX_VERTICES:
        return _pykernels.apsp(n, masks)
    return _impl.apsp(n, masks)


first_resolving_subset = _impl.first_resolving_subset
min_resolving_subset = _impl.min_resolving_subset
sweep_supergraphs = _impl.sweep_supergraphs
resolvable_landmark_sets = _impl.resolvable_landmark_sets
embedding_search = _impl.embedding_search
