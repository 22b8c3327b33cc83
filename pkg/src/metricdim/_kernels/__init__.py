"""Hot-loop kernels: compiled (Cython) implementation with a pure-Python fallback.

Three kernels carry essentially all of the runtime of the toolkit:

* ``all_pairs_dists`` -- BFS from every vertex over bitmask adjacency rows,
* ``first_resolving_subset`` -- lexicographic sweep of k-subsets for the
  first one whose distance vectors separate all vertices,
* ``canonical_edge_mask`` -- minimum adjacency bit-string over all vertex
  permutations (branch-and-bound).

The compiled module is preferred when importable; set ``METRICDIM_PURE=1``
to force the fallback.  Both implementations are kept behaviourally
identical and are compared in the test suite and in ``benchmarks/``.
"""

import os

from . import pure

if os.environ.get("METRICDIM_PURE"):
    _impl = pure
    IMPLEMENTATION = "pure"
else:
    try:
        from . import _fast as _impl

        IMPLEMENTATION = "compiled"
    except ImportError:  # extension not built on this install
        _impl = pure
        IMPLEMENTATION = "pure"

all_pairs_dists = _impl.all_pairs_dists
first_resolving_subset = _impl.first_resolving_subset
canonical_edge_mask = _impl.canonical_edge_mask

__all__ = [
    "IMPLEMENTATION",
    "all_pairs_dists",
    "canonical_edge_mask",
    "first_resolving_subset",
    "pure",
]
