"""Interface walks and percolation estimators on the truncated-octahedron
tessellation, with an order-d permutohedral generalization.

Thin wrapper over the compiled extension; every estimator returns a plain
dict so results serialize directly to JSON.
"""

from ._tricolor import (
    __version__,
    annulus_crossing,
    estimate_pc,
    export_obj,
    face_clusters,
    is_adjacent,
    loop_flux,
    loop_lengths,
    neighbors,
    perm_loop_lengths,
    phase_scan,
    prism_run,
    scaling_exponent,
)

__all__ = [
    "__version__",
    "annulus_crossing",
    "estimate_pc",
    "export_obj",
    "face_clusters",
    "is_adjacent",
    "loop_flux",
    "loop_lengths",
    "neighbors",
    "perm_loop_lengths",
    "phase_scan",
    "prism_run",
    "scaling_exponent",
]
