"""Exact K3 rational homotopy ranks, M24 twined rank sequences and weak
Jacobi form expansions, backed by the C++ core."""

try:
    from ._m24rh import *  # noqa: F401,F403
    from ._m24rh import __doc__ as _core_doc
except ImportError:  # in-tree builds put the extension next to the package
    from _m24rh import *  # noqa: F401,F403
    from _m24rh import __doc__ as _core_doc

__all__ = [
    "euler_char",
    "euler_char_hypersurface",
    "homotopy_ranks",
    "class_labels",
    "group_order",
    "centralizer_order",
    "power_class",
    "rho_ranks",
    "multiplicities",
    "phi_g",
    "phi_identity",
    "h_threevar",
    "cd_magnitudes",
    "verify",
]
