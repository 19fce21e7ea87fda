"""Quantum-nullhomotopy certificates: construction, verification, and the
determinant-winding obstruction, backed by the C++ core."""

try:
    from ._qnull import *  # noqa: F401,F403  (installed package layout)
    from ._qnull import __version__  # noqa: F401
except ImportError:  # in-tree builds put _qnull on sys.path directly
    from _qnull import *  # noqa: F401,F403
    from _qnull import __version__  # noqa: F401
