"""smashcalc: exact computer algebra for smash products A#H and the
differential calculi living on them.

The kernel works over the field Q(q) of rational functions with exact
arithmetic throughout.  Algebras come in two flavors, presented-by-rewriting
and finite-dimensional-by-tables, unified behind a small key-based interface
so that actions, smash products, calculi, connections, and the FRT
construction run over either backend.
"""

__version__ = "0.1.0"

from .scalars import Scalar, ZERO, ONE, Q, qpow, integer

__all__ = ["Scalar", "ZERO", "ONE", "Q", "qpow", "integer", "__version__"]
