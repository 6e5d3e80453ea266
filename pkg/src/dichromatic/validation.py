"""Input validation helpers shared by the estimators and the CLI."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .exceptions import InvalidColouringError
from .graphs import Colouring, Digraph


def check_digraph(X) -> Digraph:
    """Coerce ``X`` into a :class:`Digraph`.

    Accepts a ``Digraph``, a pair ``(n, arcs)``, a square adjacency matrix
    (nonzero off-diagonal entries are arcs) or a networkx ``DiGraph`` whose
    nodes are ``0..n-1``.
    """
    if isinstance(X, Digraph):
        return X
    if hasattr(X, "is_directed") and hasattr(X, "edges"):
        if not X.is_directed():
            raise TypeError("expected a directed networkx graph")
        nodes = sorted(X.nodes())
        if nodes != list(range(len(nodes))):
            raise ValueError("networkx nodes must be the integers 0..n-1")
        return Digraph(len(nodes), X.edges())
    if isinstance(X, tuple) and len(X) == 2 and np.isscalar(X[0]):
        n, arcs = X
        return Digraph(int(n), arcs)
    A = np.asarray(X)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {A.shape}")
    if np.any(np.diag(A) != 0):
        raise ValueError("adjacency matrix has a nonzero diagonal (self-loop)")
    rows, cols = np.nonzero(A)
    return Digraph(A.shape[0], zip(rows.tolist(), cols.tolist()))


def check_colouring(c, D: Digraph) -> Colouring:
    """Coerce ``c`` into a normalized :class:`Colouring` covering the vertices of ``D``."""
    if not isinstance(c, Colouring):
        c = Colouring.from_labels(list(np.asarray(c).tolist()))
    if len(c) != D.n:
        raise InvalidColouringError(f"colouring covers {len(c)} vertices, digraph has {D.n}")
    return c


def check_positive_fraction(value, name: str) -> Fraction:
    frac = Fraction(value)
    if frac <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return frac
