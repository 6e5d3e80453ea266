"""Scikit-learn style wrappers around the dicolouring algorithms.

Each estimator takes a digraph (anything :func:`check_digraph` accepts) in
``fit`` and exposes the result as fitted attributes::

    >>> from dichromatic.estimators import GreedyPEODicolourer
    >>> est = GreedyPEODicolourer().fit((3, [(0, 1), (1, 2), (2, 0)]))
    >>> est.n_colours_
    2
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .colouring import (
    balanced_bound,
    balanced_c4free_dicolouring,
    exact_dichromatic,
    greedy_bound,
    greedy_peo_dicolouring,
    mad_bound_report,
)
from .validation import check_digraph, check_positive_fraction


class _DicolourerMixin:
    """``fit_predict`` and ``predict`` for estimators that set ``labels_``."""

    def fit_predict(self, X, y=None):
        return self.fit(X).labels_

    def predict(self, X=None):
        check_is_fitted(self, "labels_")
        return self.labels_

    def _store(self, colouring):
        self.colouring_ = colouring
        self.n_colours_ = colouring.num_colours
        self.labels_ = np.asarray(colouring.colours, dtype=int) - 1
        return self


class GreedyPEODicolourer(_DicolourerMixin, BaseEstimator):
    """Greedy dicolouring along a perfect elimination ordering.

    Attributes
    ----------
    colouring_ : Colouring
        1-based colouring of the fitted digraph.
    labels_ : ndarray of shape (n_vertices,)
        0-based colour of each vertex.
    n_colours_ : int
    bound_ : int
        ``ceil((omega + Delta(B)) / 2)``, never exceeded by ``n_colours_``.
    """

    def fit(self, X, y=None):
        D = check_digraph(X)
        self._store(greedy_peo_dicolouring(D))
        self.bound_ = greedy_bound(D)
        return self


class BalancedC4FreeDicolourer(_DicolourerMixin, BaseEstimator):
    """Balanced dicolouring for digraphs whose bidirected graph has no 4-cycle.

    Parameters
    ----------
    check_invariants : bool, default=True
        Assert balancedness and the bag types after every step.

    Attributes
    ----------
    colouring_, labels_, n_colours_ : as in :class:`GreedyPEODicolourer`
    bound_ : int
        ``ceil((omega + 3) / 2)``.
    bag_records_ : list of BagRecord
        Final state of each bag of the odd-clique-number subproblem.
    """

    def __init__(self, check_invariants=True):
        self.check_invariants = check_invariants

    def fit(self, X, y=None):
        D = check_digraph(X)
        colouring, records = balanced_c4free_dicolouring(
            D, check_invariants=self.check_invariants, return_records=True
        )
        self._store(colouring)
        self.bag_records_ = records
        self.bound_ = balanced_bound(D)
        return self


class ExactDicolourer(_DicolourerMixin, BaseEstimator):
    """Exact dichromatic number by backtracking search.

    Parameters
    ----------
    colour_budget : int or None, default=None
        Give up with ``BudgetExceeded`` once more colours would be needed.
    n_jobs : int, default=1
        Workers for splitting the search.

    Attributes
    ----------
    dichromatic_number_ : int
    colouring_, labels_, n_colours_ : witness colouring
    """

    def __init__(self, colour_budget=None, n_jobs=1):
        self.colour_budget = colour_budget
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        D = check_digraph(X)
        chi, colouring = exact_dichromatic(D, self.colour_budget, n_jobs=self.n_jobs)
        self.dichromatic_number_ = chi
        return self._store(colouring)


class MadBoundReporter(BaseEstimator):
    """Fit computes a :class:`BoundReport` for the given digraph."""

    def __init__(self, epsilon=None, exact_limit=20):
        self.epsilon = epsilon
        self.exact_limit = exact_limit

    def fit(self, X, y=None):
        D = check_digraph(X)
        eps = None if self.epsilon is None else check_positive_fraction(self.epsilon, "epsilon")
        self.report_ = mad_bound_report(D, eps, exact_limit=self.exact_limit)
        return self

    def score(self, X=None, y=None):
        check_is_fitted(self, "report_")
        return float(self.report_.satisfied)
