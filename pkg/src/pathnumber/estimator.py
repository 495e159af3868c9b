"""Scikit-learn style wrapper and input validation."""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .graph import Graph, GraphError, parse_graph
from .solver import path_number, path_partition


def check_graph(obj) -> Graph:
    """Coerce ``obj`` into a :class:`Graph`.

    Accepts a Graph, anything networkx-like (``.nodes`` and ``.edges``),
    graph file text as str or bytes, or an iterable of vertex pairs.
    """
    if isinstance(obj, Graph):
        return obj
    if isinstance(obj, (str, bytes, bytearray)):
        return parse_graph(obj)
    if hasattr(obj, "nodes") and hasattr(obj, "edges"):
        if obj.is_directed() or obj.is_multigraph():
            raise GraphError("only simple undirected graphs are supported")
        return Graph(list(obj.nodes), list(obj.edges))
    if isinstance(obj, Iterable):
        pairs = []
        for e in obj:
            e = tuple(e)
            if len(e) != 2:
                raise GraphError(f"edge {e!r} is not a vertex pair")
            pairs.append(e)
        return Graph.from_edges(pairs)
    raise TypeError(f"cannot interpret {type(obj).__name__} as a graph")


def _is_single(obj) -> bool:
    return isinstance(obj, (Graph, str, bytes, bytearray)) or hasattr(obj, "edges")


def check_graphs(X) -> list[Graph]:
    """A batch of graphs. A lone graph becomes a batch of one; any other
    sequence is read element by element."""
    if _is_single(X):
        return [check_graph(X)]
    graphs = [check_graph(x) for x in X]
    if not graphs:
        raise ValueError("empty batch of graphs")
    return graphs


class PathNumberEstimator(BaseEstimator, TransformerMixin):
    """Computes path numbers; ``fit`` also keeps optimal partitions.

    Parameters
    ----------
    lmax : int or None
        Cap on the number of pattern variables. None uses the proven bound.
    witness : bool
        Whether ``fit`` builds witness partitions.
    """

    def __init__(self, lmax=None, witness=True):
        self.lmax = lmax
        self.witness = witness

    def fit(self, X, y=None):
        if self.lmax is not None and int(self.lmax) < 0:
            raise ValueError("lmax must be nonnegative")
        graphs = check_graphs(X)
        if self.witness:
            self.partitions_ = [path_partition(g, self.lmax) for g in graphs]
            self.path_numbers_ = np.array([len(p) for p in self.partitions_], dtype=int)
        else:
            self.partitions_ = None
            self.path_numbers_ = np.array([path_number(g, self.lmax) for g in graphs], dtype=int)
        self.n_graphs_ = len(graphs)
        return self

    @property
    def path_number_(self) -> int:
        check_is_fitted(self, "path_numbers_")
        if self.n_graphs_ != 1:
            raise AttributeError("path_number_ is defined after fitting a single graph")
        return int(self.path_numbers_[0])

    @property
    def partition_(self) -> list:
        check_is_fitted(self, "path_numbers_")
        if self.n_graphs_ != 1 or self.partitions_ is None:
            raise AttributeError("partition_ needs a single graph fitted with witness=True")
        return self.partitions_[0]

    def transform(self, X):
        check_is_fitted(self, "path_numbers_")
        graphs = check_graphs(X)
        return np.array([[path_number(g, self.lmax)] for g in graphs], dtype=int)

    def predict(self, X):
        return self.transform(X)[:, 0]
