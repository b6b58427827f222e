"""scikit-learn transformer turning graphs into index feature vectors.

Lets the indices sit inside a :class:`sklearn.pipeline.Pipeline` next to
ordinary estimators::

    pipe = make_pipeline(DegreeIndexTransformer(["SO", "mSO", "ISI"]), Ridge())
    pipe.fit(graphs, y)
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .graph import Graph, from_edge_list, parse_graph6
from .indices import DomainError, IndexSpec, named_index


def check_graph(obj) -> Graph:
    """Coerce one sample to a :class:`Graph`.

    Accepts a Graph, a graph6 string or bytes, or an ``(n, edges)`` pair.
    """
    if isinstance(obj, Graph):
        return obj
    if isinstance(obj, (str, bytes)):
        return parse_graph6(obj)
    if isinstance(obj, tuple) and len(obj) == 2 and isinstance(obj[0], (int, np.integer)):
        return from_edge_list(int(obj[0]), obj[1])
    raise TypeError(f"cannot interpret {type(obj).__name__} as a graph")


def check_graphs(X: Iterable) -> list[Graph]:
    if isinstance(X, (str, bytes, Graph)):
        raise TypeError("expected a sequence of graphs, got a single graph")
    graphs = [check_graph(x) for x in X]
    if not graphs:
        raise ValueError("found 0 graphs, at least 1 is required")
    return graphs


def _as_spec(item, alpha, beta) -> IndexSpec:
    if isinstance(item, IndexSpec):
        return item
    if isinstance(item, str):
        return IndexSpec(item, alpha, beta)
    if isinstance(item, (tuple, list)) and 1 <= len(item) <= 3:
        family, *rest = item
        a = rest[0] if len(rest) > 0 else alpha
        b = rest[1] if len(rest) > 1 else beta
        return IndexSpec(family, a, b)
    raise TypeError(f"cannot interpret {item!r} as an index")


class DegreeIndexTransformer(TransformerMixin, BaseEstimator):
    """Map each graph to the values of a list of degree-based indices.

    Parameters
    ----------
    indices : sequence
        Index families (``"SO"``), ``(family, alpha, beta)`` tuples or
        :class:`IndexSpec` objects.
    alpha, beta : float, optional
        Defaults for families given by name that need parameters.
    on_domain_error : {"raise", "nan"}
        What to do when an index is undefined on a graph.
    """

    def __init__(self, indices: Sequence = ("SO",), alpha=None, beta=None, on_domain_error: str = "raise"):
        self.indices = indices
        self.alpha = alpha
        self.beta = beta
        self.on_domain_error = on_domain_error

    def fit(self, X, y=None):
        check_graphs(X)
        if self.on_domain_error not in ("raise", "nan"):
            raise ValueError("on_domain_error must be 'raise' or 'nan'")
        self.specs_ = [_as_spec(i, self.alpha, self.beta) for i in self.indices]
        if not self.specs_:
            raise ValueError("need at least one index")
        self.n_features_out_ = len(self.specs_)
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "specs_")
        graphs = check_graphs(X)
        out = np.empty((len(graphs), len(self.specs_)), dtype=np.float64)
        for i, g in enumerate(graphs):
            for j, spec in enumerate(self.specs_):
                try:
                    out[i, j] = named_index(g, spec).value
                except DomainError:
                    if self.on_domain_error == "raise":
                        raise
                    out[i, j] = np.nan
        return out

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        check_is_fitted(self, "specs_")
        return np.asarray([s.label for s in self.specs_], dtype=object)
