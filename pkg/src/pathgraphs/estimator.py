"""scikit-learn style wrappers around the recognizer.

Recognition has nothing to learn, so ``fit`` only validates its input and
records what it saw.  The wrappers exist so graph collections can go through
pipelines, ``clone`` and ``get_params`` like any other estimator.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .chordal import clique_separators, is_chordal, maximal_cliques
from .graph import SimpleGraph, check_graph, connected_components, induced_subgraph
from .recognizer import NOT_CHORDAL, NOT_PATH_GRAPH, PATH_GRAPH, Verdict, recognize
from .separation import build_profile, quotient_profile

__all__ = ["AttachednessFeatures", "PathGraphRecognizer", "check_graphs"]


def check_graphs(X) -> list[SimpleGraph]:
    """Validate a collection of graphs.

    A single graph (SimpleGraph, networkx graph or edge-list text) is
    rejected so that a lone graph is never iterated edge by edge.
    """
    if isinstance(X, (SimpleGraph, str)) or hasattr(X, "nodes"):
        raise ValueError("expected a collection of graphs; wrap a single graph in a list")
    graphs = [check_graph(G) for G in X]
    if not graphs:
        raise ValueError("empty graph collection")
    return graphs


class PathGraphRecognizer(ClassifierMixin, BaseEstimator):
    """Label graphs as ``path_graph``, ``not_path_graph`` or ``not_chordal``.

    Parameters
    ----------
    path_tree : bool
        Attach a clique path tree to positive verdicts when the oracle
        can afford it.
    max_oracle_cliques : int
        Clique cap for that oracle call.
    """

    def __init__(self, path_tree: bool = True, max_oracle_cliques: int = 9):
        self.path_tree = path_tree
        self.max_oracle_cliques = max_oracle_cliques

    def _check_params(self) -> None:
        if not isinstance(self.max_oracle_cliques, (int, np.integer)) or self.max_oracle_cliques < 1:
            raise ValueError(f"max_oracle_cliques must be a positive integer, got {self.max_oracle_cliques!r}")

    def fit(self, X, y=None):
        self._check_params()
        graphs = check_graphs(X)
        self.classes_ = np.array([NOT_CHORDAL, NOT_PATH_GRAPH, PATH_GRAPH])
        self.n_graphs_seen_ = len(graphs)
        self.verdicts_ = [self._recognize(G) for G in graphs]
        return self

    def _recognize(self, G: SimpleGraph) -> Verdict:
        return recognize(G, path_tree=self.path_tree, max_oracle_cliques=self.max_oracle_cliques)

    def predict_verdicts(self, X) -> list[Verdict]:
        check_is_fitted(self, "classes_")
        return [self._recognize(G) for G in check_graphs(X)]

    def predict(self, X) -> np.ndarray:
        return np.array([v.kind for v in self.predict_verdicts(X)], dtype=object)


class AttachednessFeatures(TransformerMixin, BaseEstimator):
    """Per-graph summary of the separator profiles, one row per graph.

    Columns (see ``feature_names_out_``): chordality flag, number of clique
    separators, largest number of parts at one separator after quotienting,
    and the antipodal and dominance edge counts summed over separators.
    Non-chordal graphs get a zero row apart from the flag.
    """

    _columns = ("chordal", "separators", "max_parts", "antipodal_edges", "dominance_edges")

    def __init__(self, quotient: bool = True):
        self.quotient = quotient

    def fit(self, X, y=None):
        check_graphs(X)
        self.feature_names_out_ = np.array(self._columns, dtype=object)
        self.n_features_out_ = len(self._columns)
        return self

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        check_is_fitted(self, "feature_names_out_")
        return self.feature_names_out_

    def _row(self, G: SimpleGraph) -> list[int]:
        if not is_chordal(G)[0]:
            return [0] * len(self._columns)
        n_sep = max_parts = n_anti = n_dom = 0
        for comp in connected_components(G):
            H = induced_subgraph(G, comp)
            cliques = maximal_cliques(H)
            for Q in clique_separators(H, cliques):
                p = build_profile(H, Q, cliques)
                if self.quotient:
                    p = quotient_profile(p)
                n_sep += 1
                max_parts = max(max_parts, len(p.part_ids))
                n_anti += len(p.antipodal)
                n_dom += len(p.dominance_edges())
        return [1, n_sep, max_parts, n_anti, n_dom]

    def transform(self, X: Iterable) -> np.ndarray:
        check_is_fitted(self, "feature_names_out_")
        return np.array([self._row(G) for G in check_graphs(X)], dtype=np.int64).reshape(-1, len(self._columns))
