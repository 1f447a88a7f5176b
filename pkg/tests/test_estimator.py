import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from pathgraphs.estimator import AttachednessFeatures, PathGraphRecognizer, check_graphs

from conftest import graph


@pytest.fixture
def corpus(fig1, g2):
    return [fig1, g2, graph("ab bc cd da")]


def test_check_graphs_rejects_single(fig1):
    with pytest.raises(ValueError):
        check_graphs(fig1)
    with pytest.raises(ValueError):
        check_graphs([])


def test_check_graphs_accepts_networkx(fig1):
    assert check_graphs([fig1.to_networkx()]) == [fig1]


def test_recognizer(corpus):
    est = PathGraphRecognizer(path_tree=False)
    with pytest.raises(NotFittedError):
        est.predict(corpus)
    pred = est.fit(corpus).predict(corpus)
    assert list(pred) == ["path_graph", "not_path_graph", "not_chordal"]
    assert est.n_graphs_seen_ == 3
    assert est.score(corpus, pred) == 1.0


def test_params_and_clone():
    est = PathGraphRecognizer(max_oracle_cliques=5)
    assert est.get_params() == {"path_tree": True, "max_oracle_cliques": 5}
    assert clone(est).get_params() == est.get_params()
    with pytest.raises(ValueError):
        PathGraphRecognizer(max_oracle_cliques=0).fit([graph("ab")])


def test_features(corpus):
    tr = AttachednessFeatures()
    X = tr.fit_transform(corpus)
    assert X.shape == (3, 5)
    assert list(tr.get_feature_names_out()) == ["chordal", "separators", "max_parts", "antipodal_edges", "dominance_edges"]
    assert X[0, :3].tolist() == [1, 2, 3]
    assert X[1, :3].tolist() == [1, 1, 3]
    assert X[2].tolist() == [0, 0, 0, 0, 0]


def test_pipeline(corpus):
    Z = make_pipeline(AttachednessFeatures(), StandardScaler()).fit_transform(corpus)
    assert Z.shape == (3, 5) and np.isfinite(Z).all()
