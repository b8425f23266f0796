"""scikit-learn style featurizer: diagrams in, counting-invariant vectors out."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .algebra import Biquasile
from .diagram import SCHEMAS, MarkedGraphDiagram
from .morse import diagram_from_word
from .solver import count_colorings


def _as_diagram(item) -> MarkedGraphDiagram:
    if isinstance(item, MarkedGraphDiagram):
        return item
    if isinstance(item, str):
        return diagram_from_word(item)
    raise TypeError(f"expected a MarkedGraphDiagram or a Morse word, got {type(item).__name__}")


class CountingFeaturizer(TransformerMixin, BaseEstimator):
    """Map each diagram to its colouring counts under a fixed list of biquasiles.

    Parameters
    ----------
    algebras : sequence of Biquasile or None
        Columns of the output.  ``None`` means the order-3 algebras X1, X2, X3.
    schema : str
        Marked-vertex colouring rule.
    log_scale : bool
        Return ``log_n(count)`` (with ``-inf`` for zero) instead of raw counts;
        handy when counts span several orders of magnitude.

    Attributes
    ----------
    algebras_ : list of Biquasile
    feature_names_ : list of str
    """

    def __init__(self, algebras=None, schema: str = "A", log_scale: bool = False):
        self.algebras = algebras
        self.schema = schema
        self.log_scale = log_scale

    def fit(self, X=None, y=None):
        if self.schema not in SCHEMAS:
            raise ValueError(f"unknown schema {self.schema!r}; choose from {sorted(SCHEMAS)}")
        if self.algebras is None:
            from . import fixtures
            algs = [fixtures.algebra(n) for n in ("X1", "X2", "X3")]
        else:
            algs = list(self.algebras)
        if not algs:
            raise ValueError("at least one algebra is needed")
        for a in algs:
            if not isinstance(a, Biquasile):
                raise TypeError(f"algebras must be Biquasile instances, got {type(a).__name__}")
        if self.log_scale and any(a.order == 1 for a in algs):
            raise ValueError("log_scale needs algebras of order at least 2")
        self.algebras_ = algs
        self.feature_names_ = [a.name or f"algebra{k}" for k, a in enumerate(algs)]
        return self

    def transform(self, X):
        check_is_fitted(self, "algebras_")
        diagrams = [_as_diagram(item) for item in X]
        out = np.array([[count_colorings(d, a, self.schema) for a in self.algebras_]
                        for d in diagrams], dtype=float if self.log_scale else np.int64)
        if self.log_scale:
            with np.errstate(divide="ignore"):
                orders = np.array([a.order for a in self.algebras_], dtype=float)
                out = np.log(out) / np.log(orders)
        return out.reshape(len(diagrams), len(self.algebras_))

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "feature_names_")
        return np.array(self.feature_names_, dtype=object)
