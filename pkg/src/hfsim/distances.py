"""Discrete distance measures between hesitant fuzzy sets.

Every measure first pads each pair of elements to a common length and
then combines the index-wise deviations ``|a_j - b_j|``. The families
differ in where the power ``p`` and its root are applied:

==================  ==============================================
family              value
==================  ==============================================
hamming             mean_i mean_j |d|
euclidean           (mean_i mean_j |d|^2)^(1/2)
generalized         (mean_i mean_j |d|^p)^(1/p)
type2-generalized   mean_i (mean_j |d|^p)^(1/p)
type2-euclidean     type2-generalized with p = 2
type2-sum           sum_i (mean_j |d|^p)^(1/p)
inner-power-mean    mean_i (sum_j |d|^p)^(1/p)
inner-power-sum     sum_i (sum_j |d|^p)^(1/p)
lp                  inner-power-mean restricted to p >= 1
hamming-hausdorff   mean_i max_j |d|
type2-weighted      sum_i w_i (mean_j |d|^p)^(1/p)
lp-weighted         sum_i w_i (sum_j |d|^p)^(1/p), p >= 1
==================  ==============================================
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from .core import ExtensionPolicy, HesitantSet, aligned, weight_vector
from .errors import InvalidSpec


class Distance(str, Enum):
    HAMMING = "hamming"
    EUCLIDEAN = "euclidean"
    GENERALIZED = "generalized"
    TYPE2_GENERALIZED = "type2-generalized"
    TYPE2_EUCLIDEAN = "type2-euclidean"
    TYPE2_SUM = "type2-sum"
    INNER_POWER_MEAN = "inner-power-mean"
    INNER_POWER_SUM = "inner-power-sum"
    LP = "lp"
    HAMMING_HAUSDORFF = "hamming-hausdorff"
    TYPE2_WEIGHTED = "type2-weighted"
    LP_WEIGHTED = "lp-weighted"


_FIXED_P = {Distance.HAMMING: 1.0, Distance.EUCLIDEAN: 2.0, Distance.TYPE2_EUCLIDEAN: 2.0,
            Distance.HAMMING_HAUSDORFF: 1.0}
_WEIGHTED = {Distance.TYPE2_WEIGHTED, Distance.LP_WEIGHTED}
_P_AT_LEAST_ONE = {Distance.LP, Distance.LP_WEIGHTED}
# outer power mean over all deviations
_OUTER = {Distance.HAMMING, Distance.EUCLIDEAN, Distance.GENERALIZED}
# per-element power mean of deviations
_INNER_MEAN = {Distance.TYPE2_GENERALIZED, Distance.TYPE2_EUCLIDEAN, Distance.TYPE2_SUM,
               Distance.TYPE2_WEIGHTED}
# per-element power sum of deviations
_INNER_SUM = {Distance.INNER_POWER_MEAN, Distance.INNER_POWER_SUM, Distance.LP,
              Distance.LP_WEIGHTED}
# families that add element terms instead of averaging them
_UNAVERAGED = {Distance.TYPE2_SUM, Distance.INNER_POWER_SUM}
NORMALIZED = _OUTER | {Distance.TYPE2_GENERALIZED, Distance.TYPE2_EUCLIDEAN,
                       Distance.TYPE2_WEIGHTED, Distance.HAMMING_HAUSDORFF}


@dataclass(frozen=True)
class DistanceSpec:
    """A distance family with its parameter and (for weighted families) weights."""

    family: Distance
    p: float = 1.0
    weights: Optional[tuple] = None

    def __post_init__(self):
        try:
            family = Distance(self.family)
        except ValueError:
            raise InvalidSpec(f"unknown distance family {self.family!r}") from None
        object.__setattr__(self, "family", family)
        p = _FIXED_P.get(family, self.p)
        p = float(p)
        if not np.isfinite(p) or p <= 0:
            raise InvalidSpec(f"p must be a positive real, got {self.p!r}")
        if family in _P_AT_LEAST_ONE and p < 1:
            raise InvalidSpec(f"{family.value} needs p >= 1, got {p}")
        object.__setattr__(self, "p", p)
        if family in _WEIGHTED:
            if self.weights is None:
                raise InvalidSpec(f"{family.value} needs a weight vector")
            w = weight_vector(self.weights, len(self.weights))
            object.__setattr__(self, "weights", tuple(w.tolist()))
        elif self.weights is not None:
            raise InvalidSpec(f"{family.value} takes no weights")

    @property
    def weighted(self) -> bool:
        return self.family in _WEIGHTED

    def weights_for(self, m: int) -> np.ndarray:
        if self.weights is None:
            return np.full(m, 1.0 / m)
        if len(self.weights) != m:
            raise InvalidSpec(f"{len(self.weights)} weights for a universe of {m} elements")
        return np.asarray(self.weights)


def power_mean(x: np.ndarray, p: float) -> float:
    """``(mean(x**p))**(1/p)`` for nonnegative ``x``, scaled by max(x) first."""
    if p == 1.0:
        return float(np.mean(x))
    top = float(np.max(x))
    if top == 0.0:
        return 0.0
    return top * float(np.mean((x / top) ** p)) ** (1.0 / p)


def power_sum(x: np.ndarray, p: float) -> float:
    """``(sum(x**p))**(1/p)`` for nonnegative ``x``, scaled by max(x) first."""
    if p == 1.0:
        return float(np.sum(x))
    top = float(np.max(x))
    if top == 0.0:
        return 0.0
    return top * float(np.sum((x / top) ** p)) ** (1.0 / p)


def weighted_power_mean_of_means(devs: Sequence[np.ndarray], w: np.ndarray, p: float) -> float:
    """``(sum_i w_i mean_j |d_ij|^p)^(1/p)``, the outer-root form."""
    if p == 1.0:
        return float(sum(wi * np.mean(d) for wi, d in zip(w, devs)))
    top = max(float(np.max(d)) for d in devs)
    if top == 0.0:
        return 0.0
    inner = sum(wi * float(np.mean((d / top) ** p)) for wi, d in zip(w, devs))
    return top * inner ** (1.0 / p)


def deviations(A: HesitantSet, B: HesitantSet, policy=ExtensionPolicy.PESSIMISTIC) -> list:
    """Absolute index-wise deviations per universe element after extension."""
    return [np.abs(a - b) for a, b in aligned(A, B, ExtensionPolicy.parse(policy))]


def common_lengths(A: HesitantSet, B: HesitantSet) -> list:
    return [max(len(a), len(b)) for a, b in zip(A.elements, B.elements)]


def distance_from_deviations(devs: Sequence[np.ndarray], spec: DistanceSpec) -> float:
    m = len(devs)
    fam, p = spec.family, spec.p
    if fam is Distance.HAMMING_HAUSDORFF:
        return float(np.mean([np.max(d) for d in devs]))
    w = spec.weights_for(m)
    if fam in _OUTER:
        return weighted_power_mean_of_means(devs, w, p)
    term = power_mean if fam in _INNER_MEAN else power_sum
    if fam in _UNAVERAGED:
        w = np.ones(m)
    return float(sum(wi * term(d, p) for wi, d in zip(w, devs)))


def distance(A: HesitantSet, B: HesitantSet, spec: DistanceSpec,
             policy=ExtensionPolicy.PESSIMISTIC) -> float:
    """Distance between two sets on the same universe."""
    return distance_from_deviations(deviations(A, B, policy), spec)


def max_distance(spec: DistanceSpec, lengths: Sequence[int]) -> float:
    """Supremum of ``spec`` over all pairs whose common element lengths are ``lengths``.

    The bound is attained by an all-ones set against an all-zeros set.
    """
    n = np.asarray(lengths, dtype=float)
    if n.ndim != 1 or len(n) == 0 or np.any(n < 1):
        raise InvalidSpec(f"element lengths must be >= 1, got {list(lengths)}")
    m = len(n)
    fam, p = spec.family, spec.p
    if fam in NORMALIZED:
        return 1.0
    if fam is Distance.TYPE2_SUM:
        return float(m)
    roots = n ** (1.0 / p)
    if fam is Distance.INNER_POWER_SUM:
        return float(roots.sum())
    return float(spec.weights_for(m) @ roots)


def exponential_distance(A: HesitantSet, B: HesitantSet, base_spec: DistanceSpec,
                         policy=ExtensionPolicy.PESSIMISTIC) -> float:
    """``(1 - exp(-d)) / (1 - exp(-d_max))`` over any base distance; lies in [0, 1]."""
    d = distance(A, B, base_spec, policy)
    d_max = max_distance(base_spec, common_lengths(A, B))
    return exponential_normalize(d, d_max)


def exponential_normalize(d: float, d_max: float) -> float:
    if d == d_max:
        return 1.0
    return float(np.expm1(-d) / np.expm1(-d_max))
