"""Continuous-universe measures over hesitant functions sampled on a grid.

A hesitant function on ``[a, b]`` is represented by its hesitant element at
each node of a shared grid; integrals are composite trapezoid sums over that
grid. Weighted variants integrate ``w(x) * g(x)``, normalized variants
integrate ``g(x) / (b - a)``, where ``g`` is the per-node deviation term.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence

import numpy as np

from .core import ExtensionPolicy, HesitantElement, make_element, paired_arrays
from .distances import power_mean, power_sum
from .errors import GridMismatch, InvalidSpec, WeightNotNormalized

WEIGHT_INTEGRAL_TOL = 1e-6


def _grid(nodes) -> np.ndarray:
    x = np.asarray(nodes, dtype=float)
    if x.ndim != 1 or len(x) < 2:
        raise InvalidSpec("a sample grid needs at least two nodes")
    if not np.all(np.diff(x) > 0):
        raise InvalidSpec("grid nodes must be strictly increasing")
    x.setflags(write=False)
    return x


@dataclass(frozen=True, eq=False)
class SampledHesitantFunction:
    nodes: np.ndarray
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "nodes", _grid(self.nodes))
        vals = tuple(v if isinstance(v, HesitantElement) else make_element(v, dedupe=False)
                     for v in self.values)
        if len(vals) != len(self.nodes):
            raise InvalidSpec(f"{len(vals)} elements for {len(self.nodes)} nodes")
        object.__setattr__(self, "values", vals)

    @property
    def interval(self) -> tuple:
        return float(self.nodes[0]), float(self.nodes[-1])

    @classmethod
    def sample(cls, fn: Callable[[float], Sequence[float]], nodes) -> "SampledHesitantFunction":
        """Evaluate ``fn(x)`` (a list of grades) at each node."""
        nodes = _grid(nodes)
        return cls(nodes, tuple(make_element(fn(float(x)), dedupe=False) for x in nodes))

    @classmethod
    def constant(cls, grades, nodes) -> "SampledHesitantFunction":
        h = make_element(grades, dedupe=False)
        nodes = _grid(nodes)
        return cls(nodes, (h,) * len(nodes))


@dataclass(frozen=True, eq=False)
class SampledWeightFunction:
    """Weight density on the grid; each value in [0, 1], integral 1 within 1e-6.

    The stored density is rescaled so that its trapezoid integral is 1 to
    rounding, which keeps weighted and normalized variants consistent.
    """

    nodes: np.ndarray
    density: np.ndarray

    def __post_init__(self):
        x = _grid(self.nodes)
        w = np.asarray(self.density, dtype=float)
        if w.shape != x.shape:
            raise GridMismatch(f"{w.shape[0] if w.ndim else 0} weights for {len(x)} nodes")
        if np.any(w < 0) or np.any(w > 1):
            raise InvalidSpec("weight density values must lie in [0, 1]")
        total = float(np.trapezoid(w, x))
        if abs(total - 1.0) > WEIGHT_INTEGRAL_TOL:
            raise WeightNotNormalized(f"weight density integrates to {total!r}, not 1")
        w = w / total
        w.setflags(write=False)
        object.__setattr__(self, "nodes", x)
        object.__setattr__(self, "density", w)

    @classmethod
    def uniform(cls, nodes) -> "SampledWeightFunction":
        x = _grid(nodes)
        return cls(x, np.full(len(x), 1.0 / (x[-1] - x[0])))


class ContinuousDistance(str, Enum):
    TYPE2_WEIGHTED = "type2-weighted"
    TYPE2_NORMALIZED = "type2-normalized"
    LP_WEIGHTED = "lp-weighted"
    LP_AVERAGE = "lp-average"


class ContinuousSimilarity(str, Enum):
    GEOMETRIC_WEIGHTED = "geometric-weighted"
    GEOMETRIC_SUM_WEIGHTED = "geometric-sum-weighted"
    GEOMETRIC_NORMALIZED = "geometric-normalized"
    GEOMETRIC_SUM_NORMALIZED = "geometric-sum-normalized"
    SET_THEORETIC_WEIGHTED = "set-theoretic-weighted"
    SET_THEORETIC_NORMALIZED = "set-theoretic-normalized"


_WEIGHTED = {ContinuousDistance.TYPE2_WEIGHTED, ContinuousDistance.LP_WEIGHTED,
             ContinuousSimilarity.GEOMETRIC_WEIGHTED, ContinuousSimilarity.GEOMETRIC_SUM_WEIGHTED,
             ContinuousSimilarity.SET_THEORETIC_WEIGHTED}


def _pairs(A: SampledHesitantFunction, B: SampledHesitantFunction, w, weighted: bool, policy):
    if len(A.nodes) != len(B.nodes) or not np.array_equal(A.nodes, B.nodes):
        raise GridMismatch("both hesitant functions must share one sample grid")
    if weighted:
        if w is None:
            raise InvalidSpec("weighted variant needs a weight function")
        if len(w.nodes) != len(A.nodes) or not np.array_equal(w.nodes, A.nodes):
            raise GridMismatch("weight function must share the sample grid")
    elif w is not None:
        raise InvalidSpec("normalized variant takes no weight function")
    policy = ExtensionPolicy.parse(policy)
    return [paired_arrays(a, b, policy) for a, b in zip(A.values, B.values)]


def _integrate(g: np.ndarray, nodes: np.ndarray, w: Optional[SampledWeightFunction]) -> float:
    if w is not None:
        return float(np.trapezoid(w.density * g, nodes))
    return float(np.trapezoid(g, nodes)) / float(nodes[-1] - nodes[0])


def _check_p(p, lp: bool) -> float:
    p = float(p)
    if not np.isfinite(p) or p <= 0:
        raise InvalidSpec(f"p must be a positive real, got {p!r}")
    if lp and p < 1:
        raise InvalidSpec(f"L_p variants need p >= 1, got {p}")
    return p


def continuous_distance(A: SampledHesitantFunction, B: SampledHesitantFunction,
                        w: Optional[SampledWeightFunction] = None, p: float = 2.0,
                        variant=ContinuousDistance.TYPE2_NORMALIZED,
                        policy=ExtensionPolicy.PESSIMISTIC) -> float:
    """Integral distance; the euclidean forms are ``p=2`` of the type-2 variants."""
    variant = ContinuousDistance(variant)
    lp = variant in (ContinuousDistance.LP_WEIGHTED, ContinuousDistance.LP_AVERAGE)
    p = _check_p(p, lp)
    pairs = _pairs(A, B, w, variant in _WEIGHTED, policy)
    term = power_sum if lp else power_mean
    g = np.array([term(np.abs(a - b), p) for a, b in pairs])
    return _integrate(g, A.nodes, w if variant in _WEIGHTED else None)


def continuous_similarity(A: SampledHesitantFunction, B: SampledHesitantFunction,
                          w: Optional[SampledWeightFunction] = None, p: float = 1.0,
                          variant=ContinuousSimilarity.GEOMETRIC_NORMALIZED,
                          policy=ExtensionPolicy.PESSIMISTIC) -> float:
    """Integral similarity.

    The geometric-sum variants scale the integrated power sums by
    ``(b - a) / integral(n_x ** (1/p))``, the grid analogue of the discrete
    ``m / sum_i n_i ** (1/p)`` prefactor.
    """
    variant = ContinuousSimilarity(variant)
    weighted = variant in _WEIGHTED
    p = _check_p(p, False)
    pairs = _pairs(A, B, w, weighted, policy)
    ww = w if weighted else None
    nodes = A.nodes

    if variant in (ContinuousSimilarity.SET_THEORETIC_WEIGHTED,
                   ContinuousSimilarity.SET_THEORETIC_NORMALIZED):
        r = np.empty(len(pairs))
        for k, (a, b) in enumerate(pairs):
            hi = np.maximum(a, b).sum()
            r[k] = 1.0 if hi == 0.0 else np.minimum(a, b).sum() / hi
        return 1.0 - _integrate(1.0 - r, nodes, ww)

    if variant in (ContinuousSimilarity.GEOMETRIC_WEIGHTED,
                   ContinuousSimilarity.GEOMETRIC_NORMALIZED):
        g = np.array([power_mean(np.abs(a - b), p) for a, b in pairs])
        return 1.0 - _integrate(g, nodes, ww)

    g = np.array([power_sum(np.abs(a - b), p) for a, b in pairs])
    n_root = np.array([len(a) ** (1.0 / p) for a, _ in pairs])
    scale = float(nodes[-1] - nodes[0]) / float(np.trapezoid(n_root, nodes))
    return 1.0 - scale * _integrate(g, nodes, ww)
