"""Hesitant fuzzy elements and sets, length extension and ordering."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import EmptyElement, InvalidSpec, OutOfRange, UniverseMismatch

GRADE_TOL = 1e-12
WEIGHT_TOL = 1e-9


class ExtensionPolicy(str, Enum):
    """How the shorter of two elements is padded before comparison."""

    PESSIMISTIC = "pessimistic"  # repeat the minimum value
    OPTIMISTIC = "optimistic"  # repeat the maximum value

    @classmethod
    def parse(cls, value) -> "ExtensionPolicy":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidSpec(f"unknown extension policy {value!r}") from None


class Relation(str, Enum):
    INFERIOR = "inferior"
    EQUAL = "equal"
    SUPERIOR = "superior"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class HesitantElement:
    """A non-empty multiset of membership grades, kept in descending order.

    Use :func:`make_element` to build one from raw input; the constructor
    only checks and sorts.
    """

    values: tuple

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if not vals:
            raise EmptyElement("a hesitant element needs at least one grade")
        for v in vals:
            if not 0.0 <= v <= 1.0:
                raise OutOfRange(v)
        object.__setattr__(self, "values", tuple(sorted(vals, reverse=True)))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __repr__(self):
        return f"HesitantElement({self.values})"

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    @property
    def min(self) -> float:
        return self.values[-1]

    @property
    def max(self) -> float:
        return self.values[0]


def make_element(raw: Iterable[float], dedupe: bool = True) -> HesitantElement:
    """Build an element from raw grades.

    Grades within 1e-12 of [0, 1] are clamped onto the interval. With
    ``dedupe`` exact repeats collapse to a single value.
    """
    vals = [float(v) for v in raw]
    if not vals:
        raise EmptyElement("a hesitant element needs at least one grade")
    clean = []
    for v in vals:
        if not (-GRADE_TOL <= v <= 1.0 + GRADE_TOL):
            raise OutOfRange(v)
        clean.append(min(1.0, max(0.0, v)))
    if dedupe:
        clean = list(dict.fromkeys(clean))
    return HesitantElement(tuple(clean))


def _as_element(h) -> HesitantElement:
    return h if isinstance(h, HesitantElement) else make_element(h, dedupe=False)


def extend_to(h: HesitantElement, n: int, policy=ExtensionPolicy.PESSIMISTIC) -> HesitantElement:
    """Pad ``h`` to length ``n`` by repeating its min (or max) grade."""
    policy = ExtensionPolicy.parse(policy)
    k = n - len(h)
    if k <= 0:
        return h
    fill = h.min if policy is ExtensionPolicy.PESSIMISTIC else h.max
    return HesitantElement(h.values + (fill,) * k)


def extend_pair(a: HesitantElement, b: HesitantElement,
                policy=ExtensionPolicy.PESSIMISTIC) -> tuple[HesitantElement, HesitantElement]:
    n = max(len(a), len(b))
    return extend_to(a, n, policy), extend_to(b, n, policy)


def paired_arrays(a: HesitantElement, b: HesitantElement, policy=ExtensionPolicy.PESSIMISTIC):
    """Extended grades of ``a`` and ``b`` as equal-length descending arrays."""
    ea, eb = extend_pair(a, b, policy)
    return ea.as_array(), eb.as_array()


def compare_elements(a: HesitantElement, b: HesitantElement,
                     policy=ExtensionPolicy.PESSIMISTIC) -> Relation:
    x, y = paired_arrays(a, b, policy)
    if np.array_equal(x, y):
        return Relation.EQUAL
    if np.all(x <= y):
        return Relation.INFERIOR
    if np.all(x >= y):
        return Relation.SUPERIOR
    return Relation.INCOMPARABLE


@dataclass(frozen=True)
class HesitantSet:
    """An ordered mapping from universe identifiers to hesitant elements."""

    items: tuple

    def __post_init__(self):
        pairs = tuple((str(k), _as_element(v)) for k, v in self.items)
        if not pairs:
            raise InvalidSpec("a hesitant set needs at least one element")
        ids = [k for k, _ in pairs]
        if len(set(ids)) != len(ids):
            raise InvalidSpec(f"duplicate universe identifiers in {ids}")
        object.__setattr__(self, "items", pairs)

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, Sequence[float]], dedupe: bool = True) -> "HesitantSet":
        return cls(tuple((k, v if isinstance(v, HesitantElement) else make_element(v, dedupe))
                         for k, v in mapping.items()))

    @property
    def ids(self) -> tuple:
        return tuple(k for k, _ in self.items)

    @property
    def elements(self) -> tuple:
        return tuple(h for _, h in self.items)

    def __len__(self):
        return len(self.items)

    def __getitem__(self, key) -> HesitantElement:
        for k, h in self.items:
            if k == key:
                return h
        raise KeyError(key)

    def to_dict(self) -> dict:
        return {k: list(h.values) for k, h in self.items}


def check_universe(A: HesitantSet, B: HesitantSet) -> None:
    if A.ids != B.ids:
        raise UniverseMismatch(f"universes differ: {A.ids} vs {B.ids}")


def aligned(A: HesitantSet, B: HesitantSet, policy=ExtensionPolicy.PESSIMISTIC):
    """Per-element extended array pairs for two sets on one universe."""
    check_universe(A, B)
    return [paired_arrays(a, b, policy) for a, b in zip(A.elements, B.elements)]


def sets_equal(A: HesitantSet, B: HesitantSet, policy=ExtensionPolicy.PESSIMISTIC) -> bool:
    check_universe(A, B)
    return all(compare_elements(a, b, policy) is Relation.EQUAL
               for a, b in zip(A.elements, B.elements))


def is_quasi_subset(A: HesitantSet, B: HesitantSet, policy=ExtensionPolicy.PESSIMISTIC) -> bool:
    check_universe(A, B)
    ok = (Relation.INFERIOR, Relation.EQUAL)
    return all(compare_elements(a, b, policy) in ok for a, b in zip(A.elements, B.elements))


def weight_vector(weights, m: int) -> np.ndarray:
    """Validate per-element weights: m entries in [0, 1] summing to 1."""
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1 or len(w) != m:
        raise InvalidSpec(f"expected {m} weights, got {w.shape}")
    if np.any(w < 0) or np.any(w > 1):
        raise InvalidSpec(f"weights must lie in [0, 1]: {w.tolist()}")
    if abs(w.sum() - 1.0) > WEIGHT_TOL:
        raise InvalidSpec(f"weights sum to {w.sum()!r}, not 1")
    w.setflags(write=False)
    return w
