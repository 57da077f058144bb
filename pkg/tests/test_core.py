import numpy as np
import pytest
from hypothesis import given, strategies as st

from hfsim import (EmptyElement, ExtensionPolicy, HesitantElement, HesitantSet, OutOfRange,
                   Relation, UniverseMismatch, compare_elements, extend_pair, is_quasi_subset,
                   make_element)
from conftest import elements, random_chain

PESS, OPT = ExtensionPolicy.PESSIMISTIC, ExtensionPolicy.OPTIMISTIC


def el(*v):
    return make_element(v, dedupe=False)


class TestMakeElement:
    def test_sorted_descending(self):
        assert make_element([0.4, 0.9, 0.7]).values == (0.9, 0.7, 0.4)

    def test_dedupe(self):
        assert make_element([0.5, 0.5, 0.3]).values == (0.5, 0.3)
        assert make_element([0.5, 0.5, 0.3], dedupe=False).values == (0.5, 0.5, 0.3)

    def test_errors(self):
        with pytest.raises(EmptyElement):
            make_element([])
        with pytest.raises(OutOfRange):
            make_element([0.2, 1.2])
        with pytest.raises(OutOfRange):
            make_element([-0.01])

    def test_roundoff_is_clamped(self):
        assert make_element([1 + 5e-13, -5e-13]).values == (1.0, 0.0)

    @given(st.lists(st.floats(0, 1), min_size=1, max_size=8), st.booleans())
    def test_invariants(self, raw, dedupe):
        h = make_element(raw, dedupe)
        assert list(h.values) == sorted(h.values, reverse=True)
        assert all(0 <= v <= 1 for v in h.values)


class TestExtension:
    def test_pessimistic_pads_with_min(self):
        a, b = extend_pair(el(0.5, 0.4), el(0.7, 0.4, 0.2), PESS)
        assert a.values == (0.5, 0.4, 0.4)
        assert b.values == (0.7, 0.4, 0.2)

    def test_optimistic_pads_with_max(self):
        a, b = extend_pair(el(0.5, 0.4), el(0.7, 0.4, 0.2), OPT)
        assert a.values == (0.5, 0.5, 0.4)
        assert b.values == (0.7, 0.4, 0.2)

    def test_equal_lengths_unchanged(self):
        assert extend_pair(el(0.3), el(0.3)) == (el(0.3), el(0.3))

    @given(elements, elements, st.sampled_from([PESS, OPT]))
    def test_longer_untouched_and_idempotent(self, x, y, policy):
        a, b = el(*x), el(*y)
        ea, eb = extend_pair(a, b, policy)
        assert len(ea) == len(eb) == max(len(a), len(b))
        if len(a) >= len(b):
            assert ea == a
        if len(b) >= len(a):
            assert eb == b
        assert extend_pair(ea, eb, policy) == (ea, eb)


class TestCompare:
    def test_examples(self):
        assert compare_elements(el(0.5, 0.4), el(0.7, 0.4, 0.2)) is Relation.INCOMPARABLE
        assert compare_elements(el(0.5, 0.4), el(0.5, 0.4)) is Relation.EQUAL
        assert compare_elements(el(0.2, 0.1), el(0.9, 0.8)) is Relation.INFERIOR
        assert compare_elements(el(0.9, 0.8), el(0.2, 0.1)) is Relation.SUPERIOR

    @given(elements, elements)
    def test_reflexive_and_antisymmetric(self, x, y):
        a, b = el(*x), el(*y)
        assert compare_elements(a, a) is Relation.EQUAL
        r = compare_elements(a, b)
        back = {Relation.INFERIOR: Relation.SUPERIOR, Relation.SUPERIOR: Relation.INFERIOR}
        assert compare_elements(b, a) is back.get(r, r)

    @given(elements, elements)
    def test_equal_unextended_means_equal_length(self, x, y):
        a, b = el(*x), el(*y)
        if compare_elements(a, b) is Relation.EQUAL and len(a) == len(b):
            assert a == b


class TestQuasiSubset:
    def test_examples(self):
        A = HesitantSet.from_mapping({"x": [0.5, 0.4]})
        B = HesitantSet.from_mapping({"x": [0.7, 0.4, 0.2]})
        assert is_quasi_subset(A, A)
        assert not is_quasi_subset(A, B)
        Z = HesitantSet.from_mapping({"x": [0.0]})
        assert is_quasi_subset(Z, B)

    def test_universe_mismatch(self):
        A = HesitantSet.from_mapping({"x": [0.5]})
        B = HesitantSet.from_mapping({"y": [0.5]})
        with pytest.raises(UniverseMismatch):
            is_quasi_subset(A, B)

    def test_chains_reflexive_transitive(self, rng):
        for _ in range(200):
            A, B, C = random_chain(rng)
            assert is_quasi_subset(A, A)
            assert is_quasi_subset(A, B) and is_quasi_subset(B, C)
            assert is_quasi_subset(A, C)


def test_set_rejects_duplicates_and_empty():
    with pytest.raises(ValueError):
        HesitantSet((("x", el(0.1)), ("x", el(0.2))))
    with pytest.raises(ValueError):
        HesitantSet(())


def test_element_is_immutable():
    h = el(0.3, 0.1)
    with pytest.raises(AttributeError):
        h.values = (1.0,)
    assert isinstance(h, HesitantElement) and np.allclose(h.as_array(), [0.3, 0.1])
