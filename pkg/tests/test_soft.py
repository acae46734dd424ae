import pytest
from hypothesis import given
from hypothesis import strategies as st

from ifpsoft import (
    IFSoftSet,
    UniverseMismatchError,
    ifss_and_product,
    ifss_complement,
    ifss_empty,
    ifss_equal,
    ifss_intersection,
    ifss_or_product,
    ifss_subset,
    ifss_union,
    ifss_universal,
)
from ifpsoft.soft import paired_complement
from strategies import soft_sets, spaces

E, U = spaces(2, 2)
EMPTY = ifss_empty(E, U)
FULL = ifss_universal(E, U)


def one(x, u, mu, nu):
    return IFSoftSet.from_mapping(E, U, {x: {u: (mu, nu)}})


def test_sparse_construction_and_carrier():
    a = one("x1", "u1", 0.3, 0.6)
    assert a.gamma("x2").is_empty()
    assert a.carrier == ("x1",)
    assert EMPTY.carrier == ()
    assert FULL.carrier == ("x1", "x2")


def test_a_universal():
    a = ifss_universal(E, U, carrier=["x2"])
    assert a.gamma("x1").is_empty()
    assert a.gamma("x2").is_universal()


class TestSubset:
    def test_empty_is_minimal(self):
        assert ifss_subset(EMPTY, one("x1", "u1", 0.3, 0.6))

    def test_reflexive(self):
        a = one("x1", "u1", 0.3, 0.6)
        assert ifss_subset(a, a)

    def test_example(self):
        assert ifss_subset(one("x1", "u1", 0.3, 0.6), one("x1", "u1", 0.5, 0.4))
        assert not ifss_subset(one("x1", "u1", 0.5, 0.4), one("x1", "u1", 0.3, 0.6))

    def test_mismatch(self):
        E3, U3 = spaces(3, 2)
        with pytest.raises(UniverseMismatchError):
            ifss_subset(EMPTY, ifss_empty(E3, U3))


class TestUnionIntersection:
    def test_union(self):
        a = one("x1", "u1", 0.4, 0.5)
        assert ifss_union(a, EMPTY) == a
        assert ifss_union(a, FULL) == FULL
        r = ifss_union(a, one("x1", "u1", 0.6, 0.2))
        assert tuple(r.gamma("x1")["u1"]) == (0.6, 0.2)

    def test_intersection(self):
        a = one("x1", "u1", 0.4, 0.5)
        assert ifss_intersection(a, FULL) == a
        assert ifss_intersection(a, EMPTY) == EMPTY
        r = ifss_intersection(a, one("x1", "u1", 0.6, 0.2))
        assert tuple(r.gamma("x1")["u1"]) == (0.4, 0.5)


class TestComplement:
    def test_examples(self):
        a = one("x1", "u1", 0.8, 0.1)
        assert ifss_complement(ifss_complement(a)) == a
        assert ifss_complement(EMPTY) == FULL
        assert tuple(ifss_complement(a).gamma("x1")["u1"]) == (0.1, 0.8)


class TestProducts:
    def test_and_with_universal(self):
        a = one("x1", "u1", 0.5, 0.4)
        p = ifss_and_product(a, FULL)
        for x in E:
            for y in E:
                assert p.gamma(x, y) == a.gamma(x)

    def test_and_with_empty(self):
        p = ifss_and_product(one("x1", "u1", 0.5, 0.4), EMPTY)
        assert all(p.gamma(x, y).is_empty() for x, y in p.pairs())

    def test_and_uses_second_index(self):
        a = one("x1", "u1", 0.5, 0.4)
        b = one("x2", "u1", 0.7, 0.1)
        p = ifss_and_product(a, b)
        assert tuple(p.gamma("x1", "x2")["u1"]) == (0.5, 0.4)
        # b(x1) is empty, so the diagonal pair collapses
        assert p.gamma("x1", "x1").is_empty()

    def test_or_with_universal(self):
        p = ifss_or_product(one("x1", "u1", 0.5, 0.4), FULL)
        assert all(p.gamma(x, y).is_universal() for x, y in p.pairs())

    def test_or_with_empty(self):
        a = one("x1", "u1", 0.5, 0.4)
        p = ifss_or_product(a, EMPTY)
        for x, y in p.pairs():
            assert p.gamma(x, y) == a.gamma(x)

    def test_or_example(self):
        p = ifss_or_product(one("x1", "u1", 0.5, 0.4), one("x2", "u1", 0.7, 0.1))
        assert tuple(p.gamma("x1", "x2")["u1"]) == (0.7, 0.1)
        assert tuple(p.gamma("x2", "x1")["u1"]) == (0.0, 1.0)

    def test_to_dict_is_nested(self):
        p = ifss_and_product(FULL, one("x2", "u1", 0.7, 0.1))
        assert p.to_dict() == {"x1": {"x2": {"u1": (0.7, 0.1)}}, "x2": {"x2": {"u1": (0.7, 0.1)}}}


@st.composite
def soft_pairs(draw):
    E_, U_ = spaces(draw(st.integers(1, 3)), draw(st.integers(1, 3)))
    return draw(soft_sets(E_, U_, steps=4)), draw(soft_sets(E_, U_, steps=4))


def _longhand_product(a, b, pick_mu, pick_nu):
    out = {}
    for i, x in enumerate(a.parameters):
        for j, y in enumerate(a.parameters):
            for k, u in enumerate(a.universe):
                out[x, y, u] = (
                    pick_mu(a.mu[i][k], b.mu[j][k]),
                    pick_nu(a.nu[i][k], b.nu[j][k]),
                )
    return out


def _flatten(p):
    return {
        (x, y, u): tuple(v)
        for x, y in p.pairs()
        for u, v in p.gamma(x, y).items()
    }


@given(soft_pairs())
def test_products_match_longhand(ab):
    a, b = ab
    assert _flatten(ifss_and_product(a, b)) == _longhand_product(a, b, min, max)
    assert _flatten(ifss_or_product(a, b)) == _longhand_product(a, b, max, min)


@given(soft_pairs())
def test_product_duality(ab):
    a, b = ab
    lhs = paired_complement(ifss_and_product(a, b))
    rhs = ifss_or_product(ifss_complement(a), ifss_complement(b))
    assert lhs == rhs


@given(soft_pairs())
def test_soft_laws(ab):
    a, b = ab
    assert ifss_union(a, b) == ifss_union(b, a)
    assert ifss_intersection(a, b) == ifss_intersection(b, a)
    assert ifss_union(a, a) == a and ifss_intersection(a, a) == a
    assert ifss_complement(ifss_union(a, b)) == ifss_intersection(
        ifss_complement(a), ifss_complement(b)
    )
    assert ifss_complement(ifss_intersection(a, b)) == ifss_union(
        ifss_complement(a), ifss_complement(b)
    )
    mutual = ifss_subset(a, b) and ifss_subset(b, a)
    assert mutual == ifss_equal(a, b, atol=0)
