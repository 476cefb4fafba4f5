import warnings

import pytest
from hypothesis import given, settings, strategies as st

from pgwa.ore import (GWAParams, GWAParamsError, OreAlgebra, SpecializationWarning, algebra_for,
                      central_element, commutator, is_central, specialize)
from pgwa.poly import LaurentPoly, substitute_h
from pgwa.scalar import Scalar
from conftest import H
from strategies import gwa_a

TV = ("t", "h")
T = LaurentPoly.gen(TV, "t")


def naive_product(params, f, g):
    """Multiply by rewriting words in x, y: independent of the engine's closed formulas."""
    a = params.a.with_vars(TV)
    dx = a - substitute_h(a, T)
    shift = {"x": T, "y": LaurentPoly.monomial(TV, {"t": -1})}

    def past(word, c):
        for letter in reversed(word):
            c = substitute_h(c, shift[letter])
        return c

    def words(elem):
        out = []
        for (ta, hb, i, j), c in elem.terms.items():
            out.append((LaurentPoly.monomial(TV, {"t": ta, "h": hb}, c), "x" * i + "y" * j))
        return out

    todo = [(c1 * past(w1, c2), w1 + w2) for c1, w1 in words(f) for c2, w2 in words(g)]
    done = {}
    while todo:
        c, w = todo.pop()
        k = w.find("yx")
        if k < 0:
            done[w] = done.get(w, LaurentPoly.zero(TV)) + c
            continue
        todo.append((c, w[:k] + "xy" + w[k + 2:]))
        todo.append((c * past(w[:k], dx), w[:k] + w[k + 2:]))
    B = algebra_for(params)
    out = B.zero
    for w, c in done.items():
        i, j = w.count("x"), w.count("y")
        for (ta, hb), s in c.terms.items():
            out = out + B.monomial(s, ta, hb, i, j)
    return out


@st.composite
def elements(draw, B, terms=3):
    out = B.zero
    for _ in range(draw(st.integers(0, terms))):
        out = out + B.monomial(draw(st.integers(-3, 3).filter(bool)), draw(st.integers(-2, 2)),
                               draw(st.integers(-2, 2)), draw(st.integers(0, 2)), draw(st.integers(0, 2)))
    return out


A2 = GWAParams(H("h^2+1"))
B2 = algebra_for(A2)


def test_params_validation():
    with pytest.raises(GWAParamsError):
        GWAParams(H("3h^2"))
    with pytest.raises(GWAParamsError):
        GWAParams(LaurentPoly.zero(("h",)))
    assert GWAParams(H("z4 h + 1")).conductor == 4
    assert GWAParams(H("h+1"), 6).conductor == 6


def test_product_examples():
    B = B2
    assert B.x * B.h == B.t * B.h * B.x
    assert B.y * B.x == B.x * B.y + B.from_poly(A2.a) - B.from_poly(A2.a_th())
    assert B.y * B.h == B.monomial(1, t=-1, h=1, y=1)
    assert B.h * B.h_inv == B.one


def test_commutator_examples():
    B = B2
    assert commutator(B.x, B.h) == (B.t - 1) * B.h * B.x
    assert commutator(B.h, B.h ** 2) == B.zero
    assert commutator(B.y, B.x) == B.from_poly(A2.a) - B.from_poly(A2.a_th())


def test_centrality_examples():
    B = B2
    assert is_central(central_element(A2))
    assert is_central(B.one)
    rep = is_central(B.x)
    assert not rep
    assert rep.witness_generator == "h"
    assert rep.witness == (B.t - 1) * B.h * B.x


def test_specialize_examples():
    B = B2
    assert specialize(B.x * B.h, 2) == algebra_for(A2, Scalar(2)).monomial(2, h=1, x=1)
    assert specialize(B.h, 5) == algebra_for(A2, Scalar(5)).h
    a_2h = substitute_h(A2.a, 2)
    B_2 = algebra_for(A2, Scalar(2))
    assert specialize(commutator(B.y, B.x), 2) == B_2.from_poly(A2.a) - B_2.from_poly(a_2h)


def test_specialize_degenerate_warns():
    with pytest.warns(SpecializationWarning):
        specialize(B2.x, 1)
    with pytest.warns(SpecializationWarning):
        specialize(B2.x, Scalar.root_of_unity(4))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        specialize(B2.x, 3)
    with pytest.raises(ValueError):
        specialize(B2.x, 0)


def test_telescoped_delta_power_oracle():
    for text in ("h^2+1", "h^-1+h", "(h^2+1)^2", "h^3+h+1"):
        p = GWAParams(H(text))
        B = algebra_for(p)
        for k in range(1, 6):
            tail = B.from_poly(p.a_in(TV) - substitute_h(p.a_in(TV), T ** k))
            assert B.y * B.x ** k == B.x ** k * B.y + tail * B.x ** (k - 1)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_engine_matches_naive_rewriting(data):
    p = GWAParams(data.draw(gwa_a))
    B = algebra_for(p)
    f, g = data.draw(elements(B)), data.draw(elements(B))
    assert f * g == naive_product(p, f, g)


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_ring_axioms(data):
    p = GWAParams(data.draw(gwa_a))
    B = algebra_for(p)
    f, g, k = (data.draw(elements(B)) for _ in range(3))
    assert (f * g) * k == f * (g * k)
    assert f * (g + k) == f * g + f * k
    assert (f + g) * k == f * k + g * k
    assert f * B.one == f == B.one * f


@given(st.data())
@settings(max_examples=25, deadline=None)
def test_central_element_is_central_for_any_a(data):
    p = GWAParams(data.draw(gwa_a))
    z = central_element(p)
    assert is_central(z)
    assert commutator(z, data.draw(elements(algebra_for(p)))) == algebra_for(p).zero


@given(st.data(), st.sampled_from([2, 3, -1, Scalar(1, 2)]))
@settings(max_examples=30, deadline=None)
def test_specialize_is_a_homomorphism(data, lam):
    p = GWAParams(data.draw(gwa_a))
    B = algebra_for(p)
    f, g = data.draw(elements(B)), data.draw(elements(B))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SpecializationWarning)
        assert specialize(f * g, lam) == specialize(f, lam) * specialize(g, lam)
        assert specialize(f + g, lam) == specialize(f, lam) + specialize(g, lam)


def test_independent_engine_instances_agree():
    fresh = OreAlgebra(A2)
    f = fresh.x ** 3 * fresh.y ** 2 + fresh.h_inv
    g = fresh.y ** 3 * fresh.t
    other = B2.element(f.terms) * B2.element(g.terms)
    assert (f * g).terms == other.terms


def test_mixed_algebras_rejected():
    other = algebra_for(GWAParams(H("h+1")))
    with pytest.raises(ValueError):
        B2.x * other.x
