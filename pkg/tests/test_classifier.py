import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from otheta.algebra import GenPair, gen, sigma_real
from otheta.classifier import (classify, connes_T, integer_root, lambda_exponent, modular_eigenvalue,
                               spectrum_grid)
from otheta.graph import EMPTY, ThetaSpec, Word, words_up_to


def test_classify_examples():
    r = classify(2, 3)
    assert r.kind == "III_1" and r.a is None and r.lambda_float is None and r.caveat is None
    r = classify(4, 8)
    assert r.kind == "III_lambda" and (r.a, r.b) == (3, 2) and r.lambda_float == 0.5
    assert r.lambda_exact == "4^(-1/2)" and r.caveat
    r = classify(2, 2)
    assert (r.a, r.b) == (1, 1) and r.lambda_float == 0.5
    with pytest.raises(ValueError):
        classify(1, 2)


@given(st.integers(2, 200), st.integers(1, 6), st.integers(1, 6))
def test_lambda_consistency(r, a, b):
    m, n = r ** b, r ** a
    if m > 10 ** 6 or n > 10 ** 6:
        return
    rep = classify(m, n)
    assert rep.kind == "III_lambda"
    assert 0 < rep.lambda_float < 1
    assert abs(rep.lambda_float - n ** (-1 / rep.a)) < 1e-12
    assert m ** rep.a == n ** rep.b


def test_report_lines():
    lines = classify(4, 8).lines()
    assert lines[0] == "kind=III_lambda"
    assert "a=3" in lines and "b=2" in lines and "lambda_float=0.5" in lines
    assert classify(2, 3).lines()[1] == "a=none"


def test_modular_eigenvalue_examples():
    t = ThetaSpec.identity(2, 3)
    u = Word((1,), (2,))
    assert modular_eigenvalue(GenPair(u, u), t) == 1
    assert modular_eigenvalue(GenPair(Word((1,), ()), EMPTY), t) == Fraction(1, 2)
    assert modular_eigenvalue(GenPair(EMPTY, Word((), (1,))), t) == 3


def test_modular_eigenvalue_adjoint_pair():
    t = ThetaSpec.identity(2, 3)
    ws = words_up_to((2, 2), t)
    for u in ws[::5]:
        for v in ws[::7]:
            assert modular_eigenvalue(GenPair(u, v), t) * modular_eigenvalue(GenPair(v, u), t) == 1


def test_spectrum_examples():
    assert spectrum_grid(2, 2, 1) == [Fraction(1, 4), Fraction(1, 2), 1, 2, 4]
    assert len(spectrum_grid(2, 3, 2)) == 25
    g = spectrum_grid(4, 8, 1)
    assert all(lambda_exponent(v, 2) is not None for v in g)
    assert spectrum_grid(3, 5, 0) == [1]
    with pytest.raises(ValueError):
        spectrum_grid(2, 2, -1)


@pytest.mark.parametrize("m,n,K", [(2, 2, 2), (2, 3, 2), (4, 8, 1)])
def test_spectrum_matches_generator_eigenvalues(m, n, K):
    t = ThetaSpec.identity(m, n)
    ws = words_up_to((K, K), t)
    eig = {modular_eigenvalue(GenPair(u, v), t) for u in ws for v in ws}
    assert eig == set(spectrum_grid(m, n, K))


def test_lambda_exponent_and_root():
    assert integer_root(4, 8) == 2
    assert integer_root(27, 9) == 3
    assert integer_root(2, 3) is None
    assert lambda_exponent(Fraction(1, 8), 2) == -3
    assert lambda_exponent(Fraction(1), 5) == 0
    assert lambda_exponent(Fraction(3), 2) is None
    assert lambda_exponent(Fraction(8), 4) is None
    assert lambda_exponent(Fraction(36), 6) == 2


def test_connes_T():
    assert abs(connes_T(2, 2) - 2 * math.pi / math.log(2)) < 1e-12
    assert abs(connes_T(4, 8) - 2 * math.pi / math.log(2)) < 1e-12
    assert connes_T(2, 3) is None


@pytest.mark.parametrize("m,n", [(2, 2), (4, 8), (9, 27)])
def test_sigma_periodic_at_T(m, n):
    t = ThetaSpec.identity(m, n)
    T = connes_T(m, n)
    ws = words_up_to((1, 1), t)
    for u in ws:
        for v in ws:
            (_, c), = sigma_real(gen(t, u, v), T).terms.items()
            assert abs(c - 1) < 1e-9
