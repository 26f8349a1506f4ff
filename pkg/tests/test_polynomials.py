from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from coniclines.polynomials import (
    TernaryForm,
    UPoly,
    form_to_upoly,
    format_rational,
    parse_rational,
    poly_gcd,
    resultant,
    resultant_univariate,
    squarefree_decomposition,
    squarefree_part,
)


def test_rational_round_trip():
    assert parse_rational("3/4") == F(3, 4)
    assert parse_rational("-7") == F(-7)
    assert format_rational(F(3, 4)) == "3/4"
    assert format_rational(F(5)) == "5"


def test_upoly_divmod():
    p = UPoly([1, -3, 0, 2])  # 2x^3 - 3x + 1
    q = UPoly([-1, 1])        # x - 1
    quo, rem = divmod(p, q)
    assert rem.is_zero
    assert quo * q == p


def test_upoly_eval_horner():
    p = UPoly([1, 2, 3])
    assert p(F(1, 2)) == 1 + 1 + F(3, 4)


def test_gcd_and_squarefree():
    a = UPoly([-1, 1])  # x - 1
    b = UPoly([1, 1])   # x + 1
    p = a * a * b
    assert poly_gcd(p, p.derivative()) == a.monic()
    assert squarefree_part(p) == (a * b).primitive()
    assert squarefree_part(UPoly([-2, 0, 1])) == UPoly([-2, 0, 1])
    assert squarefree_part(UPoly([5])) == UPoly([1])


def test_squarefree_decomposition():
    a = UPoly([-1, 1])
    b = UPoly([1, 1])
    p = a * a * a * b
    decomp = squarefree_decomposition(p)
    assert (b.primitive(), 1) in decomp
    assert (a.primitive(), 3) in decomp


def test_primitive_normalization():
    p = UPoly([F(1, 2), F(-3, 4)])
    prim = p.primitive()
    assert prim == UPoly([-2, 3])
    assert prim.leading > 0


def test_resultant_quadric_line():
    p = TernaryForm(2, {(2, 0, 0): 1, (0, 0, 2): -2})  # x^2 - 2z^2
    q = TernaryForm(1, {(1, 0, 0): 1, (0, 1, 0): -1})  # x - y
    r = resultant(p, q, "x")
    assert r == TernaryForm(2, {(0, 2, 0): 1, (0, 0, 2): -2})


def test_resultant_two_lines():
    a, b = F(3), F(5)
    p = TernaryForm.line(1, 0, -a)
    q = TernaryForm.line(1, 0, -b)
    r = resultant(p, q, "x")
    # (b - a) z
    assert r == TernaryForm(1, {(0, 0, 1): b - a})


def test_resultant_self_vanishes():
    p = TernaryForm.conic(1, 1, -2, 0, 0, 0)
    assert resultant(p, p, "x") is None


def test_resultant_nothing_to_eliminate():
    p = TernaryForm.line(0, 1, -1)  # no x
    q = TernaryForm.conic(1, 1, -1, 0, 0, 0)
    with pytest.raises(ValueError, match="nothing to eliminate"):
        resultant(p, q, "x")


@given(st.fractions(max_denominator=20))
def test_resultant_specialization(lam):
    # res_x(p, q) at (y, z) = (lam, 1) equals the univariate resultant of the
    # specialized polynomials when the leading x-coefficients survive
    p = TernaryForm.conic(1, 2, -3, 1, 0, 0)
    q = TernaryForm.conic(2, -1, 1, 0, 1, 2)
    r = resultant(p, q, "x")
    specialized = sum(
        c * lam ** e[1] for e, c in r.coeffs.items())
    pu = UPoly([p.coeffs.get((0, 2, 0), F(0)) * lam ** 2
                + p.coeffs.get((0, 1, 1), F(0)) * lam
                + p.coeffs.get((0, 0, 2), F(0)),
                p.coeffs.get((1, 1, 0), F(0)) * lam
                + p.coeffs.get((1, 0, 1), F(0)),
                p.coeffs.get((2, 0, 0), F(0))])
    qu = UPoly([q.coeffs.get((0, 2, 0), F(0)) * lam ** 2
                + q.coeffs.get((0, 1, 1), F(0)) * lam
                + q.coeffs.get((0, 0, 2), F(0)),
                q.coeffs.get((1, 1, 0), F(0)) * lam
                + q.coeffs.get((1, 0, 1), F(0)),
                q.coeffs.get((2, 0, 0), F(0))])
    assert resultant_univariate(pu, qu) == specialized


def test_form_to_upoly():
    r = TernaryForm(2, {(0, 2, 0): 1, (0, 0, 2): -2})
    assert form_to_upoly(r, "y", "z") == UPoly([-2, 0, 1])
    with pytest.raises(ValueError):
        form_to_upoly(TernaryForm.conic(1, 1, -1, 0, 0, 0), "y", "z")


def test_compose_linear_swap():
    p = TernaryForm.conic(1, 2, 3, 0, 0, 0)
    swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    assert p.compose_linear(swap) == TernaryForm.conic(2, 1, 3, 0, 0, 0)


def test_gradient():
    p = TernaryForm.conic(1, 1, -1, 0, 0, 0)
    gx, gy, gz = p.gradient()
    assert gx == TernaryForm.line(2, 0, 0)
    assert gy == TernaryForm.line(0, 2, 0)
    assert gz == TernaryForm.line(0, 0, -2)
