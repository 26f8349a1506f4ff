"""Exact polynomial arithmetic over the rationals.

Two carriers are provided:

  UPoly       -- dense univariate polynomials with Fraction coefficients,
                 lowest degree first.  Used for eliminated/restricted
                 equations and as minimal-polynomial witnesses.
  TernaryForm -- homogeneous forms in (x, y, z) with Fraction coefficients,
                 stored sparsely by exponent triple.  Used as the defining
                 equations of lines and conics.

Everything here is exact; there is no floating point.  All degrees that
actually occur are small (<= 4 from conic-conic elimination), so the dense
univariate representation and cofactor-expansion determinants are fine.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, int, int]

VARS = ("x", "y", "z")


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def parse_rational(text: str) -> Fraction:
    """Parse a rational written as ``p/q`` or ``p``."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(value: Fraction) -> str:
    value = _frac(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class UPoly:
    """Dense univariate polynomial over Q, coefficients lowest degree first.

    The zero polynomial has an empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, value) -> "UPoly":
        return cls([value])

    @classmethod
    def x(cls) -> "UPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, UPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other: "UPoly") -> "UPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out)

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UPoly") -> "UPoly":
        return self + (-other)

    def __mul__(self, other) -> "UPoly":
        if isinstance(other, (int, Fraction)):
            return UPoly([c * other for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return UPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        dlead = other.leading
        dd = other.degree
        while len(rem) - 1 >= dd and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dd:
                break
            shift = len(rem) - 1 - dd
            factor = rem[-1] / dlead
            quo[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            rem.pop()
        return UPoly(quo), UPoly(rem)

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UPoly") -> "UPoly":
        return divmod(self, other)[1]

    def __call__(self, value):
        """Horner evaluation; works for Fraction and AlgebraicNumber inputs."""
        if self.is_zero:
            return Fraction(0)
        acc = self.coeffs[-1] + 0 * value  # coerce into the argument's ring
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def derivative(self) -> "UPoly":
        return UPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UPoly":
        if self.is_zero:
            return self
        lead = self.leading
        return UPoly([c / lead for c in self.coeffs])

    def primitive(self) -> "UPoly":
        """Integer-content-normalized copy with positive leading coefficient."""
        if self.is_zero:
            return self
        den = lcm(*[c.denominator for c in self.coeffs])
        ints = [int(c * den) for c in self.coeffs]
        g = gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return UPoly([Fraction(c, g) for c in ints])

    def __repr__(self) -> str:
        if self.is_zero:
            return "UPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(format_rational(c))
            else:
                pw = "x" if i == 1 else f"x^{i}"
                terms.append(pw if c == 1 else f"{format_rational(c)}*{pw}")
        return "UPoly(" + " + ".join(terms) + ")"


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd by the Euclidean algorithm (fine at these degrees)."""
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a.monic()


def squarefree_part(p: UPoly) -> UPoly:
    """p / gcd(p, p'), primitive-normalized."""
    if p.is_zero:
        raise ValueError("squarefree part of the zero polynomial")
    if p.degree == 0:
        return UPoly.const(1)
    g = poly_gcd(p, p.derivative())
    return (p // g).primitive()


def squarefree_decomposition(p: UPoly) -> list[tuple[UPoly, int]]:
    """Yun's algorithm: return [(factor, multiplicity)] with factors squarefree
    and pairwise coprime; the product of factor^mult recovers p up to a scalar.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    out: list[tuple[UPoly, int]] = []
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        if p.degree >= 1:
            out.append((p.primitive(), 1))
        return out
    w = p // g
    y = p.derivative() // g
    i = 1
    while w.degree >= 1:
        z = y - w.derivative()
        f = poly_gcd(w, z)
        if f.degree >= 1:
            out.append((f.primitive(), i))
        w = w // f
        y = z // f
        i += 1
    return out


def resultant_univariate(p: UPoly, q: UPoly) -> Fraction:
    """Sylvester resultant of two univariate polynomials over Q.

    The row-block order matches :func:`resultant` so that specializing a
    ternary resultant agrees with the univariate one.
    """
    p, q = q, p
    m, n = p.degree, q.degree
    if m < 0 or n < 0:
        raise ValueError("resultant of the zero polynomial")
    if m == 0 and n == 0:
        return Fraction(1)
    if m == 0:
        return p.coeffs[0] ** n
    if n == 0:
        return q.coeffs[0] ** m
    size = m + n
    rows: list[list[Fraction]] = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + pc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + qc + [Fraction(0)] * (size - n - 1 - i))
    return _det_fraction(rows)


def _det_fraction(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    n = len(rows)
    rows = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col] != 0:
                factor = rows[r][col] * inv
                for c in range(col, n):
                    rows[r][c] -= factor * rows[col][c]
    return det


# --------------------------------------------------------------------------
# Homogeneous ternary forms


class TernaryForm:
    """Homogeneous form in (x, y, z) over Q, stored as {(a, b, c): coeff}."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Mapping[Exponent, object]):
        if degree < 1:
            raise ValueError("form degree must be >= 1")
        clean: dict[Exponent, Fraction] = {}
        for expo, c in coeffs.items():
            if sum(expo) != degree:
                raise ValueError(f"exponent {expo} not of degree {degree}")
            c = _frac(c)
            if c != 0:
                clean[tuple(expo)] = c  # type: ignore[index]
        if not clean:
            raise ValueError("zero form")
        self.degree = degree
        self.coeffs = clean

    @classmethod
    def line(cls, a, b, c) -> "TernaryForm":
        return cls(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    @classmethod
    def conic(cls, a, b, c, d, e, f) -> "TernaryForm":
        """a x^2 + b y^2 + c z^2 + d xy + e xz + f yz."""
        return cls(2, {(2, 0, 0): a, (0, 2, 0): b, (0, 0, 2): c,
                       (1, 1, 0): d, (1, 0, 1): e, (0, 1, 1): f})

    def conic_coefficients(self) -> tuple[Fraction, ...]:
        if self.degree != 2:
            raise ValueError("not a conic")
        order = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)]
        return tuple(self.coeffs.get(e, Fraction(0)) for e in order)

    def line_coefficients(self) -> tuple[Fraction, ...]:
        if self.degree != 1:
            raise ValueError("not a line")
        order = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        return tuple(self.coeffs.get(e, Fraction(0)) for e in order)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TernaryForm)
                and self.degree == other.degree and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.degree, tuple(sorted(self.coeffs.items()))))

    def scale(self, factor) -> "TernaryForm":
        factor = _frac(factor)
        if factor == 0:
            raise ValueError("scaling a form by zero")
        return TernaryForm(self.degree, {e: c * factor for e, c in self.coeffs.items()})

    def proportional_to(self, other: "TernaryForm") -> bool:
        if self.degree != other.degree or set(self.coeffs) != set(other.coeffs):
            return False
        expo = next(iter(self.coeffs))
        ratio = other.coeffs[expo] / self.coeffs[expo]
        return all(other.coeffs[e] == c * ratio for e, c in self.coeffs.items())

    def __call__(self, x, y, z):
        """Evaluate; works for Fraction, sympy, and AlgebraicNumber inputs."""
        total = None
        for (a, b, c), coeff in sorted(self.coeffs.items()):
            # build terms factor-wise: x**0 on foreign types can be surprising
            term = coeff
            for base, expo in ((x, a), (y, b), (z, c)):
                for _ in range(expo):
                    term = term * base
            total = term if total is None else total + term
        return total

    def gradient(self) -> tuple["TernaryForm | Fraction | None", ...]:
        """Partial derivatives (df/dx, df/dy, df/dz).

        Each entry is a TernaryForm, or a plain Fraction when this form is
        linear (the partials are constants), or None for a zero partial.
        """
        parts: list[TernaryForm | Fraction | None] = []
        for axis in range(3):
            d: dict[Exponent, Fraction] = {}
            for expo, c in self.coeffs.items():
                if expo[axis] == 0:
                    continue
                new = list(expo)
                new[axis] -= 1
                d[tuple(new)] = d.get(tuple(new), Fraction(0)) + c * expo[axis]
            d = {e: c for e, c in d.items() if c != 0}
            if not d:
                parts.append(None)
            elif self.degree == 1:
                parts.append(d[(0, 0, 0)])
            else:
                parts.append(TernaryForm(self.degree - 1, d))
        return tuple(parts)

    def compose_linear(self, matrix: Sequence[Sequence[Fraction]]) -> "TernaryForm":
        """Substitute (x, y, z) -> M . (x, y, z) and expand."""
        rows = [[_frac(v) for v in row] for row in matrix]
        out: dict[Exponent, Fraction] = {}
        for expo, coeff in self.coeffs.items():
            # product of the three substituted linear forms, each repeated
            factors = []
            for axis in range(3):
                factors.extend([rows[axis]] * expo[axis])
            terms: dict[Exponent, Fraction] = {(0, 0, 0): coeff}
            for lin in factors:
                nxt: dict[Exponent, Fraction] = {}
                for e, c in terms.items():
                    for var in range(3):
                        if lin[var] == 0:
                            continue
                        ne = list(e)
                        ne[var] += 1
                        key = tuple(ne)
                        nxt[key] = nxt.get(key, Fraction(0)) + c * lin[var]
                terms = nxt
            for e, c in terms.items():
                out[e] = out.get(e, Fraction(0)) + c
        out = {e: c for e, c in out.items() if c != 0}
        if not out:
            raise ValueError("singular substitution matrix")
        return TernaryForm(self.degree, out)

    def __repr__(self) -> str:
        terms = []
        for expo, c in sorted(self.coeffs.items(), reverse=True):
            mono = "".join(v if e == 1 else f"{v}^{e}"
                           for v, e in zip(VARS, expo) if e)
            cs = format_rational(c)
            if mono:
                terms.append(mono if cs == "1" else f"{cs}*{mono}")
            else:
                terms.append(cs)
        return "TernaryForm(" + " + ".join(terms) + ")"


# Bivariate polynomials (dict {(i, j): Fraction}) appear only as entries of
# the Sylvester matrix during elimination.

_BiPoly = dict[tuple[int, int], Fraction]


def _bi_add(a: _BiPoly, b: _BiPoly) -> _BiPoly:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, Fraction(0)) + c
    return {e: c for e, c in out.items() if c != 0}


def _bi_mul(a: _BiPoly, b: _BiPoly) -> _BiPoly:
    out: _BiPoly = {}
    for (i, j), c in a.items():
        for (k, l), d in b.items():
            key = (i + k, j + l)
            out[key] = out.get(key, Fraction(0)) + c * d
    return {e: c for e, c in out.items() if c != 0}


def _bi_det(rows: list[list[_BiPoly]]) -> _BiPoly:
    """Determinant with polynomial entries by cofactor expansion (n <= 4)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc: _BiPoly = {}
    for col in range(n):
        entry = rows[0][col]
        if not entry:
            continue
        minor = [[rows[r][c] for c in range(n) if c != col] for r in range(1, n)]
        term = _bi_mul(entry, _bi_det(minor))
        if col % 2:
            term = {e: -c for e, c in term.items()}
        acc = _bi_add(acc, term)
    return acc


def resultant(p: TernaryForm, q: TernaryForm, variable: str = "x") -> TernaryForm:
    """Sylvester resultant of two ternary forms w.r.t. one variable.

    The result is a homogeneous form of degree deg(p)*deg(q) in the two
    remaining variables (returned as a TernaryForm in which the eliminated
    variable does not occur).  An identically vanishing resultant (the
    inputs share a factor) is returned as None, since forms are nonzero by
    construction.  Raises ValueError when either input has degree zero in
    the eliminated variable (nothing to eliminate).
    """
    axis = VARS.index(variable)
    others = [i for i in range(3) if i != axis]

    def as_poly_in(form: TernaryForm) -> list[_BiPoly]:
        deg = max(e[axis] for e in form.coeffs)
        cs: list[_BiPoly] = [{} for _ in range(deg + 1)]
        for expo, c in form.coeffs.items():
            key = (expo[others[0]], expo[others[1]])
            cs[expo[axis]][key] = cs[expo[axis]].get(key, Fraction(0)) + c
        return cs

    pc, qc = as_poly_in(q), as_poly_in(p)  # row order fixes the sign convention
    m, n = len(pc) - 1, len(qc) - 1
    if m == 0 or n == 0:
        raise ValueError(f"nothing to eliminate: degree 0 in {variable}")
    size = m + n
    prow = list(reversed(pc))
    qrow = list(reversed(qc))
    rows: list[list[_BiPoly]] = []
    for i in range(n):
        rows.append([{} for _ in range(i)] + prow + [{} for _ in range(size - m - 1 - i)])
    for i in range(m):
        rows.append([{} for _ in range(i)] + qrow + [{} for _ in range(size - n - 1 - i)])
    det = _bi_det(rows)
    out: dict[Exponent, Fraction] = {}
    for (i, j), c in det.items():
        expo = [0, 0, 0]
        expo[others[0]] = i
        expo[others[1]] = j
        out[tuple(expo)] = c
    if not out:
        # identically zero resultant: common factor; callers treat as error/None
        return None  # type: ignore[return-value]
    return TernaryForm(p.degree * q.degree, out)


def form_to_upoly(form: TernaryForm, variable: str, at_one: str) -> UPoly:
    """Dehomogenize: read ``form`` as a univariate polynomial in ``variable``
    with the ``at_one`` variable set to 1; the third variable must not occur.
    """
    vi, oi = VARS.index(variable), VARS.index(at_one)
    third = ({0, 1, 2} - {vi, oi}).pop()
    coeffs = [Fraction(0)] * (form.degree + 1)
    for expo, c in form.coeffs.items():
        if expo[third] != 0:
            raise ValueError(f"form involves {VARS[third]}")
        coeffs[expo[vi]] += c
    return UPoly(coeffs)
