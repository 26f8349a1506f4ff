"""Exact intersection of arrangement curves and derived combinatorics.

Pairwise intersections are computed exactly: linear solving for two lines,
substitution into a rational parametrization for line/conic, and resultant
elimination with back-substitution for conic/conic.  The conic/conic route
works in randomly changed projective coordinates, retried until the change
is generic (no intersection at infinity, no two points sharing an
elimination fiber), and maps the points back afterwards.

Pair multiplicities always sum to the product of the curve degrees; a pair
multiplicity >= 2 at a point is a tangency and makes the point non-ordinary.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .algebraic import AlgebraicNumber, alg_equal, isolate_roots
from .curves import (
    Arrangement,
    CombinatorialType,
    PlaneCurve,
    ProjectivePoint,
    SingularPoint,
    ValidationError,
    validate_arrangement,
)
from .polynomials import TernaryForm, UPoly, form_to_upoly, resultant

PairResult = list[tuple[ProjectivePoint, int]]


class IntersectionError(RuntimeError):
    """The engine could not complete an exact intersection computation."""


def intersect_pair(c1: PlaneCurve, c2: PlaneCurve) -> PairResult:
    """All intersection points of two distinct curves with pair multiplicities.

    Multiplicities sum to deg(c1) * deg(c2); complex points are included.
    """
    if c1.form.proportional_to(c2.form):
        raise IntersectionError("identical curves")
    kinds = (c1.kind, c2.kind)
    if kinds == ("line", "line"):
        return _intersect_lines(c1.form, c2.form)
    if kinds == ("line", "conic"):
        return _intersect_line_conic(c1.form, c2.form)
    if kinds == ("conic", "line"):
        return _intersect_line_conic(c2.form, c1.form)
    return _intersect_conics(c1.form, c2.form)


def _intersect_lines(l1: TernaryForm, l2: TernaryForm) -> PairResult:
    a1, b1, c1 = l1.line_coefficients()
    a2, b2, c2 = l2.line_coefficients()
    cross = (b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2)
    if all(v == 0 for v in cross):
        raise IntersectionError("identical curves")
    return [(ProjectivePoint.from_coords(*cross), 1)]


def _line_basis(line: TernaryForm) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Two independent rational points spanning the line a*x + b*y + c*z = 0."""
    a, b, c = line.line_coefficients()
    if a != 0:
        return (-b, a, Fraction(0)), (-c, Fraction(0), a)
    if b != 0:
        return (Fraction(1), Fraction(0), Fraction(0)), (Fraction(0), -c, b)
    return (Fraction(1), Fraction(0), Fraction(0)), (Fraction(0), Fraction(1), Fraction(0))


def _intersect_line_conic(line: TernaryForm, conic: TernaryForm) -> PairResult:
    p0, p1 = _line_basis(line)
    # restrict the conic to the line: Q(s*P0 + t*P1) = A s^2 + B st + C t^2
    quad_a = conic(*p0)
    quad_c = conic(*p1)
    both = tuple(u + v for u, v in zip(p0, p1))
    quad_b = conic(*both) - quad_a - quad_c
    points: PairResult = []
    if quad_a != 0:
        for s, mult in isolate_roots(UPoly([quad_c, quad_b, quad_a])):
            coords = [s * p0[i] + p1[i] for i in range(3)]
            points.append((ProjectivePoint.from_coords(*coords), mult))
    elif quad_b != 0:
        # t * (B s + C t): the parameter point (1 : 0) plus one simple root
        points.append((ProjectivePoint.from_coords(*p0), 1))
        s = -quad_c / quad_b
        coords = [s * p0[i] + p1[i] for i in range(3)]
        points.append((ProjectivePoint.from_coords(*coords), 1))
    else:
        if quad_c == 0:
            raise IntersectionError("line is a component of the conic")
        points.append((ProjectivePoint.from_coords(*p0), 2))
    assert sum(m for _p, m in points) == 2
    return points


def _identity() -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]


def _random_matrix(rng: random.Random) -> list[list[Fraction]]:
    while True:
        m = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
               - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
               + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        if det != 0:
            return m


def _x_coefficients(conic: TernaryForm) -> tuple[Fraction, UPoly, UPoly]:
    """Read a conic as a2*x^2 + a1(y)*x + a0(y) at z = 1."""
    a2 = conic.coeffs.get((2, 0, 0), Fraction(0))
    a1 = UPoly([conic.coeffs.get((1, 0, 1), Fraction(0)),
                conic.coeffs.get((1, 1, 0), Fraction(0))])
    a0 = UPoly([conic.coeffs.get((0, 0, 2), Fraction(0)),
                conic.coeffs.get((0, 1, 1), Fraction(0)),
                conic.coeffs.get((0, 2, 0), Fraction(0))])
    return a2, a1, a0


def _intersect_conics(p: TernaryForm, q: TernaryForm) -> PairResult:
    seed = repr(sorted(p.coeffs.items())) + "|" + repr(sorted(q.coeffs.items()))
    rng = random.Random(seed)
    last_reason = "no attempt made"
    for attempt in range(25):
        matrix = _identity() if attempt == 0 else _random_matrix(rng)
        try:
            return _intersect_conics_in_coords(p, q, matrix)
        except _NotGeneric as exc:
            last_reason = str(exc)
    raise IntersectionError(
        f"no generic coordinate change found after 25 attempts ({last_reason})")


class _NotGeneric(Exception):
    pass


def _intersect_conics_in_coords(p: TernaryForm, q: TernaryForm,
                                matrix) -> PairResult:
    pt = p.compose_linear(matrix)
    qt = q.compose_linear(matrix)
    a2, a1, a0 = _x_coefficients(pt)
    b2, b1, b0 = _x_coefficients(qt)
    if a2 == 0 or b2 == 0:
        raise _NotGeneric("a conic passes through (1:0:0)")
    res = resultant(pt, qt, "x")
    if res is None:
        raise IntersectionError("identical curves")
    if res.coeffs.get((0, 4, 0), Fraction(0)) == 0:
        raise _NotGeneric("intersection point at infinity")
    quartic = form_to_upoly(res, "y", "z")
    # eliminate x^2: b2*p - a2*q is linear in x with polynomial coefficients
    lin1 = b2 * a1 - a2 * b1
    lin0 = b2 * a0 - a2 * b0
    points: PairResult = []
    for y_val, mult in isolate_roots(quartic):
        c1v = lin1(y_val)
        if not isinstance(c1v, AlgebraicNumber):
            c1v = AlgebraicNumber.from_rational(c1v)
        if c1v.is_zero:
            raise _NotGeneric("two intersection points share a fiber")
        c0v = lin0(y_val)
        x_val = -c0v / c1v
        _verify_on_both(pt, qt, lin0, lin1, y_val)
        # map back: original point is M . (x, y, 1)
        one = AlgebraicNumber.from_rational(1)
        vec = (x_val, y_val, one)
        coords = [sum((matrix[i][j] * vec[j] for j in range(3)),
                      AlgebraicNumber.from_rational(0)) for i in range(3)]
        points.append((ProjectivePoint.from_coords(*coords), mult))
    assert sum(m for _pnt, m in points) == 4
    return points


def _verify_on_both(pt: TernaryForm, qt: TernaryForm,
                    lin0: UPoly, lin1: UPoly, y_val: AlgebraicNumber) -> None:
    """Check x = -lin0/lin1 satisfies both conics at the fiber of y_val.

    Done with plain polynomial division: clearing denominators turns the
    check into 'the witness of y_val divides a rational polynomial'.
    """
    for form in (pt, qt):
        c2, c1, c0 = _x_coefficients(form)
        # lin1^2 * f(-lin0/lin1, y, 1)
        num = c2 * (lin0 * lin0) - (c1 * lin0) * lin1 + c0 * (lin1 * lin1)
        if (num % y_val.minpoly).is_zero:
            continue
        val = num(y_val)
        if not isinstance(val, AlgebraicNumber):
            val = AlgebraicNumber.from_rational(val)
        if not val.is_zero:
            raise IntersectionError("back-substitution verification failed")


def tangent_line(curve: PlaneCurve, point: ProjectivePoint
                 ) -> tuple[AlgebraicNumber, AlgebraicNumber, AlgebraicNumber]:
    """Tangent of the curve at a point of it: the gradient, as a line."""
    value = curve.form(*point.coords)
    if not isinstance(value, AlgebraicNumber):
        value = AlgebraicNumber.from_rational(value)
    if not value.is_zero:
        raise ValidationError("point does not lie on the curve")
    out = []
    for part in curve.form.gradient():
        if part is None:
            out.append(AlgebraicNumber.from_rational(0))
        elif isinstance(part, Fraction):
            out.append(AlgebraicNumber.from_rational(part))
        else:
            v = part(*point.coords)
            out.append(v if isinstance(v, AlgebraicNumber)
                       else AlgebraicNumber.from_rational(v))
    return tuple(out)


def _tangents_proportional(u, v) -> bool:
    minors = (u[0] * v[1] - u[1] * v[0],
              u[0] * v[2] - u[2] * v[0],
              u[1] * v[2] - u[2] * v[1])
    return all(m.is_zero for m in minors)


@dataclass
class _Occurrence:
    point: ProjectivePoint
    pair: tuple[int, int]
    mult: int


def cluster_points(pair_results: dict[tuple[int, int], PairResult]
                   ) -> list[SingularPoint]:
    """Group pairwise intersection points by exact projective equality.

    Every pairwise point lies on >= 2 curves by construction, so every
    cluster becomes a SingularPoint.  A cluster is ordinary iff every pair
    of incident curves meets transversally there (all pair mults are 1).
    """
    occurrences: list[_Occurrence] = []
    for pair, results in pair_results.items():
        for point, mult in results:
            occurrences.append(_Occurrence(point, pair, mult))
    # coarse pass: points whose coordinate boxes are disjoint cannot be equal
    eps = Fraction(1, 2 ** 30)
    boxes = []
    for occ in occurrences:
        boxes.append(tuple(c.refine_box(eps) for c in occ.point.coords))
    parent = list(range(len(occurrences)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        parent[find(i)] = find(j)

    for i, j in combinations(range(len(occurrences)), 2):
        if find(i) == find(j):
            continue
        if all(boxes[i][c].intersects(boxes[j][c]) for c in range(3)):
            if occurrences[i].point.same_point(occurrences[j].point):
                union(i, j)
    clusters: dict[int, list[_Occurrence]] = {}
    for i, occ in enumerate(occurrences):
        clusters.setdefault(find(i), []).append(occ)
    out = []
    for root in sorted(clusters):
        occs = clusters[root]
        incident = frozenset(idx for occ in occs for idx in occ.pair)
        ordinary = all(occ.mult == 1 for occ in occs)
        out.append(SingularPoint(location=occs[0].point,
                                 incident=incident,
                                 multiplicity=len(incident),
                                 ordinary=ordinary))
    return out


def check_ordinary(point: SingularPoint, arrangement: Arrangement) -> bool:
    """Decide ordinarity from tangent lines: pairwise non-proportional."""
    tangents = [tangent_line(arrangement.curves[i], point.location)
                for i in sorted(point.incident)]
    for u, v in combinations(tangents, 2):
        if _tangents_proportional(u, v):
            return False
    return True


@dataclass
class DerivedCombinatorics:
    """Output of the full engine run on one arrangement."""

    ct: CombinatorialType
    points: list[SingularPoint]
    all_ordinary: bool

    @property
    def outside_ordinary_hypotheses(self) -> bool:
        return not self.all_ordinary


def has_six_line_subarrangement(arrangement: Arrangement) -> bool:
    """Is there a 6-line subarrangement meeting only in double and triple
    points?  Decided exactly by finite search; line-line points are rational,
    so this never touches algebraic arithmetic."""
    lines = [c for c in arrangement.curves if c.kind == "line"]
    if len(lines) < 6:
        return False

    def meet(l1: PlaneCurve, l2: PlaneCurve):
        a1, b1, c1 = l1.form.line_coefficients()
        a2, b2, c2 = l2.form.line_coefficients()
        v = [b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2]
        pivot = next(i for i in (2, 1, 0) if v[i] != 0)
        return tuple(x / v[pivot] for x in v)

    for subset in combinations(range(len(lines)), 6):
        incidence: dict[tuple, set[int]] = {}
        for ia, ib in combinations(subset, 2):
            pt = meet(lines[ia], lines[ib])
            incidence.setdefault(pt, set()).update((ia, ib))
        if all(len(through) <= 3 for through in incidence.values()):
            return True
    return False


def combinatorial_type(arrangement: Arrangement) -> DerivedCombinatorics:
    """Intersect all curve pairs, cluster, and count r-fold points.

    Non-ordinary points are flagged, never rejected; the combinatorics are
    still returned so the invariant formulas can be evaluated (with a
    hypothesis warning downstream).
    """
    validate_arrangement(arrangement)
    pair_results: dict[tuple[int, int], PairResult] = {}
    n = len(arrangement.curves)
    for i, j in combinations(range(n), 2):
        pair_results[(i, j)] = intersect_pair(arrangement.curves[i],
                                              arrangement.curves[j])
    points = cluster_points(pair_results)
    t: dict[int, int] = {}
    for p in points:
        t[p.multiplicity] = t.get(p.multiplicity, 0) + 1
    ct = CombinatorialType(d=arrangement.d, k=arrangement.k, t=t)
    return DerivedCombinatorics(ct=ct, points=points,
                                all_ordinary=all(p.ordinary for p in points))
