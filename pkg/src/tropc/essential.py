"""Essential parts, full closures and the reduced polynomial semiring.

A term is essential when its lifted Newton point (exponent, projected
coefficient) is a vertex of the upper convex hull of all lifted points;
quasi-essential when it lies on the hull without being a vertex; and
inessential when it lies strictly below.  The essential part is a canonical
representative of functional equivalence, and the full closure adds every
hull lattice point as a ghost term.

Univariate hulls are computed by a direct sweep; higher arities go through
exact rational linear programming.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from typing import Dict, List, Optional, Tuple

from ._lp import lp_feasible, lp_max
from .core import TropicalNumber, ghost, tangible
from .errors import (ArityMismatch, ArityUnsupported, EmptyPolynomial,
                     MonomialInput, NotFull)
from .polynomial import Exponent, TropicalPolynomial, constant

ESSENTIAL = "essential"
QUASI = "quasi-essential"
INESSENTIAL = "inessential"


@dataclass
class EssentialComplex:
    arity: int
    lifted_points: Dict[Exponent, Fraction]
    classification: Dict[Exponent, str]
    hull_lattice_points: Dict[Exponent, Fraction]
    subdivision: Optional[List[List[Exponent]]]
    interior_vertices: List[Exponent]


def _canonical_key(f: TropicalPolynomial):
    return (f.arity, tuple(sorted(
        (e, c.tag, c.value) for e, c in f.terms.items())))


_COMPLEX_CACHE: Dict[tuple, EssentialComplex] = {}
_CACHE_LIMIT = 8192


# ---------------------------------------------------------------------------
# univariate hull sweep


def _upper_hull_vertices_1d(pts: List[Tuple[Fraction, Fraction]]
                            ) -> List[Tuple[Fraction, Fraction]]:
    """Vertices of the upper hull of (x, y) points sorted by x.

    Collinear intermediate points are dropped, so the result is exactly the
    vertex list.
    """
    hull: List[Tuple[Fraction, Fraction]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it makes a strict right turn
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _interp(hull: List[Tuple[Fraction, Fraction]], x: Fraction) -> Fraction:
    """Height of the upper hull over x (x within the hull's span)."""
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        if x1 <= x <= x2:
            if x1 == x2:
                return max(y1, y2)
            return y1 + (y2 - y1) * (x - x1) / (x2 - x1)
    return hull[0][1]  # single-point hull


def _complex_1d(f: TropicalPolynomial) -> EssentialComplex:
    pts = sorted((Fraction(e[0]), c.value) for e, c in f.terms.items())
    hull = _upper_hull_vertices_1d(pts)
    vertex_xs = {p[0] for p in hull}
    lifted = {e: c.value for e, c in f.terms.items()}
    classification = {}
    for e, c in f.terms.items():
        x = Fraction(e[0])
        if x in vertex_xs:
            classification[e] = ESSENTIAL
        elif c.value == _interp(hull, x):
            classification[e] = QUASI
        else:
            classification[e] = INESSENTIAL
    lo = int(min(p[0] for p in pts))
    hi = int(max(p[0] for p in pts))
    lattice = {(x,): _interp(hull, Fraction(x)) for x in range(lo, hi + 1)}
    cells: List[List[Exponent]] = []
    for (x1, _), (x2, _) in zip(hull, hull[1:]):
        cells.append([(x,) for x in range(int(x1), int(x2) + 1)
                      if (x,) in lifted and classification[(x,)] != INESSENTIAL])
    interior = [(int(p[0]),) for p in hull[1:-1]]
    return EssentialComplex(1, lifted, classification, lattice, cells, interior)


# ---------------------------------------------------------------------------
# multivariate hull via exact LP


def _hull_height_lp(exps: List[Exponent], heights: List[Fraction],
                    v: Exponent) -> Optional[Fraction]:
    n = len(v)
    A = [[Fraction(1)] * len(exps)]
    b = [Fraction(1)]
    for k in range(n):
        A.append([Fraction(e[k]) for e in exps])
        b.append(Fraction(v[k]))
    return lp_max(A, b, heights)


def _is_quasi_lp(exps, heights, j) -> bool:
    """Can the lifted point j be weakly dominated by the others?"""
    others = [i for i in range(len(exps)) if i != j]
    n = len(exps[j])
    cols = len(others) + 1  # convex weights plus a slack
    A = [[Fraction(1)] * (cols - 1) + [Fraction(0)]]
    b = [Fraction(1)]
    for k in range(n):
        A.append([Fraction(exps[i][k]) for i in others] + [Fraction(0)])
        b.append(Fraction(exps[j][k]))
    A.append([heights[i] for i in others] + [Fraction(-1)])
    b.append(heights[j])
    return lp_feasible(A, b)


def _complex_nd(f: TropicalPolynomial) -> EssentialComplex:
    exps = sorted(f.terms)
    heights = [f.terms[e].value for e in exps]
    lifted = dict(zip(exps, heights))
    classification = {}
    for j, e in enumerate(exps):
        h = _hull_height_lp(exps, heights, e)
        if h > heights[j]:
            classification[e] = INESSENTIAL
        elif _is_quasi_lp(exps, heights, j):
            classification[e] = QUASI
        else:
            classification[e] = ESSENTIAL
    lo = f.lower_degree()
    hi = f.total_degree()
    box = [range(min(e[k] for e in exps), max(e[k] for e in exps) + 1)
           for k in range(f.arity)]
    lattice = {}
    for v in iter_product(*box):
        if not lo <= sum(v) <= hi:
            continue
        h = _hull_height_lp(exps, heights, v)
        if h is not None:
            lattice[v] = h
    interior = [e for e, cls in classification.items()
                if cls == ESSENTIAL and not _newton_vertex(exps, e)]
    return EssentialComplex(f.arity, lifted, classification, lattice,
                            None, interior)


def _newton_vertex(exps: List[Exponent], e: Exponent) -> bool:
    """Is e a vertex of the Newton polytope (convex hull of all exponents)?"""
    others = [x for x in exps if x != e]
    if not others:
        return True
    n = len(e)
    A = [[Fraction(1)] * len(others)]
    b = [Fraction(1)]
    for k in range(n):
        A.append([Fraction(x[k]) for x in others])
        b.append(Fraction(e[k]))
    return not lp_feasible(A, b)


def _subdivision_2d(exps: List[Exponent], heights: List[Fraction]
                    ) -> List[List[Exponent]]:
    """Top-dimensional cells of the subdivision dual to the upper hull."""
    m = len(exps)
    if m < 2:
        return [list(exps)]

    def cross(p, q, r):
        return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])

    collinear = all(cross(exps[0], exps[1], exps[k]) == 0 for k in range(2, m))
    if m == 2 or collinear:
        # support lies on a line: parametrize and reuse the 1d sweep
        dx = [e - b for e, b in zip(max(exps), min(exps))]
        from math import gcd
        g = gcd(abs(dx[0]), abs(dx[1])) or 1
        d = (dx[0] // g, dx[1] // g)
        base = min(exps)

        def param(e):
            return (e[0] - base[0]) * d[0] + (e[1] - base[1]) * d[1]

        pts = sorted((Fraction(param(e)), h) for e, h in zip(exps, heights))
        hull = _upper_hull_vertices_1d(pts)
        cells = []
        by_param = {param(e): e for e in exps}
        for (x1, _), (x2, _) in zip(hull, hull[1:]):
            cell = [by_param[t] for t in sorted(by_param)
                    if x1 <= t <= x2 and Fraction(heights[exps.index(by_param[t])])
                    == _interp(hull, Fraction(t))]
            cells.append(cell)
        return cells if cells else [list(exps)]

    found = {}
    for a in range(m):
        for b_ in range(a + 1, m):
            for c_ in range(b_ + 1, m):
                p, q, r = exps[a], exps[b_], exps[c_]
                det = cross(p, q, r)
                if det == 0:
                    continue
                # plane z = c1 x + c2 y + d through the three lifted points
                hp, hq, hr = heights[a], heights[b_], heights[c_]
                c1 = ((hq - hp) * (r[1] - p[1]) - (hr - hp) * (q[1] - p[1]))
                c1 = Fraction(c1, det)
                c2 = ((hr - hp) * (q[0] - p[0]) - (hq - hp) * (r[0] - p[0]))
                c2 = Fraction(c2, det)
                d = hp - c1 * p[0] - c2 * p[1]
                ok = True
                eq = []
                for k in range(m):
                    val = c1 * exps[k][0] + c2 * exps[k][1] + d
                    if val < heights[k]:
                        ok = False
                        break
                    if val == heights[k]:
                        eq.append(exps[k])
                if ok:
                    key = frozenset(eq)
                    found[key] = sorted(eq)
    maximal = [cell for key, cell in found.items()
               if not any(key < other for other in found)]
    maximal.sort()
    return maximal


# ---------------------------------------------------------------------------
# public interface


def classify_monomials(f: TropicalPolynomial,
                       with_subdivision: bool = False) -> EssentialComplex:
    if f.is_empty():
        raise EmptyPolynomial("no monomials to classify")
    key = _canonical_key(f)
    cx = _COMPLEX_CACHE.get(key)
    if cx is None:
        cx = _complex_1d(f) if f.arity == 1 else _complex_nd(f)
        if len(_COMPLEX_CACHE) >= _CACHE_LIMIT:
            _COMPLEX_CACHE.clear()
        _COMPLEX_CACHE[key] = cx
    # the planar subdivision is cubic in the number of terms, so it is
    # only computed on request and then kept on the cached complex
    if with_subdivision and f.arity == 2 and cx.subdivision is None:
        exps = sorted(f.terms)
        heights = [f.terms[e].value for e in exps]
        cx.subdivision = _subdivision_2d(exps, heights)
    return cx


def essential_part(f: TropicalPolynomial) -> TropicalPolynomial:
    if f.is_empty():
        return f
    cx = classify_monomials(f)
    return TropicalPolynomial(
        f.arity, {e: c for e, c in f.terms.items()
                  if cx.classification[e] == ESSENTIAL})


def full_closure(f: TropicalPolynomial) -> TropicalPolynomial:
    """Essential part plus a ghost term at every other hull lattice point."""
    if f.is_empty():
        return f
    cx = classify_monomials(f)
    terms = {e: c for e, c in f.terms.items()
             if cx.classification[e] == ESSENTIAL}
    for v, h in cx.hull_lattice_points.items():
        if v not in terms:
            terms[v] = ghost(h)
    return TropicalPolynomial(f.arity, terms)


def is_full(f: TropicalPolynomial) -> bool:
    return not f.is_empty() and full_closure(f) == f


def equivalent(f: TropicalPolynomial, g: TropicalPolynomial) -> bool:
    """Functional equality, decided through essential parts."""
    if f.arity != g.arity:
        raise ArityMismatch(f"arity {f.arity} vs {g.arity}")
    if f.is_empty() or g.is_empty():
        return f.is_empty() and g.is_empty()
    return essential_part(f) == essential_part(g)


def red_add(f: TropicalPolynomial, g: TropicalPolynomial) -> TropicalPolynomial:
    return full_closure(f + g)


def red_mul(f: TropicalPolynomial, g: TropicalPolynomial) -> TropicalPolynomial:
    return full_closure(f * g)


def red_pow(f: TropicalPolynomial, k: int) -> TropicalPolynomial:
    if k < 0:
        raise ValueError("negative power")
    if k == 0:
        return constant(tangible(0), f.arity)
    result = None
    base = full_closure(f)
    while k:
        if k & 1:
            result = base if result is None else red_mul(result, base)
        k >>= 1
        if k:
            base = red_mul(base, base)
    return result


# ---------------------------------------------------------------------------
# slope sequences


@dataclass
class SlopeSequence:
    slopes: List[Fraction]
    edges: List[Tuple[Tuple[int, Fraction], Tuple[int, Fraction]]]


def slope_sequence(f: TropicalPolynomial) -> SlopeSequence:
    """Consecutive hull height differences of a full univariate polynomial,
    read from the top degree down.  The sequence is weakly descending.
    """
    if f.arity != 1:
        raise ArityUnsupported("slope sequences are univariate")
    if f.is_empty():
        raise EmptyPolynomial("no slopes for the empty polynomial")
    f = full_closure(f)
    lo, hi = f.degree_bounds()
    if lo == hi:
        raise MonomialInput("a single monomial has no slopes")
    heights = {e[0]: c.value for e, c in f.terms.items()}
    slopes = []
    edges = []
    for i in range(hi, lo, -1):
        slopes.append(heights[i - 1] - heights[i])
        edges.append(((i, heights[i]), (i - 1, heights[i - 1])))
    assert all(a >= b for a, b in zip(slopes, slopes[1:]))
    return SlopeSequence(slopes, edges)


def divides(f: TropicalPolynomial, g: TropicalPolynomial
            ) -> Optional[TropicalPolynomial]:
    """Quotient q with red_mul(q, g) equal to the full closure of f, if any.

    Decided by comparing canonical factorizations, so univariate only.
    """
    from .univariate import factor_full  # local import to avoid a cycle
    if f.arity != 1 or g.arity != 1:
        raise ArityUnsupported("divisibility testing is univariate")
    if f.is_empty() or g.is_empty():
        raise EmptyPolynomial("divisibility with an empty polynomial")
    ff = factor_full(f)
    fg = factor_full(g)
    remaining: List[Tuple[TropicalPolynomial, int]] = \
        [(p, m) for p, m in ff.factors]
    for p, mult in fg.factors:
        for idx, (q, have) in enumerate(remaining):
            if q == p:
                if have < mult:
                    return None
                remaining[idx] = (q, have - mult)
                break
        else:
            return None
    if fg.unit.is_neg_inf():
        return None
    quotient = constant(ff.unit * fg.unit.inv(), 1)
    for p, m in remaining:
        for _ in range(m):
            quotient = quotient * p
    quotient = full_closure(quotient)
    if red_mul(quotient, full_closure(g)) != full_closure(f):
        return None
    return quotient
