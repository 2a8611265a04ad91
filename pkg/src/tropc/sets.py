"""Tropical algebraic sets, their complements, and plane corner loci.

The complement of a univariate zero set decomposes into finitely many
connected components: open intervals on the tangible axis, at most one ray
on the ghost axis, and possibly the bottom element.  The ghost ray and the
bottom element only occur when the constant coefficient is tangible, in
which case they merge with the leftmost tangible interval into a single
component.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .core import TropicalNumber
from .errors import ArityUnsupported
from .polynomial import TropicalPolynomial

# An open interval with exact rational endpoints; None means unbounded.
Interval = Optional[Tuple[Optional[Fraction], Optional[Fraction]]]


def _intersect(a: Interval, b: Interval) -> Interval:
    if a is None or b is None:
        return None
    lo = a[0] if b[0] is None else (b[0] if a[0] is None else max(a[0], b[0]))
    hi = a[1] if b[1] is None else (b[1] if a[1] is None else min(a[1], b[1]))
    if lo is not None and hi is not None and lo >= hi:
        return None
    return (lo, hi)


def _subset(a: Interval, b: Interval) -> bool:
    if a is None:
        return True
    if b is None:
        return False
    lo_ok = b[0] is None or (a[0] is not None and b[0] <= a[0])
    hi_ok = b[1] is None or (a[1] is not None and a[1] <= b[1])
    return lo_ok and hi_ok


@dataclass(frozen=True)
class Component1D:
    """One connected component of the complement of a univariate zero set."""
    tangible: Interval = None
    ghost: Interval = None
    neg_inf: bool = False

    def is_empty(self) -> bool:
        return self.tangible is None and self.ghost is None and not self.neg_inf

    def contains(self, p: TropicalNumber) -> bool:
        if p.is_neg_inf():
            return self.neg_inf
        iv = self.tangible if p.is_tangible() else self.ghost
        if iv is None:
            return False
        lo, hi = iv
        return (lo is None or lo < p.value) and (hi is None or p.value < hi)

    def subset_of(self, other: "Component1D") -> bool:
        return (_subset(self.tangible, other.tangible)
                and _subset(self.ghost, other.ghost)
                and (not self.neg_inf or other.neg_inf))


def _component_sort_key(c: Component1D):
    if c.neg_inf:
        return (0, Fraction(0))
    if c.tangible is not None:
        lo = c.tangible[0]
        return (1, lo) if lo is not None else (0, Fraction(0))
    lo = c.ghost[0] if c.ghost else None
    return (1, lo) if lo is not None else (0, Fraction(0))


def _envelope_vertices(f: TropicalPolynomial) -> List[int]:
    """Exponents whose lines appear on the upper envelope, ascending."""
    from .essential import _upper_hull_vertices_1d
    pts = sorted((Fraction(e[0]), c.value) for e, c in f.terms.items())
    return [int(p[0]) for p in _upper_hull_vertices_1d(pts)]


def _components_with_monomials(f: TropicalPolynomial
                               ) -> List[Tuple[Component1D, int]]:
    """Complement components together with the dominating exponent on each."""
    if f.arity != 1:
        raise ArityUnsupported("com-sets are univariate")
    if f.is_empty() or f.is_ghost_poly():
        return []
    coeffs = {e[0]: c for e, c in f.terms.items()}
    if f.is_constant():
        c = coeffs[0]
        if c.is_tangible():
            return [(Component1D((None, None), (None, None), True), 0)]
        return []
    if len(coeffs) == 1:
        (e, c), = coeffs.items()
        if c.is_tangible():
            return [(Component1D((None, None), None, False), e)]
        return []

    verts = _envelope_vertices(f)
    heights = {e: c.value for e, c in coeffs.items()}
    breakpoints = [
        (heights[e1] - heights[e2]) / Fraction(e2 - e1)
        for e1, e2 in zip(verts, verts[1:])]
    bounds = [None] + breakpoints + [None]
    out: List[Tuple[Component1D, int]] = []
    const = coeffs.get(0)
    const_tangible = const is not None and const.is_tangible()
    for k, e in enumerate(verts):
        if not coeffs[e].is_tangible():
            continue
        iv = (bounds[k], bounds[k + 1])
        if k == 0 and const_tangible:
            # the constant dominates as x -> -inf; the leftmost tangible
            # interval, the ghost ray and -inf form one merged component
            s = min((const.value - heights[i]) / Fraction(i)
                    for i in coeffs if i > 0)
            out.append((Component1D(iv, (None, s), True), e))
        else:
            out.append((Component1D(iv, None, False), e))
    out.sort(key=lambda t: _component_sort_key(t[0]))
    return out


def comset1d(f: TropicalPolynomial) -> List[Component1D]:
    """Connected components of the complement of the zero set."""
    return [c for c, _ in _components_with_monomials(f)]


def comset_meet(a: Sequence[Component1D], b: Sequence[Component1D]
                ) -> List[Component1D]:
    """Pairwise nonempty intersections of components."""
    out = []
    for x in a:
        for y in b:
            z = Component1D(_intersect(x.tangible, y.tangible),
                            _intersect(x.ghost, y.ghost),
                            x.neg_inf and y.neg_inf)
            if not z.is_empty():
                out.append(z)
    out.sort(key=_component_sort_key)
    return out


def comset_leq(a: Sequence[Component1D], b: Sequence[Component1D]) -> bool:
    """Is every component of a contained in some component of b?"""
    return all(any(x.subset_of(y) for y in b) for x in a)


def zset_contains(fs: Sequence[TropicalPolynomial],
                  point: Sequence[TropicalNumber]) -> bool:
    """Is the point a simultaneous root of all the polynomials?"""
    return all(f.is_root(point) for f in fs)


# ---------------------------------------------------------------------------
# plane corner locus


@dataclass
class CornerLocus2D:
    whole_plane: bool
    segments: List[dict]
    rays: List[dict]


def corner_locus_2d(f: TropicalPolynomial,
                    bbox: Tuple[Fraction, Fraction, Fraction, Fraction]
                    ) -> CornerLocus2D:
    """Tie loci of the projected affine forms in the plane, clipped to bbox.

    Each locus is the set where two monomials attain the maximum together;
    output segments carry exact rational endpoints and the pair of tying
    monomial indices.  A polynomial vanishing identically on the plane
    (all coefficients ghost, or no terms) sets whole_plane instead.
    """
    if f.arity != 2:
        raise ArityUnsupported("corner loci are planar")
    if f.is_empty() or f.is_ghost_poly():
        return CornerLocus2D(True, [], [])
    xmin, ymin, xmax, ymax = (Fraction(v) for v in bbox)
    terms = f.sorted_terms()
    exps = [e for e, _ in terms]
    heights = [c.value for _, c in terms]
    m = len(terms)
    segments: List[dict] = []
    rays: List[dict] = []
    for i in range(m):
        for j in range(i + 1, m):
            n = (exps[i][0] - exps[j][0], exps[i][1] - exps[j][1])
            delta = heights[j] - heights[i]
            if n == (0, 0):
                continue
            if n[0]:
                p0 = (delta / Fraction(n[0]), Fraction(0))
            else:
                p0 = (Fraction(0), delta / Fraction(n[1]))
            d = (Fraction(-n[1]), Fraction(n[0]))
            tlo: Optional[Fraction] = None
            thi: Optional[Fraction] = None
            feasible = True
            for k in range(m):
                if k in (i, j):
                    continue
                nk = (exps[i][0] - exps[k][0], exps[i][1] - exps[k][1])
                rhs = (heights[k] - heights[i]
                       - nk[0] * p0[0] - nk[1] * p0[1])
                dot = nk[0] * d[0] + nk[1] * d[1]
                if dot == 0:
                    if rhs > 0:
                        feasible = False
                        break
                elif dot > 0:
                    t = rhs / dot
                    if tlo is None or t > tlo:
                        tlo = t
                else:
                    t = rhs / dot
                    if thi is None or t < thi:
                        thi = t
            if not feasible:
                continue
            if tlo is not None and thi is not None and tlo >= thi:
                continue
            unbounded_lo = tlo is None
            unbounded_hi = thi is None
            # clip to the bounding box
            ctlo, cthi = tlo, thi
            empty = False
            for (nb, rhs_b) in (((1, 0), xmin), ((-1, 0), -xmax),
                                ((0, 1), ymin), ((0, -1), -ymax)):
                rhs = rhs_b - nb[0] * p0[0] - nb[1] * p0[1]
                dot = nb[0] * d[0] + nb[1] * d[1]
                if dot == 0:
                    if rhs > 0:
                        empty = True
                        break
                elif dot > 0:
                    t = rhs / dot
                    if ctlo is None or t > ctlo:
                        ctlo = t
                else:
                    t = rhs / dot
                    if cthi is None or t < cthi:
                        cthi = t
            if empty or ctlo is None or cthi is None or ctlo > cthi:
                continue

            def at(t):
                return (p0[0] + t * d[0], p0[1] + t * d[1])

            # visible extent goes to segments; unbounded continuations are
            # recorded as rays anchored at the clip points
            entry = {"indices": [list(exps[i]), list(exps[j])]}
            if ctlo < cthi:
                segments.append({**entry, "from": at(ctlo), "to": at(cthi)})
            if unbounded_lo:
                rays.append({**entry, "from": at(ctlo), "dir": (-d[0], -d[1])})
            if unbounded_hi:
                rays.append({**entry, "from": at(cthi), "dir": d})
    return CornerLocus2D(False, segments, rays)
