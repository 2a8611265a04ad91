"""Finitely generated tropical ideals and Nullstellensatz procedures.

Generators are stored fully closed.  The weak procedure either produces a
common root of the generators or points at a tangible constant generator as
a proof of emptiness.  The univariate radical membership procedure decides
containment of complement components and, on success, returns an exponent m
with monomial combiners h_j such that f^m agrees with the combination
sum h_j g_j as a function.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product
from typing import List, Optional, Sequence, Tuple

from .core import NEG_INFINITY, TropicalNumber, tangible
from .errors import (ArityMismatch, ArityUnsupported,
                     CertificateSearchExceeded, EmptyPolynomial,
                     NotTangibleFull)
from .essential import (equivalent, essential_part, full_closure, red_add,
                        red_mul, red_pow)
from .polynomial import TropicalPolynomial, constant, monomial
from .sets import _components_with_monomials, comset1d
from .univariate import common_root

MAX_CERTIFICATE_EXPONENT = 64


@dataclass
class IdealFG:
    arity: int
    generators: List[TropicalPolynomial] = field(default_factory=list)

    def __post_init__(self):
        closed: List[TropicalPolynomial] = []
        for g in self.generators:
            if g.arity != self.arity:
                raise ArityMismatch(
                    f"generator arity {g.arity} in arity-{self.arity} ideal")
            if g.is_empty():
                continue
            g = full_closure(g)
            if g not in closed:
                closed.append(g)
        self.generators = closed


def is_proper(ideal: IdealFG) -> bool:
    """False exactly when a generator is a tangible constant (a unit)."""
    return _unit_generator(ideal) is None


def _unit_generator(ideal: IdealFG) -> Optional[TropicalPolynomial]:
    for g in ideal.generators:
        if g.is_constant() and g.constant_value().is_tangible():
            return g
    return None


@dataclass
class NssResult:
    witness: Optional[Tuple[TropicalNumber, ...]]
    proof_of_emptiness: Optional[TropicalPolynomial]

    @property
    def nonempty(self) -> bool:
        return self.witness is not None


def weak_nullstellensatz(ideal: IdealFG) -> NssResult:
    """Either a common root of the generators or a unit generator."""
    unit = _unit_generator(ideal)
    if unit is not None:
        return NssResult(None, unit)
    if not ideal.generators:
        return NssResult((tangible(0),) * ideal.arity, None)
    return NssResult(common_root(ideal.generators), None)


def is_ghost_potent(f: TropicalPolynomial) -> bool:
    """Does some power of f become a ghost polynomial?

    Holds exactly when the essential part is entirely ghost.
    """
    if f.is_empty():
        return True
    return essential_part(f).is_ghost_poly()


@dataclass
class RadicalCertificate:
    m: int
    combiners: List[Tuple[TropicalPolynomial, TropicalPolynomial]]

    def combination(self) -> TropicalPolynomial:
        acc = None
        for h, g in self.combiners:
            term = red_mul(h, g)
            acc = term if acc is None else red_add(acc, term)
        return acc


def radical_member_1d(f: TropicalPolynomial, ideal: IdealFG
                      ) -> Optional[RadicalCertificate]:
    """Decide whether f lies in the radical of a univariate ideal.

    Containment of every complement component of f in a component of some
    generator is necessary and sufficient; the certificate is built from
    one monomial per component and the exponent is scanned upward until the
    combination reproduces f^m exactly.
    """
    if f.arity != 1 or ideal.arity != 1:
        raise ArityUnsupported("radical membership is univariate")
    if f.is_empty():
        raise EmptyPolynomial("empty polynomial as radical candidate")
    f = full_closure(f)
    if not essential_part(f).is_tangible_poly():
        raise NotTangibleFull("radical candidates must be tangible-full")

    f_comps = _components_with_monomials(f)
    gen_comps = [_components_with_monomials(g) for g in ideal.generators]

    # assign every component of f to a containing generator component
    assignment: List[Tuple[int, int, int]] = []  # (gen index, f exp, g exp)
    for comp, i in f_comps:
        choice = None
        for gi, comps in enumerate(gen_comps):
            for gcomp, r in comps:
                if comp.subset_of(gcomp) and not (i == 0 and r > 0):
                    choice = (gi, i, r)
                    break
            if choice:
                break
        if choice is None:
            return None
        assignment.append(choice)
    if not assignment:
        # f vanishes everywhere; membership needs no combiners beyond m
        return None

    m_lower = 1
    for _, i, r in assignment:
        if i > 0:
            m_lower = max(m_lower, -(-r // i))
    f_coeffs = {e[0]: c for e, c in f.terms.items()}

    for m in range(m_lower, MAX_CERTIFICATE_EXPONENT + 1):
        if any(m * i - r < 0 for _, i, r in assignment):
            continue
        combiners: dict = {}
        ok = True
        for gi, i, r in assignment:
            g = ideal.generators[gi]
            beta = g.terms[(r,)]
            if not beta.is_tangible():
                ok = False
                break
            coeff = (f_coeffs[i] ** m) * beta.inv()
            exp = (m * i - r,)
            bucket = combiners.setdefault(gi, {})
            # union of monomial requirements: keep the larger coefficient,
            # identical contributions collapse without ghosting
            if exp not in bucket or bucket[exp] < coeff:
                bucket[exp] = coeff
        if not ok:
            continue
        cert = RadicalCertificate(
            m, [(full_closure(TropicalPolynomial(1, bucket)),
                 ideal.generators[gi])
                for gi, bucket in sorted(combiners.items())])
        if equivalent(red_pow(f, m), cert.combination()):
            return cert
    raise CertificateSearchExceeded(
        f"no certificate up to exponent {MAX_CERTIFICATE_EXPONENT}")


def verify_radical_certificate(f: TropicalPolynomial,
                               cert: RadicalCertificate,
                               points: Sequence[Sequence[TropicalNumber]]
                               ) -> bool:
    """Check f^m against the combination by evaluation at sample points."""
    power = red_pow(full_closure(f), cert.m)
    combo = cert.combination()
    return all(power.evaluate(p) == combo.evaluate(p) for p in points)


def ideal_member_syntactic(f: TropicalPolynomial, ideal: IdealFG) -> bool:
    """Heuristic semidecision of ideal membership.

    Builds candidate combiners by max-plus residuation of f by each
    generator and accepts only when the combination reproduces f as a
    function.  A False answer is not a proof of non-membership.
    """
    if f.arity != ideal.arity:
        raise ArityMismatch("arity of member candidate differs")
    if f.is_empty():
        return True
    if not ideal.generators:
        return False
    f_closed = full_closure(f)
    for g in ideal.generators:
        if equivalent(f_closed, g):
            return True
    combo = None
    for g in ideal.generators:
        h = _residuation(f_closed, g)
        if h is None:
            continue
        part = h * g
        combo = part if combo is None else combo + part
    if combo is None or combo.is_empty():
        return False
    return equivalent(combo, f_closed)


def _residuation(f: TropicalPolynomial, g: TropicalPolynomial
                 ) -> Optional[TropicalPolynomial]:
    """Largest tangible h with the projection of h*g below that of f."""
    if f.is_empty() or g.is_empty():
        return None
    fdeg = [max(e[k] for e in f.terms) for k in range(f.arity)]
    gdeg = [max(e[k] for e in g.terms) for k in range(g.arity)]
    box = [range(0, fd - gd + 1) for fd, gd in zip(fdeg, gdeg)]
    if any(fd < gd for fd, gd in zip(fdeg, gdeg)):
        return None
    terms = {}
    for e in iter_product(*box):
        best: Optional[Fraction] = None
        ok = True
        for d, cg in g.terms.items():
            target = tuple(a + b for a, b in zip(e, d))
            cf = f.terms.get(target, NEG_INFINITY)
            if cf.is_neg_inf():
                ok = False
                break
            slack = cf.value - cg.value
            if best is None or slack < best:
                best = slack
        if ok and best is not None:
            terms[e] = tangible(best)
    if not terms:
        return None
    return TropicalPolynomial(f.arity, terms)
