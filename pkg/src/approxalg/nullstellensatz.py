"""Varieties, vanishing ideals, and the radical equality over function rings.

Everything runs on the finite rings of F_p-valued functions on F_p^n, where
varieties are enumerable by brute force: the evaluation-separation property
(vanishing on V(I) implies membership in the approximate radical) and the
pointwise primeness of the point ideals are machine-checked, and the
radical identity rad(I) = I(V(I)) is then verified ideal by ideal.
"""

from __future__ import annotations

import itertools
import random

from . import polynomials as poly
from .closures import closure_member, materialize
from .errors import PreconditionError, ResourceLimitError
from .ideals import is_approx_prime
from .reports import Verdict
from .rings import (
    FiniteSubgroup,
    FunctionRing,
    IdealRep,
    classical_ideals,
    ideal_generated,
    is_additive_subgroup,
    sort_key,
)

POINT_GUARD = 4096


class Variety:
    """V(I): the common zero set, computed two ways that must agree."""

    def __init__(self, ring, ideal):
        if ring.npoints > POINT_GUARD:
            raise ResourceLimitError(
                f"{ring.npoints} points exceed the guard {POINT_GUARD}")
        self.ring = ring
        self.ideal = ideal
        by_generators = self._zeros(ideal.generators)
        by_members = self._zeros(ideal.canonical.values)
        if by_generators != by_members:
            raise AssertionError(
                "generator zeros disagree with member zeros; the ideal "
                "representation is inconsistent")
        self.points = by_generators

    def _zeros(self, functions):
        ring = self.ring
        idxs = [i for i in range(ring.npoints)
                if all(f[i] == 0 for f in functions)]
        return frozenset(ring.points[i] for i in idxs)

    def sorted_points(self):
        return sorted(self.points)

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"V = {self.sorted_points()}"


def variety(ring, ideal):
    """The variety of an ideal over a function ring."""
    if not isinstance(ring, FunctionRing):
        raise PreconditionError("varieties need a function ring")
    return Variety(ring, ideal)


def vanishing_ideal(ring, points):
    """I(W): every function vanishing on the given point set."""
    if not isinstance(ring, FunctionRing):
        raise PreconditionError("vanishing ideals need a function ring")
    pts = {tuple(p) for p in points}
    idx = [i for i, a in enumerate(ring.points) if a in pts]
    members = set()
    free = [i for i in range(ring.npoints) if i not in idx]
    for assign in itertools.product(range(ring.p), repeat=len(free)):
        tab = [0] * ring.npoints
        for pos, val in zip(free, assign):
            tab[pos] = val
        members.add(tuple(tab))
    gens = sorted(members, key=sort_key)
    out = IdealRep(ring, tuple(gens),
                   FiniteSubgroup(ring, members, check=False))
    regen = ideal_generated(ring, gens)
    if frozenset(regen.canonical.values) != members:
        raise AssertionError("vanishing set is not an ideal")
    return out


def maximal_point_ideal(ring, a):
    """The point ideal generated by x_i - a_i, canonicalized."""
    a = tuple(a)
    gens = []
    for i in range(ring.nvars):
        xi = ring.variable(i)
        const = ring.constant(a[i])
        gens.append(ring.sub(xi, const))
    return ideal_generated(ring, gens)


def _power_hits_closure(ring, g, member_fn):
    """Some positive power of g satisfies the membership predicate; the
    power orbit is walked to its cycle, so the exponent bound is certified
    per element rather than assumed."""
    seen = []
    x = g
    while x not in seen:
        seen.append(x)
        if member_fn(x):
            return True
        x = ring.mul(x, g)
    return False


def rad_phi(ring, ideal, cl):
    """rad(I) = {g : some power of g lies in cl(I)}, as an ideal."""
    gens = list(ideal.canonical.values)

    def member_fn(x):
        return closure_member(cl, x, gens)

    members = {g for g in ring.elements()
               if _power_hits_closure(ring, g, member_fn)}
    if not is_additive_subgroup(ring, members):
        raise AssertionError("radical is not a subgroup for this closure")
    return IdealRep(ring, tuple(sorted(members, key=sort_key)),
                    FiniteSubgroup(ring, members, check=False))


def all_function_ring_ideals(ring):
    """Every classical ideal of the function ring (complete enumeration)."""
    return classical_ideals(ring)


def check_esep(cl, ideals):
    """Evaluation separation: f vanishing on V(I) lies in rad(I)."""
    ring = cl.ring
    ce = None
    for ideal in ideals:
        v = variety(ring, ideal)
        rad = rad_phi(ring, ideal, cl)
        vanishing = vanishing_ideal(ring, v.points)
        missing = frozenset(vanishing.canonical.values) - \
            frozenset(rad.canonical.values)
        if missing:
            ce = {"ideal": [ring.format_element(g) for g in ideal.generators],
                  "f": ring.format_element(sorted(missing, key=sort_key)[0])}
            break
    return Verdict("evaluation-separation", ce is None, ce,
                   mode=f"{len(ideals)} ideals")


def check_pp(cl):
    """Every point ideal is closed under cl and approximately prime."""
    ring = cl.ring
    ce = None
    for a in ring.points:
        m_a = maximal_point_ideal(ring, a)
        base = frozenset(m_a.canonical.values)
        clset = materialize(cl, base)
        if clset != base:
            ce = {"point": a, "issue": "not-closed"}
            break
        sub = FiniteSubgroup(ring, base, check=False)
        prime, pce = is_approx_prime(sub, cl, check_ideal=False)
        if not prime:
            ce = {"point": a, "issue": "not-prime", "witness": pce}
            break
    return Verdict("point-ideals-prime-and-closed", ce is None, ce,
                   mode=f"{len(ring.points)} points")


def check_ans(cl, ideals):
    """rad(I) = I(V(I)) for each ideal, after the two hypotheses hold."""
    esep = check_esep(cl, ideals)
    pp = check_pp(cl)
    if not (esep.passed and pp.passed):
        raise PreconditionError(
            "hypothesis not established: "
            f"ESEP={esep.passed}, PP={pp.passed}")
    ring = cl.ring
    ce = None
    for ideal in ideals:
        v = variety(ring, ideal)
        lhs = frozenset(rad_phi(ring, ideal, cl).canonical.values)
        rhs = frozenset(vanishing_ideal(ring, v.points).canonical.values)
        if lhs != rhs:
            ce = {"ideal": [ring.format_element(g) for g in ideal.generators],
                  "radical-size": len(lhs), "vanishing-size": len(rhs)}
            break
    return Verdict("radical-equals-vanishing-ideal", ce is None, ce,
                   mode=f"{len(ideals)} ideals")


# ---------------------------------------------------------------------------
# the balanced multiplicativity of tolerance closures


def check_tolerance_balanced(tol, cases):
    """r * cl_tau(I) lands in cl_{|r| tau}(r I) for every configured case.

    Each case is (gens, f, r) of integer polynomials with f already a
    member of cl_tau(<gens>); the scaled closure takes the pointwise
    tolerance |r(a)| * tau(a).
    """
    ce = None
    checked = 0
    for gens, f, r in cases:
        if not tol.member(f, gens):
            continue
        checked += 1
        scaled = tol.scaled(r)
        rf = poly.m_mul(r, f)
        rgens = [poly.m_mul(r, g) for g in gens]
        if not scaled.member(rf, rgens):
            ce = {"f": f, "r": r}
            break
    return Verdict("tolerance-balanced-rule", ce is None, ce,
                   mode=f"{checked} member cases"), checked


def search_esep_without_pp(ring, closures=None):
    """Hunt for a closure where separation holds but the radical identity
    fails for lack of pointwise primeness.

    Returns the findings: closures satisfying ESEP whose radical strictly
    exceeds the vanishing ideal on some ideal.  No specific counterexample
    is asserted beforehand; whatever the search turns up is reported.
    """
    from .closures import SetShiftClosure as RingSetShift
    if closures is None:
        point_ideal = vanishing_ideal(ring, [ring.points[0]])
        closures = [
            RingSetShift(ring, ideal_generated(ring, [ring.one])),
            RingSetShift(ring, ideal_generated(ring,
                                               list(point_ideal.generators))),
        ]
    ideals = all_function_ring_ideals(ring)
    findings = []
    for cl in closures:
        if check_pp(cl).passed:
            continue
        if not check_esep(cl, ideals).passed:
            continue
        for ideal in ideals:
            v = variety(ring, ideal)
            lhs = frozenset(rad_phi(ring, ideal, cl).canonical.values)
            rhs = frozenset(vanishing_ideal(ring, v.points).canonical.values)
            if not lhs <= rhs:
                findings.append({
                    "closure": cl.describe(),
                    "ideal": [ring.format_element(g)
                              for g in ideal.generators],
                    "radical-size": len(lhs),
                    "vanishing-size": len(rhs)})
                break
    return findings


def tolerance_case_grid(nvars=1, seed=11, count=160):
    """A deterministic grid of (gens, f, r) integer-polynomial cases."""
    rng = random.Random(seed)
    cases = []

    def rand_poly():
        out = {}
        for _ in range(rng.randint(1, 3)):
            exp = tuple(rng.randint(0, 2) for _ in range(nvars))
            coef = rng.randint(-3, 3)
            if coef:
                out[exp] = out.get(exp, 0) + coef
        return {e: c for e, c in out.items() if c}

    for _ in range(count):
        gens = [rand_poly() for _ in range(rng.randint(1, 2))]
        f = rand_poly()
        r = rand_poly()
        cases.append((gens, f, r))
    return cases