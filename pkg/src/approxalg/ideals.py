"""Approximate ideals and primes, quotient rings, and hom transfer.

An approximate ideal is an additive subgroup whose products with ring
elements land in its closure (absorption into cl(I), not into I itself).
Primality likewise tests products against the closure: xy in cl(P) forces
x in P or y in P.  On finite rings everything is decided exhaustively; on
the integers the modular closures admit closed forms which are cross-checked
by bounded brute force.
"""

from __future__ import annotations

import math

import numpy as np

from .closures import (
    GeneratedIdealClosure,
    IdealShiftClosure,
    SetShiftClosure,
    closure_eval,
    closure_image_compatible,
    closure_preimage_compatible,
    materialize,
)
from .errors import DomainMismatchError, PreconditionError
from .reports import Verdict
from .rings import (
    FiniteSubgroup,
    IntegerRing,
    PrincipalSubgroup,
    ResidueRing,
    TableRing,
    ideal_generated,
    is_additive_subgroup,
    sort_key,
    subgroup_generated,
)


def _is_z(ring):
    return isinstance(ring, IntegerRing)


def _z_shift_modulus(cl):
    """The shift modulus of a closure over Z (0 for the plain ideal span)."""
    if isinstance(cl, GeneratedIdealClosure):
        return 0
    if isinstance(cl, (IdealShiftClosure, SetShiftClosure)):
        return cl.shift_ideal.canonical.d
    raise PreconditionError(f"{cl.name} closure is unsupported over Z")


class ApproxIdeal:
    """An additive subgroup packaged with its closure operator."""

    def __init__(self, base, cl, check=True):
        self.base = base
        self.cl = cl
        self.ring = cl.ring
        if check:
            ok, ce = is_approx_ideal(base, cl)
            if not ok:
                raise PreconditionError(f"not an approximate ideal: {ce}")
        self.closure = closure_eval(cl, base)

    def base_values(self):
        if isinstance(self.base, PrincipalSubgroup):
            return self.base
        return self.base.values

    def is_proper(self):
        if isinstance(self.base, PrincipalSubgroup):
            return self.base.d != 1
        return len(self.base.values) < self.ring.cardinality()

    def is_closed(self):
        """Whether cl(I) = I."""
        if isinstance(self.base, PrincipalSubgroup):
            return self.closure.canonical.d == self.base.d
        return frozenset(self.closure.canonical.values) == self.base.values

    def __eq__(self, other):
        return (isinstance(other, ApproxIdeal) and self.ring == other.ring
                and self.base == other.base)

    def __hash__(self):
        return hash((self.ring, self.base))

    def __repr__(self):
        return f"ApproxIdeal({self.base!r})"


def approx_ideal(ring, gens, cl, check=True):
    """ApproxIdeal generated (as a subgroup) by the given elements."""
    return ApproxIdeal(subgroup_generated(ring, gens), cl, check=check)


def is_approx_ideal(s, cl):
    """(verdict, counterexample): s a subgroup with R*s inside cl(s)."""
    ring = cl.ring
    if isinstance(s, PrincipalSubgroup):
        # absorption over Z: r*(d) = (d), so the condition is d in cl((d))
        d = s.d
        g = cl.z_principal_image(d)
        if PrincipalSubgroup(g).contains(d):
            return True, None
        return False, {"reason": "absorption", "r": 1, "s": d, "witness": d}
    values = s.values if hasattr(s, "values") else frozenset(
        ring.canon(v) for v in s)
    if not is_additive_subgroup(ring, values):
        return False, {"reason": "not-a-subgroup",
                       "S": sorted(values, key=sort_key)}
    clset = materialize(cl, values)
    for r in sorted(ring.elements(), key=sort_key):
        for x in sorted(values, key=sort_key):
            p = ring.mul(r, x)
            if p not in clset:
                return False, {"reason": "absorption", "r": r, "s": x,
                               "witness": p}
    return True, None


def is_approx_prime(p, cl, check_ideal=True):
    """(verdict, counterexample) for: xy in cl(P) implies x in P or y in P.

    Preconditions (raised as errors, with the cause named): P must be an
    approximate ideal and a proper subset of the ring.  A closure equal to
    the whole ring yields verdict False with the witness pair (1, 1).
    """
    ring = cl.ring
    if check_ideal:
        ok, ce = is_approx_ideal(p, cl)
        if not ok:
            raise PreconditionError(f"not an approximate ideal: {ce}")

    if isinstance(p, PrincipalSubgroup):
        d = p.d
        if d == 1:
            raise PreconditionError("improper: P = (1) is the whole ring")
        m = _z_shift_modulus(cl)
        g = math.gcd(d, m)
        if g == 1:
            return False, {"reason": "closure-is-whole-ring", "x": 1, "y": 1}
        if m == 0:
            ok = d == 0 or _is_prime_int(d)
        else:
            ok = _is_prime_int(d) and m % d == 0
        if ok:
            return True, None
        return False, _z_prime_counterexample(d, g)

    values = p.values
    card = ring.cardinality()
    if len(values) >= card:
        raise PreconditionError("improper: P is the whole ring")
    clset = materialize(cl, values)
    if len(clset) >= card:
        # such P can never be approximately prime; witness (1, 1)
        return False, {"reason": "closure-is-whole-ring",
                       "x": ring.one, "y": ring.one}
    elems = sorted(ring.elements(), key=sort_key)
    for x in elems:
        if x in values:
            continue
        for y in elems:
            if y in values:
                continue
            if ring.mul(x, y) in clset:
                return False, {"x": x, "y": y, "product": ring.mul(x, y)}
    return True, None


def _is_prime_int(n):
    from .rings import is_prime
    return is_prime(n)


def _z_prime_counterexample(d, g):
    """A concrete witness pair for a non-prime principal candidate over Z."""
    if d == 0:
        return {"x": g, "y": 1, "product": g}
    if g < d:
        return {"x": g, "y": g, "product": g * g}
    # g == d, d composite: split d = a*b
    for a in range(2, d):
        if d % a == 0:
            return {"x": a, "y": d // a, "product": d}
    return {"x": 1, "y": 1, "product": 1}


def z_prime_bruteforce(cl, d, bound=None):
    """Definition-based bounded check that (d) is approximately prime over Z.

    Scans x in [1, bound]; for each x not in (d) the witnesses y form the
    multiples of g / gcd(x, g), so the scan is exact over the quantified
    box [-bound, bound]^2 without iterating all pairs.
    """
    if d == 1:
        raise PreconditionError("improper: P = (1)")
    m = _z_shift_modulus(cl)
    g = math.gcd(d, m)
    if bound is None:
        bound = max(2 * m, 2 * d, 16)
    if g == 0:
        # cl(P) = (0): xy = 0 never holds for nonzero x, y
        return True, None
    for x in range(1, bound + 1):
        if d != 0 and x % d == 0:
            continue
        if d == 0 and x == 0:
            continue
        y0 = g // math.gcd(x, g)
        if y0 > bound:
            continue
        if d == 0 or y0 % d != 0:
            return False, {"x": x, "y": y0, "product": x * y0}
    return True, None


def z_prime_bruteforce_grid(m, d_max, bound=None):
    """Vectorized sweep: verdicts for all candidates (d), d = 0..d_max.

    Same decision as ``z_prime_bruteforce`` for the modular closure with
    modulus m, evaluated with numpy over the whole candidate range.
    """
    if bound is None:
        bound = max(2 * m, 16)
    d = np.arange(d_max + 1, dtype=np.int64)
    g = np.gcd(d, m)
    x = np.arange(1, bound + 1, dtype=np.int64)
    dd = d[:, None]
    gg = g[:, None]
    xx = x[None, :]
    d_safe = np.where(dd == 0, 1, dd)
    x_not_in_p = np.where(dd == 0, xx != 0, xx % d_safe != 0)
    y0 = gg // np.gcd(xx, np.where(gg == 0, 1, gg))
    y0_ok = (gg != 0) & (y0 <= bound)
    y_not_in_p = np.where(dd == 0, y0 != 0, y0 % d_safe != 0)
    violation = (x_not_in_p & y0_ok & y_not_in_p).any(axis=1)
    verdict = ~violation
    # g == 0 (d = m = 0): cl(P) = (0), classically prime
    verdict |= (g == 0)
    if d_max >= 1:
        verdict[1] = False  # d = 1 improper, never listed
    return verdict


def approx_product(a, b):
    """AB = cl(<ab : a in A, b in B>), the closure of the spanned products."""
    if a.ring != b.ring:
        raise DomainMismatchError("approximate ideals over different rings")
    if a.cl.describe() != b.cl.describe():
        raise DomainMismatchError("approximate ideals carry different closures")
    ring = a.ring
    if _is_z(ring):
        prod = a.base.d * b.base.d
        span = ideal_generated(ring, [prod])
    else:
        prods = {ring.mul(x, y)
                 for x in a.base.values for y in b.base.values}
        span = ideal_generated(ring, sorted(prods, key=sort_key))
    return closure_eval(a.cl, span)


# ---------------------------------------------------------------------------
# quotient rings


class QuotientRing:
    """R / cl(I): congruence classes x ~ y iff x - y in cl(I).

    Finite rings carry explicit classes and a table-ring model plus the
    recorded well-definedness verdicts; over the integers the quotient is
    described by the modulus of cl(I).
    """

    def __init__(self, ring, ideal, classes, model, modulus=None,
                 verdicts=None):
        self.ring = ring
        self.ideal = ideal
        self.classes = classes
        self.model = model
        self.modulus = modulus
        self.verdicts = verdicts or []

    def class_count(self):
        if self.classes is not None:
            return len(self.classes)
        return None if self.modulus == 0 else self.modulus

    def ok(self):
        return all(v.passed for v in self.verdicts)

    def __repr__(self):
        n = self.class_count()
        size = "infinitely many" if n is None else n
        return f"<quotient of {self.ring} with {size} classes>"


def quotient_ring(ring, ideal):
    """Build R/I for an approximate ideal, verifying well-definedness."""
    if ideal.ring != ring:
        raise DomainMismatchError("ideal lives in a different ring")
    ok, ce = is_approx_ideal(ideal.base, ideal.cl)
    if not ok:
        raise PreconditionError(f"absorption fails: {ce}")

    if _is_z(ring):
        g = ideal.closure.canonical.d
        if g >= 2:
            model = ResidueRing(g)
        elif g == 1:
            model = TableRing("0-ring", [0], lambda a, b: 0, lambda a: 0,
                              lambda a, b: 0, 0, 0)
        else:
            model = None  # Z itself; infinitely many classes
        return QuotientRing(ring, ideal, None, model, modulus=g)

    clset = materialize(ideal.cl, ideal.base.values)
    verdicts = []
    sub_ok = is_additive_subgroup(ring, clset)
    verdicts.append(Verdict("congruence-classes-partition", sub_ok,
                            None if sub_ok else {"clI": sorted(clset, key=sort_key)}))
    if not sub_ok:
        raise PreconditionError(
            "cl(I) is not an additive subgroup; classes do not partition")

    elems = sorted(ring.elements(), key=sort_key)
    rep_of = {}
    classes = []
    for x in elems:
        if x in rep_of:
            continue
        members = frozenset(ring.add(x, j) for j in clset)
        for y in members:
            rep_of[y] = x
        classes.append((x, members))

    # representative independence: vary one slot at a time; the relation is
    # transitive (cl(I) is a subgroup), so one-slot checks suffice
    add_ce = mul_ce = None
    for rep, members in classes:
        for x in members:
            for y in elems:
                if add_ce is None and \
                        rep_of[ring.add(x, y)] != rep_of[ring.add(rep, y)]:
                    add_ce = {"x": x, "x2": rep, "y": y}
                if mul_ce is None and \
                        rep_of[ring.mul(x, y)] != rep_of[ring.mul(rep, y)]:
                    mul_ce = {"x": x, "x2": rep, "y": y}
            if add_ce is not None and mul_ce is not None:
                break
    verdicts.append(Verdict("addition-well-defined", add_ce is None, add_ce))
    verdicts.append(Verdict("multiplication-well-defined", mul_ce is None,
                            mul_ce))

    model = None
    if add_ce is None and mul_ce is None:
        reps = [rep for rep, _ in classes]
        model = TableRing(
            f"{ring.spec_string()}/cl(I)", reps,
            add=lambda a, b: rep_of[ring.add(a, b)],
            neg=lambda a: rep_of[ring.neg(a)],
            mul=lambda a, b: rep_of[ring.mul(a, b)],
            zero=rep_of[ring.zero], one=rep_of[ring.one],
            fmt=lambda v: f"[{ring.format_element(v)}]")
        verdicts.append(Verdict("ring-axioms", _ring_axioms_hold(model)))
    return QuotientRing(ring, ideal, classes, model, verdicts=verdicts)


def _ring_axioms_hold(ring):
    """Exhaustive commutative-ring axioms over a small finite ring."""
    elems = list(ring.elements())
    z, o = ring.zero, ring.one
    for a in elems:
        if ring.add(a, z) != a or ring.mul(a, o) != a:
            return False
        if ring.add(a, ring.neg(a)) != z:
            return False
        for b in elems:
            if ring.add(a, b) != ring.add(b, a):
                return False
            if ring.mul(a, b) != ring.mul(b, a):
                return False
            for c in elems:
                if ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)):
                    return False
                if ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)):
                    return False
                if ring.mul(a, ring.add(b, c)) != \
                        ring.add(ring.mul(a, b), ring.mul(a, c)):
                    return False
    return True


# ---------------------------------------------------------------------------
# the factorization property for closed primes


class FactorizationVerdict:
    """Hypotheses and conclusion of the closed-prime factorization check."""

    def __init__(self, hypotheses, conclusion_holds):
        self.hypotheses = hypotheses
        self.conclusion_holds = conclusion_holds

    @property
    def hypotheses_hold(self):
        return all(self.hypotheses.values())

    @property
    def theorem_respected(self):
        return (not self.hypotheses_hold) or self.conclusion_holds

    def __repr__(self):
        return (f"<factorization hyps={self.hypotheses} "
                f"conclusion={self.conclusion_holds}>")


def factorization_check(a, b, c):
    """Check: A = BC with A a cl-closed approximate prime forces B or C
    inside A.  All hypotheses are reported; a hypothesis-satisfying
    counterexample to the conclusion would falsify the theorem.
    """
    prime_ok, _ = is_approx_prime(a.base, a.cl, check_ideal=False) \
        if a.is_proper() else (False, None)
    product = approx_product(b, c)
    hyps = {
        "A-proper": a.is_proper(),
        "B-proper": b.is_proper(),
        "C-proper": c.is_proper(),
        "A-prime": prime_ok,
        "A-closed": a.is_closed(),
        "A-equals-BC": _subgroup_equals_ideal(a, product),
    }
    conclusion = _contained(b, a) or _contained(c, a)
    return FactorizationVerdict(hyps, conclusion)


def _subgroup_equals_ideal(a, ideal_rep):
    if isinstance(a.base, PrincipalSubgroup):
        return a.base.d == ideal_rep.canonical.d
    return a.base.values == frozenset(ideal_rep.canonical.values)


def _contained(b, a):
    if isinstance(a.base, PrincipalSubgroup):
        if a.base.d == 0:
            return b.base.d == 0
        return b.base.d != 0 and b.base.d % a.base.d == 0
    return b.base.values <= a.base.values


# ---------------------------------------------------------------------------
# approximate prime rings


def is_approx_prime_ring(ring, cl, z_bound=None):
    """Whether (0) is an approximate prime ideal of the ring."""
    if _is_z(ring):
        m = _z_shift_modulus(cl)
        if m == 0:
            return True, None
        return False, {"x": m, "y": 1, "product": m}
    zero_sub = FiniteSubgroup(ring, {ring.zero}, check=False)
    return is_approx_prime(zero_sub, cl, check_ideal=False)


def check_thm_ring_prime(ring, cl, z_bound=None):
    """Both sides of the prime-ring characterization, computed independently.

    Side one: (0) approximately prime.  Side two: for all nonzero a, b the
    set aRb is not contained in cl(0).  Returns the equivalence verdict.
    """
    side1, ce1 = is_approx_prime_ring(ring, cl)
    if _is_z(ring):
        m = _z_shift_modulus(cl)
        bound = z_bound or max(2 * m, 12)
        side2 = True
        ce2 = None
        for a in range(1, bound + 1):
            for b in range(1, bound + 1):
                # aZb = abZ; contained in (m) iff m | ab (or ab = 0 for m = 0)
                ab = a * b
                contained = ab == 0 if m == 0 else ab % m == 0
                if contained:
                    side2 = False
                    ce2 = {"a": a, "b": b}
                    break
            if not side2:
                break
    else:
        cl0 = materialize(cl, {ring.zero})
        elems = sorted(ring.elements(), key=sort_key)
        side2 = True
        ce2 = None
        for a in elems:
            if a == ring.zero:
                continue
            for b in elems:
                if b == ring.zero:
                    continue
                if all(ring.mul(ring.mul(a, r), b) in cl0 for r in elems):
                    side2 = False
                    ce2 = {"a": a, "b": b}
                    break
            if not side2:
                break
    agree = side1 == side2
    return Verdict("prime-ring-characterization", agree,
                   None if agree else {"prime-ring": side1, "condition": side2,
                                       "ce1": ce1, "ce2": ce2},
                   details={"prime-ring": side1, "condition": side2})


# ---------------------------------------------------------------------------
# transfer along ring homomorphisms


def preimage_transfer(f, j, cl_src, cl_dst):
    """Pull an approximate ideal back along f, with primeness when it holds.

    Requires machine-verified functoriality of f for the closure pair; the
    returned verdicts record the ideal and primeness checks on f^{-1}(J).
    """
    img = closure_image_compatible(f, cl_src, cl_dst)
    pre = closure_preimage_compatible(f, cl_src, cl_dst)
    if not (img.passed and pre.passed):
        raise PreconditionError(
            "functoriality unverified: "
            f"image={img.passed}, preimage={pre.passed}")

    pre_base = _preimage_subgroup(f, j.base)
    verdicts = []
    ok, ce = is_approx_ideal(pre_base, cl_src)
    verdicts.append(Verdict("preimage-is-approx-ideal", ok, ce))
    j_prime, _ = _prime_or_false(j.base, cl_dst)
    if j_prime:
        ok_p, ce_p = _prime_or_false(pre_base, cl_src)
        verdicts.append(Verdict("preimage-is-approx-prime", ok_p, ce_p))
    out = ApproxIdeal(pre_base, cl_src, check=False)
    return out, verdicts


def image_transfer(f, i, cl_src, cl_dst):
    """Push an approximate ideal forward along a surjection.

    Also verifies the pullback identity f^{-1}(f(A)) = A + Ker f on the
    tested subgroups; the primeness clause runs only when Ker f lies inside
    the ideal and f is preimage-compatible.
    """
    if not f.is_surjective():
        raise PreconditionError("image transfer needs a surjective hom")
    img = closure_image_compatible(f, cl_src, cl_dst)
    if not img.passed:
        raise PreconditionError("functoriality unverified: image compatibility")

    img_base = _image_subgroup(f, i.base)
    verdicts = []
    ok, ce = is_approx_ideal(img_base, cl_dst)
    verdicts.append(Verdict("image-is-approx-ideal", ok, ce))

    verdicts.append(_pullback_identity_verdict(f))

    kernel_inside = _kernel_inside(f, i.base)
    i_prime, _ = _prime_or_false(i.base, cl_src)
    pre_ok = closure_preimage_compatible(f, cl_src, cl_dst).passed
    if kernel_inside and i_prime and pre_ok:
        ok_p, ce_p = _prime_or_false(img_base, cl_dst)
        verdicts.append(Verdict("image-is-approx-prime", ok_p, ce_p))
    else:
        verdicts.append(Verdict(
            "image-primeness-clause-skipped", True, details={
                "kernel-inside": kernel_inside, "ideal-prime": i_prime,
                "preimage-compatible": pre_ok}))
    out = ApproxIdeal(img_base, cl_dst, check=False)
    return out, verdicts


def _prime_or_false(base, cl):
    """is_approx_prime, but improper/non-ideal inputs yield False quietly."""
    try:
        return is_approx_prime(base, cl)
    except PreconditionError:
        return False, {"reason": "precondition"}


def _preimage_subgroup(f, base):
    if isinstance(f.src, IntegerRing):
        n = f.dst.n
        vals = base.values
        g = n
        for b in vals:
            g = math.gcd(g, b)
        return PrincipalSubgroup(g)
    pre = {x for x in f.src.elements() if f.apply(x) in base.values}
    return FiniteSubgroup(f.src, pre, check=False)


def _image_subgroup(f, base):
    if isinstance(base, PrincipalSubgroup):
        return subgroup_generated(f.dst, [f.apply(base.d)])
    img = {f.apply(x) for x in base.values}
    return FiniteSubgroup(f.dst, img, check=True)


def _kernel_inside(f, base):
    ker = f.kernel()
    if isinstance(ker, PrincipalSubgroup):
        return base.contains(ker.d)
    return all(base.contains(x) for x in ker.values)


def _pullback_identity_verdict(f, gen_bound=60):
    """f^{-1}(f(A)) = A + Ker f over the tested subgroup domain."""
    if isinstance(f.src, IntegerRing):
        n = f.dst.n
        for d in range(gen_bound + 1):
            lhs = math.gcd(d, n)  # generator of the preimage of <d mod n>
            rhs = math.gcd(d, n)  # (d) + (n)
            if lhs != rhs:
                return Verdict("pullback-identity", False, {"A": f"({d})"})
        return Verdict("pullback-identity", True,
                       mode=f"(d) for d <= {gen_bound}")
    from .rings import enumerate_subgroups
    for sub in enumerate_subgroups(f.src):
        img = {f.apply(x) for x in sub.values}
        lhs = {x for x in f.src.elements() if f.apply(x) in img}
        ker = f.kernel().values
        rhs = {f.src.add(a, k) for a in sub.values for k in ker}
        if lhs != rhs:
            return Verdict("pullback-identity", False,
                           {"A": sorted(sub.values, key=sort_key)})
    return Verdict("pullback-identity", True, mode="all subgroups")
