"""Localization S^{-1}R with the transferred closure, and radicals.

Pairs (a, s) are identified when some u in S puts u(at - bs) inside cl(0).
The transferred closure of a subset A of classes admits a/s exactly when
some u in S drags u*a into cl_R of the denominator-s pullback of A; the
pullback sets are cached per (A, s) and representative independence is
checked, not assumed.

Finite base rings enumerate pairs directly.  For the integers with the
modular closure, multiplying by elements of S can only absorb the prime
factors of m shared with S, so the classes collapse onto Z/m0 where m0 is
the generator of {z : exists u in S with uz = 0 mod m}; everything is then
decided by exact residue arithmetic (with u ranging over saturation
residues, which is sound because membership in mZ only depends on residues).
"""

from __future__ import annotations

import math

from .closures import (
    ClosureSpec,
    check_axioms,
    materialize,
)
from .errors import PreconditionError, ResourceLimitError
from .ideals import (
    ApproxIdeal,
    _z_shift_modulus,
    is_approx_prime,
)
from .reports import Verdict
from .rings import (
    FiniteSubgroup,
    IdealRep,
    IntegerRing,
    PrincipalSubgroup,
    TableRing,
    Z,
    ideal_generated,
    is_additive_subgroup,
    is_prime,
    sort_key,
)
from .spectrum import _prime_key, format_prime, spectrum


class MultSet:
    """A multiplicative subset given by generators; 1 is always included."""

    def __init__(self, ring, generators):
        self.ring = ring
        self.generators = tuple(ring.canon(g) for g in generators)
        if isinstance(ring, IntegerRing):
            if any(g == 0 for g in self.generators):
                raise PreconditionError("0 in S collapses the localization")
            self.saturation = None  # infinite; residues computed on demand
        else:
            sat = {ring.one}
            frontier = [ring.one]
            while frontier:
                x = frontier.pop()
                for g in self.generators:
                    y = ring.mul(x, g)
                    if y not in sat:
                        sat.add(y)
                        frontier.append(y)
            self.saturation = frozenset(sat)

    def residues(self, modulus):
        """Saturation residues modulo ``modulus`` (integers only)."""
        sat = {1 % modulus}
        frontier = [1 % modulus]
        while frontier:
            x = frontier.pop()
            for g in self.generators:
                y = (x * g) % modulus
                if y not in sat:
                    sat.add(y)
                    frontier.append(y)
        return sorted(sat)

    def contains_multiple_of(self, d):
        """Whether some element of S is divisible by d (integers only)."""
        if d == 0:
            return False
        if d == 1 or d == -1:
            return True
        d = abs(d)
        for p in range(2, d + 1):
            if not is_prime(p) or d % p:
                continue
            if not any(g % p == 0 for g in self.generators):
                return False
        return True

    def contains(self, x):
        """Membership test for an integer multiplicative set."""
        if not isinstance(self.ring, IntegerRing):
            return self.ring.canon(x) in self.saturation
        if x == 1:
            return True
        if x <= 0:
            return False
        seen = set()
        frontier = [x]
        while frontier:
            y = frontier.pop()
            if y == 1:
                return True
            if y in seen:
                continue
            seen.add(y)
            for g in self.generators:
                if g not in (0, 1) and y % g == 0:
                    frontier.append(y // g)
        return False

    def __repr__(self):
        gens = ",".join(self.ring.format_element(g) for g in self.generators)
        return f"<{gens}>"


def mult_set(ring, generators):
    return MultSet(ring, generators)


class TransferredClosure(ClosureSpec):
    """The localized closure, evaluated directly from its defining formula."""

    name = "transferred"

    def __init__(self, localized):
        super().__init__(localized.model)
        self.loc = localized
        self._pullback_cache = {}

    def describe(self):
        return f"transferred({self.loc.base_cl.describe()})"

    def _pullback_closure(self, a_values, s):
        key = (a_values, s)
        hit = self._pullback_cache.get(key)
        if hit is not None:
            return hit
        loc = self.loc
        out = loc._pullback_closure(a_values, s)
        self._pullback_cache[key] = out
        return out

    def _pair_condition(self, a, s, a_values):
        """Whether the representative (a, s) lands in cl_S(A)."""
        loc = self.loc
        d = self._pullback_closure(a_values, s)
        return loc._exists_u_multiplying_into(a, d)

    def eval_set(self, values):
        values = frozenset(values)
        loc = self.loc
        out = set()
        for cls_value in loc.model.elements():
            conds = [self._pair_condition(a, s, values)
                     for (a, s) in loc.class_pairs(cls_value)]
            if any(conds):
                out.add(cls_value)
            if not (all(conds) or not any(conds)):
                loc.rep_independence_failures.append(
                    {"A": sorted(values, key=sort_key), "class": cls_value})
        return frozenset(out)

    def member(self, x, values):
        return self.loc.model.canon(x) in self.eval_set(frozenset(values))


class LocalizedRing:
    """S^{-1}R as explicit classes with a finite model ring."""

    def __init__(self, base, base_cl, mult):
        self.base = base
        self.base_cl = base_cl
        self.mult = mult
        self.verdicts = []
        self.rep_independence_failures = []
        if isinstance(base, IntegerRing):
            self._build_z()
        elif base.is_finite:
            self._build_finite()
        else:
            raise PreconditionError(f"localization unsupported over {base}")
        self.transferred = TransferredClosure(self)

    # -- integer base -----------------------------------------------------

    def _build_z(self):
        m = _z_shift_modulus(self.base_cl)
        if m == 0:
            raise PreconditionError(
                "localizing Z needs the modular closure (cl(0) = mZ, m >= 1)")
        self.modulus = m
        sat_m = self.mult.residues(m)
        self.sat_residues_mod_m = sat_m
        absorbed = {z for z in range(m) if any((u * z) % m == 0 for u in sat_m)}
        g0 = m
        for z in absorbed:
            g0 = math.gcd(g0, z)
        self.m0 = g0 if g0 > 0 else m
        m0 = self.m0
        for s in sat_m:
            if math.gcd(s, m0) != 1:
                raise AssertionError(
                    "saturation residue not invertible modulo the class modulus")
        if m0 == 1:
            elems = [0]
        else:
            elems = list(range(m0))
        self.model = TableRing(
            f"S^-1Z (classes mod {m0})", elems,
            add=lambda a, b: (a + b) % m0 if m0 > 1 else 0,
            neg=lambda a: (-a) % m0 if m0 > 1 else 0,
            mul=lambda a, b: (a * b) % m0 if m0 > 1 else 0,
            zero=0, one=1 % m0)
        self.sat_residues_mod_m0 = sorted({s % m0 for s in sat_m}) if m0 > 1 else [0]
        self._verify_z_relation()

    def _z_related(self, a, s, b, t):
        """(a,s) ~ (b,t): some u in S with u(at - bs) in mZ."""
        m = self.modulus
        return any((u * (a * t - b * s)) % m == 0
                   for u in self.sat_residues_mod_m)

    def to_class_z(self, a, s):
        m0 = self.m0
        if m0 == 1:
            return 0
        return (a * pow(s % m0, -1, m0)) % m0

    def _verify_z_relation(self, span=None):
        """The relation is a congruence matching the class map, on a box."""
        m = self.modulus
        if span is None:
            span = m
        s_lifts = self._sat_lifts()
        pairs = [(a, s) for a in range(-span, span + 1) for s in s_lifts]
        ce = None
        for (a, s) in pairs:
            for (b, t) in pairs:
                rel = self._z_related(a, s, b, t)
                same = self.to_class_z(a, s) == self.to_class_z(b, t)
                if rel != same:
                    ce = {"pair1": (a, s), "pair2": (b, t), "related": rel}
                    break
            if ce:
                break
        self.verdicts.append(Verdict(
            "equivalence-matches-class-map", ce is None, ce,
            mode=f"pairs with |a| <= {span}, {len(s_lifts)} denominators"))
        small = [p for p in pairs if abs(p[0]) <= 12]
        add_ce = None
        for (a, s) in small:
            for (b, t) in small:
                lhs = self.to_class_z(a * t + b * s, s * t)
                rhs = self.model.add(self.to_class_z(a, s), self.to_class_z(b, t))
                if lhs != rhs:
                    add_ce = {"pair1": (a, s), "pair2": (b, t)}
                    break
                lhs = self.to_class_z(a * b, s * t)
                rhs = self.model.mul(self.to_class_z(a, s), self.to_class_z(b, t))
                if lhs != rhs:
                    add_ce = {"pair1": (a, s), "pair2": (b, t), "op": "mul"}
                    break
            if add_ce:
                break
        self.verdicts.append(Verdict("operations-well-defined", add_ce is None,
                                     add_ce, mode="bounded pair sample"))

    def _sat_lifts(self):
        """Concrete elements of S, one per residue class mod m."""
        m = self.modulus
        seen = {}
        frontier = [1]
        seen[1 % m] = 1
        while frontier:
            x = frontier.pop()
            for g in self.mult.generators:
                y = x * g
                if y % m not in seen:
                    seen[y % m] = y
                    frontier.append(y)
        return sorted(seen.values())

    # -- finite base -------------------------------------------------------

    def _build_finite(self):
        ring = self.base
        sat = sorted(self.mult.saturation, key=sort_key)
        cl0 = materialize(self.base_cl, {ring.zero})
        pairs = [(a, s) for a in sorted(ring.elements(), key=sort_key)
                 for s in sat]
        if len(pairs) > 4096:
            raise ResourceLimitError(f"{len(pairs)} pairs exceed the guard")

        def related(p, q):
            (a, s), (b, t) = p, q
            diff = ring.sub(ring.mul(a, t), ring.mul(b, s))
            return any(ring.mul(u, diff) in cl0 for u in sat)

        parent = {p: p for p in pairs}

        def find(p):
            while parent[p] != p:
                parent[p] = parent[parent[p]]
                p = parent[p]
            return p

        def union(p, q):
            rp, rq = find(p), find(q)
            if rp != rq:
                lo, hi = sorted([rp, rq], key=lambda t_: (sort_key(t_[0]),
                                                          sort_key(t_[1])))
                parent[hi] = lo

        for i, p in enumerate(pairs):
            for q in pairs[i + 1:]:
                if related(p, q):
                    union(p, q)

        # the relation as tested must agree with its union-find closure
        eq_ce = None
        for p in pairs:
            for q in pairs:
                if (find(p) == find(q)) != related(p, q):
                    eq_ce = {"pair1": p, "pair2": q,
                             "related": related(p, q)}
                    break
            if eq_ce:
                break
        self.verdicts.append(Verdict("equivalence-relation", eq_ce is None,
                                     eq_ce, mode="all pairs"))

        classes = {}
        for p in pairs:
            classes.setdefault(find(p), []).append(p)
        reps = sorted(classes, key=lambda t_: (sort_key(t_[0]), sort_key(t_[1])))
        self.pairs = pairs
        self._class_members = {rep: tuple(classes[rep]) for rep in reps}
        self._pair_class = {p: rep for rep, mem in self._class_members.items()
                            for p in mem}
        self.sat = sat
        self.cl0 = cl0

        one = self._pair_class[(ring.one, ring.one)]
        zero = self._pair_class[(ring.zero, ring.one)]

        def add(x, y):
            (a, s), (b, t) = x, y
            return self._pair_class[self._canon_pair(
                ring.add(ring.mul(a, t), ring.mul(b, s)), ring.mul(s, t))]

        def neg(x):
            (a, s) = x
            return self._pair_class[(ring.neg(a), s)]

        def mul(x, y):
            (a, s), (b, t) = x, y
            return self._pair_class[(ring.mul(a, b), ring.mul(s, t))]

        self.model = TableRing(
            f"S^-1({ring.spec_string()})", reps, add, neg, mul, zero, one,
            fmt=lambda v: f"{ring.format_element(v[0])}/{ring.format_element(v[1])}")

        wd_ce = None
        for rep, members in self._class_members.items():
            for p in members:
                for other in reps:
                    if add(p, other) != add(rep, other):
                        wd_ce = {"pair": p, "rep": rep, "other": other,
                                 "op": "add"}
                        break
                    if mul(p, other) != mul(rep, other):
                        wd_ce = {"pair": p, "rep": rep, "other": other,
                                 "op": "mul"}
                        break
                if wd_ce:
                    break
            if wd_ce:
                break
        self.verdicts.append(Verdict("operations-well-defined", wd_ce is None,
                                     wd_ce, mode="all representative pairs"))

    def _canon_pair(self, a, s):
        return (a, s)

    # -- shared interface ---------------------------------------------------

    def class_pairs(self, cls_value):
        """All representative pairs of one class (finite base), or the
        denominator-indexed representatives over the integers."""
        if isinstance(self.base, IntegerRing):
            m0 = self.m0
            out = []
            for s in self.sat_residues_mod_m0 if m0 > 1 else [1]:
                if m0 > 1:
                    a = (cls_value * s) % m0
                else:
                    a = 0
                out.append((a, s))
            return out
        return self._class_members[cls_value]

    def iota(self, x):
        """The canonical map R -> S^{-1}R."""
        if isinstance(self.base, IntegerRing):
            return self.to_class_z(Z.canon(x), 1)
        return self._pair_class[(self.base.canon(x), self.base.one)]

    def _pullback_closure(self, a_values, s):
        """cl_R({x : x/s in A}) in membership-testable form."""
        if isinstance(self.base, IntegerRing):
            m0 = self.m0
            if m0 == 1:
                return 1  # the pullback spans everything
            residues = {(a * s) % m0 for a in a_values}
            g = m0
            for r in residues:
                g = math.gcd(g, r)
            if not residues:
                g = 0
            return self.base_cl.z_principal_image(g)
        members = {x for x in self.base.elements()
                   if self._pair_class[(x, s)] in a_values}
        return materialize(self.base_cl, members)

    def _exists_u_multiplying_into(self, a, pullback_cl):
        if isinstance(self.base, IntegerRing):
            g = pullback_cl
            return any((u * a) % g == 0 if g else (u * a) == 0
                       for u in self.sat_residues_mod_m)
        return any(self.base.mul(u, a) in pullback_cl for u in self.sat)

    def class_count(self):
        return self.model.cardinality()

    def ok(self):
        return all(v.passed for v in self.verdicts)

    def __repr__(self):
        return (f"<localization of {self.base} at {self.mult!r}: "
                f"{self.class_count()} classes>")


def localize(ring, cl, mult):
    """Construct S^{-1}R carrying the transferred closure."""
    if mult.ring != ring:
        raise PreconditionError("multiplicative set lives in a different ring")
    if cl.ring != ring:
        raise PreconditionError("closure lives in a different ring")
    return LocalizedRing(ring, cl, mult)


def check_transfer_axioms(loc, mode="auto", **kwargs):
    """Axiom suite for the transferred closure on the localized classes."""
    k = loc.class_count()
    if mode == "auto":
        mode = "exhaustive" if k <= 12 else "subgroups"
    return check_axioms(loc.transferred, mode=mode, **kwargs)


def check_rep_independence(loc, subset_limit=512):
    """Evaluate the transferred closure on a family of class subsets and
    report whether any class mixed verdicts across its representatives."""
    loc.rep_independence_failures.clear()
    model = loc.model
    elems = sorted(model.elements(), key=sort_key)
    from .rings import enumerate_subgroups
    families = [s.values for s in enumerate_subgroups(model)]
    singles = [frozenset([e]) for e in elems]
    tested = families + singles
    if len(tested) > subset_limit:
        tested = tested[:subset_limit]
    for a in tested:
        loc.transferred.eval_set(a)
    bad = list(loc.rep_independence_failures)
    return Verdict("representative-independence", not bad,
                   bad[0] if bad else None,
                   mode=f"{len(tested)} class subsets")


def check_iota_functorial(loc, z_gen_bound=120):
    """Both functoriality inclusions for the canonical map."""
    image_ce = None
    pre_ce = None
    trans = loc.transferred
    if isinstance(loc.base, IntegerRing):
        for d in range(z_gen_bound + 1):
            g = loc.base_cl.z_principal_image(d)
            lhs = {loc.iota(g * k) for k in range(loc.m0 + 1)}
            rhs = trans.eval_set(frozenset(
                loc.iota(d * k) for k in range(loc.m0 + 1)))
            if not lhs <= rhs:
                image_ce = {"X": f"({d})"}
                break
        from .rings import enumerate_subgroups
        for sub in enumerate_subgroups(loc.model):
            b = sub.values
            clb = trans.eval_set(b)
            pre_lhs_res = {c for c in clb}
            # iota^{-1}(U) = {x : x mod m0 in U}; spanning those lifts
            span = loc.m0
            pre_b_res = sorted(b) if loc.m0 > 1 else [0]
            for r in pre_b_res:
                span = math.gcd(span, r)
            g = loc.base_cl.z_principal_image(span)
            ok = all((c % g == 0 if g else c == 0) for c in pre_lhs_res) \
                if loc.m0 > 1 else True
            if not ok:
                pre_ce = {"B": sorted(b)}
                break
        mode = f"(d) for d <= {z_gen_bound}; subgroup subsets of classes"
    else:
        from .rings import enumerate_subgroups
        for sub in enumerate_subgroups(loc.base):
            x = sub.values
            clx = materialize(loc.base_cl, x)
            lhs = {loc.iota(v) for v in clx}
            rhs = trans.eval_set(frozenset(loc.iota(v) for v in x))
            if not lhs <= rhs:
                image_ce = {"X": sorted(x, key=sort_key)}
                break
        for sub in enumerate_subgroups(loc.model):
            b = sub.values
            clb = trans.eval_set(b)
            pre_lhs = {v for v in loc.base.elements() if loc.iota(v) in clb}
            pre_b = frozenset(v for v in loc.base.elements()
                              if loc.iota(v) in b)
            rhs = materialize(loc.base_cl, pre_b)
            if not pre_lhs <= rhs:
                pre_ce = {"B": sorted(b, key=sort_key)}
                break
        mode = "additive subgroups both sides"
    return [Verdict("iota-image-compatible", image_ce is None, image_ce,
                    mode=mode),
            Verdict("iota-preimage-compatible", pre_ce is None, pre_ce,
                    mode=mode)]


# ---------------------------------------------------------------------------
# extension and contraction


def extend(loc, p_sub):
    """P^e = S^{-1}P as a set of classes, with properness/primeness verdicts.

    When P meets S the extension blows up to the whole localized ring; that
    is reported (``proper`` False), not raised.
    """
    if isinstance(loc.base, IntegerRing):
        d = p_sub.d
        meets = loc.mult.contains_multiple_of(d)
        m0 = loc.m0
        if m0 == 1:
            values = frozenset(loc.model.elements())
        else:
            step = math.gcd(d, m0)
            values = frozenset(range(0, m0, step)) if step else frozenset({0})
    else:
        meets = any(v in loc.mult.saturation for v in p_sub.values)
        values = frozenset(loc._pair_class[(a, s)] for a in p_sub.values
                           for s in loc.sat)
    sub = FiniteSubgroup(loc.model, values, check=False)
    proper = len(values) < loc.model.cardinality()
    verdicts = [Verdict("extension-proper", proper,
                        None if proper else {"P-meets-S": meets})]
    if proper:
        prime, ce = is_approx_prime(sub, loc.transferred, check_ideal=False)
        verdicts.append(Verdict("extension-prime", prime, ce))
    return sub, verdicts


def contract(loc, q_sub):
    """q^c = iota^{-1}(q) back in the base ring, with a primeness verdict."""
    if isinstance(loc.base, IntegerRing):
        m0 = loc.m0
        g = m0
        for v in q_sub.values:
            g = math.gcd(g, v)
        out = PrincipalSubgroup(g if m0 > 1 else 1)
    else:
        vals = {x for x in loc.base.elements() if loc.iota(x) in q_sub.values}
        out = FiniteSubgroup(loc.base, vals, check=False)
    q_prime, _ = is_approx_prime(q_sub, loc.transferred, check_ideal=False) \
        if len(q_sub.values) < loc.model.cardinality() else (False, None)
    verdicts = []
    if q_prime:
        try:
            prime, ce = is_approx_prime(out, loc.base_cl)
        except PreconditionError as exc:
            prime, ce = False, {"reason": str(exc)}
        verdicts.append(Verdict("contraction-prime", prime, ce))
    return out, verdicts


def check_ext_contr_bijection(loc, z_bound=None):
    """Match {P in Spec(R) : P avoids S} with Spec(S^{-1}R) through
    extension and contraction, checking both round trips and inclusion
    order.  Returns (verdict, matched pairs).
    """
    base_spec = spectrum(loc.base, loc.base_cl, z_bound=z_bound)
    loc_spec = spectrum(loc.model, loc.transferred)
    avoiding = []
    for p in base_spec.primes:
        if isinstance(p, PrincipalSubgroup):
            meets = loc.mult.contains_multiple_of(p.d)
        else:
            meets = any(v in loc.mult.saturation for v in p.values)
        if not meets:
            avoiding.append(p)

    matched = []
    problems = []
    loc_keys = {_prime_key(q) for q in loc_spec.primes}
    for p in avoiding:
        ext, _ = extend(loc, p)
        if _prime_key(ext) not in loc_keys:
            problems.append({"P": format_prime(loc.base, p),
                             "issue": "extension-not-in-spectrum"})
            continue
        back, _ = contract(loc, ext)
        if _prime_key(back) != _prime_key(p):
            problems.append({"P": format_prime(loc.base, p),
                             "issue": "round-trip-P"})
            continue
        matched.append((p, ext))
    ext_keys = {_prime_key(e) for _, e in matched}
    for q in loc_spec.primes:
        if _prime_key(q) not in ext_keys:
            problems.append({"q": format_prime(loc.model, q),
                             "issue": "not-hit-by-extension"})
            continue
        back, _ = contract(loc, q)
        ext2, _ = extend(loc, back)
        if _prime_key(ext2) != _prime_key(q):
            problems.append({"q": format_prime(loc.model, q),
                             "issue": "round-trip-q"})

    order_ce = None
    for (p1, e1) in matched:
        for (p2, e2) in matched:
            if _sub_le(p1, p2) != (e1.values <= e2.values):
                order_ce = {"P1": format_prime(loc.base, p1),
                            "P2": format_prime(loc.base, p2)}
    if order_ce:
        problems.append({"issue": "inclusion-order", **order_ce})

    verdict = Verdict(
        "extension-contraction-bijection", not problems,
        problems[0] if problems else None,
        details={"avoiding": [format_prime(loc.base, p) for p in avoiding],
                 "localized": loc_spec.labels()})
    return verdict, matched


def _sub_le(p1, p2):
    if isinstance(p1, PrincipalSubgroup):
        if p2.d == 0:
            return p1.d == 0
        return p1.d % p2.d == 0
    return p1.values <= p2.values


# ---------------------------------------------------------------------------
# radicals


def _power_orbit_members(ring, g, clset):
    """Whether some positive power of g lies in the target set.

    The power sequence of an element of a finite ring is eventually
    periodic; the orbit is collected until it repeats, which keeps the
    exponent bound honest per instance.
    """
    seen = []
    x = g
    while x not in seen:
        seen.append(x)
        if x in clset:
            return True, len(seen)
        x = ring.mul(x, g)
    return False, len(seen)


def radical(ring, cl, ideal):
    """rad(I) = {g : some power of g lies in cl(I)}, as an ideal."""
    if isinstance(ring, IntegerRing):
        d = ideal.base.d if isinstance(ideal, ApproxIdeal) else ideal.d
        g = cl.z_principal_image(d)
        return ideal_generated(Z, [_squarefree_kernel(g)])
    base = ideal.base.values if isinstance(ideal, ApproxIdeal) else ideal.values
    clset = materialize(cl, base)
    members = set()
    for g in ring.elements():
        hit, _ = _power_orbit_members(ring, g, clset)
        if hit:
            members.add(g)
    if not is_additive_subgroup(ring, members):
        raise PreconditionError(
            "radical is not an additive subgroup for this closure")
    if not all(ring.mul(r, x) in members
               for r in ring.elements() for x in members):
        raise PreconditionError("radical is not an ideal for this closure")
    return IdealRep(ring, tuple(sorted(members, key=sort_key)),
                    FiniteSubgroup(ring, members, check=False))


def _squarefree_kernel(n):
    if n == 0:
        return 0
    n = abs(n)
    out = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            out *= p
            while n % p == 0:
                n //= p
        p += 1
    return out * n if n > 1 else out


def z_radical_bruteforce(cl, d, bound=200):
    """Membership of each |x| <= bound in rad((d)) straight from the
    definition, detecting the power-residue cycle for the exponent bound."""
    g = cl.z_principal_image(d)
    out = []
    for x in range(0, bound + 1):
        if g == 0:
            hit = x == 0
        else:
            seen = set()
            r = x % g
            hit = False
            while r not in seen:
                seen.add(r)
                if r == 0:
                    hit = True
                    break
                r = (r * x) % g
        if hit:
            out.append(x)
    return out


def prime_radical(spec):
    """The intersection of all approximate primes in the spectrum."""
    if isinstance(spec.ring, IntegerRing):
        if not spec.primes:
            return PrincipalSubgroup(1)  # empty intersection: the whole ring
        acc = 1
        for p in spec.primes:
            acc = math.lcm(acc, p.d)
        return PrincipalSubgroup(acc)
    values = None
    for p in spec.primes:
        values = p.values if values is None else values & p.values
    if values is None:
        values = frozenset(spec.ring.elements())
    return FiniteSubgroup(spec.ring, values, check=False)


def check_rad_eq_nil(ring, cl, z_bound=None):
    """rad(0) = intersection of the spectrum, both sides computed fresh."""
    spec = spectrum(ring, cl, z_bound=z_bound)
    inter = prime_radical(spec)
    if isinstance(ring, IntegerRing):
        m = _z_shift_modulus(cl)
        rad0 = _squarefree_kernel(m)
        bound = max(60, min(200, 2 * max(m, 1)))
        swept = z_radical_bruteforce(cl, 0, bound=bound)
        expected = [x for x in range(bound + 1)
                    if PrincipalSubgroup(rad0).contains(x)]
        agree = rad0 == inter.d and swept == expected
        return Verdict("radical-equals-prime-intersection", agree,
                       None if agree else {"rad0": f"({rad0})",
                                           "intersection": f"({inter.d})"},
                       details={"rad0": f"({rad0})",
                                "intersection": f"({inter.d})"})
    zero_ideal = ApproxIdeal(FiniteSubgroup(ring, {ring.zero}, check=False),
                             cl, check=False)
    rad = radical(ring, cl, zero_ideal)
    agree = frozenset(rad.canonical.values) == inter.values
    return Verdict("radical-equals-prime-intersection", agree,
                   None if agree else {
                       "rad0": sorted(rad.canonical.values, key=sort_key),
                       "intersection": sorted(inter.values, key=sort_key)},
                   details={"size": len(inter.values)})