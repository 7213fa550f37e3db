"""The approximate prime spectrum and its Zariski-style topology.

Closed sets are V(I) = {P : cl(I) inside cl(P)}; basic opens are their
complements D(f).  Finite rings are handled by exhaustively filtering the
additive subgroup lattice; the integers with a modular closure use the
closed form {(p) : p prime, p | m}, cross-checked against a bounded
definition-based enumeration.
"""

from __future__ import annotations

import math

from .closures import materialize
from .errors import PreconditionError
from .ideals import (
    ApproxIdeal,
    _z_shift_modulus,
    approx_product,
    is_approx_ideal,
    is_approx_prime,
    z_prime_bruteforce_grid,
)
from .reports import Verdict
from .rings import (
    FiniteSubgroup,
    IdealRep,
    IntegerRing,
    PrincipalSubgroup,
    ideal_from_subgroup,
    ideal_sum,
    enumerate_subgroups,
    is_prime,
    sort_key,
)


class SpectrumReport:
    """The enumerated approximate primes plus how they were found."""

    def __init__(self, ring, cl, primes, method, bound=None, guard=None):
        self.ring = ring
        self.cl = cl
        self.primes = primes
        self.method = method
        self.bound = bound
        self.guard = guard

    def labels(self):
        return [format_prime(self.ring, p) for p in self.primes]

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __repr__(self):
        return f"<spectrum of {self.ring} under {self.cl.describe()}: " \
               f"{self.labels()} ({self.method})>"


class ClosedSet:
    """V(I): the primes whose closures contain cl(I)."""

    def __init__(self, defining, members):
        self.defining = defining
        self.members = members

    def labels(self, ring):
        return [format_prime(ring, p) for p in self.members]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other):
        return isinstance(other, ClosedSet) and \
            set(map(_prime_key, self.members)) == \
            set(map(_prime_key, other.members))

    def __repr__(self):
        return f"V({self.defining!r}) = {self.members!r}"


def format_prime(ring, p):
    if isinstance(p, PrincipalSubgroup):
        return f"({p.d})"
    inner = ",".join(ring.format_element(v) for v in p.sorted_values())
    return "{" + inner + "}"


def _prime_key(p):
    if isinstance(p, PrincipalSubgroup):
        return ("principal", p.d)
    return ("set", tuple(sorted(p.values, key=sort_key)))


def spectrum(ring, cl, guard=64, z_bound=None):
    """Enumerate the approximate primes of the ring under the closure.

    Finite rings filter every additive subgroup by: approximate ideal,
    proper, approximately prime.  Over the integers the modular closed form
    is used and re-derived by a bounded candidate sweep; the plain span
    closure gives the classically bounded enumeration {(0)} + small primes.
    """
    if isinstance(ring, IntegerRing):
        m = _z_shift_modulus(cl)
        bound = z_bound if z_bound is not None else max(1000, m)
        if m == 0:
            primes = [PrincipalSubgroup(0)] + [
                PrincipalSubgroup(p) for p in range(2, bound + 1) if is_prime(p)]
            return SpectrumReport(ring, cl, primes,
                                  method="bounded-enumeration", bound=bound)
        if m == 1:
            return SpectrumReport(ring, cl, [], method="closed-form", bound=bound)
        closed = [PrincipalSubgroup(p)
                  for p in range(2, m + 1) if is_prime(p) and m % p == 0]
        swept = z_prime_bruteforce_grid(m, bound)
        brute = [PrincipalSubgroup(int(d)) for d in range(bound + 1) if swept[d]]
        if [p.d for p in closed] != [p.d for p in brute]:
            raise AssertionError(
                f"closed form and bounded sweep disagree for m={m}: "
                f"{[p.d for p in closed]} vs {[p.d for p in brute]}")
        return SpectrumReport(ring, cl, closed,
                              method="closed-form+bounded-sweep", bound=bound)

    primes = []
    card = ring.cardinality()
    for sub in enumerate_subgroups(ring, guard):
        if len(sub.values) >= card:
            continue
        ok, _ = is_approx_ideal(sub, cl)
        if not ok:
            continue
        prime, _ = is_approx_prime(sub, cl, check_ideal=False)
        if prime:
            primes.append(sub)
    return SpectrumReport(ring, cl, primes, method="exhaustive", guard=guard)


def _closure_of(spec, defining):
    """cl of a defining subgroup/ideal/generator list, in comparable form."""
    cl = spec.cl
    if isinstance(spec.ring, IntegerRing):
        if isinstance(defining, IdealRep):
            d = defining.canonical.d
        elif isinstance(defining, PrincipalSubgroup):
            d = defining.d
        else:
            d = 0
            for g in defining:
                d = math.gcd(d, g)
        return cl.z_principal_image(d)
    if isinstance(defining, IdealRep):
        vals = frozenset(defining.canonical.values)
    elif isinstance(defining, FiniteSubgroup):
        vals = defining.values
    else:
        vals = frozenset(spec.ring.canon(v) for v in defining)
    return materialize(cl, vals)


def _closure_contains(spec, outer, inner):
    """cl-subset test in the comparable form produced by ``_closure_of``."""
    if isinstance(spec.ring, IntegerRing):
        return PrincipalSubgroup(outer).contains(inner) if outer != 0 \
            else inner == 0
    return inner <= outer


def v_set(spec, defining):
    """V(I) = {P in the spectrum : cl(I) inside cl(P)}."""
    cli = _closure_of(spec, defining)
    members = []
    for p in spec.primes:
        clp = _closure_of(spec, p)
        if isinstance(spec.ring, IntegerRing):
            ok = (cli == 0) if clp == 0 else (cli % clp == 0)
        else:
            ok = cli <= clp
        if ok:
            members.append(p)
    return ClosedSet(defining, members)


def d_set(spec, f_value):
    """D(f): the spectrum minus V(<f>)."""
    closed = v_set(spec, [f_value])
    keys = {_prime_key(p) for p in closed.members}
    return [p for p in spec.primes if _prime_key(p) not in keys]


def closure_of_point(spec, p):
    """The topological closure of {P}, which equals V(P)."""
    keys = {_prime_key(q) for q in spec.primes}
    if _prime_key(p) not in keys:
        raise PreconditionError("point is not in the spectrum")
    return v_set(spec, p)


def _ideal_pool(spec, z_ideal_bound):
    """The defining-ideal enumeration for topology checks."""
    ring = spec.ring
    if isinstance(ring, IntegerRing):
        return [PrincipalSubgroup(d) for d in range(z_ideal_bound + 1)]
    pool = []
    for sub in enumerate_subgroups(ring, spec.guard or 64):
        ok, _ = is_approx_ideal(sub, spec.cl)
        if ok:
            pool.append(sub)
    return pool


def _as_approx_ideal(spec, sub):
    return ApproxIdeal(sub, spec.cl, check=False)


def _v_of_sum(spec, a, b):
    if isinstance(a, PrincipalSubgroup):
        return v_set(spec, PrincipalSubgroup(math.gcd(a.d, b.d)))
    summed = ideal_sum(ideal_from_subgroup(a), ideal_from_subgroup(b))
    return v_set(spec, summed)


def topology_check(spec, z_ideal_bound=120, f_pool=None):
    """The closed-set laws and separation properties, each from scratch.

    Verifies: V(I+J) = V(I) and V(J) intersected, V(IJ) = V(I) union V(J)
    with IJ the approximate product, the T0 separation through basic opens,
    the T1 criterion computed both as inclusion-maximality and as
    singleton point closures, and quasi-compactness by exhibiting a finite
    subcover of the full basic-open cover.
    """
    verdicts = []
    pool = _ideal_pool(spec, z_ideal_bound)

    inter_ce = None
    union_ce = None
    for a in pool:
        va = v_set(spec, a)
        ka = set(map(_prime_key, va.members))
        for b in pool:
            vb = v_set(spec, b)
            kb = set(map(_prime_key, vb.members))
            vsum = _v_of_sum(spec, a, b)
            if inter_ce is None and set(map(_prime_key, vsum.members)) != ka & kb:
                inter_ce = {"I": repr(a), "J": repr(b)}
            prod = approx_product(_as_approx_ideal(spec, a),
                                  _as_approx_ideal(spec, b))
            vprod = v_set(spec, prod)
            if union_ce is None and set(map(_prime_key, vprod.members)) != ka | kb:
                union_ce = {"I": repr(a), "J": repr(b),
                            "V(IJ)": vprod.labels(spec.ring)}
            if inter_ce is not None and union_ce is not None:
                break
        if inter_ce is not None and union_ce is not None:
            break
    # for small pools also sweep three-member families of the sum law
    inter_mode = f"{len(pool)} ideals, all pairs"
    if inter_ce is None and len(pool) <= 8:
        import itertools as _it
        for fam in _it.combinations(pool, 3):
            keys = None
            for a in fam:
                ka = set(map(_prime_key, v_set(spec, a).members))
                keys = ka if keys is None else keys & ka
            summed = fam[0]
            for b in fam[1:]:
                summed_ideal = ideal_sum(ideal_from_subgroup(summed),
                                         ideal_from_subgroup(b))
                summed = summed_ideal.canonical
            vsum = set(map(_prime_key, v_set(spec, summed).members))
            if vsum != keys:
                inter_ce = {"family": [repr(a) for a in fam]}
                break
        inter_mode += " and triples"
    verdicts.append(Verdict("intersection-law", inter_ce is None, inter_ce,
                            mode=inter_mode))
    verdicts.append(Verdict("union-law", union_ce is None, union_ce,
                            mode=f"{len(pool)} ideals, all pairs"))

    # boundary cases: V(0) is everything, V(R) is empty
    v_zero = v_set(spec, _zero_sub(spec))
    v_whole = v_set(spec, _whole_sub(spec))
    verdicts.append(Verdict(
        "V(0)-is-whole-space", len(v_zero) == len(spec.primes)))
    verdicts.append(Verdict("V(R)-is-empty", len(v_whole) == 0))

    if f_pool is None:
        if isinstance(spec.ring, IntegerRing):
            m = _z_shift_modulus(spec.cl)
            f_pool = list(range(0, max(m, 30) + 1))
            f_pool.extend(p.d for p in spec.primes if p.d > max(m, 30))
        else:
            f_pool = sorted(spec.ring.elements(), key=sort_key)

    t0_ce = None
    opens = {f: {_prime_key(p) for p in d_set(spec, f)} for f in f_pool}
    primes = list(spec.primes)
    for i, p in enumerate(primes):
        for q in primes[i + 1:]:
            kp, kq = _prime_key(p), _prime_key(q)
            if not any((kp in op) != (kq in op) for op in opens.values()):
                t0_ce = {"P": format_prime(spec.ring, p),
                         "Q": format_prime(spec.ring, q)}
                break
        if t0_ce is not None:
            break
    verdicts.append(Verdict("T0", t0_ce is None, t0_ce,
                            mode=f"{len(f_pool)} basic opens"))

    # T1 computed two independent ways
    incl_max = True
    incl_ce = None
    for p in primes:
        for q in primes:
            if _prime_key(p) != _prime_key(q) and _sub_contained(p, q):
                incl_max = False
                incl_ce = {"P": format_prime(spec.ring, p),
                           "Q": format_prime(spec.ring, q)}
                break
        if not incl_max:
            break
    singletons = all(len(closure_of_point(spec, p)) == 1 for p in primes)
    verdicts.append(Verdict("T1-criterion-agreement", incl_max == singletons,
                            None if incl_max == singletons else
                            {"inclusion-maximal": incl_max,
                             "singleton-closures": singletons}))
    verdicts.append(Verdict("T1", incl_max, incl_ce,
                            details={"inclusion-maximal": incl_max,
                                     "singleton-closures": singletons}))

    # quasi-compactness: the full basic-open cover has a finite subcover
    cover = []
    remaining = {_prime_key(p) for p in primes}
    for f in f_pool:
        if not remaining:
            break
        if opens[f] & remaining:
            cover.append(f)
            remaining -= opens[f]
    verdicts.append(Verdict("quasi-compact", not remaining,
                            None if not remaining else
                            {"uncovered": len(remaining)},
                            details={"subcover-size": len(cover)}))

    # observational report (no equivalence asserted): whether the primes
    # are all cl-closed, and whether every proper cl-closed ideal in the
    # pool sits under some prime
    primes_closed = all(_is_cl_closed(spec, p) for p in primes)
    under = True
    for a in pool:
        if not _is_cl_closed(spec, a) or _is_whole(spec, a):
            continue
        if not any(_contained_in_prime(spec, a, p) for p in primes):
            under = False
            break
    verdicts.append(Verdict(
        "closed-primes-report", True,
        details={"all-primes-cl-closed": primes_closed,
                 "closed-ideals-under-primes": under}))
    return verdicts


def _is_cl_closed(spec, sub):
    cl_val = _closure_of(spec, sub)
    if isinstance(spec.ring, IntegerRing):
        return cl_val == sub.d
    return cl_val == sub.values


def _is_whole(spec, sub):
    if isinstance(spec.ring, IntegerRing):
        return sub.d == 1
    return len(sub.values) == spec.ring.cardinality()


def _contained_in_prime(spec, sub, prime):
    if isinstance(sub, PrincipalSubgroup):
        if prime.d == 0:
            return sub.d == 0
        return sub.d % prime.d == 0
    return sub.values <= prime.values


def _zero_sub(spec):
    if isinstance(spec.ring, IntegerRing):
        return PrincipalSubgroup(0)
    return FiniteSubgroup(spec.ring, {spec.ring.zero}, check=False)


def _whole_sub(spec):
    if isinstance(spec.ring, IntegerRing):
        return PrincipalSubgroup(1)
    return FiniteSubgroup(spec.ring, set(spec.ring.elements()), check=False)


def _sub_contained(p, q):
    """Strict containment P < Q between primes."""
    if isinstance(p, PrincipalSubgroup):
        if p.d == q.d:
            return False
        if q.d == 0:
            return False
        if p.d == 0:
            return True
        return p.d % q.d == 0
    return p.values < q.values