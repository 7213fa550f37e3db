"""Effective commutative rings with unity, and their subgroups and ideals.

Every ring works on canonical element values (plain ints and tuples), so
structural equality of values is element equality.  The supported rings:

* ``IntegerRing`` -- arbitrary-precision integers.
* ``ResidueRing(n)`` -- Z/n, residues in [0, n).
* ``ProductRing(factors)`` -- componentwise product; factors all finite, or
  all copies of Z (the integer-lattice case supports arithmetic and modular
  closure membership only).
* ``PolyQuotient(p, modulus)`` -- F_p[x]/(modulus), coefficient tuples.
* ``FunctionRing(p, nvars)`` -- all functions F_p^nvars -> F_p, stored as
  value tables over the lexicographic point grid (x_i^p = x_i holds, so the
  table is a faithful canonical form).
* ``TableRing`` -- an explicit finite ring given by element list and
  operation tables; used internally for quotients and localizations.

Additive subgroups are ``FiniteSubgroup`` (explicit sets, finite rings) or
``PrincipalSubgroup(d)`` (d*Z inside the integers).  Finitely generated
ideals carry their generators plus a canonical subgroup form with decidable
membership.
"""

from __future__ import annotations

import itertools
import math

from . import polynomials as poly
from .errors import (
    DomainMismatchError,
    NotEnumerableError,
    PreconditionError,
    ResourceLimitError,
)

SUBGROUP_ENUM_GUARD = 64


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# ring descriptors


class Ring:
    """Arithmetic on canonical values plus descriptor metadata."""

    is_finite = False

    def cardinality(self):
        return None

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    zero = None
    one = None

    def canon(self, v):
        """Canonicalize a raw value, raising if it does not belong here."""
        raise NotImplementedError

    def elements(self):
        """All elements in canonical order (finite rings only)."""
        raise NotEnumerableError(f"{self} is not enumerable")

    def spec_string(self):
        raise NotImplementedError

    def format_element(self, v):
        return str(v)

    def __repr__(self):
        return self.spec_string()

    def __eq__(self, other):
        return isinstance(other, Ring) and self.spec_string() == other.spec_string()

    def __hash__(self):
        return hash(self.spec_string())


class IntegerRing(Ring):
    is_finite = False
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def canon(self, v):
        if isinstance(v, bool) or not isinstance(v, int):
            raise DomainMismatchError(f"{v!r} is not an integer")
        return v

    def spec_string(self):
        return "Z"


Z = IntegerRing()


class ResidueRing(Ring):
    is_finite = True

    def __init__(self, n):
        if n < 2:
            raise PreconditionError("ResidueRing requires n >= 2")
        self.n = n
        self.zero = 0
        self.one = 1 % n

    def cardinality(self):
        return self.n

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def canon(self, v):
        if isinstance(v, bool) or not isinstance(v, int):
            raise DomainMismatchError(f"{v!r} is not an integer")
        return v % self.n

    def elements(self):
        return iter(range(self.n))

    def spec_string(self):
        return f"Zn:{self.n}"


class ProductRing(Ring):
    """Componentwise product.  All factors finite, or all equal to Z."""

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise PreconditionError("ProductRing needs at least one factor")
        finite = [f.is_finite for f in factors]
        if all(finite):
            self.is_finite = True
        elif all(isinstance(f, IntegerRing) for f in factors):
            # integer lattice Z^k: arithmetic and modular membership only
            self.is_finite = False
        else:
            raise PreconditionError(
                "ProductRing factors must be all finite or all Z")
        self.factors = factors
        self.zero = tuple(f.zero for f in factors)
        self.one = tuple(f.one for f in factors)

    def cardinality(self):
        if not self.is_finite:
            return None
        out = 1
        for f in self.factors:
            out *= f.cardinality()
        return out

    def add(self, a, b):
        return tuple(f.add(x, y) for f, x, y in zip(self.factors, a, b))

    def neg(self, a):
        return tuple(f.neg(x) for f, x in zip(self.factors, a))

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def canon(self, v):
        if not isinstance(v, tuple) or len(v) != len(self.factors):
            raise DomainMismatchError(f"{v!r} is not a {len(self.factors)}-tuple")
        return tuple(f.canon(x) for f, x in zip(self.factors, v))

    def elements(self):
        if not self.is_finite:
            raise NotEnumerableError(f"{self} is not enumerable")
        return itertools.product(*[list(f.elements()) for f in self.factors])

    def spec_string(self):
        inner = ",".join(f.spec_string() for f in self.factors)
        return f"prod:[{inner}]"

    def format_element(self, v):
        return "(" + ",".join(f.format_element(x)
                              for f, x in zip(self.factors, v)) + ")"


class PolyQuotient(Ring):
    """F_p[x] / (modulus), for a monic modulus of degree >= 1."""

    is_finite = True

    def __init__(self, p, modulus):
        if not is_prime(p):
            raise PreconditionError(f"{p} is not prime")
        modulus = poly.uni_trim(c % p for c in modulus)
        if len(modulus) < 2:
            raise PreconditionError("modulus must have degree >= 1")
        if modulus[-1] != 1:
            raise PreconditionError("modulus must be monic")
        self.p = p
        self.modulus = modulus
        self.deg = len(modulus) - 1
        self.zero = ()
        self.one = (1,)

    def cardinality(self):
        return self.p ** self.deg

    def add(self, a, b):
        return poly.uni_add(self.p, a, b)

    def neg(self, a):
        return poly.uni_neg(self.p, a)

    def mul(self, a, b):
        return poly.uni_rem(self.p, poly.uni_mul(self.p, a, b), self.modulus)

    def canon(self, v):
        if not isinstance(v, tuple):
            raise DomainMismatchError(f"{v!r} is not a coefficient tuple")
        return poly.uni_rem(self.p, poly.uni_trim(c % self.p for c in v),
                            self.modulus)

    def elements(self):
        for coeffs in itertools.product(range(self.p), repeat=self.deg):
            yield poly.uni_trim(coeffs)

    def spec_string(self):
        return f"GF:{self.p}/{poly.uni_to_str(self.modulus)}"

    def format_element(self, v):
        return poly.uni_to_str(v)


class FunctionRing(Ring):
    """All functions F_p^nvars -> F_p with pointwise operations.

    Canonical value: the tuple of values over the lexicographic point grid.
    """

    is_finite = True

    def __init__(self, p, nvars):
        if not is_prime(p):
            raise PreconditionError(f"{p} is not prime")
        if nvars < 1:
            raise PreconditionError("nvars must be >= 1")
        self.p = p
        self.nvars = nvars
        self.points = tuple(poly.all_points(p, nvars))
        self.npoints = len(self.points)
        self.zero = (0,) * self.npoints
        self.one = (1,) * self.npoints

    def cardinality(self):
        return self.p ** self.npoints

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        return tuple((x * y) % self.p for x, y in zip(a, b))

    def canon(self, v):
        if not isinstance(v, tuple) or len(v) != self.npoints:
            raise DomainMismatchError(f"{v!r} is not a {self.npoints}-entry table")
        return tuple(x % self.p for x in v)

    def elements(self):
        return itertools.product(range(self.p), repeat=self.npoints)

    def variable(self, i):
        """The coordinate function x_{i+1}."""
        return tuple(a[i] for a in self.points)

    def constant(self, c):
        return (c % self.p,) * self.npoints

    def from_mpoly(self, f):
        """Value table of a sparse multivariate polynomial."""
        return tuple(poly.m_eval(f, a, self.p) for a in self.points)

    def to_mpoly(self, v):
        """Reduced polynomial form of a value table (x_i^p = x_i)."""
        return poly.interpolate_fn_table(self.p, self.nvars, self.points, v)

    def spec_string(self):
        return f"Fun:p={self.p},n={self.nvars}"

    def format_element(self, v):
        names = [f"x{i+1}" for i in range(self.nvars)]
        return poly.m_to_str(self.to_mpoly(v), names)


class TableRing(Ring):
    """Finite ring with explicit elements and operation callables.

    Built by quotient and localization constructions; not part of the ring
    grammar.  Elements are whatever canonical values the construction chose.
    """

    is_finite = True

    def __init__(self, label, elems, add, neg, mul, zero, one, fmt=None):
        self._label = label
        self._elems = tuple(elems)
        self._index = {v: i for i, v in enumerate(self._elems)}
        self._add = add
        self._neg = neg
        self._mul = mul
        self.zero = zero
        self.one = one
        self._fmt = fmt or str

    def cardinality(self):
        return len(self._elems)

    def add(self, a, b):
        return self._add(a, b)

    def neg(self, a):
        return self._neg(a)

    def mul(self, a, b):
        return self._mul(a, b)

    def canon(self, v):
        if v not in self._index:
            raise DomainMismatchError(f"{v!r} is not an element of {self._label}")
        return v

    def elements(self):
        return iter(self._elems)

    def spec_string(self):
        return self._label

    def format_element(self, v):
        return self._fmt(v)


# ---------------------------------------------------------------------------
# elements and the arithmetic interface


class RingElem:
    """A canonical value tagged with its ring."""

    __slots__ = ("ring", "value")

    def __init__(self, ring, value):
        self.ring = ring
        self.value = ring.canon(value)

    def _check(self, other):
        if not isinstance(other, RingElem) or other.ring != self.ring:
            raise DomainMismatchError(
                f"operands from different rings: {self.ring} vs "
                f"{getattr(other, 'ring', type(other))}")

    def __add__(self, other):
        self._check(other)
        return RingElem(self.ring, self.ring.add(self.value, other.value))

    def __neg__(self):
        return RingElem(self.ring, self.ring.neg(self.value))

    def __sub__(self, other):
        self._check(other)
        return RingElem(self.ring, self.ring.sub(self.value, other.value))

    def __mul__(self, other):
        self._check(other)
        return RingElem(self.ring, self.ring.mul(self.value, other.value))

    def __eq__(self, other):
        return (isinstance(other, RingElem) and other.ring == self.ring
                and other.value == self.value)

    def __hash__(self):
        return hash((self.ring, self.value))

    def __repr__(self):
        return f"{self.ring.format_element(self.value)} in {self.ring}"


class ElemOps:
    """The arithmetic interface of a ring: add, neg, mul, zero, one, eq."""

    def __init__(self, ring):
        self.ring = ring
        self.zero = RingElem(ring, ring.zero)
        self.one = RingElem(ring, ring.one)

    def elem(self, value):
        return RingElem(self.ring, value)

    def _values(self, a, b):
        for x in (a, b):
            if x.ring != self.ring:
                raise DomainMismatchError(
                    f"operand from {x.ring}, expected {self.ring}")
        return a.value, b.value

    def add(self, a, b):
        x, y = self._values(a, b)
        return RingElem(self.ring, self.ring.add(x, y))

    def neg(self, a):
        if a.ring != self.ring:
            raise DomainMismatchError(f"operand from {a.ring}, expected {self.ring}")
        return RingElem(self.ring, self.ring.neg(a.value))

    def mul(self, a, b):
        x, y = self._values(a, b)
        return RingElem(self.ring, self.ring.mul(x, y))

    def eq(self, a, b):
        x, y = self._values(a, b)
        return x == y


def elem_ops(ring):
    """Arithmetic interface over canonical forms; operations are total."""
    return ElemOps(ring)


def enumerate_elements(ring):
    """Each element exactly once, in deterministic canonical order."""
    if not ring.is_finite:
        raise NotEnumerableError(f"{ring} is not enumerable")
    return ring.elements()


# ---------------------------------------------------------------------------
# closure of sets under operations (worklist)


def close_under(seed, step_fns):
    """Smallest superset of ``seed`` closed under each function in step_fns.

    Every step function maps an element to an iterable of new candidates
    (may consult the current set via closure over it).
    """
    out = set(seed)
    frontier = list(out)
    while frontier:
        x = frontier.pop()
        for fn in step_fns:
            for y in fn(x, out):
                if y not in out:
                    out.add(y)
                    frontier.append(y)
    return out


def additive_closure(ring, values):
    """Close a finite set under + and -, always including 0."""
    def negs(x, _cur):
        return (ring.neg(x),)

    def sums(x, cur):
        return [ring.add(x, y) for y in list(cur)]

    return frozenset(close_under(set(values) | {ring.zero}, [negs, sums]))


def ideal_closure_set(ring, gens):
    """Close generators under +, -, and multiplication by every ring element."""
    if not ring.is_finite:
        raise NotEnumerableError("ideal_closure_set needs a finite ring")
    all_elems = list(ring.elements())

    def negs(x, _cur):
        return (ring.neg(x),)

    def sums(x, cur):
        return [ring.add(x, y) for y in list(cur)]

    def mults(x, _cur):
        return [ring.mul(r, x) for r in all_elems]

    return frozenset(close_under(set(gens) | {ring.zero}, [negs, sums, mults]))


# ---------------------------------------------------------------------------
# subsets, subgroups, ideals


def sort_key(value):
    """Total order on canonical values (ints and nested tuples)."""
    if isinstance(value, tuple):
        return (1, len(value), tuple(sort_key(v) for v in value))
    return (0, 0, value)


class ElementSet:
    """A plain finite subset of a finite ring (no structure assumed)."""

    def __init__(self, ring, values):
        self.ring = ring
        self.values = frozenset(ring.canon(v) for v in values)

    def contains(self, v):
        return self.ring.canon(v) in self.values

    def sorted_values(self):
        return sorted(self.values, key=sort_key)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.sorted_values())

    def __eq__(self, other):
        return (isinstance(other, ElementSet) and self.ring == other.ring
                and self.values == other.values)

    def __hash__(self):
        return hash((self.ring, self.values))

    def __repr__(self):
        inner = ",".join(self.ring.format_element(v) for v in self.sorted_values())
        return "{" + inner + "}"


class FiniteSubgroup(ElementSet):
    """An explicit additive subgroup of a finite ring; closedness is checked."""

    def __init__(self, ring, values, check=True):
        super().__init__(ring, values)
        if check and not is_additive_subgroup(ring, self.values):
            raise PreconditionError(f"{self!r} is not an additive subgroup")

    def elements(self):
        return self.sorted_values()


class PrincipalSubgroup:
    """d*Z inside the integers, d >= 0 the unique nonnegative generator."""

    def __init__(self, d):
        if d < 0:
            raise PreconditionError("generator must be nonnegative")
        self.ring = Z
        self.d = d

    def contains(self, v):
        v = Z.canon(v)
        if self.d == 0:
            return v == 0
        return v % self.d == 0

    def __eq__(self, other):
        return isinstance(other, PrincipalSubgroup) and self.d == other.d

    def __hash__(self):
        return hash(("PrincipalSubgroup", self.d))

    def __repr__(self):
        return f"({self.d})"


def is_additive_subgroup(ring, values):
    """Exhaustive check: contains 0 and closed under addition and negation."""
    if ring.zero not in values:
        return False
    for x in values:
        if ring.neg(x) not in values:
            return False
        for y in values:
            if ring.add(x, y) not in values:
                return False
    return True


class IdealRep:
    """A finitely generated ideal: generators plus canonical subgroup form.

    Membership is decided through the canonical form; two ideals over the
    same ring are equal iff their canonical forms are.
    """

    def __init__(self, ring, generators, canonical):
        self.ring = ring
        self.generators = tuple(generators)
        self.canonical = canonical

    def contains(self, v):
        return self.canonical.contains(v)

    def __eq__(self, other):
        return (isinstance(other, IdealRep) and self.ring == other.ring
                and self.canonical == other.canonical)

    def __hash__(self):
        return hash((self.ring, self.canonical))

    def __repr__(self):
        if isinstance(self.canonical, PrincipalSubgroup):
            return repr(self.canonical)
        return repr(self.canonical)


def ideal_generated(ring, gens):
    """The ideal generated by the values in ``gens`` (empty list: zero ideal)."""
    gens = [ring.canon(g) for g in gens]
    if isinstance(ring, IntegerRing):
        d = 0
        for g in gens:
            d = math.gcd(d, g)
        return IdealRep(ring, gens, PrincipalSubgroup(d))
    if not ring.is_finite:
        raise NotEnumerableError(f"ideal_generated unsupported over {ring}")
    canon = FiniteSubgroup(ring, ideal_closure_set(ring, gens), check=False)
    return IdealRep(ring, gens, canon)


def ideal_from_subgroup(sub):
    """Wrap an existing canonical subgroup as an ideal representation."""
    if isinstance(sub, PrincipalSubgroup):
        return IdealRep(Z, (sub.d,), sub)
    return IdealRep(sub.ring, tuple(sub.sorted_values()), sub)


def ideal_sum(i, j):
    """Canonical representation of I + J."""
    _same_ring(i, j)
    return ideal_generated(i.ring, list(i.generators) + list(j.generators))


def ideal_classical_product(i, j):
    """The classical product ideal generated by pairwise element products."""
    _same_ring(i, j)
    ring = i.ring
    if isinstance(ring, IntegerRing):
        a = i.canonical.d
        b = j.canonical.d
        return ideal_generated(ring, [a * b])
    prods = {ring.mul(a, b)
             for a in i.canonical.values for b in j.canonical.values}
    return ideal_generated(ring, sorted(prods, key=sort_key))


def _same_ring(i, j):
    if i.ring != j.ring:
        raise DomainMismatchError(f"ideals over {i.ring} and {j.ring}")


def subgroup_generated(ring, gens):
    """Additive subgroup generated by the given values."""
    gens = [ring.canon(g) for g in gens]
    if isinstance(ring, IntegerRing):
        d = 0
        for g in gens:
            d = math.gcd(d, g)
        return PrincipalSubgroup(d)
    if not ring.is_finite:
        raise NotEnumerableError(f"subgroup_generated unsupported over {ring}")
    return FiniteSubgroup(ring, additive_closure(ring, gens), check=False)


def enumerate_subgroups(ring, guard=SUBGROUP_ENUM_GUARD):
    """All additive subgroups of a finite ring, each exactly once.

    Grows subgroups one generator at a time from {0}; every result is
    verified closed.  Rings larger than the guard raise loudly.
    """
    if not ring.is_finite:
        raise NotEnumerableError(f"{ring} is not enumerable")
    card = ring.cardinality()
    if card > guard:
        raise ResourceLimitError(
            f"|{ring}| = {card} exceeds the subgroup enumeration guard {guard}")
    elems = list(ring.elements())
    zero_only = frozenset({ring.zero})
    seen = {zero_only}
    frontier = [zero_only]
    while frontier:
        h = frontier.pop()
        for g in elems:
            if g in h:
                continue
            grown = additive_closure(ring, h | {g})
            if grown not in seen:
                seen.add(grown)
                frontier.append(grown)
    subs = [FiniteSubgroup(ring, s, check=True) for s in seen]
    subs.sort(key=lambda s: (len(s), [sort_key(v) for v in s.sorted_values()]))
    return subs


def classical_ideals(ring, guard=SUBGROUP_ENUM_GUARD):
    """All classical (multiplication-absorbing) ideals of a finite ring."""
    elems = list(ring.elements())
    out = []
    for sub in enumerate_subgroups(ring, guard):
        if all(ring.mul(r, x) in sub.values for r in elems for x in sub.values):
            out.append(ideal_from_subgroup(sub))
    return out


# ---------------------------------------------------------------------------
# Z^k lattice helpers (modular closure membership for integer product rings)


def product_modulus_subgroup(ring, m):
    """The residue-model image ring (Z/m)^k for an integer product ring."""
    if not (isinstance(ring, ProductRing) and not ring.is_finite):
        raise PreconditionError("expected an integer product ring")
    return ProductRing([ResidueRing(m)] * len(ring.factors))


def reduce_mod(ring_from, ring_to, v):
    """Componentwise reduction Z^k -> (Z/m)^k."""
    return tuple(f.canon(x) for f, x in zip(ring_to.factors, v))
