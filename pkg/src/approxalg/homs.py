"""Ring homomorphisms between supported rings.

A hom is either a verified finite map table, the canonical reduction
Z -> Z/n (or Z/n -> Z/k for k | n), or an identity.  Finite-domain homs are
verified pointwise at construction: additive, multiplicative, and unital.
"""

from __future__ import annotations

from .errors import PreconditionError
from .rings import (
    FiniteSubgroup,
    IntegerRing,
    PrincipalSubgroup,
    ResidueRing,
)


class RingHom:
    """Base: a unital ring homomorphism f: src -> dst."""

    def __init__(self, src, dst):
        self.src = src
        self.dst = dst

    def apply(self, v):
        raise NotImplementedError

    def image_values(self, values):
        return frozenset(self.apply(v) for v in values)

    def is_surjective(self):
        if not self.dst.is_finite:
            raise PreconditionError("surjectivity test needs a finite codomain")
        if self.src.is_finite:
            return self.image_values(self.src.elements()) == frozenset(
                self.dst.elements())
        raise NotImplementedError

    def kernel(self):
        """Ker f as a subgroup representation of the source."""
        if self.src.is_finite:
            ker = {v for v in self.src.elements()
                   if self.apply(v) == self.dst.zero}
            return FiniteSubgroup(self.src, ker, check=False)
        raise NotImplementedError

    def describe(self):
        return f"{self.src} -> {self.dst}"


class IdentityHom(RingHom):
    def __init__(self, ring):
        super().__init__(ring, ring)

    def apply(self, v):
        return self.src.canon(v)

    def is_surjective(self):
        return True

    def kernel(self):
        if isinstance(self.src, IntegerRing):
            return PrincipalSubgroup(0)
        return super().kernel()


class ReductionHom(RingHom):
    """Z -> Z/n, or Z/n -> Z/k with k | n (x -> x mod k)."""

    def __init__(self, src, dst):
        if not isinstance(dst, ResidueRing):
            raise PreconditionError("reduction target must be a residue ring")
        if isinstance(src, IntegerRing):
            pass
        elif isinstance(src, ResidueRing):
            if src.n % dst.n != 0:
                raise PreconditionError(
                    f"no reduction Z/{src.n} -> Z/{dst.n}: {dst.n} does not divide {src.n}")
        else:
            raise PreconditionError("reduction source must be Z or a residue ring")
        super().__init__(src, dst)

    def apply(self, v):
        return self.src.canon(v) % self.dst.n

    def is_surjective(self):
        return True

    def kernel(self):
        if isinstance(self.src, IntegerRing):
            return PrincipalSubgroup(self.dst.n)
        return super().kernel()


class TableHom(RingHom):
    """Finite hom given by an explicit value map, verified at construction."""

    def __init__(self, src, dst, mapping):
        if not src.is_finite:
            raise PreconditionError("table homs need a finite source")
        super().__init__(src, dst)
        self.mapping = {src.canon(k): dst.canon(v) for k, v in mapping.items()}
        missing = [v for v in src.elements() if v not in self.mapping]
        if missing:
            raise PreconditionError(f"map table missing {len(missing)} elements")
        problem = verify_hom_table(src, dst, self.mapping)
        if problem is not None:
            raise PreconditionError(f"not a ring homomorphism: {problem}")

    def apply(self, v):
        return self.mapping[self.src.canon(v)]


def verify_hom_table(src, dst, mapping):
    """None if the table is a unital ring hom, else a description of why not."""
    if mapping[src.one] != dst.one:
        return f"f(1) = {mapping[src.one]!r} != 1"
    elems = list(src.elements())
    for x in elems:
        for y in elems:
            if mapping[src.add(x, y)] != dst.add(mapping[x], mapping[y]):
                return f"f({x!r}+{y!r}) != f({x!r})+f({y!r})"
            if mapping[src.mul(x, y)] != dst.mul(mapping[x], mapping[y]):
                return f"f({x!r}*{y!r}) != f({x!r})*f({y!r})"
    return None


def identity_hom(ring):
    return IdentityHom(ring)


def reduction_hom(src, dst):
    return ReductionHom(src, dst)


def table_hom(src, dst, mapping):
    return TableHom(src, dst, mapping)


def hom_from_unit_image(src, dst):
    """The unique unital hom from a cyclic ring, built from f(1) = 1."""
    if isinstance(src, IntegerRing):
        if isinstance(dst, ResidueRing):
            return ReductionHom(src, dst)
        if isinstance(dst, IntegerRing):
            return IdentityHom(src)
        raise PreconditionError(f"no canonical hom Z -> {dst}")
    if isinstance(src, ResidueRing):
        if isinstance(dst, ResidueRing):
            return ReductionHom(src, dst)
        mapping = {}
        acc = dst.zero
        for x in range(src.n):
            mapping[x] = acc
            acc = dst.add(acc, dst.one)
        return TableHom(src, dst, mapping)
    raise PreconditionError(f"{src} is not cyclic")
