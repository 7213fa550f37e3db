import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from approxalg import (
    DomainMismatchError,
    FunctionRing,
    NotEnumerableError,
    PolyQuotient,
    PreconditionError,
    ProductRing,
    ResidueRing,
    ResourceLimitError,
    RingElem,
    Z,
    elem_ops,
    enumerate_elements,
    enumerate_subgroups,
    ideal_classical_product,
    ideal_generated,
    ideal_sum,
)
from approxalg.rings import PrincipalSubgroup, is_additive_subgroup, sort_key


Z12 = ResidueRing(12)
Z2Z2 = ProductRing([ResidueRing(2), ResidueRing(2)])
GF32 = PolyQuotient(2, (0, 0, 0, 0, 0, 1))  # F2[x]/(x^5)
FUN21 = FunctionRing(2, 1)

FINITE_RINGS = [Z12, Z2Z2, GF32, FUN21, ResidueRing(5)]


def num_divisors(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


class TestElemOps:
    def test_mod_12_addition(self):
        ops = elem_ops(Z12)
        assert ops.add(ops.elem(7), ops.elem(8)) == ops.elem(3)

    def test_codeword_sum(self):
        # (x^4+x^2+1) + (x^3+x^2) = x^4+x^3+1 over F2[x]/(x^5)
        ops = elem_ops(GF32)
        a = ops.elem((1, 0, 1, 0, 1))
        b = ops.elem((0, 0, 1, 1))
        assert ops.add(a, b) == ops.elem((1, 0, 0, 1, 1))

    def test_pixel_difference(self):
        lattice = ProductRing([Z, Z, Z])
        ops = elem_ops(lattice)
        p = ops.elem((130, 135, 125))
        a = ops.elem((130, 130, 130))
        assert (p - a).value == (0, 5, -5)

    def test_mixed_ring_operands_rejected(self):
        ops = elem_ops(Z12)
        other = RingElem(ResidueRing(7), 3)
        with pytest.raises(DomainMismatchError):
            ops.add(ops.elem(1), other)

    @pytest.mark.parametrize("ring", FINITE_RINGS, ids=str)
    def test_commutative_ring_axioms_exhaustive(self, ring):
        elems = list(ring.elements())
        z, o = ring.zero, ring.one
        for a in elems:
            assert ring.add(a, z) == a
            assert ring.mul(a, o) == a
            assert ring.add(a, ring.neg(a)) == z
            for b in elems:
                assert ring.add(a, b) == ring.add(b, a)
                assert ring.mul(a, b) == ring.mul(b, a)
                for c in elems:
                    assert ring.add(ring.add(a, b), c) == \
                        ring.add(a, ring.add(b, c))
                    assert ring.mul(ring.mul(a, b), c) == \
                        ring.mul(a, ring.mul(b, c))
                    assert ring.mul(a, ring.add(b, c)) == \
                        ring.add(ring.mul(a, b), ring.mul(a, c))


class TestEnumeration:
    def test_z3(self):
        assert list(enumerate_elements(ResidueRing(3))) == [0, 1, 2]

    def test_product_cardinality(self):
        assert len(list(enumerate_elements(Z2Z2))) == 4

    def test_function_ring_truth_tables(self):
        # all 2^2 functions F_2 -> F_2
        tables = list(enumerate_elements(FUN21))
        assert len(tables) == 4
        assert len(set(tables)) == 4

    def test_integers_not_enumerable(self):
        with pytest.raises(NotEnumerableError):
            enumerate_elements(Z)

    @pytest.mark.parametrize("ring", FINITE_RINGS, ids=str)
    def test_count_matches_cardinality(self, ring):
        elems = list(enumerate_elements(ring))
        assert len(elems) == ring.cardinality()
        assert len(set(elems)) == len(elems)


class TestIdealGenerated:
    def test_gcd(self):
        assert ideal_generated(Z, [4, 6]).canonical.d == 2

    def test_zero_ideal(self):
        assert ideal_generated(Z, []).canonical.d == 0

    def test_mod12_single_generator(self):
        ideal = ideal_generated(Z12, [8])
        assert sorted(ideal.canonical.values) == [0, 4, 8]

    @pytest.mark.parametrize("ring", FINITE_RINGS, ids=str)
    def test_extensive_and_idempotent(self, ring):
        elems = list(ring.elements())
        gens = elems[:2]
        ideal = ideal_generated(ring, gens)
        assert all(g in ideal.canonical.values for g in gens)
        regen = ideal_generated(ring, sorted(ideal.canonical.values,
                                             key=sort_key))
        assert regen == ideal

    def test_monotone_under_generator_inclusion(self):
        small = ideal_generated(Z12, [4])
        large = ideal_generated(Z12, [4, 6])
        assert small.canonical.values <= large.canonical.values

    @given(st.lists(st.integers(-500, 500), max_size=5))
    @settings(max_examples=60, deadline=None)
    def test_integer_ideals_are_gcds(self, gens):
        import math
        expected = 0
        for g in gens:
            expected = math.gcd(expected, g)
        assert ideal_generated(Z, gens).canonical.d == expected


class TestSubgroupEnumeration:
    def test_z12_has_six_subgroups(self):
        subs = enumerate_subgroups(Z12)
        assert len(subs) == 6

    def test_klein_four_has_five(self):
        assert len(enumerate_subgroups(Z2Z2)) == 5

    def test_prime_order_has_two(self):
        assert len(enumerate_subgroups(ResidueRing(5))) == 2

    @pytest.mark.parametrize("n", [2, 6, 12, 18, 30])
    def test_cyclic_subgroup_count_is_divisor_count(self, n):
        assert len(enumerate_subgroups(ResidueRing(n))) == num_divisors(n)

    def test_every_result_is_closed(self):
        for sub in enumerate_subgroups(Z2Z2):
            assert is_additive_subgroup(Z2Z2, sub.values)

    def test_guard_raises_loudly(self):
        with pytest.raises(ResourceLimitError):
            enumerate_subgroups(ResidueRing(100))


class TestIdealArithmetic:
    def test_sum_over_integers(self):
        a = ideal_generated(Z, [4])
        b = ideal_generated(Z, [6])
        assert ideal_sum(a, b).canonical.d == 2

    def test_classical_product_over_integers(self):
        a = ideal_generated(Z, [4])
        b = ideal_generated(Z, [6])
        assert ideal_classical_product(a, b).canonical.d == 24

    def test_sum_in_z12(self):
        a = ideal_generated(Z12, [4])
        b = ideal_generated(Z12, [6])
        assert sorted(ideal_sum(a, b).canonical.values) == [0, 2, 4, 6, 8, 10]

    def test_domain_mismatch(self):
        with pytest.raises(DomainMismatchError):
            ideal_sum(ideal_generated(Z, [2]), ideal_generated(Z12, [2]))


class TestDescriptors:
    def test_residue_ring_rejects_trivial_modulus(self):
        with pytest.raises(PreconditionError):
            ResidueRing(1)

    def test_product_rejects_mixed_factors(self):
        with pytest.raises(PreconditionError):
            ProductRing([Z, ResidueRing(3)])

    def test_poly_quotient_requires_monic(self):
        with pytest.raises(PreconditionError):
            PolyQuotient(2, (1, 0, 0))  # leading coefficient 0 after trim

    def test_poly_quotient_requires_prime(self):
        with pytest.raises(PreconditionError):
            PolyQuotient(4, (0, 0, 1))

    def test_cardinalities(self):
        assert Z12.cardinality() == 12
        assert Z2Z2.cardinality() == 4
        assert GF32.cardinality() == 32
        assert FunctionRing(2, 2).cardinality() == 16
        assert FunctionRing(2, 2).npoints == 4

    def test_principal_subgroup_membership(self):
        assert PrincipalSubgroup(2).contains(-6)
        assert not PrincipalSubgroup(2).contains(5)
        assert PrincipalSubgroup(0).contains(0)
        assert not PrincipalSubgroup(0).contains(3)
