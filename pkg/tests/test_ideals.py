import itertools

import numpy as np
import pytest

from approxalg import (
    GeneratedIdealClosure,
    IdealShiftClosure,
    PreconditionError,
    ProductRing,
    ResidueRing,
    SetShiftClosure,
    Z,
    enumerate_subgroups,
    ideal_generated,
    subgroup_generated,
)
from approxalg.homs import identity_hom, reduction_hom
from approxalg.ideals import (
    ApproxIdeal,
    approx_product,
    check_thm_ring_prime,
    factorization_check,
    image_transfer,
    is_approx_ideal,
    is_approx_prime,
    is_approx_prime_ring,
    preimage_transfer,
    quotient_ring,
    z_prime_bruteforce,
    z_prime_bruteforce_grid,
)
from approxalg.rings import ElementSet, PrincipalSubgroup, is_prime

Z12 = ResidueRing(12)


def shift(ring, gens):
    return IdealShiftClosure(ring, ideal_generated(ring, gens))


class TestIsApproxIdeal:
    def test_classical_ideal_is_approximate(self):
        ok, ce = is_approx_ideal(subgroup_generated(Z12, [3]),
                                 GeneratedIdealClosure(Z12))
        assert ok and ce is None

    def test_non_subgroup_rejected(self):
        bad = ElementSet(Z12, [0, 1])
        ok, ce = is_approx_ideal(bad, GeneratedIdealClosure(Z12))
        assert not ok and ce["reason"] == "not-a-subgroup"

    def test_gray_diagonal_in_residue_model(self):
        # the Z/5^3 model of the gray-pixel setup; the shift ideal collapses
        # to zero, so the closure of the diagonal is its full ideal span
        ring = ProductRing([ResidueRing(5)] * 3)
        diag = subgroup_generated(ring, [(1, 1, 1)])
        j = ideal_generated(ring, [(5, 5, 5)])  # the zero ideal mod 5
        cl = IdealShiftClosure(ring, j)

        # independent oracle: close the diagonal into an ideal by fixpoint
        span = set(diag.values)
        changed = True
        while changed:
            new = {ring.mul(r, s) for r in ring.elements() for s in span}
            new |= {ring.add(a, b) for a in span for b in span}
            new |= {ring.neg(a) for a in span}
            changed = not new <= span
            span |= new
        expected = all(ring.mul(r, s) in span
                       for r in ring.elements() for s in diag.values)

        ok, _ = is_approx_ideal(diag, cl)
        assert ok == expected
        assert ok  # the ideal span of the diagonal is everything

    def test_setshift_diagonal_not_absorbed(self):
        # with the elementwise shift by the zero ideal the diagonal keeps
        # its own closure, and componentwise scalars escape it
        ring = ProductRing([ResidueRing(5)] * 3)
        diag = subgroup_generated(ring, [(1, 1, 1)])
        cl = SetShiftClosure(ring, ideal_generated(ring, []))
        ok, ce = is_approx_ideal(diag, cl)
        assert not ok
        assert ce["reason"] == "absorption"


class TestIsApproxPrime:
    def test_example_divisor_of_modulus(self):
        ok, _ = is_approx_prime(PrincipalSubgroup(3), shift(Z, [12]))
        assert ok

    def test_example_non_divisor(self):
        ok, ce = is_approx_prime(PrincipalSubgroup(5), shift(Z, [12]))
        assert not ok
        assert ce == {"reason": "closure-is-whole-ring", "x": 1, "y": 1}

    def test_example_composite_divisor(self):
        ok, ce = is_approx_prime(PrincipalSubgroup(4), shift(Z, [12]))
        assert not ok
        # 2*2 = 4 lies in cl(P) = (4) but 2 is outside (4)
        assert ce["product"] % 4 == 0

    def test_improper_input_raises(self):
        with pytest.raises(PreconditionError):
            is_approx_prime(PrincipalSubgroup(1), shift(Z, [12]))
        whole = subgroup_generated(Z12, [1])
        with pytest.raises(PreconditionError):
            is_approx_prime(whole, GeneratedIdealClosure(Z12))

    def test_finite_ring_primes(self):
        gen = GeneratedIdealClosure(Z12)
        ok, _ = is_approx_prime(subgroup_generated(Z12, [2]), gen)
        assert ok
        ok, _ = is_approx_prime(subgroup_generated(Z12, [4]), gen)
        assert not ok

    def test_closed_form_agrees_with_bruteforce(self):
        for m in [2, 6, 12, 30, 60]:
            cl = shift(Z, [m])
            for d in list(range(0, 40)) + [97, 120]:
                if d == 1:
                    continue
                closed, _ = is_approx_prime(PrincipalSubgroup(d), cl)
                brute, _ = z_prime_bruteforce(cl, d, bound=2 * m)
                assert closed == brute, (m, d)

    def test_vectorized_sweep_matches_definition(self):
        for m in range(2, 61):
            swept = z_prime_bruteforce_grid(m, 200)
            expected = np.array(
                [d > 1 and is_prime(d) and m % d == 0 for d in range(201)])
            assert (swept == expected).all(), m


class TestApproxProduct:
    def test_modular_product(self):
        cl = shift(Z, [12])
        a = ApproxIdeal(PrincipalSubgroup(2), cl)
        b = ApproxIdeal(PrincipalSubgroup(3), cl)
        assert approx_product(a, b).canonical.d == 6

    def test_zero_ideal_factor(self):
        cl = shift(Z, [12])
        zero = ApproxIdeal(PrincipalSubgroup(0), cl)
        b = ApproxIdeal(PrincipalSubgroup(3), cl)
        assert approx_product(zero, b).canonical.d == 12  # cl(0) = (12)

    def test_classical_square_in_z12(self):
        gen = GeneratedIdealClosure(Z12)
        a = ApproxIdeal(subgroup_generated(Z12, [2]), gen)
        assert sorted(approx_product(a, a).canonical.values) == [0, 4, 8]


class TestQuotientRing:
    def test_integer_quotient_classes(self):
        cl = shift(Z, [6])
        q = quotient_ring(Z, ApproxIdeal(PrincipalSubgroup(4), cl))
        assert q.class_count() == 2

    def test_z12_by_three(self):
        gen = GeneratedIdealClosure(Z12)
        q = quotient_ring(Z12, ApproxIdeal(subgroup_generated(Z12, [3]), gen))
        assert q.class_count() == 3
        assert q.ok()

    def test_zero_ideal_with_shift_closure(self):
        cl = shift(Z12, [6])
        q = quotient_ring(Z12, ApproxIdeal(subgroup_generated(Z12, []), cl))
        assert q.class_count() == 6
        assert q.ok()

    def test_representative_independence_recorded(self):
        cl = shift(Z12, [4])
        q = quotient_ring(Z12, ApproxIdeal(subgroup_generated(Z12, [2]), cl))
        names = [v.name for v in q.verdicts]
        assert "addition-well-defined" in names
        assert "multiplication-well-defined" in names
        assert q.ok()


class TestFactorization:
    def test_instance_with_closed_prime(self):
        cl = shift(Z, [30])
        a = ApproxIdeal(PrincipalSubgroup(3), cl)
        b = ApproxIdeal(PrincipalSubgroup(3), cl)
        c = ApproxIdeal(PrincipalSubgroup(7), cl)
        verdict = factorization_check(a, b, c)
        assert verdict.hypotheses_hold
        assert verdict.conclusion_holds

    def test_improper_factor_rejected(self):
        cl = shift(Z, [30])
        a = ApproxIdeal(PrincipalSubgroup(3), cl)
        b = ApproxIdeal(PrincipalSubgroup(3), cl)
        c = ApproxIdeal(PrincipalSubgroup(1), cl)
        verdict = factorization_check(a, b, c)
        assert not verdict.hypotheses["C-proper"]
        assert verdict.theorem_respected

    def test_exhaustive_scan_over_z12_triples(self):
        cl = shift(Z12, [6])
        ideals = []
        for sub in enumerate_subgroups(Z12):
            ok, _ = is_approx_ideal(sub, cl)
            if ok:
                ideals.append(ApproxIdeal(sub, cl, check=False))
        for a, b, c in itertools.product(ideals, repeat=3):
            verdict = factorization_check(a, b, c)
            assert verdict.theorem_respected, (a, b, c)


class TestPrimeRing:
    def test_z6_is_not_prime_and_equivalence_holds(self):
        z6 = ResidueRing(6)
        verdict = check_thm_ring_prime(z6, GeneratedIdealClosure(z6))
        assert verdict.passed
        assert verdict.details["prime-ring"] is False

    def test_z5_is_prime(self):
        z5 = ResidueRing(5)
        verdict = check_thm_ring_prime(z5, GeneratedIdealClosure(z5))
        assert verdict.passed
        assert verdict.details["prime-ring"] is True

    def test_integers_with_trivial_shift(self):
        ok, _ = is_approx_prime_ring(Z, shift(Z, [0]))
        assert ok
        assert check_thm_ring_prime(Z, shift(Z, [0])).passed

    def test_equivalence_across_finite_suite(self):
        for ring in [ResidueRing(4), ResidueRing(6), ResidueRing(7), Z12]:
            for cl in [GeneratedIdealClosure(ring), shift(ring, [ring.canon(2)])]:
                assert check_thm_ring_prime(ring, cl).passed


class TestHomTransfer:
    def test_preimage_of_prime(self):
        f = reduction_hom(Z, Z12)
        cl_src = shift(Z, [12])
        cl_dst = GeneratedIdealClosure(Z12)
        j = ApproxIdeal(subgroup_generated(Z12, [3]), cl_dst)
        pre, verdicts = preimage_transfer(f, j, cl_src, cl_dst)
        assert pre.base.d == 3
        assert all(v.passed for v in verdicts)
        names = [v.name for v in verdicts]
        assert "preimage-is-approx-prime" in names

    def test_preimage_of_zero_is_kernel_not_prime(self):
        f = reduction_hom(Z, Z12)
        cl_src = shift(Z, [12])
        cl_dst = GeneratedIdealClosure(Z12)
        j = ApproxIdeal(subgroup_generated(Z12, []), cl_dst)
        pre, verdicts = preimage_transfer(f, j, cl_src, cl_dst)
        assert pre.base.d == 12
        # (12) = 3*4 is not approximately prime, but the zero ideal of Z/12
        # is not prime either, so no primeness claim is made
        assert all(v.passed for v in verdicts)

    def test_identity_transfer(self):
        f = identity_hom(Z12)
        cl = GeneratedIdealClosure(Z12)
        j = ApproxIdeal(subgroup_generated(Z12, [3]), cl)
        pre, _ = preimage_transfer(f, j, cl, cl)
        assert pre.base.values == j.base.values

    def test_image_of_prime_with_kernel_inside(self):
        f = reduction_hom(Z, Z12)
        cl_src = shift(Z, [12])
        cl_dst = GeneratedIdealClosure(Z12)
        i = ApproxIdeal(PrincipalSubgroup(3), cl_src)
        img, verdicts = image_transfer(f, i, cl_src, cl_dst)
        assert sorted(img.base.values) == [0, 3, 6, 9]
        assert all(v.passed for v in verdicts)
        assert "image-is-approx-prime" in [v.name for v in verdicts]

    def test_image_primeness_clause_skipped_when_kernel_outside(self):
        f = reduction_hom(Z, Z12)
        cl_src = shift(Z, [12])
        cl_dst = GeneratedIdealClosure(Z12)
        i = ApproxIdeal(PrincipalSubgroup(5), cl_src)
        img, verdicts = image_transfer(f, i, cl_src, cl_dst)
        names = [v.name for v in verdicts]
        assert "image-primeness-clause-skipped" in names
        assert all(v.passed for v in verdicts)

    def test_pullback_identity_reported(self):
        f = reduction_hom(Z, Z12)
        cl_src = shift(Z, [12])
        cl_dst = GeneratedIdealClosure(Z12)
        i = ApproxIdeal(PrincipalSubgroup(3), cl_src)
        _, verdicts = image_transfer(f, i, cl_src, cl_dst)
        pullback = [v for v in verdicts if v.name == "pullback-identity"]
        assert pullback and pullback[0].passed
