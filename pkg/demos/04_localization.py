"""Localization with a transferred closure, and the prime correspondence.

Inverting the powers of 2 in the modular integers (m = 30) absorbs the
2-part of the modulus: the classes collapse onto Z/15, the transferred
closure still satisfies every axiom, and extension/contraction match the
S-avoiding primes with the primes downstairs.
"""

from approxalg import IdealShiftClosure, Z, ideal_generated
from approxalg.ideals import ApproxIdeal
from approxalg.localization import (
    check_ext_contr_bijection,
    check_iota_functorial,
    check_rad_eq_nil,
    check_rep_independence,
    check_transfer_axioms,
    extend,
    contract,
    localize,
    mult_set,
    prime_radical,
    radical,
)
from approxalg.rings import PrincipalSubgroup
from approxalg.spectrum import format_prime, spectrum

cl = IdealShiftClosure(Z, ideal_generated(Z, [30]))
loc = localize(Z, cl, mult_set(Z, [2]))
print(loc)
for verdict in loc.verdicts:
    print(f"  [{'pass' if verdict.passed else 'FAIL'}] {verdict.name}")

print("\nupstairs spectrum :", spectrum(Z, cl).labels())
ext, verdicts = extend(loc, PrincipalSubgroup(3))
print("extension of (3)  :", format_prime(loc.model, ext),
      [(v.name, v.passed) for v in verdicts])
back, _ = contract(loc, ext)
print("contracted back   :", f"({back.d})")

ext2, verdicts2 = extend(loc, PrincipalSubgroup(2))
print("extension of (2)  : blows up, proper =", verdicts2[0].passed)

verdict, matched = check_ext_contr_bijection(loc)
print("\nbijection verdict:", verdict.passed)
for p, e in matched:
    print(f"  {format_prime(Z, p)} <-> {format_prime(loc.model, e)}")

print("\ntransferred closure axiom suite:",
      check_transfer_axioms(loc).all_pass())
print("representative independence    :",
      check_rep_independence(loc).passed)
print("canonical map functorial       :",
      all(v.passed for v in check_iota_functorial(loc)))

# the radical identity upstairs and downstairs
rad = radical(Z, cl, ApproxIdeal(PrincipalSubgroup(0), cl))
inter = prime_radical(spectrum(Z, cl))
print(f"\nrad(0) = ({rad.canonical.d}) and the prime intersection is "
      f"({inter.d})")
print("localized model keeps the identity:",
      check_rad_eq_nil(loc.model, loc.transferred).passed)
