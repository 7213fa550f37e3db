"""The approximate prime spectrum of the integers under a modular closure.

With cl(A) = <A> + mZ the spectrum collapses to the primes dividing m and
the topology becomes finite and discrete, unlike the classical picture
where the zero ideal is a dense generic point.
"""

from approxalg import GeneratedIdealClosure, IdealShiftClosure, Z, ideal_generated
from approxalg.rings import PrincipalSubgroup
from approxalg.spectrum import (
    closure_of_point,
    d_set,
    format_prime,
    spectrum,
    topology_check,
    v_set,
)


def shift(m):
    return IdealShiftClosure(Z, ideal_generated(Z, [m]))


for m in [12, 30, 60, 97]:
    print(f"m = {m:3d}:  Spec =", spectrum(Z, shift(m)).labels())

print()
sp = spectrum(Z, shift(30))
closed = v_set(sp, ideal_generated(Z, [12]))
print("V((12)) at m=30:", closed.labels(Z))
print("D(12)   at m=30:", [format_prime(Z, p) for p in d_set(sp, 12)])
print("closure of {(3)}:", closure_of_point(sp, PrincipalSubgroup(3)).labels(Z))

print("\ntopology facts at m=30:")
for verdict in topology_check(sp, z_ideal_bound=60):
    mark = "pass" if verdict.passed else "FAIL"
    print(f"  [{mark}] {verdict.name}")

# contrast: the classical closure, enumerated up to a bound
print("\nclassical closure (bounded enumeration up to 40):")
classical = spectrum(Z, GeneratedIdealClosure(Z), z_bound=40)
print("primes:", classical.labels()[:6], "...")
byname = {v.name: v for v in topology_check(classical, z_ideal_bound=30)}
print("T0:", byname["T0"].passed, " T1:", byname["T1"].passed,
      " (the zero ideal sits under every other prime)")
