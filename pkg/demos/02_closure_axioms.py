"""Verifying the compatibility axioms of a closure operator.

The checker sweeps extensivity, monotonicity, idempotence, additive and
multiplicative compatibility, and subgroup absorption over every subset of
a small ring, and produces a replayable counterexample when an operator
breaks one of them.
"""

from approxalg import (
    IdealShiftClosure,
    ResidueRing,
    UnionFixedClosure,
    Z,
    check_axioms,
    ideal_generated,
    replay_counterexample,
)

z12 = ResidueRing(12)

# the modular model: cl(A) = <A> + (4)
cl = IdealShiftClosure(z12, ideal_generated(z12, [4]))
report = check_axioms(cl, mode="exhaustive")
print("modular closure on Z/12, all 4096 subsets:")
print(report.to_text())

# a deliberately broken operator: cl(A) = A | {1}
print()
broken = UnionFixedClosure(z12, [1])
report = check_axioms(broken, mode="exhaustive")
print("broken union operator:")
print(report.to_text())

worst = report.failed()[0]
print("\nreplaying the counterexample:",
      replay_counterexample(broken, worst.name, worst.counterexample))

# over the integers the check is a bounded sweep of principal subgroups
print()
clz = IdealShiftClosure(Z, ideal_generated(Z, [30]))
report = check_axioms(clz, gen_bound=500, mult_bound=60)
print("modular closure on Z (bounded verification):")
print(report.to_text())
