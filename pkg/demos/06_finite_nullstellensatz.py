"""The radical identity rad(I) = I(V(I)) over finite function rings.

Everything is enumerable: varieties by brute force over the point grid,
radicals by walking power orbits, and the two hypotheses (evaluation
separation, pointwise primeness of the point ideals) by direct check.
"""

from fractions import Fraction

from approxalg import FunctionRing, ideal_generated
from approxalg.closures import PointwiseClosure, SamplingClosure, ToleranceClosure
from approxalg.nullstellensatz import (
    all_function_ring_ideals,
    check_ans,
    check_esep,
    check_pp,
    check_tolerance_balanced,
    rad_phi,
    search_esep_without_pp,
    tolerance_case_grid,
    vanishing_ideal,
    variety,
)

ring = FunctionRing(2, 2)
pw = PointwiseClosure(ring)

ideal = ideal_generated(ring, [ring.from_mpoly({(1, 1): 1})])  # <x1*x2>
v = variety(ring, ideal)
print("V(<x1*x2>) over F2^2:", v.sorted_points())

rad = rad_phi(ring, ideal, pw)
vanish = vanishing_ideal(ring, v.points)
print("rad(I) size:", len(rad.canonical.values),
      " I(V(I)) size:", len(vanish.canonical.values),
      " equal:", frozenset(rad.canonical.values)
      == frozenset(vanish.canonical.values))

ideals = all_function_ring_ideals(ring)
print("\nhypotheses and the identity over all", len(ideals), "ideals:")
print(" ", check_esep(pw, ideals).to_dict()["verdict"], "evaluation separation")
print(" ", check_pp(pw).to_dict()["verdict"], "point ideals prime and closed")
print(" ", check_ans(pw, ideals).to_dict()["verdict"], "rad(I) = I(V(I))")

# a sampling closure whose family covers the grid behaves the same way
samp = SamplingClosure(ring, [{(0, 0), (0, 1)}, {(1, 0), (1, 1)}])
print("\nsampling closure over a covering family:",
      check_ans(samp, ideals).passed)

# without pointwise primeness the reverse inclusion can genuinely fail
findings = search_esep_without_pp(FunctionRing(2, 1))
print("\nseparation without pointwise primeness (search findings):")
for f in findings:
    print("  closure", f["closure"], "on ideal", f["ideal"],
          f"-> radical {f['radical-size']} > vanishing {f['vanishing-size']}")

# tolerance closures obey the balanced multiplicativity rule
tol = ToleranceClosure(1, [(0,), (1,), (2,)],
                       [Fraction(1, 2), Fraction(2), Fraction(0)])
verdict, checked = check_tolerance_balanced(
    tol, tolerance_case_grid(nvars=1, seed=11, count=400))
print(f"\nbalanced rule over {checked} member cases:", verdict.passed)
