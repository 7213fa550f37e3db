"""The vectorized subset engine and the plain set-loop checker must agree.

Both paths quantify the same axioms over the same domains, so for small
rings their verdicts (and pass/fail pattern) have to match on passing and
on deliberately broken operators alike.
"""

import itertools

import pytest

from approxalg import (
    GeneratedIdealClosure,
    IdealShiftClosure,
    ProductRing,
    ResidueRing,
    SetShiftClosure,
    UnionFixedClosure,
    ideal_generated,
)
from approxalg.closures import _check_axioms_sets, check_axioms
from approxalg.reports import AxiomReport
from approxalg.rings import sort_key


def pure_python_report(cl):
    ring = cl.ring
    elems = sorted(ring.elements(), key=sort_key)
    subsets = []
    for r in range(len(elems) + 1):
        subsets.extend(frozenset(c) for c in itertools.combinations(elems, r))
    report = AxiomReport(mode="exhaustive")
    return _check_axioms_sets(cl, subsets, elems, report)


def closures_under_test():
    z6 = ResidueRing(6)
    z8 = ResidueRing(8)
    klein = ProductRing([ResidueRing(2), ResidueRing(2)])
    return [
        GeneratedIdealClosure(z6),
        IdealShiftClosure(z6, ideal_generated(z6, [2])),
        SetShiftClosure(z6, ideal_generated(z6, [3])),
        UnionFixedClosure(z6, [1]),
        UnionFixedClosure(z8, [2]),
        IdealShiftClosure(klein, ideal_generated(klein, [(1, 0)])),
        SetShiftClosure(klein, ideal_generated(klein, [(0, 1)])),
        UnionFixedClosure(klein, [(1, 1)]),
    ]


@pytest.mark.parametrize("cl", closures_under_test(),
                         ids=lambda c: f"{c.ring}-{c.name}")
def test_vectorized_and_loop_checkers_agree(cl):
    fast = check_axioms(cl, mode="exhaustive")
    slow = pure_python_report(cl)
    for axiom in AxiomReport.AXIOMS:
        assert fast.verdicts[axiom].passed == slow.verdicts[axiom].passed, \
            (axiom, fast.verdicts[axiom].to_dict(), slow.verdicts[axiom].to_dict())
