import pytest

from approxalg import polynomials as poly
from approxalg.rings import FunctionRing


def test_uni_rem_reduces_degree():
    # x^5 mod (x^5) = 0, x^6 mod (x^5) = 0
    mod = (0, 0, 0, 0, 0, 1)
    assert poly.uni_rem(2, (0, 0, 0, 0, 0, 1), mod) == ()
    assert poly.uni_rem(2, (0, 0, 0, 0, 0, 0, 1), mod) == ()


def test_uni_mul_matches_convolution():
    # (x+1)^2 = x^2 + 1 over F2
    assert poly.uni_mul(2, (1, 1), (1, 1)) == (1, 0, 1)


def test_uni_rem_requires_monic():
    with pytest.raises(ValueError):
        poly.uni_rem(3, (1, 1), (2, 2))


def test_uni_to_str():
    assert poly.uni_to_str((1, 0, 0, 1, 1)) == "x^4+x^3+1"
    assert poly.uni_to_str(()) == "0"


def test_m_eval_exact_integers():
    f = {(2, 0): 3, (0, 1): -1, (0, 0): 7}
    assert poly.m_eval(f, (2, 5)) == 3 * 4 - 5 + 7


def test_m_mul_with_fn_ring_reduction():
    p = 2
    red = poly.fn_ring_exp_reducer(p)
    x = poly.m_var(0, 1)
    # x * x = x^2 = x in the function ring over F2
    assert poly.m_mul(x, x, p, red) == {(1,): 1}


@pytest.mark.parametrize("p,nvars", [(2, 1), (2, 2), (3, 1)])
def test_table_and_reduced_form_agree_everywhere(p, nvars):
    ring = FunctionRing(p, nvars)
    for v in ring.elements():
        mp = ring.to_mpoly(v)
        for point, value in zip(ring.points, v):
            assert poly.m_eval(mp, point, p) == value
        assert ring.from_mpoly(mp) == v


def test_m_to_str_ordering():
    f = {(1, 1): 1, (1, 0): 1}
    assert poly.m_to_str(f, ["x1", "x2"]) == "x1*x2+x1"
