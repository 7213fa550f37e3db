from fractions import Fraction

import pytest

from approxalg import (
    FunctionRing,
    ParseError,
    PolyQuotient,
    ProductRing,
    ResidueRing,
    Z,
)
from approxalg.closures import (
    GeneratedIdealClosure,
    IdealShiftClosure,
    PointwiseClosure,
    SamplingClosure,
    SetShiftClosure,
    ToleranceClosure,
)
from approxalg.grammar import (
    parse_closure,
    parse_element,
    parse_generators,
    parse_point,
    parse_poly,
    parse_ring,
)


class TestRingGrammar:
    @pytest.mark.parametrize("text,expected", [
        ("Z", "Z"),
        ("Zn:12", "Zn:12"),
        ("prod:[Zn:2,Zn:2]", "prod:[Zn:2,Zn:2]"),
        ("prod:[Z,Z,Z]", "prod:[Z,Z,Z]"),
        ("GF:2/x^5", "GF:2/x^5"),
        ("Fun:p=2,n=2", "Fun:p=2,n=2"),
    ])
    def test_round_trip(self, text, expected):
        assert parse_ring(text).spec_string() == expected

    def test_nested_products(self):
        ring = parse_ring("prod:[Zn:2,prod:[Zn:3,Zn:3]]")
        assert ring.cardinality() == 18

    @pytest.mark.parametrize("bad", ["Foo", "Zn:x", "GF:4/x^2", "Fun:p=2",
                                     "prod:[Zn:2", "Zn:1"])
    def test_bad_specs_raise(self, bad):
        with pytest.raises(Exception) as err:
            parse_ring(bad)
        assert err.type.__name__ in ("ParseError", "PreconditionError")

    def test_parse_error_carries_position(self):
        with pytest.raises(ParseError) as err:
            parse_ring("what")
        assert "position" in str(err.value)


class TestElementGrammar:
    def test_integers(self):
        assert parse_element(Z, "-42") == -42

    def test_residues_canonicalize(self):
        assert parse_element(ResidueRing(12), "25") == 1

    def test_product_tuples(self):
        ring = ProductRing([Z, Z, Z])
        assert parse_element(ring, "(130,135,125)") == (130, 135, 125)

    def test_polynomials(self):
        gf = PolyQuotient(2, (0, 0, 0, 0, 0, 1))
        assert parse_element(gf, "x^4+x^3+1") == (1, 0, 0, 1, 1)
        assert parse_element(gf, "x^5") == ()  # reduced by the modulus

    def test_function_ring_elements(self):
        fr = FunctionRing(2, 2)
        v = parse_element(fr, "x1*x2+x1")
        assert v == tuple((a * b + a) % 2 for a, b in fr.points)

    def test_generator_lists(self):
        gens = parse_generators(ProductRing([Z, Z]), "(1,1),(0,5)")
        assert gens == [(1, 1), (0, 5)]
        assert parse_generators(Z, "") == []

    def test_points(self):
        assert parse_point("(0,)") == (0,)
        assert parse_point("(1,2)") == (1, 2)

    def test_poly_parser_rejects_garbage(self):
        with pytest.raises(ParseError):
            parse_poly("x+", univar=True)
        with pytest.raises(ParseError):
            parse_poly("y^2", univar=True)


class TestClosureGrammar:
    def test_generated(self):
        assert isinstance(parse_closure(Z, "gen"), GeneratedIdealClosure)

    def test_integer_shift(self):
        cl = parse_closure(Z, "shift:J=30")
        assert isinstance(cl, IdealShiftClosure)
        assert cl.shift_ideal.canonical.d == 30

    def test_lattice_shift_uses_scalar_modulus(self):
        ring = ProductRing([Z, Z, Z])
        cl = parse_closure(ring, "shift:J=5")
        assert cl.shift_modulus == 5

    def test_finite_setshift(self):
        gf = parse_ring("GF:2/x^5")
        cl = parse_closure(gf, "setshift:J=x")
        assert isinstance(cl, SetShiftClosure)
        assert len(cl.shift_ideal.canonical.values) == 16

    def test_pointwise_requires_function_ring(self):
        fr = parse_ring("Fun:p=2,n=2")
        assert isinstance(parse_closure(fr, "pointwise"), PointwiseClosure)
        with pytest.raises(Exception):
            parse_closure(Z, "pointwise")

    def test_sampling_family(self):
        fr = parse_ring("Fun:p=2,n=2")
        cl = parse_closure(fr, "sample:[{(0,0),(0,1)},{(1,0),(1,1)}]")
        assert isinstance(cl, SamplingClosure)
        assert len(cl.family) == 2

    def test_tolerance_items(self):
        cl = parse_closure(Z, "tol:[{point:(0,), tau:1/2},{point:(1,), tau:2}]")
        assert isinstance(cl, ToleranceClosure)
        assert cl.taus == (Fraction(1, 2), Fraction(2))

    def test_unknown_closure(self):
        with pytest.raises(ParseError):
            parse_closure(Z, "magic")
