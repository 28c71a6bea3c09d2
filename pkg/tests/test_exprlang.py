import math

import numpy as np
import pytest

from besselneumann import (BesselNeumannError, DomainError, ParseError,
                           eval_jet, eval_point, parse)
from besselneumann.exprlang import (BinOp, Call, Const, Neg, Param, Pow, Var,
                                    free_parameters, to_text)

G_EXAMPLE = "exp(alpha*s)*(sin(s/3)+cos(s))"


class TestParse:
    def test_example_expression(self):
        ast = parse(G_EXAMPLE)
        assert free_parameters(ast) == {"alpha"}

    def test_power_and_division(self):
        ast = parse("s^2/2")
        assert isinstance(ast, BinOp) and ast.op == "/"
        assert isinstance(ast.left, Pow) and ast.left.exponent == 2
        assert isinstance(ast.left.base, Var)

    def test_truncated_call(self):
        with pytest.raises(ParseError) as exc:
            parse("sin(")
        assert exc.value.position == 4

    def test_unknown_function(self):
        with pytest.raises(ParseError):
            parse("tan(s)")

    def test_unexpected_character(self):
        with pytest.raises(ParseError) as exc:
            parse("1 + #")
        assert exc.value.position == 4

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse("1 + 2 )")

    def test_precedence(self):
        assert eval_point(parse("2+3*4"), 0.0) == 14.0
        assert eval_point(parse("(2+3)*4"), 0.0) == 20.0
        # unary minus looser than '^': -2^2 = -(2^2)
        assert eval_point(parse("-2^2"), 0.0) == -4.0
        # but tighter than '*': 2*-3 is a parse of 2*(-3)
        assert eval_point(parse("2*-3"), 0.0) == -6.0

    def test_fractional_exponent_rejected(self):
        with pytest.raises(ParseError):
            parse("s^2.5")
        with pytest.raises(ParseError):
            parse("s^-1")

    def test_scientific_notation(self):
        assert eval_point(parse("1e-3 + 2.5E2"), 0.0) == pytest.approx(250.001)

    def test_function_name_as_parameter_rejected(self):
        with pytest.raises(ParseError):
            parse("sin * 2")


class TestEvalJet:
    def test_example_first_coeffs(self):
        # g(0) = 1, g'(0) = alpha + 1/3 by the product rule
        jet = eval_jet(parse(G_EXAMPLE), 2, {"alpha": 0.5})
        assert np.allclose(jet.coeffs, [1.0, 5 / 6], rtol=1e-15, atol=0)

    def test_exp(self):
        jet = eval_jet(parse("exp(s)"), 4)
        assert np.allclose(jet.coeffs, [1, 1, 1 / 2, 1 / 6], rtol=0, atol=1e-16)

    def test_log_of_s_not_analytic(self):
        with pytest.raises(DomainError):
            eval_jet(parse("log(s)"), 5)

    def test_division_by_vanishing_series(self):
        with pytest.raises(DomainError):
            eval_jet(parse("1/s"), 5)

    def test_unbound_parameter(self):
        with pytest.raises(BesselNeumannError):
            eval_jet(parse("beta*s"), 3, {})


class TestEvalPoint:
    def test_example_at_zero(self):
        assert eval_point(parse(G_EXAMPLE), 0.0, {"alpha": 0.5}) == pytest.approx(1.0)

    def test_monomial(self):
        assert eval_point(parse("s^2/2"), 3.0) == 4.5

    def test_example_at_one(self):
        # e^{1/2} (sin(1/3) + cos(1)), frozen from scalar math
        got = eval_point(parse(G_EXAMPLE), 1.0, {"alpha": 0.5})
        assert got == pytest.approx(1.4302607605612239, abs=1e-15)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            eval_point(parse("log(s)"), -1.0)
        with pytest.raises(DomainError):
            eval_point(parse("sqrt(s)"), -4.0)
        with pytest.raises(DomainError):
            eval_point(parse("1/s"), 0.0)


@pytest.mark.parametrize("text,params", [
    (G_EXAMPLE, {"alpha": 0.5}),
    ("exp(s)*cos(s)-s^3/6", {}),
    ("sqrt(4+s^2)", {}),
    ("log(2+sin(s))", {}),
    ("-s*exp(-s)", {}),
])
class TestConsistency:
    def test_jet_sums_to_point_value(self, text, params):
        # order-60 jet evaluated as a polynomial must match pointwise
        # evaluation to 1e-12 relative for |s| <= 1
        ast = parse(text)
        jet = eval_jet(ast, 60, params)
        for s in (-1.0, -0.5, -0.1, 0.0, 0.3, 0.77, 1.0):
            direct = eval_point(ast, s, params)
            summed = jet(s)
            assert abs(summed - direct) <= 1e-12 * max(1.0, abs(direct))

    def test_print_parse_round_trip(self, text, params):
        ast = parse(text)
        again = parse(to_text(ast))
        assert again == ast
        assert to_text(again) == to_text(ast)
