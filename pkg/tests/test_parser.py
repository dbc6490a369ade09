"""Expression grammar, context resolution, and parse/print round-trips."""

import random

import pytest

from smashcalc import frt
from smashcalc.errors import ExprSyntaxError, UnknownGenerator
from smashcalc.fixtures import c2_hopf, dual_numbers, h4_action, sign_action
from smashcalc.action import TrivialAction
from smashcalc.parser import (AlgebraContext, FormsContext, FreeWordContext,
                              ScalarContext, SmashContext, parse_expression,
                              parse_scalar, tokenize)
from smashcalc.scalars import ONE, Q, Scalar, integer, qpow
from smashcalc.smash import SmashAlgebra


@pytest.fixture(scope="module")
def plane():
    return frt.quantum_plane_presentation()


@pytest.fixture(scope="module")
def plane_forms():
    return frt.quantum_plane_forms()


def test_tokenizer_positions():
    toks = tokenize("x + y^2")
    assert [(k, p) for k, _, p in toks] == [
        ("ident", 0), ("+", 2), ("ident", 4), ("^", 5), ("int", 6), ("end", 7)]
    with pytest.raises(ExprSyntaxError) as err:
        tokenize("x + $")
    assert "position 4" in str(err.value)


def test_plane_normalization(plane):
    ctx = AlgebraContext(plane)
    t = parse_expression("q*x*y - y*x", ctx)
    assert t == {(1, 0): Q * Q - ONE}
    assert ctx.print_terms(t) == "(q^2 - 1)*y*x"


def test_parse_is_normal_form(plane):
    # x*y rewrites immediately: the parser's product is the algebra's.
    ctx = AlgebraContext(plane)
    assert parse_expression("x*y", ctx) == {(1, 0): Q}


def test_scalar_literals():
    assert parse_scalar("q") == Q
    assert parse_scalar("q^-1") == qpow(-1)
    assert parse_scalar("q^2 - 1") == Q * Q - ONE
    assert parse_scalar("(q^2 - 1)/(q)") == (Q * Q - ONE) * qpow(-1)
    assert parse_scalar("-3/2") == integer(-3) * integer(2).inv()
    assert parse_scalar("2^3") == integer(8)
    assert parse_scalar("0") == Scalar((0,))


def test_scalar_context_rejects_names():
    with pytest.raises(UnknownGenerator):
        parse_scalar("x + 1")


def test_powers_and_division(plane):
    ctx = AlgebraContext(plane)
    assert parse_expression("x^2*y", ctx) == parse_expression("x*x*y", ctx)
    assert parse_expression("y^0", ctx) == {(): ONE}
    assert parse_expression("x/2", ctx) == {(0,): integer(2).inv()}
    with pytest.raises(ExprSyntaxError):
        parse_expression("x/y", ctx)
    with pytest.raises(ExprSyntaxError):
        parse_expression("x^-1", ctx)
    with pytest.raises(ExprSyntaxError):
        parse_expression("x/0", ctx)


def test_unknown_generator(plane):
    ctx = AlgebraContext(plane)
    with pytest.raises(UnknownGenerator) as err:
        parse_expression("x*z", ctx)
    assert "'z'" in str(err.value)


def test_syntax_errors_carry_positions(plane):
    ctx = AlgebraContext(plane)
    for text, pos in [("x*", 2), ("(x", 2), ("x + + y", 4), ("x y", 2)]:
        with pytest.raises(ExprSyntaxError) as err:
            parse_expression(text, ctx)
        assert "position %d" % pos in str(err.value)


def test_zero_and_cancellation(plane):
    ctx = AlgebraContext(plane)
    assert parse_expression("0", ctx) == {}
    assert parse_expression("x - x", ctx) == {}
    assert ctx.print_terms({}) == "0"
    assert parse_expression("0", ctx) == parse_expression("x - x", ctx)


def test_d_in_forms_context(plane_forms):
    fc = FormsContext(plane_forms)
    lhs = parse_expression("d(x*y)", fc)
    rhs = parse_expression("d(x)*y + x*d(y)", fc)
    assert lhs == rhs
    assert parse_expression("d(d(x*y))", fc) == {}


def test_d_needs_a_differential(plane):
    ctx = AlgebraContext(plane)
    with pytest.raises(ExprSyntaxError):
        parse_expression("d(x)", ctx)
    # 'd' with no parenthesis is an ordinary identifier
    with pytest.raises(UnknownGenerator):
        parse_expression("d*x", ctx)


def test_hash_needs_a_smash_context(plane):
    ctx = AlgebraContext(plane)
    with pytest.raises(ExprSyntaxError):
        parse_expression("x#1", ctx)


def test_fd_smash_names_and_action():
    sc = SmashContext(SmashAlgebra(sign_action()))
    # g acts on s by -1, so (1#g)(s#1) = -s#g
    t = parse_expression("s#g - 2*(1#g)*(s#1)", sc)
    assert t == {((0,), 1): integer(3)}
    assert sc.print_terms(t) == "3*s#g"
    assert parse_expression(sc.print_terms(t), sc) == t


def test_fd_composite_basis_name_is_a_product():
    sc = SmashContext(SmashAlgebra(h4_action()))
    # the printed basis name "g*x" is parseable as the product it denotes
    t = parse_expression("1#g*x", sc)
    (pair,) = t
    assert sc.smash.hopf.key_str(pair[1]) == "g*x"


def test_ambiguous_name_is_refused():
    smash = SmashAlgebra(TrivialAction(c2_hopf(), dual_numbers("g")))
    sc = SmashContext(smash)
    with pytest.raises(UnknownGenerator) as err:
        parse_expression("g", sc)
    assert "both legs" in str(err.value)


def test_free_word_context_does_not_rewrite():
    ctx = FreeWordContext({"x": 0, "y": 1})
    assert parse_expression("x*y", ctx) == {(0, 1): ONE}
    assert parse_expression("y^2*x", ctx) == {(1, 1, 0): ONE}
    with pytest.raises(UnknownGenerator):
        parse_expression("z", ctx)


def test_round_trip_plane(plane):
    ctx = AlgebraContext(plane)
    rng = random.Random(11)
    for _ in range(200):
        e = plane.random_element(rng, 4, 3).terms
        assert parse_expression(ctx.print_terms(e), ctx) == e


def test_round_trip_forms(plane_forms):
    fc = FormsContext(plane_forms)
    rng = random.Random(12)
    for _ in range(200):
        e = plane_forms.pres.random_element(rng, 3, 3).terms
        assert parse_expression(fc.print_terms(e), fc) == e


def test_round_trip_frt_smash():
    R = frt.standard_sl2_r()
    b = frt.frt_bialgebra(R)
    rf, rep = frt.r_form(b)
    rep.require("r-form gate")
    pl = frt.quantum_plane_presentation()
    com = frt.quantum_plane(b, pl)
    smash = SmashAlgebra(frt.induced_action(com, rf))
    sc = SmashContext(smash)
    assert parse_expression("(1#T11)*(x#1)", sc) == {((0,), (0,)): Q}
    rng = random.Random(13)
    for _ in range(120):
        a = pl.random_element(rng, 2, 2).terms
        h = b.pres.random_element(rng, 2, 2).terms
        e = smash.mul_terms(smash.embed_a(a).terms, smash.embed_h(h).terms)
        assert parse_expression(sc.print_terms(e), sc) == e


def test_degree_readout(plane_forms):
    fc = FormsContext(plane_forms)
    assert fc.degrees(parse_expression("d(x*y)*y", fc)) == (3, 1)
    assert fc.degrees(parse_expression("d(x)*d(y)", fc)) == (2, 2)
    assert fc.degrees({}) == (0, 0)
    assert fc.degrees(parse_expression("q", fc)) == (0, 0)


def test_scalar_of_discriminates(plane):
    ctx = AlgebraContext(plane)
    assert ctx.scalar_of(parse_expression("q^2/2", ctx)) == Q * Q * integer(2).inv()
    assert ctx.scalar_of(parse_expression("x", ctx)) is None
    assert ctx.scalar_of({}).is_zero
    sctx = ScalarContext()
    assert sctx.print_terms(parse_expression("q^-2", sctx)) == "1/(q^2)"
