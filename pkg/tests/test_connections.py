"""Vertical fields, connection forms, and the connection bijections."""

import pytest

from smashcalc.calculus import standard_calculus
from smashcalc.connections import (ConnectionContext, check_affine_structure,
                                   check_connection_bijection,
                                   check_vertical_geometry, phi_add)
from smashcalc.errors import (FeatureDisabled, TheoremViolation,
                              UnverifiedFormula)
from smashcalc.fixtures import h4_action, sign_action
from smashcalc.ncalg import _acc
from smashcalc.scalars import ONE


@pytest.fixture(scope="module")
def sign_ctx():
    return ConnectionContext(standard_calculus(sign_action(), max_degree=3))


@pytest.fixture(scope="module")
def h4_ctx():
    return ConnectionContext(standard_calculus(h4_action(), max_degree=3))


def test_coinvariant_dimensions(sign_ctx, h4_ctx):
    assert sign_ctx.h_dim == 1
    assert h4_ctx.h_dim == 3


def test_coinvariant_bases(sign_ctx, h4_ctx):
    # kC2: the lone left coinvariant of the universal one-forms is g dg
    assert sign_ctx.inv_basis() == [{(1, 1): ONE}]
    # H4 (basis 1, g, x, gx): g dg, g dx, and d(gx) + x dg
    assert h4_ctx.inv_basis() == [{(1, 1): ONE}, {(1, 2): ONE},
                                  {(0, 3): ONE, (2, 1): ONE}]


def test_inv_express_rejects_non_coinvariants(sign_ctx):
    # dg alone is not left-coinvariant: lambda(dg) = g (x) dg
    with pytest.raises(TheoremViolation):
        sign_ctx.inv_express({(0, 1): ONE})


def test_fundamental_field_value(sign_ctx):
    # 1 # dg factors as (1 # g)(1 # g dg), so <1 # dg, X_0 bar> = 1 # g
    dg = {(0, (0,), 1, (0, 1)): ONE}
    assert sign_ctx.fvf_pair(dg, 0) == {(0, 1): ONE}


def test_vertical_geometry_sign(sign_ctx):
    rep = check_vertical_geometry(sign_ctx)
    assert rep.ok, rep.summary()


def test_vertical_geometry_h4(h4_ctx):
    rep = check_vertical_geometry(h4_ctx)
    assert rep.ok, rep.summary()


def test_connection_bijection_sign(sign_ctx):
    rep = check_connection_bijection(sign_ctx)
    assert rep.ok, rep.summary()


def test_connection_bijection_h4(h4_ctx):
    rep = check_connection_bijection(h4_ctx)
    assert rep.ok, rep.summary()


def test_affine_structure_sign(sign_ctx):
    rep = check_affine_structure(sign_ctx)
    assert rep.ok, rep.summary()


def test_affine_structure_h4(h4_ctx):
    rep = check_affine_structure(h4_ctx)
    assert rep.ok, rep.summary()


def test_criteria_disagreement_raises():
    # rig the projection criterion so the two definitions fall apart
    ctx = ConnectionContext(standard_calculus(sign_action(), max_degree=3))
    phi_c = ctx.phi_from_c(ctx.canonical_connection())
    ctx.is_connection_form_projection = lambda phi: False
    with pytest.raises(TheoremViolation):
        check_connection_bijection(ctx, candidates=[("canonical", phi_c)])


def test_right_bijection_is_gated(sign_ctx):
    phi_c = sign_ctx.phi_from_c(sign_ctx.canonical_connection())
    with pytest.raises(FeatureDisabled):
        sign_ctx.right_c_from_phi(phi_c)


def test_right_bijection_rejects_non_forms(sign_ctx):
    # the zero form is not a connection form; the reconstruction from it
    # cannot split pi and must be withheld
    with pytest.raises(UnverifiedFormula):
        sign_ctx.right_c_from_phi({}, enabled=True)


def test_right_bijection_on_canonical(sign_ctx, h4_ctx):
    # the canonical connection is two-sided, so both bijections return it
    for ctx in (sign_ctx, h4_ctx):
        canon = ctx.canonical_connection()
        phi_c = ctx.phi_from_c(canon)
        right = ctx.right_c_from_phi(phi_c, enabled=True)
        for b in range(ctx.af.base.dim):
            for fk in ctx.hf.form_keys(1):
                v = {(0, (b,), 1, fk): ONE}
                assert right(v) == canon(v)


def _linearity(ctx, c_map):
    """(right-linear, left-linear) over products with degree-zero basis,
    extending c by the identity on the horizontal summand."""
    calc = ctx.calc
    rlin = llin = True
    for b in range(ctx.af.base.dim):
        for fk in ctx.hf.form_keys(1):
            v = {(0, (b,), 1, fk): ONE}
            got = c_map(v)
            for p in calc.r_keys():
                P = {(0, (p[0],), 0, (p[1],)): ONE}
                for side in ("right", "left"):
                    if side == "right":
                        prod = calc.mul_tt(v, P)
                        rhs = calc.mul_tt(got, P)
                    else:
                        prod = calc.mul_tt(P, v)
                        rhs = calc.mul_tt(P, got)
                    lhs = c_map({K: c for K, c in prod.items() if K[0] == 0})
                    for K, c in prod.items():
                        if K[0] != 0:
                            _acc(lhs, K, c)
                    lhs = {k: c for k, c in lhs.items() if not c.is_zero}
                    rhs = {k: c for k, c in rhs.items() if not c.is_zero}
                    if lhs != rhs:
                        if side == "right":
                            rlin = False
                        else:
                            llin = False
    return rlin, llin


def test_right_bijection_discriminates(h4_ctx):
    # on a translated form the left and right bijections give genuinely
    # different connections, one-sidedly linear each, and the right one
    # still pairs back to the same form
    ctx = h4_ctx
    phi_c = ctx.phi_from_c(ctx.canonical_connection())
    phi2 = phi_add(phi_c, ctx.j_map({(1, ctx.af.form_keys(1)[0]): ONE}))
    assert ctx.is_connection_form_pairing(phi2)

    left = ctx.c_from_phi(phi2)
    right = ctx.right_c_from_phi(phi2, enabled=True)
    assert _linearity(ctx, left) == (False, True)
    assert _linearity(ctx, right) == (True, False)
    assert ctx.phi_from_c(right) == phi2
    assert any(left({(0, (b,), 1, fk): ONE}) != right({(0, (b,), 1, fk): ONE})
               for b in range(ctx.af.base.dim)
               for fk in ctx.hf.form_keys(1))
