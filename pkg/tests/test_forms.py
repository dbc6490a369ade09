"""Universal forms, presented calculi, and the coproduct on forms."""

import pytest

from smashcalc.action import ModuleAlgebraAction, TrivialAction, \
    check_action_on_calculus
from smashcalc.errors import InconsistentDifferential
from smashcalc.fixtures import (c2_hopf, dual_numbers, h4_hopf,
                                quantum_plane_calculus, quantum_plane_d)
from smashcalc.forms import (PresentedForms, UniversalForms,
                             check_graded_leibniz, diagonal_form_action)
from smashcalc.hopf import fd_algebra_from_presentation
from smashcalc.linear import LinMap
from smashcalc.ncalg import Presentation, _acc
from smashcalc.scalars import ONE, Q, qpow


def test_dims_match_kernel_oracle():
    # the expression basis has m(m-1)^n elements; the carrier defined by
    # vanishing adjacent multiplications must have the same dimension
    for hopf, depth in ((c2_hopf(), 3), (h4_hopf(), 2)):
        forms = UniversalForms(hopf, max_degree=depth)
        m = hopf.dim
        for n in range(1, depth + 1):
            want = m * (m - 1) ** n
            assert len(forms.form_keys(n)) == want
            assert forms.adjacent_mult_kernel_dim(n) == want


def test_expression_basis_is_independent():
    for hopf in (c2_hopf(), h4_hopf()):
        forms = UniversalForms(hopf)
        for n in range(3):
            s = forms.solver(n)
            assert s.rank == len(forms.form_keys(n))


def test_express_roundtrip():
    forms = UniversalForms(h4_hopf())
    for n in range(3):
        for key in forms.form_keys(n):
            assert forms.express(n, forms.expand(n, key)) == {key: ONE}


def test_express_rejects_non_forms():
    forms = UniversalForms(c2_hopf())
    with pytest.raises(ValueError):
        forms.express(1, {(0, 0): ONE})  # 1(x)1 is not killed by mult


def test_d_matches_unit_insertion_model():
    cases = ((c2_hopf(), (0, 1, 2)), (h4_hopf(), (0, 1)))
    for hopf, degrees in cases:
        forms = UniversalForms(hopf)
        for n in degrees:
            lhs = forms.embed_map(n + 1) @ forms.d_map(n)
            rhs = forms.insertion_d(n) @ forms.embed_map(n)
            assert lhs == rhs


def test_d_squared_zero():
    forms = UniversalForms(h4_hopf())
    for n in range(2):
        dd = forms.d_map(n + 1) @ forms.d_map(n)
        assert dd == LinMap.zero(forms.space(n), forms.space(n + 2))
        ins = forms.insertion_d(n + 1) @ forms.insertion_d(n)
        assert ins == LinMap.zero(forms.tensor_power(n + 1),
                                  forms.tensor_power(n + 3))


def test_wedge_associative_c2_exhaustive():
    forms = UniversalForms(c2_hopf(), max_degree=3)
    for i in range(3):
        for j in range(3 - i):
            for k in range(3 - i - j):
                for k1 in forms.form_keys(i):
                    for k2 in forms.form_keys(j):
                        for k3 in forms.form_keys(k):
                            ab = forms.wedge_kk(i, k1, j, k2)
                            bc = forms.wedge_kk(j, k2, k, k3)
                            left = forms.wedge_tt(i + j, ab, k, {k3: ONE})
                            right = forms.wedge_tt(i, {k1: ONE}, j + k, bc)
                            assert left == right


def test_wedge_associative_h4_sample():
    forms = UniversalForms(h4_hopf())
    keys1 = forms.form_keys(1)
    for k1 in keys1[:4]:
        for k2 in keys1[:4]:
            for k3 in keys1[:3]:
                ab = forms.wedge_kk(1, k1, 1, k2)
                bc = forms.wedge_kk(1, k2, 1, k3)
                left = forms.wedge_tt(2, ab, 1, {k3: ONE})
                right = forms.wedge_tt(1, {k1: ONE}, 2, bc)
                assert left == right


def test_wedge_unit():
    forms = UniversalForms(h4_hopf())
    one = forms.one_key
    for n in range(3):
        for key in forms.form_keys(n):
            assert forms.wedge_kk(0, one, n, key) == {key: ONE}
            assert forms.wedge_kk(n, key, 0, one) == {key: ONE}


def test_left_mult_fast_path_matches_tensor_path():
    from smashcalc.forms import _concat
    forms = UniversalForms(h4_hopf())
    for b in range(forms.base.dim):
        for key in forms.form_keys(2)[:6]:
            fast = forms.wedge_kk(0, (b,), 2, key)
            slow = forms.express(2, _concat(forms.base, {(b,): ONE},
                                            forms.expand(2, key)))
            assert fast == slow


def test_graded_leibniz_fd():
    for hopf in (c2_hopf(), h4_hopf()):
        forms = UniversalForms(hopf)
        rep = check_graded_leibniz(forms, degree=2)
        assert rep.ok, rep.summary()


def key_of(h, name):
    return [k for k in range(h.dim) if h.key_str(k) == name][0]


def test_copro_values_c2():
    h = c2_hopf()
    forms = UniversalForms(h)
    g = key_of(h, "g")
    one = h.one_key
    dg = (one, g)
    # D(dg) = dg (x) g + g (x) dg
    assert forms.lambda_k(1, dg) == {(g, dg): ONE}
    assert forms.rho_k(1, dg) == {(dg, g): ONE}


def test_copro_values_h4():
    h = h4_hopf()
    forms = UniversalForms(h)
    g, x = key_of(h, "g"), key_of(h, "x")
    one = h.one_key
    dx, dg = (one, x), (one, g)
    # D(dx) = dx (x) 1 + dg (x) x + g (x) dx
    assert forms.lambda_k(1, dx) == {(g, dx): ONE}
    assert forms.rho_k(1, dx) == {(dx, one): ONE, (dg, x): ONE}


def lambda_direct(forms, key):
    """Degree-1 left coaction computed from raw tensors, independent of the
    product-formula extension."""
    h = forms.base
    per_h = {}
    for (a, b), c in forms.expand(1, key).items():
        for (a1, a2), c1 in h.comult_k(a).items():
            for (b1, b2), c2 in h.comult_k(b).items():
                cc = c * c1 * c2
                if cc.is_zero:
                    continue
                for t, ct in h.mul_kk(a1, b1).items():
                    _acc(per_h.setdefault(t, {}), (a2, b2), cc * ct)
    out = {}
    for t, td in per_h.items():
        for k, c in forms.express(1, td).items():
            out[(t, k)] = c
    return out


def test_lambda_matches_direct_formula():
    for hopf in (c2_hopf(), h4_hopf()):
        forms = UniversalForms(hopf)
        for key in forms.form_keys(1):
            assert forms.lambda_k(1, key) == lambda_direct(forms, key)


def test_copro_counit_and_coassoc():
    for hopf in (c2_hopf(), h4_hopf()):
        forms = UniversalForms(hopf)
        for n in (1, 2):
            for key in forms.form_keys(n):
                lam = forms.lambda_k(n, key)
                # counit collapses the coaction
                resid = {}
                for (hk, fk), c in lam.items():
                    _acc(resid, fk, c * hopf.counit_k(hk))
                assert resid == {key: ONE}
                # coassociativity against the Hopf comult
                left, right = {}, {}
                for (hk, fk), c in lam.items():
                    for (h1, h2), c2 in hopf.comult_k(hk).items():
                        _acc(left, (h1, h2, fk), c * c2)
                    for (h2, fk2), c2 in forms.lambda_k(n, fk).items():
                        _acc(right, (hk, h2, fk2), c * c2)
                assert left == right


def test_copro_multiplicative_sample():
    h = h4_hopf()
    forms = UniversalForms(h)
    keys1 = forms.form_keys(1)
    for k1 in keys1[:4]:
        for k2 in keys1[:4]:
            lhs = {}
            for k, c in forms.wedge_kk(1, k1, 1, k2).items():
                for comp, c2 in forms.copro(2, k).items():
                    _acc(lhs, comp, c * c2)
            rhs = forms._gts_mul(forms.copro(1, k1), forms.copro(1, k2))
            rhs = {k: c for k, c in rhs.items() if not c.is_zero}
            lhs = {k: c for k, c in lhs.items() if not c.is_zero}
            assert lhs == rhs


def test_diagonal_action_covariant():
    h = h4_hopf()
    a = fd_algebra_from_presentation(dual_numbers("u"))
    pres_action = ModuleAlgebraAction(
        h, dual_numbers("u"), {("g", "u"): {(0,): -ONE}, ("x", "u"): {(): ONE}})
    forms = UniversalForms(a)
    act_k = diagonal_form_action(pres_action, forms)
    rep = check_action_on_calculus(h, forms, act_k, degree=2, max_form_degree=2)
    assert rep.ok, rep.summary()


def test_diagonal_action_values():
    h = c2_hopf()
    a = fd_algebra_from_presentation(dual_numbers("s"))
    act = ModuleAlgebraAction(h, dual_numbers("s"), {("g", "s"): {(0,): -ONE}})
    forms = UniversalForms(a)
    act_k = diagonal_form_action(act, forms)
    g = key_of(h, "g")
    s = [k for k in range(a.dim) if a.key_str(k) == "s"][0]
    one = a.one_key
    # g . (s ds) = (g.s) d(g.s) = s ds
    assert act_k(g, 1, (s, s)) == {(s, s): ONE}
    # g . ds = -ds
    assert act_k(g, 1, (one, s)) == {(one, s): -ONE}


def test_trivial_action_on_forms():
    h = h4_hopf()
    a = fd_algebra_from_presentation(dual_numbers("u"))
    act = TrivialAction(h, dual_numbers("u"))
    forms = UniversalForms(a)
    act_k = diagonal_form_action(act, forms)
    rep = check_action_on_calculus(h, forms, act_k, degree=2, max_form_degree=1)
    assert rep.ok, rep.summary()


# -- presented calculi --


def plane_forms():
    return PresentedForms(quantum_plane_calculus(), quantum_plane_d())


def test_plane_calculus_consistent():
    rep = plane_forms().check(degree=3)
    assert rep.ok


def test_plane_d_values():
    f = plane_forms()
    # d(y x) = q^-1 x dy + q^-2 y dx
    assert f.d_word((0, 1)) == {(1, 2): qpow(-1), (0, 3): qpow(-2)}
    assert f.d_word((2,)) == {}
    assert f.d_word(()) == {}


def test_plane_missing_square_relation_is_inconsistent():
    broken = Presentation(
        [("y", 0), ("x", 0), ("dy", 1), ("dx", 1)],
        relations=[
            {(1, 0): ONE, (0, 1): -Q},
            {(3, 1): ONE, (1, 3): -qpow(-2)},
            {(3, 0): ONE, (0, 3): -qpow(-1)},
            {(2, 0): ONE, (0, 2): -qpow(-2)},
            {(2, 1): ONE, (1, 2): -qpow(-1), (0, 3): ONE - qpow(-2)},
        ],
        precedence=["y", "x", "dy", "dx"], label="broken")
    f = PresentedForms(broken, quantum_plane_d())
    with pytest.raises(InconsistentDifferential):
        f.check(degree=2)


def test_plane_wrong_d_is_inconsistent():
    f = PresentedForms(quantum_plane_calculus(),
                       {"y": {(2,): ONE}, "x": {(2,): ONE},
                        "dy": {}, "dx": {}})
    with pytest.raises(InconsistentDifferential):
        f.check(degree=2)


def test_plane_graded_leibniz():
    rep = check_graded_leibniz(plane_forms(), degree=2, bound=2)
    assert rep.ok, rep.summary()


def test_plane_form_keys():
    f = plane_forms()
    deg1 = f.form_keys(1, 1)
    assert set(deg1) == {(2,), (3,), (0, 2), (0, 3), (1, 2), (1, 3)}
    # the calculus has no forms past degree 2
    assert f.form_keys(3, 2) == []


def test_plane_top_degree_products():
    f = plane_forms()
    # dx dy = -q^-1 dy dx, squares vanish
    assert f.wedge_kk(1, (3,), 1, (2,)) == {(2, 3): -qpow(-1)}
    assert f.wedge_kk(1, (3,), 1, (3,)) == {}
    assert f.wedge_kk(1, (2,), 1, (2,)) == {}
