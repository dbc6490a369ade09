"""Smash product construction, verification, and morphisms."""

import pytest

from smashcalc.action import ModuleAlgebraAction, TrivialAction
from smashcalc.errors import NotEquivariant
from smashcalc.fixtures import c2_hopf, c2_presentation, dual_numbers, h4_hopf
from smashcalc.hopf import PresentedBialgebra
from smashcalc.ncalg import Presentation
from smashcalc.scalars import ONE, integer
from smashcalc.smash import SmashAlgebra, check_smash, smash_morphism


def c2_smash():
    h = c2_hopf()
    a = dual_numbers("s")
    act = ModuleAlgebraAction(h, a, {("g", "s"): {(0,): -ONE}})
    return SmashAlgebra(act)


def h4_smash():
    h = h4_hopf()
    a = dual_numbers("u")
    act = ModuleAlgebraAction(h, a, {("g", "u"): {(0,): -ONE},
                                     ("x", "u"): {(): ONE}})
    return SmashAlgebra(act)


def key_of(hopf, name):
    return [k for k in range(hopf.dim) if hopf.key_str(k) == name][0]


def test_c2_smash_products():
    s = c2_smash()
    g = key_of(s.hopf, "g")
    one = s.hopf.one_key
    sg = {((0,), g): ONE}        # s#g
    s1 = {((0,), one): ONE}      # s#1
    g1 = {((), g): ONE}          # 1#g
    # (1#g)(s#1) = (g.s)#g = -s#g
    assert s.mul_terms(g1, s1) == {((0,), g): -ONE}
    # (s#1)(1#g) = s#g
    assert s.mul_terms(s1, g1) == sg
    # (s#g)(s#1) = s(g.s)#g = -s^2#g = 0
    assert s.mul_terms(sg, s1) == {}
    # (1#g)(1#g) = 1#1
    assert s.mul_terms(g1, g1) == {((), one): ONE}


def test_c2_smash_checks_exhaustive():
    rep = check_smash(c2_smash())
    assert rep.ok, rep.summary()
    by_name = {c["name"]: c for c in rep.checks}
    assert by_name["associativity"]["details"]["triples"] == 4 ** 3
    assert "coinvariants-are-base" in by_name


def test_h4_smash_cross_relation():
    s = h4_smash()
    x = key_of(s.hopf, "x")
    one = s.hopf.one_key
    # (1#x)(u#1) = (x.u)#1 + (g.u)#x = 1#1 - u#x
    got = s.mul_terms({((), x): ONE}, {((0,), one): ONE})
    assert got == {((), one): ONE, ((0,), x): -ONE}
    assert s.elem_str(got) == "1#1 + (-1)*u#x"


def test_h4_smash_checks_exhaustive():
    rep = check_smash(h4_smash())
    assert rep.ok, rep.summary()


def test_broken_action_breaks_associativity():
    h = h4_hopf()
    a = dual_numbers("u")
    act = ModuleAlgebraAction(h, a, {("g", "u"): {(0,): ONE},
                                     ("x", "u"): {(): ONE}})
    s = SmashAlgebra(act)
    rep = check_smash(s)
    failed = {c["name"] for c in rep.failures()}
    assert "associativity" in failed


def test_trivial_action_gives_tensor_product():
    h = h4_hopf()
    a = dual_numbers("u")
    s = SmashAlgebra(TrivialAction(h, a))
    assert check_smash(s).ok
    # componentwise product
    for (w1, k1) in s.basis_pairs():
        for (w2, k2) in s.basis_pairs():
            got = s.mul_terms({(w1, k1): ONE}, {(w2, k2): ONE})
            want = {}
            for w, cw in a.nf_word(w1 + w2).items():
                for k, ck in h.mul_kk(k1, k2).items():
                    want[(w, k)] = cw * ck
            assert got == want


def test_presented_hopf_smash():
    b = PresentedBialgebra(c2_presentation(), {"g": {((0,), (0,)): ONE}},
                           {"g": ONE})
    a = dual_numbers("s")
    act = ModuleAlgebraAction(b, a, {("g", "s"): {(0,): -ONE}})
    s = SmashAlgebra(act)
    rep = check_smash(s, degree=3)
    assert rep.ok, rep.summary()
    # keys are words on the H side
    got = s.mul_terms({((), (0,)): ONE}, {((0,), ()): ONE})
    assert got == {((0,), (0,)): -ONE}


def test_coaction_values():
    s = h4_smash()
    x = key_of(s.hopf, "x")
    g = key_of(s.hopf, "g")
    one = s.hopf.one_key
    # r(u#x) = (u#x)(x)1 + (u#g)(x)x
    got = s.coact_terms({((0,), x): ONE})
    assert got == {(((0,), x), one): ONE, (((0,), g), x): ONE}


def test_smash_morphism_scaling():
    src = c2_smash()
    h = src.hopf
    a2 = dual_numbers("t")
    tgt = SmashAlgebra(ModuleAlgebraAction(h, a2, {("g", "t"): {(0,): -ONE}}))
    f = smash_morphism(src, tgt, {"s": {(0,): integer(2)}}, degree=3)
    g = key_of(h, "g")
    img = f(src.elem({((0,), g): ONE}))
    assert img.terms == {((0,), g): integer(2)}
    # unit goes to unit
    assert f(src.one()) == tgt.one()


def test_smash_morphism_rejects_inequivariant():
    src = c2_smash()
    h = src.hopf
    a2 = dual_numbers("t")
    tgt = SmashAlgebra(TrivialAction(h, a2))
    with pytest.raises(NotEquivariant):
        smash_morphism(src, tgt, {"s": {(0,): ONE}}, degree=2)


def test_smash_morphism_rejects_relation_break():
    src = c2_smash()
    h = src.hopf
    cubic = Presentation([("t", 0)], relations=[{(0, 0, 0): ONE}],
                         label="k[t]/(t^3)")
    act = ModuleAlgebraAction(h, cubic, {("g", "t"): {(0,): -ONE}})
    tgt = SmashAlgebra(act)
    with pytest.raises(NotEquivariant):
        smash_morphism(src, tgt, {"s": {(0,): ONE}}, degree=2)


def test_embeddings_and_unit():
    s = h4_smash()
    ea = s.embed_a({(0,): ONE})
    eh = s.embed_h({key_of(s.hopf, "g"): ONE})
    assert (s.one() * ea) == ea
    assert (eh * eh) == s.one()
    # A#1 is a subalgebra
    prod = ea * ea
    assert prod.terms == {}
