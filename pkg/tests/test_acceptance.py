"""Acceptance gate: ten end-to-end criteria, one printed line each.

Every comparison in this module is exact; there are no numeric tolerances
anywhere.  Each criterion asserts its own runtime budget, and the whole
module stays well under five minutes.  Run with -s to see the lines.
"""

import random
import time
from fractions import Fraction
from itertools import product

from smashcalc import cli, frt
from smashcalc.action import TrivialAction
from smashcalc.calculus import (SmashCalculus, TensorCalculus,
                                check_exact_sequences,
                                check_standard_calculus, compare_calculi,
                                standard_calculus)
from smashcalc.connections import (ConnectionContext, check_affine_structure,
                                   check_connection_bijection,
                                   check_vertical_geometry)
from smashcalc.errors import TheoremViolation
from smashcalc.fixtures import (c2_hopf, dual_numbers, h4_action, h4_hopf,
                                sign_action)
from smashcalc.forms import UniversalForms, diagonal_form_action
from smashcalc.hopf import (FdHopf, fd_algebra_from_presentation,
                            verify_fd_hopf)
from smashcalc.linear import LinMap
from smashcalc.ncalg import _acc, check_local_confluence
from smashcalc.scenario import run_scenario, scenario_path, shipped_scenarios
from smashcalc.smash import SmashAlgebra, check_smash


def _line(num, label, detail, start, budget):
    elapsed = time.perf_counter() - start
    assert elapsed < budget, \
        "criterion %d exceeded its %.0fs budget: %.2fs" % (num, budget, elapsed)
    print("[PASS] %2d/10 %s: %s (%.2fs)" % (num, label, detail, elapsed))


def _set_column(m, j, col):
    cols = [list(m.column(k)) for k in range(m.dom.dim)]
    cols[j] = list(col)
    return LinMap.from_columns(m.dom, m.cod, cols)


def _rebuild(h, **repl):
    return FdHopf(h.space, repl.get("mult", h.mult), h.unit_vec,
                  repl.get("comult", h.comult), repl.get("counit", h.counit),
                  repl.get("antipode", h.antipode), h.basis_words,
                  h.word_index, check=False, label=h.label + "-corrupted")


def test_criterion_01_hopf_gates():
    start = time.perf_counter()
    from smashcalc.scalars import ONE, ZERO
    c2, h4 = c2_hopf(), h4_hopf()
    assert verify_fd_hopf(c2).ok
    assert verify_fd_hopf(h4).ok

    zero4 = (ZERO, ZERO, ZERO, ZERO)
    corruptions = [
        # C2: make g non-grouplike, D(g) = g (x) 1: counit axiom breaks
        (_rebuild(c2, comult=_set_column(c2.comult, 1,
                                         (ZERO, ZERO, ONE, ZERO))),
         "counit-left"),
        # C2: erase the product 1 * g: the unit law breaks
        (_rebuild(c2, mult=_set_column(c2.mult, 1, (ZERO, ZERO))),
         "unit-left"),
        # H4: flip the sign of S(x): the antipode convolution breaks
        (_rebuild(h4, antipode=_set_column(h4.antipode, 2,
                                           (ZERO, ZERO, ZERO, ONE))),
         "antipode-left"),
        # H4: set e(g) = 0: counit axioms break
        (_rebuild(h4, counit=_set_column(h4.counit, 1, (ZERO,))),
         "counit-left"),
    ]
    for broken, axiom in corruptions:
        rep = verify_fd_hopf(broken)
        assert not rep.ok
        names = {c["name"] for c in rep.failures()}
        assert axiom in names, "expected %r among %s" % (axiom, sorted(names))
    _line(1, "hopf gates",
          "k[C2] and H4 exact; %d corruptions each name the broken axiom"
          % len(corruptions), start, 1.0)


def test_criterion_02_yang_baxter():
    start = time.perf_counter()
    from smashcalc.scalars import ONE
    R = frt.standard_sl2_r()
    rep = frt.check_ybe(R)
    assert rep.ok
    by_name = {c["name"]: c for c in rep.checks}
    assert by_name["braid-identity"]["details"]["inputs"] == 8
    mutated = 0
    for key in ((1, 1, 1, 1), (2, 1, 1, 2), (1, 2, 1, 2)):
        bad = frt.check_ybe(R.mutated(key, R.entry(*key) + ONE))
        assert not bad.ok
        mutated += 1
    _line(2, "yang-baxter",
          "standard R exact on all 8 basis inputs; %d one-entry mutations "
          "fail" % mutated, start, 1.0)


def test_criterion_03_smash_associativity():
    start = time.perf_counter()
    b = frt.frt_bialgebra(frt.standard_sl2_r())
    rf, gate = frt.r_form(b)
    gate.require("r-form gate")
    plane = frt.quantum_plane_presentation()
    act = frt.induced_action(frt.quantum_plane(b, plane), rf)
    products = [
        ("plane#A(sl2)", SmashAlgebra(act)),
        ("k[s]#kC2 trivial", SmashAlgebra(TrivialAction(c2_hopf(),
                                                        dual_numbers("s")))),
        ("k[s]#kC2 sign", SmashAlgebra(sign_action())),
        ("k[u]#H4 trivial", SmashAlgebra(TrivialAction(h4_hopf(),
                                                       dual_numbers("u")))),
        ("k[u]#H4 skew", SmashAlgebra(h4_action())),
    ]
    for name, smash in products:
        rep = check_smash(smash, degree=3)
        assert rep.ok, "%s: %s" % (name, rep.summary())
        assert not rep.failures()
    _line(3, "smash associativity",
          "exhaustive to total degree 3 on %d products, zero failures"
          % len(products), start, 60.0)


def test_criterion_04_standard_calculus():
    start = time.perf_counter()
    for action in (sign_action(), h4_action()):
        calc = standard_calculus(action, max_degree=3)
        rep = check_standard_calculus(calc, degree=2)
        assert rep.ok, rep.summary()
        names = {c["name"]: c["ok"] for c in rep.checks}
        assert names["graded-leibniz"]
        assert names["derivative-generates"]
    # trivial action: the twisted product degenerates to the tensor one
    for hopf, gen in ((c2_hopf(), "s"), (h4_hopf(), "u")):
        base = fd_algebra_from_presentation(dual_numbers(gen))
        af = UniversalForms(base, 3)
        act_k = diagonal_form_action(TrivialAction(hopf, dual_numbers(gen)),
                                     af)
        c1 = SmashCalculus(hopf, af, act_k, 3)
        c2 = TensorCalculus(hopf, af, 3, hforms=c1.hforms)
        cmp_rep = compare_calculi(c1, c2, degree=2)
        assert cmp_rep.ok, cmp_rep.summary()
        tables = {c["name"]: c["ok"] for c in cmp_rep.checks}
        assert tables["same-carriers"] and tables["same-products"] \
            and tables["same-differentials"]
    _line(4, "standard calculus",
          "Leibniz exhaustive to degree 2, derivative spans, trivial action "
          "matches the tensor calculus table-for-table", start, 30.0)


def test_criterion_05_higher_calculus():
    start = time.perf_counter()
    for action in (sign_action(), h4_action()):
        calc = standard_calculus(action, max_degree=3)
        rep = check_standard_calculus(calc, degree=2)
        names = {c["name"]: c["ok"] for c in rep.checks}
        assert names["d-squared"]
        assert names["graded-leibniz"]
        assert names["coaction-multiplicative"]   # algebra map on generators
        assert names["coaction-chain-map"]        # commutes with d
        assert rep.ok
    _line(5, "higher calculus",
          "d^2 = 0 to the caps, graded Leibniz at total degree <= 2, "
          "form coaction is an algebra and chain map", start, 30.0)


def test_criterion_06_exact_sequences():
    start = time.perf_counter()
    triangles = ("m_r-triangle", "m_l-triangle")
    for action in (sign_action(), h4_action()):
        calc = standard_calculus(action, max_degree=3)
        rep = check_exact_sequences(calc, degrees=(1, 2))
        assert rep.ok, rep.summary()
        names = {c["name"]: c["ok"] for c in rep.checks}
        for n in (1, 2):
            assert names["exactness-by-dimensions@%d" % n]
            assert names["cotensor-bounded-by-image@%d" % n]
            assert names["beta-inverse-left@%d" % n]
            assert names["alpha_r-roundtrip@%d" % n]
            assert names["alpha_l-roundtrip@%d" % n]
            assert names["alpha_l-inverse-left@%d" % n]
            for tri in triangles:
                assert names["%s@%d" % (tri, n)]
        assert names["pi-d-square"]
    _line(6, "exact sequences",
          "both fixtures at degrees 1 and 2: dimension-exact, triangles "
          "commute, one-sided inverses are two-sided", start, 30.0)


def test_criterion_07_connections(monkeypatch, capsys):
    start = time.perf_counter()
    from smashcalc.connections import phi_add
    from smashcalc.scalars import ONE, Q
    for action in (sign_action(), h4_action()):
        calc = standard_calculus(action, max_degree=3)
        ctx = ConnectionContext(calc)
        assert check_vertical_geometry(ctx).ok
        phi_c = ctx.phi_from_c(ctx.canonical_connection())
        cands = [("canonical", phi_c), ("zero", {}),
                 ("doubled", {k: c + c for k, c in phi_c.items()})]
        dom = [(i, ak) for i in range(ctx.h_dim)
               for ak in ctx.af.form_keys(1)]
        for t in dom:
            cands.append(("translated(%d,%s)" % (t[0],
                                                 ctx.af.key_str(1, t[1])),
                          phi_add(phi_c, ctx.j_map({t: ONE}))))
        cands.append(("translated(mixed)",
                      phi_add(phi_c, ctx.j_map({dom[0]: Q, dom[-1]: ONE}))))
        fk0 = ctx.hf.form_keys(1)[0]
        one_b = ctx.af.base.one_key
        s_key = next(b for b in range(ctx.af.base.dim) if b != one_b)
        cands.append(("shifted-vertical",
                      phi_add(phi_c, {(0, (0, (s_key,), 1, fk0)): ONE})))
        cands.append(("non-invariant", {(0, (0, (one_b,), 1, fk0)): ONE}))
        bij = check_connection_bijection(ctx, candidates=cands)
        assert bij.ok, bij.summary()
        names = {c["name"]: c for c in bij.checks}
        assert names["canonical-splits"]["ok"]            # pi^1 c = id
        assert names["connections-left-linear"]["ok"]
        assert names["connections-colinear"]["ok"]
        assert names["c-from-phi-roundtrip"]["ok"]
        assert names["phi-from-c-roundtrip"]["ok"]
        agree = [c for c in bij.checks
                 if c["name"].startswith("criteria-agree(")]
        valid = [c for c in agree if c["details"]["pairing"]]
        invalid = [c for c in agree if not c["details"]["pairing"]]
        assert len(agree) >= 6 and len(valid) >= 3 and len(invalid) >= 3
        translated = [c for c in agree if "translated(" in c["name"]]
        assert len(translated) >= 3          # roundtrips cover >= 3 translates
        aff = check_affine_structure(ctx)
        assert aff.ok, aff.summary()
        affn = {c["name"]: c["ok"] for c in aff.checks}
        assert affn["j-injective"]
        assert affn["differences-decompose"]
        # decompose(translate(t)) = t on three random t
        from smashcalc.connections import phi_sub
        from smashcalc.scalars import integer, qpow
        rng = random.Random(5)
        for _ in range(3):
            t = {}
            for key in dom:
                c = qpow(rng.randint(-2, 2)) * integer(rng.randint(0, 2))
                if not c.is_zero:
                    t[key] = c
            if not t:
                t = {dom[0]: ONE}
            phi2 = phi_add(phi_c, ctx.j_map(t))
            assert ctx.j_decompose(phi_sub(phi2, phi_c)) == t
    # a criteria disagreement must surface as process exit code 3
    def broken(*args, **kwargs):
        raise TheoremViolation("criteria disagree")
    monkeypatch.setattr(cli, "run_scenario", broken)
    code = cli.main(["connections", "--scenario",
                     scenario_path("kc2_universal")])
    capsys.readouterr()
    assert code == 3
    _line(7, "connections",
          "canonical connection verified, criteria agree on >= 6 candidates "
          "(3 valid / 3 invalid), j-translate roundtrips exact, "
          "disagreement exits 3", start, 30.0)


def test_criterion_08_frt_coherence():
    start = time.perf_counter()
    b = frt.frt_bialgebra(frt.standard_sl2_r())
    rf, rrep = frt.r_form(b)
    rnames = {c["name"]: c["ok"] for c in rrep.checks}
    assert rnames["exchange-law"]           # r(g1,h1) g2 h2 = h1 g1 r(g2,h2)
    assert rnames["convolution-inverse"]
    assert rrep.ok

    plane = frt.quantum_plane_presentation()
    com = frt.quantum_plane(b, plane)
    act = frt.induced_action(com, rf)
    arep = frt.check_induced_action(act, com, rf, degree=2, h_degree=2)
    anames = {c["name"]: c["ok"] for c in arep.checks}
    assert anames["matrix-rule"] and anames["dual-path"]
    assert arep.ok

    model = frt.smash_forms_model(b, rf)
    wz = frt.wz_smash_relations(model, rf)
    assert wz.ok, wz.summary()
    wnames = {c["name"]: c for c in wz.checks}
    for family in ("coordinate-exchange", "differential-exchange",
                   "form-exchange", "inverse-exchange"):
        assert wnames[family]["ok"]
        assert wnames[family]["details"].get("instances", 8) == 8

    # classical limit: at q = 1 the standard R is the identity R and every
    # relation collapses to plain commutativity
    one = Fraction(1)
    ident = frt.identity_r()
    for idx in product((1, 2), repeat=4):
        assert frt.standard_sl2_r().entry(*idx)(one) == ident.entry(*idx)(one)
    for lhs, rhs in b.pres.rules.items():
        ev = {w: c(one) for w, c in rhs.items() if c(one) != 0}
        assert ev == {(lhs[1], lhs[0]): one}
    cb = frt.frt_bialgebra(ident)
    crf, crep = frt.r_form(cb)
    crep.require("classical r-form gate")
    cmodel = frt.smash_forms_model(cb, crf,
                                   aforms=frt.classical_plane_forms())
    cwz = frt.wz_smash_relations(cmodel, crf)
    assert cwz.ok, cwz.summary()
    _line(8, "frt coherence",
          "exchange law = quantum-matrix relations, convolution inverse "
          "exact, matrix action rule on all tuples, both differential "
          "exchange families, classical collapse at q=1", start, 30.0)


def test_criterion_09_rewriting_soundness():
    start = time.perf_counter()
    plane = frt.quantum_plane_presentation()
    b = frt.frt_bialgebra(frt.standard_sl2_r())
    pforms = frt.quantum_plane_forms()
    assert check_local_confluence(plane, max_len=3) == []
    assert check_local_confluence(b.pres, max_len=3) == []

    def normalize(pres, terms):
        out = {}
        for w, c in terms.items():
            for w2, c2 in pres.nf_word(w).items():
                _acc(out, w2, c * c2)
        return out

    rng = random.Random(2024)
    total = 0
    for pres, count, max_len in ((plane, 350, 5), (b.pres, 350, 3),
                                 (pforms.pres, 300, 3)):
        for _ in range(count):
            e = pres.random_element(rng, max_len, 4).terms
            n1 = normalize(pres, e)
            assert normalize(pres, n1) == n1
            total += 1
    assert total == 1000
    _line(9, "rewriting soundness",
          "confluence audits empty at degree 3, normal form idempotent on "
          "%d random elements" % total, start, 30.0)


def test_criterion_10_determinism():
    start = time.perf_counter()
    names = shipped_scenarios()
    assert len(names) == 3
    for name in names:
        doc1, code1 = run_scenario(scenario_path(name))
        doc2, code2 = run_scenario(scenario_path(name))
        assert code1 == 0 and code2 == 0
        assert doc1["hash"] == doc2["hash"]
    _line(10, "determinism",
          "two runs of each shipped scenario hash identically "
          "(timing excluded)", start, 10.0)
