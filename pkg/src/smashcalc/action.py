"""Module-algebra actions, comodule structures, and their verifiers.

A ModuleAlgebraAction stores the action of H on a presented carrier only on
(H-generator, carrier-generator) pairs and extends it lazily by the defining
axioms: letters of an H word act one after another, and a single letter acts
on a product through the coproduct.  The extension is well defined exactly
when the table is compatible with both presentations' relations, which is
what check_module_algebra audits; the recursion itself never assumes it.

Comodules come in a finite-dimensional matrix flavor (Comodule, with exact
kernel-based coinvariants) and a presented flavor (PresentedComodule,
generator-level coaction extended multiplicatively).

check_hopf_module verifies the two-sided module, two-sided comodule, and the
four action/coaction compatibility conditions for whatever subset of
structure maps it is handed.
"""

from __future__ import annotations

from .errors import UnknownGenerator
from .linear import LinMap, left_unitor, right_unitor, swap_map
from .ncalg import Element, _acc
from .reports import Report
from .scalars import ONE, ZERO


class ModuleAlgebraAction:
    """Left H-action on a presented algebra, from a generator-pair table."""

    def __init__(self, hopf, alg, gen_table):
        self.hopf = hopf
        self.alg = alg
        self.table = {}
        for (hname, aname), terms in gen_table.items():
            # store by generator letter indices of both presentations
            hi = self._h_gen_index(hname)
            ai = alg.gen_index.get(aname)
            if ai is None:
                raise UnknownGenerator("action table names unknown generator %r" % aname)
            if isinstance(terms, Element):
                terms = terms.terms
            self.table[(hi, ai)] = dict(terms)
        self._cache = {}
        self._comult_letter_cache = {}

    def _h_gen_index(self, name):
        if hasattr(self.hopf, "pres"):
            letters = {n: i for i, n in enumerate(self.hopf.pres.gen_names)}
        else:
            # fd backend keeps generator words of length 1 among its basis
            assert self.hopf.basis_words is not None
            letters = {self.hopf.key_str(k): self.hopf.key_word(k)[0]
                       for k in range(self.hopf.dim)
                       if len(self.hopf.key_word(k)) == 1}
        if name not in letters:
            raise UnknownGenerator("action table names unknown generator %r" % name)
        return letters[name]

    def _comult_letter(self, letter):
        """Coproduct of an H generator as word pairs."""
        hit = self._comult_letter_cache.get(letter)
        if hit is not None:
            return hit
        if hasattr(self.hopf, "pres"):
            out = self.hopf.comult_k((letter,))
        else:
            kk = self.hopf.word_index.get((letter,))
            if kk is None:
                raise UnknownGenerator("no length-1 basis word for letter %d" % letter)
            out = {}
            for (k1, k2), c in self.hopf.comult_k(kk).items():
                out[(self.hopf.key_word(k1), self.hopf.key_word(k2))] = c
        self._comult_letter_cache[letter] = out
        return out

    def _h_counit_word(self, word):
        if hasattr(self.hopf, "pres"):
            return self.hopf.counit_k(word)
        c = ONE
        for letter in word:
            kk = self.hopf.word_index[(letter,)]
            c = c * self.hopf.counit_k(kk)
            if c.is_zero:
                break
        return c

    # -- the extension --

    def act_ww(self, h_word, a_word):
        """h_word . a_word as dict carrier-word -> Scalar.  Memoized."""
        key = (h_word, a_word)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if not a_word:
            e = self._h_counit_word(h_word)
            out = {} if e.is_zero else {(): e}
        elif not h_word:
            out = {a_word: ONE}
        elif len(h_word) > 1:
            inner = self.act_ww(h_word[1:], a_word)
            out = {}
            for w, c in inner.items():
                for w2, c2 in self.act_ww(h_word[:1], w).items():
                    _acc(out, w2, c * c2)
        elif len(a_word) > 1:
            out = {}
            for (u, v), c in self._comult_letter(h_word[0]).items():
                left = self.act_ww(u, a_word[:1])
                right = self.act_ww(v, a_word[1:])
                for w1, c1 in left.items():
                    for w2, c2 in right.items():
                        cc = c * c1 * c2
                        if cc.is_zero:
                            continue
                        for w, cw in self.alg.nf_word(w1 + w2).items():
                            _acc(out, w, cc * cw)
        else:
            entry = self.table.get((h_word[0], a_word[0]))
            if entry is None:
                raise UnknownGenerator(
                    "action table has no entry for generator pair (%s, %s)"
                    % (h_word[0], a_word[0]))
            out = self.alg.normal_terms(entry)
        self._cache[key] = out
        return out

    def act_key(self, h_key, a_terms):
        """Action of an H basis key on a dict element of the carrier."""
        h_word = self.hopf.key_word(h_key)
        out = {}
        for w, c in a_terms.items():
            for w2, c2 in self.act_ww(h_word, w).items():
                _acc(out, w2, c * c2)
        return out

    def act(self, h_key, elem):
        return Element(self.alg, self.act_key(h_key, elem.terms))

    def matrix(self, h_key, words, index):
        """Action matrix over an explicit finite word basis."""
        n = len(words)
        cols = []
        for w in words:
            img = self.act_ww(self.hopf.key_word(h_key), w)
            col = [ZERO] * n
            for w2, c in img.items():
                col[index[w2]] = c
            cols.append(tuple(col))
        return cols


class TrivialAction(ModuleAlgebraAction):
    """h . a = counit(h) a."""

    def __init__(self, hopf, alg):
        self.hopf = hopf
        self.alg = alg
        self.table = {}
        self._cache = {}
        self._comult_letter_cache = {}

    def act_ww(self, h_word, a_word):
        e = self._h_counit_word(h_word)
        return {} if e.is_zero else {a_word: e}


def check_module_algebra(action, degree=2, h_degree=None):
    """The four module-algebra axioms on basis words up to the length bound."""
    rep = Report("module-algebra")
    hopf, alg = action.hopf, action.alg
    h_keys = hopf.keys_upto(h_degree if h_degree is not None else degree)
    a_words = alg.basis_upto(degree)

    ok1 = ok2 = ok3 = ok4 = True
    for h in h_keys:
        for a in a_words:
            for b in a_words:
                if len(a) + len(b) > degree:
                    continue
                prod = alg.nf_word(a + b)
                lhs = action.act_key(h, prod)
                rhs = {}
                for (k1, k2), c in hopf.comult_k(h).items():
                    xa = action.act_key(k1, {a: ONE})
                    xb = action.act_key(k2, {b: ONE})
                    for w1, c1 in xa.items():
                        for w2, c2 in xb.items():
                            cc = c * c1 * c2
                            if cc.is_zero:
                                continue
                            for w, cw in alg.nf_word(w1 + w2).items():
                                _acc(rhs, w, cc * cw)
                if lhs != rhs:
                    ok1 = False
                    rep.add("product-rule@(%s,%s,%s)"
                            % (hopf.key_str(h), alg.word_str(a), alg.word_str(b)),
                            "h.(ab) = (h1.a)(h2.b)", False,
                            witness="%s | %s*%s" % (hopf.key_str(h),
                                                    alg.word_str(a), alg.word_str(b)))
    for a in a_words:
        if action.act_key(hopf.one_key, {a: ONE}) != {a: ONE}:
            ok2 = False
            rep.add("unit-acts-trivially@%s" % alg.word_str(a),
                    "1.a = a", False, witness=alg.word_str(a))
    for h in h_keys:
        got = action.act_key(h, {(): ONE})
        e = hopf.counit_k(h)
        want = {} if e.is_zero else {(): e}
        if got != want:
            ok3 = False
            rep.add("acts-on-unit@%s" % hopf.key_str(h),
                    "h.1 = e(h)1", False, witness=hopf.key_str(h))
    for g in h_keys:
        for h in h_keys:
            for a in a_words:
                if len(a) > degree:
                    continue
                inner = action.act_key(h, {a: ONE})
                lhs = {}
                for w, c in inner.items():
                    for w2, c2 in action.act_key(g, {w: ONE}).items():
                        _acc(lhs, w2, c * c2)
                rhs = {}
                for k, c in hopf.mul_kk(g, h).items():
                    for w, cw in action.act_key(k, {a: ONE}).items():
                        _acc(rhs, w, c * cw)
                if lhs != rhs:
                    ok4 = False
                    rep.add("composition@(%s,%s,%s)"
                            % (hopf.key_str(g), hopf.key_str(h), alg.word_str(a)),
                            "g.(h.a) = (gh).a", False,
                            witness="%s | %s | %s" % (hopf.key_str(g),
                                                      hopf.key_str(h), alg.word_str(a)))
    rep.add("product-rule", "h.(ab) = (h1.a)(h2.b)", ok1, degree=degree)
    rep.add("unit-acts-trivially", "1.a = a", ok2)
    rep.add("acts-on-unit", "h.1 = e(h)1", ok3)
    rep.add("composition", "g.(h.a) = (gh).a", ok4)
    return rep


class Comodule:
    """A right or left H-comodule structure on a based space, as a matrix."""

    def __init__(self, space, hopf, coact, side="right"):
        assert side in ("left", "right")
        self.space = space
        self.hopf = hopf
        self.coact = coact
        self.side = side

    def unit_insertion(self):
        n, hdim, one = self.space.dim, self.hopf.dim, self.hopf.one_key
        if self.side == "right":
            return LinMap.from_function(
                self.space, self.space.tensor(self.hopf.space),
                lambda j: {j * hdim + one: ONE})
        return LinMap.from_function(
            self.space, self.hopf.space.tensor(self.space),
            lambda j: {one * n + j: ONE})

    def coinvariants(self):
        """Kernel of (coaction - unit insertion): (space, inclusion)."""
        return (self.coact - self.unit_insertion()).kernel()

    def check(self):
        rep = Report("comodule")
        i_v = LinMap.identity(self.space)
        i_h = LinMap.identity(self.hopf.space)
        if self.side == "right":
            rep.add("coassociativity", "(r(x)1)r = (1(x)D)r",
                    self.coact.tensor(i_h) @ self.coact ==
                    i_v.tensor(self.hopf.comult) @ self.coact)
            rep.add("counitality", "(1(x)e)r = id",
                    right_unitor(self.space) @ i_v.tensor(self.hopf.counit)
                    @ self.coact == i_v)
        else:
            rep.add("coassociativity", "(D(x)1)l = (1(x)l)l",
                    self.hopf.comult.tensor(i_v) @ self.coact ==
                    i_h.tensor(self.coact) @ self.coact)
            rep.add("counitality", "(e(x)1)l = id",
                    left_unitor(self.space) @ self.hopf.counit.tensor(i_v)
                    @ self.coact == i_v)
        return rep


class PresentedComodule:
    """Generator-level coaction on a presented algebra, left side:
    gen -> dict[(h_word, a_word) -> Scalar], extended multiplicatively."""

    def __init__(self, hopf, alg, coact_gens, side="left"):
        assert side == "left", "only left coactions are needed here"
        self.hopf = hopf
        self.alg = alg
        self.coact_gens = {alg.gen_index[n]: dict(t) for n, t in coact_gens.items()}
        self._cache = {}

    def coact_word(self, w):
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        if not w:
            out = {((), ()): ONE}
        else:
            head = self.coact_gens[w[0]]
            out = {}
            for (h1, a1), c in head.items():
                for (h2, a2), c2 in self.coact_word(w[1:]).items():
                    cc = c * c2
                    for hw, ch in self.hopf.mul_kk(h1, h2).items():
                        for aw, ca in self.alg.nf_word(a1 + a2).items():
                            _acc(out, (hw, aw), cc * ch * ca)
        self._cache[w] = out
        return out

    def coact_terms(self, terms):
        out = {}
        for w, c in terms.items():
            for pair, c2 in self.coact_word(w).items():
                _acc(out, pair, c * c2)
        return out

    def check(self, degree=2):
        rep = Report("comodule-algebra")
        mult_ok = True
        for lhs, rhs in self.alg.rules.items():
            left = self.coact_word(lhs)
            right = self.coact_terms(rhs)
            if left != right:
                mult_ok = False
                rep.add("kills-relation@%s" % self.alg.word_str(lhs),
                        "l(lhs) = l(rhs)", False, witness=self.alg.word_str(lhs))
        rep.add("multiplicative", "l(ab) = l(a)l(b)", mult_ok)
        coassoc_ok, counit_ok = True, True
        for w in self.alg.basis_upto(degree):
            lw = self.coact_word(w)
            left, right = {}, {}
            for (h, a), c in lw.items():
                for (h1, h2), c2 in self.hopf.comult_k(h).items():
                    _acc(left, (h1, h2, a), c * c2)
                for (h2, a0), c2 in self.coact_word(a).items():
                    _acc(right, (h, h2, a0), c * c2)
            if left != right:
                coassoc_ok = False
            resid = {}
            for (h, a), c in lw.items():
                _acc(resid, a, c * self.hopf.counit_k(h))
            if resid != {w: ONE}:
                counit_ok = False
        rep.add("coassociativity", "(D(x)1)l = (1(x)l)l on words", coassoc_ok,
                degree=degree)
        rep.add("counitality", "(e(x)1)l = id on words", counit_ok, degree=degree)
        return rep


def check_hopf_module(space, module_over=None, lact=None, ract=None,
                      comodule_over=None, lcoact=None, rcoact=None,
                      alg_rcoact=None, alg_lcoact=None):
    """Verify module, comodule, and compatibility conditions for the
    structures supplied; missing structures are skipped.

    module_over: FdAlgebra acting on the space (possibly a smash product);
    comodule_over: FdHopf coacting.  alg_rcoact / alg_lcoact: coactions of
    comodule_over on module_over, needed for the mixed compatibilities; for a
    Hopf algebra acting on itself these are its comult.
    """
    rep = Report("hopf-module")
    i_v = LinMap.identity(space)
    if module_over is not None:
        M = module_over.space
        i_m = LinMap.identity(M)
        u = module_over.unit_map()
        if lact is not None:
            rep.add("left-module", "(ab)v = a(bv)",
                    lact @ module_over.mult.tensor(i_v) ==
                    lact @ i_m.tensor(lact))
            rep.add("left-unit", "1v = v",
                    lact @ u.tensor(i_v) == left_unitor(space))
        if ract is not None:
            rep.add("right-module", "v(ab) = (va)b",
                    ract @ i_v.tensor(module_over.mult) ==
                    ract @ ract.tensor(i_m))
            rep.add("right-unit", "v1 = v",
                    ract @ i_v.tensor(u) == right_unitor(space))
        if lact is not None and ract is not None:
            rep.add("bimodule", "(av)b = a(vb)",
                    ract @ lact.tensor(i_m) ==
                    lact @ i_m.tensor(ract))
    if comodule_over is not None:
        H = comodule_over.space
        i_h = LinMap.identity(H)
        if rcoact is not None:
            rep.extend(_renamed(Comodule(space, comodule_over, rcoact, "right").check(),
                                "right-comodule"))
        if lcoact is not None:
            rep.extend(_renamed(Comodule(space, comodule_over, lcoact, "left").check(),
                                "left-comodule"))
        if lcoact is not None and rcoact is not None:
            rep.add("bicomodule", "(1(x)r)l = (l(x)1)r",
                    i_h.tensor(rcoact) @ lcoact == lcoact.tensor(i_h) @ rcoact)
    if module_over is not None and comodule_over is not None:
        M, H = module_over.space, comodule_over.space
        i_m, i_h = LinMap.identity(M), LinMap.identity(H)
        if lact is not None and rcoact is not None and alg_rcoact is not None:
            rep.add("left-action right-coaction compat",
                    "r(av) = a0 v0 (x) a1 v1",
                    rcoact @ lact ==
                    lact.tensor(comodule_over.mult)
                    @ i_m.tensor(swap_map(H, space)).tensor(i_h)
                    @ alg_rcoact.tensor(rcoact))
        if ract is not None and rcoact is not None and alg_rcoact is not None:
            rep.add("right-action right-coaction compat",
                    "r(va) = v0 a0 (x) v1 a1",
                    rcoact @ ract ==
                    ract.tensor(comodule_over.mult)
                    @ i_v.tensor(swap_map(H, M)).tensor(i_h)
                    @ rcoact.tensor(alg_rcoact))
        if lact is not None and lcoact is not None and alg_lcoact is not None:
            rep.add("left-action left-coaction compat",
                    "l(av) = a-1 v-1 (x) a0 v0",
                    lcoact @ lact ==
                    comodule_over.mult.tensor(lact)
                    @ i_h.tensor(swap_map(M, H)).tensor(i_v)
                    @ alg_lcoact.tensor(lcoact))
        if ract is not None and lcoact is not None and alg_lcoact is not None:
            rep.add("right-action left-coaction compat",
                    "l(va) = v-1 a-1 (x) v0 a0",
                    lcoact @ ract ==
                    comodule_over.mult.tensor(ract)
                    @ i_h.tensor(swap_map(space, H)).tensor(i_m)
                    @ lcoact.tensor(alg_lcoact))
    return rep


def _renamed(report, prefix):
    for c in report.checks:
        c["name"] = "%s %s" % (prefix, c["name"])
    return report


def check_action_on_calculus(hopf, forms, action_k, degree=2, max_form_degree=1,
                             h_degree=None):
    """Audit that an H-action on graded forms makes the calculus covariant.

    action_k(h_key, i, form_key) -> dict.  Checks the graded product rule
    h.(uv) = (h1.u)(h2.v) over all degree splits, h.d = d.h on degree 0 (and
    higher degrees when present), unit action, and composition.
    """
    rep = Report("action-on-calculus")
    h_keys = hopf.keys_upto(h_degree if h_degree is not None else degree)

    def keys(i):
        return forms.form_keys(i, degree)

    prod_ok = True
    for i in range(max_form_degree + 1):
        for j in range(max_form_degree + 1 - i):
            for k1 in keys(i):
                for k2 in keys(j):
                    wedge = forms.wedge_kk(i, k1, j, k2)
                    if wedge is None:
                        continue
                    for h in h_keys:
                        lhs = {}
                        for w, c in wedge.items():
                            for w2, c2 in action_k(h, i + j, w).items():
                                _acc(lhs, w2, c * c2)
                        rhs = {}
                        for (a, b), c in hopf.comult_k(h).items():
                            u = action_k(a, i, k1)
                            v = action_k(b, j, k2)
                            for w1, c1 in u.items():
                                for w2, c2 in v.items():
                                    cc = c * c1 * c2
                                    if cc.is_zero:
                                        continue
                                    ww = forms.wedge_kk(i, w1, j, w2)
                                    for w, cw in ww.items():
                                        _acc(rhs, w, cc * cw)
                        if lhs != rhs:
                            prod_ok = False
                            rep.add("graded-product@(%s;%d,%d)" %
                                    (hopf.key_str(h), i, j),
                                    "h.(uv) = (h1.u)(h2.v)", False,
                                    witness="%s | %s | %s" %
                                    (hopf.key_str(h), forms.key_str(i, k1),
                                     forms.key_str(j, k2)))
    rep.add("graded-product-rule", "h.(uv) = (h1.u)(h2.v)", prod_ok,
            degree=degree)

    d_ok = True
    for i in range(max_form_degree):
        for k in keys(i):
            dk = forms.d_k(i, k)
            for h in h_keys:
                lhs = {}
                for w, c in dk.items():
                    for w2, c2 in action_k(h, i + 1, w).items():
                        _acc(lhs, w2, c * c2)
                rhs = {}
                for w, c in action_k(h, i, k).items():
                    for w2, c2 in forms.d_k(i, w).items():
                        _acc(rhs, w2, c * c2)
                if lhs != rhs:
                    d_ok = False
                    rep.add("d-equivariance@(%s,%s)" %
                            (hopf.key_str(h), forms.key_str(i, k)),
                            "h.d(u) = d(h.u)", False)
    rep.add("d-equivariance", "h.d(u) = d(h.u)", d_ok, degree=degree)

    unit_ok, comp_ok = True, True
    for i in range(max_form_degree + 1):
        for k in keys(i):
            if action_k(hopf.one_key, i, k) != {k: ONE}:
                unit_ok = False
            for g in h_keys:
                for h in h_keys:
                    inner = action_k(h, i, k)
                    lhs = {}
                    for w, c in inner.items():
                        for w2, c2 in action_k(g, i, w).items():
                            _acc(lhs, w2, c * c2)
                    rhs = {}
                    for t, c in hopf.mul_kk(g, h).items():
                        for w, cw in action_k(t, i, k).items():
                            _acc(rhs, w, c * cw)
                    if lhs != rhs:
                        comp_ok = False
    rep.add("unit-acts-trivially", "1.u = u", unit_ok)
    rep.add("composition", "g.(h.u) = (gh).u", comp_ok)
    return rep
