"""Hopf algebras in two representations behind one key-based interface.

FdHopf holds complete structure-constant tables (mult, unit, comult, counit,
antipode) over a finite basis; every instance is gated through the full axiom
verifier at construction unless explicitly built unchecked for mutation
testing.  PresentedBialgebra keeps the algebra presented by rewriting and the
coalgebra structure on generators only, extending comult multiplicatively and
counit as a character; it need not admit an antipode.

The shared interface, used by actions and smash products downstream:

    one_key          the key of the unit basis element
    keys_upto(d)     basis keys of word length <= d
    key_word(k)      the generator word a key stands for
    key_str(k)       display name
    key_degree(k)    word length
    mul_kk(k1, k2)   product of two basis elements, dict key -> Scalar
    comult_k(k)      coproduct, dict (key, key) -> Scalar
    counit_k(k)      Scalar

FdHopf keys are basis indices (ints); PresentedBialgebra keys are words.
"""

from __future__ import annotations

from .errors import GateFailure, SingularAntipode, NoSolution
from .linear import (BasedSpace, K, LinMap, left_unitor, right_unitor,
                     swap_map, vec_from_dict)
from .ncalg import Element, Presentation, _acc
from .reports import Report
from .scalars import ONE, ZERO, Scalar


class FdAlgebra:
    """Finite-dimensional unital algebra with structure tables."""

    def __init__(self, space, mult, unit_vec, basis_words=None, word_index=None):
        self.space = space
        self.mult = mult
        self.unit_vec = tuple(unit_vec)
        self.basis_words = basis_words
        self.word_index = word_index
        self._mul_table = {}

    @property
    def dim(self):
        return self.space.dim

    @property
    def one_key(self):
        # the unit must be a basis vector for key-level work
        hits = [i for i, c in enumerate(self.unit_vec) if not c.is_zero]
        assert len(hits) == 1 and self.unit_vec[hits[0]].is_one
        return hits[0]

    def unit_map(self):
        return LinMap.from_columns(K, self.space, [self.unit_vec])

    def keys_upto(self, degree=None):
        if degree is None or self.basis_words is None:
            return list(range(self.dim))
        return [i for i, w in enumerate(self.basis_words) if len(w) <= degree]

    def key_word(self, k):
        return self.basis_words[k] if self.basis_words is not None else (k,)

    def key_degree(self, k):
        return len(self.basis_words[k]) if self.basis_words is not None else 0

    def key_str(self, k):
        return self.space.basis[k]

    def mul_kk(self, i, j):
        hit = self._mul_table.get((i, j))
        if hit is None:
            n = self.dim
            col = self.mult.column(i * n + j)
            hit = {t: c for t, c in enumerate(col) if not c.is_zero}
            self._mul_table[(i, j)] = hit
        return hit

    def mul_elems(self, a, b):
        """Product of two dict-elements key -> Scalar."""
        out = {}
        for i, ci in a.items():
            for j, cj in b.items():
                c = ci * cj
                if c.is_zero:
                    continue
                for t, ct in self.mul_kk(i, j).items():
                    _acc(out, t, c * ct)
        return out

    def elem_str(self, elem):
        if not elem:
            return "0"
        parts = []
        for k in sorted(elem):
            c = elem[k]
            name = self.key_str(k)
            cs = str(c)
            if " " in cs or cs.startswith("-"):
                cs = "(%s)" % cs
            parts.append(name if c.is_one else "%s*%s" % (cs, name))
        return " + ".join(parts)


class FdHopf(FdAlgebra):
    """Finite-dimensional Hopf algebra; constructor verifies the axioms."""

    def __init__(self, space, mult, unit_vec, comult, counit, antipode,
                 basis_words=None, word_index=None, check=True, label=None):
        super().__init__(space, mult, unit_vec, basis_words, word_index)
        self.comult = comult
        self.counit = counit
        self.antipode = antipode
        self.label = label or space.label
        self._antipode_inv = None
        self._comult_table = {}
        if check:
            verify_fd_hopf(self).require("Hopf axioms fail for %s" % self.label)

    # -- key interface --

    def comult_k(self, i):
        hit = self._comult_table.get(i)
        if hit is None:
            n = self.dim
            col = self.comult.column(i)
            hit = {(t // n, t % n): c for t, c in enumerate(col) if not c.is_zero}
            self._comult_table[i] = hit
        return hit

    def counit_k(self, i):
        return self.counit.column(i)[0]

    def antipode_k(self, i):
        col = self.antipode.column(i)
        return {t: c for t, c in enumerate(col) if not c.is_zero}

    def antipode_inv(self):
        if self._antipode_inv is None:
            try:
                self._antipode_inv = self.antipode.inverse()
            except NoSolution:
                raise SingularAntipode("antipode of %s is singular" % self.label)
        return self._antipode_inv

    def antipode_inv_k(self, i):
        col = self.antipode_inv().column(i)
        return {t: c for t, c in enumerate(col) if not c.is_zero}

    def sweedler(self, elem, n):
        """n-fold coproduct of a dict-element, as dict over key tuples."""
        out = {(k,): c for k, c in elem.items()}
        for _ in range(n):
            nxt = {}
            for keys, c in out.items():
                for (a, b), cc in self.comult_k(keys[-1]).items():
                    _acc(nxt, keys[:-1] + (a, b), c * cc)
            out = nxt
        return out


def verify_fd_hopf(h):
    """All Hopf axioms as exact matrix identities.  Returns a Report."""
    rep = Report("hopf-axioms")
    V = h.space
    i_v = LinMap.identity(V)
    u = h.unit_map()
    lu, ru = left_unitor(V), right_unitor(V)

    rep.add("associativity", "m(m(x)1) = m(1(x)m)",
            h.mult @ h.mult.tensor(i_v) == h.mult @ i_v.tensor(h.mult))
    rep.add("unit-left", "m(u(x)1) = id", h.mult @ u.tensor(i_v) == lu)
    rep.add("unit-right", "m(1(x)u) = id", h.mult @ i_v.tensor(u) == ru)
    rep.add("coassociativity", "(D(x)1)D = (1(x)D)D",
            h.comult.tensor(i_v) @ h.comult == i_v.tensor(h.comult) @ h.comult)
    rep.add("counit-left", "(e(x)1)D = id", lu @ h.counit.tensor(i_v) @ h.comult == i_v)
    rep.add("counit-right", "(1(x)e)D = id", ru @ i_v.tensor(h.counit) @ h.comult == i_v)
    mid = i_v.tensor(swap_map(V, V)).tensor(i_v)
    rep.add("comult-multiplicative", "D m = (m(x)m)(1 s 1)(D(x)D)",
            h.comult @ h.mult ==
            h.mult.tensor(h.mult) @ mid @ h.comult.tensor(h.comult))
    rep.add("comult-unit", "D(1) = 1(x)1",
            h.comult(h.unit_vec) ==
            tuple(a * b for a in h.unit_vec for b in h.unit_vec))
    rep.add("counit-multiplicative", "e m = e(x)e",
            h.counit @ h.mult == left_unitor(K) @ h.counit.tensor(h.counit))
    rep.add("counit-unit", "e(1) = 1", h.counit(h.unit_vec) == (ONE,))
    ue = u @ h.counit
    rep.add("antipode-left", "m(S(x)1)D = u e",
            h.mult @ h.antipode.tensor(i_v) @ h.comult == ue)
    rep.add("antipode-right", "m(1(x)S)D = u e",
            h.mult @ i_v.tensor(h.antipode) @ h.comult == ue)
    return rep


def fd_algebra_from_presentation(pres, label=None):
    """Materialize a presented algebra with finitely many normal words."""
    words = pres.finite_basis()
    if words is None:
        raise GateFailure("presentation %s has no finite basis" % pres.label)
    index = {w: i for i, w in enumerate(words)}
    space = BasedSpace(label or pres.label, tuple(pres.word_str(w) for w in words))
    n = len(words)

    def mult_col(col):
        i, j = divmod(col, n)
        prod = pres.nf_word(words[i] + words[j])
        return {index[w]: c for w, c in prod.items()}

    mult = LinMap.from_function(space.tensor(space), space, mult_col)
    unit = vec_from_dict({index[()]: ONE}, n)
    return FdAlgebra(space, mult, unit, tuple(words), index)


def fd_hopf_from_presentation(pres, comult_gens, counit_gens, antipode_gens,
                              label=None, check=True):
    """Derive full FdHopf tables from generator-level structure.

    comult_gens / counit_gens / antipode_gens map generator name to a
    tensor-square dict ((word, word) -> Scalar), a Scalar, and a word dict.
    Comult and counit extend multiplicatively, the antipode anti-
    multiplicatively; nothing is hand-typed per basis element.
    """
    base = fd_algebra_from_presentation(pres, label)
    words, index, n = base.basis_words, base.word_index, base.dim

    def comult_word(w):
        out = {((), ()): ONE}
        for g in w:
            step = {}
            dg = comult_gens[pres.gen_names[g]]
            for (u1, u2), c in out.items():
                for (v1, v2), cv in dg.items():
                    for w1, c1 in pres.nf_word(u1 + v1).items():
                        for w2, c2 in pres.nf_word(u2 + v2).items():
                            _acc(step, (w1, w2), c * cv * c1 * c2)
            out = step
        return out

    def counit_word(w):
        c = ONE
        for g in w:
            c = c * counit_gens[pres.gen_names[g]]
            if c.is_zero:
                break
        return c

    def antipode_word(w):
        out = {(): ONE}
        for g in w:  # S(uv) = S(v)S(u): multiply each letter on the left
            step = {}
            sg = antipode_gens[pres.gen_names[g]]
            for u, c in out.items():
                for v, cv in sg.items():
                    for w2, c2 in pres.nf_word(v + u).items():
                        _acc(step, w2, c * cv * c2)
            out = step
        return out

    comult = LinMap.from_function(
        base.space, base.space.tensor(base.space),
        lambda i: {index[a] * n + index[b]: c
                   for (a, b), c in comult_word(words[i]).items()})
    counit = LinMap.from_function(
        base.space, K, lambda i: {0: counit_word(words[i])})
    antipode = LinMap.from_function(
        base.space, base.space,
        lambda i: {index[w]: c for w, c in antipode_word(words[i]).items()})
    return FdHopf(base.space, base.mult, base.unit_vec, comult, counit,
                  antipode, words, index, check=check, label=label or pres.label)


class PresentedBialgebra:
    """A bialgebra presented by rewriting, coalgebra data on generators."""

    def __init__(self, pres, comult_gens, counit_gens, antipode_gens=None):
        self.pres = pres
        self.comult_gens = {pres.gen_index[n]: dict(t)
                            for n, t in comult_gens.items()}
        self.counit_gens = {pres.gen_index[n]: c for n, c in counit_gens.items()}
        self.antipode_gens = None
        if antipode_gens is not None:
            self.antipode_gens = {pres.gen_index[n]: dict(t)
                                  for n, t in antipode_gens.items()}
        self._comult_cache = {}

    @property
    def label(self):
        return self.pres.label

    # -- key interface (keys are words) --

    one_key = ()

    def keys_upto(self, degree):
        return self.pres.basis_upto(degree)

    def key_word(self, w):
        return w

    def key_degree(self, w):
        return len(w)

    def key_str(self, w):
        return self.pres.word_str(w)

    def mul_kk(self, w1, w2):
        return self.pres.nf_word(w1 + w2)

    def comult_k(self, w):
        hit = self._comult_cache.get(w)
        if hit is not None:
            return hit
        if not w:
            out = {((), ()): ONE}
        else:
            head = self.comult_gens[w[0]]
            out = {}
            for (u1, u2), c in head.items():
                for (v1, v2), cv in self.comult_k(w[1:]).items():
                    for w1, c1 in self.pres.nf_word(u1 + v1).items():
                        for w2, c2 in self.pres.nf_word(u2 + v2).items():
                            _acc(out, (w1, w2), c * cv * c1 * c2)
        self._comult_cache[w] = out
        return out

    def counit_k(self, w):
        c = ONE
        for g in w:
            c = c * self.counit_gens[g]
            if c.is_zero:
                break
        return c

    def sweedler(self, elem, n):
        out = {(k,): c for k, c in elem.items()}
        for _ in range(n):
            nxt = {}
            for keys, c in out.items():
                for (a, b), cc in self.comult_k(keys[-1]).items():
                    _acc(nxt, keys[:-1] + (a, b), c * cc)
            out = nxt
        return out

    def elem_str(self, elem):
        return str(Element(self.pres, dict(elem)))


def check_presented_bialgebra(b, degree=2):
    """Bialgebra laws for a presented backend, on words up to a length bound.

    Checks that comult and counit kill every defining relation (so the
    multiplicative extensions are well defined) and that coassociativity and
    counitality hold on basis words.
    """
    rep = Report("presented-bialgebra")
    pres = b.pres
    for lhs, rhs in pres.rules.items():
        dl = b.comult_k(lhs)
        dr = {}
        for w, c in rhs.items():
            for pair, cc in b.comult_k(w).items():
                _acc(dr, pair, c * cc)
        diff = dict(dl)
        for pair, c in dr.items():
            _acc(diff, pair, -c)
        rep.add("comult-respects-%s" % pres.word_str(lhs),
                "D(lhs) = D(rhs)", not diff,
                witness=pres.word_str(lhs))
        el = b.counit_k(lhs)
        er = ZERO
        for w, c in rhs.items():
            er = er + c * b.counit_k(w)
        rep.add("counit-respects-%s" % pres.word_str(lhs),
                "e(lhs) = e(rhs)", el == er, witness=pres.word_str(lhs))
    coassoc_ok, counit_ok = True, True
    for w in pres.basis_upto(degree):
        left = {}
        right = {}
        for (a, c_), co in b.comult_k(w).items():
            for (a1, a2), c2 in b.comult_k(a).items():
                _acc(left, (a1, a2, c_), co * c2)
            for (c1, c2_), c3 in b.comult_k(c_).items():
                _acc(right, (a, c1, c2_), co * c3)
        if left != right:
            coassoc_ok = False
            rep.add("coassoc-%s" % pres.word_str(w), "(D(x)1)D = (1(x)D)D",
                    False, witness=pres.word_str(w))
        lcu = {}
        rcu = {}
        for (a, c_), co in b.comult_k(w).items():
            _acc(lcu, c_, co * b.counit_k(a))
            _acc(rcu, a, co * b.counit_k(c_))
        if lcu != {w: ONE} or rcu != {w: ONE}:
            counit_ok = False
            rep.add("counit-%s" % pres.word_str(w), "(e(x)1)D = id = (1(x)e)D",
                    False, witness=pres.word_str(w))
    rep.add("coassociativity", "(D(x)1)D = (1(x)D)D on words", coassoc_ok,
            degree=degree)
    rep.add("counitality", "(e(x)1)D = id = (1(x)e)D on words", counit_ok,
            degree=degree)
    return rep
