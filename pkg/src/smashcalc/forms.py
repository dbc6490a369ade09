"""Differential form carriers: universal calculus on finite-dimensional
algebras and presented calculi driven by rewriting.

UniversalForms realizes the degree-n universal forms over a based algebra B
inside B tensored with itself n+1 times, cut out by the vanishing of every
adjacent multiplication.  The spanning expressions b0 d(b1) ... d(bn) with
b1, ..., bn running over non-unit basis elements are independent (their
leading tensors are triangular against the rest), so they serve as the
recorded basis: every report witness stays readable and parseable.  The
product concatenates tensors with a multiplication at the junction; the
differential prepends a unit slot, which at the expression level is just
d(b0 d b1 ...) = 1 d(b0) d(b1) ....  Both are cross-checked in the test
suite against the alternating-unit-insertion model on raw tensors.

When the base algebra is a Hopf algebra, copro extends its coproduct to
forms as the unique graded algebra map with D(d h) = d(h1) (x) h2 +
h1 (x) d(h2); the (0, n) and (n, 0) components are the two coactions.

PresentedForms wraps a graded presentation whose rules encode the calculus
relations together with a generator-level differential, extends d by the
graded Leibniz rule, and gates on consistency: d must send every rewrite
rule to a relation that already holds, else the calculus does not exist
and InconsistentDifferential is raised.

Both expose one protocol, consumed by actions and the smash calculus:

    max_degree, one_key, form_keys(n, bound), key_str(n, key),
    wedge_kk(i, k1, j, k2), d_k(n, key)
"""

from __future__ import annotations

from .errors import InconsistentDifferential
from .linear import BasedSpace, LinMap, Solver
from .ncalg import _acc
from .reports import Report
from .scalars import ONE, ZERO


def _concat(base, t1, t2):
    """Junction product of sparse tensors over base-algebra key tuples."""
    out = {}
    for u, cu in t1.items():
        for v, cv in t2.items():
            c = cu * cv
            if c.is_zero:
                continue
            for k, ck in base.mul_kk(u[-1], v[0]).items():
                _acc(out, u[:-1] + (k,) + v[1:], c * ck)
    return out


class UniversalForms:
    def __init__(self, base, max_degree=2, label=None):
        self.base = base
        self.max_degree = max_degree
        self.label = label or "Omega(%s)" % base.space.label
        self._keys = {}
        self._kindex = {}
        self._solvers = {}
        self._expansions = {}
        self._wedge_cache = {}
        self._copro_cache = {}
        self._d_tensor = {}

    # -- basis bookkeeping --

    @property
    def one_key(self):
        return (self.base.one_key,)

    def form_keys(self, n, bound=None):
        keys = self._keys.get(n)
        if keys is None:
            one = self.base.one_key
            rng = range(self.base.dim)
            if n == 0:
                keys = [(k,) for k in rng]
            else:
                keys = [prev + (k,) for prev in self.form_keys(n - 1)
                        for k in rng if k != one]
            self._keys[n] = keys
            self._kindex[n] = {k: i for i, k in enumerate(keys)}
        return keys

    def dim(self, n):
        return len(self.form_keys(n))

    def key_index(self, n, key):
        self.form_keys(n)
        return self._kindex[n][key]

    def key_str(self, n, key):
        if n == 0:
            return self.base.key_str(key[0])
        parts = [] if key[0] == self.base.one_key else [self.base.key_str(key[0])]
        parts += ["d(%s)" % self.base.key_str(k) for k in key[1:]]
        return "*".join(parts)

    def space(self, n):
        return BasedSpace("%s^%d" % (self.label, n),
                          tuple(self.key_str(n, k) for k in self.form_keys(n)))

    # -- tensor model --

    def expand(self, n, key):
        """b0 d(b1) ... d(bn) as a sparse tensor over key tuples."""
        hit = self._expansions.get(key)
        if hit is None:
            one = self.base.one_key
            hit = {(key[0],): ONE}
            for b in key[1:]:
                hit = _concat(self.base, hit, {(one, b): ONE, (b, one): -ONE})
            self._expansions[key] = hit
        return hit

    def _flat(self, t):
        i = 0
        for k in t:
            i = i * self.base.dim + k
        return i

    def _unflat(self, i, r):
        out = []
        for _ in range(r):
            i, k = divmod(i, self.base.dim)
            out.append(k)
        return tuple(reversed(out))

    def solver(self, n):
        s = self._solvers.get(n)
        if s is None:
            keys = self.form_keys(n)
            nrows = self.base.dim ** (n + 1)
            rows = [[ZERO] * len(keys) for _ in range(nrows)]
            for c, key in enumerate(keys):
                for t, coeff in self.expand(n, key).items():
                    rows[self._flat(t)][c] = coeff
            s = Solver([tuple(r) for r in rows], len(keys))
            assert s.rank == len(keys)
            self._solvers[n] = s
        return s

    def express(self, n, tdict):
        """Rewrite a tensor known to be a form in the expression basis.

        The basis is triangular: the expansion of b0 d(b1) ... d(bn) is its
        own index tuple plus terms with a literal unit in some slot past the
        first.  So the coefficients can be read off the unit-free tensor
        terms; the leftover must then cancel exactly, which doubles as a
        membership check.
        """
        one = self.base.one_key
        out = {}
        for t, c in tdict.items():
            if not c.is_zero and all(k != one for k in t[1:]):
                out[t] = c
        resid = dict(tdict)
        for key, c in out.items():
            for t, ce in self.expand(n, key).items():
                _acc(resid, t, -(c * ce))
        if any(not c.is_zero for c in resid.values()):
            raise ValueError("tensor is not a degree-%d form" % n)
        return out

    # -- calculus operations --

    def wedge_kk(self, i, k1, j, k2):
        if i == 0:
            # b (b0 d b1 ...) = (b b0) d b1 ...: stays key-level
            out = {}
            for t, c in self.base.mul_kk(k1[0], k2[0]).items():
                out[(t,) + k2[1:]] = c
            return out
        hit = self._wedge_cache.get((k1, k2))
        if hit is None:
            prod = _concat(self.base, self.expand(i, k1), self.expand(j, k2))
            hit = self.express(i + j, prod)
            self._wedge_cache[(k1, k2)] = hit
        return hit

    def wedge_tt(self, i, t1, j, t2):
        out = {}
        for k1, c1 in t1.items():
            for k2, c2 in t2.items():
                c = c1 * c2
                if c.is_zero:
                    continue
                for k, ck in self.wedge_kk(i, k1, j, k2).items():
                    _acc(out, k, c * ck)
        return out

    def d_k(self, n, key):
        if key[0] == self.base.one_key:
            return {}
        return {(self.base.one_key,) + key: ONE}

    def d_terms(self, n, terms):
        out = {}
        for k, c in terms.items():
            for k2, c2 in self.d_k(n, k).items():
                _acc(out, k2, c * c2)
        return out

    # -- matrix-level views, for kernels and cross-checks --

    def tensor_power(self, r):
        sp = self.base.space
        for _ in range(r - 1):
            sp = sp.tensor(self.base.space)
        return sp

    def embed_map(self, n):
        keys = self.form_keys(n)
        return LinMap.from_function(
            self.space(n), self.tensor_power(n + 1),
            lambda c: {self._flat(t): coeff
                       for t, coeff in self.expand(n, keys[c]).items()})

    def d_map(self, n):
        keys = self.form_keys(n)
        idx = lambda k: self.key_index(n + 1, k)
        return LinMap.from_function(
            self.space(n), self.space(n + 1),
            lambda c: {idx(k): coeff
                       for k, coeff in self.d_k(n, keys[c]).items()})

    def insertion_d(self, n):
        """Alternating unit insertions on raw tensors, the model that d_k
        must match under the embedding."""
        hit = self._d_tensor.get(n)
        if hit is None:
            one = self.base.one_key

            def col(flat):
                t = self._unflat(flat, n + 1)
                out = {}
                sign = ONE
                for i in range(n + 2):
                    _acc(out, self._flat(t[:i] + (one,) + t[i:]), sign)
                    sign = -sign
                return out

            hit = LinMap.from_function(self.tensor_power(n + 1),
                                       self.tensor_power(n + 2), col)
            self._d_tensor[n] = hit
        return hit

    def adjacent_mult_kernel_dim(self, n):
        """Dimension of the joint kernel of all adjacent multiplications on
        the (n+1)-fold tensor power, the independent size oracle."""
        from .linear import stack
        assert n >= 1
        maps = []
        for i in range(n):
            m = self.base.mult
            if i > 0:
                m = LinMap.identity(self.tensor_power(i)).tensor(m)
            if n - 1 - i > 0:
                m = m.tensor(LinMap.identity(self.tensor_power(n - 1 - i)))
            maps.append(m)
        stacked = maps[0]
        for m in maps[1:]:
            stacked = stack(stacked, m)
        ker, _ = stacked.kernel()
        return ker.dim

    # -- coproduct on forms, for a Hopf base --

    def copro(self, n, key):
        """Graded coproduct of a form, dict (i, ki, j, kj) -> Scalar."""
        hit = self._copro_cache.get(key)
        if hit is not None:
            return hit
        one = self.base.one_key
        cur = {(0, (a,), 0, (b,)): c
               for (a, b), c in self.base.comult_k(key[0]).items()}
        for b in key[1:]:
            factor = {}
            for (a, bb), c in self.base.comult_k(b).items():
                if a != one:
                    _acc(factor, (1, (one, a), 0, (bb,)), c)
                if bb != one:
                    _acc(factor, (0, (a,), 1, (one, bb)), c)
            cur = self._gts_mul(cur, factor)
        self._copro_cache[key] = cur
        return cur

    def _gts_mul(self, t1, t2):
        """Product in the graded tensor square of the form algebra."""
        out = {}
        for (i, k1, j, k2), c in t1.items():
            for (i2, k3, j2, k4), c2 in t2.items():
                c3 = c * c2
                if (j * i2) % 2:
                    c3 = -c3
                for w1, cw1 in self.wedge_kk(i, k1, i2, k3).items():
                    for w2, cw2 in self.wedge_kk(j, k2, j2, k4).items():
                        _acc(out, (i + i2, w1, j + j2, w2), c3 * cw1 * cw2)
        return out

    def lambda_k(self, n, key):
        """Left coaction component: forms -> H (x) forms."""
        out = {}
        for (i, k1, j, k2), c in self.copro(n, key).items():
            if i == 0:
                _acc(out, (k1[0], k2), c)
        return out

    def rho_k(self, n, key):
        """Right coaction component: forms -> forms (x) H."""
        out = {}
        for (i, k1, j, k2), c in self.copro(n, key).items():
            if j == 0:
                _acc(out, (k1, k2[0]), c)
        return out


def diagonal_form_action(action, forms):
    """Extend a module-algebra action to universal forms slot by slot.

    Returns act_k(h_key, n, form_key) -> dict.   Works on the raw tensor
    expansion, so nothing about d-equivariance is assumed; that identity is
    audited separately by check_action_on_calculus.
    """
    hopf, base = action.hopf, forms.base
    cache = {}

    def act_base(h_key, b_key):
        out = {}
        img = action.act_ww(hopf.key_word(h_key), base.key_word(b_key))
        for w, c in img.items():
            _acc(out, base.word_index[w], c)
        return out

    def act_k(h_key, n, key):
        hit = cache.get((h_key, n, key))
        if hit is not None:
            return hit
        parts = hopf.sweedler({h_key: ONE}, n)
        out_t = {}
        for t, c in forms.expand(n, key).items():
            for hkeys, ch in parts.items():
                vecs = [act_base(hk, bk) for hk, bk in zip(hkeys, t)]
                terms = [((), c * ch)]
                for v in vecs:
                    terms = [(tt + (bk,), cc * cv)
                             for tt, cc in terms for bk, cv in v.items()]
                for tt, cc in terms:
                    if not cc.is_zero:
                        _acc(out_t, tt, cc)
        hit = forms.express(n, out_t)
        cache[(h_key, n, key)] = hit
        return hit

    return act_k


class PresentedForms:
    """A calculus given by a graded presentation plus d on generators."""

    def __init__(self, pres, d_gens, max_degree=2):
        self.pres = pres
        self.max_degree = max_degree
        self.d_letters = {}
        for name, terms in d_gens.items():
            self.d_letters[pres.gen_index[name]] = dict(terms)
        for i, fd in enumerate(pres.form_degrees):
            if i not in self.d_letters:
                if fd == 0:
                    raise InconsistentDifferential(
                        "no differential given for generator %s"
                        % pres.gen_names[i])
                self.d_letters[i] = {}
        self._d_cache = {}

    one_key = ()

    def form_keys(self, n, bound=None):
        length = (bound if bound is not None else self.pres.degree_cap - n) + n
        return [w for w in self.pres.basis_upto(length)
                if self.pres.word_form_degree(w) == n]

    def key_str(self, n, key):
        return self.pres.word_str(key)

    def wedge_kk(self, i, k1, j, k2):
        return self.pres.nf_word(k1 + k2)

    def d_word(self, w):
        """Graded Leibniz extension of the generator differentials."""
        hit = self._d_cache.get(w)
        if hit is None:
            hit = {}
            sign = ONE
            for i, g in enumerate(w):
                dlet = self.d_letters[g]
                if dlet:
                    for mid, c in dlet.items():
                        for ww, cc in self.pres.nf_word(w[:i] + mid + w[i + 1:]).items():
                            _acc(hit, ww, sign * c * cc)
                if self.pres.form_degrees[g] % 2:
                    sign = -sign
            hit = {k: c for k, c in hit.items() if not c.is_zero}
            self._d_cache[w] = hit
        return hit

    def d_k(self, n, key):
        return self.d_word(key)

    def d_terms(self, terms):
        out = {}
        for w, c in terms.items():
            for w2, c2 in self.d_word(w).items():
                _acc(out, w2, c * c2)
        return out

    def check(self, degree=3):
        """Consistency gate: d respects every rewrite rule and squares to
        zero on words.  Raises InconsistentDifferential on failure."""
        rep = Report("presented-calculus")
        rules_ok = True
        for lhs, rhs in self.pres.rules.items():
            left = self.d_word(lhs)
            right = self.d_terms(rhs)
            diff = dict(left)
            for w, c in right.items():
                _acc(diff, w, -c)
            if diff:
                rules_ok = False
                rep.add("d-respects-%s" % self.pres.word_str(lhs),
                        "d(lhs) = d(rhs)", False,
                        witness=self.pres.word_str(lhs))
        rep.add("d-respects-rules", "d(lhs) = d(rhs) for every rule", rules_ok)
        sq_ok = True
        for w in self.pres.basis_upto(degree):
            if self.d_terms(self.d_word(w)):
                sq_ok = False
                rep.add("d-squared@%s" % self.pres.word_str(w),
                        "d(d(w)) = 0", False, witness=self.pres.word_str(w))
        rep.add("d-squared", "d(d(w)) = 0 on words", sq_ok, degree=degree)
        if not rep.ok:
            raise InconsistentDifferential(
                "calculus %s is inconsistent: %s"
                % (self.pres.label,
                   ", ".join(c["name"] for c in rep.failures())))
        return rep


def check_graded_leibniz(forms, degree=2, bound=2):
    """d(uv) = d(u)v + (-1)^|u| u d(v) over basis pairs with total degree
    bounded by the degree argument."""
    rep = Report("graded-leibniz")
    ok = True
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            for k1 in forms.form_keys(i, bound):
                for k2 in forms.form_keys(j, bound):
                    prod = forms.wedge_kk(i, k1, j, k2)
                    lhs = {}
                    for k, c in prod.items():
                        for k3, c2 in forms.d_k(i + j, k).items():
                            _acc(lhs, k3, c * c2)
                    rhs = {}
                    for k, c in forms.d_k(i, k1).items():
                        for k3, c2 in forms.wedge_kk(i + 1, k, j, k2).items():
                            _acc(rhs, k3, c * c2)
                    sign = -ONE if i % 2 else ONE
                    for k, c in forms.d_k(j, k2).items():
                        for k3, c2 in forms.wedge_kk(i, k1, j + 1, k).items():
                            _acc(rhs, k3, sign * c * c2)
                    if lhs != rhs:
                        ok = False
                        rep.add("leibniz@(%s,%s)" % (forms.key_str(i, k1),
                                                     forms.key_str(j, k2)),
                                "d(uv) = d(u)v + (-1)^|u| u d(v)", False,
                                witness="%s | %s" % (forms.key_str(i, k1),
                                                     forms.key_str(j, k2)))
    rep.add("graded-leibniz", "d(uv) = d(u)v + (-1)^|u| u d(v)", ok,
            degree=degree)
    return rep
