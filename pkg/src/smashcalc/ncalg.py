"""Presented graded algebras with rewriting normal forms.

A Presentation is a free algebra on named generators (each carrying a form
degree, 0 for algebra generators and 1 for differentials) modulo rewrite rules
lhs -> rhs.  Rules must be strictly decreasing in the degree-lexicographic
order induced by a declared generator precedence; that makes rewriting
terminate, so every element has a normal form, computed by leftmost reduction
and memoized per presentation.

Confluence is never assumed.  check_local_confluence audits all critical
pairs up to a degree bound and reports the ones that fail to resolve; no
completion is attempted.  Equal normal forms always certify equality in the
algebra; distinct normal forms certify inequality only once the audit for the
relevant degree comes back empty.

Words are tuples of generator indices.  The empty word is the unit.
"""

from __future__ import annotations

from .errors import DegreeCapExceeded, NonOrientable, UnknownGenerator
from .scalars import ONE, ZERO, Scalar

Word = tuple


class Presentation:
    def __init__(self, gens, relations=(), rules=(), precedence=None,
                 degree_cap=6, label="A"):
        """gens: sequence of (name, form_degree).

        relations: elements (dicts word -> Scalar) read as "= 0" and oriented
        automatically on their deglex-leading word.  rules: explicit
        (lhs_word, rhs_dict) pairs, validated strictly and rejected with
        NonOrientable when mis-oriented.
        """
        self.label = label
        self.gen_names = tuple(name for name, _ in gens)
        self.form_degrees = tuple(d for _, d in gens)
        if len(set(self.gen_names)) != len(self.gen_names):
            raise ValueError("duplicate generator names")
        self.gen_index = {n: i for i, n in enumerate(self.gen_names)}
        if precedence is None:
            precedence = self.gen_names
        if sorted(precedence) != sorted(self.gen_names):
            raise ValueError("precedence must list every generator exactly once")
        self._prec = {self.gen_index[n]: r for r, n in enumerate(precedence)}
        self.degree_cap = degree_cap
        self.rules = {}
        self._nf_cache = {}

        for lhs, rhs in rules:
            self._validate_rule(tuple(lhs), dict(rhs))
        work = [dict(r) for r in relations]
        self._absorb(work)
        self._interreduce()

    # -- order --

    def order_key(self, word):
        return (len(word), tuple(self._prec[g] for g in word))

    def word_form_degree(self, word):
        return sum(self.form_degrees[g] for g in word)

    # -- construction helpers --

    def _validate_rule(self, lhs, rhs):
        if not lhs:
            raise NonOrientable("empty left-hand side")
        lk = self.order_key(lhs)
        fd = self.word_form_degree(lhs)
        for w, c in rhs.items():
            if c.is_zero:
                continue
            if self.order_key(w) >= lk:
                raise NonOrientable(
                    "rule %s -> ... does not decrease the term order"
                    % self.word_str(lhs))
            if self.word_form_degree(w) != fd:
                raise ValueError("rule %s is not form-degree homogeneous"
                                 % self.word_str(lhs))
        if lhs in self.rules:
            raise NonOrientable("duplicate rule for %s" % self.word_str(lhs))
        self.rules[lhs] = {w: c for w, c in rhs.items() if not c.is_zero}

    def _absorb(self, work):
        # turn relation elements into oriented rules, folding redundancies
        guard = 0
        while work:
            guard += 1
            if guard > 10000:
                raise NonOrientable("relation set does not stabilize")
            e = self._reduce_raw(work.pop(0))
            e = {w: c for w, c in e.items() if not c.is_zero}
            if not e:
                continue
            lead = max(e, key=self.order_key)
            c = e[lead]
            rhs = {}
            for w, cw in e.items():
                if w != lead:
                    rhs[w] = -cw / c
            fd = self.word_form_degree(lead)
            for w in rhs:
                if self.word_form_degree(w) != fd:
                    raise ValueError("relation on %s is not form-degree homogeneous"
                                     % self.word_str(lead))
            # a rule whose lhs contains the new lhs becomes redundant; recycle it
            stale = [l for l in self.rules if l != lead and _contains(l, lead)]
            self.rules[lead] = rhs
            for l in stale:
                r = self.rules.pop(l)
                back = dict(r)
                back[l] = back.get(l, ZERO) - ONE
                work.append({w: -c for w, c in back.items()})
            self._nf_cache.clear()

    def _interreduce(self):
        for _ in range(100):
            changed = False
            for lhs in list(self.rules):
                rhs = self.rules[lhs]
                others = {l: r for l, r in self.rules.items() if l != lhs}
                red = _reduce_with(others, rhs)
                if red != rhs:
                    self.rules[lhs] = {w: c for w, c in red.items() if not c.is_zero}
                    changed = True
            if not changed:
                break
        else:
            raise NonOrientable("interreduction does not stabilize")
        self._nf_cache.clear()

    def _reduce_raw(self, terms):
        return _reduce_with(self.rules, terms)

    # -- normal forms --

    def nf_word(self, word):
        """Normal form of a single word as dict word -> Scalar.  Memoized."""
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        hit = _find_redex(self.rules, word)
        if hit is None:
            out = {word: ONE}
        else:
            pos, lhs, rhs = hit
            pre, post = word[:pos], word[pos + len(lhs):]
            out = {}
            for w, c in rhs.items():
                for w2, c2 in self.nf_word(pre + w + post).items():
                    _acc(out, w2, c * c2)
        self._nf_cache[word] = out
        return out

    def normal_terms(self, terms):
        out = {}
        for w, c in terms.items():
            if c.is_zero:
                continue
            for w2, c2 in self.nf_word(w).items():
                _acc(out, w2, c * c2)
        return out

    # -- elements --

    def zero(self):
        return Element(self, {})

    def one(self):
        return Element(self, {(): ONE})

    def gen(self, name):
        if name not in self.gen_index:
            raise UnknownGenerator("no generator %r in %s" % (name, self.label))
        return self.element({(self.gen_index[name],): ONE})

    def element(self, terms):
        return Element(self, self.normal_terms(terms))

    def word_element(self, word):
        return self.element({tuple(word): ONE})

    def mul_words(self, w1, w2):
        if len(w1) + len(w2) > self.degree_cap:
            raise DegreeCapExceeded(
                "product of length %d exceeds cap %d in %s"
                % (len(w1) + len(w2), self.degree_cap, self.label))
        return self.nf_word(w1 + w2)

    # -- enumeration --

    def is_irreducible(self, word):
        return _find_redex(self.rules, word) is None

    def basis_words(self, length):
        """Normal-form words of exactly the given length, sorted."""
        if length == 0:
            return [()]
        out = []
        for w in self.basis_words(length - 1):
            for g in range(len(self.gen_names)):
                cand = w + (g,)
                if self.is_irreducible(cand):
                    out.append(cand)
        out.sort()
        return out

    def basis_upto(self, length):
        out = []
        for n in range(length + 1):
            out.extend(self.basis_words(n))
        return out

    def finite_basis(self, probe_cap=None):
        """All normal-form words if finitely many, else None.

        Correct because every word longer than an empty level contains a
        reducible subword of that level's length.
        """
        cap = probe_cap if probe_cap is not None else self.degree_cap
        words, n = [()], 1
        while n <= cap:
            level = self.basis_words(n)
            if not level:
                return words
            words.extend(level)
            n += 1
        return None

    def random_element(self, rng, max_len=2, terms=2):
        pool = self.basis_upto(max_len)
        out = {}
        for _ in range(terms):
            w = pool[rng.randrange(len(pool))]
            c = Scalar((rng.randint(-3, 3), rng.randint(-2, 2)))
            _acc(out, w, c)
        return Element(self, {w: c for w, c in out.items() if not c.is_zero})

    # -- display --

    def word_str(self, word):
        if not word:
            return "1"
        parts = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            name = self.gen_names[word[i]]
            parts.append(name if j - i == 1 else "%s^%d" % (name, j - i))
            i = j
        return "*".join(parts)

    def __repr__(self):
        return "Presentation(%s: %s; %d rules)" % (
            self.label, ", ".join(self.gen_names), len(self.rules))


def _acc(d, k, c):
    v = d.get(k)
    v = c if v is None else v + c
    if v.is_zero:
        d.pop(k, None)
    else:
        d[k] = v


def _contains(word, sub):
    n, m = len(word), len(sub)
    return any(word[i:i + m] == sub for i in range(n - m + 1))


def _find_redex(rules, word):
    """Leftmost redex: (position, lhs, rhs) or None.  Ties broken by longer
    lhs first so containment pairs reduce deterministically."""
    n = len(word)
    best = None
    for lhs, rhs in rules.items():
        m = len(lhs)
        if m > n:
            continue
        for pos in range(n - m + 1):
            if word[pos:pos + m] == lhs:
                if best is None or pos < best[0] or (pos == best[0] and m > len(best[1])):
                    best = (pos, lhs, rhs)
                break
    return best


def _reduce_with(rules, terms):
    out = {}
    agenda = [(w, c) for w, c in terms.items()]
    while agenda:
        w, c = agenda.pop()
        if c.is_zero:
            continue
        hit = _find_redex(rules, w)
        if hit is None:
            _acc(out, w, c)
            continue
        pos, lhs, rhs = hit
        pre, post = w[:pos], w[pos + len(lhs):]
        for u, cu in rhs.items():
            agenda.append((pre + u + post, c * cu))
    return out


class Element:
    """A linear combination of normal-form words.  Immutable by convention."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = terms

    @property
    def is_zero(self):
        return not self.terms

    def form_degree(self):
        """Common form degree of all words, or None when mixed or zero."""
        degs = {self.alg.word_form_degree(w) for w in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def word_length(self):
        return max((len(w) for w in self.terms), default=0)

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _acc(out, w, c)
        return Element(self.alg, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Element(self.alg, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        self._check(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = c1 * c2
                if c.is_zero:
                    continue
                for w, cw in self.alg.mul_words(w1, w2).items():
                    _acc(out, w, c * cw)
        return Element(self.alg, out)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        if isinstance(c, int):
            c = Scalar.from_int(c)
        if c.is_zero:
            return Element(self.alg, {})
        return Element(self.alg, {w: c * cw for w, cw in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, Element) and self.alg is other.alg
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, word):
        return self.terms.get(tuple(word), ZERO)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=self.alg.order_key):
            c = self.terms[w]
            ws = self.alg.word_str(w)
            if not w:
                term = str(c)
            elif c.is_one:
                term = ws
            elif c == -ONE:
                term = "-" + ws
            else:
                cs = str(c)
                if " " in cs or cs.startswith("-"):
                    cs = "(%s)" % cs
                term = "%s*%s" % (cs, ws)
            parts.append(term)
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text

    def __repr__(self):
        return "<%s: %s>" % (self.alg.label, self)

    def _check(self, other):
        if not isinstance(other, Element) or other.alg is not self.alg:
            raise TypeError("elements of different presentations")


def check_local_confluence(alg, max_len):
    """Audit all critical pairs with overlap word length <= max_len.

    Returns a list of dicts, one per unresolved pair; empty means locally
    confluent up to the bound.
    """
    failures = []
    rules = list(alg.rules.items())
    for l1, r1 in rules:
        for l2, r2 in rules:
            # proper overlaps: a suffix of l1 equals a prefix of l2
            for k in range(1, min(len(l1), len(l2))):
                if l1[len(l1) - k:] == l2[:k]:
                    word = l1 + l2[k:]
                    if len(word) > max_len:
                        continue
                    _check_pair(alg, failures, word,
                                (0, l1, r1), (len(l1) - k, l2, r2))
            # containment: l2 occurs strictly inside l1
            if l1 != l2 and len(l2) < len(l1) and len(l1) <= max_len:
                for pos in range(len(l1) - len(l2) + 1):
                    if l1[pos:pos + len(l2)] == l2:
                        _check_pair(alg, failures, l1,
                                    (0, l1, r1), (pos, l2, r2))
    return failures


def _check_pair(alg, failures, word, red1, red2):
    one = alg.normal_terms(_apply_at(word, *red1))
    two = alg.normal_terms(_apply_at(word, *red2))
    if one != two:
        failures.append({
            "overlap": alg.word_str(word),
            "first": str(Element(alg, one)),
            "second": str(Element(alg, two)),
        })


def _apply_at(word, pos, lhs, rhs):
    pre, post = word[:pos], word[pos + len(lhs):]
    return {pre + u + post: c for u, c in rhs.items()}
