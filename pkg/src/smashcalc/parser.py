"""Expression parsing for kernel elements.

Grammar (whitespace-insensitive)::

    sum     :=  term (('+' | '-') term)*
    term    :=  factor ('#' factor)*
    factor  :=  signed (('*' | '/') signed)*
    signed  :=  '-' signed | power
    power   :=  atom ('^' '-'? INT)?
    atom    :=  IDENT | INT | '(' sum ')' | 'd' '(' sum ')'

Identifiers resolve against a *context* object that knows the declared
generators; ``q`` is always the ground-field parameter.  Evaluation happens
term by term in the context's own arithmetic, so the result of
``parse_expression`` is already in normal form.  The printers on the algebra
side emit text inside this same grammar, which gives parse(print(e)) == e
on normal forms.

Errors: malformed text raises ExprSyntaxError carrying the offending
position; an undeclared identifier raises UnknownGenerator.
"""

from .errors import ExprSyntaxError, UnknownGenerator
from .ncalg import Element, _acc
from .scalars import ONE, Q, ZERO, integer

_SYMBOLS = set("+-*/^#()")


def tokenize(text):
    """Split text into (kind, value, position) triples, end marker included."""
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            toks.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("ident", text[i:j], i))
            i = j
            continue
        raise ExprSyntaxError("unexpected character %r" % ch, i)
    toks.append(("end", None, n))
    return toks


def _scale(terms, c):
    if c.is_zero:
        return {}
    return {k: c * v for k, v in terms.items()}


def _add(t1, t2):
    out = dict(t1)
    for k, c in t2.items():
        _acc(out, k, c)
    return out


class _Parser:
    def __init__(self, text, ctx):
        self.ctx = ctx
        self.toks = tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise ExprSyntaxError("expected %r" % kind, tok[2])
        self.pos += 1
        return tok

    def parse(self):
        val = self.sum()
        kind, _, p = self.peek()
        if kind != "end":
            raise ExprSyntaxError("unexpected %r after expression"
                                  % str(self.toks[self.pos][1]), p)
        return val

    def sum(self):
        val = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            val = _add(val, rhs if op == "+" else _scale(rhs, -ONE))
        return val

    def term(self):
        val = self.factor()
        while self.peek()[0] == "#":
            _, _, p = self.take()
            rhs = self.factor()
            if not hasattr(self.ctx, "smash_join"):
                raise ExprSyntaxError("'#' is not available in this context", p)
            val = self.ctx.smash_join(val, rhs)
        return val

    def factor(self):
        val = self.signed()
        while self.peek()[0] in ("*", "/"):
            op, _, p = self.take()
            rhs = self.signed()
            if op == "*":
                val = self.ctx.mul(val, rhs)
            else:
                c = self.ctx.scalar_of(rhs)
                if c is None or c.is_zero:
                    raise ExprSyntaxError(
                        "division needs a nonzero scalar divisor", p)
                val = _scale(val, c.inv())
        return val

    def signed(self):
        if self.peek()[0] == "-":
            self.take()
            return _scale(self.signed(), -ONE)
        return self.power()

    def power(self):
        val = self.atom()
        if self.peek()[0] != "^":
            return val
        _, _, p = self.take()
        neg = False
        if self.peek()[0] == "-":
            self.take()
            neg = True
        _, k, _ = self.take("int")
        if neg:
            c = self.ctx.scalar_of(val)
            if c is None or c.is_zero:
                raise ExprSyntaxError(
                    "negative powers need a nonzero scalar base", p)
            out = ONE
            ci = c.inv()
            for _ in range(k):
                out = out * ci
            return self.ctx.unit_terms(out)
        out = self.ctx.unit_terms(ONE)
        for _ in range(k):
            out = self.ctx.mul(out, val)
        return out

    def atom(self):
        kind, value, p = self.peek()
        if kind == "(":
            self.take()
            val = self.sum()
            self.take(")")
            return val
        if kind == "int":
            self.take()
            return self.ctx.unit_terms(integer(value))
        if kind == "ident":
            if value == "q":
                self.take()
                return self.ctx.unit_terms(Q)
            if value == "d" and self.toks[self.pos + 1][0] == "(":
                if not hasattr(self.ctx, "d"):
                    raise ExprSyntaxError(
                        "'d' is not available in this context", p)
                self.take()
                self.take("(")
                val = self.sum()
                self.take(")")
                return self.ctx.d(val)
            self.take()
            return self.ctx.gen_terms(value)
        raise ExprSyntaxError("expected an expression", p)


def parse_expression(text, ctx):
    """Parse text in the given context; the result is a normal-form terms
    dict in the context's native key shape."""
    return _Parser(text, ctx).parse()


class ScalarContext:
    """No generators at all: expressions must reduce to ground-field values."""

    label = "scalars"

    def unit_terms(self, c):
        return {} if c.is_zero else {(): c}

    def gen_terms(self, name):
        raise UnknownGenerator("%r is not available in a scalar expression"
                               % name)

    def mul(self, t1, t2):
        if not t1 or not t2:
            return {}
        return {(): t1[()] * t2[()]}

    def scalar_of(self, terms):
        if not terms:
            return ZERO
        return terms[()]

    def print_terms(self, terms):
        return str(self.scalar_of(terms))


def parse_scalar(text):
    return ScalarContext().scalar_of(parse_expression(text, ScalarContext()))


class FreeWordContext:
    """Words of a free algebra: products concatenate, nothing rewrites.

    Presentation data is read through this context, since relations cannot
    be normalized against rules that do not exist yet.
    """

    def __init__(self, gen_index, label="free"):
        self.gen_index = dict(gen_index)
        self.label = label

    def unit_terms(self, c):
        return {} if c.is_zero else {(): c}

    def gen_terms(self, name):
        if name not in self.gen_index:
            raise UnknownGenerator("%r is not a generator of %s"
                                   % (name, self.label))
        return {(self.gen_index[name],): ONE}

    def mul(self, t1, t2):
        out = {}
        for w1, c1 in t1.items():
            for w2, c2 in t2.items():
                _acc(out, w1 + w2, c1 * c2)
        return out

    def scalar_of(self, terms):
        if not terms:
            return ZERO
        if set(terms) == {()}:
            return terms[()]
        return None


class AlgebraContext:
    """Evaluation inside one presented algebra; products are normalized."""

    def __init__(self, pres):
        self.pres = pres
        self.label = pres.label

    def unit_terms(self, c):
        return {} if c.is_zero else {(): c}

    def gen_terms(self, name):
        if name not in self.pres.gen_index:
            raise UnknownGenerator("%r is not a generator of %s"
                                   % (name, self.pres.label))
        return {(self.pres.gen_index[name],): ONE}

    def mul(self, t1, t2):
        out = {}
        for w1, c1 in t1.items():
            for w2, c2 in t2.items():
                c = c1 * c2
                for w, c3 in self.pres.nf_word(w1 + w2).items():
                    _acc(out, w, c * c3)
        return out

    def scalar_of(self, terms):
        if not terms:
            return ZERO
        if set(terms) == {()}:
            return terms[()]
        return None

    def degrees(self, terms):
        """(word length, form degree) maxima over the support."""
        if not terms:
            return (0, 0)
        return (max(len(w) for w in terms),
                max(self.pres.word_form_degree(w) for w in terms))

    def print_terms(self, terms):
        return str(Element(self.pres, terms))


class FormsContext(AlgebraContext):
    """Algebra context plus the differential."""

    def __init__(self, forms):
        AlgebraContext.__init__(self, forms.pres)
        self.forms = forms

    def d(self, terms):
        return self.forms.d_terms(terms)


class SmashContext:
    """Evaluation in a smash product.

    Identifiers resolve on whichever tensor leg declares them and come back
    embedded, so `#` is ordinary multiplication of the two embedded factors;
    a name declared on both legs is rejected as ambiguous.
    """

    def __init__(self, smash):
        self.smash = smash
        self.label = smash.label
        hopf = smash.hopf
        if hasattr(hopf, "pres"):
            self._h_names = {name: (idx,)
                             for name, idx in hopf.pres.gen_index.items()}
        else:
            self._h_names = {}
            for k in range(hopf.dim):
                name = hopf.key_str(k)
                if name.isidentifier():
                    self._h_names[name] = k

    def unit_terms(self, c):
        if c.is_zero:
            return {}
        return {((), self.smash.hopf.one_key): c}

    def gen_terms(self, name):
        on_a = name in self.smash.alg.gen_index
        if on_a and name in self._h_names:
            raise UnknownGenerator(
                "%r names generators on both legs of %s"
                % (name, self.smash.label))
        if on_a:
            letter = self.smash.alg.gen_index[name]
            return self.smash.embed_a({(letter,): ONE}).terms
        if name in self._h_names:
            return self.smash.embed_h({self._h_names[name]: ONE}).terms
        raise UnknownGenerator("%r is not a generator of %s"
                               % (name, self.smash.label))

    def mul(self, t1, t2):
        return self.smash.mul_terms(t1, t2)

    smash_join = mul

    def scalar_of(self, terms):
        unit = ((), self.smash.hopf.one_key)
        if not terms:
            return ZERO
        if set(terms) == {unit}:
            return terms[unit]
        return None

    def degrees(self, terms):
        if not terms:
            return (0, 0)
        return (max(self.smash.pair_degree(k) for k in terms),
                max(self.smash.alg.word_form_degree(k[0]) for k in terms))

    def print_terms(self, terms):
        return self.smash.elem_str(terms)
