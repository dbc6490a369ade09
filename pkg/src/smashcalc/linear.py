"""Exact linear algebra over Q(q): based spaces, maps, kernels, solving.

Vectors are tuples of Scalar indexed by a BasedSpace's basis.  A LinMap stores
one column per domain basis vector.  Everything is dense but all inner loops
skip zero entries, which is what actually matters here: the matrices this
package produces are sparse kernels of structure maps.

Conventions pinned once and used everywhere:
  * tensor products are Kronecker with the left factor varying slowest,
    index(i, j) = i * dim_right + j;
  * Gaussian elimination picks the pivot with the lowest degree to control
    coefficient growth;
  * solve() returns the solution whose free coordinates are all zero, so
    results are deterministic.
"""

from __future__ import annotations

from .errors import DimensionMismatch, NoSolution
from .scalars import ONE, ZERO, Scalar


class BasedSpace:
    """A finite-dimensional Q(q)-vector space with a named basis."""

    __slots__ = ("label", "basis")

    def __init__(self, label, basis):
        self.label = label
        self.basis = tuple(basis)

    @property
    def dim(self):
        return len(self.basis)

    def basis_vector(self, i):
        return tuple(ONE if j == i else ZERO for j in range(self.dim))

    def zero(self):
        return (ZERO,) * self.dim

    def tensor(self, other):
        basis = tuple(
            "%s(x)%s" % (a, b) for a in self.basis for b in other.basis
        )
        return BasedSpace("%s(x)%s" % (self.label, other.label), basis)

    def __eq__(self, other):
        return isinstance(other, BasedSpace) and self.dim == other.dim

    def __repr__(self):
        return "BasedSpace(%r, dim=%d)" % (self.label, self.dim)


K = BasedSpace("k", ("1",))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))

def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))

def vscale(c, u):
    return tuple(c * a for a in u)

def vzero(n):
    return (ZERO,) * n

def kron(u, v):
    return tuple(a * b for a in u for b in v)

def vec_from_dict(d, n):
    out = [ZERO] * n
    for i, c in d.items():
        out[i] = out[i] + c
    return tuple(out)


def _complexity(s):
    return len(s.num) + len(s.den)


class LinMap:
    """A linear map between based spaces, stored as rows of Scalars."""

    __slots__ = ("dom", "cod", "rows")

    def __init__(self, dom, cod, rows):
        self.dom, self.cod = dom, cod
        self.rows = tuple(tuple(r) for r in rows)
        if len(self.rows) != cod.dim or any(len(r) != dom.dim for r in self.rows):
            raise DimensionMismatch(
                "matrix %dx%d does not map %s (dim %d) to %s (dim %d)"
                % (len(self.rows), len(self.rows[0]) if self.rows else 0,
                   dom.label, dom.dim, cod.label, cod.dim)
            )

    # -- constructors --

    @staticmethod
    def identity(space):
        return LinMap(space, space, [space.basis_vector(i) for i in range(space.dim)])

    @staticmethod
    def zero(dom, cod):
        return LinMap(dom, cod, [(ZERO,) * dom.dim for _ in range(cod.dim)])

    @staticmethod
    def from_columns(dom, cod, cols):
        cols = [tuple(c) for c in cols]
        if len(cols) != dom.dim:
            raise DimensionMismatch("expected %d columns, got %d" % (dom.dim, len(cols)))
        rows = [tuple(col[i] for col in cols) for i in range(cod.dim)]
        return LinMap(dom, cod, rows)

    @staticmethod
    def from_function(dom, cod, fn):
        """fn maps a domain basis index to a vector (tuple or sparse dict)."""
        cols = []
        for j in range(dom.dim):
            v = fn(j)
            if isinstance(v, dict):
                v = vec_from_dict(v, cod.dim)
            cols.append(v)
        return LinMap.from_columns(dom, cod, cols)

    @staticmethod
    def permutation(dom, cod, index_fn):
        """Basis relabeling: domain index j maps to basis vector index_fn(j)."""
        return LinMap.from_function(dom, cod, lambda j: {index_fn(j): ONE})

    # -- application and algebra --

    def __call__(self, vec):
        if len(vec) != self.dom.dim:
            raise DimensionMismatch("vector of length %d, domain dim %d"
                                    % (len(vec), self.dom.dim))
        out = []
        for row in self.rows:
            acc = ZERO
            for a, x in zip(row, vec):
                if not (a.is_zero or x.is_zero):
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def __matmul__(self, other):
        """Composition self after other."""
        if other.cod.dim != self.dom.dim:
            raise DimensionMismatch("compose: %s then %s" % (other, self))
        cols = [self(other.column(j)) for j in range(other.dom.dim)]
        return LinMap.from_columns(other.dom, self.cod, cols)

    def __add__(self, other):
        self._same_shape(other)
        return LinMap(self.dom, self.cod,
                      [vadd(r, s) for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._same_shape(other)
        return LinMap(self.dom, self.cod,
                      [vsub(r, s) for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return LinMap(self.dom, self.cod, [vscale(-ONE, r) for r in self.rows])

    def scale(self, c):
        return LinMap(self.dom, self.cod, [vscale(c, r) for r in self.rows])

    def tensor(self, other):
        """Kronecker product, left factor varying slowest."""
        dom = self.dom.tensor(other.dom)
        cod = self.cod.tensor(other.cod)
        rows = []
        for r1 in self.rows:
            for r2 in other.rows:
                rows.append(kron(r1, r2))
        return LinMap(dom, cod, rows)

    def _same_shape(self, other):
        if self.dom.dim != other.dom.dim or self.cod.dim != other.cod.dim:
            raise DimensionMismatch("shape mismatch")

    def __eq__(self, other):
        return (isinstance(other, LinMap)
                and self.dom.dim == other.dom.dim
                and self.cod.dim == other.cod.dim
                and self.rows == other.rows)

    def is_zero(self):
        return all(c.is_zero for row in self.rows for c in row)

    def __repr__(self):
        return "LinMap(%s -> %s)" % (self.dom.label, self.cod.label)

    # -- elimination-backed queries (delegated to a cached Solver) --

    def _solver(self):
        return Solver(self.rows, self.dom.dim)

    def rank(self):
        return self._solver().rank

    def kernel(self):
        """Kernel as (space, inclusion map into the domain)."""
        basis_vecs = self._solver().kernel_basis()
        space = BasedSpace("ker(%s)" % self.cod.label,
                           tuple("k%d" % i for i in range(len(basis_vecs))))
        inc = LinMap.from_columns(space, self.dom, basis_vecs)
        return space, inc

    def solve(self, target):
        """One solution of self(x) = target, free coordinates zero.

        Raises NoSolution when the system is inconsistent.
        """
        x = self._solver().solve(target)
        if x is None:
            raise NoSolution("inconsistent linear system")
        return x

    def is_injective(self):
        return self.rank() == self.dom.dim

    def is_surjective(self):
        return self.rank() == self.cod.dim

    def inverse(self):
        if self.dom.dim != self.cod.dim:
            raise DimensionMismatch("inverse of a non-square map")
        solver = self._solver()
        if solver.rank != self.dom.dim:
            raise NoSolution("map is singular")
        cols = [solver.solve(self.cod.basis_vector(i)) for i in range(self.cod.dim)]
        return LinMap.from_columns(self.cod, self.dom, cols)


class Solver:
    """Reduced row echelon form of a matrix, reusable for many solves.

    Keeps the row transform T with T @ M = R in rref, so solving against a new
    right-hand side costs one matrix-vector product plus a consistency check.
    """

    def __init__(self, rows, ncols):
        m = [list(r) for r in rows]
        nrows = len(m)
        t = [[ONE if i == j else ZERO for j in range(nrows)] for i in range(nrows)]
        pivots = []
        rank = 0
        for col in range(ncols):
            best, best_c = None, None
            for r in range(rank, nrows):
                e = m[r][col]
                if not e.is_zero:
                    c = _complexity(e)
                    if best is None or c < best_c:
                        best, best_c = r, c
            if best is None:
                continue
            m[rank], m[best] = m[best], m[rank]
            t[rank], t[best] = t[best], t[rank]
            inv = m[rank][col].inv()
            m[rank] = [inv * e for e in m[rank]]
            t[rank] = [inv * e for e in t[rank]]
            for r in range(nrows):
                if r != rank and not m[r][col].is_zero:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
                    t[r] = [a - f * b for a, b in zip(t[r], t[rank])]
            pivots.append(col)
            rank += 1
        self.rref = m
        self.transform = t
        self.pivots = pivots
        self.rank = rank
        self.ncols = ncols
        self.nrows = nrows

    def solve(self, target):
        if len(target) != self.nrows:
            raise DimensionMismatch("target length %d, expected %d"
                                    % (len(target), self.nrows))
        u = []
        for r in range(self.nrows):
            acc = ZERO
            for a, x in zip(self.transform[r], target):
                if not (a.is_zero or x.is_zero):
                    acc = acc + a * x
            u.append(acc)
        for r in range(self.rank, self.nrows):
            if not u[r].is_zero:
                return None
        x = [ZERO] * self.ncols
        for i, col in enumerate(self.pivots):
            x[col] = u[i]
        return tuple(x)

    def kernel_basis(self):
        pivot_set = set(self.pivots)
        basis = []
        for j in range(self.ncols):
            if j in pivot_set:
                continue
            v = [ZERO] * self.ncols
            v[j] = ONE
            for i, col in enumerate(self.pivots):
                v[col] = -self.rref[i][j]
            basis.append(tuple(v))
        return basis


# -- structural maps used throughout --


def swap_map(a, b):
    """The flip a (x) b -> b (x) a."""
    dom = a.tensor(b)
    cod = b.tensor(a)
    return LinMap.permutation(dom, cod,
                              lambda idx: (idx % b.dim) * a.dim + idx // b.dim)


def left_unitor(space):
    """k (x) V -> V."""
    return LinMap.permutation(K.tensor(space), space, lambda idx: idx)


def right_unitor(space):
    """V (x) k -> V."""
    return LinMap.permutation(space.tensor(K), space, lambda idx: idx)


def stack(f, g):
    """Maps with a common domain stacked into the direct sum of codomains."""
    if f.dom.dim != g.dom.dim:
        raise DimensionMismatch("stack needs a common domain")
    cod = BasedSpace("%s(+)%s" % (f.cod.label, g.cod.label),
                     tuple(f.cod.basis) + tuple(g.cod.basis))
    return LinMap(f.dom, cod, list(f.rows) + list(g.rows))


def column_span_rank(vectors, dim):
    """Rank of the span of the given vectors inside a dim-dimensional space."""
    if not vectors:
        return 0
    rows = [[v[i] for v in vectors] for i in range(dim)]
    return Solver(rows, len(vectors)).rank


def span_contains(vectors, target, dim):
    """Whether target lies in the span of the given column vectors."""
    rows = [[v[i] for v in vectors] for i in range(dim)]
    return Solver(rows, len(vectors)).solve(target) is not None
