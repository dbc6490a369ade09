import random

import pytest

from smashcalc.errors import DimensionMismatch, NoSolution
from smashcalc.linear import (
    BasedSpace, LinMap, Solver, column_span_rank, left_unitor, right_unitor,
    span_contains, stack, swap_map, K,
)
from smashcalc.scalars import ONE, Q, ZERO, Scalar, integer


V2 = BasedSpace("V", ("e0", "e1"))
V3 = BasedSpace("W", ("f0", "f1", "f2"))


def rand_scalar(rng):
    if rng.random() < 0.4:
        return integer(rng.randint(-3, 3))
    return Scalar(tuple(rng.randint(-2, 2) for _ in range(2)),
                  (rng.randint(1, 2),))


def rand_map(rng, dom, cod):
    return LinMap(dom, cod,
                  [[rand_scalar(rng) for _ in range(dom.dim)] for _ in range(cod.dim)])


def test_identity_compose():
    f = LinMap(V2, V3, [[ONE, Q], [ZERO, ONE], [Q, ZERO]])
    assert LinMap.identity(V3) @ f == f
    assert f @ LinMap.identity(V2) == f


def test_compose_matches_apply():
    rng = random.Random(1)
    for _ in range(20):
        f = rand_map(rng, V2, V3)
        g = rand_map(rng, V3, V2)
        h = g @ f
        for i in range(V2.dim):
            assert h(V2.basis_vector(i)) == g(f(V2.basis_vector(i)))


def test_kernel_oracle():
    # frozen oracle: [[1, q], [q, q^2]] has rank 1, kernel spanned by (-q, 1)
    f = LinMap(V2, V2, [[ONE, Q], [Q, Q * Q]])
    ker, inc = f.kernel()
    assert ker.dim == 1
    v = inc.column(0)
    assert (f @ inc).is_zero()
    # rank-nullity
    assert f.rank() + ker.dim == V2.dim
    assert span_contains([v], (-Q, ONE), 2)


def test_rank_nullity_random():
    rng = random.Random(5)
    for _ in range(15):
        f = rand_map(rng, V3, V2)
        ker, inc = f.kernel()
        assert f.rank() + ker.dim == V3.dim
        assert (f @ inc).is_zero()


def test_solve_deterministic_free_coords():
    # underdetermined: x0 + x1 = 1; free coordinate must come back zero
    D = BasedSpace("D", ("x0", "x1"))
    f = LinMap(D, K, [[ONE, ONE]])
    x = f.solve((ONE,))
    assert x == (ONE, ZERO)


def test_solve_inconsistent():
    f = LinMap(V2, V2, [[ONE, ZERO], [ONE, ZERO]])
    with pytest.raises(NoSolution):
        f.solve((ONE, -ONE))


def test_solver_reuse():
    f = LinMap(V2, V2, [[ONE, Q], [ZERO, ONE]])
    s = Solver(f.rows, 2)
    for target in [(ONE, ZERO), (Q, ONE), (ZERO, ZERO)]:
        x = s.solve(target)
        assert f(x) == target


def test_tensor_kronecker_order():
    # left factor varies slowest: basis of V2 (x) V3 is e0f0 e0f1 e0f2 e1f0 ...
    f = LinMap.identity(V2)
    g = LinMap(V3, V3, [[ZERO, ONE, ZERO], [ZERO, ZERO, ONE], [ONE, ZERO, ZERO]])
    t = f.tensor(g)
    assert t.dom.dim == 6
    v = [ZERO] * 6
    v[0 * 3 + 1] = ONE  # e0 (x) f1
    out = t(tuple(v))
    assert out[0 * 3 + 0] == ONE  # g sends f1 to f0
    assert sum(1 for c in out if not c.is_zero) == 1


def test_tensor_bilinear_vs_pointwise():
    rng = random.Random(9)
    f = rand_map(rng, V2, V2)
    g = rand_map(rng, V3, V3)
    t = f.tensor(g)
    for i in range(V2.dim):
        for j in range(V3.dim):
            v = [ZERO] * 6
            v[i * 3 + j] = ONE
            lhs = t(tuple(v))
            fi, gj = f.column(i), g.column(j)
            rhs = tuple(a * b for a in fi for b in gj)
            assert lhs == rhs


def test_swap_and_unitors():
    s = swap_map(V2, V3)
    v = [ZERO] * 6
    v[1 * 3 + 2] = Q  # e1 (x) f2
    out = s(tuple(v))
    assert out[2 * 2 + 1] == Q  # f2 (x) e1
    lu = left_unitor(V2)
    assert lu.dom.dim == 2 and lu.cod.dim == 2
    assert lu((Q, ONE)) == (Q, ONE)
    ru = right_unitor(V3)
    assert ru((ONE, ZERO, Q)) == (ONE, ZERO, Q)


def test_stack_kernel_is_intersection():
    f = LinMap(V3, K, [[ONE, ONE, ZERO]])
    g = LinMap(V3, K, [[ZERO, ONE, ONE]])
    ker, inc = stack(f, g).kernel()
    assert ker.dim == 1
    v = inc.column(0)
    assert f(v) == (ZERO,) and g(v) == (ZERO,)


def test_inverse():
    f = LinMap(V2, V2, [[ONE, Q], [ZERO, ONE]])
    finv = f.inverse()
    assert finv @ f == LinMap.identity(V2)
    assert f @ finv == LinMap.identity(V2)
    sing = LinMap(V2, V2, [[ONE, ONE], [ONE, ONE]])
    with pytest.raises(NoSolution):
        sing.inverse()


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        LinMap(V2, V3, [[ONE, ONE]])
    f = LinMap.identity(V2)
    with pytest.raises(DimensionMismatch):
        f((ONE, ONE, ONE))


def test_column_span_rank():
    vs = [(ONE, ZERO, ONE), (ZERO, ONE, ZERO), (ONE, ONE, ONE)]
    assert column_span_rank(vs, 3) == 2
    assert span_contains(vs, (2 * ONE, ONE, 2 * ONE), 3)
    assert not span_contains(vs, (ONE, ZERO, ZERO), 3)
