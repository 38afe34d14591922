import sympy
from hypothesis import given, strategies as st

from conjal.linalg import SpanSolver, solve_columns
from conjal.scalar import ModN, QQ

small = st.integers(-4, 4)


def vec(xs):
    return {i: x for i, x in enumerate(xs) if x}


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=6),
       st.lists(small, min_size=4, max_size=4))
def test_solver_agrees_with_sympy(cols, target):
    s = SpanSolver(QQ)
    for n, c in enumerate(cols):
        s.add(n, vec(QQ.coerce(x) for x in c))
    M = sympy.Matrix(cols).T
    assert s.rank == M.rank()
    sol = s.solve(vec(QQ.coerce(x) for x in target))
    aug = M.row_join(sympy.Matrix(target))
    assert (sol is not None) == (aug.rank() == M.rank())
    if sol is not None:
        recon = [sum(sol.get(n, 0) * cols[n][r] for n in range(len(cols))) for r in range(4)]
        assert recon == target


def test_mod_p_solve():
    F = ModN(5)
    sol = solve_columns(F, [("a", {0: 2}), ("b", {1: 3})], {0: 1, 1: 1})
    assert sol == {"a": 3, "b": 2}
