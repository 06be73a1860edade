import random
from fractions import Fraction

import pytest

from ainf.fields import QQ, Field, ModP
from ainf.linalg import (DimensionMismatch, Matrix, kernel_basis,
                         quotient_with_section, rank, solve_linear, vec_sub)

F5 = Field(5)


def dense_rank(rows, ncols):
    """Independent dense elimination oracle (Fractions, partial pivoting)."""
    m = [list(r) + [Fraction(0)] * (ncols - len(r)) for r in rows]
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def mat_from_dense(rows, field=QQ):
    entries = {}
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if x:
                entries[(i, j)] = field.of(x)
    return Matrix(len(rows), len(rows[0]) if rows else 0, entries, field)


def test_modp_arithmetic():
    a = ModP(3, 5)
    b = ModP(4, 5)
    assert a + b == 2
    assert a - b == 4
    assert a * b == 2
    assert a / b == ModP(3, 5) * ModP(4, 5)  # 4^{-1} = 4 mod 5
    assert -a == 2
    assert bool(ModP(0, 5)) is False
    with pytest.raises(ValueError):
        ModP(1, 5) + ModP(1, 7)


def test_field_parse_serialize():
    assert QQ.parse("3/4") == Fraction(3, 4)
    assert QQ.parse(-2) == Fraction(-2)
    assert QQ.serialize(Fraction(3, 4)) == "3/4"
    assert QQ.serialize(Fraction(5)) == "5"
    assert F5.parse("3/4") == ModP(3, 5) / ModP(4, 5)
    with pytest.raises(ValueError):
        Field(6)


def test_solve_identity():
    M = Matrix.identity(4, QQ)
    b = {0: Fraction(2), 3: Fraction(-1)}
    assert solve_linear(M, b) == b


def test_solve_zero_matrix_no_solution():
    M = Matrix.zero(3, 3, QQ)
    assert solve_linear(M, {1: Fraction(1)}) is None
    assert solve_linear(M, {}) == {}


def test_solve_rank3_constructed_preimage():
    rng = random.Random(7)
    M = mat_from_dense([[rng.randint(-3, 3) for _ in range(4)] for _ in range(6)])
    # force rank exactly 3 by replacing a column with a combination
    cols = M.columns()
    cols[3] = vec_sub(cols[0], cols[1])
    M = Matrix.from_columns(6, cols, QQ)
    x0 = {0: Fraction(1), 2: Fraction(-2), 3: Fraction(5)}
    b = M.apply(x0)
    x = solve_linear(M, b)
    assert x is not None
    assert M.apply(x) == b


def test_solve_rhs_dimension_check():
    M = Matrix.identity(2, QQ)
    with pytest.raises(DimensionMismatch):
        solve_linear(M, {5: Fraction(1)})


def test_kernel_identity_and_zero():
    assert kernel_basis(Matrix.identity(3, QQ)) == []
    ker = kernel_basis(Matrix.zero(4, 4, QQ))
    assert len(ker) == 4
    for j, v in enumerate(ker):
        assert v == {j: Fraction(1)}


def test_kernel_hand_example():
    M = mat_from_dense([[1, 1], [0, 0]])
    ker = kernel_basis(M)
    assert len(ker) == 1
    v = ker[0]
    assert v[0] == -v[1]
    assert M.apply(v) == {}


def test_kernel_properties_random():
    rng = random.Random(13)
    for _ in range(25):
        nr, nc = rng.randint(1, 6), rng.randint(1, 6)
        dense = [[Fraction(rng.randint(-2, 2)) for _ in range(nc)] for _ in range(nr)]
        M = mat_from_dense(dense)
        ker = kernel_basis(M)
        for v in ker:
            assert M.apply(v) == {}
        assert len(ker) == nc - dense_rank(dense, nc)
        assert rank(M) == dense_rank(dense, nc)


def test_solve_iff_rank_condition():
    rng = random.Random(99)
    for _ in range(40):
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        dense = [[Fraction(rng.randint(-2, 2)) for _ in range(nc)] for _ in range(nr)]
        M = mat_from_dense(dense)
        b = {i: Fraction(rng.randint(-2, 2)) for i in range(nr)}
        b = {i: x for i, x in b.items() if x}
        x = solve_linear(M, b)
        aug = [row + [b.get(i, Fraction(0))] for i, row in enumerate(dense)]
        solvable = dense_rank(aug, nc + 1) == dense_rank(dense, nc)
        assert (x is not None) == solvable
        if x is not None:
            assert M.apply(x) == b


def test_quotient_trivial_cases():
    e1, e2 = {0: Fraction(1)}, {1: Fraction(1)}
    q = quotient_with_section([e1, e2], [], 2, QQ)
    assert q.dim == 2
    assert q.section == Matrix.from_columns(2, [e1, e2], QQ)

    q = quotient_with_section([e1, e2], [e1], 2, QQ)
    assert q.dim == 1
    assert q.quotient_basis == [e2]


def test_quotient_boundary_outside_span_rejected():
    with pytest.raises(DimensionMismatch):
        quotient_with_section([{0: Fraction(1)}], [{1: Fraction(1)}], 2, QQ)


def _check_quotient_invariants(q, field=QQ):
    # project . section = identity and classify . section = identity
    assert q.classify * q.section == Matrix.identity(q.dim, field)
    # classify kills every boundary
    for b in q.boundary_basis:
        assert q.classify.apply(b) == {}
    # project and classify agree on the cycle list
    for j, c in enumerate(q.cycle_basis):
        assert q.project.column(j) == q.classify.apply(c)


def test_quotient_simplicial_circle():
    # triangle circle: vertices 0,1,2; edges 01, 02, 12 (columns);
    # boundary d(edge ij) = j - i as vertex chains (rows).
    d1 = mat_from_dense([[-1, -1, 0], [1, 0, -1], [0, 1, 1]])
    cycles = kernel_basis(d1)  # degree-1 cycles
    q = quotient_with_section(cycles, [], 3, QQ)
    assert q.dim == 1  # H_1(circle)
    # degree 0: every vertex chain is a cycle; boundaries = image of d1
    verts = [{i: Fraction(1)} for i in range(3)]
    bnds = [d1.column(j) for j in range(3)]
    q0 = quotient_with_section(verts, bnds, 3, QQ)
    assert q0.dim == 1  # H_0(circle)
    _check_quotient_invariants(q0)


def test_quotient_invariants_random():
    rng = random.Random(5)
    for _ in range(20):
        amb = rng.randint(2, 7)
        ncyc = rng.randint(1, amb)
        cycles = []
        for _ in range(ncyc):
            v = {i: Fraction(rng.randint(-2, 2)) for i in range(amb)}
            cycles.append({i: x for i, x in v.items() if x})
        nb = rng.randint(0, ncyc)
        boundaries = []
        for _ in range(nb):
            w = {}
            for c in cycles:
                lam = Fraction(rng.randint(-1, 1))
                for i, x in c.items():
                    w[i] = w.get(i, Fraction(0)) + lam * x
            boundaries.append({i: x for i, x in w.items() if x})
        q = quotient_with_section(cycles, boundaries, amb, QQ)
        _check_quotient_invariants(q)


def test_quotient_prime_field():
    one = F5.one
    cycles = [{0: one, 1: one}, {1: one}]
    q = quotient_with_section(cycles, [{0: one, 1: ModP(2, 5)}], 2, F5)
    assert q.dim == 1
    _check_quotient_invariants(q, F5)


def test_pivot_order_changes_representatives():
    e1, e2 = {0: Fraction(1)}, {1: Fraction(1)}
    e12 = {0: Fraction(1), 1: Fraction(1)}
    lo = quotient_with_section([e1, e2], [e12], 2, QQ, prefer_high=False)
    hi = quotient_with_section([e1, e2], [e12], 2, QQ, prefer_high=True)
    assert lo.dim == hi.dim == 1
    assert lo.quotient_basis == [{1: Fraction(1)}]
    assert hi.quotient_basis == [{0: Fraction(1)}]
    _check_quotient_invariants(lo)
    _check_quotient_invariants(hi)
