from fractions import Fraction
from itertools import permutations

import pytest

from ainf.fields import QQ
from ainf.graded import (GradedModule, GradedMap, TensorWord, koszul_sign,
                         koszul_permutation_sign, tensor_module)
from ainf.linalg import Matrix


def test_module_basics():
    M = GradedModule({0: ["e"], 2: ["x", "y"], 5: ["z"]})
    assert M.dim(2) == 2
    assert M.dim(3) == 0
    assert M.support == [0, 2, 5]
    assert M.total_dim() == 4
    assert M.name((2, 1)) == "y"
    assert M.element("z") == (5, 0)
    with pytest.raises(ValueError):
        GradedModule({1: ["a", "a"]})
    with pytest.raises(ValueError):
        GradedModule({1: ["a"], 2: ["a"]})


def test_shift():
    M = GradedModule({2: ["x"]})
    assert M.shift(0) == M
    assert M.shift(-1) == GradedModule({1: ["x"]})
    assert M.shift(1).shift(-1) == M


def test_tensor_module_dims():
    A = GradedModule({1: ["a"]})
    assert tensor_module(A, A) == GradedModule({2: ["a⊗a"]})
    B = GradedModule({0: ["e"], 2: ["x", "y"]})
    T = tensor_module(B, B)
    assert T.dim(0) == 1 and T.dim(2) == 4 and T.dim(4) == 4
    for n in T.support:
        assert T.dim(n) == sum(B.dim(p) * B.dim(n - p) for p in B.support)
    Z = GradedModule({})
    assert tensor_module(B, Z).is_zero()


def test_koszul_sign_basics():
    assert koszul_sign([1], [1], [1, 0]) == -1
    assert koszul_sign([2], [1], [1, 0]) == 1
    # (1,3)-split of degrees (1,1,1,1): move left slot past first two rights
    assert koszul_sign([1], [1, 1, 1], [1, 2, 0, 3]) == 1
    with pytest.raises(ValueError):
        koszul_sign([1, 1], [1], [1, 0, 2])  # left block order broken


def test_koszul_multiplicativity():
    # composing permutations multiplies signs (all perms of <= 4 factors)
    for degs in [(1, 1, 1), (1, 2, 1), (1, 1, 1, 1), (1, 2, 3, 1)]:
        n = len(degs)
        for p in permutations(range(n)):
            for q in permutations(range(n)):
                comp = [p[q[i]] for i in range(n)]
                pdegs = [degs[p[i]] for i in range(n)]
                s1 = koszul_permutation_sign(degs, list(p))
                s2 = koszul_permutation_sign(pdegs, list(q))
                assert koszul_permutation_sign(degs, comp) == s1 * s2


def test_tensor_word():
    w = TensorWord([("x", 2), ("y", 3)], Fraction(1, 2))
    assert w.degree == 5
    assert w == TensorWord((("x", 2), ("y", 3)), Fraction(1, 2))


def test_graded_map_apply_compose():
    M = GradedModule({0: ["e"], 1: ["a", "b"]})
    N = GradedModule({1: ["u"], 2: ["v"]})
    f = GradedMap.from_values(M, N, 1, {
        (0, 0): {(1, 0): Fraction(2)},
        (1, 0): {(2, 0): Fraction(1)},
        (1, 1): {(2, 0): Fraction(-1)},
    }, QQ)
    assert f.apply({(0, 0): Fraction(1)}) == {(1, 0): Fraction(2)}
    assert f.apply({(1, 0): Fraction(1), (1, 1): Fraction(1)}) == {}
    g = GradedMap.from_values(N, N, 0, {
        (1, 0): {(1, 0): Fraction(3)},
    }, QQ)
    h = g.compose(f)
    assert h.degree == 1
    assert h.apply_el((0, 0)) == {(1, 0): Fraction(6)}
    assert h.apply_el((1, 0)) == {}


def test_graded_map_identity_add_eq():
    M = GradedModule({0: ["e"], 3: ["t"]})
    i = GradedMap.identity(M, QQ)
    z = GradedMap.zero(M, M, 0, QQ)
    assert i + z == i
    assert (i - i).is_zero()
    assert i.apply_el((3, 0)) == {(3, 0): Fraction(1)}


def test_graded_map_degree_mismatch():
    M = GradedModule({0: ["e"]})
    with pytest.raises(Exception):
        GradedMap.from_values(M, M, 1, {(0, 0): {(0, 0): Fraction(1)}}, QQ)
    with pytest.raises(Exception):
        GradedMap(M, M, 0, {0: Matrix.identity(2, QQ)}, QQ)
