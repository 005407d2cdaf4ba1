from itertools import product

import numpy as np
import pytest

from nakatau import linalg


def _vectors(n, p):
    return [np.array(v, dtype=np.int64) for v in product(range(p), repeat=n)]


def _random_matrices(p, count=40, seed=7):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        r, c = rng.integers(1, 4, size=2)
        yield rng.integers(0, p, size=(r, c))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_nullspace_matches_enumeration(p):
    for mat in _random_matrices(p):
        kernel = [v for v in _vectors(mat.shape[1], p) if not np.any(mat @ v % p)]
        basis = linalg.nullspace(mat, p)
        assert len(kernel) == p ** basis.shape[1]
        assert not np.any(linalg.matmul(mat, basis, p))
        assert linalg.rank(mat, p) + basis.shape[1] == mat.shape[1]


@pytest.mark.parametrize("p", [2, 3])
def test_solve_matches_enumeration(p):
    for mat in _random_matrices(p, seed=11):
        for rhs in _vectors(mat.shape[0], p):
            sols = [v for v in _vectors(mat.shape[1], p) if np.array_equal(mat @ v % p, rhs)]
            x = linalg.solve(mat, rhs, p)
            if sols:
                assert x is not None and np.array_equal(mat @ x % p, rhs)
            else:
                assert x is None


def test_rref_shape():
    R, piv = linalg.rref(np.array([[0, 2, 4], [0, 1, 2]]), 3)
    assert piv == [1]
    assert R.tolist() == [[0, 1, 2], [0, 0, 0]]


def test_annihilator_and_span():
    p = 3
    mat = np.array([[1, 0], [2, 0], [0, 1]])
    Q = linalg.annihilator(mat, p)
    assert not np.any(linalg.matmul(Q, mat, p))
    assert linalg.in_span(mat, np.array([2, 1, 1]), p)
    assert not linalg.in_span(mat, np.array([1, 0, 0]), p)


def test_right_inverse():
    p = 5
    mat = np.array([[1, 2, 0], [0, 1, 3]])
    S = linalg.right_inverse(mat, p)
    assert np.array_equal(linalg.matmul(mat, S, p), np.eye(2, dtype=np.int64))
    with pytest.raises(ValueError):
        linalg.right_inverse(np.array([[1, 1], [2, 2]]), p)


def test_field_prime_env(monkeypatch):
    monkeypatch.delenv("NAKA_TAU_FIELD", raising=False)
    assert linalg.field_prime() == 2
    monkeypatch.setenv("NAKA_TAU_FIELD", "7")
    assert linalg.field_prime() == 7
    monkeypatch.setenv("NAKA_TAU_FIELD", "9")
    with pytest.raises(ValueError):
        linalg.field_prime()
