import random

import pytest

import oracles
from hopfeq import linalg
from hopfeq.fields import QQ, parse_field

F5 = parse_field("fp:5")


def random_matrix(field, rows, cols, rng):
    return [[field.random(rng) for _ in range(cols)] for _ in range(rows)]


@pytest.mark.parametrize("field", [QQ, F5], ids=["Q", "F5"])
def test_mat_mul_matches_dense_oracle(field):
    rng = random.Random(5)
    for _ in range(20):
        a = random_matrix(field, 3, 4, rng)
        b = random_matrix(field, 4, 2, rng)
        assert linalg.mat_mul(field, a, b) == oracles.matmul(field, a, b)


@pytest.mark.parametrize("field", [QQ, F5], ids=["Q", "F5"])
def test_kron_matches_dense_oracle(field):
    rng = random.Random(6)
    for _ in range(10):
        a = random_matrix(field, 2, 3, rng)
        b = random_matrix(field, 3, 2, rng)
        assert linalg.kron(field, a, b) == oracles.kron(field, a, b)


def test_inverse_and_rank():
    rng = random.Random(7)
    for field in (QQ, F5):
        for _ in range(10):
            m = oracles.random_invertible(field, 4, rng)
            inv = linalg.inverse(field, m)
            assert linalg.mat_mul(field, m, inv) == linalg.identity(field, 4)
            assert linalg.rank(field, m) == 4


def test_singular_matrix_raises():
    m = [[QQ.one, QQ.one], [QQ.one, QQ.one]]
    assert not linalg.is_invertible(QQ, m)
    with pytest.raises(linalg.SingularMatrixError):
        linalg.inverse(QQ, m)


def test_rank_matches_oracle():
    rng = random.Random(8)
    for field in (QQ, F5):
        for _ in range(20):
            m = random_matrix(field, 4, 5, rng)
            assert linalg.rank(field, m) == oracles.rank(field, m)


def test_mat_vec():
    m = [[QQ.from_int(1), QQ.from_int(2)], [QQ.from_int(3), QQ.from_int(4)]]
    v = [QQ.from_int(5), QQ.from_int(6)]
    assert linalg.mat_vec(QQ, m, v) == [QQ.from_int(17), QQ.from_int(39)]
