import random
from itertools import combinations

import pytest

from arraycodes.errors import CapacityExceededError, NotACodewordError
from arraycodes.field import field_make
from arraycodes.rs import ReedSolomon


def test_zero_message():
    rs = ReedSolomon(field_make(3), 7, 5)
    assert rs.encode([0] * 5) == [0] * 7


def test_systematic_prefix():
    rs = ReedSolomon(field_make(3), 7, 5)
    rng = random.Random(0)
    for _ in range(20):
        msg = [rng.randrange(8) for _ in range(5)]
        cw = rs.encode(msg)
        assert cw[:5] == msg
        assert rs.is_codeword(cw)
        assert rs.message_of(cw) == msg


def test_753_all_two_erasure_supports():
    rs = ReedSolomon(field_make(3), 7, 5)
    rng = random.Random(1)
    for _ in range(5):
        cw = rs.encode([rng.randrange(8) for _ in range(5)])
        for erased in combinations(range(7), 2):
            received = [None if i in erased else cw[i] for i in range(7)]
            assert rs.decode_erasures(received) == cw


def test_capacity_exceeded():
    rs = ReedSolomon(field_make(3), 7, 5)
    cw = rs.encode([1, 2, 3, 4, 5])
    received = [None, None, None] + cw[3:]
    with pytest.raises(CapacityExceededError):
        rs.decode_erasures(received)


def test_not_a_codeword():
    rs = ReedSolomon(field_make(3), 7, 5)
    cw = rs.encode([1, 2, 3, 4, 5])
    cw[6] ^= 1
    with pytest.raises(NotACodewordError):
        rs.decode_erasures(cw)


def test_zero_erasures_is_identity():
    rs = ReedSolomon(field_make(4), 9, 6)
    rng = random.Random(2)
    cw = rs.encode([rng.randrange(16) for _ in range(6)])
    assert rs.decode_erasures(cw) == cw


@pytest.mark.parametrize("n,k", [(5, 2), (7, 3), (8, 5)])
def test_exhaustive_erasure_supports(n, k):
    rs = ReedSolomon(field_make(4), n, k)
    rng = random.Random(n * k)
    for _ in range(3):
        cw = rs.encode([rng.randrange(16) for _ in range(k)])
        for erased in combinations(range(n), n - k):
            received = [None if i in erased else cw[i] for i in range(n)]
            assert rs.decode_erasures(received) == cw


@pytest.mark.parametrize("n,k", [(5, 3), (7, 4), (8, 2)])
def test_mds_every_k_columns_invertible(n, k):
    """Any k codeword positions determine the message: the k x k submatrix
    of the generator at every position subset is invertible over the field."""
    f = field_make(4)
    rs = ReedSolomon(f, n, k)
    basis = [rs.encode([1 if i == j else 0 for i in range(k)]) for j in range(k)]
    for positions in combinations(range(n), k):
        assert _field_rank(f, basis, positions) == k


def _field_rank(f, basis, positions):
    mat = [[basis[b][p] for p in positions] for b in range(len(basis))]
    rank = 0
    cols = list(range(len(positions)))
    for row in range(len(mat)):
        pivot = None
        for c in cols:
            if mat[row][c]:
                pivot = c
                break
        if pivot is None:
            continue
        cols.remove(pivot)
        rank += 1
        inv = f.inv(mat[row][pivot])
        for r2 in range(len(mat)):
            if r2 != row and mat[r2][pivot]:
                scale = f.mul(mat[r2][pivot], inv)
                for c in range(len(mat[0])):
                    mat[r2][c] ^= f.mul(scale, mat[row][c])
    return rank


def test_length_cap():
    with pytest.raises(ValueError):
        ReedSolomon(field_make(3), 8, 2)
