import random

import pytest

from arraycodes.errors import InconsistentSystemError
from arraycodes.gf2 import (BitMatrix, gf2_mul_vec, gf2_nullspace, gf2_rank,
                            gf2_row_reduce, gf2_solve)


def test_rank_identity_and_zero():
    eye = BitMatrix.from_lists([[1 if i == j else 0 for j in range(4)] for i in range(4)])
    assert eye.rank() == 4
    zero = BitMatrix.from_lists([[0] * 5 for _ in range(3)])
    assert zero.rank() == 0


def test_rank_hamming_743():
    # parity matrix of the [7,4,3] Hamming code: columns are 1..7 in binary
    cols = [[(j >> b) & 1 for b in range(3)] for j in range(1, 8)]
    H = BitMatrix.from_lists([[cols[j][b] for j in range(7)] for b in range(3)])
    assert H.rank() == 3


def test_rank_equals_transpose_rank():
    rng = random.Random(0)
    for _ in range(50):
        nrows, ncols = rng.randint(1, 8), rng.randint(1, 8)
        M = BitMatrix(nrows, ncols,
                      tuple(rng.randrange(1 << ncols) for _ in range(nrows)))
        assert M.rank() == M.transpose().rank()


def test_solve_identity():
    rows = [1 << i for i in range(5)]
    b = [1, 0, 1, 1, 0]
    x, unique = gf2_solve(rows, 5, b)
    assert unique
    assert [(x >> i) & 1 for i in range(5)] == b


def test_solve_underdetermined_flag():
    # zero column => never unique when consistent
    rows = [0b110, 0b100]
    x, unique = gf2_solve(rows, 3, [0, 0])
    assert not unique
    assert gf2_mul_vec(rows, x) == [0, 0]


def test_solve_multiply_back_random_full_rank():
    rng = random.Random(6)
    found = 0
    while found < 10:
        rows = [rng.randrange(1, 1 << 6) for _ in range(6)]
        if gf2_rank(rows) < 6:
            continue
        found += 1
        b = [rng.randrange(2) for _ in range(6)]
        x, unique = gf2_solve(rows, 6, b)
        assert unique
        assert gf2_mul_vec(rows, x) == b


def test_solve_inconsistent():
    rows = [0b01, 0b01]
    with pytest.raises(InconsistentSystemError):
        gf2_solve(rows, 2, [0, 1])


def test_nullspace_annihilates():
    rng = random.Random(2)
    for _ in range(20):
        rows = [rng.randrange(1 << 7) for _ in range(4)]
        basis = gf2_nullspace(rows, 7)
        assert len(basis) == 7 - gf2_rank(rows)
        for vec in basis:
            assert gf2_mul_vec(rows, vec) == [0, 0, 0, 0]


def test_row_reduce_pivots_sorted_unique():
    rows = [0b1011, 0b1110, 0b0101]
    reduced, pivots = gf2_row_reduce(rows, 4)
    assert pivots == sorted(set(pivots))
    assert len(reduced) == len(pivots) == gf2_rank(rows)
