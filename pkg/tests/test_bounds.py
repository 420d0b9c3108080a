import math
import random
from fractions import Fraction
import pytest

from arraycodes.arrays import BitArray
from arraycodes.bounds import (a_n_d_brute, ball_count_brute, claim8_bound,
                               dc_bound_part1, dc_bound_part2, dc_bound_part3,
                               dc_sphere_exact, delete_append_ball, fll_ball,
                               m_s_brute, singleton_te, te_sphere_packing,
                               ted_ball, ted_upper_bound, v1_dc_ball_size,
                               v_te_general, v_te_small)
from conftest import random_array


def test_volume_closed_forms():
    for n in range(1, 51):
        assert v_te_small(1, n, 5) == 1 + n
        assert v_te_small(2, n, 5) == 1 + (n * n + 5 * n) // 2
        assert v_te_small(3, n, 5) == 1 + (n ** 3 + 12 * n ** 2 + 29 * n) // 6


def test_volume_trivial_and_guard():
    assert v_te_small(0, 9, 4) == 1
    assert v_te_general(0, 9, 4) == 1
    with pytest.raises(ValueError):
        v_te_small(3, 4, 2)


def test_general_equals_small_on_grid():
    for n in range(1, 7):
        for L in range(1, 6):
            for r in range(L + 1):
                assert v_te_general(r, n, L) == v_te_small(r, n, L)


def test_general_beyond_L():
    # radius above L only reachable through the full expression
    assert v_te_general(3, 2, 2) == ball_count_brute(
        BitArray.from_lists([[1, 0], [0, 1]]), 3)


def test_ball_counts_center_independent():
    rng = random.Random(1)
    for r in range(4):
        reference = v_te_small(r, 3, 3)
        for _ in range(3):
            x = random_array(rng, 3, 3)
            assert ball_count_brute(x, r) == reference


def test_sphere_packing_values():
    info = te_sphere_packing(7, 2, 3)
    assert info["volume"] == 8
    assert info["m_max"] == 2048
    assert info["redundancy_lower_bound"] == 3
    trivial = te_sphere_packing(3, 4, 1)
    assert trivial["m_max"] == 1 << 12


def test_sphere_packing_tighter_than_column_split():
    """d=5, n=7, L=4: the TE-ball bound beats the column-split bound when
    both use packing estimates (A(n,d) via the Hamming bound); the exact
    A(7,5) = 2 flips the comparison, so both facts are pinned."""
    sphere = te_sphere_packing(7, 4, 5)["m_max"]
    a_hamming = 2 ** 7 // sum(math.comb(7, i) for i in range(3))
    assert sphere < claim8_bound(7, 5, a_hamming).value
    assert claim8_bound(7, 5, a_n_d_brute(7, 5)).value < sphere


def test_claim8_values():
    assert claim8_bound(7, 3, 16).value == 16 * 2 ** 7
    assert claim8_bound(5, 2, 2 ** 4).value == 2 ** 4
    # redundancy implied by the split bound >= ceil((d-1)/2) log2(n)
    n, d = 8, 5
    a = a_n_d_brute(n, d)
    red = n * (d - 1) - math.log2(claim8_bound(n, d, a).value)
    assert red >= ((d - 1) // 2) * math.log2(n) - 1e-9


def test_a_n_d_values():
    assert a_n_d_brute(7, 3) == 16
    assert a_n_d_brute(4, 2) == 8      # parity code is optimal for d=2
    assert a_n_d_brute(8, 5) == 4
    assert a_n_d_brute(5, 5) == 2


def test_singleton():
    assert singleton_te(2, 3, 1 << 6) == 1
    assert singleton_te(2, 3, 1) == 7
    assert singleton_te(7, 2, 1 << 11) == 4   # consistent with distance 3


def test_m_s_brute():
    assert m_s_brute(4, 1) == 4
    assert m_s_brute(3, 3) == 1
    assert m_s_brute(3, 0) == 8
    for L in (3, 4, 5, 6):
        assert m_s_brute(L, 1) <= (2 ** L - 2) // (L - 1)
        vt0 = sum(1 for v in range(1 << L)
                  if sum(j * ((v >> (j - 1)) & 1) for j in range(1, L + 1)) % (L + 1) == 0)
        assert m_s_brute(L, 1) >= vt0
    with pytest.raises(ValueError):
        m_s_brute(11, 1)


def test_dc_part1():
    assert dc_bound_part1(3, 4, 3, 1, m_s_brute(4, 1)).value == 4 ** 3
    assert dc_bound_part1(5, 4, 2, 1, 4).value == 16 * 2 ** 12


def test_dc_part2_part3_values():
    assert dc_bound_part2(4, 4, 2, 2)["value"] == Fraction(2 ** 16, 16)
    assert dc_bound_part3(4, 4, 2)["value"] == Fraction(2 ** 16 + 1, 4)
    with pytest.raises(ValueError):
        dc_bound_part2(4, 4, 1, 2)
    with pytest.raises(ValueError):
        dc_bound_part3(4, 4, 1)


def test_dc_part2_cross_check_ball_lower_bound():
    # the packing denominator is a lower bound on the true ball volume
    n, L, t, s = 4, 4, 2, 2
    th, sh = t // 2, s // 2
    ball_lb = sum(math.comb(n, i) * math.comb(L, sh) ** i for i in range(th + 1))
    denom = (Fraction(n, th) * Fraction(L, sh) ** sh) ** th
    assert ball_lb >= denom


def test_dc_sphere_exact_lower_bound():
    rng = random.Random(2)
    for n, L in ((3, 4), (4, 3), (5, 5)):
        for t in (1, 2):
            for s in (1, 2):
                x = random_array(rng, n, L)
                assert dc_sphere_exact(x, s, t) >= \
                    math.comb(n, t) * math.comb(L, s) ** t


def test_v1_dc_ball_is_binomial_sum():
    rng = random.Random(3)
    for _ in range(5):
        x = random_array(rng, 4, 3)
        for r in range(5):
            assert v1_dc_ball_size(x, r) == sum(math.comb(4, i) for i in range(r + 1))


def test_fll_ball_size_lower_bound():
    for value in range(16):
        bits = [(value >> j) & 1 for j in range(4)]
        assert len(fll_ball(bits, 1)) >= math.comb(4, 1)


def test_delete_append_ball_sizes():
    rng = random.Random(4)
    for _ in range(50):
        x = random_array(rng, 3, 4)
        info = ted_ball(x)
        assert info["sizes_match_2r"]
        assert info["union_le_2R"]
        assert x in info["union"]


def test_delete_append_all_zero_row():
    x = BitArray.from_lists([[0, 0, 0], [1, 0, 1]])
    assert len(delete_append_ball(x, 1)) == 2


def test_ted_ball_worked_example():
    X = BitArray.from_lists([[0, 1, 1], [1, 1, 0], [0, 0, 1]])
    Y = BitArray.from_lists([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    D1_X = delete_append_ball(X, 1)
    D2_Y = delete_append_ball(Y, 2)
    expected_X = {BitArray.from_lists(rows) for rows in (
        [[0, 1, 1], [1, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [1, 1, 0], [0, 0, 1]],
        [[1, 1, 0], [1, 1, 0], [0, 0, 1]],
        [[1, 1, 1], [1, 1, 0], [0, 0, 1]],
    )}
    expected_Y = {BitArray.from_lists(rows) for rows in (
        [[1, 1, 0], [0, 1, 1], [0, 0, 1]],
        [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
        [[1, 1, 0], [1, 1, 0], [0, 0, 1]],
        [[1, 1, 0], [1, 1, 1], [0, 0, 1]],
    )}
    assert D1_X == expected_X
    assert D2_Y == expected_Y
    overlap = ted_ball(X)["union"] & ted_ball(Y)["union"]
    assert overlap   # so X and Y cannot share a (1,1,1) code


def test_ted_upper_bound_values():
    info = ted_upper_bound(4, 7)
    assert isinstance(info["finite"], Fraction)
    assert info["finite"] > info["asymptotic"] > 0
    assert math.isclose(info["redundancy_guidance"], math.log2(28), rel_tol=1e-12)
    # monotone in nL on the asymptotic term
    assert ted_upper_bound(4, 8)["asymptotic"] > info["asymptotic"]
    with pytest.raises(ValueError):
        ted_upper_bound(2, 4)


def test_theorem7_balls_disjoint_for_s1():
    """For s = 1 the packing balls have FLL radius 0, so disjointness is the
    statement that codewords are distinct arrays; checked on a real code."""
    from arraycodes.dc import DcCode

    code = DcCode(5, 4, 2)
    rng = random.Random(5)
    seen = set()
    for _ in range(30):
        msg = tuple(rng.randrange(2) for _ in range(code.message_bits))
        x = code.encode(list(msg))
        ball = {x}   # V_DC(floor(t/2), 0, x)
        assert not (ball - {x}) & seen
        seen.add(x)
