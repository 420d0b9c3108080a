import random
from itertools import combinations

import pytest

from arraycodes.errors import CorruptInputError
from arraycodes.vt import (data_positions, power_positions, vt_codewords,
                           vt_decode, vt_modulus_exponent, vt_syndrome,
                           vt_systematic_encode)


def deletions(word):
    seen = set()
    for i in range(len(word)):
        seen.add(tuple(word[:i] + word[i + 1:]))
    return seen


def test_syndrome_values():
    assert vt_syndrome([0, 0, 0, 0], 8) == 0
    assert vt_syndrome([1, 0, 0, 1], 8) == 5
    for j in range(1, 7):
        e_j = [1 if k == j else 0 for k in range(1, 7)]
        assert vt_syndrome(e_j, 8) == j % 8


def test_modulus_exponent():
    assert [vt_modulus_exponent(L) for L in (1, 2, 3, 4, 7, 8, 10)] == [1, 2, 2, 3, 3, 4, 4]


def test_power_positions_within_length():
    for L in range(2, 12):
        assert all(1 <= p <= L for p in power_positions(L))
        assert len(power_positions(L)) + len(data_positions(L)) == L


def test_decode_all_zero():
    L = 6
    assert vt_decode([0] * (L - 1), 0, L) == [0] * L


@pytest.mark.parametrize("L", range(2, 9))
def test_exhaustive_single_deletion_decoding(L):
    q = 1 << vt_modulus_exponent(L)
    coset_total = 0
    for a in range(q):
        for cw in vt_codewords(L, a):
            coset_total += 1
            for y in deletions(cw):
                assert vt_decode(list(y), a, L) == cw
    assert coset_total == 1 << L   # the syndrome classes partition F_2^L


@pytest.mark.parametrize("L", range(2, 9))
def test_deletion_balls_disjoint_within_coset(L):
    q = 1 << vt_modulus_exponent(L)
    for a in range(q):
        words = list(vt_codewords(L, a))
        balls = [deletions(w) for w in words]
        for i, j in combinations(range(len(words)), 2):
            assert not (balls[i] & balls[j]), (L, a, words[i], words[j])


def test_decode_corrupt_input():
    # 0111 has syndrome 2+3+4 = 9 = 1 mod 8; no codeword of VT_7(5) yields it
    with pytest.raises(CorruptInputError):
        vt_decode([0, 1, 1, 1], 7, 5)


def test_systematic_zero():
    assert vt_systematic_encode([0, 0], 0, 5) == [0] * 5


@pytest.mark.parametrize("L", range(2, 11))
def test_systematic_encoder_roundtrip(L):
    h = vt_modulus_exponent(L)
    q = 1 << h
    rng = random.Random(L)
    slots = data_positions(L)
    images = set()
    for a in range(q):
        for _ in range(min(1 << (L - h), 16)):
            d = [rng.randrange(2) for _ in range(L - h)]
            x = vt_systematic_encode(d, a, L)
            assert vt_syndrome(x, q) == a
            assert [x[p - 1] for p in slots] == d
            images.add((a, tuple(x)))
            for y in deletions(x):
                assert vt_decode(list(y), a, L) == x


def test_encoder_image_size():
    # exactly 2^(L-h) distinct codewords per coset
    L, a = 6, 3
    h = vt_modulus_exponent(L)
    image = set()
    for value in range(1 << (L - h)):
        d = [(value >> k) & 1 for k in range(L - h)]
        image.add(tuple(vt_systematic_encode(d, a, L)))
    assert len(image) == 1 << (L - h)


def test_encoder_wrong_data_length():
    with pytest.raises(ValueError):
        vt_systematic_encode([0, 1, 1], 0, 5)
