import numpy as np
import pytest

from powerdecoding.decode_gao import power_gao_decode
from powerdecoding.decode_syn import (
    compute_syndromes,
    power_syndrome_decode,
    syndrome_lengths,
    syndromes_via_lagrangians,
)
from powerdecoding.ff import Field
from powerdecoding.grs import GrsCode, apply_error, sample_error
from powerdecoding.poly import Poly

F17 = Field(17)
CODES = [
    GrsCode(F17, 16, 4, range(1, 17)),
    GrsCode(Field(23), 20, 4, range(1, 21), np.random.default_rng(0).integers(1, 23, 20)),
    GrsCode(Field(11), 8, 2, range(1, 9)),
    GrsCode(Field(2, 4), 15, 3, range(1, 16)),
]


def test_lengths():
    assert syndrome_lengths(CODES[0], 3) == [12, 9, 6]


@pytest.mark.parametrize("code", CODES, ids=repr)
def test_two_routes_agree(code):
    rng = np.random.default_rng(1)
    for _ in range(20):
        r = rng.integers(0, code.field.q, code.n)
        assert compute_syndromes(code, r, 3) == syndromes_via_lagrangians(code, r, 3)


@pytest.mark.parametrize("code", CODES, ids=repr)
def test_codeword_and_zero_syndromes(code):
    rng = np.random.default_rng(2)
    c = code.normalize(code.encode(code.random_message(rng)))
    assert compute_syndromes(code, c, 1)[0].is_zero
    assert all(S.is_zero for S in compute_syndromes(code, np.zeros(code.n, dtype=np.int64), 3))


@pytest.mark.parametrize("code", CODES[:2], ids=repr)
def test_decodes_below_half_distance(code):
    rng = np.random.default_rng(3)
    f = code.random_message(rng)
    out = power_syndrome_decode(code, code.encode(f), 2)
    assert out.success and out.locator == Poly.one(code.field) and out.message == f
    for _ in range(40):
        f = code.random_message(rng)
        e = sample_error(code, int(rng.integers(0, (code.d + 1) // 2)), rng)
        out = power_syndrome_decode(code, apply_error(code, code.encode(f), e), 2)
        assert out.success and out.message == f and out.locator == e.locator(code)


@pytest.mark.parametrize("code", CODES, ids=repr)
def test_status_matches_gao(code):
    rng = np.random.default_rng(4)
    for _ in range(150):
        ell = int(rng.integers(1, 4)) if 3 * (code.k - 1) < code.n else 1
        eps = int(rng.integers(0, code.n - code.k + 1))
        f = code.random_message(rng)
        r = apply_error(code, code.encode(f), sample_error(code, eps, rng))
        a, b = power_gao_decode(code, r, ell), power_syndrome_decode(code, r, ell)
        assert a.success == b.success
        if a.success:
            assert a.message == b.message


def test_zero_point_rejected():
    code = GrsCode(F17, 17, 4, range(17))
    with pytest.raises(ValueError, match="nonzero"):
        power_syndrome_decode(code, np.zeros(17, dtype=np.int64), 2)
