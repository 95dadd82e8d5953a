"""The numba kernels and the pure-numpy fallbacks must emit the same
candidate sets; the exact layer treats them interchangeably."""

import numpy as np
import pytest

from quarticlines.forms import QuarticForm, quartic_exponents
from quarticlines import _kernels_numpy as knp

try:
    from quarticlines import _kernels_numba as knb
except ImportError:  # pragma: no cover
    knb = None

from conftest import random_quartic, seeded_rng

EXP = np.array(quartic_exponents(), dtype=np.int64)

pytestmark = pytest.mark.skipif(knb is None, reason="numba backend unavailable")


def fvec(F):
    return np.array(F.coefficient_vector(), dtype=np.int64)


def rows_set(arr):
    return {tuple(int(v) for v in row) for row in arr}


@pytest.fixture(scope="module")
def forms():
    rng = seeded_rng("backend-parity")
    example = QuarticForm(
        {(4, 0, 0, 0): 1, (1, 3, 0, 0): -1, (0, 0, 4, 0): -1, (0, 0, 1, 3): 1}
    )
    return [example, random_quartic(rng), random_quartic(rng)]


def test_stratum_blocks_agree():
    for H in (1, 2, 3):
        for kappa in range(6):
            for m in range(1, H + 1):
                if kappa == 0:
                    for p02 in range(-H, H + 1):
                        a = knb.stratum_block(H, kappa, m, p02)
                        b = knp.stratum_block(H, kappa, m, p02)
                        assert rows_set(a) == rows_set(b)
                else:
                    assert rows_set(knb.stratum_block(H, kappa, m)) == rows_set(
                        knp.stratum_block(H, kappa, m)
                    )


def test_exhaustive_candidates_agree(forms):
    for F in forms:
        a = knb.exhaustive_candidates(fvec(F), EXP, 5)
        b = knp.exhaustive_candidates(fvec(F), EXP, 5)
        assert rows_set(a) == rows_set(b)


def test_zp_solutions_agree(forms):
    for F in forms:
        for p in (5, 7, 11):
            a = knb.sieve_zp(fvec(F), EXP, p)
            b = knp.sieve_zp(fvec(F), EXP, p)
            assert rows_set(a) == rows_set(b)


def test_crt_join_agrees(forms):
    for F in forms:
        fc = fvec(F)
        z1a = knb.sieve_zp(fc, EXP, 5)
        z2a = knb.sieve_zp(fc, EXP, 7)
        a = knb.crt_join(z1a, z2a, 5, 7, 8, fc, EXP)
        b = knp.crt_join(z1a, z2a, 5, 7, 8, fc, EXP)
        assert rows_set(a) == rows_set(b)


def test_rational_points_agree(forms):
    for F in forms:
        a = knb.rational_points(fvec(F), EXP, 2)
        b = knp.rational_points(fvec(F), EXP, 2)
        assert rows_set(a) == rows_set(b)
