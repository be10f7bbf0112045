"""Backend parity and low-level blade product properties."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kahlerkit import _core_py

try:
    from kahlerkit import _core
except ImportError:
    _core = None


def _random_terms(rng, n, count=5):
    return [
        (int(rng.integers(0, 1 << n)),
         complex(int(rng.integers(-3, 4)), int(rng.integers(-3, 4))))
        for _ in range(count)
    ]


@pytest.mark.skipif(_core is None, reason="compiled kernel not built")
def test_backends_agree_bitwise():
    rng = np.random.default_rng(42)
    for _ in range(300):
        n = int(rng.integers(1, 7))
        diag = tuple(int(rng.integers(-1, 2)) for _ in range(n))
        ta = _random_terms(rng, n)
        tb = _random_terms(rng, n)
        assert _core.mul_terms(ta, tb, diag) == _core_py.mul_terms(ta, tb, diag)


@pytest.mark.skipif(_core is None, reason="compiled kernel not built")
def test_blade_product_backends_agree():
    rng = np.random.default_rng(7)
    for _ in range(500):
        n = int(rng.integers(1, 7))
        diag = tuple(int(rng.integers(-1, 2)) for _ in range(n))
        a = int(rng.integers(0, 1 << n))
        b = int(rng.integers(0, 1 << n))
        assert _core.blade_product(a, b, diag) == _core_py.blade_product(a, b, diag)
        assert _core.reorder_sign(a, b) == _core_py.reorder_sign(a, b)


@given(st.integers(0, 63), st.integers(0, 63))
def test_reorder_sign_vs_bruteforce(a, b):
    # count inversions of the concatenated index sequences directly
    seq = [i for i in range(6) if a >> i & 1] + [j for j in range(6) if b >> j & 1]
    swaps = sum(
        1 for x in range(len(seq)) for y in range(x + 1, len(seq)) if seq[x] > seq[y]
    )
    assert _core_py.reorder_sign(a, b) == (-1) ** swaps


@settings(max_examples=80)
@given(
    st.integers(0, 63),
    st.integers(0, 63),
    st.tuples(*[st.sampled_from([-1, 0, 1])] * 6),
)
def test_blade_product_self_inverse_signs(a, b, diag):
    mask, factor = _core_py.blade_product(a, b, diag)
    assert mask == a ^ b
    assert factor in (-1, 0, 1)
    if a & b == 0:
        assert factor != 0  # no squares involved, only a reordering sign
