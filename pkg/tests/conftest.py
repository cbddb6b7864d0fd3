from __future__ import annotations

import numpy as np
import pytest

from relhull.codes import LinearCode, dual, random_code


def random_subcode(code: LinearCode, k: int, rng: np.random.Generator) -> LinearCode:
    """A random ``k``-dimensional subcode of ``code``."""
    f = code.field
    while True:
        coeffs = f.random((k, code.k), rng)
        sub = LinearCode(f, code.n, f.matmul(coeffs, code.gen.data).reshape(k, code.n))
        if sub.k == k:
            return sub


def pair_with_hull(f, n: int, k1: int, k2: int, h: int, rng) -> tuple[LinearCode, LinearCode]:
    """``(C1, C2)`` with ``dim C1 ∩ C2^⊥ >= h``: C2 sits inside the dual of
    an ``h``-dimensional subcode of C1."""
    if not (h <= k1 and k2 <= n - h):
        raise ValueError(f"no such pair: n={n}, k1={k1}, k2={k2}, h={h}")
    c1 = random_code(f, n, k1, rng)
    if h == 0:
        return c1, random_code(f, n, k2, rng)
    s = LinearCode(f, n, c1.gen.data[:h])
    return c1, random_subcode(dual(s), k2, rng)


@pytest.fixture
def rng():
    return np.random.default_rng(20241015)


# criterion number -> (passed, detail), filled in by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {num:2d}: {detail}")
