"""Shared fixtures and independent test oracles.

The oracles here deliberately avoid the code paths they check: Bessel
values come from a truncated power series, the minimum eigenvalue from a
cyclic Jacobi sweep on the real embedding of the Hermitian matrix, and
random states from direct Haar sampling.
"""

import math

import numpy as np
import pytest

from fermigte import Dimensionality, TriangleConfig


def j1_series(x: float, terms: int = 30) -> float:
    """Ascending power series of J1, truncated at `terms` terms."""
    total = 0.0
    for m in range(terms):
        total += (-1) ** m * (x / 2.0) ** (2 * m + 1) / (
            math.factorial(m) * math.factorial(m + 1)
        )
    return total


def bisect_root(f, a: float, b: float, iters: int = 200) -> float:
    fa = f(a)
    for _ in range(iters):
        mid = 0.5 * (a + b)
        if (fa > 0.0) != (f(mid) > 0.0):
            b = mid
        else:
            a, fa = mid, f(mid)
    return 0.5 * (a + b)


def jacobi_min_eig(h: np.ndarray, sweeps: int = 100, tol: float = 1e-14) -> float:
    """Smallest eigenvalue via cyclic Jacobi on the real 2n x 2n embedding.

    The embedding [[Re, -Im], [Im, Re]] of a Hermitian matrix is symmetric
    with every eigenvalue of the original doubled.
    """
    h = np.asarray(h, dtype=complex)
    a = np.block([[h.real, -h.imag], [h.imag, h.real]])
    n = a.shape[0]
    for _ in range(sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) <= tol:
                    continue
                off = max(off, abs(a[p, q]))
                theta = 0.5 * math.atan2(2.0 * a[p, q], a[q, q] - a[p, p])
                c, s = math.cos(theta), math.sin(theta)
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
        if off <= tol:
            break
    return float(np.min(np.diag(a)))


_PAULIS = (
    np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
)


def random_su2(rng: np.random.Generator) -> np.ndarray:
    angle = rng.uniform(0.0, 2.0 * math.pi)
    axis = rng.normal(size=3)
    axis /= np.linalg.norm(axis)
    gen = sum(a * s for a, s in zip(axis, _PAULIS))
    return math.cos(angle / 2.0) * np.eye(2) - 1.0j * math.sin(angle / 2.0) * gen


def random_config(rng: np.random.Generator) -> TriangleConfig:
    """Realizable distance triple with all k_F * d_ij in [0.05, 20]."""
    while True:
        pts = rng.uniform(0.0, 10.0, size=(3, 2))
        d = (
            float(np.hypot(*(pts[0] - pts[1]))),
            float(np.hypot(*(pts[0] - pts[2]))),
            float(np.hypot(*(pts[1] - pts[2]))),
        )
        if min(d) >= 0.05 and max(d) <= 20.0:
            dim = Dimensionality.THREE_D if rng.random() < 0.5 else Dimensionality.TWO_D
            return TriangleConfig(*d, dim)


def haar_state(n: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=n) + 1.0j * rng.normal(size=n)
    return v / np.linalg.norm(v)


def random_biseparable(rng: np.random.Generator) -> np.ndarray:
    """Haar-random pure state separable across a random bipartition."""
    single = haar_state(2, rng)
    pair = haar_state(4, rng)
    cut = rng.integers(3)
    if cut == 0:  # 1|23
        return np.kron(single, pair)
    if cut == 1:  # 12|3
        return np.kron(pair, single)
    # 13|2: pair on qubits (1, 3), single on qubit 2
    return np.einsum("ik,j->ijk", pair.reshape(2, 2), single).reshape(8)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260809)
