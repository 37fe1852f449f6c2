"""Matrix Lie algebra u(5) with the splitting u(5) = k + p, k = u(4) + u(1).

Lie algebra elements are plain complex ``(5, 5)`` numpy arrays (skew-Hermitian);
group elements are unitary arrays. Nothing is wrapped in classes beyond small
named tuples for results.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

import numpy as np

N = 5
#: size of the u(4) block
KBLOCK = 4
#: real dimensions of u(5), k and p
DIM_G, DIM_K, DIM_P = 25, 17, 8

STRUCT_TOL = 1e-12
DERIVED_TOL = 1e-10

#: symplectic form on the 4-block; sp(2) = {Z : Z^T J + J Z = 0} in su(4)
J4 = np.block([[np.zeros((2, 2)), np.eye(2)], [-np.eye(2), np.zeros((2, 2))]])


class BlockSplit(NamedTuple):
    xk: np.ndarray
    xp: np.ndarray


def dagger(x):
    return np.conj(np.swapaxes(x, -1, -2))


def is_skew_hermitian(x, tol=STRUCT_TOL):
    return np.max(np.abs(x + dagger(x)), initial=0.0) <= tol


def is_unitary(u, tol=STRUCT_TOL):
    n = u.shape[-1]
    return np.max(np.abs(u @ dagger(u) - np.eye(n))) <= tol


def bracket(x, y):
    return x @ y - y @ x


def inner0(x, y):
    """Bi-invariant inner product ``Re tr(x y^*)``."""
    return float(np.real(np.vdot(y, x)))


def norm0(x):
    return float(np.sqrt(inner0(x, x)))


def adjoint(g, x):
    """``Ad(g) x = g x g^*`` for unitary g."""
    return g @ x @ dagger(g)


@lru_cache(maxsize=None)
def _k_mask(n=N):
    m = np.zeros((n, n), dtype=bool)
    m[: n - 1, : n - 1] = True
    m[n - 1, n - 1] = True
    return m


def block_split(x) -> BlockSplit:
    """Split into the block-diagonal (k) and off-diagonal (p) parts."""
    mask = _k_mask(x.shape[-1])
    xk = np.where(mask, x, 0)
    return BlockSplit(xk, x - xk)


def k_part(x):
    return np.where(_k_mask(x.shape[-1]), x, 0)


def p_part(x):
    return np.where(_k_mask(x.shape[-1]), 0, x)


def diag_i(values):
    """``i * diag(values)``."""
    return 1j * np.diag(np.asarray(values, dtype=float)).astype(complex)


@lru_cache(maxsize=None)
def _u_basis(n):
    basis = []
    for j in range(n):
        e = np.zeros((n, n), complex)
        e[j, j] = 1j
        basis.append(e)
    s = 1 / np.sqrt(2)
    for j, l in combinations(range(n), 2):
        e = np.zeros((n, n), complex)
        e[j, l], e[l, j] = s, -s
        basis.append(e)
        e = np.zeros((n, n), complex)
        e[j, l] = e[l, j] = 1j * s
        basis.append(e)
    mask = _k_mask(n)
    in_k = [b for b in basis if not np.any(b[~mask])]
    in_p = [b for b in basis if np.any(b[~mask])]
    out = np.array(in_k + in_p)
    out.setflags(write=False)
    return out


def u_basis(n=N):
    """<,>_0-orthonormal basis of u(n), k-elements first.

    For n = 5 the first 17 elements span k and the last 8 span p.
    """
    return _u_basis(n)


def coords(x, n=N):
    """Real coordinates of ``x`` (or a stack of matrices) in :func:`u_basis`."""
    b = u_basis(n)
    return np.real(np.einsum("bij,...ij->...b", np.conj(b), x))


def from_coords(c, n=N):
    return np.einsum("...b,bij->...ij", np.asarray(c, dtype=float), u_basis(n))


def _orthogonalize(mats, target_norm):
    out = []
    for m in mats:
        for q in out:
            m = m - inner0(m, q) / inner0(q, q) * q
        out.append(m)
    return [m * (target_norm / norm0(m)) for m in out]


@lru_cache(maxsize=None)
def _sp2_basis():
    A_list = []
    for j in range(2):
        a = np.zeros((2, 2), complex)
        a[j, j] = 1j
        A_list.append(a)
    A_list.append(np.array([[0, 1], [-1, 0]], complex))
    A_list.append(np.array([[0, 1j], [1j, 0]], complex))
    B_list = []
    for j, l in ((0, 0), (1, 1), (0, 1)):
        for c in (1.0, 1j):
            b = np.zeros((2, 2), complex)
            b[j, l] = b[l, j] = c
            B_list.append(b)
    z = np.zeros((2, 2), complex)
    mats = [np.block([[a, z], [z, np.conj(a)]]) for a in A_list]
    mats += [np.block([[z, b], [-np.conj(b), z]]) for b in B_list]
    embedded = []
    for m in mats:
        e = np.zeros((N, N), complex)
        e[:4, :4] = m
        embedded.append(e)
    out = np.array(_orthogonalize(embedded, np.sqrt(2.0)))
    out.setflags(write=False)
    return out


def sp2_basis():
    """Ten matrices spanning sp(2) inside the 4-block of u(5).

    Elements have the form ``[[A, B], [-conj(B), conj(A)]]`` with A in u(2)
    and B complex symmetric, so the maximal torus is ``diag(u, v, u^-1, v^-1)``.
    They are mutually <,>_0-orthogonal, each of <,>_0-norm sqrt(2).
    """
    return _sp2_basis()


def haar_unitary(seed=None, n=N):
    """Haar-distributed unitary via QR of a complex Ginibre matrix.

    ``seed`` is anything :func:`numpy.random.default_rng` accepts, including
    an existing Generator (which is then advanced).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def haar_special_unitary(seed=None, n=4):
    u = haar_unitary(seed, n)
    return u / np.linalg.det(u) ** (1.0 / n)


def exp_skew(x):
    """Matrix exponential of skew-Hermitian matrices (stack-aware)."""
    w, v = np.linalg.eigh(1j * x)
    return (v * np.exp(-1j * w)[..., None, :]) @ dagger(v)


def random_lie_vector(rng, part=None, n=N):
    """Random element of u(n), or of k / p when ``part`` is ``"k"`` / ``"p"``."""
    rng = np.random.default_rng(rng)
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    x = (z - dagger(z)) / 2
    if part == "k":
        return k_part(x)
    if part == "p":
        return p_part(x)
    return x


def random_sp2_element(rng):
    """Random element of Sp(2) as a 4x4 unitary (exp of a random sp(2) vector)."""
    rng = np.random.default_rng(rng)
    x = np.einsum("b,bij->ij", rng.standard_normal(10), sp2_basis())[:4, :4]
    return exp_skew(x)


def is_symplectic(a, tol=1e-10):
    return (np.max(np.abs(a.T @ J4 @ a - J4)) <= tol) and is_unitary(a, tol)


def root_pattern(h):
    """Root values ``x_i - x_j`` (i < j) at ``h = i diag(x_1, ..., x_n)``."""
    h = np.asarray(h)
    off = h - np.diag(np.diag(h))
    if np.max(np.abs(off), initial=0.0) > STRUCT_TOL:
        raise ValueError("root_pattern expects a diagonal matrix")
    x = np.imag(np.diag(h))
    return [float(x[i] - x[j]) for i, j in combinations(range(len(x)), 2)]


def matrix_to_json(m):
    """Nested ``[re, im]`` pairs."""
    return [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(m)]


def matrix_from_json(rows):
    return np.array([[complex(re, im) for re, im in row] for row in rows])
