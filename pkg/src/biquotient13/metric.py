"""The submersion metric on U(5) induced from U(5) x K by (g, k) -> g k^-1.

Its value at the identity is ``<X, Y> = 1/2 <X_k, Y_k>_0 + <X_p, Y_p>_0``.
Curvature is only ever bounded from below: a plane in u(5) is lifted
horizontally to u(5) + k, where the product metric is bi-invariant and
sectional curvature is a quarter of the squared bracket norm.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import DegeneratePlaneError, NotOrthonormalError
from .liealg import block_split, bracket, inner0, k_part, p_part

GRAM_TOL = 1e-8
DEGENERATE_TOL = 1e-14


class LiftedVector(NamedTuple):
    a: np.ndarray  # u(5) component
    b: np.ndarray  # k component


def metric_inner(x, y):
    xk, xp = block_split(x)
    yk, yp = block_split(y)
    return 0.5 * inner0(xk, yk) + inner0(xp, yp)


def metric_norm(x):
    return float(np.sqrt(metric_inner(x, x)))


def lift(x) -> LiftedVector:
    """Horizontal lift ``(X_k / 2 + X_p, -X_k / 2)``."""
    xk, xp = block_split(x)
    return LiftedVector(0.5 * xk + xp, -0.5 * xk)


def lifted_inner(u: LiftedVector, v: LiftedVector):
    return inner0(u.a, v.a) + inner0(u.b, v.b)


def lifted_bracket(u: LiftedVector, v: LiftedVector) -> LiftedVector:
    return LiftedVector(bracket(u.a, v.a), bracket(u.b, v.b))


def biinvariant_curvature(u: LiftedVector, v: LiftedVector):
    """``1/4 |[u, v]|_0^2`` for a <,>_0-orthonormal pair in u(5) + k."""
    gram = np.array([[lifted_inner(u, u), lifted_inner(u, v)],
                     [lifted_inner(v, u), lifted_inner(v, v)]])
    if np.max(np.abs(gram - np.eye(2))) > GRAM_TOL:
        raise NotOrthonormalError(f"lifted pair is not orthonormal (Gram {gram.tolist()})")
    w = lifted_bracket(u, v)
    return 0.25 * lifted_inner(w, w)


def orthonormalize(x, y):
    """Gram-Schmidt in the submersion metric, with one re-orthogonalization pass.

    Raises DegeneratePlaneError when the Gram determinant of the normalized
    pair falls below 1e-14.
    """
    nx, ny = np.sqrt(metric_inner(x, x)), np.sqrt(metric_inner(y, y))
    if nx == 0 or ny == 0:
        raise DegeneratePlaneError("zero vector does not span a plane")
    e1, y = x / nx, y / ny
    c = metric_inner(e1, y)
    if 1.0 - c * c < DEGENERATE_TOL:
        raise DegeneratePlaneError(f"normalized Gram determinant {1.0 - c * c:.3e}")
    for _ in range(2):
        y = y - metric_inner(e1, y) * e1
    return e1, y / np.sqrt(metric_inner(y, y))


def curvature_lower_bound_G(x, y):
    """Lower bound for the sectional curvature of (U(5), <,>) on span(x, y).

    The pair is orthonormalized in <,>; by the isometry property of the lift
    the lifted pair is <,>_0-orthonormal, and O'Neill's inequality bounds the
    curvature below by the bi-invariant curvature of the lifted plane.
    """
    e1, e2 = orthonormalize(x, y)
    return biinvariant_curvature(lift(e1), lift(e2))


def flatness_residuals(x, y):
    """Bracket residuals of the flatness conditions, normalized to a unit basis.

    Returns ``(|[x_k, y_k]|, |[x_p, y_p]|, |[x_k, y_p] + [x_p, y_k]|)`` for the
    <,>-orthonormalized pair; all three vanish exactly when the lower bound does.
    """
    e1, e2 = orthonormalize(x, y)
    xk, xp = block_split(e1)
    yk, yp = block_split(e2)

    def nrm(m):
        return float(np.sqrt(inner0(m, m)))

    return (nrm(bracket(xk, yk)), nrm(bracket(xp, yp)),
            nrm(bracket(xk, yp) + bracket(xp, yk)))


def is_flat_plane(x, y, tol=1e-8):
    """Does span(x, y) contain y' in k with ``[x'_k, y'] = [x'_p, y'] = 0``?

    The direction of the plane closest to k is the bottom eigenvector of the
    Gram matrix of the p-parts; it must lie in k (within ``tol``), and the
    complementary direction must commute with it blockwise.
    """
    e1, e2 = orthonormalize(x, y)
    ps = (p_part(e1), p_part(e2))
    gp = np.array([[inner0(a, b) for b in ps] for a in ps])
    w, v = np.linalg.eigh(gp)
    if np.sqrt(max(w[0], 0.0)) > tol:
        return False
    c = v[:, 0]
    yd = c[0] * e1 + c[1] * e2
    xd = -c[1] * e1 + c[0] * e2
    y_ = k_part(yd)
    ny = np.sqrt(inner0(y_, y_))
    nx = np.sqrt(inner0(xd, xd))
    y_, xd = y_ / ny, xd / nx
    xk, xp = block_split(xd)
    r1 = bracket(xk, y_)
    r2 = bracket(xp, y_)
    return bool(np.sqrt(inner0(r1, r1)) <= tol and np.sqrt(inner0(r2, r2)) <= tol)
