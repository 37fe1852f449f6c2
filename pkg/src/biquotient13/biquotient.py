"""The 13-dimensional biquotients U(5) // S^1 x (Sp(2) x S^1) and their curvature.

At a point g of U(5) the tangent space is translated back to u(5). The
vertical space there is spanned by ``Ad(g^-1) i diag(p)``, ``i diag(1,1,1,1,0)``
and sp(2); its orthogonal complement in the submersion metric is the
13-dimensional horizontal space. A sectional-curvature lower bound for the
quotient is minimized over 2-planes of that space.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from .errors import NonFreeActionError, RankDeficiencyError
from .liealg import (
    DIM_G, DIM_K, N, adjoint, bracket, coords, dagger, diag_i, from_coords,
    haar_unitary, is_symplectic, k_part, matrix_to_json, p_part, sp2_basis,
)
from .metric import curvature_lower_bound_G
from .tuples import Tuple5, as_tuple5, freeness_failures

RANK_TOL = 1e-8
_EPS = np.finfo(float).eps
DIM_VERTICAL = 12
DIM_HORIZONTAL = DIM_G - DIM_VERTICAL

#: coordinate weights of the submersion metric in the k-first basis of u(5)
METRIC_WEIGHTS = np.array([0.5] * DIM_K + [1.0] * (DIM_G - DIM_K))

WORKERS_ENV = "BIQUOTIENT13_WORKERS"


def action_apply(t, z1, a, z2, x):
    """``diag(z1^p) x blockdiag(a^* conj(z2), 1)`` for a in Sp(2)."""
    t = as_tuple5(t)
    a = np.asarray(a)
    if a.shape != (4, 4) or not is_symplectic(a):
        raise ValueError("a must be a 4x4 unitary symplectic matrix")
    left = np.diag([complex(z1) ** p for p in t])
    right = np.eye(N, dtype=complex)
    right[:4, :4] = dagger(a) * np.conj(z2)
    return left @ x @ right


@dataclass(frozen=True)
class FreeActionReport:
    free: bool
    permutation: Optional[tuple] = None
    divisor: Optional[int] = None

    @property
    def root(self):
        """A primitive ``divisor``-th root of unity fixing a point, if not free."""
        if self.free:
            return None
        return complex(np.exp(2j * np.pi / self.divisor))

    def __bool__(self):
        return self.free


def free_action_check(t) -> FreeActionReport:
    """The action is free iff every split is coprime to the excluded entry.

    A split ``p_i1 + p_i3 - p_i2 - p_i4`` sharing a divisor d > 1 with
    ``p_i5`` admits z1 = exp(2 pi i / d) in a point stabilizer.
    """
    bad = freeness_failures(t)
    if not bad:
        return FreeActionReport(True)
    worst = max(bad, key=lambda f: f.value)
    return FreeActionReport(False, worst.permutation, worst.value)


def require_free(t):
    rep = free_action_check(t)
    if not rep.free:
        raise NonFreeActionError(t, rep.permutation, rep.divisor)


@dataclass(frozen=True)
class VerticalFrame:
    g: np.ndarray
    generators: np.ndarray  # (12, 5, 5)
    rank: int


@dataclass(frozen=True)
class HorizontalFrame:
    g: np.ndarray
    basis: np.ndarray  # (13, 5, 5), <,>-orthonormal
    vertical: VerticalFrame = field(repr=False)


def vertical_generators(t, g):
    t = as_tuple5(t)
    first = dagger(g) @ diag_i(t) @ g
    return np.concatenate([first[None], diag_i([1, 1, 1, 1, 0])[None], sp2_basis()])


def _weighted(gens):
    return coords(gens) * np.sqrt(METRIC_WEIGHTS)


def vertical_frame(t, g) -> VerticalFrame:
    require_free(t)
    gens = vertical_generators(t, g)
    v = _weighted(gens)
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    rank = int(np.sum(np.linalg.eigvalsh(v @ v.T) > RANK_TOL))
    if rank < DIM_VERTICAL:
        raise RankDeficiencyError(f"vertical rank {rank} < {DIM_VERTICAL} at this point")
    return VerticalFrame(np.asarray(g), gens, rank)


def horizontal_frame(t, g) -> HorizontalFrame:
    vf = vertical_frame(t, g)
    v = _weighted(vf.generators)
    u, _, _ = np.linalg.svd(v.T, full_matrices=True)
    comp = u[:, DIM_VERTICAL:] / np.sqrt(METRIC_WEIGHTS)[:, None]
    return HorizontalFrame(vf.g, from_coords(comp.T), vf)


def plane_lower_bound(t, g, c1, c2, frame: Optional[HorizontalFrame] = None):
    """Curvature lower bound on the plane spanned by two horizontal combinations."""
    if frame is None:
        frame = horizontal_frame(t, g)
    x = np.tensordot(np.asarray(c1, float), frame.basis, axes=1)
    y = np.tensordot(np.asarray(c2, float), frame.basis, axes=1)
    return curvature_lower_bound_G(x, y)


def translate_to_identity(g, v):
    """Left-translate a tangent vector at g back to u(5)."""
    return dagger(g) @ v


def bracket_tensor(basis):
    """``C[i, j]``: coordinates of the lifted bracket of basis vectors i, j.

    With lifts ``(x_k/2 + x_p, -x_k/2)``, the curvature bound of the plane
    spanned by ``sum u_i e_i`` and ``sum v_j e_j`` (u, v orthonormal) is
    ``|sum_ij u_i v_j C[i, j]|^2 / 4``.
    """
    a = 0.5 * k_part(basis) + p_part(basis)
    b = -0.5 * k_part(basis)
    aa = bracket(a[:, None], a[None, :])
    bb = bracket(b[:, None], b[None, :])
    return np.concatenate([coords(aa), coords(bb)[..., :DIM_K]], axis=-1)


def _orthonormal_pairs(u, v):
    u = u / np.linalg.norm(u, axis=1, keepdims=True)
    v = v - np.sum(u * v, axis=1, keepdims=True) * u
    v = v - np.sum(u * v, axis=1, keepdims=True) * u
    return u, v / np.linalg.norm(v, axis=1, keepdims=True)


def _value_and_grad(cflat, u, v):
    """Curvature bound and its Grassmannian gradient for a batch of planes."""
    r, d = u.shape
    tu = (u @ cflat).reshape(r, d, -1)   # sum_i u_i C[i, j, :]
    tv = (v @ cflat).reshape(r, d, -1)   # sum_j v_j C[j, i, :] = -sum_j C[i, j, :] v_j
    b = np.einsum("rjk,rj->rk", tu, v)
    f = 0.25 * np.sum(b * b, axis=1)
    gu = -0.5 * np.einsum("rik,rk->ri", tv, b) - 2 * f[:, None] * u
    gv = 0.5 * np.einsum("rjk,rk->rj", tu, b) - 2 * f[:, None] * v
    # project onto the orthogonal complement of each plane
    for w in (u, v):
        gu = gu - np.sum(gu * w, axis=1, keepdims=True) * w
        gv = gv - np.sum(gv * w, axis=1, keepdims=True) * w
    return f, gu, gv


def plane_values(c, u, v):
    """Bound for each plane span(u[r], v[r]) from a bracket tensor (any basis)."""
    u, v = _orthonormal_pairs(np.atleast_2d(u), np.atleast_2d(v))
    return _value_and_grad(c.reshape(c.shape[0], -1), u, v)[0]


@dataclass
class DescentResult:
    values: np.ndarray
    u: np.ndarray
    v: np.ndarray
    grad_norms: np.ndarray
    iterations: np.ndarray
    converged: np.ndarray
    min_evaluated: float


def minimize_planes(c, u0, v0, max_iters=500, tol=1e-10):
    """Batched projected gradient descent on the Grassmannian of 2-planes.

    Each start takes Barzilai-Borwein steps, backtracking by halving when the
    Armijo condition fails; the pair is re-orthonormalized after every step.
    A start stops once its gradient norm drops below ``tol``.
    """
    cflat = c.reshape(c.shape[0], -1)
    u, v = _orthonormal_pairs(np.array(u0, float), np.array(v0, float))
    r = u.shape[0]
    f, gu, gv = _value_and_grad(cflat, u, v)
    min_eval = float(f.min())
    gn2 = np.sum(gu * gu + gv * gv, axis=1)
    step = np.full(r, 0.1)
    active = np.sqrt(gn2) >= tol
    iters = np.zeros(r, dtype=int)
    for _ in range(max_iters):
        if not active.any():
            break
        idx = np.flatnonzero(active)
        iters[idx] += 1
        s = step[idx, None]
        un, vn = _orthonormal_pairs(u[idx] - s * gu[idx], v[idx] - s * gv[idx])
        fn, gun, gvn = _value_and_grad(cflat, un, vn)
        min_eval = min(min_eval, float(fn.min()))
        gn2n = np.sum(gun * gun + gvn * gvn, axis=1)
        ok = fn <= f[idx] - 1e-4 * step[idx] * gn2[idx]
        # once f is flat to rounding, a decrease of the gradient norm is progress
        flat = fn <= f[idx] + 8 * _EPS * np.maximum(np.abs(f[idx]), 1e-300)
        ok |= flat & (gn2n < gn2[idx])
        acc = idx[ok]
        rej = idx[~ok]
        if acc.size:
            su = un[ok] - u[acc]
            sv = vn[ok] - v[acc]
            yu = gun[ok] - gu[acc]
            yv = gvn[ok] - gv[acc]
            ss = np.sum(su * su + sv * sv, axis=1)
            sy = np.abs(np.sum(su * yu + sv * yv, axis=1))
            bb = np.where(sy > 0, ss / np.where(sy > 0, sy, 1.0), 2 * step[acc])
            step[acc] = np.clip(bb, 1e-8, 1e3)
            u[acc], v[acc], f[acc] = un[ok], vn[ok], fn[ok]
            gu[acc], gv[acc] = gun[ok], gvn[ok]
            gn2[acc] = gn2n[ok]
        step[rej] *= 0.5
        # a step too small to change the iterate means we are at rounding level
        stalled = rej[step[rej] < 1e-14]
        active[stalled] = False
        active &= np.sqrt(gn2) >= tol
    gn = np.sqrt(gn2)
    return DescentResult(f, u, v, gn, iters, gn < tol, min_eval)


def _ratio_and_grad(cflat, u, v):
    """Bound as a function of an arbitrary (non-orthonormal) spanning pair."""
    r, d = u.shape
    tu = (u @ cflat).reshape(r, d, -1)
    tv = (v @ cflat).reshape(r, d, -1)
    b = np.einsum("rjk,rj->rk", tu, v)
    num = 0.25 * np.sum(b * b, axis=1)
    nu = -0.5 * np.einsum("rik,rk->ri", tv, b)
    nv = 0.5 * np.einsum("rjk,rk->rj", tu, b)
    uu, vv, uv = (np.sum(a * c, axis=1) for a, c in ((u, u), (v, v), (u, v)))
    den = uu * vv - uv * uv
    du = 2 * (u * vv[:, None] - v * uv[:, None])
    dv = 2 * (v * uu[:, None] - u * uv[:, None])
    f = num / den
    gu = (nu - f[:, None] * du) / den[:, None]
    gv = (nv - f[:, None] * dv) / den[:, None]
    return f, gu, gv


def _complements(u, v):
    p = np.eye(u.shape[1]) - u[:, :, None] * u[:, None, :] - v[:, :, None] * v[:, None, :]
    return np.linalg.eigh(p)[1][:, :, 2:]


def _local_grad(cflat, u, v, nb):
    f, gu, gv = _ratio_and_grad(cflat, u, v)
    return f, np.concatenate([np.einsum("rd,rdi->ri", gu, nb),
                              np.einsum("rd,rdi->ri", gv, nb)], axis=1)


def newton_polish(c, u, v, tol=1e-10, max_steps=20, h=1e-5):
    """Newton refinement of descent end points in local Grassmannian charts.

    The chart at span(u, v) is ``(a, b) -> span(u + N a, v + N b)`` with N an
    orthonormal basis of the plane's complement. The Hessian is the
    central-difference Jacobian of the analytic gradient (step ``h``);
    negative or tiny eigenvalues are replaced by their magnitude, floored
    relative to the largest.
    """
    cflat = c.reshape(c.shape[0], -1)
    u, v = _orthonormal_pairs(np.array(u, float), np.array(v, float))
    r, d = u.shape
    m = d - 2
    nb = _complements(u, v)
    f, gl = _local_grad(cflat, u, v, nb)
    min_eval = float(f.min())
    gn = np.linalg.norm(gl, axis=1)
    active = gn >= tol
    for _ in range(max_steps):
        act = np.flatnonzero(active)
        if act.size == 0:
            break
        ua, va, na = u[act], v[act], nb[act]
        k = act.size
        # 2m perturbed charts per start, at +h and -h
        du = np.zeros((k, 2 * m, d))
        dv = np.zeros((k, 2 * m, d))
        du[:, :m] = np.swapaxes(na, 1, 2)
        dv[:, m:] = np.swapaxes(na, 1, 2)
        grads = []
        for sign in (1.0, -1.0):
            up = (ua[:, None] + sign * h * du).reshape(-1, d)
            vp = (va[:, None] + sign * h * dv).reshape(-1, d)
            fp, g = _local_grad(cflat, up, vp, np.repeat(na, 2 * m, axis=0))
            min_eval = min(min_eval, float(fp.min()))
            grads.append(g.reshape(k, 2 * m, 2 * m))
        hess = np.swapaxes(grads[0] - grads[1], 1, 2) / (2 * h)
        hess = 0.5 * (hess + np.swapaxes(hess, 1, 2))
        w, q = np.linalg.eigh(hess)
        aw = np.abs(w)
        aw = np.maximum(aw, 1e-8 * aw.max(axis=1, keepdims=True) + 1e-300)
        step = -np.einsum("rij,rj->ri", q, np.einsum("rji,rj->ri", q, gl[act]) / aw)
        alpha = np.ones(k)
        pending = np.ones(k, dtype=bool)
        for _ in range(30):
            if not pending.any():
                break
            j = np.flatnonzero(pending)
            sa = alpha[j, None] * step[j]
            un, vn = _orthonormal_pairs(ua[j] + np.einsum("rdi,ri->rd", na[j], sa[:, :m]),
                                        va[j] + np.einsum("rdi,ri->rd", na[j], sa[:, m:]))
            nn = _complements(un, vn)
            fn, gln = _local_grad(cflat, un, vn, nn)
            gnn = np.linalg.norm(gln, axis=1)
            min_eval = min(min_eval, float(fn.min()))
            fo = f[act[j]]
            ok = (fn < fo) | ((fn <= fo + 8 * _EPS * np.abs(fo)) & (gnn < gn[act[j]]))
            sel = act[j[ok]]
            u[sel], v[sel], nb[sel] = un[ok], vn[ok], nn[ok]
            f[sel], gl[sel], gn[sel] = fn[ok], gln[ok], gnn[ok]
            pending[j[ok]] = False
            alpha[j[~ok]] *= 0.5
        # a failed line search means the start is at rounding level
        active[act[pending]] = False
        active &= gn >= tol
    return f, u, v, gn, min_eval


@dataclass(frozen=True)
class CertifyConfig:
    num_points: int = 20
    restarts: int = 50
    max_iters: int = 500
    tol: float = 1e-10
    seed: int = 0


def base_point(seed, index):
    return haar_unitary(np.random.default_rng([seed, 0, index]))


def initial_planes(seed, index, restarts, dim=DIM_HORIZONTAL):
    u = np.empty((restarts, dim))
    v = np.empty((restarts, dim))
    for j in range(restarts):
        rng = np.random.default_rng([seed, 1, index, j])
        u[j], v[j] = rng.standard_normal((2, dim))
    return u, v


def _certify_point(args):
    t, cfg, index = args
    g = base_point(cfg.seed, index)
    frame = horizontal_frame(t, g)
    c = bracket_tensor(frame.basis)
    u0, v0 = initial_planes(cfg.seed, index, cfg.restarts)
    res = minimize_planes(c, u0, v0, cfg.max_iters, cfg.tol)
    f, u, v, gn, min_eval = newton_polish(c, res.u, res.v, cfg.tol)
    best = int(np.argmin(f))
    converged = gn < cfg.tol
    return {
        "index": index,
        "g": g,
        "min": float(f[best]),
        "c1": u[best],
        "c2": v[best],
        "restart_minima": f,
        "best_converged": bool(converged[best]),
        "n_converged": int(converged.sum()),
        "iterations": int(res.iterations.sum()),
        "min_evaluated": min(res.min_evaluated, min_eval),
    }


@dataclass
class CurvatureCertificate:
    """Numerical evidence for positivity: the smallest bound found, not a proof."""

    tuple: Tuple5
    config: CertifyConfig
    min_value: float
    argmin: dict
    per_point_minima: list
    converged: bool
    min_evaluated: float
    n_converged: int
    total_iterations: int
    runtime_ms: float

    @property
    def num_base_points(self):
        return self.config.num_points

    @property
    def restarts_per_point(self):
        return self.config.restarts

    @property
    def seed(self):
        return self.config.seed

    def to_dict(self, include_runtime=True):
        return {
            "schema": 1,
            "tuple": list(self.tuple),
            "config": asdict(self.config),
            "min_value": self.min_value,
            "argmin": {
                "point_index": self.argmin["point_index"],
                "g": matrix_to_json(self.argmin["g"]),
                "c1": [float(x) for x in self.argmin["c1"]],
                "c2": [float(x) for x in self.argmin["c2"]],
            },
            "per_point_minima": list(self.per_point_minima),
            "converged": self.converged,
            "n_converged": self.n_converged,
            "total_iterations": self.total_iterations,
            "min_evaluated": self.min_evaluated,
            "runtime_ms": self.runtime_ms if include_runtime else None,
        }


def default_workers():
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def certify_positivity(t, config: Optional[CertifyConfig] = None, workers=None,
                       **overrides) -> CurvatureCertificate:
    """Minimize the curvature bound over 2-planes at Haar-random base points.

    Every base point and every restart draws from its own generator seeded by
    ``(seed, point, restart)``, so the result does not depend on ``workers``.
    """
    t = as_tuple5(t)
    cfg = config or CertifyConfig()
    if overrides:
        cfg = CertifyConfig(**{**asdict(cfg), **overrides})
    require_free(t)
    workers = default_workers() if workers is None else workers
    start = time.perf_counter()
    tasks = [(t, cfg, i) for i in range(cfg.num_points)]
    if workers > 1 and cfg.num_points > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_certify_point, tasks))
    else:
        results = [_certify_point(a) for a in tasks]
    runtime = (time.perf_counter() - start) * 1e3
    minima = [r["min"] for r in results]
    best = results[int(np.argmin(minima))]
    return CurvatureCertificate(
        tuple=t,
        config=cfg,
        min_value=min(minima),
        argmin={"point_index": best["index"], "g": best["g"], "c1": best["c1"],
                "c2": best["c2"]},
        per_point_minima=minima,
        converged=all(r["best_converged"] for r in results),
        min_evaluated=min(r["min_evaluated"] for r in results),
        n_converged=sum(r["n_converged"] for r in results),
        total_iterations=sum(r["iterations"] for r in results),
        runtime_ms=runtime,
    )
