"""Independent numerical checks of the facts the positivity argument rests on.

* Linear functionals on an adjoint orbit take their extreme values on the
  diagonal matrices of the orbit, i.e. at permutations of the seed diagonal.
* A diagonal traceless H orthogonal to a conjugate ``Ad(h1) sp(2)`` has a
  root pattern with at least two vanishing roots; up to permutation and scale
  it is ``diag(1, 1, -1, -1)`` or ``diag(1, 1, 1, -3)``.
* The three extremal families are positive exactly under conditions b)-d).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .liealg import (
    adjoint, bracket, dagger, diag_i, exp_skew, haar_special_unitary, haar_unitary,
    is_unitary, random_sp2_element, sp2_basis,
)
from .tuples import extremal_values

PATTERNS = {
    "(1,1,-1,-1)": np.array([1.0, 1.0, -1.0, -1.0]),
    "(1,1,1,-3)": np.array([1.0, 1.0, 1.0, -3.0]),
}
PATTERN_TOL = 1e-7


def _diag_values(x):
    return np.imag(np.diag(np.asarray(x)))


def permutation_values(h, a):
    """``<h, P a P^T>_0`` for every permutation matrix P (diagonal h, a)."""
    hv, av = _diag_values(h), _diag_values(a)
    return np.array([hv @ av[list(p)] for p in permutations(range(len(av)))])


def orbit_function(h, a, g):
    """``<h, Ad(g) a>_0`` for a single g or a stack of them."""
    x = g @ a @ dagger(g)
    return np.real(np.einsum("...ij,ij->...", x, np.conj(h)))


@dataclass
class OrbitExtremumReport:
    h: np.ndarray
    orbit_seed_diag: np.ndarray
    permutation_max: float
    permutation_min: float
    numeric_max: float
    numeric_min: float

    @property
    def gap(self):
        """How far the numerical search falls short of the permutation envelope."""
        return max(self.permutation_max - self.numeric_max,
                   self.numeric_min - self.permutation_min)

    def to_dict(self):
        return {
            "h_diag": [float(v) for v in _diag_values(self.h)],
            "orbit_seed_diag": [float(v) for v in self.orbit_seed_diag],
            "permutation_max": self.permutation_max,
            "permutation_min": self.permutation_min,
            "numeric_max": self.numeric_max,
            "numeric_min": self.numeric_min,
            "gap": self.gap,
        }


def _orbit_ascent(h, a, g, max_iters, tol):
    """Batched ascent of ``<h, Ad(g) a>_0`` along ``g <- exp(eps W) g``.

    W = [Ad(g) a, h] is the steepest-ascent direction. ``eps`` starts at 0.1
    and is halved whenever a step fails to increase the value; after a
    successful step it is reset to the Barzilai-Borwein length computed from
    the change in W.
    """
    g = g.copy()
    x = adjoint(g, a)
    f = np.real(np.einsum("rij,ij->r", x, np.conj(h)))
    w = bracket(x, h)
    eps = np.full(len(g), 0.1)
    active = np.ones(len(g), dtype=bool)
    for _ in range(max_iters):
        wn = np.sqrt(np.sum(np.abs(w) ** 2, axis=(1, 2)))
        active &= wn >= tol
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        step = eps[idx, None, None] * w[idx]
        gn = exp_skew(step) @ g[idx]
        xn = adjoint(gn, a)
        fn = np.real(np.einsum("rij,ij->r", xn, np.conj(h)))
        ok = fn > f[idx]
        acc, rej = idx[ok], idx[~ok]
        if acc.size:
            wnew = bracket(xn[ok], h)
            s_, y_ = step[ok], wnew - w[acc]
            ss = np.sum(np.abs(s_) ** 2, axis=(1, 2))
            sy = np.abs(np.real(np.sum(s_ * np.conj(y_), axis=(1, 2))))
            bb = np.where(sy > 0, ss / np.where(sy > 0, sy, 1.0), 2 * eps[acc])
            eps[acc] = np.clip(bb, 1e-8, 1e3)
            g[acc], x[acc], f[acc], w[acc] = gn[ok], xn[ok], fn[ok], wnew
        eps[rej] *= 0.5
        active[rej[eps[rej] < 1e-16]] = False
    return f, g


def orbit_extrema(h, a, restarts=16, max_iters=3000, seed=0, tol=1e-9):
    """Compare orbit extrema found by multi-start ascent with the permutation values."""
    h = np.asarray(h, complex)
    a = np.asarray(a, complex)
    n = a.shape[0]
    perm = permutation_values(h, a)
    rng = np.random.default_rng(seed)
    starts = np.array([haar_unitary(rng, n) for _ in range(restarts)])
    fmax, _ = _orbit_ascent(h, a, starts, max_iters, tol)
    fmin, _ = _orbit_ascent(-h, a, starts, max_iters, tol)
    return OrbitExtremumReport(
        h=h,
        orbit_seed_diag=_diag_values(a),
        permutation_max=float(perm.max()),
        permutation_min=float(perm.min()),
        numeric_max=float(fmax.max()),
        numeric_min=float(-fmin.max()),
    )


def orbit_envelope_violation(h, a, samples=1000, seed=0):
    """Largest excursion of ``<h, Ad(g) a>_0`` outside the permutation range
    over Haar-random g (non-positive when the envelope holds)."""
    perm = permutation_values(h, a)
    rng = np.random.default_rng(seed)
    n = np.asarray(a).shape[0]
    gs = np.array([haar_unitary(rng, n) for _ in range(samples)])
    vals = orbit_function(np.asarray(h), np.asarray(a), gs)
    return float(max(vals.max() - perm.max(), perm.min() - vals.min()))


def _su4_diagonal_basis():
    b = np.array([[1, -1, 0, 0], [1, 1, -2, 0], [1, 1, 1, -3]], dtype=float)
    return b / np.linalg.norm(b, axis=1, keepdims=True)


def lemma8_complement(h1, tol=1e-9):
    """Basis of {H in t : <H, Ad(h1) sp(2)>_0 = 0}, t the diagonal of su(4).

    Each basis element is returned as a 4x4 matrix ``i diag(x)`` of unit
    <,>_0-norm; the list is empty when the intersection is trivial.
    """
    h1 = np.asarray(h1, complex)
    if h1.shape != (4, 4) or not is_unitary(h1, 1e-10) or abs(np.linalg.det(h1) - 1) > 1e-10:
        raise ValueError("h1 must be a 4x4 special unitary matrix")
    f = adjoint(h1, sp2_basis()[:, :4, :4])
    # <i diag(x), F>_0 = sum_j x_j Im F_jj
    rows = np.imag(np.diagonal(f, axis1=1, axis2=2))
    tb = _su4_diagonal_basis()
    a = rows @ tb.T
    _, s, vt = np.linalg.svd(a)
    scale = max(s[0], 1.0)
    rank = int(np.sum(s > tol * scale))
    return [diag_i(tb.T @ v) for v in vt[rank:]]


def classify_root_pattern(h, tol=PATTERN_TOL):
    """Name of the pattern matched by diagonal ``h`` up to permutation and scale."""
    x = _diag_values(h)
    m = np.max(np.abs(x))
    if m == 0:
        return None
    y = np.sort(x / m)
    for name, pat in PATTERNS.items():
        for sgn in (1.0, -1.0):
            ref = np.sort(sgn * pat / np.max(np.abs(pat)))
            if np.max(np.abs(y - ref)) <= tol:
                return name
    return None


def structured_su4_elements(rng, count):
    """Elements ``D P A`` of SU(4): D diagonal, P a signed permutation, A in Sp(2).

    These are the conjugations for which ``Ad(h1) sp(2)`` meets the complement
    of t nontrivially, so the orthogonal diagonal directions are nonzero.
    """
    rng = np.random.default_rng(rng)
    out = []
    perms = list(permutations(range(4)))
    for _ in range(count):
        p = np.eye(4)[list(perms[rng.integers(len(perms))])].astype(complex)
        d = np.exp(1j * rng.uniform(0, 2 * np.pi, 4))
        u = np.diag(d) @ p @ random_sp2_element(rng)
        out.append(u / np.linalg.det(u) ** 0.25)
    return out


def random_su4(rng):
    return haar_special_unitary(rng, 4)


def extremal_family_check(t):
    """True when every extremal value is positive (conditions b)-d))."""
    return min(extremal_values(t)) > 0
