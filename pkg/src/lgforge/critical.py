"""Numerical critical points of Laurent potentials on the complex torus.

The gradient is taken in torus-invariant form, theta_i = x_i d/dx_i, so the
critical system theta_i f = 0 lives on (C*)^n and Newton steps act
multiplicatively (z -> z * exp(-delta)), which keeps iterates off the
coordinate axes.  Residuals of reported points are re-checked through the
exact polynomial evaluator, independently of the compiled solver path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .laurent import LaurentPoly


def log_gradient(f: LaurentPoly) -> list[LaurentPoly]:
    """The torus-invariant gradient (theta_1 f, ..., theta_n f)."""
    out = []
    for i in range(f.rank):
        out.append(LaurentPoly(
            f.rank,
            {e: e[i] * c for e, c in f.terms.items() if e[i] != 0},
            f.varnames,
        ))
    return out


@dataclass(frozen=True)
class SolverOptions:
    starts: int = 200
    tol: float = 1e-11
    max_iter: int = 80
    dedupe_radius: float = 1e-6
    seed: int = 0
    radius: float = 4.0          # start moduli are log-uniform in [1/radius, radius]
    hessian_threshold: float = 1e-8
    value_tol: float = 1e-8
    coord_bound: float = 1e9


@dataclass(frozen=True)
class CriticalPoint:
    coords: tuple[complex, ...]
    value: complex
    log_hessian_det: complex
    nondegenerate: bool
    residual: float


@dataclass(frozen=True)
class CriticalSearch:
    points: tuple[CriticalPoint, ...]
    degenerate_input: bool  # gradient vanishes identically (constant potential)


@dataclass(frozen=True)
class CriticalValueSet:
    values: tuple[tuple[complex, int], ...]  # (value, multiplicity)
    degenerate_input: bool


class _Compiled:
    """numpy-backed evaluator for one polynomial at complex torus points."""

    def __init__(self, f: LaurentPoly):
        items = sorted(f.terms.items())
        self.empty = not items
        if items:
            self.exps = np.array([e for e, _ in items], dtype=np.int64)
            self.coeffs = np.array([complex(c) for _, c in items])

    def __call__(self, z: np.ndarray) -> complex:
        if self.empty:
            return 0j
        return complex(np.prod(z[None, :] ** self.exps, axis=1) @ self.coeffs)


def critical_points(f: LaurentPoly, opts: SolverOptions = SolverOptions()) -> CriticalSearch:
    """Newton search for critical points from seeded random starts.

    Non-converged starts are silently dropped; a singular Jacobian triggers a
    deterministic multiplicative jitter and the iteration continues.  Converged
    points are re-checked exactly, canonically sorted, and deduplicated within
    ``opts.dedupe_radius`` in the max-norm.
    """
    n = f.rank
    grads = log_gradient(f)
    if all(g.is_zero() for g in grads):
        return CriticalSearch((), degenerate_input=True)
    hess = [log_gradient(g) for g in grads]  # hess[i][j] = theta_j theta_i f
    cg = [_Compiled(g) for g in grads]
    ch = [[_Compiled(hess[i][j]) for j in range(n)] for i in range(n)]

    rng = np.random.default_rng(opts.seed)
    log_r = math.log(opts.radius)
    converged: list[np.ndarray] = []
    for _ in range(opts.starts):
        radii = np.exp(rng.uniform(-log_r, log_r, n))
        phases = np.exp(2j * np.pi * rng.uniform(0.0, 1.0, n))
        z = radii * phases
        for _ in range(opts.max_iter):
            g = np.array([cg[i](z) for i in range(n)])
            if not np.all(np.isfinite(g)):
                break
            if np.max(np.abs(g)) < opts.tol:
                converged.append(z)
                break
            h = np.array([[ch[i][j](z) for j in range(n)] for i in range(n)])
            try:
                delta = np.linalg.solve(h, g)
            except np.linalg.LinAlgError:
                z = z * np.exp(1e-6 + 1e-6j)  # nudge off the singular locus
                continue
            step = np.max(np.abs(delta))
            if step > 5.0:
                delta = delta * (5.0 / step)  # damp wild steps far from a root
            z = z * np.exp(-delta)
            mags = np.abs(z)
            if np.max(mags) > opts.coord_bound or np.min(mags) < 1.0 / opts.coord_bound:
                break

    # exact re-check, canonical order, dedupe
    checked = []
    for z in converged:
        pt = [complex(v) for v in z]
        residual = max(abs(g.evaluate(pt)) for g in grads)
        if residual < opts.tol:
            checked.append((pt, residual))
    checked.sort(key=lambda item: tuple((v.real, v.imag) for v in item[0]))
    points: list[CriticalPoint] = []
    kept: list[list[complex]] = []
    for pt, residual in checked:
        if any(max(abs(a - b) for a, b in zip(pt, other)) < opts.dedupe_radius
               for other in kept):
            continue
        kept.append(pt)
        z = np.array(pt)
        h = np.array([[ch[i][j](z) for j in range(n)] for i in range(n)])
        det = complex(np.linalg.det(h))
        scale = 1.0
        for i in range(n):
            scale *= max(float(np.linalg.norm(h[i])), 1e-300)
        nondegenerate = abs(det) > opts.hessian_threshold * scale
        points.append(CriticalPoint(
            coords=tuple(pt),
            value=f.evaluate(pt),
            log_hessian_det=det,
            nondegenerate=nondegenerate,
            residual=residual,
        ))
    return CriticalSearch(tuple(points), degenerate_input=False)


def critical_values(f: LaurentPoly, opts: SolverOptions = SolverOptions(),
                    search: CriticalSearch | None = None) -> CriticalValueSet:
    """Distinct critical values with multiplicities (clustered within value_tol)."""
    if search is None:
        search = critical_points(f, opts)
    clusters: list[tuple[complex, int]] = []
    for p in sorted(search.points, key=lambda p: (p.value.real, p.value.imag)):
        for i, (rep, count) in enumerate(clusters):
            if abs(p.value - rep) <= opts.value_tol:
                clusters[i] = (rep, count + 1)
                break
        else:
            clusters.append((p.value, 1))
    return CriticalValueSet(tuple(clusters), search.degenerate_input)
