"""Fundamental solutions of ``-y'' + q y = lam y`` on one edge and the asymptotic link to ``q = 0``.

``s`` and ``c`` solve the equation with ``s(0) = s'(0) - 1 = 0`` and
``c(0) - 1 = c'(0) = 0``.  Integration is fixed-step classical RK4, vectorised
over ``lam`` and steps, with ``q`` linearly interpolated between uniform samples.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .charfun import disc_char_poly
from .graphs import CombGraph, complete_graph
from .scattering import lead_forms, s_eval, single_lead

DEFAULT_STEPS = 4096
MIN_STEPS = 64
SYMMETRY_TOL = 1e-9


class NumericOverflowError(ArithmeticError):
    pass


class EvaluationPointError(ValueError):
    pass


class PotentialFormatError(ValueError):
    pass


@dataclass(frozen=True)
class PotentialSample:
    """Uniform samples ``values[k] = q(k * ell / (len(values) - 1))``."""

    ell: float
    values: np.ndarray
    symmetric: bool = False
    edge_independent: bool = True

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 1 or len(v) < 2:
            raise ValueError("need at least two potential samples")
        if not np.all(np.isfinite(v)):
            raise ValueError("potential samples must be finite")
        if not self.ell > 0:
            raise ValueError("edge length must be positive")
        if self.symmetric and np.max(np.abs(v - v[::-1])) > SYMMETRY_TOL:
            raise ValueError("samples are not symmetric about the midpoint")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def grid(self) -> np.ndarray:
        return np.linspace(0.0, self.ell, len(self.values))

    def __call__(self, x):
        return np.interp(x, self.grid, self.values)

    def is_zero(self) -> bool:
        return not np.any(self.values)

    @classmethod
    def constant(cls, v0: float, ell: float = 1.0, n: int = 2) -> "PotentialSample":
        return cls(ell, np.full(n, float(v0)), symmetric=True)

    @classmethod
    def from_function(cls, f: Callable, ell: float = 1.0, n: int = 1025) -> "PotentialSample":
        x = np.linspace(0.0, ell, n)
        v = np.asarray(f(x), dtype=float) * np.ones_like(x)
        sym = bool(np.max(np.abs(v - v[::-1])) <= SYMMETRY_TOL)
        return cls(ell, v, symmetric=sym)


def bump(height: float = 5.0, ell: float = 1.0, n: int = 1025) -> PotentialSample:
    """Smooth symmetric bump ``height * sin(pi x / ell)**2``."""
    return PotentialSample.from_function(lambda x: height * np.sin(np.pi * x / ell) ** 2, ell, n)


def load_potential_csv(path, symmetric: bool | None = None) -> PotentialSample:
    """Read ``x,q(x)`` rows (optional header) on a uniform grid starting at 0."""
    rows = []
    try:
        with open(Path(path), newline="") as fh:
            for k, rec in enumerate(csv.reader(fh)):
                if not rec or all(not f.strip() for f in rec):
                    continue
                if len(rec) != 2:
                    raise PotentialFormatError(f"line {k + 1}: expected 2 columns, got {len(rec)}")
                try:
                    rows.append((float(rec[0]), float(rec[1])))
                except ValueError:
                    if k == 0 and not rows:
                        continue  # header
                    raise PotentialFormatError(f"line {k + 1}: non-numeric entry") from None
    except OSError as exc:
        raise PotentialFormatError(str(exc)) from exc
    if len(rows) < 2:
        raise PotentialFormatError("need at least two samples")
    x = np.array([r[0] for r in rows])
    q = np.array([r[1] for r in rows])
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(q))):
        raise PotentialFormatError("non-finite value")
    ell = x[-1]
    if abs(x[0]) > 1e-12 or not ell > 0:
        raise PotentialFormatError("grid must start at 0 and increase")
    h = np.diff(x)
    if np.max(np.abs(h - ell / (len(x) - 1))) > 1e-9 * ell:
        raise PotentialFormatError("grid is not uniform")
    sym = bool(np.max(np.abs(q - q[::-1])) <= SYMMETRY_TOL)
    if symmetric and not sym:
        raise PotentialFormatError("potential is not symmetric")
    return PotentialSample(float(ell), q, symmetric=sym if symmetric is None else bool(symmetric))


def _step_matrices(q: PotentialSample, lam: np.ndarray, steps: int) -> np.ndarray:
    """One RK4 step of ``Y' = [[0, 1], [q - lam, 0]] Y`` as a matrix, for every step and ``lam``."""
    h = q.ell / steps
    qs = q(np.linspace(0.0, q.ell, 2 * steps + 1))
    shape = lam.shape + (steps, 2, 2)
    eye = np.broadcast_to(np.eye(2, dtype=lam.dtype), shape)

    def gen(qx):
        a = np.zeros(shape, dtype=lam.dtype)
        a[..., 0, 1] = 1.0
        a[..., 1, 0] = qx[None, :] - lam[:, None]
        return a

    a0, am, a1 = gen(qs[0:-1:2]), gen(qs[1::2]), gen(qs[2::2])
    k1 = a0
    k2 = am @ (eye + 0.5 * h * k1)
    k3 = am @ (eye + 0.5 * h * k2)
    k4 = a1 @ (eye + h * k3)
    return eye + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)


def integrate_sc(q: PotentialSample, lam, steps: int = DEFAULT_STEPS):
    """``(s, s', c, c')`` at ``x = ell``; ``lam`` may be a scalar or an array (real or complex).

    The equation is linear, so the classical RK4 scheme is applied as a
    product of per-step propagation matrices, multiplied pairwise.
    """
    if steps < MIN_STEPS:
        raise ValueError(f"steps must be >= {MIN_STEPS}")
    lam_arr = np.asarray(lam)
    scalar = lam_arr.ndim == 0
    lam_arr = np.atleast_1d(lam_arr)
    dtype = complex if np.iscomplexobj(lam_arr) else float
    lam_arr = lam_arr.astype(dtype).ravel()
    with np.errstate(over="ignore", invalid="ignore"):
        mats = _step_matrices(q, lam_arr, steps)
        while mats.shape[-3] > 1:
            if mats.shape[-3] % 2:
                pad = np.broadcast_to(np.eye(2, dtype=dtype), mats.shape[:-3] + (1, 2, 2))
                mats = np.concatenate((mats, pad), axis=-3)
            mats = mats[..., 1::2, :, :] @ mats[..., 0::2, :, :]
            if not np.all(np.isfinite(mats)):
                raise NumericOverflowError(f"propagator overflowed for lam in [{lam_arr.min()}, {lam_arr.max()}]")
    m = mats[..., 0, :, :]
    out = (m[..., 0, 1], m[..., 1, 1], m[..., 0, 0], m[..., 1, 0])
    if scalar:
        return tuple(v[0] for v in out)
    return tuple(v.reshape(np.shape(lam)) for v in out)


def free_sc(lam, ell: float = 1.0):
    """Closed-form ``(s, s', c, c')`` at ``x = ell`` for ``q = 0``."""
    lam = np.asarray(lam, dtype=complex)
    w = np.sqrt(lam)
    with np.errstate(divide="ignore", invalid="ignore"):
        s = np.where(w == 0, ell, np.sin(w * ell) / np.where(w == 0, 1, w))
    c = np.cos(w * ell)
    out = (s, c, c, -lam * s)
    if np.all(lam.imag == 0):
        out = tuple(np.real(v) for v in out)
    return out


def phi_eval_numeric(
    g: CombGraph, vstar, q: PotentialSample, lam, steps: int = DEFAULT_STEPS, s_tol: float = 1e-14
):
    """``s^(E-V+r) * P(c)`` with ``s = s(lam, ell)``, ``c = c(lam, ell)`` computed numerically.

    Carries the same scalar as the pencil determinant, so for ``q = 0`` it
    equals the raw free characteristic function.
    """
    if not (q.symmetric and q.edge_independent):
        raise ValueError("numeric characteristic function needs a symmetric, edge-independent potential")
    s, _, c, _ = integrate_sc(q, lam, steps)
    return phi_from_sc(g, vstar, s, c, s_tol)


def phi_from_sc(g: CombGraph, vstar, s, c, s_tol: float = 1e-14):
    """``s^(E-V+r) * P(c)`` for given values ``s``, ``c`` (scalars or arrays)."""
    vs = tuple(sorted(set(vstar)))
    p = disc_char_poly(g, vs)
    k = g.num_edges - g.n + len(vs)
    s = np.asarray(s)
    if k < 0 and np.any(np.abs(s) <= s_tol):
        raise EvaluationPointError("s(lam, ell) vanishes where a negative power of s is needed")
    coeffs = [float(a) for a in p.coeffs]
    val = np.polynomial.polynomial.polyval(np.asarray(c), coeffs) * s**k
    return val[()] if np.ndim(val) == 0 else val


def phase_locked_lambdas(lmin: float, lmax: float, count: int, phase: float = 1.0, ell: float = 1.0) -> np.ndarray:
    """Roughly log-spaced ``lam`` in ``[lmin, lmax]`` with ``sqrt(lam) * ell = phase (mod 2 pi)``.

    Fixing the phase keeps the oscillating leading error terms away from
    their zeros so that log-log slopes measure the envelope.
    """
    target = np.geomspace(lmin, lmax, count)
    k = np.ceil((np.sqrt(target) * ell - phase) / (2 * math.pi))
    w = (2 * math.pi * np.maximum(k, 0) + phase) / ell
    lam = np.unique(w**2)
    return lam[(lam >= lmin) & (lam <= lmax)]


def _slope(lams: np.ndarray, errs: np.ndarray) -> float:
    mask = errs > 0
    if mask.sum() < 2:
        return float("nan")
    return float(np.polyfit(np.log(lams[mask]), np.log(errs[mask]), 1)[0])


@dataclass
class DecayReport:
    lambdas: list[float]
    err_s: list[float]
    err_c: list[float]
    err_S: list[float]
    slope_s: float
    slope_c: float
    slope_S: float
    steps: list[int] = field(default_factory=list)

    @property
    def S_decreasing(self) -> bool:
        return all(b < a for a, b in zip(self.err_S, self.err_S[1:]))

    def to_json(self) -> dict:
        return {
            "lambdas": self.lambdas,
            "err_s": self.err_s,
            "err_c": self.err_c,
            "err_S": self.err_S,
            "slope_s": self.slope_s,
            "slope_c": self.slope_c,
            "slope_S": self.slope_S,
            "S_decreasing": self.S_decreasing,
            "steps": self.steps,
        }


def s_numeric(g: CombGraph, lead, q: PotentialSample, lam: float, steps: int = DEFAULT_STEPS) -> complex:
    """``S(lam)`` for potential ``q`` on every edge of ``g`` and a free lead at ``lead``."""
    if not (q.symmetric and q.edge_independent):
        raise ValueError("numeric S needs a symmetric, edge-independent potential")
    s, _, c, _ = integrate_sc(q, lam, steps)
    return _s_from_sc(g, lead, lam, s, c)


def _s_from_sc(g: CombGraph, lead, lam: float, s, c) -> complex:
    v = single_lead(lead)
    w = math.sqrt(lam)
    pN = phi_from_sc(g, (), s, c)
    pD = phi_from_sc(g, (v,), s, c)
    den = pN - 1j * w * pD
    if abs(den) < 1e-300:
        raise ZeroDivisionError(f"S has a pole at lam = {lam}")
    return (pN + 1j * w * pD) / den


def asymptotic_check(
    q: PotentialSample,
    lambdas: Sequence[float],
    graph: CombGraph | None = None,
    lead: int = 0,
    steps: int | None = None,
    points_per_radian: int = 64,
) -> DecayReport:
    """Errors ``|s_q - s|``, ``|c_q - c|`` and ``|S_q - S|`` against ``q = 0`` with fitted log-log slopes.

    Unless ``steps`` is given each ``lam`` uses
    ``max(DEFAULT_STEPS, points_per_radian * sqrt(lam) * ell)`` RK4 steps.
    """
    if not (q.symmetric and q.edge_independent):
        raise ValueError("asymptotic check needs a symmetric, edge-independent potential")
    g = graph if graph is not None else complete_graph(2)
    phiN, phiD = lead_forms(g, lead)
    lams = np.asarray(lambdas, dtype=float)
    es, ec, eS, used = [], [], [], []
    for lam in lams:
        n = steps or max(DEFAULT_STEPS, int(math.ceil(points_per_radian * math.sqrt(lam) * q.ell)))
        s, _, c, _ = integrate_sc(q, lam, n)
        s0, _, c0, _ = free_sc(lam, q.ell)
        es.append(float(abs(s - s0)))
        ec.append(float(abs(c - c0)))
        S_q = _s_from_sc(g, lead, lam, s, c)
        eS.append(float(abs(S_q - s_eval(phiN, phiD, q.ell, lam))))
        used.append(n)
    return DecayReport(
        [float(x) for x in lams],
        es,
        ec,
        eS,
        _slope(lams, np.array(es)),
        _slope(lams, np.array(ec)),
        _slope(lams, np.array(eS)),
        used,
    )
