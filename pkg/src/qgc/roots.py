"""Simultaneous polynomial root finding (Aberth-Ehrlich) with mpmath polishing."""

from __future__ import annotations

from typing import Sequence

import mpmath
import numpy as np


class ConvergenceError(RuntimeError):
    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (max relative residual {residual:.3e})")
        self.residual = residual


def _horner_with_derivative(coeffs_desc: np.ndarray, z: np.ndarray):
    p = np.zeros_like(z)
    dp = np.zeros_like(z)
    for a in coeffs_desc:
        dp = dp * z + p
        p = p * z + a
    return p, dp


def relative_residual(coeffs_desc: np.ndarray, z: np.ndarray) -> np.ndarray:
    p, _ = _horner_with_derivative(coeffs_desc, z)
    scale, _ = _horner_with_derivative(np.abs(coeffs_desc).astype(complex), np.abs(z).astype(complex))
    return np.abs(p) / np.maximum(scale.real, np.finfo(float).tiny)


def aberth(
    coeffs: Sequence,
    tol: float = 1e-12,
    max_iter: int = 200,
    seed: int = 0,
    polish_digits: int = 40,
) -> np.ndarray:
    """All complex roots of ``sum(coeffs[k] * z**k)`` (ascending coefficients).

    Starts from a randomly perturbed circle whose radius is
    ``max(1, Fujiwara bound)`` and runs Jacobi-style Aberth sweeps in complex
    double until the relative residual drops below ``tol``.  If
    ``polish_digits`` is positive and the coefficients are integers, each root
    gets a few Newton steps at that precision.  Raises ``ConvergenceError``
    after ``max_iter`` sweeps.
    """
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    zeros = 0
    while len(c) > 1 and c[0] == 0:
        c.pop(0)
        zeros += 1
    if zeros:
        # exact zero roots; the residual test is meaningless near them
        rest = aberth(c, tol, max_iter, seed, polish_digits)
        return np.concatenate([np.zeros(zeros, dtype=complex), rest])
    n = len(c) - 1
    if n < 1:
        return np.zeros(0, dtype=complex)
    exact = all(isinstance(x, int) for x in c)
    desc = np.array([complex(x) for x in reversed(c)])
    desc = desc / desc[0]
    bound = 2 * max(abs(desc[k]) ** (1.0 / k) for k in range(1, n + 1))
    radius = max(1.0, bound)
    rng = np.random.default_rng(seed)
    angles = 2 * np.pi * (np.arange(n) + rng.uniform(0.1, 0.9, n)) / n
    z = radius * (1 + 0.05 * rng.uniform(-1, 1, n)) * np.exp(1j * angles)
    converged = False
    for _ in range(max_iter):
        p, dp = _horner_with_derivative(desc, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            corr = ratio / (1 - ratio * inv.sum(axis=1))
        corr = np.where(np.isfinite(corr), corr, 0.0)
        z = z - corr
        res = relative_residual(desc, z)
        if np.all(res <= tol) or np.all(np.abs(corr) <= 1e-16 * np.maximum(1.0, np.abs(z))):
            converged = True
            break
    res = relative_residual(desc, z)
    if not converged and np.max(res) > tol:
        raise ConvergenceError(f"Aberth iteration did not converge in {max_iter} sweeps", float(np.max(res)))
    if polish_digits and exact:
        z = _polish(c, z, polish_digits)
    return z


def _polish(c: list[int], z: np.ndarray, digits: int) -> np.ndarray:
    out = np.empty_like(z)
    desc = list(reversed(c))
    with mpmath.workdps(digits):
        for k, z0 in enumerate(z):
            x = mpmath.mpc(z0)
            for _ in range(8):
                p, dp = mpmath.polyval(desc, x, derivative=True)
                if dp == 0:
                    break
                step = p / dp
                x -= step
                if abs(step) <= mpmath.mpf(10) ** (-digits + 5) * max(1, abs(x)):
                    break
            out[k] = complex(x)
    return out
