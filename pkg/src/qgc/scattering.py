"""Scattering data for a compact equilateral graph with one lead.

Conventions: ``w = sqrt(lam)`` with ``Re w >= 0`` for real ``lam > 0``,
``u = exp(i w l)``.  The Jost function is ``E(w) = phi_N + i w phi_D`` where
both characteristic functions carry the exact scalars produced by the pencil
determinant (see :attr:`TrigForm.scale`); with that normalisation the
half-line glued to a Neumann interval gives ``S = -exp(2 i w l)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .algebra import IntPoly, StructuralError, TrigForm, exact_div, poly_gcd, real_roots_in, squarefree_decomposition
from .algebra.trigform import acos_family, trig_value_parts
from .charfun import phi_dirichlet, phi_neumann
from .graphs import CombGraph
from .roots import aberth


class UnsupportedError(ValueError):
    """Configuration outside the single-lead setting."""


class PoleError(ZeroDivisionError):
    pass


# ---------------------------------------------------------------------------
# Laurent polynomials in u with rational coefficients

Laurent = dict  # exponent -> Fraction


def _lmul(p: Laurent, q: Laurent) -> Laurent:
    out: Laurent = {}
    for i, a in p.items():
        for j, b in q.items():
            out[i + j] = out.get(i + j, 0) + a * b
    return {k: v for k, v in out.items() if v}


def _ladd(p: Laurent, q: Laurent, k=1) -> Laurent:
    out = dict(p)
    for i, b in q.items():
        out[i] = out.get(i, 0) + k * b
    return {i: v for i, v in out.items() if v}


def _lscale(p: Laurent, k) -> Laurent:
    return {i: v * k for i, v in p.items() if v * k}


def _lpow(p: Laurent, n: int) -> Laurent:
    out: Laurent = {0: Fraction(1)}
    for _ in range(n):
        out = _lmul(out, p)
    return out


_GAMMA = {1: Fraction(1, 2), -1: Fraction(1, 2)}  # (u + 1/u)/2
_H = {1: Fraction(1, 2), -1: Fraction(-1, 2)}  # (u - 1/u)/2
_D = {1: Fraction(1), -1: Fraction(-1)}  # u - 1/u


def _compose_gamma(q: IntPoly) -> Laurent:
    out: Laurent = {}
    for a in reversed(q.coeffs):
        out = _ladd(_lmul(out, _GAMMA), {0: Fraction(a)})
    return out


@dataclass(frozen=True)
class JostLaurent:
    """``w**e * E(w) = i**unit_power_of_i * F(exp(i w l))``.

    ``F`` maps exponents of ``u`` to nonzero rationals.  When built by
    :func:`jost_form` the factorisation ``F = ((u - 1/u)/2)**sigma * inner``
    is kept as well; evaluation uses it to avoid the cancellation of the
    ``sigma``-fold zero of ``F`` at ``u = 1`` against ``w**e`` near ``w = 0``.
    """

    e: int
    unit_power_of_i: int
    F: tuple[tuple[int, Fraction], ...]
    ell: float = 1.0
    sigma: int = 0
    inner: tuple[tuple[int, Fraction], ...] = ()

    @property
    def lo(self) -> int:
        return self.F[0][0]

    @property
    def hi(self) -> int:
        return self.F[-1][0]

    def F_at(self, u: complex) -> complex:
        return sum(float(c) * u**k for k, c in self.F)

    def __call__(self, w: complex) -> complex:
        """``E(w)``; at ``w = 0`` only defined when ``e <= 0``."""
        u = cmath.exp(1j * w * self.ell)
        if self.inner and self.sigma >= self.e:
            # (u - 1/u)/2 = i sin(w l), and w**(-e) sin^sigma = w**(sigma-e) (sin(w l)/w)^sigma
            sw = self.ell if w == 0 else cmath.sin(w * self.ell) / w
            inner = sum(float(c) * u**k for k, c in self.inner)
            unit = (1j) ** ((self.unit_power_of_i + self.sigma) % 4)
            return unit * w ** (self.sigma - self.e) * sw**self.sigma * inner
        val = (1j) ** self.unit_power_of_i * self.F_at(u)
        if self.e == 0:
            return val
        if w == 0:
            if self.e > 0:
                raise PoleError("E has a pole factor at w = 0 in this representation")
            return 0j
        return val * w ** (-self.e)

    def cleared_poly(self) -> IntPoly:
        """Integer polynomial ``N * u**(-lo) * F(u)`` with ``N`` the denominator lcm."""
        den = 1
        for _, c in self.F:
            den = den * c.denominator // math.gcd(den, c.denominator)
        coeffs = [0] * (self.hi - self.lo + 1)
        for k, c in self.F:
            coeffs[k - self.lo] = int(c * den)
        return IntPoly(coeffs)

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "unit_power_of_i": self.unit_power_of_i,
            "F": [[k, str(c)] for k, c in self.F],
            "ell": self.ell,
        }


def jost_form(phiN: TrigForm, phiD: TrigForm, ell: float = 1.0) -> JostLaurent:
    """Laurent form of ``E = phi_N + i w phi_D`` in ``u = exp(i w l)``."""
    aN, mN, aD, mD = phiN.a, phiN.m, phiD.a, phiD.m
    if abs(mN - mD) != 1 or 2 * aN - mN != 1 + 2 * aD - mD:
        raise StructuralError(
            f"exponents (a_N, m_N) = ({aN}, {mN}) and (a_D, m_D) = ({aD}, {mD}) "
            "do not fit a single lead"
        )
    kN, kD = Fraction(phiN.scale), Fraction(phiD.scale)
    qN, qD = _compose_gamma(phiN.Q), _compose_gamma(phiD.Q)
    if mD == mN + 1:
        m = mN
        inner = _ladd(_lscale(qN, kN), _lscale(_lmul(_H, qD), kD))
        unit = (-m) % 4
    else:
        m = mD
        inner = _ladd(_lscale(qD, kD), _lscale(_lmul(_H, qN), kN), -1)
        unit = (1 - m) % 4
    F = _lscale(_lmul(_lpow(_D, m), inner), Fraction(1, 2**m))
    if not F:
        raise StructuralError("Jost function vanishes identically")
    return JostLaurent(
        -(2 * aN - mN), unit, tuple(sorted(F.items())), float(ell), m, tuple(sorted(inner.items()))
    )


def single_lead(vstar) -> int:
    if isinstance(vstar, int):
        return vstar
    vs = sorted(set(vstar))
    if len(vs) != 1:
        raise UnsupportedError(f"only a single lead is supported, got lead set {vs}")
    return vs[0]


def lead_forms(g: CombGraph, lead) -> tuple[TrigForm, TrigForm]:
    """``(phi_N, phi_D)`` for ``g`` with a lead attached at ``lead``."""
    v = single_lead(lead)
    return phi_neumann(g), phi_dirichlet(g, [v])


def jost_for_lead(g: CombGraph, lead, ell: float = 1.0) -> JostLaurent:
    return jost_form(*lead_forms(g, lead), ell)


# ---------------------------------------------------------------------------
# resonances


@dataclass
class ResonanceSet:
    """Points ``w`` of the strip ``Re(w l) in (-pi, pi]`` with multiplicities and ``u = exp(i w l)``.

    The full set repeats with period ``2 pi / l`` in ``Re w``.
    """

    omega: np.ndarray
    multiplicity: np.ndarray
    u: np.ndarray
    ell: float = 1.0

    @property
    def period(self) -> float:
        return 2 * math.pi / self.ell

    def __len__(self) -> int:
        return len(self.omega)

    def max_imag(self) -> float:
        return float(np.max(self.omega.imag)) if len(self) else -math.inf

    def is_conjugation_symmetric(self, tol: float = 1e-8) -> bool:
        """Each ``w`` has a partner ``-conj(w)`` (modulo the period) of equal multiplicity."""
        p = self.period
        for w, k in zip(self.omega, self.multiplicity):
            target = -np.conj(w)
            d = self.omega - target
            d = d.real - p * np.round(d.real / p) + 1j * d.imag
            hit = (np.abs(d) <= tol) & (self.multiplicity == k)
            if not hit.any():
                return False
        return True

    def rows(self) -> list[tuple[float, float, int]]:
        return [(float(w.real) + 0.0, float(w.imag) + 0.0, int(k)) for w, k in zip(self.omega, self.multiplicity)]


def _snap_real(z: np.ndarray, tol: float = 1e-13) -> np.ndarray:
    z = z.copy()
    small = np.abs(z.imag) <= tol * np.maximum(1.0, np.abs(z))
    z[small] = z[small].real
    return z


def _f_roots(j: JostLaurent, tol: float, seed: int) -> tuple[np.ndarray, np.ndarray]:
    p = j.cleared_poly()
    us, mults = [], []
    if p.degree >= 1:
        for f, k in squarefree_decomposition(p):
            if f.degree < 1:
                continue
            roots = _snap_real(aberth(f.coeffs, tol=tol, seed=seed))
            us.extend(roots)
            mults.extend([k] * len(roots))
    u = np.array(us, dtype=complex)
    mult = np.array(mults, dtype=int)
    keep = np.abs(u) > 0
    return u[keep], mult[keep]


def _strip_set(u: np.ndarray, mult: np.ndarray, ell: float) -> ResonanceSet:
    u = np.where(u.imag == 0, u.real + 0j, u)  # drop signed zeros so u = -1 maps to +pi
    omega = -1j * np.log(u) / ell
    omega = np.where(omega.real * ell <= -math.pi, omega + 2 * math.pi / ell, omega)
    omega = (omega.real + 0.0) + 1j * (omega.imag + 0.0)
    order = sorted(range(len(u)), key=lambda i: (round(omega[i].real, 12), round(omega[i].imag, 12)))
    return ResonanceSet(omega[order], mult[order], u[order], ell)


def jost_zeros(j: JostLaurent, tol: float = 1e-12, seed: int = 0) -> ResonanceSet:
    """Zeros of ``E(w)`` itself, ``w = -i log(u) / l`` over the roots ``u`` of ``F``."""
    u, mult = _f_roots(j, tol, seed)
    return _strip_set(u, mult, j.ell)


def resonances(j: JostLaurent, tol: float = 1e-12, seed: int = 0) -> ResonanceSet:
    """Poles of ``S(w) = E(w)/E(-w)``: the zeros of ``E(-w)``.

    These are the Jost zeros reflected through the origin.  Each root ``u0``
    of ``F`` gives ``u = 1/u0 = exp(i w l)``; with the normalisation fixed by
    the lead solution the members satisfy ``|u| >= 1``, i.e. ``Im w <= 0``.
    """
    u, mult = _f_roots(j, tol, seed)
    return _strip_set(1 / u if len(u) else u, mult, j.ell)


# ---------------------------------------------------------------------------
# S-function and common zeros


def _reduced_pair(phiN: TrigForm, phiD: TrigForm):
    """Strip common ``lam``, ``s`` powers and ``gcd(Q_N, Q_D)``; both factors are even in ``w``."""
    g = poly_gcd(phiN.Q, phiD.Q)
    qN, qD = exact_div(phiN.Q, g), exact_div(phiD.Q, g)
    a0, m0 = min(phiN.a, phiD.a), min(phiN.m, phiD.m)
    return (
        (phiN.a - a0, phiN.m - m0, qN, float(phiN.scale)),
        (phiD.a - a0, phiD.m - m0, qD, float(phiD.scale)),
    )


def _eval_reduced(part, w: complex, ell: float) -> complex:
    a, m, q, k = part
    lam, s, c = trig_value_parts(None, w, ell)
    return k * lam**a * s**m * q(c)


def jost_eval(phiN: TrigForm, phiD: TrigForm, w: complex, ell: float = 1.0, reduced: bool = False) -> complex:
    """``E(w)`` directly from the forms (optionally with common factors cancelled)."""
    if reduced:
        pN, pD = _reduced_pair(phiN, phiD)
        return _eval_reduced(pN, w, ell) + 1j * w * _eval_reduced(pD, w, ell)
    n = _eval_reduced((phiN.a, phiN.m, phiN.Q, float(phiN.scale)), w, ell)
    d = _eval_reduced((phiD.a, phiD.m, phiD.Q, float(phiD.scale)), w, ell)
    return n + 1j * w * d


def s_eval(phiN: TrigForm, phiD: TrigForm, ell: float, lam: float) -> complex:
    """``S(lam) = E(w)/E(-w)`` at ``w = sqrt(lam) > 0``, common factors cancelled first."""
    if not lam > 0:
        raise ValueError(f"s_eval needs lam > 0, got {lam}")
    w = math.sqrt(lam)
    pN, pD = _reduced_pair(phiN, phiD)
    num = _eval_reduced(pN, w, ell) + 1j * w * _eval_reduced(pD, w, ell)
    den = _eval_reduced(pN, -w, ell) - 1j * w * _eval_reduced(pD, -w, ell)
    if abs(den) < 1e-300:
        raise PoleError(f"S has a pole at lam = {lam}")
    return num / den


def s_grid(phiN: TrigForm, phiD: TrigForm, ell: float, lams: Iterable[float]) -> np.ndarray:
    return np.array([s_eval(phiN, phiD, ell, x) for x in lams])


def reconstruct_phis(j: JostLaurent, w: complex) -> tuple[complex, complex]:
    """``(phi_N, phi_D)`` at ``w`` from ``E(w)`` and ``E(-w)``."""
    ep, em = j(w), j(-w)
    return (ep + em) / 2, (ep - em) / (2j * w)


@dataclass
class CommonZeros:
    """Common zeros of ``phi_N`` and ``phi_D``.

    ``sin_even`` / ``sin_odd`` select ``lam = (k pi / l)^2`` for even / odd
    ``k >= 1`` (points where ``s = 0`` and ``c = +-1``); ``cos_roots`` are
    roots of ``gcd(Q_N, Q_D)`` strictly inside ``(-1, 1)``; ``bound`` holds
    the negative ``lam`` coming from gcd roots above 1.
    """

    sin_even: bool = False
    sin_odd: bool = False
    cos_roots: list[float] = field(default_factory=list)
    bound: list[float] = field(default_factory=list)
    ell: float = 1.0

    @property
    def sin_family(self) -> bool:
        return self.sin_even and self.sin_odd

    def embedded_values(self, lam_max: float, rel_tol: float = 1e-10) -> list[float]:
        vals = []
        k = 1
        while (k * math.pi / self.ell) ** 2 <= lam_max:
            if (self.sin_even if k % 2 == 0 else self.sin_odd):
                vals.append((k * math.pi / self.ell) ** 2)
            k += 1
        for rho in self.cos_roots:
            vals.extend(acos_family(rho, self.ell, lam_max))
        vals.sort()
        out: list[float] = []
        for v in vals:
            if not out or abs(v - out[-1]) > rel_tol * max(1.0, v):
                out.append(v)
        return out


def classify_cos_roots(rhos: Sequence[float], ell: float = 1.0, tol: float = 1e-12) -> CommonZeros:
    """Split common roots ``rho`` of the cos-polynomials into embedded and bound-state data."""
    out = CommonZeros(ell=ell)
    for rho in rhos:
        if abs(rho - 1) <= tol:
            out.sin_even = True
        elif abs(rho + 1) <= tol:
            out.sin_odd = True
        elif -1 < rho < 1:
            out.cos_roots.append(float(rho))
        elif rho > 1:
            out.bound.append(-((math.acosh(rho) / ell) ** 2))
    out.bound.sort()
    return out


def common_zeros(phiN: TrigForm, phiD: TrigForm, ell: float = 1.0) -> CommonZeros:
    g = poly_gcd(phiN.Q, phiD.Q)
    bound = 1 + sum(abs(x) for x in g.coeffs)
    rhos = [r.value for r in real_roots_in(g, -bound, bound)] if g.degree >= 1 else []
    out = classify_cos_roots(rhos, ell)
    # at s = 0 a form vanishes through its sin power or through Q(+-1)
    for c, attr in ((1, "sin_even"), (-1, "sin_odd")):
        vanishN = phiN.m > 0 or phiN.Q(c) == 0
        vanishD = phiD.m > 0 or phiD.Q(c) == 0
        setattr(out, attr, vanishN and vanishD)
    return out


def embedded_eigenvalues(phiN: TrigForm, phiD: TrigForm, ell: float, lambda_max: float) -> list[float]:
    """Positive ``lam <= lambda_max`` where both characteristic functions vanish."""
    return common_zeros(phiN, phiD, ell).embedded_values(lambda_max)


def bound_states(phiN: TrigForm, phiD: TrigForm, ell: float = 1.0) -> list[float]:
    """Negative common zeros; always empty for zero potential."""
    return common_zeros(phiN, phiD, ell).bound
