"""Canonical ``lam^a * s^m * Q(c)`` forms of free characteristic functions.

With ``w = sqrt(lam)`` and edge length ``l`` the symbols mean ``s = sin(w l)/w``
and ``c = cos(w l)``.  Characteristic functions are only fixed up to a
constant multiple, so equality of forms ignores the scalar.  The scalar is
still carried in :attr:`TrigForm.scale` because the Jost function combines a
Neumann and a Dirichlet function and needs their *relative* normalisation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import cmath
import math

from .intpoly import IntPoly, content_primitive, exact_div

_Z2M1 = IntPoly((-1, 0, 1))
_ONE_MINUS_Z2 = IntPoly((1, 0, -1))


class StructuralError(ArithmeticError):
    """An input violates a structural identity the construction relies on."""


@dataclass(frozen=True)
class TrigForm:
    a: int
    m: int
    Q: IntPoly
    scale: Fraction = field(default=Fraction(1), compare=False)

    def __post_init__(self):
        if self.Q.is_zero():
            raise ValueError("TrigForm with Q = 0")
        if self.a < 0 or self.m < 0:
            raise ValueError("TrigForm exponents must be nonnegative")

    @property
    def key(self) -> tuple:
        return (self.a, self.m, self.Q.coeffs)

    def is_canonical(self) -> bool:
        c, prim = content_primitive(self.Q)
        return c == 1 and prim == self.Q and not (self.a > 0 and self.m >= 2)

    def raw_Q(self) -> tuple[Fraction, IntPoly]:
        return self.scale, self.Q

    def __call__(self, lam, ell: float = 1.0, raw: bool = True):
        """Numeric value at ``lam`` (``raw`` includes :attr:`scale`)."""
        w = cmath.sqrt(lam)
        if w == 0:
            s = ell
            c = 1.0
        else:
            s = cmath.sin(w * ell) / w
            c = cmath.cos(w * ell)
        val = lam**self.a * s**self.m * self.Q(c)
        if raw:
            val = val * float(self.scale)
        if isinstance(lam, (int, float)) and lam >= 0:
            return val.real if isinstance(val, complex) else val
        return val

    def describe(self) -> str:
        parts = []
        if self.a:
            parts.append("lam" if self.a == 1 else f"lam^{self.a}")
        if self.m:
            parts.append("s" if self.m == 1 else f"s^{self.m}")
        parts.append(f"({self.Q})")
        return " * ".join(parts)

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "m": self.m,
            "Q": self.Q.to_json(),
            "scale": str(self.scale),
        }

    @classmethod
    def from_json(cls, data: dict) -> "TrigForm":
        return cls(
            int(data["a"]),
            int(data["m"]),
            IntPoly.from_json(data["Q"]),
            Fraction(data.get("scale", "1")),
        )


def trig_canonicalize(a: int, m: int, Q: IntPoly, scale=1) -> TrigForm:
    """Reduce ``scale * lam^a * s^m * Q(c)`` to canonical form.

    Negative ``m`` is absorbed through ``(c^2 - 1)/s = -lam*s``, which needs
    ``c^2 - 1`` to divide ``Q``; pairs ``lam*s^2`` are traded for ``1 - c^2``.
    The returned form has a primitive ``Q`` with positive leading coefficient
    and its exact scalar in ``scale``.
    """
    if Q.is_zero():
        raise ValueError("cannot canonicalize Q = 0")
    if a < 0:
        raise ValueError("negative lambda exponent")
    while m < 0:
        try:
            Q = -exact_div(Q, _Z2M1)
        except ArithmeticError as exc:
            raise StructuralError(
                f"s exponent {m} needs (z^2-1) | Q, which fails for Q = {Q}"
            ) from exc
        m += 2
        a += 1
    while a > 0 and m >= 2:
        Q = _ONE_MINUS_Z2 * Q
        a -= 1
        m -= 2
    content, prim = content_primitive(Q)
    k = content if Q.lc > 0 else -content
    return TrigForm(a, m, prim, Fraction(scale) * k)


def trig_equal(f: TrigForm, g: TrigForm) -> bool:
    return f.key == g.key


def trig_value_parts(f: TrigForm, w: complex, ell: float):
    """``(lam, s, c)`` at complex frequency ``w`` (with the ``w -> 0`` limit)."""
    if w == 0:
        return 0.0, ell, 1.0
    return w * w, cmath.sin(w * ell) / w, cmath.cos(w * ell)


def trig_eval_w(f: TrigForm, w: complex, ell: float = 1.0, raw: bool = True) -> complex:
    lam, s, c = trig_value_parts(f, w, ell)
    val = lam**f.a * s**f.m * f.Q(c)
    return val * float(f.scale) if raw else val


def acos_family(rho: float, ell: float, lam_max: float) -> list[float]:
    """``lam = ((+-acos(rho) + 2 pi k)/ell)^2`` values in ``(0, lam_max]``."""
    th = math.acos(max(-1.0, min(1.0, rho)))
    wmax = math.sqrt(lam_max) * ell if lam_max > 0 else 0.0
    out = []
    k = 0
    while True:
        lo_any = False
        for w in (th + 2 * math.pi * k, -th + 2 * math.pi * k):
            if 0 < w <= wmax + 1e-12:
                out.append((w / ell) ** 2)
            if w <= wmax + 1e-12:
                lo_any = True
        if not lo_any:
            break
        k += 1
    return sorted(set(out))
