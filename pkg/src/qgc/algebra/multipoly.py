"""Sparse integer polynomials in the three commuting symbols c, s, lambda.

A monomial ``c**i * s**j * lam**k`` is keyed by the exponent triple ``(i, j, k)``.
The symbols stand for ``cos(w*l)``, ``sin(w*l)/w`` and ``w**2`` of the free
edge solutions, so they satisfy the single relation ``lam*s**2 = 1 - c**2``.
"""

from __future__ import annotations

from math import comb
from typing import Mapping

from .intpoly import IntPoly

Exp = tuple[int, int, int]


class MultiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exp, int] | None = None):
        t = {}
        if terms:
            for e, a in terms.items():
                if a:
                    if len(e) != 3 or min(e) < 0:
                        raise ValueError(f"bad exponent {e}")
                    t[tuple(e)] = a
        object.__setattr__(self, "terms", t)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def const(cls, a: int) -> "MultiPoly":
        return cls({(0, 0, 0): a})

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, k: int = 0, coeff: int = 1) -> "MultiPoly":
        return cls({(i, j, k): coeff})

    @classmethod
    def from_c_poly(cls, q: IntPoly, j: int = 0, k: int = 0) -> "MultiPoly":
        return cls({(i, j, k): a for i, a in enumerate(q.coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(other)
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "MultiPoly(0)"
        parts = []
        for (i, j, k), a in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v for v, e in (("c", i), ("s", j), ("lam", k)) if e
            )
            parts.append(f"{a}*{mono}" if mono else str(a))
        return "MultiPoly(" + " + ".join(parts) + ")"

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({e: -a for e, a in self.terms.items()})

    def __add__(self, other) -> "MultiPoly":
        other = _coerce(other)
        t = dict(self.terms)
        for e, a in other.terms.items():
            t[e] = t.get(e, 0) + a
        return MultiPoly(t)

    __radd__ = __add__

    def __sub__(self, other) -> "MultiPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        other = _coerce(other)
        if not self.terms or not other.terms:
            return MultiPoly()
        t: dict[Exp, int] = {}
        for (i1, j1, k1), a in self.terms.items():
            for (i2, j2, k2), b in other.terms.items():
                e = (i1 + i2, j1 + j2, k1 + k2)
                t[e] = t.get(e, 0) + a * b
        return MultiPoly(t)

    __rmul__ = __mul__

    def __floordiv__(self, other) -> "MultiPoly":
        return exact_div_multi(self, _coerce(other))

    def __call__(self, c, s, lam):
        return sum(a * c**i * s**j * lam**k for (i, j, k), a in self.terms.items())

    def leading(self) -> tuple[Exp, int]:
        e = max(self.terms)
        return e, self.terms[e]


def _coerce(x) -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, int):
        return MultiPoly.const(x)
    raise TypeError(f"cannot combine MultiPoly with {type(x).__name__}")


def exact_div_multi(p: MultiPoly, d: MultiPoly) -> MultiPoly:
    """Exact quotient in Z[c, s, lam]; raises ArithmeticError if ``d`` does not divide ``p``."""
    if d.is_zero():
        raise ZeroDivisionError("division by zero MultiPoly")
    if len(d.terms) == 1:
        (de, da), = d.terms.items()
        out = {}
        for e, a in p.terms.items():
            q, r = divmod(a, da)
            if r or any(x < y for x, y in zip(e, de)):
                raise ArithmeticError("MultiPoly not divisible")
            out[(e[0] - de[0], e[1] - de[1], e[2] - de[2])] = q
        return MultiPoly(out)
    rem = dict(p.terms)
    dle, dlc = d.leading()
    dterms = list(d.terms.items())
    quot: dict[Exp, int] = {}
    while rem:
        e = max(rem)
        a = rem[e]
        q, r = divmod(a, dlc)
        qe = (e[0] - dle[0], e[1] - dle[1], e[2] - dle[2])
        if r or min(qe) < 0:
            raise ArithmeticError("MultiPoly not divisible")
        quot[qe] = q
        for (i, j, k), b in dterms:
            key = (qe[0] + i, qe[1] + j, qe[2] + k)
            v = rem.get(key, 0) - q * b
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return MultiPoly(quot)


def reduce_relation(p: MultiPoly) -> MultiPoly:
    """Normal form modulo ``lam*s**2 = 1 - c**2``.

    Every monomial ``c^i s^j lam^k`` is rewritten as
    ``c^i s^(j-2t) lam^(k-t) (1-c^2)^t`` with ``t = min(j // 2, k)``, so that
    no monomial of the result has both ``j >= 2`` and ``k >= 1``.
    """
    out: dict[Exp, int] = {}
    for (i, j, k), a in p.terms.items():
        t = min(j // 2, k)
        if t == 0:
            out[(i, j, k)] = out.get((i, j, k), 0) + a
            continue
        base_j, base_k = j - 2 * t, k - t
        for r in range(t + 1):
            coef = a * comb(t, r) * (-1) ** r
            key = (i + 2 * r, base_j, base_k)
            out[key] = out.get(key, 0) + coef
    return MultiPoly(out)


def split_trig_monomial(p: MultiPoly) -> tuple[int, int, IntPoly]:
    """Write ``p`` as ``lam^a * s^m * Q(c)``.

    Raises ``ValueError`` if the monomials of ``p`` do not share one
    ``(s, lam)`` exponent pair.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no trig form")
    pairs = {(j, k) for (_, j, k) in p.terms}
    if len(pairs) != 1:
        raise ValueError(f"not of the form lam^a s^m Q(c): (s, lam) exponents {sorted(pairs)}")
    (m, a), = pairs
    deg = max(i for (i, _, _) in p.terms)
    coeffs = [0] * (deg + 1)
    for (i, _, _), v in p.terms.items():
        coeffs[i] = v
    return a, m, IntPoly(coeffs)
