"""Dense univariate polynomials over the integers.

Coefficients are stored in ascending order of powers, ``IntPoly((a0, a1, ...))``
meaning ``a0 + a1*z + ...``.  Values are immutable and hashable so they can be
used directly as dictionary keys (the census groups graphs this way).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Number
from typing import Iterable, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(coeffs)
        for a in c:
            if not isinstance(a, int):
                raise TypeError(f"IntPoly coefficients must be int, got {type(a).__name__}")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    def __reduce__(self):
        return (IntPoly, (self.coeffs,))

    # construction helpers
    @classmethod
    def const(cls, a: int) -> "IntPoly":
        return cls((a,))

    @classmethod
    def z(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Sequence[int]) -> "IntPoly":
        p = cls.const(1)
        for r in roots:
            p = p * cls((-r, 1))
        return p

    # basic properties
    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("z" if k == 1 else f"z^{k}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # ring operations
    def __neg__(self) -> "IntPoly":
        return IntPoly(-a for a in self.coeffs)

    def __add__(self, other) -> "IntPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "IntPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[k] - other[k] for k in range(n))

    def __rsub__(self, other) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other) -> "IntPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power")
        result = IntPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __floordiv__(self, other) -> "IntPoly":
        return exact_div(self, _coerce(other))

    # evaluation
    def __call__(self, x):
        """Horner evaluation at an int, Fraction, float or complex argument."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(k * self.coeffs[k] for k in range(1, len(self.coeffs)))

    def compose(self, inner: "IntPoly") -> "IntPoly":
        acc = IntPoly()
        for a in reversed(self.coeffs):
            acc = acc * inner + a
        return acc

    def scale_arg(self, k: int) -> "IntPoly":
        """Return ``p(k*z)``."""
        return IntPoly(a * k**i for i, a in enumerate(self.coeffs))

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = gcd(g, a)
        return g

    def to_json(self) -> list[str]:
        return [str(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "IntPoly":
        return cls(int(a) for a in data)


def _coerce(x):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly.const(x)
    return NotImplemented


def poly_eval(p: IntPoly, x):
    return p(x)


def content_primitive(p: IntPoly) -> tuple[int, IntPoly]:
    """Split ``p`` into content and a primitive part with positive leading coefficient.

    Returns ``(content, primitive)`` with ``p == sign * content * primitive``
    where ``sign`` is the sign of ``p.lc``; content is always positive.
    """
    if p.is_zero():
        raise ValueError("content_primitive of the zero polynomial")
    c = p.content()
    if p.lc < 0:
        c_signed = -c
    else:
        c_signed = c
    return c, IntPoly(a // c_signed for a in p.coeffs)


def primitive(p: IntPoly) -> IntPoly:
    return content_primitive(p)[1]


def signed_content(p: IntPoly) -> int:
    """The integer ``k`` with ``p == k * primitive(p)``."""
    c, _ = content_primitive(p)
    return c if p.lc > 0 else -c


def divmod_q(p: IntPoly, d: IntPoly) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder over the rationals (ascending Fraction lists)."""
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(a) for a in p.coeffs]
    dd = d.coeffs
    n = len(dd) - 1
    if len(r) - 1 < n:
        return [], r
    q = [Fraction(0)] * (len(r) - n)
    lc = dd[-1]
    for k in range(len(r) - 1 - n, -1, -1):
        coef = r[k + n] / lc
        q[k] = coef
        if coef:
            for i, di in enumerate(dd):
                r[k + i] -= coef * di
    r = r[:n]
    while r and r[-1] == 0:
        r.pop()
    return q, r


def exact_div(p: IntPoly, d: IntPoly) -> IntPoly:
    """Exact quotient ``p / d``.

    Raises ``ArithmeticError`` when ``d`` does not divide ``p`` or the quotient
    is not integral (for primitive ``d`` the two conditions coincide).
    """
    q, r = divmod_q(p, d)
    if r:
        raise ArithmeticError(f"{d} does not divide {p}")
    out = []
    for a in q:
        if a.denominator != 1:
            raise ArithmeticError(f"quotient of {p} by {d} is not integral")
        out.append(a.numerator)
    return IntPoly(out)


def prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder ``lc(b)^(deg a - deg b + 1) * a mod b``."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero")
    r = list(a.coeffs)
    db = b.degree
    if len(r) - 1 < db:
        return IntPoly(r)
    lc = b.lc
    delta = len(r) - 1 - db
    for k in range(delta, -1, -1):
        top = r[k + db] if k + db < len(r) else 0
        r = [lc * x for x in r]
        if top:
            for i, bi in enumerate(b.coeffs):
                r[k + i] -= top * bi
        r = r[: k + db]
    return IntPoly(r)


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (subresultant PRS)."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if q.is_zero():
        return primitive(p)
    if p.is_zero():
        return primitive(q)
    a, b = (p, q) if p.degree >= q.degree else (q, p)
    a, b = primitive(a), primitive(b)
    g, h = 1, 1
    while True:
        delta = a.degree - b.degree
        r = prem(a, b)
        if r.is_zero():
            return primitive(b)
        if r.degree == 0:
            return IntPoly.const(1)
        a, b = b, IntPoly(x // (g * h**delta) for x in r.coeffs)
        g = a.lc
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm; returns primitive factors ``(f_i, i)`` with ``deg f_i > 0``.

    ``p`` equals ``k * prod f_i**i`` for some integer ``k``.
    """
    if p.is_zero():
        raise ValueError("square-free decomposition of zero")
    p = primitive(p)
    if p.degree <= 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = exact_div(p, a)
    c = exact_div(dp, a)
    out = []
    i = 1
    while b.degree > 0:
        d = c - b.derivative()
        f = poly_gcd(b, d) if not d.is_zero() else b
        if f.degree > 0:
            out.append((f, i))
        b = exact_div(b, f)
        c = exact_div(d, f) if not d.is_zero() else IntPoly()
        i += 1
    return out


# ---------------------------------------------------------------------------
# real root isolation


class RootInterval:
    """Isolating interval ``[lo, hi]`` of one real root with its multiplicity."""

    __slots__ = ("lo", "hi", "multiplicity")

    def __init__(self, lo: Fraction, hi: Fraction, multiplicity: int):
        self.lo = lo
        self.hi = hi
        self.multiplicity = multiplicity

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> float:
        return float((self.lo + self.hi) / 2)

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __repr__(self) -> str:
        return f"RootInterval({self.value!r}, mult={self.multiplicity})"


def sturm_sequence(p: IntPoly) -> list[IntPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        _, r = divmod_q(seq[-2], seq[-1])
        if not r:
            break
        # clear denominators with a positive factor, keeps the sign pattern
        den = 1
        for x in r:
            den = den * x.denominator // gcd(den, x.denominator)
        ri = IntPoly(-(x * den).numerator for x in r)
        c = ri.content()
        seq.append(IntPoly(x // c for x in ri.coeffs))
    return [s for s in seq if not s.is_zero()]


def _sign_changes(seq: Sequence[IntPoly], x: Fraction) -> int:
    prev = 0
    n = 0
    for s in seq:
        v = s(x)
        if v == 0:
            continue
        sg = 1 if v > 0 else -1
        if prev and sg != prev:
            n += 1
        prev = sg
    return n


def _isolate_squarefree(f: IntPoly, lo: Fraction, hi: Fraction, tol: Fraction, mult: int) -> list[RootInterval]:
    seq = sturm_sequence(f)
    found: list[RootInterval] = []

    def count(a: Fraction, b: Fraction) -> int:
        # roots in (a, b]
        return _sign_changes(seq, a) - _sign_changes(seq, b)

    if f(lo) == 0:
        found.append(RootInterval(lo, lo, mult))
    stack = [(lo, hi)]
    isolated = []
    while stack:
        a, b = stack.pop()
        k = count(a, b)
        if k == 0:
            continue
        if k == 1:
            isolated.append((a, b))
            continue
        m = (a + b) / 2
        stack.append((a, m))
        stack.append((m, b))
    for a, b in isolated:
        # root lies in (a, b]
        if f(b) == 0:
            found.append(RootInterval(b, b, mult))
            continue
        fa_sign = f(a) > 0 if f(a) != 0 else None
        while b - a > tol:
            m = (a + b) / 2
            fm = f(m)
            if fm == 0:
                a = b = m
                break
            if fa_sign is None:
                # a is itself a root of f excluded from (a, b]; use Sturm count
                if count(a, m) == 1:
                    b = m
                else:
                    a = m
                    fa_sign = f(a) > 0
                continue
            if (fm > 0) == fa_sign:
                a = m
            else:
                b = m
        found.append(RootInterval(a, b, mult))
    return found


def real_roots_in(p: IntPoly, lo, hi, tol=Fraction(1, 10**12)) -> list[RootInterval]:
    """All real roots of ``p`` in the closed interval ``[lo, hi]``.

    Multiplicities come from the exact square-free decomposition; each
    square-free factor is isolated with Sturm sequences and refined by
    rational bisection to width at most ``tol``.  Results are sorted by value.
    """
    if p.is_zero():
        raise ValueError("real_roots_in of the zero polynomial")
    lo, hi, tol = Fraction(lo), Fraction(hi), Fraction(tol)
    if lo > hi:
        raise ValueError("empty interval")
    out: list[RootInterval] = []
    for f, mult in squarefree_decomposition(p):
        out.extend(_isolate_squarefree(f, lo, hi, tol, mult))
    out.sort(key=lambda r: (r.midpoint, r.multiplicity))
    return out
