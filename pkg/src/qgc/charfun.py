"""Characteristic functions of the free (zero potential) equilateral problems.

Two independent routes to the same canonical form:

* the discrete pencil ``P(z) = det(z*D - A)`` of the interior subgraph, with
  degrees taken in the full graph, turned into ``s^(E-V+r) * P(c)``;
* the ``2E x 2E`` secular determinant in the edge amplitudes ``A_e, B_e``
  (``y_e(x) = A_e*s(x) + B_e*c(x)``) evaluated symbolically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .algebra import (
    IntPoly,
    MultiPoly,
    StructuralError,
    TrigForm,
    bareiss_det,
    real_roots_in,
    reduce_relation,
    split_trig_monomial,
    trig_canonicalize,
)
from .algebra.trigform import acos_family
from .graphs import CombGraph, interior_subgraph, is_connected

MAX_ORACLE_EDGES = 40


def _check_vstar(g: CombGraph, vstar: Iterable[int]) -> tuple[int, ...]:
    vs = tuple(sorted(set(vstar)))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    if len(vs) >= g.n:
        raise ValueError("Dirichlet set must leave at least one vertex")
    return vs


def disc_char_poly(g: CombGraph, vstar: Iterable[int] = ()) -> IntPoly:
    """``det(z*D_hat - A_hat)`` for the interior subgraph left after deleting ``vstar``."""
    vs = _check_vstar(g, vstar)
    if not is_connected(g):
        raise ValueError("graph must be connected")
    sub, degs = interior_subgraph(g, vs)
    n = sub.n
    adj = sub.adjacency()
    zero, minus_one = IntPoly(), IntPoly.const(-1)
    mat = [
        [IntPoly((0, degs[i])) if i == j else (minus_one if j in adj[i] else zero) for j in range(n)]
        for i in range(n)
    ]
    return bareiss_det(mat, IntPoly.const(1))


def phi_neumann(g: CombGraph) -> TrigForm:
    """Canonical ``s^(E-V) * P(c)`` with standard conditions at every vertex."""
    return trig_canonicalize(0, g.num_edges - g.n, disc_char_poly(g))


def phi_dirichlet(g: CombGraph, vstar: Iterable[int]) -> TrigForm:
    """Canonical ``s^(E-V+r) * P_hat(c)`` with Dirichlet conditions on ``vstar`` (``r = #vstar``)."""
    vs = _check_vstar(g, vstar)
    if not vs:
        raise ValueError("phi_dirichlet needs a nonempty Dirichlet set; use phi_neumann")
    return trig_canonicalize(0, g.num_edges - g.n + len(vs), disc_char_poly(g, vs))


def phi_form(g: CombGraph, vstar: Iterable[int] = ()) -> TrigForm:
    vs = tuple(vstar)
    return phi_dirichlet(g, vs) if vs else phi_neumann(g)


# ---------------------------------------------------------------------------
# secular determinant


def char_matrix(g: CombGraph, vstar: Iterable[int] = ()) -> list[list[MultiPoly]]:
    """The ``2E x 2E`` system in ``(A_e, B_e)`` over Z[c, s, lam].

    Edge ``(u, v)`` with ``u < v`` runs from ``u`` (x=0) to ``v`` (x=l), so
    ``y(0) = B``, ``y(l) = A s + B c``, ``y'(0) = A``, ``y'(l) = A c - B lam s``.
    Rows go vertex by vertex: for a standard vertex the continuity rows pair
    its lowest incident edge with each other one, then the Kirchhoff row; a
    Dirichlet vertex gets one vanishing row per incident edge.
    """
    vs = set(_check_vstar(g, vstar))
    edges = g.sorted_edges()
    col = {e: i for i, e in enumerate(edges)}
    ne = len(edges)
    one = MultiPoly.const(1)
    c = MultiPoly.monomial(1, 0, 0)
    s = MultiPoly.monomial(0, 1, 0)
    lam_s = MultiPoly.monomial(0, 1, 1)
    zero = MultiPoly()

    def value(e, v) -> dict[int, MultiPoly]:
        i = col[e]
        if e[0] == v:
            return {ne + i: one}
        return {i: s, ne + i: c}

    def outgoing_derivative(e, v) -> dict[int, MultiPoly]:
        # derivative pointing away from v into the edge
        i = col[e]
        if e[0] == v:
            return {i: one}
        return {i: -c, ne + i: lam_s}

    rows = []
    for v in range(g.n):
        inc = g.incident_edges(v)
        if v in vs:
            for e in inc:
                rows.append(value(e, v))
            continue
        first = inc[0]
        for e in inc[1:]:
            r = dict(value(first, v))
            for k, x in value(e, v).items():
                r[k] = r.get(k, zero) - x
            rows.append(r)
        kirch: dict[int, MultiPoly] = {}
        for e in inc:
            for k, x in outgoing_derivative(e, v).items():
                kirch[k] = kirch.get(k, zero) + x
        rows.append(kirch)
    if len(rows) != 2 * ne:
        raise StructuralError(f"built {len(rows)} rows for {ne} edges")
    return [[r.get(j, zero) for j in range(2 * ne)] for r in rows]


def char_matrix_oracle(g: CombGraph, vstar: Iterable[int] = ()) -> TrigForm:
    """Canonical form of the reduced secular determinant.

    Must coincide with :func:`phi_neumann` / :func:`phi_dirichlet` up to scale.
    """
    vs = _check_vstar(g, vstar)
    if g.num_edges == 0:
        raise ValueError("graph has no edges")
    if g.num_edges > MAX_ORACLE_EDGES:
        raise ValueError(f"oracle limited to E <= {MAX_ORACLE_EDGES}, got {g.num_edges}")
    det = bareiss_det(char_matrix(g, vs), MultiPoly.const(1))
    red = reduce_relation(det)
    if red.is_zero():
        raise StructuralError("secular determinant vanishes identically")
    try:
        a, m, q = split_trig_monomial(red)
    except ValueError as exc:
        raise StructuralError(str(exc)) from exc
    return trig_canonicalize(a, m, q)


# ---------------------------------------------------------------------------
# zero sets


@dataclass
class CosRoot:
    rho: float
    multiplicity: int
    lo: float
    hi: float

    def to_json(self) -> dict:
        return {"rho": self.rho, "multiplicity": self.multiplicity, "interval": [self.lo, self.hi]}


@dataclass
class SpectrumFamilies:
    """Zero set of ``lam^a s^m Q(c)`` described by families.

    ``lam = 0`` is present when ``has_zero``; ``sin_family`` adds
    ``(k pi / l)^2`` for ``k >= 1``; each entry of ``cos_roots`` adds
    ``((+-acos(rho) + 2 pi k)/l)^2``.  Roots with ``|rho| > 1`` are kept in
    ``anomalies`` (they never occur for zero potential).
    """

    has_zero: bool
    sin_family: bool
    cos_roots: list[CosRoot]
    anomalies: list[CosRoot] = field(default_factory=list)
    ell: float = 1.0

    def values(self, lam_max: float, rel_tol: float = 1e-10) -> list[float]:
        """Distinct eigenvalues in ``[0, lam_max]``, ascending."""
        vals = [0.0] if self.has_zero else []
        if self.sin_family:
            k = 1
            while (k * math.pi / self.ell) ** 2 <= lam_max:
                vals.append((k * math.pi / self.ell) ** 2)
                k += 1
        for r in self.cos_roots:
            vals.extend(acos_family(r.rho, self.ell, lam_max))
        vals.sort()
        out: list[float] = []
        for v in vals:
            if out and abs(v - out[-1]) <= rel_tol * max(1.0, abs(v)):
                continue
            out.append(v)
        return out

    def to_json(self, lam_max: float | None = None) -> dict:
        d = {
            "has_zero": self.has_zero,
            "sin_family": self.sin_family,
            "cos_roots": [r.to_json() for r in self.cos_roots],
            "anomalies": [r.to_json() for r in self.anomalies],
            "ell": self.ell,
        }
        if lam_max is not None:
            d["lambda_max"] = lam_max
            d["eigenvalues"] = self.values(lam_max)
        return d


def spectrum_families(f: TrigForm, ell: float = 1.0, tol: float = 1e-12) -> SpectrumFamilies:
    has_zero = f.a > 0 or f.Q(1) == 0
    roots = real_roots_in(f.Q, -1, 1, tol)
    cos_roots = [CosRoot(r.value, r.multiplicity, float(r.lo), float(r.hi)) for r in roots]
    anomalies = []
    bound = 1 + sum(abs(x) for x in f.Q.coeffs)
    for r in real_roots_in(f.Q, -bound, bound, tol):
        if r.hi < -1 or r.lo > 1:
            anomalies.append(CosRoot(r.value, r.multiplicity, float(r.lo), float(r.hi)))
    return SpectrumFamilies(has_zero, f.m > 0, cos_roots, anomalies, ell)


def interlaces(mu: list[float], nu: list[float], rel_tol: float = 1e-9) -> bool:
    """Set-level interlacing ``mu_1 <= nu_1 <= mu_2 <= nu_2 <= ...`` of two ascending zero sets.

    Only distinct values are known, so the check is that the lists start
    with ``mu`` and that between two consecutive members of either list
    (ends included) there is a member of the other.
    """

    def close(x, y):
        return abs(x - y) <= rel_tol * max(1.0, abs(x), abs(y))

    def between(a, b, other):
        return any(a <= x <= b or close(x, a) or close(x, b) for x in other)

    if not mu or not nu:
        return True
    if nu[0] < mu[0] and not close(nu[0], mu[0]):
        return False
    top = min(mu[-1], nu[-1])
    for xs, ys in ((mu, nu), (nu, mu)):
        for a, b in zip(xs, xs[1:]):
            if b <= top and not between(a, b, ys):
                return False
    return True
