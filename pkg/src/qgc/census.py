"""Co-spectral classes of graph families and their resolution by attaching one lead.

Two graphs are co-spectral when their canonical free Neumann forms agree.
A class is resolved when the canonical Dirichlet forms obtained by putting
the lead at each vertex orbit never coincide across different members.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .algebra import TrigForm
from .canon import canonical_form, vertex_orbits
from .charfun import phi_dirichlet, phi_neumann
from .enumerate import MAX_CONNECTED_VERTICES, enumerate_connected, enumerate_trees
from .graphs import FIXTURE_NAMES, CombGraph, fixture, fuzzy_ball, is_connected

SCHEMA = "qgc-census-1"
MAX_GRAPH_VERTICES = 6
MAX_TREE_VERTICES = 9
FUZZY_RANGE = (4, 8)


@dataclass
class LeadForm:
    vertex: int
    orbit: list[int]
    phi_D: TrigForm

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "orbit": self.orbit, "phi_D": self.phi_D.to_json()}


@dataclass
class MemberResolution:
    member: str
    forms: list[LeadForm]

    def to_json(self) -> dict:
        return {"member": self.member, "forms": [f.to_json() for f in self.forms]}


@dataclass
class CensusClass:
    phi_N: TrigForm
    members: list[str]
    resolution: list[MemberResolution] | None = None
    verdict: str | None = None
    witness: dict | None = None

    def to_json(self) -> dict:
        return {
            "phi_N": self.phi_N.to_json(),
            "members": self.members,
            "resolution": None if self.resolution is None else [r.to_json() for r in self.resolution],
            "verdict": self.verdict,
            "witness": self.witness,
        }


@dataclass
class CensusReport:
    family: dict
    graphs: dict[str, CombGraph]
    classes: list[CensusClass]
    extra: dict = field(default_factory=dict)

    @property
    def multi_classes(self) -> list[CensusClass]:
        return [c for c in self.classes if len(c.members) > 1]

    @property
    def verdict(self) -> str:
        return "unresolved" if any(c.verdict == "unresolved" for c in self.multi_classes) else "resolved"

    def summary(self) -> str:
        sizes = sorted((len(c.members) for c in self.multi_classes), reverse=True)
        desc = ", ".join(f"{k}" for k in sizes) if sizes else "none"
        return (
            f"{self.family.get('kind')}: {len(self.graphs)} graphs, {len(self.classes)} classes, "
            f"co-spectral class sizes: {desc}; verdict: {self.verdict}"
        )

    def to_json(self) -> dict:
        aliases = _aliases(self.graphs)
        return {
            "schema": SCHEMA,
            "family": self.family,
            "num_graphs": len(self.graphs),
            "num_classes": len(self.classes),
            "verdict": self.verdict,
            "graphs": [
                dict(id=k, **g.to_json(), **({"alias": aliases[k]} if k in aliases else {}))
                for k, g in self.graphs.items()
            ],
            "classes": [c.to_json() for c in self.classes],
            **self.extra,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)


def _aliases(graphs: dict[str, CombGraph]) -> dict[str, str]:
    known = {}
    for name in FIXTURE_NAMES:
        g = fixture(name)
        known.setdefault(canonical_form(g), name)
    out = {}
    for k, g in graphs.items():
        if g.n <= 12:
            name = known.get(canonical_form(g))
            if name:
                out[k] = name
    return out


def _map(fn, items: Sequence, workers: int) -> list:
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))
    return [fn(x) for x in items]


def cospectral_classes(
    family: Sequence[CombGraph] | dict[str, CombGraph],
    workers: int = 1,
    descriptor: dict | None = None,
) -> CensusReport:
    """Group graphs by canonical Neumann form; classes come without resolution tables."""
    graphs = dict(family) if isinstance(family, dict) else {f"g{k}": g for k, g in enumerate(family)}
    for k, g in graphs.items():
        if not is_connected(g):
            raise ValueError(f"family member {k} is not connected")
    ids = list(graphs)
    forms = _map(phi_neumann, [graphs[k] for k in ids], workers)
    groups: dict[tuple, list[str]] = {}
    first: dict[tuple, TrigForm] = {}
    for k, f in zip(ids, forms):
        groups.setdefault(f.key, []).append(k)
        first.setdefault(f.key, f)
    classes = [CensusClass(first[key], groups[key]) for key in sorted(groups, key=_form_order)]
    return CensusReport(descriptor or {"kind": "custom"}, graphs, classes)


def _form_order(key: tuple):
    a, m, q = key
    return (len(q), a, m, q)


def lead_forms_by_orbit(g: CombGraph, vertices: Sequence[int] | None = None) -> list[LeadForm]:
    """Canonical Dirichlet forms with the lead at one representative per vertex orbit.

    ``vertices`` restricts attention to the orbits meeting that set.
    """
    orb = vertex_orbits(g)
    out = []
    for k, rep in enumerate(orb.representatives):
        members = orb.members(k)
        if vertices is not None:
            hit = [v for v in members if v in vertices]
            if not hit:
                continue
        out.append(LeadForm(rep, members, phi_dirichlet(g, [rep])))
    return out


def _resolve_member(args) -> list[LeadForm]:
    g, vertices = args
    return lead_forms_by_orbit(g, vertices)


def resolve_by_lead(
    members: dict[str, CombGraph],
    vertices: dict[str, Sequence[int]] | None = None,
    workers: int = 1,
) -> tuple[list[MemberResolution], str, dict | None]:
    """Resolution table, verdict and (if unresolved) a witness pair.

    The verdict is ``resolved`` iff no canonical Dirichlet form of one member
    equals a form of a different member.
    """
    ids = list(members)
    tasks = [(members[k], None if vertices is None else tuple(vertices[k])) for k in ids]
    tables = _map(_resolve_member, tasks, workers)
    table = [MemberResolution(k, t) for k, t in zip(ids, tables)]
    witness = _find_witness(table)
    return table, ("resolved" if witness is None else "unresolved"), witness


def _find_witness(table: list[MemberResolution]) -> dict | None:
    for a, b in combinations(table, 2):
        for fa in a.forms:
            for fb in b.forms:
                if fa.phi_D.key == fb.phi_D.key:
                    return {
                        "members": [a.member, b.member],
                        "vertices": [fa.vertex, fb.vertex],
                        "phi_D": fa.phi_D.to_json(),
                    }
    return None


def resolve_classes(report: CensusReport, workers: int = 1) -> CensusReport:
    for cls in report.classes:
        if len(cls.members) > 1:
            cls.resolution, cls.verdict, cls.witness = resolve_by_lead(
                {k: report.graphs[k] for k in cls.members}, workers=workers
            )
        else:
            cls.verdict = "resolved"
    return report


# ---------------------------------------------------------------------------
# families


def graph_family(max_vertices: int, min_vertices: int = 2) -> dict[str, CombGraph]:
    """Connected graphs on ``min_vertices..max_vertices`` vertices keyed ``G<n>.<k>``.

    One vertex is excluded: its pencil determinant vanishes identically.
    """
    if not 2 <= min_vertices <= max_vertices <= min(MAX_GRAPH_VERTICES, MAX_CONNECTED_VERTICES):
        raise ValueError(f"graph census supports 2 <= n <= {MAX_GRAPH_VERTICES}")
    return {f"G{n}.{k}": g for n in range(min_vertices, max_vertices + 1) for k, g in enumerate(enumerate_connected(n))}


def tree_family(max_vertices: int, min_vertices: int = 2) -> dict[str, CombGraph]:
    if not 2 <= min_vertices <= max_vertices <= MAX_TREE_VERTICES:
        raise ValueError(f"tree census supports 2 <= n <= {MAX_TREE_VERTICES}")
    return {f"T{n}.{k}": g for n in range(min_vertices, max_vertices + 1) for k, g in enumerate(enumerate_trees(n))}


def graph_census(max_vertices: int = MAX_GRAPH_VERTICES, min_vertices: int = 2, workers: int = 1) -> CensusReport:
    desc = {"kind": "graphs", "min_vertices": min_vertices, "max_vertices": max_vertices}
    rep = cospectral_classes(graph_family(max_vertices, min_vertices), workers, desc)
    return resolve_classes(rep, workers)


def tree_census(max_vertices: int = MAX_TREE_VERTICES, min_vertices: int = 2, workers: int = 1) -> CensusReport:
    desc = {"kind": "trees", "min_vertices": min_vertices, "max_vertices": max_vertices}
    rep = cospectral_classes(tree_family(max_vertices, min_vertices), workers, desc)
    return resolve_classes(rep, workers)


def fuzzy_ball_family(n: int, workers: int = 1) -> CensusReport:
    """All ``FB(r, n-r)`` with ``1 <= r <= n // 2``, resolved through the two off-bulk vertices.

    Bulk attachments are computed and whether they coincide across members is
    reported without a verdict.  The report also compares each off-bulk
    Dirichlet exponent ``E - V + 1`` with the degree-shifted alternative
    ``(n^2 - n - 4)/2 + deg(w)`` and flags any disagreement.
    """
    lo, hi = FUZZY_RANGE
    if not lo <= n <= hi:
        raise ValueError(f"fuzzy ball census supports {lo} <= n <= {hi}, got {n}")
    members = {f"FB({r},{n - r})": fuzzy_ball(r, n - r) for r in range(1, n // 2 + 1)}
    desc = {"kind": "fuzzyballs", "n": n}
    rep = cospectral_classes(members, workers, desc)
    off = {k: (n, n + 1) for k in members}
    bulk = {k: tuple(range(n)) for k in members}
    single = len(rep.classes) == 1
    for cls in rep.classes:
        if len(cls.members) > 1:
            cls.resolution, cls.verdict, cls.witness = resolve_by_lead(
                {k: members[k] for k in cls.members}, {k: off[k] for k in cls.members}, workers
            )
        else:
            cls.verdict = "resolved"
    bulk_table, bulk_verdict, bulk_witness = resolve_by_lead(members, bulk, workers)
    checks = []
    for k, g in members.items():
        degs = g.degrees()
        for w in (n, n + 1):
            thm = g.num_edges - g.n + 1
            alt = (n * n - n - 4) // 2 + degs[w]
            checks.append(
                {
                    "member": k,
                    "vertex": w,
                    "degree": degs[w],
                    "pencil_exponent": thm,
                    "degree_shifted_exponent": alt,
                    "canonical_m": phi_dirichlet(g, [w]).m,
                    "agrees": thm == alt,
                }
            )
    rep.extra = {
        "single_cospectral_class": single,
        "bulk": {
            "resolution": [r.to_json() for r in bulk_table],
            "coincide": bulk_verdict == "unresolved",
            "witness": bulk_witness,
        },
        "exponent_check": {
            "discrepancy_detected": not all(c["agrees"] for c in checks),
            "entries": checks,
        },
    }
    return rep


def off_bulk_forms(report: CensusReport) -> dict[str, list[TrigForm]]:
    out: dict[str, list[TrigForm]] = {}
    for cls in report.classes:
        for res in cls.resolution or []:
            out[res.member] = [f.phi_D for f in res.forms]
    return out
