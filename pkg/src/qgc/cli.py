"""``qgc`` command line: characteristic functions, census, scattering and potential checks.

Exit codes: 0 success, 2 invalid input, 3 oracle mismatch (with ``--oracle``).
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import census as census_mod
from .charfun import char_matrix_oracle, disc_char_poly, phi_form, spectrum_families
from .graphs import FIXTURE_NAMES, CombGraph, complete_graph, fixture, is_connected
from .scattering import jost_form, lead_forms, resonances, s_grid
from .slnumeric import asymptotic_check, load_potential_csv, phase_locked_lambdas

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_ORACLE = 3


class InputError(Exception):
    pass


class OracleMismatch(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    graph: CombGraph | None
    graph_label: str | None
    vstar: tuple[int, ...]
    ell: float
    oracle: bool
    output: str | None
    threads: int


# ---------------------------------------------------------------------------
# helpers


def _load_graph(args) -> tuple[CombGraph, str]:
    if bool(getattr(args, "fixture", None)) == bool(getattr(args, "graph", None)):
        raise InputError("give exactly one of --fixture or --graph")
    if args.fixture:
        if args.fixture not in FIXTURE_NAMES:
            raise InputError(f"unknown fixture {args.fixture!r}; choose from {', '.join(FIXTURE_NAMES)}")
        return fixture(args.fixture), args.fixture
    try:
        g = CombGraph.from_json(Path(args.graph).read_text())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read graph {args.graph}: {exc}") from exc
    return g, args.graph


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return args.threads
    env = os.environ.get("QGC_THREADS")
    if env:
        try:
            k = int(env)
        except ValueError:
            raise InputError(f"QGC_THREADS must be an integer, got {env!r}") from None
        if k < 1:
            raise InputError("QGC_THREADS must be positive")
        return k
    return 1


def _config(args, with_graph: bool = True) -> RunConfig:
    g, label = _load_graph(args) if with_graph else (None, None)
    if g is not None and not is_connected(g):
        raise InputError("graph must be connected")
    vstar: tuple[int, ...] = ()
    if getattr(args, "lead", None) is not None:
        vstar = (args.lead,)
    elif getattr(args, "vstar", None):
        vstar = tuple(sorted(set(args.vstar)))
    if g is not None:
        for v in vstar:
            if not 0 <= v < g.n:
                raise InputError(f"vertex {v} out of range for a graph on {g.n} vertices")
    ell = getattr(args, "ell", 1.0)
    if not ell > 0:
        raise InputError("--ell must be positive")
    return RunConfig(args.command, g, label, vstar, ell, args.oracle, args.output, _threads(args))


def _check_oracle(g: CombGraph, vstars) -> list[dict]:
    """Compare pencil and secular-determinant forms; raise on mismatch."""
    log = []
    for vs in vstars:
        try:
            want = char_matrix_oracle(g, vs)
        except ValueError as exc:
            raise InputError(f"oracle unavailable: {exc}") from exc
        got = phi_form(g, vs)
        ok = want.key == got.key
        log.append({"vstar": list(vs), "agrees": ok})
        if not ok:
            raise OracleMismatch(f"oracle mismatch for vstar={list(vs)}: {want.describe()} vs {got.describe()}")
    return log


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _fmt(x: float) -> str:
    return "%.17g" % x


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for r in rows:
        buf.write(",".join(v if isinstance(v, str) else (str(v) if isinstance(v, (int, np.integer)) else _fmt(v)) for v in r))
        buf.write("\n")
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands


def cmd_charfun(args) -> int:
    cfg = _config(args)
    if args.problem == "dirichlet" and not cfg.vstar:
        raise InputError("the Dirichlet problem needs --vstar")
    vs = cfg.vstar if args.problem == "dirichlet" else ()
    try:
        p = disc_char_poly(cfg.graph, vs)
        form = phi_form(cfg.graph, vs)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    fam = spectrum_families(form, cfg.ell)
    out = {
        "graph": cfg.graph.to_json(),
        "source": cfg.graph_label,
        "problem": args.problem,
        "vstar": list(vs),
        "ell": cfg.ell,
        "P": p.to_json(),
        ("phi_N" if not vs else "phi_D"): form.to_json(),
        "spectrum": fam.to_json(args.lambda_max),
    }
    if cfg.oracle:
        out["oracle"] = _check_oracle(cfg.graph, [vs])
    _emit(json.dumps(out, indent=2) + "\n", cfg.output)
    return EXIT_OK


def cmd_census(args) -> int:
    cfg = _config(args, with_graph=False)
    try:
        if args.family == "graphs":
            rep = census_mod.graph_census(args.max_vertices or census_mod.MAX_GRAPH_VERTICES, workers=cfg.threads)
        elif args.family == "trees":
            rep = census_mod.tree_census(args.max_vertices or census_mod.MAX_TREE_VERTICES, workers=cfg.threads)
        else:
            if args.n is None:
                raise InputError("--family fuzzyballs needs --n")
            rep = census_mod.fuzzy_ball_family(args.n, workers=cfg.threads)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    doc = rep.to_json()
    if cfg.oracle:
        checks = []
        for cls in rep.multi_classes:
            for res in cls.resolution or []:
                g = rep.graphs[res.member]
                vss = [()] + [(f.vertex,) for f in res.forms]
                checks.append({"member": res.member, "checks": _check_oracle(g, vss)})
        doc["oracle"] = checks
    text = json.dumps(doc, indent=2) + "\n"
    if cfg.output:
        Path(cfg.output).write_text(text)
        print(rep.summary())
    else:
        sys.stdout.write(text)
        print(rep.summary(), file=sys.stderr)
    return EXIT_OK


def _lead_setup(args):
    cfg = _config(args)
    if not cfg.vstar:
        raise InputError("--lead is required")
    if cfg.oracle:
        _check_oracle(cfg.graph, [(), cfg.vstar])
    phiN, phiD = lead_forms(cfg.graph, cfg.vstar[0])
    return cfg, phiN, phiD


def cmd_scatter(args) -> int:
    cfg, phiN, phiD = _lead_setup(args)
    if not 0 < args.lmin <= args.lmax or args.samples < 1:
        raise InputError("need 0 < --lmin <= --lmax and --samples >= 1")
    if args.samples == 1:
        lams = np.array([args.lmin])
    elif args.log:
        lams = np.geomspace(args.lmin, args.lmax, args.samples)
    else:
        lams = np.linspace(args.lmin, args.lmax, args.samples)
    S = s_grid(phiN, phiD, cfg.ell, lams)
    rows = [(float(x), float(v.real), float(v.imag), float(abs(v))) for x, v in zip(lams, S)]
    _emit(_csv(["lambda", "re_S", "im_S", "abs_S"], rows), cfg.output)
    return EXIT_OK


def cmd_resonances(args) -> int:
    cfg, phiN, phiD = _lead_setup(args)
    res = resonances(jost_form(phiN, phiD, cfg.ell), tol=args.tol)
    _emit(_csv(["re_omega", "im_omega", "multiplicity"], res.rows()), cfg.output)
    return EXIT_OK


def cmd_sl(args) -> int:
    has_graph = bool(args.fixture or args.graph)
    cfg = _config(args, with_graph=has_graph)
    g = cfg.graph if cfg.graph is not None else complete_graph(2)
    lead = cfg.vstar[0] if cfg.vstar else 0
    if not 0 <= lead < g.n:
        raise InputError(f"lead {lead} out of range")
    try:
        q = load_potential_csv(args.potential)
    except ValueError as exc:
        raise InputError(f"malformed potential file: {exc}") from exc
    if not q.symmetric:
        raise InputError("potential must be symmetric about the edge midpoint")
    if cfg.oracle:
        _check_oracle(g, [(), (lead,)])
    if not 10 <= args.lmin < args.lmax:
        raise InputError("need 10 <= --lmin < --lmax")
    lams = phase_locked_lambdas(args.lmin, args.lmax, args.samples, args.phase, q.ell)
    if len(lams) < 2:
        raise InputError("lambda range too narrow")
    rep = asymptotic_check(q, lams, g, lead, steps=args.steps)
    doc = {"graph": g.to_json(), "lead": lead, "ell": q.ell, "phase": args.phase, **rep.to_json()}
    _emit(json.dumps(doc, indent=2) + "\n", cfg.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _graph_args(p) -> None:
    p.add_argument("--fixture", choices=FIXTURE_NAMES, help="built-in graph")
    p.add_argument("--graph", help='JSON file {"n": N, "edges": [[u, v], ...]}')
    p.add_argument("--ell", type=float, default=1.0, help="edge length (default 1)")


def _common(p) -> None:
    p.add_argument("--oracle", action="store_true", help="cross-check against the secular determinant")
    p.add_argument("--output", "-o", help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qgc", description="Exact spectral and scattering data of equilateral quantum graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charfun", help="characteristic function and spectrum families")
    _graph_args(p)
    p.add_argument("--problem", choices=("neumann", "dirichlet"), default="neumann")
    p.add_argument("--vstar", type=int, nargs="+", help="Dirichlet vertices")
    p.add_argument("--lambda-max", type=float, default=100.0)
    _common(p)
    p.set_defaults(func=cmd_charfun)

    p = sub.add_parser("census", help="co-spectral classes and lead resolution")
    p.add_argument("--family", choices=("graphs", "trees", "fuzzyballs"), required=True)
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--n", type=int, help="fuzzy ball bulk size")
    p.add_argument("--threads", type=int, help="worker processes (else QGC_THREADS, else 1)")
    _common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("scatter", help="S-function on a lambda grid (CSV)")
    _graph_args(p)
    p.add_argument("--lead", type=int, required=True)
    p.add_argument("--lmin", type=float, default=0.1)
    p.add_argument("--lmax", type=float, default=100.0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--log", action="store_true", help="geometric grid")
    _common(p)
    p.set_defaults(func=cmd_scatter)

    p = sub.add_parser("resonances", help="poles of S in the principal strip (CSV)")
    _graph_args(p)
    p.add_argument("--lead", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    _common(p)
    p.set_defaults(func=cmd_resonances)

    p = sub.add_parser("sl", help="asymptotic decay report for an edge potential")
    p.add_argument("--potential", required=True, help="CSV of x,q(x) on a uniform grid from 0")
    _graph_args(p)
    p.add_argument("--lead", type=int)
    p.add_argument("--lmin", type=float, default=1e2)
    p.add_argument("--lmax", type=float, default=1e6)
    p.add_argument("--samples", type=int, default=9)
    p.add_argument("--phase", type=float, default=1.0, help="sqrt(lam)*ell modulo 2 pi of the samples")
    p.add_argument("--steps", type=int, help="fixed RK4 steps (default scales with sqrt(lam))")
    _common(p)
    p.set_defaults(func=cmd_sl)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"qgc: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OracleMismatch as exc:
        print(f"qgc: oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_ORACLE


if __name__ == "__main__":
    sys.exit(main())
