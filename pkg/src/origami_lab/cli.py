"""Command line front end: ``origami-lab <group> <command> [options]``.

Every command writes its artefacts under ``--out`` together with a JSON
manifest (command line, parameters, seed, version, input and output hashes,
wall time).  ``origami-lab rerun MANIFEST`` replays a manifest and checks
that the outputs hash identically.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from . import __version__
from .errors import OrigamiLabError
from .manifest import ExperimentManifest

# -- argument helpers ----------------------------------------------------------


def _int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def _add_surface(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--staircase", type=int, metavar="G", help="staircase origami of genus G (default 2)")
    g.add_argument("--datum", type=str, metavar="FILE", help='origami datum JSON {"m":..,"sigma":[..],"tau":[..]}')
    g.add_argument("--torus", action="store_true", help="the one-square torus")


def _surface(args, manifest: ExperimentManifest):
    from .surface import OrigamiDatum, staircase, surface_from_datum, torus

    if getattr(args, "torus", False):
        return torus()
    if getattr(args, "datum", None):
        manifest.add_input(args.datum)
        return surface_from_datum(OrigamiDatum.from_dict(json.loads(Path(args.datum).read_text())))
    g = args.staircase if getattr(args, "staircase", None) is not None else 2
    return surface_from_datum(staircase(g))


GRAPH_SPEC_HELP = (
    "graph spec: level:G:K:T | unwarped:G:K:T | margulis:N | mbar:N | gg:N | schreier:N | "
    "selberg:N:K | cycle:N | path:N | complete:N | torusgrid:N | file:PATH (edge list 'u v KIND')"
)


def build_graph(spec: str, manifest: ExperimentManifest | None = None):
    """Resolve a graph spec string (see ``GRAPH_SPEC_HELP``)."""
    from . import classical, graphs
    from .surface import staircase, surface_from_datum
    from .warpgraph import build_level

    kind, _, rest = spec.partition(":")
    if kind == "file":
        if manifest is not None:
            manifest.add_input(rest)
        return read_edgelist(rest)
    nums = [int(x) for x in rest.split(":") if x]
    table = {
        "margulis": lambda n: classical.margulis_M(n),
        "mbar": lambda n: classical.margulis_Mbar(n),
        "gg": lambda n: classical.gabber_galil_L(n),
        "schreier": lambda n: classical.schreier_Mcirc(n),
        "selberg": lambda n, k=1: classical.selberg_cayley(n, k),
        "cycle": graphs.cycle_graph,
        "path": graphs.path_graph,
        "complete": graphs.complete_graph,
        "torusgrid": graphs.torus_grid_graph,
        "level": lambda g, k, t: build_level(surface_from_datum(staircase(g)), k, t),
        "unwarped": lambda g, k, t: build_level(surface_from_datum(staircase(g)), k, t, warped=False),
    }
    if kind not in table:
        raise argparse.ArgumentTypeError(f"unknown graph kind {kind!r}")
    try:
        return table[kind](*nums)
    except TypeError as exc:
        raise argparse.ArgumentTypeError(f"bad parameters for {kind}: {rest!r}") from exc


def read_edgelist(path: str):
    from .graphs import Graph

    labels: dict[str, None] = {}
    pairs = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        u, v = parts[0], parts[1]
        kind = parts[2] if len(parts) > 2 else "Edge"
        labels.setdefault(u)
        labels.setdefault(v)
        pairs.append((u, v, kind))
    return Graph.from_edges(sorted(labels), pairs, name=Path(path).stem)


class Run:
    """Output directory plus manifest bookkeeping for one command."""

    def __init__(self, args, argv: Sequence[str]):
        self.out = Path(args.out)
        self.out.mkdir(parents=True, exist_ok=True)
        params = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "out", "threads")}
        self.manifest = ExperimentManifest(list(argv), params, int(args.seed))
        self.start = time.perf_counter()
        self.name = "-".join(x for x in (args.group, getattr(args, "command", None)) if x)

    def write(self, name: str, text: str) -> Path:
        path = self.out / name
        path.write_text(text)
        self.manifest.add_output(self.out, path)
        return path

    def finish(self) -> Path:
        self.manifest.wall_time = round(time.perf_counter() - self.start, 6)
        path = self.manifest.write(self.out / f"manifest-{self.name}.json")
        print(f"manifest: {path}")
        return path


# -- commands ----------------------------------------------------------------


def cmd_origami_validate(args, run: Run):
    from .surface import surface_summary, validate_datum

    if args.m is not None:
        surf = validate_datum(args.m, _int_list(args.sigma), _int_list(args.tau))
    else:
        surf = _surface(args, run.manifest)
    text = json.dumps(surface_summary(surf), sort_keys=True)
    run.write("surface.json", text + "\n")
    print(text)


def cmd_origami_genus(args, run: Run):
    from .surface import genus

    print(genus(_surface(args, run.manifest)))


def cmd_origami_grid(args, run: Run):
    from .surface import grid_csv, grid_points

    pts = grid_points(_surface(args, run.manifest), args.n)
    run.write(f"grid-n{args.n}.csv", grid_csv(pts))
    print(f"{len(pts)} grid points")


def cmd_dynamics_orbit(args, run: Run):
    from .dynamics import orbit, orbit_csv
    from .surface import parse_point

    surf = _surface(args, run.manifest)
    p = surf.canonical(*parse_point(args.point))
    pts = orbit(surf, args.k, p, args.max_len)
    run.write("orbit.csv", orbit_csv(pts))
    print(f"{len(pts)} points in orbit")


def cmd_dynamics_fixed(args, run: Run):
    from .dynamics import grid_apply
    from .surface import from_triple, grid_triples

    surf = _surface(args, run.manifest)
    rows = ["letter,square,xnum,xden,ynum,yden"]
    for c in args.letters:
        for q in grid_triples(surf, args.n):
            if grid_apply(surf, c, args.k, args.n, q) == q:
                p = from_triple(q, args.n)
                rows.append(f"{c},{p.square},{p.x.numerator},{p.x.denominator},{p.y.numerator},{p.y.denominator}")
    run.write("fixed.csv", "\n".join(rows) + "\n")
    print(f"{len(rows) - 1} fixed grid points")


def cmd_level_build(args, run: Run):
    from .graphs import to_dot, to_edgelist
    from .warpgraph import build_level, vertex_label

    level = build_level(_surface(args, run.manifest), args.k, args.t, warped=not args.unwarped)
    if args.format == "dot":
        path = run.write(f"level-t{args.t}.dot", to_dot(level, vertex_label))
    else:
        path = run.write(f"level-t{args.t}.edges", to_edgelist(level, vertex_label))
    counts = level.kind_counts()
    print(f"{level.n} vertices, {len(level.edges)} edges {dict(sorted(counts.items()))} -> {path}")


def cmd_level_dist(args, run: Run):
    from .surface import parse_point
    from .warpgraph import build_level, dg_wordball

    surf = _surface(args, run.manifest)
    u, v = surf.canonical(*parse_point(args.u)), surf.canonical(*parse_point(args.v))
    level = build_level(surf, args.k, args.t)
    d = level.distance(u, v)
    line = f"{u},{v},{d}"
    header = "u,v,warped_distance"
    if args.R is not None:
        header += ",dg_wordball"
        line += f",{dg_wordball(surf, args.k, args.t, u, v, args.R)}"
    run.write("distance.csv", header + "\n" + line + "\n")
    print(d)


def cmd_level_fibers(args, run: Run):
    from .surface import parse_point
    from .warpgraph import fiber_divergence

    surf = _surface(args, run.manifest)
    pts = [surf.canonical(*parse_point(p)) for p in args.points]
    table = fiber_divergence(surf, args.k, pts, _int_list(args.levels))
    run.write("fibers.csv", table.to_csv())
    for pair in table.distances:
        print(f"{pair}: {table.distances[pair]} strictly_increasing={table.strictly_increasing(pair)}")


def _classical(builder_name: str):
    def cmd(args, run: Run):
        from . import classical
        from .graphs import to_edgelist

        builders = {
            "margulis": classical.margulis_M,
            "mbar": classical.margulis_Mbar,
            "gg": classical.gabber_galil_L,
            "schreier": classical.schreier_Mcirc,
        }
        if builder_name == "selberg":
            g = classical.selberg_cayley(args.n, args.k)
        else:
            g = builders[builder_name](args.n)
        run.write(f"{builder_name}-n{args.n}.edges", to_edgelist(g))
        print(f"{g.name}: {g.n} vertices, {len(g.edges)} edges, max degree {g.max_degree()}")

    return cmd


def cmd_spectral_cheeger(args, run: Run):
    from .spectral import cheeger_exact, cheeger_sandwich

    g = build_graph(args.graph, run.manifest)
    res = cheeger_exact(g, max_vertices=args.max_vertices)
    row = f"{args.graph},{g.n},{res.h.numerator}/{res.h.denominator}"
    header = "graph,vertices,h"
    if args.sandwich:
        ok, rep = cheeger_sandwich(g, max_vertices=args.max_vertices)
        header += ",lower,upper,ok"
        row += f",{rep.lower:.10e},{rep.upper:.10e},{int(ok)}"
    run.write("cheeger.csv", header + "\n" + row + "\n")
    print(f"h = {res.h}")


def cmd_spectral_lambda2(args, run: Run):
    from .spectral import lambda2

    g = build_graph(args.graph, run.manifest)
    rep = lambda2(g, tol=args.tol)
    run.write("lambda2.json", json.dumps(rep.as_dict(), sort_keys=True) + "\n")
    print(f"{rep.lambda2:.10e}")


def scan_builders(family: str, genus: int, k: int):
    """Level builder and control builder for a scan family (picklable partials)."""
    from functools import partial

    from . import classical
    from .surface import staircase, surface_from_datum
    from .warpgraph import build_level

    if family == "staircase":
        surf = surface_from_datum(staircase(genus))
        return partial(build_level, surf, k), partial(build_level, surf, k, warped=False)
    if family == "schreier":
        return classical.schreier_Mcirc, None
    if family == "selberg":
        return partial(_selberg, k=k), None
    raise OrigamiLabError(f"unknown scan family {family!r}")


def _selberg(n: int, k: int):
    from .classical import selberg_cayley

    return selberg_cayley(n, k)


def cmd_spectral_scan(args, run: Run):
    from .plot import line_plot
    from .spectral import expansion_scan, scan_csv

    builder, control = scan_builders(args.family, args.genus, args.k)
    if args.no_control:
        control = None
    rows = expansion_scan(builder, _int_list(args.levels), control, threads=args.threads)
    run.write("scan.csv", scan_csv(rows))
    series = {"lambda2": ([r.level for r in rows], [r.lambda2 for r in rows])}
    if control is not None:
        series["control"] = ([r.level for r in rows], [r.control_lambda2 for r in rows])
    run.write("scan.svg", line_plot(series, title=f"{args.family} spectral gap", xlabel="level", ylabel="lambda2", logy=True))
    for r in rows:
        print(r.csv())


def cmd_spectral_z2check(args, run: Run):
    from .spectral import z2_expansion_check, z2_random_check

    if args.set:
        run.manifest.add_input(args.set)
        pts = json.loads(Path(args.set).read_text())
        c = z2_expansion_check([tuple(p) for p in pts], args.k)
        rows = [f"0,{c.size},{c.image_size},{int(c.ok)}"]
    else:
        rows = z2_random_check(args.seed, args.random, args.k, args.max_size, args.bound, threads=args.threads)
    run.write("z2check.csv", "index,size,image_size,ok\n" + "".join(r + "\n" for r in rows))
    passed = sum(r.endswith(",1") for r in rows)
    print(f"{passed}/{len(rows)} pass")
    if passed != len(rows):
        return 1


def _complex(args, run: Run):
    from .pi1 import build_scale_complex

    g = build_graph(args.graph, run.manifest)
    base = g.base_vertex() if hasattr(g, "base_vertex") else 0
    return g, build_scale_complex(g, args.r, base=base)


def cmd_pi1_complex(args, run: Run):
    _, cx = _complex(args, run)
    text = json.dumps(cx.summary(), sort_keys=True)
    run.write("complex.json", text + "\n")
    print(text)


def cmd_pi1_h1(args, run: Run):
    from .pi1 import h1

    _, cx = _complex(args, run)
    res = h1(cx)
    run.write("h1.csv", "graph,r,betti1,torsion\n" + f"{args.graph},{args.r},{res.betti1},{' '.join(map(str, res.torsion))}\n")
    print(f"betti1 = {res.betti1}, torsion = {res.torsion}")


def cmd_pi1_trivialize(args, run: Run):
    from .certify import check_presentation_certificate
    from .pi1 import pi1_presentation, try_trivialize

    _, cx = _complex(args, run)
    pres = pi1_presentation(cx)
    res = try_trivialize(pres, budget=args.budget)
    verdict = check_presentation_certificate(pres, res) if res.trivial else None
    run.write("presentation.json", pres.to_json() + "\n")
    run.write("certificate.json", res.to_json() + "\n")
    print(f"{res.status} ({pres.n_generators} generators, {len(pres.relators)} relators)")
    if verdict is not None:
        print(f"replay: {'ok' if verdict.ok else 'FAILED ' + verdict.reason}")
        if not verdict.ok:
            return 1


def cmd_pi1_contract(args, run: Run):
    from .certify import replay_homotopy_json
    from .pi1 import contract_loop
    from .surface import parse_point

    g = build_graph(args.graph, run.manifest)
    if hasattr(g, "surface"):
        loop = [g.surface.canonical(*parse_point(x)) for x in args.loop.split(";")]
    else:
        by_name = {str(lab): lab for lab in g.labels}
        loop = [by_name[x] if x in by_name else x for x in args.loop.split(";")]
    res = contract_loop(g, args.r, loop, budget=args.budget)
    text = res.to_json(g.labels)
    run.write("homotopy.json", text + "\n")
    print(f"{res.status} ({len(res.trace)} steps)")
    if res.status == "Contracted":
        v = replay_homotopy_json(g, args.r, loop, text)
        print(f"replay: {'ok' if v.ok else 'FAILED ' + v.reason}")
        if not v.ok:
            return 1


def cmd_export(args, run: Run):
    from .graphs import to_dot, to_edgelist
    from .warpgraph import coarse_union, vertex_label

    graphs = [build_graph(s, run.manifest) for s in args.graph]
    if len(graphs) == 1:
        g = graphs[0]
        text = to_dot(g, vertex_label) if args.format == "dot" else to_edgelist(g, vertex_label)
    else:
        if args.format == "dot":
            raise OrigamiLabError("coarse unions export as edge lists only")
        text = coarse_union(graphs, gap_rule=args.gap_rule).to_edgelist()
    path = run.write(f"export.{'dot' if args.format == 'dot' else 'edges'}", text)
    print(path)


def cmd_rerun(args, argv_outer) -> int:
    """Replay a manifest into a fresh directory and compare output hashes."""
    man = ExperimentManifest.load(args.manifest)
    argv = list(man.command)
    # replace --out / --threads of the recorded command
    cleaned = []
    skip = False
    for i, a in enumerate(argv):
        if skip:
            skip = False
            continue
        if a in ("--out", "--threads"):
            skip = True
            continue
        if a.startswith("--out=") or a.startswith("--threads="):
            continue
        cleaned.append(a)
    new = cleaned + ["--out", args.out, "--threads", str(args.threads)]
    code = main(new)
    if code:
        return code
    fresh = {}
    for name in man.outputs:
        from .manifest import sha256_file

        p = Path(args.out) / name
        fresh[name] = sha256_file(p) if p.exists() else None
    diff = sorted(n for n in man.outputs if fresh[n] != man.outputs[n])
    for n in diff:
        print(f"differs: {n}")
    print("reproduced" if not diff else f"{len(diff)} outputs differ")
    return 0 if not diff else 1


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="origami-lab",
        description="Warped cones over square-tiled surfaces: level graphs, expansion certificates, discrete pi_1.",
    )
    top.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default="out", help="output directory (default: out)")
    common.add_argument("--seed", type=int, default=0, help="64-bit seed for the Philox counter-based generator")
    common.add_argument("--threads", type=int, default=1, help="worker processes; outputs do not depend on it")
    groups = top.add_subparsers(dest="group", required=True, metavar="GROUP")

    def group(name, help_):
        p = groups.add_parser(name, help=help_, description=help_)
        return p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def cmd(sub, name, help_, func):
        p = sub.add_parser(name, help=help_, description=help_, parents=[common])
        p.set_defaults(func=func)
        return p

    o = group("origami", "Origami data (square-tiled surfaces given by permutations sigma, tau)")
    p = cmd(o, "validate", "Validate an origami datum (m, sigma, tau): transitivity, corner classes, genus", cmd_origami_validate)
    _add_surface(p)
    p.add_argument("--m", type=int)
    p.add_argument("--sigma", help="image array, comma separated (0-based)")
    p.add_argument("--tau", help="image array, comma separated (0-based)")
    p = cmd(o, "genus", "Genus of an origami surface from its Euler characteristic (e.g. staircase Z_g)", cmd_origami_genus)
    _add_surface(p)
    p = cmd(o, "grid", "Canonical points of the surface with coordinates in (1/n)Z, as CSV", cmd_origami_grid)
    _add_surface(p)
    p.add_argument("--n", type=int, required=True)

    d = group("dynamics", "Lifted action of the shears a_k, b_k on an origami surface")
    p = cmd(d, "orbit", "Orbit of a point under the lifted shear action of <a_k, b_k>", cmd_dynamics_orbit)
    _add_surface(p)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--point", required=True, help="sq:xnum/xden:ynum/yden")
    p.add_argument("--max-len", type=int, default=None)
    p = cmd(d, "fixed", "Grid points fixed by the generators a_k, b_k (and inverses)", cmd_dynamics_fixed)
    _add_surface(p)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--letters", default="aAbB")

    lv = group("level", "Level graphs of the warped cone over an origami (the O-graph at scale t)")
    p = cmd(lv, "build", "Build the warped-cone level graph at scale t with Metric / Warp(a) / Warp(b) edges", cmd_level_build)
    _add_surface(p)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--unwarped", action="store_true", help="metric edges only (control)")
    p.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    p = cmd(lv, "dist", "Warped-cone distance between two points at level t (optionally the word-ball formula D_G)", cmd_level_dist)
    _add_surface(p)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--R", type=int, default=None, help="word-ball radius for the D_G formula")
    p = cmd(lv, "fibers", "Warped distances within one covering-map fibre across levels (fibre divergence)", cmd_level_fibers)
    _add_surface(p)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--levels", default="4,8,16,32")
    p.add_argument("--points", nargs="+", required=True)

    c = group("classical", "Classical expander families on Z_n^2 and SL2(Z_n)")
    for name, help_ in (
        ("margulis", "Margulis expander M_n: bipartite graph of 1, T1..T4 on Z_n^2"),
        ("mbar", "Margulis variant Mbar_n with T3 replaced by T3bar"),
        ("gg", "Gabber-Galil expander L_n"),
        ("schreier", "Schreier graph M°_n of Z_n^2 under {1, T1..T4}"),
        ("selberg", "Selberg-type Cayley graph of <a_k, b_k> in SL2(Z_n)"),
    ):
        p = cmd(c, name, help_, _classical(name))
        p.add_argument("--n", type=int, required=True)
        if name == "selberg":
            p.add_argument("--k", type=int, default=1)

    s = group("spectral", "Expansion certificates: Cheeger constant, spectral gap, Z^2 expansion")
    p = cmd(s, "cheeger", "Exact Cheeger constant h by subset enumeration (optionally the Cheeger sandwich)", cmd_spectral_cheeger)
    p.add_argument("--graph", required=True, help=GRAPH_SPEC_HELP)
    p.add_argument("--max-vertices", type=int, default=22)
    p.add_argument("--sandwich", action="store_true")
    p = cmd(s, "lambda2", "Second eigenvalue of the normalised Laplacian (spectral gap)", cmd_spectral_lambda2)
    p.add_argument("--graph", required=True, help=GRAPH_SPEC_HELP)
    p.add_argument("--tol", type=float, default=1e-9)
    p = cmd(s, "scan", "Spectral gap across levels of a family (warped staircase vs unwarped control)", cmd_spectral_scan)
    p.add_argument("--family", choices=("staircase", "schreier", "selberg"), default="staircase")
    p.add_argument("--genus", type=int, default=2)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--levels", default="4,8,16,32")
    p.add_argument("--no-control", action="store_true")
    p = cmd(s, "z2check", "Expansion of Z^2 under the shears a_k, b_k: |union of images| >= 2|A|", cmd_spectral_z2check)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--random", type=int, default=1000, help="number of random finite sets")
    p.add_argument("--set", help="JSON list of [x, y] points instead of random sets")
    p.add_argument("--max-size", type=int, default=64)
    p.add_argument("--bound", type=int, default=1000)

    q = group("pi1", "Discrete fundamental group pi_{1,r} at scale r")
    for name, help_, func in (
        ("complex", "Triangle-and-square filled r-scale complex (r-paths and r-loops)", cmd_pi1_complex),
        ("h1", "First homology of the r-scale complex (Betti number and torsion)", cmd_pi1_h1),
        ("trivialize", "Spanning-tree presentation of pi_{1,r} and a Tietze triviality certificate", cmd_pi1_trivialize),
        ("contract", "Search for an r-homotopy contracting an r-loop at the base point", cmd_pi1_contract),
    ):
        p = cmd(q, name, help_, func)
        p.add_argument("--graph", required=True, help=GRAPH_SPEC_HELP)
        p.add_argument("--r", type=int, required=True)
        if name == "trivialize":
            p.add_argument("--budget", type=int, default=10_000_000)
        if name == "contract":
            p.add_argument("--loop", required=True, help="points separated by ';' (level graphs: sq:x:y)")
            p.add_argument("--budget", type=int, default=20_000)

    p = groups.add_parser("export", help="Export graphs or a coarse disjoint union as edge list / DOT",
                          description="Export graphs or a coarse disjoint union as edge list / DOT", parents=[common])
    p.set_defaults(func=cmd_export)
    p.add_argument("--graph", action="append", required=True, help=GRAPH_SPEC_HELP)
    p.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    p.add_argument("--gap-rule", choices=("sum", "diam-sum"), default="diam-sum")

    p = groups.add_parser("rerun", help="Replay an experiment manifest and compare output hashes",
                          description="Replay an experiment manifest and compare output hashes")
    p.add_argument("manifest")
    p.add_argument("--out", default="rerun")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=None)
    return top


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.group == "rerun":
        try:
            return cmd_rerun(args, argv)
        except (OrigamiLabError, ValueError, OSError) as exc:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
            return 1
    try:
        run = Run(args, argv)
        code = args.func(args, run)
        run.finish()
        return int(code or 0)
    except argparse.ArgumentTypeError as exc:
        parser.print_usage(sys.stderr)
        print(f"origami-lab: error: {exc}", file=sys.stderr)
        return 2
    except OrigamiLabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
