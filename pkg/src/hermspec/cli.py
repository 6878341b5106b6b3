"""Command-line interface: spectra, verification, generation, searches.

Exit codes: 0 success (all checks pass), 2 parse/usage error, 3 numerical
failure, 4 a verified bound was violated, 5 enumeration budget exceeded.
Given the same arguments (including --seed), stdout is byte-identical
between runs; manifest files additionally carry a runtime field.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from .analysis import (
    best_independence_upper_bound,
    bipartite_symmetry_check,
    check_interlacing,
    degree_bound_report,
    eta_counts,
    radius_bound_report,
)
from .digraph import (
    Digraph,
    EdgeListError,
    cartesian_product,
    circulant,
    digraph_digest,
    directed_cycle,
    load_edge_list,
    parse_edge_list,
    random_bipartite_digraph,
    random_digraph,
    random_mixed_graph,
    save_edge_list,
    serialize_edge_list,
)
from .eigen import CharPoly, JacobiConvergenceError, Spectrum, char_poly, spectrum
from .hermitian import DEFAULT_ALPHA_GRID, OMEGA, AlphaParam, parse_alpha
from .oracle import MIS_BUDGET, BudgetExceeded, charpoly_search, max_independent_set

SCHEMA = "hermspec/1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_VIOLATED = 4
EXIT_BUDGET = 5


@dataclass(frozen=True)
class RunConfig:
    """Everything a subcommand needs; seed fully determines any sampling."""

    command: str
    inputs: tuple = ()
    alpha: AlphaParam | None = None
    alpha_grid: tuple = DEFAULT_ALPHA_GRID
    fmt: str = "text"
    seed: int = 0
    tol: float | None = None
    output: str | None = None
    options: dict = field(default_factory=dict)


def _fmt12(x: float) -> str:
    return f"{float(x) + 0.0:.12g}"


def _emit(text: str, output: str | None) -> None:
    if output and output != "-":
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_alpha_grid(text: str) -> tuple:
    grid = tuple(parse_alpha(part) for part in text.split(",") if part.strip())
    if not grid:
        raise ValueError("empty alpha grid")
    return grid


# --- spectrum ---


def cmd_spectrum(config: RunConfig) -> int:
    g = load_edge_list(config.inputs[0])
    alpha = config.alpha if config.alpha is not None else OMEGA
    sp = spectrum(g, alpha)
    cp = char_poly(g, alpha) if config.options.get("charpoly") else None

    if config.fmt == "text":
        lines = [" ".join(_fmt12(v) for v in sp.values)]
        if cp is not None:
            lines.append("charpoly " + " ".join(_fmt12(c) for c in cp.coeffs))
        _emit("\n".join(lines) + "\n", config.output)
    elif config.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["kind", "index", "value"])
        for j, v in enumerate(sp.values):
            writer.writerow(["eigenvalue", j, repr(float(v))])
        if cp is not None:
            for k, c in enumerate(cp.coeffs):
                writer.writerow(["coeff", k, repr(float(c))])
        _emit(buf.getvalue(), config.output)
    else:
        doc = {
            "schema": SCHEMA,
            "command": "spectrum",
            "input": str(config.inputs[0]),
            "digest": digraph_digest(g),
            "alpha": alpha.label(),
            "n": g.n,
            "values": list(sp.values),
            "zero_tol": sp.zero_tol,
        }
        if cp is not None:
            doc["charpoly"] = list(cp.coeffs)
        _emit(json.dumps(doc, indent=2) + "\n", config.output)
    return EXIT_OK


# --- verify ---


def _verify_checks(g: Digraph, grid: tuple, tol_override: float | None) -> list:
    checks = []

    rep = degree_bound_report(g)
    checks.append({
        "name": "degree_bound",
        "alpha": "omega",
        "holds": rep.holds,
        "detail": rep.to_json_dict(),
    })

    for al in grid:
        rrep = radius_bound_report(g, al)
        checks.append({
            "name": "radius_bound",
            "alpha": al.label(),
            "holds": rrep.holds,
            "detail": rrep.to_json_dict(),
        })

    if g.n <= MIS_BUDGET:
        k, witness = max_independent_set(g)
        for al in grid:
            counts = eta_counts(spectrum(g, al))
            holds = counts.eta_plus >= k and counts.eta_minus >= k
            checks.append({
                "name": "independence_bound",
                "alpha": al.label(),
                "holds": holds,
                "detail": {
                    "k": k,
                    "witness": list(witness),
                    "eta_plus": counts.eta_plus,
                    "eta_minus": counts.eta_minus,
                },
            })
    else:
        checks.append({
            "name": "independence_bound",
            "alpha": None,
            "holds": None,
            "detail": {"skipped": f"n > {MIS_BUDGET}"},
        })

    part = g.bipartition()
    if part is not None:
        for al in grid:
            ok = bipartite_symmetry_check(g, al)
            cp = char_poly(g, al)
            scale = max(1.0, max(abs(c) for c in cp.coeffs))
            odd_ok = all(abs(c) <= 1e-8 * scale for c in cp.coeffs[1::2])
            checks.append({
                "name": "bipartite_symmetry",
                "alpha": al.label(),
                "holds": bool(ok and odd_ok),
                "detail": {
                    "eigvector_and_spectrum": bool(ok),
                    "odd_coefficients_vanish": bool(odd_ok),
                    "sides": "".join(part.side),
                },
            })
    else:
        checks.append({
            "name": "bipartite_symmetry",
            "alpha": None,
            "holds": None,
            "detail": {"skipped": "not bipartite"},
        })

    for al in grid:
        parent = spectrum(g, al)
        violations = []
        for v in range(g.n):
            rest = [u for u in range(g.n) if u != v]
            sub_g = g.induced_subdigraph(rest)
            sub = spectrum(sub_g, al)
            ok = (
                check_interlacing(parent, sub)
                if tol_override is None
                else _interlace_with_tol(parent, sub, tol_override)
            )
            if not ok:
                violations.append({
                    "deleted_vertex": v,
                    "sub_spectrum": list(sub.values),
                    "sub_edge_list": serialize_edge_list(sub_g),
                })
        checks.append({
            "name": "interlacing_deletions",
            "alpha": al.label(),
            "holds": not violations,
            "detail": {"deletions": g.n, "violations": violations},
        })

    return checks


def _interlace_with_tol(parent: Spectrum, sub: Spectrum, tol: float) -> bool:
    from .analysis import interlacing_margin

    return interlacing_margin(parent.values, sub.values) >= -tol


def cmd_verify(config: RunConfig) -> int:
    g = load_edge_list(config.inputs[0])
    checks = _verify_checks(g, config.alpha_grid, config.tol)
    all_hold = all(c["holds"] is not False for c in checks)
    s, t = g.arc_edge_counts()
    doc = {
        "schema": SCHEMA,
        "command": "verify",
        "input": str(config.inputs[0]),
        "digest": digraph_digest(g),
        "n": g.n,
        "s": s,
        "t": t,
        "alpha_grid": [al.label() for al in config.alpha_grid],
        "checks": checks,
        "all_hold": all_hold,
    }
    if not all_hold:
        doc["counterexample"] = serialize_edge_list(g)

    if config.fmt == "text":
        lines = []
        for c in checks:
            mark = "PASS" if c["holds"] else ("SKIP" if c["holds"] is None else "FAIL")
            al = f" alpha={c['alpha']}" if c["alpha"] else ""
            lines.append(f"{mark} {c['name']}{al}")
        lines.append("all_hold " + ("true" if all_hold else "false"))
        _emit("\n".join(lines) + "\n", config.output)
    elif config.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["check", "alpha", "holds"])
        for c in checks:
            holds = "" if c["holds"] is None else str(bool(c["holds"])).lower()
            writer.writerow([c["name"], c["alpha"] or "", holds])
        _emit(buf.getvalue(), config.output)
    else:
        _emit(json.dumps(doc, indent=2) + "\n", config.output)
    return EXIT_OK if all_hold else EXIT_VIOLATED


# --- generate ---


def cmd_generate(config: RunConfig) -> int:
    kind = config.options["generator"]
    params = config.options["params"]
    if kind == "cycle":
        g = directed_cycle(int(params[0]))
    elif kind == "circulant":
        n = int(params[0])
        jumps = []
        for spec_item in params[1:]:
            if ":" in spec_item:
                off, mult = spec_item.split(":", 1)
                jumps.append((int(off), int(mult)))
            else:
                jumps.append((int(spec_item), 1))
        g = circulant(n, jumps)
    elif kind == "product":
        g = cartesian_product(load_edge_list(params[0]), load_edge_list(params[1]))
    elif kind == "random":
        n = int(params[0])
        rng = np.random.default_rng(config.seed)
        flavor = config.options.get("random_kind", "digraph")
        if flavor == "digraph":
            g = random_digraph(n, rng)
        elif flavor == "mixed":
            g = random_mixed_graph(n, rng)
        elif flavor == "bipartite":
            g = random_bipartite_digraph(n, rng)
        else:
            raise ValueError(f"unknown random kind {flavor!r}")
    else:
        raise ValueError(f"unknown generator {kind!r}")
    _emit(serialize_edge_list(g), config.output)
    return EXIT_OK


# --- search ---


def _write_search_outputs(outdir: str, manifest: dict, witnesses: list, max_witnesses: int) -> dict:
    import os

    os.makedirs(outdir, exist_ok=True)
    files = []
    for i, g in enumerate(witnesses[:max_witnesses]):
        name = f"witness_{i:03d}.el"
        save_edge_list(g, os.path.join(outdir, name))
        files.append({"file": name, "digest": digraph_digest(g)})
    manifest = dict(manifest)
    manifest["witness_files"] = files
    manifest["witnesses_serialized"] = len(files)
    with open(os.path.join(outdir, "manifest.json"), "w", encoding="utf-8") as fh:
        fh.write(json.dumps(manifest, indent=2) + "\n")
    return manifest


def cmd_search(config: RunConfig) -> int:
    mode = config.options["mode"]
    outdir = config.options["outdir"]
    max_witnesses = config.options.get("max_witnesses", 50)
    t0 = time.perf_counter()

    if mode == "charpoly":
        n = int(config.options["n"])
        target = config.options["target"]
        matches = charpoly_search(
            n,
            target,
            require_nonbipartite=config.options.get("nonbipartite", False),
            coeff_tol=config.options.get("coeff_tol", 1e-6),
            max_mult=config.options.get("max_mult", 1),
            digons=config.options.get("digons", True),
        )
        runtime = time.perf_counter() - t0
        manifest = {
            "schema": SCHEMA,
            "command": "search-charpoly",
            "n": n,
            "target": [float(c) for c in target],
            "coeff_tol": config.options.get("coeff_tol", 1e-6),
            "nonbipartite": config.options.get("nonbipartite", False),
            "max_mult": config.options.get("max_mult", 1),
            "digons": config.options.get("digons", True),
            "matches": len(matches),
            "runtime_s": runtime,
        }
        manifest = _write_search_outputs(outdir, manifest, matches, max_witnesses)
        summary = (
            f"matches {len(matches)}\n"
            f"serialized {manifest['witnesses_serialized']} witness file(s) in {outdir}\n"
        )
        _emit(summary, config.output)
        return EXIT_OK

    if mode == "orientation":
        g = load_edge_list(config.inputs[0])
        result = best_independence_upper_bound(
            g,
            alpha_grid=config.alpha_grid,
            digons=config.options.get("digons", True),
            enumerate_limit=config.options.get("enumerate_limit", 200_000),
            sample_size=config.options.get("sample_size", 20_000),
            seed=config.seed,
        )
        runtime = time.perf_counter() - t0
        manifest = {
            "schema": SCHEMA,
            "command": "search-orientation",
            "input": str(config.inputs[0]),
            "digest": digraph_digest(g),
            "alpha_grid": [al.label() for al in config.alpha_grid],
            "digons": config.options.get("digons", True),
            "bound": result.bound,
            "alpha": result.alpha.label(),
            "exhaustive": result.exhaustive,
            "states_checked": result.states_checked,
            "seed": config.seed,
            "runtime_s": runtime,
        }
        manifest = _write_search_outputs(outdir, manifest, [result.orientation], max_witnesses)
        summary = (
            f"bound {result.bound} alpha {result.alpha.label()} "
            f"exhaustive {str(result.exhaustive).lower()}\n"
            f"witness written to {outdir}\n"
        )
        _emit(summary, config.output)
        return EXIT_OK

    raise ValueError(f"unknown search mode {mode!r}")


# --- argument parsing ---


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermspec",
        description="Hermitian adjacency spectra of digraphs and mixed multigraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, fmt_default):
        p.add_argument("--format", choices=("text", "json", "csv"), default=fmt_default,
                       help=f"output format (default {fmt_default})")
        p.add_argument("-o", "--output", default=None,
                       help="write output to this file instead of stdout")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for any randomized step (default 0)")

    p_spec = sub.add_parser("spectrum", help="eigenvalues of N^alpha from an edge-list file")
    p_spec.add_argument("input", help="edge-list file")
    p_spec.add_argument("--alpha", default="omega",
                        help="omega | i | 1 | a,b (default omega)")
    p_spec.add_argument("--charpoly", action="store_true",
                        help="also print characteristic polynomial coefficients")
    add_common(p_spec, "text")

    p_ver = sub.add_parser("verify", help="run every spectral bound check on an input digraph")
    p_ver.add_argument("input", help="edge-list file")
    p_ver.add_argument("--alpha-grid", default="omega,i,1",
                       help="comma-separated alphas to sweep (default omega,i,1)")
    p_ver.add_argument("--tol", type=float, default=None,
                       help="override the interlacing comparison tolerance")
    add_common(p_ver, "json")

    p_gen = sub.add_parser("generate", help="write a generated digraph as an edge list")
    p_gen.add_argument("generator", choices=("cycle", "circulant", "product", "random"))
    p_gen.add_argument("params", nargs="+",
                       help="cycle N | circulant N off[:mult]... | product A.el B.el | random N")
    p_gen.add_argument("--kind", choices=("digraph", "mixed", "bipartite"), default="digraph",
                       help="random generator flavor (default digraph)")
    add_common(p_gen, "text")

    p_sea = sub.add_parser("search", help="charpoly or orientation search with manifest output")
    sea_sub = p_sea.add_subparsers(dest="mode", required=True)

    p_cp = sea_sub.add_parser("charpoly", help="scan all labeled digraphs for a target char poly")
    p_cp.add_argument("n", type=int, help="vertex count (exhaustive up to 5)")
    p_cp.add_argument("target", help="space- or comma-separated monic coefficients, e.g. '1 0 -7 0 6 0'")
    p_cp.add_argument("--nonbipartite", action="store_true",
                      help="keep only non-bipartite matches")
    p_cp.add_argument("--coeff-tol", type=float, default=1e-6)
    p_cp.add_argument("--max-mult", type=int, default=1)
    p_cp.add_argument("--no-digons", action="store_true",
                      help="exclude digon pair states from the enumeration")
    p_cp.add_argument("--outdir", default="hermspec_search")
    p_cp.add_argument("--max-witnesses", type=int, default=50)
    p_cp.add_argument("--jobs", type=int, default=1,
                      help="reserved; the search currently runs serially")
    add_common(p_cp, "text")

    p_or = sea_sub.add_parser("orientation",
                              help="minimize the eta independence bound over orientations")
    p_or.add_argument("input", help="edge-list file of an all-digon simple graph")
    p_or.add_argument("--alpha-grid", default="omega,i,1")
    p_or.add_argument("--no-digons", action="store_true",
                      help="restrict to proper orientations (2 states per edge)")
    p_or.add_argument("--enumerate-limit", type=int, default=200_000)
    p_or.add_argument("--sample-size", type=int, default=20_000)
    p_or.add_argument("--outdir", default="hermspec_search")
    p_or.add_argument("--max-witnesses", type=int, default=50)
    p_or.add_argument("--jobs", type=int, default=1,
                      help="reserved; the search currently runs serially")
    add_common(p_or, "text")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.command == "spectrum":
        return RunConfig(
            command="spectrum",
            inputs=(args.input,),
            alpha=parse_alpha(args.alpha),
            fmt=args.format,
            seed=args.seed,
            output=args.output,
            options={"charpoly": args.charpoly},
        )
    if args.command == "verify":
        return RunConfig(
            command="verify",
            inputs=(args.input,),
            alpha_grid=_parse_alpha_grid(args.alpha_grid),
            fmt=args.format,
            seed=args.seed,
            tol=args.tol,
            output=args.output,
        )
    if args.command == "generate":
        return RunConfig(
            command="generate",
            fmt=args.format,
            seed=args.seed,
            output=args.output,
            options={
                "generator": args.generator,
                "params": tuple(args.params),
                "random_kind": args.kind,
            },
        )
    if args.command == "search":
        if args.mode == "charpoly":
            raw = args.target.replace(",", " ").split()
            target = tuple(float(x) for x in raw)
            return RunConfig(
                command="search",
                fmt=args.format,
                seed=args.seed,
                output=args.output,
                options={
                    "mode": "charpoly",
                    "n": args.n,
                    "target": target,
                    "nonbipartite": args.nonbipartite,
                    "coeff_tol": args.coeff_tol,
                    "max_mult": args.max_mult,
                    "digons": not args.no_digons,
                    "outdir": args.outdir,
                    "max_witnesses": args.max_witnesses,
                },
            )
        return RunConfig(
            command="search",
            inputs=(args.input,),
            alpha_grid=_parse_alpha_grid(args.alpha_grid),
            fmt=args.format,
            seed=args.seed,
            output=args.output,
            options={
                "mode": "orientation",
                "digons": not args.no_digons,
                "enumerate_limit": args.enumerate_limit,
                "sample_size": args.sample_size,
                "outdir": args.outdir,
                "max_witnesses": args.max_witnesses,
            },
        )
    raise ValueError(f"unknown command {args.command!r}")


_DISPATCH = {
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
    "generate": cmd_generate,
    "search": cmd_search,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its message; normalize the usage code
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        config = config_from_args(args)
        return _DISPATCH[config.command](config)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (JacobiConvergenceError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (EdgeListError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
