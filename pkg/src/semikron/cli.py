"""Command-line entry point: ``semikron <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Iterable

from . import __version__, dual, isn, oracle, orbits, partition_algebra
from .partitions import Partition, enumerate_partitions, parse_partition

MAX_ENGINE_N = 6
MAX_QTABLE = 4
MAX_STABILITY_SIZE = 16


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # one-line diagnostics
        raise UsageError(message)


def _threads() -> int:
    raw = os.environ.get("SEMIKRON_THREADS", "")
    try:
        return max(1, int(raw)) if raw else min(8, os.cpu_count() or 1)
    except ValueError:
        raise UsageError(f"SEMIKRON_THREADS must be an integer, got {raw!r}") from None


def parallel_map(fn: Callable, items: Iterable) -> list:
    """Map over a worker pool; results keep the input order."""
    items = list(items)
    workers = _threads()
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _partition(text: str, name: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(f"--{name}: {exc}") from None


def _cap(ok: bool, args, message: str) -> None:
    if not ok and not args.unsafe:
        raise UsageError(f"{message} (pass --unsafe to lift the cap)")


def _coefficient_map(values: dict[Partition, int]) -> dict[str, int]:
    return {str(nu): v for nu, v in values.items()}


def _sweep(n: int, fn: Callable[[Partition], int]) -> dict[str, int]:
    shapes = [nu for m in range(n + 1) for nu in enumerate_partitions(m)]
    values = parallel_map(fn, shapes)
    return {str(nu): v for nu, v in zip(shapes, values) if v}


# ----------------------------------------------------------------- commands


def cmd_isn(args) -> Any:
    _cap(args.n <= MAX_ENGINE_N, args, f"--n is capped at {MAX_ENGINE_N}")
    lam, mu = _partition(args.lam, "lambda"), _partition(args.mu, "mu")
    for p, name in ((lam, "lambda"), (mu, "mu")):
        if sum(p) > args.n:
            raise UsageError(f"--{name} {p} is larger than n={args.n}")
    return _sweep(args.n, lambda nu: isn.isn_kronecker(lam, mu, nu, args.n))


def cmd_dual(args) -> Any:
    _cap(args.n <= MAX_ENGINE_N, args, f"--n is capped at {MAX_ENGINE_N}")
    lam, mu = _partition(args.lam, "lambda"), _partition(args.mu, "mu")
    return _sweep(args.n, lambda nu: dual.dual_kronecker(lam, mu, nu, args.semigroup, args.n))


def cmd_qtable(args) -> Any:
    _cap(max(args.k, args.l) <= MAX_QTABLE, args, f"--k and --l are capped at {MAX_QTABLE}")
    if args.k < 0 or args.l < 0:
        raise UsageError("--k and --l must be nonnegative")
    top = (args.k + 1) * (args.l + 1) - 1 if args.bordered else args.k * args.l
    rows = []
    for m in range(top + 1):
        p = orbits.count_matrices(args.k, args.l, m, args.bordered)
        if p:
            rows.append({"m": m, "p": p, "q": orbits.count_orbits(args.k, args.l, m, args.bordered)})
    return rows


def cmd_bcoef(args) -> Any:
    lam, mu, nu = (_partition(args.lam, "lambda"), _partition(args.mu, "mu"), _partition(args.nu, "nu"))
    if sum(nu) != sum(lam) * sum(mu):
        raise UsageError(f"|nu| must equal |lambda|*|mu| = {sum(lam) * sum(mu)}")
    _cap(sum(nu) <= MAX_STABILITY_SIZE, args, f"|nu| is capped at {MAX_STABILITY_SIZE}")
    return {"b": partition_algebra.b_coefficient(lam, mu, nu)}


def cmd_stability(args) -> Any:
    lam, mu, nu = (_partition(args.lam, "lambda"), _partition(args.mu, "mu"), _partition(args.nu, "nu"))
    k, l = sum(lam), sum(mu)
    if sum(nu) != k * l:
        raise UsageError(f"|nu| must equal |lambda|*|mu| = {k * l}")
    if args.amax < 0:
        raise UsageError("--amax must be nonnegative")
    _cap(k * l + l * args.amax <= MAX_STABILITY_SIZE, args,
         f"k*l + l*amax must not exceed {MAX_STABILITY_SIZE}")
    scan = partition_algebra.stability_scan(lam, mu, nu, args.amax)
    return {
        "sequence": [{"a": a, "b": b} for a, b in scan.values],
        "constant_from": scan.onset,
    }


def pdiag_analysis() -> dict:
    cells = partition_algebra.left_cells(2)
    left, right = cells[1], cells[4]
    report = partition_algebra.standard_filtration(
        partition_algebra.cell_module(left), partition_algebra.cell_module(right)
    )
    layers = []
    for layer in report.layers:
        layers.append({
            "dimension": layer.dimension,
            "rank": layer.rank,
            "vectors": [f"{left[i]} (x) {right[j]}" for i, j in layer.vectors],
            "stabilizer_order": layer.stabilizer_order,
            "standard_multiplicities": _coefficient_map(layer.standard_multiplicities),
            "cell_module": layer.is_cell_module,
        })
    return {
        "diagrams": len(partition_algebra.enumerate_diagrams(2)),
        "left_cells": [{"rank": c[0].rank, "size": len(c), "diagrams": [str(d) for d in c]} for c in cells],
        "tensor": {"left": [str(d) for d in left], "right": [str(d) for d in right]},
        "layers": layers,
        "standard_multiplicities_by_rank": {
            str(r): _coefficient_map(m) for r, m in report.rank_multiplicities.items()
        },
        "cell_filtration": report.cell_filtration,
    }


def _pdiag_text(result: dict) -> str:
    out = [f"P_2 has {result['diagrams']} diagrams."]
    for c in result["left_cells"]:
        out.append(f"  rank {c['rank']} left cell ({c['size']}): " + " ".join(c["diagrams"]))
    out.append("Tensor product of the cells " + " ".join(result["tensor"]["left"])
               + " and " + " ".join(result["tensor"]["right"]) + ":")
    for t, layer in enumerate(result["layers"], 1):
        kind = "cell module" if layer["cell_module"] else "proper quotient of a cell module"
        mults = ", ".join(f"{k}:{v}" for k, v in layer["standard_multiplicities"].items())
        out.append(f"  layer {t}: dimension {layer['dimension']}, rank {layer['rank']}, "
                   f"stabilizer order {layer['stabilizer_order']}, {kind}; standard {mults}")
        for v in layer["vectors"]:
            out.append(f"    {v}")
    verdict = {True: "exists", False: "does not exist", None: "undetermined"}[result["cell_filtration"]]
    out.append(f"Cell filtration {verdict}.")
    return "\n".join(out)


def cmd_pdiag_demo(args) -> Any:
    return pdiag_analysis()


def _oracle_cap(args, semigroup: str, n: int) -> None:
    limit = oracle.MAX_N[semigroup]
    if n > limit:
        raise UsageError(f"the {semigroup} oracle is limited to n <= {limit}")


def cmd_oracle(args) -> Any:
    _oracle_cap(args, args.semigroup, args.n)
    if args.verify:
        bad = oracle.verify(args.semigroup, args.n)
        args.exit_status = 1 if bad else 0
        return {"mismatches": [str(b) for b in bad], "passed": not bad}
    if args.lam is None or args.mu is None:
        raise UsageError("--lambda and --mu are required unless --verify is given")
    lam, mu = _partition(args.lam, "lambda"), _partition(args.mu, "mu")
    labels = oracle.simple_labels(args.semigroup, args.n)
    for p, name in ((lam, "lambda"), (mu, "mu")):
        if p not in labels:
            raise UsageError(f"--{name} {p} does not index a simple module at n={args.n}")
    return _coefficient_map(oracle.decompose_tensor(args.semigroup, args.n, lam, mu))


def cmd_verify(args) -> Any:
    semigroups = oracle.SEMIGROUPS if args.all else (args.semigroup,)
    if not args.all and args.semigroup is None:
        raise UsageError("give --all or --semigroup")
    jobs = [(g, n) for g in semigroups for n in range(min(args.max_n, oracle.MAX_N[g]) + 1)]
    results = parallel_map(lambda job: oracle.verify(*job), jobs)
    checks = [
        {"semigroup": g, "n": n, "passed": not bad, "mismatches": [str(b) for b in bad]}
        for (g, n), bad in zip(jobs, results)
    ]
    if args.all:
        top = min(args.max_n, MAX_QTABLE)
        bad_counts = [
            f"k={k} l={l} m={m} bordered={b}"
            for b in (False, True)
            for k in range(1, top + 1)
            for l in range(1, top + 1)
            for m in range((k + 1) * (l + 1))
            if orbits.count_matrices(k, l, m, b)
            != sum(o.orbit_size for o in orbits.enumerate_matrix_orbits(k, l, m, b))
        ]
        checks.append({"check": "matrix counts", "passed": not bad_counts, "mismatches": bad_counts})
        diagrams = partition_algebra.enumerate_diagrams(2)
        bad_delta = [
            f"{d1} {d2}" for d1 in diagrams for d2 in diagrams
            if not partition_algebra.delta_check(d1, d2, 2, 3)
        ]
        checks.append({"check": "comultiplication n=2", "passed": not bad_delta, "mismatches": bad_delta})
    passed = all(c["passed"] for c in checks)
    args.exit_status = 0 if passed else 1
    return {"checks": checks, "passed": passed}


# ------------------------------------------------------------------ parsing


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="semikron", description="Tensor-product multiplicities for inverse semigroups.")
    parser.add_argument("--version", action="version", version=f"semikron {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text, fmt="json"):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn, default_format=fmt)
        p.add_argument("--format", choices=("json", "csv", "text"), default=None)
        p.add_argument("--unsafe", action="store_true", help="lift the size caps")
        p.add_argument("--no-timing", action="store_true", help="omit runtime from the output")
        return p

    p = add("isn", cmd_isn, "coefficients for IS_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)

    p = add("dual", cmd_dual, "coefficients for I_n* or PI_n*")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--semigroup", choices=(dual.ISTAR, dual.PISTAR), required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)

    p = add("qtable", cmd_qtable, "matrix counts p and orbit counts q", fmt="csv")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--bordered", action="store_true")

    p = add("bcoef", cmd_bcoef, "restriction coefficient along the grid embedding")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)

    p = add("stability", cmd_stability, "first-row stability scan of restriction coefficients")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--amax", type=int, default=3)

    add("pdiag-demo", cmd_pdiag_demo, "cell structure of P_2 and a tensor product without cell filtration",
        fmt="text")

    p = add("oracle", cmd_oracle, "brute-force decomposition for n <= 4")
    p.add_argument("--semigroup", choices=oracle.SEMIGROUPS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--mu")
    p.add_argument("--verify", action="store_true", help="compare every pair with the formula engines")

    p = add("verify", cmd_verify, "cross-check engines against the oracle")
    p.add_argument("--all", action="store_true")
    p.add_argument("--semigroup", choices=oracle.SEMIGROUPS)
    p.add_argument("--max-n", type=int, default=3)
    return parser


def _request(args) -> dict:
    skip = {"func", "default_format", "exit_status", "no_timing", "format"}
    out = {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}
    if "lam" in out:
        out["lambda"] = out.pop("lam")
    return dict(sorted(out.items()))


def _rows(args, results) -> list[dict]:
    """Flat rows for csv and text output."""
    if args.command == "stability":
        return list(results["sequence"])
    if args.command == "pdiag-demo":
        return [
            {"layer": t, "dimension": layer["dimension"], "rank": layer["rank"],
             "stabilizer_order": layer["stabilizer_order"], "cell_module": layer["cell_module"]}
            for t, layer in enumerate(results["layers"], 1)
        ]
    if args.command == "verify":
        return [
            {"check": c.get("check") or f"{c['semigroup']} n={c['n']}",
             "passed": c["passed"], "mismatches": len(c["mismatches"])}
            for c in results["checks"]
        ]
    if args.command == "oracle" and args.verify:
        return [{"mismatch": m} for m in results["mismatches"]] or [{"mismatch": "none"}]
    if isinstance(results, list):
        return results
    return [{"key": k, "value": v} for k, v in results.items()]


def render(args, results, elapsed_ms: float) -> str:
    fmt = args.format or args.default_format
    if fmt == "text" and args.command == "pdiag-demo":
        return _pdiag_text(results)
    if fmt in ("csv", "text"):
        rows = _rows(args, results)
        if not rows:
            return ""
        if fmt == "text":
            return "\n".join("\t".join(str(v) for v in r.values()) for r in rows)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    doc = {
        "request": _request(args),
        "results": results,
        "meta": {
            "version": __version__,
            "runtime_ms": None if args.no_timing else round(elapsed_ms, 3),
        },
    }
    return json.dumps(doc, indent=2)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.exit_status = 0
        start = time.perf_counter()
        results = args.func(args)
        text = render(args, results, (time.perf_counter() - start) * 1000)
    except (UsageError, ValueError) as exc:
        print(f"semikron: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal failures still get a single line
        print(f"semikron: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    print(text)
    return args.exit_status


if __name__ == "__main__":
    sys.exit(main())
