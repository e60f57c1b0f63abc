"""Command-line front end.

Exit codes: 0 when every check passed, 1 on a mathematical mismatch,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import TaftError
from .green import GreenElement, basis_product
from .modules import ModuleLabel, build_rep, classify, enumerate_labels, socle_head
from .oracle import tensor_decompose
from .presentation import fib_poly, format_poly, presentation_relations
from .taft import element_to_json, multiplication_table as taft_table
from .verify import SUITES, run_suites

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("taftgreen")


@dataclass
class CommandConfig:
    n: int
    command: str
    fmt: str = "text"
    out: str | None = None
    verbosity: int = 0
    jobs: int = 1


class UsageError(Exception):
    pass


def _emit(cfg: CommandConfig, text: str, payload) -> None:
    body = json.dumps(payload, indent=2) + "\n" if cfg.fmt == "json" else text.rstrip("\n") + "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _label(n: int, text: str) -> ModuleLabel:
    try:
        return ModuleLabel.parse(n, text)
    except TaftError as exc:
        raise UsageError(str(exc)) from None


# -- subcommands --------------------------------------------------------------


def cmd_decompose(cfg: CommandConfig, left: str, right: str, engine: str) -> int:
    n = cfg.n
    a, b = _label(n, left), _label(n, right)
    payload: dict = {"n": n, "left": {"l": a.l, "r": a.r}, "right": {"l": b.l, "r": b.r}}
    lines = [f"{a} (x) {b}  (n={n})"]
    formula = oracle = None
    if engine in ("formula", "both"):
        formula = basis_product(n, a, b).to_multiset()
        payload["formula"] = formula.to_json()
        lines.append(f"formula: {formula}")
    if engine in ("oracle", "both"):
        oracle = tensor_decompose(n, a, b)
        payload["oracle"] = oracle.to_json()
        lines.append(f"oracle:  {oracle}")
    status = EXIT_OK
    if engine == "both":
        match = formula == oracle
        payload["match"] = match
        lines.append("verdict: match" if match else "verdict: MISMATCH")
        if not match:
            only_f = {str(k): m for k, m in formula.counts.items() if oracle.counts.get(k) != m}
            only_o = {str(k): m for k, m in oracle.counts.items() if formula.counts.get(k) != m}
            payload["diff"] = {"formula_only": only_f, "oracle_only": only_o}
            lines.append(f"diff: formula has {only_f}, oracle has {only_o}")
            status = EXIT_MISMATCH
    _emit(cfg, "\n".join(lines), payload)
    return status


def _table_row(args: tuple[int, int, int, str]) -> list[dict]:
    n, l, r, engine = args
    left = ModuleLabel(l, r)
    row = []
    for right in enumerate_labels(n):
        if engine == "oracle":
            elem = GreenElement.from_multiset(tensor_decompose(n, left, right))
        else:
            elem = basis_product(n, left, right)
        row.append(elem.to_json()["terms"])
    return row


def cmd_mult_table(cfg: CommandConfig, algebra: str, engine: str) -> int:
    n = cfg.n
    if algebra == "taft":
        table = taft_table(n)
        monos = [(i, j) for i in range(n) for j in range(n)]
        payload = {
            "n": n,
            "basis": [{"g": i, "h": j} for i, j in monos],
            "table": [[element_to_json(x) for x in row] for row in table],
        }
        lines = []
        for (i, j), row in zip(monos, table):
            for (k, m), x in zip(monos, row):
                lines.append(f"g^{i}h^{j} * g^{k}h^{m} = {x}")
        _emit(cfg, "\n".join(lines), payload)
        return EXIT_OK

    labels = enumerate_labels(n)
    work = [(n, lab.l, lab.r, engine) for lab in labels]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            rows = list(pool.map(_table_row, work))
    else:
        rows = [_table_row(w) for w in work]
    payload = {
        "n": n,
        "labels": [{"l": lab.l, "r": lab.r} for lab in labels],
        "table": rows,
    }
    lines = []
    for a, row in zip(labels, rows):
        for b, terms in zip(labels, row):
            elem = GreenElement(n, {ModuleLabel(t["l"], t["r"]): int(t["coeff"]) for t in terms})
            lines.append(f"[{a}][{b}] = {elem}")
    _emit(cfg, "\n".join(lines), payload)
    return EXIT_OK


def cmd_presentation(cfg: CommandConfig) -> int:
    n = cfg.n
    y_rel, z_rel = presentation_relations(n)
    f_n = fib_poly(n)
    factored = f"(z-y-1)({f_n})" if len(f_n.coeffs) > 1 else f"(z-y-1){f_n}"
    text = (
        f"r(H_{n}(q)) = Z[y,z] / (y^{n}-1, {factored})\n"
        f"relation 1: {y_rel}\n"
        f"relation 2: {factored}\n"
        f"expanded:   {z_rel}"
    )
    payload = {
        "n": n,
        "relations": [y_rel.to_json(), z_rel.to_json()],
        "fib_poly": f_n.to_json(),
        "factored": factored,
    }
    _emit(cfg, text, payload)
    return EXIT_OK


def cmd_enumerate(cfg: CommandConfig, with_reps: bool) -> int:
    n = cfg.n
    entries, lines = [], []
    for lab in enumerate_labels(n):
        soc, head = socle_head(n, lab)
        flags = classify(n, lab)
        entry = {"l": lab.l, "r": lab.r, "socle": soc, "head": head, **flags}
        if with_reps:
            entry["rep"] = build_rep(n, lab).to_json()
        entries.append(entry)
        tags = ",".join(k for k, v in flags.items() if v) or "-"
        lines.append(f"{lab}  dim={lab.l}  socle=S_{soc}  head=S_{head}  {tags}")
    _emit(cfg, "\n".join(lines), {"n": n, "modules": entries})
    return EXIT_OK


def cmd_verify(cfg: CommandConfig, suite: str) -> int:
    checks = run_suites(cfg.n, suite, cfg.jobs)
    ok = all(c.passed for c in checks)
    first_bad = next((c for c in checks if not c.passed), None)
    payload = {
        "n": cfg.n,
        "suite": suite,
        "passed": ok,
        "checks": [c.to_json() for c in checks],
    }
    if first_bad is not None:
        payload["first_failure"] = first_bad.to_json()
    lines = []
    for c in checks:
        mark = "PASS" if c.passed else "FAIL"
        extra = f" ({c.detail})" if c.detail else ""
        lines.append(f"[{mark}] {c.suite}: {c.name}{extra}")
    lines.append(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    if first_bad is not None and first_bad.counterexample is not None:
        lines.append("first counterexample: " + json.dumps(first_bad.counterexample))
    _emit(cfg, "\n".join(lines), payload)
    return EXIT_OK if ok else EXIT_MISMATCH


# -- argument parsing ---------------------------------------------------------


def _order(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--n must be an integer, got {text!r}") from None
    if n < 2:
        raise argparse.ArgumentTypeError(f"--n must be >= 2, got {n}")
    return n


def _jobs(text: str) -> int:
    try:
        j = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--jobs must be an integer, got {text!r}") from None
    if j < 1:
        raise argparse.ArgumentTypeError("--jobs must be >= 1")
    return j


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_order, required=True, help="order of the root of unity (n >= 2)")
    common.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--jobs", type=_jobs, default=1, help="worker processes for sweeps")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(
        prog="taftgreen",
        description="Green rings of Taft algebras: decompositions, tables, presentations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="decompose M(l,r) (x) M(l',r')")
    p.add_argument("--left", required=True, help="label 'l,r'")
    p.add_argument("--right", required=True, help="label 'l,r'")
    p.add_argument("--engine", choices=("formula", "oracle", "both"), default="formula")

    p = sub.add_parser("mult-table", parents=[common], help="multiplication table")
    p.add_argument("--algebra", choices=("green", "taft"), default="green")
    p.add_argument("--engine", choices=("formula", "oracle"), default="formula")

    sub.add_parser("presentation", parents=[common], help="generators and relations of r(H_n(q))")

    p = sub.add_parser("enumerate", parents=[common], help="list the n^2 indecomposables")
    p.add_argument("--with-reps", action="store_true", help="include the g and h matrices")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
    )
    cfg = CommandConfig(n=args.n, command=args.command, fmt=args.fmt, out=args.out,
                        verbosity=args.verbose, jobs=args.jobs)
    try:
        if args.command == "decompose":
            return cmd_decompose(cfg, args.left, args.right, args.engine)
        if args.command == "mult-table":
            return cmd_mult_table(cfg, args.algebra, args.engine)
        if args.command == "presentation":
            return cmd_presentation(cfg)
        if args.command == "enumerate":
            return cmd_enumerate(cfg, args.with_reps)
        return cmd_verify(cfg, args.suite)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"taftgreen: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
