"""Command-line surface: decide edit feasibility, generate hardness
instances, render free-space diagrams.

Exit codes follow the usual pipeline convention: 0 feasible / success,
1 infeasible, 2 input or usage error.  Reports are JSON on stdout so shell
scripts can branch on the exit code and jq the details.
"""

import argparse
import itertools
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .continuous_edit import (
    continuous_delete_edit_two_sided_value,
    continuous_delete_edit_two_sided_witness,
    continuous_delete_edit_value,
    continuous_delete_edit_witness,
    continuous_edit_value,
    continuous_edit_witness,
    continuous_insert_edit_value,
    continuous_insert_edit_witness,
    shortcut_decide,
)
from .discrete_edit import (
    delete_table,
    edit_table,
    insert_table,
    reconstruct_edits,
    verified_apply,
)
from .freespace import decide_continuous, decide_weak_continuous, render_free_space
from .geometry import Curve, load_curve
from .hardness import (
    DEFAULT_SUBSET_CAP,
    KINDS,
    EnumerationCapExceeded,
    _cap,
    brute_force_weak_edit,
    gen_reduction,
    lift_blueprint,
    sat_from_dimacs,
    save_blueprint,
)

INF = math.inf
REPLAY_EPS = 1e-9


class UsageError(ValueError):
    """Bad configuration or malformed input: maps to exit code 2."""


@dataclass
class RunConfig:
    """One decide run: which distance, which edits, and the numbers."""

    variant: str  # discrete | continuous
    mode: str  # strong | weak
    ops: str  # delete | insert | both | shortcut
    delta: float
    k: int | None
    two_sided: bool
    oracle: bool
    pi_path: str
    sigma_path: str
    out: str | None
    seed: int

    def validate(self) -> None:
        if self.delta <= 0:
            raise UsageError("--delta must be positive")
        if self.k is not None and self.k < 0:
            raise UsageError("--k must be nonnegative")
        if self.mode == "weak" and not self.oracle:
            raise UsageError(
                "weak mode has no polynomial solver; pass --oracle to run the "
                "capped brute-force enumeration"
            )
        if self.ops == "shortcut":
            if self.variant != "continuous" or self.mode != "strong":
                raise UsageError("shortcut is defined for --variant continuous --mode strong")
            if self.two_sided:
                raise UsageError("shortcut has no two-sided form")
        if self.two_sided and self.ops != "delete":
            raise UsageError("--two-sided applies to --ops delete only")
        if self.mode == "weak" and self.two_sided:
            raise UsageError("--two-sided applies to the strong continuous variant only")


def _load(path: str) -> Curve:
    try:
        return load_curve(path)
    except OSError as exc:
        raise UsageError(f"curve file {path}: {exc.strerror or exc}") from exc
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError(f"curve file {path}: {exc}") from exc


def _finite(cost) -> bool:
    return cost != INF


# ---------------------------------------------------------------------------
# decide


def _decide_discrete_strong(cfg: RunConfig, pi: Curve, sigma: Curve) -> dict:
    if cfg.ops == "delete":
        table = delete_table(pi, sigma, cfg.delta)
    elif cfg.ops == "insert":
        table = insert_table(pi, sigma, cfg.delta, seed=cfg.seed)
    else:
        table = edit_table(pi, sigma, cfg.delta, seed=cfg.seed)
    report: dict = {}
    if _finite(table.cost):
        verified_apply(table)  # replay guard: the script must reproduce the cost
        report["cost"] = int(table.cost)
        report["script"] = reconstruct_edits(table).to_json()
        report["answer"] = cfg.k is None or table.cost <= cfg.k
    else:
        report["answer"] = False
    return report


def _decide_continuous_strong(cfg: RunConfig, pi: Curve, sigma: Curve) -> dict:
    if cfg.ops == "shortcut":
        return {"answer": bool(shortcut_decide(pi, sigma, cfg.delta))}
    if cfg.ops in ("insert", "both") and pi.dim != 2:
        raise UsageError(f"continuous {cfg.ops} needs curves in the plane, got dimension {pi.dim}")

    if cfg.ops == "delete" and cfg.two_sided:
        value, witness = continuous_delete_edit_two_sided_value, continuous_delete_edit_two_sided_witness
    elif cfg.ops == "delete":
        value, witness = continuous_delete_edit_value, continuous_delete_edit_witness
    elif cfg.ops == "insert":
        value, witness = continuous_insert_edit_value, continuous_insert_edit_witness
    else:
        value, witness = continuous_edit_value, continuous_edit_witness

    cost = value(pi, sigma, cfg.delta)
    report: dict = {"answer": _finite(cost) and (cfg.k is None or cost <= cfg.k)}
    if not _finite(cost):
        return report
    report["cost"] = int(cost)
    got = witness(pi, sigma, cfg.delta, int(cost))
    if cfg.two_sided:
        (p_curve, _), (s_curve, _) = got
        assert decide_continuous(p_curve, s_curve, cfg.delta + REPLAY_EPS), \
            "two-sided witness fails the distance replay"
        report["script"] = {
            "edited_pi": p_curve.vertices.tolist(),
            "edited_sigma": s_curve.vertices.tolist(),
        }
    else:
        curve, _ = got
        assert decide_continuous(pi, curve, cfg.delta + REPLAY_EPS), \
            "witness curve fails the distance replay"
        report["script"] = {"edited_sigma": curve.vertices.tolist()}
    return report


def _weak_continuous_delete_oracle(pi: Curve, sigma: Curve, delta: float, budget) -> float:
    """Subset enumeration against the weak continuous decision.

    Deletion needs no candidate values, so the enumeration is complete in any
    dimension; the shared subset cap still applies.
    """
    n = len(sigma)
    max_d = n - 1 if budget is None else min(int(budget), n - 1)
    total = sum(math.comb(n, d) for d in range(max_d + 1))
    cap = _cap(DEFAULT_SUBSET_CAP)
    if total > cap:
        raise EnumerationCapExceeded(
            f"weak continuous deletion would enumerate {total} subsets; cap is {cap}"
        )
    for d in range(max_d + 1):
        for drop in itertools.combinations(range(n), d):
            keep = np.ones(n, dtype=bool)
            keep[list(drop)] = False
            if decide_weak_continuous(pi, Curve(sigma.vertices[keep]), delta):
                return d
    return INF


def _decide_weak(cfg: RunConfig, pi: Curve, sigma: Curve) -> dict:
    if cfg.ops == "shortcut":
        raise UsageError("shortcut is defined for --variant continuous --mode strong")
    if cfg.variant == "continuous":
        if cfg.ops != "delete":
            raise UsageError(
                "the weak continuous oracle covers deletions only: insertion "
                "candidates are proven complete just for weak discrete in R^1"
            )
        cost = _weak_continuous_delete_oracle(pi, sigma, cfg.delta, cfg.k)
    else:
        cost = brute_force_weak_edit(pi, sigma, cfg.delta, cfg.ops, cfg.k)
    report: dict = {"answer": _finite(cost)}
    if _finite(cost):
        report["cost"] = int(cost)
    return report


def cmd_decide(cfg: RunConfig) -> int:
    cfg.validate()
    pi, sigma = _load(cfg.pi_path), _load(cfg.sigma_path)
    if pi.dim != sigma.dim:
        raise UsageError(
            f"dimension mismatch: {cfg.pi_path} is R^{pi.dim}, {cfg.sigma_path} is R^{sigma.dim}"
        )
    if cfg.mode == "weak":
        body = _decide_weak(cfg, pi, sigma)
    elif cfg.variant == "discrete":
        body = _decide_discrete_strong(cfg, pi, sigma)
    else:
        body = _decide_continuous_strong(cfg, pi, sigma)
    report = {
        "variant": cfg.variant,
        "mode": cfg.mode,
        "ops": cfg.ops,
        "delta": cfg.delta,
        "k": cfg.k,
    }
    report.update(body)
    _emit(report, cfg.out)
    return 0 if report["answer"] else 1


# ---------------------------------------------------------------------------
# gen-hardness


def cmd_gen_hardness(cnf_path: str, kind: str, lift: bool, out_dir: str) -> int:
    try:
        text = open(cnf_path).read()
    except OSError as exc:
        raise UsageError(f"CNF file {cnf_path}: {exc.strerror or exc}") from exc
    try:
        sat = sat_from_dimacs(text)
    except ValueError as exc:
        raise UsageError(f"CNF file {cnf_path}: {exc}") from exc
    bp = gen_reduction(sat, kind)
    if lift:
        bp = lift_blueprint(bp)
    manifest = save_blueprint(bp, out_dir)
    _emit(
        {
            "kind": kind,
            "lifted": bp.lifted,
            "out_dir": out_dir,
            "files": ["pi.csv", "sigma.csv", "manifest.json"],
            "pi_len": manifest["pi_len"],
            "sigma_len": manifest["sigma_len"],
            "delta": bp.delta,
            "budget": bp.budget,
        },
        None,
    )
    return 0


# ---------------------------------------------------------------------------
# render


def cmd_render(pi_path: str, sigma_path: str, delta: float, variant: str,
               mode: str, out: str) -> int:
    if delta <= 0:
        raise UsageError("--delta must be positive")
    pi, sigma = _load(pi_path), _load(sigma_path)
    render_variant = variant if mode == "strong" else f"weak-{variant}"
    render_free_space(pi, sigma, delta, variant=render_variant, out=out)
    _emit({"out": out, "variant": render_variant, "delta": delta}, None)
    return 0


# ---------------------------------------------------------------------------
# plumbing


def _emit(report: dict, out: str | None) -> None:
    text = json.dumps(report, indent=2) + "\n"
    sys.stdout.write(text)
    if out:
        with open(out, "w") as fh:
            fh.write(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frechet-edit",
        description="Vertex edit distances between polygonal curves under a "
        "Fréchet-distance threshold.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide feasibility / compute an edit cost")
    p.add_argument("pi", help="reference curve (CSV or JSON)")
    p.add_argument("sigma", help="curve being edited (CSV or JSON)")
    p.add_argument("--variant", choices=("discrete", "continuous"), default="discrete")
    p.add_argument("--mode", choices=("strong", "weak"), default="strong")
    p.add_argument("--ops", choices=("delete", "insert", "both", "shortcut"), default="delete")
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--k", type=int, default=None, help="edit budget (optional)")
    p.add_argument("--two-sided", action="store_true", help="delete from both curves")
    p.add_argument("--oracle", action="store_true",
                   help="run the capped brute-force enumeration (weak mode)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized subroutines")
    p.add_argument("--out", default=None, help="also write the JSON report here")

    p = sub.add_parser("gen-hardness", help="expand a 3-CNF into a reduction instance")
    p.add_argument("cnf", help="DIMACS CNF file, exactly 3 literals per clause")
    p.add_argument("--kind", choices=KINDS, default="delete-unlimited")
    p.add_argument("--lift", action="store_true", help="lift the R^1 curves to the plane")
    p.add_argument("--seed", type=int, default=0, help="accepted for uniformity; generation is deterministic")
    p.add_argument("--out", default=".", help="output directory")

    p = sub.add_parser("render", help="draw the free-space diagram as SVG")
    p.add_argument("pi")
    p.add_argument("sigma")
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--variant", choices=("discrete", "continuous"), default="continuous")
    p.add_argument("--mode", choices=("strong", "weak"), default="strong")
    p.add_argument("--out", default="free_space.svg")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses exit code 2 for usage errors already
        return int(exc.code or 0)
    try:
        if args.command == "decide":
            cfg = RunConfig(
                variant=args.variant,
                mode=args.mode,
                ops=args.ops,
                delta=args.delta,
                k=args.k,
                two_sided=args.two_sided,
                oracle=args.oracle,
                pi_path=args.pi,
                sigma_path=args.sigma,
                out=args.out,
                seed=args.seed,
            )
            return cmd_decide(cfg)
        if args.command == "gen-hardness":
            return cmd_gen_hardness(args.cnf, args.kind, args.lift, args.out)
        return cmd_render(args.pi, args.sigma, args.delta, args.variant, args.mode, args.out)
    except (UsageError, EnumerationCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
