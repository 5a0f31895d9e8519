"""Command-line front end.

Subcommands take a family letter and rank, with theta given either
inclusively (--theta) or by complement (--theta-complement); indices are
1-based on the command line.  Reports are emitted as text, JSON, or TSV with
identical numeric content.  Exit codes: 0 success, 1 internal cross-check
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__
from .coeffs import kappa_report
from .homology import (
    RING_Z,
    RING_Z2,
    build_complex,
    h1_h2_closed_form,
    homology_groups,
    orientable_typeA,
    orientable_via_topcell,
    poincare_mod2,
)
from .rootsys import height, root_system
from .weyl import WeylGroup

SCHEMA_VERSION = "1"


class CrossCheckError(Exception):
    """An internal consistency check failed; reported with exit code 1."""


@dataclass(frozen=True)
class JobSpec:
    command: str
    family: str
    rank: int
    theta: frozenset[int]  # 0-based internally
    max_degree: int
    ring: str
    output_format: str
    seed: int

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "family": self.family,
            "rank": self.rank,
            "theta": sorted(i + 1 for i in self.theta),
            "max_degree": self.max_degree,
            "ring": self.ring,
            "format": self.output_format,
            "seed": self.seed,
        }


def _parse_indices(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad index list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flaghom",
        description="Cellular homology of real split flag manifolds from Cartan data.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [
        ("roots", "positive roots, heights and coroots"),
        ("weyl", "Weyl group elements and canonical words"),
        ("coeffs", "covering pairs with kappa and boundary coefficients"),
        ("homology", "boundary matrices and homology groups"),
        ("orientability", "orientability by both criteria"),
        ("sweep", "tabulate H1/H2/orientability over all theta"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("family", choices=list("ABCDEFG"), type=str.upper)
        p.add_argument("rank", type=int)
        group = p.add_mutually_exclusive_group()
        group.add_argument("--theta", type=_parse_indices, default=None,
                           help="1-based simple-root indices in Theta")
        group.add_argument("--theta-complement", type=_parse_indices, default=None,
                           help="1-based indices of the complement of Theta")
        p.add_argument("--max-degree", type=int, default=3)
        p.add_argument("--ring", choices=["z", "z2"], default="z")
        p.add_argument("--format", choices=["text", "json", "tsv"], default="text")
        p.add_argument("--seed", type=int, default=0)
    return parser


def jobspec_from_args(args: argparse.Namespace) -> JobSpec:
    rank = args.rank
    if rank < 1:
        raise ValueError("rank must be positive")
    if args.theta is not None:
        theta = frozenset(i - 1 for i in args.theta)
    elif args.theta_complement is not None:
        theta = frozenset(range(rank)) - frozenset(i - 1 for i in args.theta_complement)
    else:
        theta = frozenset()
    if not theta <= set(range(rank)):
        raise ValueError("theta indices must lie in [1, rank]")
    if args.max_degree < 0:
        raise ValueError("max-degree must be >= 0")
    return JobSpec(
        command=args.command,
        family=args.family,
        rank=rank,
        theta=theta,
        max_degree=args.max_degree,
        ring=RING_Z if args.ring == "z" else RING_Z2,
        output_format=args.format,
        seed=args.seed,
    )


# -- report builders ------------------------------------------------------


def _word_out(word: tuple[int, ...]) -> list[int]:
    return [i + 1 for i in word]


def _cell_out(w) -> dict:
    out = {"word": _word_out(w.word), "length": w.length}
    if w.one_line is not None:
        out["one_line"] = list(w.one_line)
    return out


def report_roots(job: JobSpec) -> dict:
    system = root_system(job.family, job.rank)
    return {
        "schema_version": SCHEMA_VERSION,
        "job": job.as_dict(),
        "roots": [
            {
                "coeffs": list(r),
                "height": height(r),
                "coroot": list(system.coroot(r)),
                "coroot_height": system.coroot_height(r),
            }
            for r in system.positive_roots
        ],
    }


def report_weyl(job: JobSpec) -> dict:
    group = WeylGroup(root_system(job.family, job.rank))
    reps = group.minimal_representatives(job.theta)
    return {
        "schema_version": SCHEMA_VERSION,
        "job": job.as_dict(),
        "order": len(group.elements),
        "cells": [_cell_out(w) for w in reps],
    }


def report_coeffs(job: JobSpec) -> dict:
    group = WeylGroup(root_system(job.family, job.rank))
    reps = group.minimal_representatives(job.theta)
    rep_set = {w.matrix for w in reps}
    pairs = []
    for w in reps:
        if not 1 <= w.length <= job.max_degree:
            continue
        for pair in group.bruhat_covers(w):
            if pair.w_prime.matrix not in rep_set:
                continue
            rep = kappa_report(group, pair)
            pairs.append(
                {
                    "w": _word_out(pair.w.word),
                    "w_prime": _word_out(pair.w_prime.word),
                    "I": pair.deleted_index,
                    "beta": list(pair.beta),
                    "gamma": list(pair.gamma),
                    "kappa": rep.kappa,
                    "kappa_routes": {
                        "height": rep.kappa_height,
                        "sigma": rep.kappa_sigma,
                        "phi": rep.kappa_phi,
                        "typeA": rep.kappa_typeA,
                    },
                    "magnitude": rep.magnitude,
                    "sign": rep.sign,
                }
            )
    return {
        "schema_version": SCHEMA_VERSION,
        "job": job.as_dict(),
        "covering_pairs": pairs,
    }


def report_homology(job: JobSpec) -> dict:
    group = WeylGroup(root_system(job.family, job.rank))
    out: dict = {"schema_version": SCHEMA_VERSION, "job": job.as_dict()}
    if job.ring == RING_Z2:
        betti = poincare_mod2(group, job.theta)
        out["mod2_betti"] = betti
        out["homology"] = [
            {"degree": k, "mod2_dim": b} for k, b in enumerate(betti)
        ]
        return out
    complex_ = build_complex(
        group, job.theta, job.max_degree, RING_Z, allow_indeterminate_rows=True
    )
    groups = homology_groups(complex_, job.max_degree - 1)
    out["cells"] = [
        _cell_out(w) for k in sorted(complex_.cells) for w in complex_.cells[k]
    ]
    out["matrices"] = {str(k): complex_.boundaries[k] for k in complex_.boundaries}
    out["homology"] = [
        {"degree": k, "free_rank": h.free_rank, "torsion": list(h.torsion)}
        for k, h in enumerate(groups)
    ]
    if job.family == "A":
        n = job.rank + 1
        h1, h2 = h1_h2_closed_form(n, job.theta) if n >= 3 else (None, None)
        closed = {}
        if h1 is not None:
            closed["H1"] = {"free_rank": h1.free_rank, "torsion": list(h1.torsion)}
        if h2 is not None:
            closed["H2"] = {"free_rank": h2.free_rank, "torsion": list(h2.torsion)}
        out["closed_form"] = closed
        for key, want in closed.items():
            k = int(key[1])
            if k <= job.max_degree - 1:
                got = out["homology"][k]
                if (got["free_rank"], got["torsion"]) != (
                    want["free_rank"],
                    want["torsion"],
                ):
                    raise CrossCheckError(
                        f"H{k} mismatch: complex {got} vs closed form {want}"
                    )
    return out


def report_orientability(job: JobSpec) -> dict:
    group = WeylGroup(root_system(job.family, job.rank))
    top_cell = orientable_via_topcell(group, job.theta)
    out: dict = {
        "schema_version": SCHEMA_VERSION,
        "job": job.as_dict(),
        "orientable": {"top_cell": top_cell},
    }
    if job.family == "A":
        criterion = orientable_typeA(job.rank + 1, job.theta)
        agree = criterion == top_cell
        out["orientable"].update({"criterion": criterion, "agree": agree})
        if not agree:
            raise CrossCheckError(
                f"orientability criteria disagree for theta={sorted(job.theta)}"
            )
    return out


def report_sweep(job: JobSpec) -> dict:
    import itertools

    group = WeylGroup(root_system(job.family, job.rank))
    n = job.rank + 1
    rows = []
    for size in range(job.rank + 1):
        for theta_tuple in itertools.combinations(range(job.rank), size):
            theta = frozenset(theta_tuple)
            row: dict = {
                "theta": sorted(i + 1 for i in theta),
                "orientable": orientable_via_topcell(group, theta),
            }
            if job.family == "A":
                criterion = orientable_typeA(n, theta)
                if criterion != row["orientable"]:
                    raise CrossCheckError(
                        f"orientability criteria disagree for theta={sorted(theta)}"
                    )
                if n >= 3:
                    h1, h2 = h1_h2_closed_form(n, theta)
                    row["h1_torsion_rank"] = len(h1.torsion)
                    if h2 is not None:
                        row["h2_torsion_rank"] = len(h2.torsion)
            else:
                row["mod2_betti"] = poincare_mod2(group, theta)
            rows.append(row)
    return {
        "schema_version": SCHEMA_VERSION,
        "job": job.as_dict(),
        "sweep": rows,
    }


REPORTERS = {
    "roots": report_roots,
    "weyl": report_weyl,
    "coeffs": report_coeffs,
    "homology": report_homology,
    "orientability": report_orientability,
    "sweep": report_sweep,
}


# -- rendering ------------------------------------------------------------


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "?"
    if isinstance(value, list):
        return ",".join(_fmt(v) for v in value)
    if isinstance(value, dict):
        return ";".join(f"{k}={_fmt(v)}" for k, v in value.items())
    return str(value)


def _render_table(rows: list[dict], sep: str) -> list[str]:
    if not rows:
        return []
    headers = list(rows[0])
    lines = [sep.join(headers)]
    for row in rows:
        lines.append(sep.join(_fmt(row.get(h)) for h in headers))
    return lines


def render(report: dict, output_format: str) -> str:
    if output_format == "json":
        return json.dumps(report, indent=2, sort_keys=True)
    sep = "\t" if output_format == "tsv" else "  "
    lines: list[str] = []
    for key, value in report.items():
        if key in ("schema_version", "job"):
            continue
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"# {key}")
            lines.extend(_render_table(value, sep))
        elif isinstance(value, dict) and key == "matrices":
            lines.append("# matrices")
            for k in sorted(value, key=int):
                lines.append(f"d_{k}")
                for row in value[k]:
                    lines.append(sep.join(str(x) for x in row))
        else:
            lines.append(f"{key}{sep}{_fmt(value)}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        job = jobspec_from_args(args)
    except ValueError as exc:
        parser.exit(2, f"flaghom: error: {exc}\n")
    try:
        report = REPORTERS[job.command](job)
    except CrossCheckError as exc:
        print(f"flaghom: cross-check failure: {exc}", file=sys.stderr)
        return 1
    print(render(report, job.output_format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
