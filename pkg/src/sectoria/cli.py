"""Command line front end: matrix file I/O, single inequality checks,
randomized trial suites, and numerical-range boundary export.

Exit codes: 0 success (check holds / suite clean), 1 usage or parse error,
2 precondition failure (e.g. operand not sectorial), 3 inequality violated.
For ``trials schur-wrongsec`` the meaning of 0 flips: the suite succeeds
exactly when a counterexample is found.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import statistics
import sys
from dataclasses import dataclass

import numpy as np

from . import claim2 as claim2_mod
from . import inequalities as ineq
from . import linalg, sector
from .errors import SectoriaError
from .generators import (
    TrialConfig,
    child_seed,
    gen_accretive_dissipative,
    gen_positive_definite,
    gen_sectorial,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_VIOLATION = 3

PD_PAIR_CHECKS = ("det-superadditivity", "haynsworth", "hartfiel", "schur-pd")
SECTORIAL_PAIR_CHECKS = ("main1", "main2", "det-step")
SINGLE_MATRIX_CHECKS = (
    "lemma-2-4",
    "lemma-2-5",
    "lemma-2-6",
    "claim1",
    "weak-log-major",
    "schur-wrongsec",
)
ALL_CHECKS = PD_PAIR_CHECKS + SECTORIAL_PAIR_CHECKS + SINGLE_MATRIX_CHECKS + (
    "corollary-ad",
    "claim2",
)
ALPHA_CHECKS = set(SECTORIAL_PAIR_CHECKS)
PARTITION_CHECKS = {"schur-pd", "lemma-2-5", "claim1", "main1", "schur-wrongsec"}


class UsageError(Exception):
    """Bad flags or operands; maps to exit code 1."""


class MatrixFileError(Exception):
    """Malformed matrix file; maps to exit code 1."""


def read_matrix(path: str) -> np.ndarray:
    """Read a matrix file: JSON object {n, re, im} with n-by-n real arrays."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise MatrixFileError(f"{path}: {exc}") from exc
    try:
        n = int(doc["n"])
        re = np.array(doc["re"], dtype=float)
        im = np.array(doc["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise MatrixFileError(f"{path}: expected JSON object with n, re, im") from exc
    if re.shape != (n, n) or im.shape != (n, n) or n < 1:
        raise MatrixFileError(f"{path}: re and im must both be {n}-by-{n}")
    if not (np.all(np.isfinite(re)) and np.all(np.isfinite(im))):
        raise MatrixFileError(f"{path}: entries must be finite")
    return re + 1j * im


def write_matrix(path: str, a) -> None:
    """Write a matrix file; float round-trip is exact via repr formatting."""
    m = linalg.as_square_matrix(a)
    n = m.shape[0]
    doc = {
        "n": n,
        "re": [[float(v) for v in row] for row in m.real],
        "im": [[float(v) for v in row] for row in m.imag],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def _resolve_tol(args) -> float:
    if getattr(args, "tol", None) is not None:
        return float(args.tol)
    env = os.environ.get("SECTORIA_TOL")
    if env is not None:
        try:
            return float(env)
        except ValueError as exc:
            raise UsageError(f"SECTORIA_TOL is not a number: {env!r}") from exc
    return ineq.DEFAULT_TOL


def _default_partition(n: int) -> int:
    return max(n // 2, 1)


def _sequences_from_matrix(m: np.ndarray) -> np.ndarray:
    """|det A_k| for k = 0..n (with the empty determinant equal to 1)."""
    dets = [1.0]
    for k in range(1, m.shape[0] + 1):
        dets.append(abs(linalg.determinant(linalg.leading_principal_submatrix(m, k))))
    return np.array(dets)


def run_check(
    name: str,
    a: np.ndarray,
    b: np.ndarray | None,
    alpha: float | None,
    partition: int | None,
    tol: float,
) -> ineq.InequalityReport:
    """Dispatch a named check against parsed operands."""
    if name not in ALL_CHECKS:
        raise UsageError(f"unknown check {name!r}; available: {', '.join(ALL_CHECKS)}")
    needs_b = name not in SINGLE_MATRIX_CHECKS
    if needs_b and b is None:
        raise UsageError(f"check {name!r} requires two matrix files")
    if not needs_b and b is not None:
        raise UsageError(f"check {name!r} takes a single matrix file")
    if name in ALPHA_CHECKS and alpha is None:
        raise UsageError(f"check {name!r} requires --alpha")

    n = a.shape[0]
    p = partition if partition is not None else _default_partition(n)

    if name == "det-superadditivity":
        return ineq.check_det_superadditivity(a, b, tol)
    if name == "haynsworth":
        return ineq.check_haynsworth(a, b, tol)
    if name == "hartfiel":
        return ineq.check_hartfiel(a, b, tol)
    if name == "schur-pd":
        return ineq.check_schur_pd(a, b, p, tol)
    if name == "lemma-2-4":
        return ineq.check_inverse_real_part(a, tol)
    if name == "lemma-2-5":
        return ineq.check_schur_real_part(a, p, tol)
    if name == "lemma-2-6":
        return ineq.check_ostrowski_taussky_complement(a, tol)
    if name == "claim1":
        return ineq.check_claim1(a, p, tol)
    if name == "weak-log-major":
        return ineq.check_weak_log_majorization(a, tol)
    if name == "schur-wrongsec":
        return ineq.check_schur_wrongsec(a, p, tol)
    if name == "main1":
        return ineq.check_main1(a, b, alpha, p, tol)
    if name == "main2":
        return ineq.check_main2(a, b, alpha, tol)
    if name == "det-step":
        if partition is not None:
            return ineq.check_det_step(a, b, alpha, partition, tol)
        reports = [ineq.check_det_step(a, b, alpha, k, tol) for k in range(1, n)]
        return min(reports, key=lambda r: r.slack)
    if name == "corollary-ad":
        return ineq.check_corollary_ad(a, b, tol)
    if name == "claim2":
        da = _sequences_from_matrix(a)
        db = _sequences_from_matrix(b)
        if np.any(da[1:] <= 0.0) or np.any(db[1:] <= 0.0):
            raise SectoriaError("a principal minor is singular; sequences must be positive")
        pair = claim2_mod.PositiveSequencePair(da, db)
        return claim2_mod.check_claim2(pair, tol)
    raise AssertionError(name)


@dataclass(frozen=True)
class SuiteSummary:
    """Aggregate of one randomized trial suite."""

    name: str
    trials: int
    failures: int
    min_slack: float
    median_slack: float
    seed: int
    n: int
    alpha: float
    partition: int | None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "trials": self.trials,
            "failures": self.failures,
            "min_slack": self.min_slack,
            "median_slack": self.median_slack,
            "config": {
                "seed": self.seed,
                "n": self.n,
                "alpha": self.alpha,
                "partition": self.partition,
            },
        }


def _trial_report(name: str, config: TrialConfig, index: int, tol: float) -> ineq.InequalityReport:
    n, alpha = config.n, config.alpha
    p = config.partition if config.partition is not None else _default_partition(n)
    if name == "claim2":
        pair = claim2_mod.random_sequence_pair(n, child_seed(config.seed, index))
        return claim2_mod.check_claim2(pair, tol)
    if name in PD_PAIR_CHECKS:
        a = gen_positive_definite(n, child_seed(config.seed, index, 0))
        b = gen_positive_definite(n, child_seed(config.seed, index, 1))
        return run_check(name, a, b, alpha, p, tol)
    if name == "corollary-ad":
        a = gen_accretive_dissipative(n, child_seed(config.seed, index, 0))
        b = gen_accretive_dissipative(n, child_seed(config.seed, index, 1))
        return ineq.check_corollary_ad(a, b, tol)
    if name in SECTORIAL_PAIR_CHECKS:
        a = gen_sectorial(n, alpha, child_seed(config.seed, index, 0))
        b = gen_sectorial(n, alpha, child_seed(config.seed, index, 1))
        if name == "det-step" and config.partition is None:
            reports = [ineq.check_det_step(a, b, alpha, k, tol) for k in range(1, n)]
            return min(reports, key=lambda r: r.slack)
        return run_check(name, a, b, alpha, config.partition, tol)
    if name in SINGLE_MATRIX_CHECKS:
        a = gen_sectorial(n, alpha, child_seed(config.seed, index))
        return run_check(name, a, None, alpha, p, tol)
    raise UsageError(f"unknown check {name!r}; available: {', '.join(ALL_CHECKS)}")


def run_trials(name: str, config: TrialConfig, tol: float) -> SuiteSummary:
    """Run ``config.trials`` independent trials of a named check.

    Trials draw from substreams indexed by trial number, so the summary is
    identical no matter how the trials would be scheduled.
    """
    reports = [_trial_report(name, config, i, tol) for i in range(config.trials)]
    slacks = [r.slack for r in reports]
    return SuiteSummary(
        name=name,
        trials=config.trials,
        failures=sum(1 for r in reports if not r.holds),
        min_slack=min(slacks),
        median_slack=float(statistics.median(slacks)),
        seed=config.seed,
        n=config.n,
        alpha=config.alpha,
        partition=config.partition,
    )


def _cmd_angle(args) -> int:
    m = read_matrix(args.file)
    dec = sector.sectorial_decompose(m)
    print(f"alpha_rad {dec.angle!r}")
    print(f"alpha_deg {math.degrees(dec.angle)!r}")
    print("thetas " + " ".join(repr(float(t)) for t in dec.thetas))
    return EXIT_OK


def _cmd_check(args) -> int:
    if args.alpha is not None and not 0.0 <= args.alpha < math.pi / 2:
        raise UsageError("--alpha must lie in [0, pi/2)")
    tol = _resolve_tol(args)
    a = read_matrix(args.file_a)
    b = read_matrix(args.file_b) if args.file_b is not None else None
    report = run_check(args.name, a, b, args.alpha, args.partition, tol)
    print(json.dumps(report.to_dict()))
    return EXIT_OK if report.holds else EXIT_VIOLATION


def _cmd_trials(args) -> int:
    if args.name not in ALL_CHECKS:
        raise UsageError(f"unknown check {args.name!r}; available: {', '.join(ALL_CHECKS)}")
    tol = _resolve_tol(args)
    try:
        config = TrialConfig(
            seed=args.seed,
            n=args.n,
            alpha=args.alpha,
            trials=args.trials,
            partition=args.partition,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    summary = run_trials(args.name, config, tol)
    print(json.dumps(summary.to_dict()))
    if args.name == "schur-wrongsec":
        return EXIT_OK if summary.failures > 0 else EXIT_VIOLATION
    return EXIT_OK if summary.failures == 0 else EXIT_VIOLATION


def _cmd_boundary(args) -> int:
    if args.points < 3:
        raise UsageError("--points must be at least 3")
    m = read_matrix(args.file)
    points = sector.numerical_range_boundary(m, args.points)
    lines = ["re,im"] + [f"{float(p.real)!r},{float(p.imag)!r}" for p in points]
    text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sectoria", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_angle = sub.add_parser("angle", help="sector half-angle and angle vector of a matrix")
    p_angle.add_argument("file", help="matrix JSON file {n, re, im}")
    p_angle.set_defaults(func=_cmd_angle)

    p_check = sub.add_parser("check", help="run one named inequality check")
    p_check.add_argument("name", help=f"one of: {', '.join(ALL_CHECKS)}")
    p_check.add_argument("file_a", help="matrix JSON file for A")
    p_check.add_argument("file_b", nargs="?", default=None, help="matrix JSON file for B")
    p_check.add_argument("--alpha", type=float, default=None, help="sector half-angle (radians)")
    p_check.add_argument("--partition", type=int, default=None, help="leading block size p (or k for det-step)")
    p_check.add_argument("--tol", type=float, default=None, help="slack tolerance (default 1e-8)")
    p_check.set_defaults(func=_cmd_check)

    p_trials = sub.add_parser("trials", help="randomized trial suite for one check")
    p_trials.add_argument("name", help=f"one of: {', '.join(ALL_CHECKS)}")
    p_trials.add_argument("--seed", type=int, default=0)
    p_trials.add_argument("--n", type=int, required=True, help="matrix dimension")
    p_trials.add_argument("--alpha", type=float, default=0.0, help="sector half-angle (radians)")
    p_trials.add_argument("--trials", type=int, default=100)
    p_trials.add_argument("--partition", type=int, default=None)
    p_trials.add_argument("--tol", type=float, default=None)
    p_trials.set_defaults(func=_cmd_trials)

    p_boundary = sub.add_parser("boundary", help="export numerical-range boundary points as CSV")
    p_boundary.add_argument("file", help="matrix JSON file")
    p_boundary.add_argument("--points", type=int, default=360, help="number of boundary points")
    p_boundary.add_argument("--out", default=None, help="output CSV path (default stdout)")
    p_boundary.set_defaults(func=_cmd_boundary)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MatrixFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SectoriaError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def entry() -> None:
    raise SystemExit(main())
