#!/usr/bin/env python3
"""Exploratory scan of how tight the sec-power constants are.

For random sectorial pairs this records the smallest exponent e that would
still make each bound hold, i.e. the observed requirement in

    sec^e(alpha) |det(A+B)|          >= ratio-sum determinant bound
    sec^e(alpha) Re((A+B)/(A11+B11)) >= Re(A/A11) + Re(B/B11)

and compares the worst observation against the proven exponents 3n - 2 and 2.
Unvalidated experiment: results are empirical only and not part of the
acceptance surface.
"""

import argparse
import math

import numpy as np

import sectoria as s


def needed_det_exponent(a, b, alpha):
    n = a.shape[0]
    dets_a = [abs(s.determinant(s.leading_principal_submatrix(a, k))) for k in range(1, n + 1)]
    dets_b = [abs(s.determinant(s.leading_principal_submatrix(b, k))) for k in range(1, n + 1)]
    sum_ba = sum(db / da for da, db in zip(dets_a[:-1], dets_b[:-1]))
    sum_ab = sum(da / db for da, db in zip(dets_a[:-1], dets_b[:-1]))
    rhs = (
        (1.0 + sum_ba) * dets_a[-1]
        + (1.0 + sum_ab) * dets_b[-1]
        + (2.0**n - 2 * n) * math.sqrt(dets_a[-1] * dets_b[-1])
    )
    base = abs(s.determinant(a + b))
    return math.log(rhs / base) / math.log(1.0 / math.cos(alpha))


def needed_loewner_exponent(a, b, alpha, p):
    lhs = s.cartesian_split(s.schur_complement(a + b, p)).re
    rhs = (
        s.cartesian_split(s.schur_complement(a, p)).re
        + s.cartesian_split(s.schur_complement(b, p)).re
    )
    # smallest c with sec^c L >= R: sec^c must cover the top generalized eigenvalue
    w, v = np.linalg.eigh(lhs)
    root_inv = (v * (1.0 / np.sqrt(w))) @ v.conj().T
    top = float(np.linalg.eigvalsh(root_inv @ rhs @ root_inv.conj().T)[-1])
    if top <= 0.0:
        return -math.inf
    return math.log(top) / math.log(1.0 / math.cos(alpha))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--trials", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--alphas",
        type=float,
        nargs="+",
        default=[math.pi / 6, math.pi / 4, math.pi / 3],
    )
    args = parser.parse_args()

    n = args.n
    p = max(n // 2, 1)
    print(f"n={n} trials={args.trials} proven exponents: det {3 * n - 2}, loewner 2")
    for alpha in args.alphas:
        worst_det = -math.inf
        worst_loewner = -math.inf
        for t in range(args.trials):
            a = s.gen_sectorial(n, alpha, s.child_seed(args.seed, t, 0))
            b = s.gen_sectorial(n, alpha, s.child_seed(args.seed, t, 1))
            worst_det = max(worst_det, needed_det_exponent(a, b, alpha))
            worst_loewner = max(worst_loewner, needed_loewner_exponent(a, b, alpha, p))
        print(
            f"alpha={alpha:.4f}  max needed det exponent {worst_det:8.4f} "
            f"(proven {3 * n - 2})  max needed loewner exponent {worst_loewner:8.4f} (proven 2)"
        )


if __name__ == "__main__":
    main()
