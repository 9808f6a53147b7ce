#!/usr/bin/env python3
"""Generate a set of demo matrix JSON files for playing with the CLI."""

import argparse
import math
import os

import numpy as np

import sectoria as s
from sectoria.cli import write_matrix


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="demo_matrices")
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--alpha", type=float, default=math.pi / 4)
    args = parser.parse_args()

    os.makedirs(args.out_dir, exist_ok=True)
    n, seed, alpha = args.n, args.seed, args.alpha
    matrices = {
        "identity": np.eye(n),
        "sectorial_a": s.gen_sectorial(n, alpha, s.child_seed(seed, 0)),
        "sectorial_b": s.gen_sectorial(n, alpha, s.child_seed(seed, 1)),
        "pd_a": s.gen_positive_definite(n, s.child_seed(seed, 2)),
        "pd_b": s.gen_positive_definite(n, s.child_seed(seed, 3)),
        "ad_a": s.gen_accretive_dissipative(n, s.child_seed(seed, 4)),
        "ad_b": s.gen_accretive_dissipative(n, s.child_seed(seed, 5)),
    }
    for name, matrix in matrices.items():
        path = os.path.join(args.out_dir, f"{name}.json")
        write_matrix(path, matrix)
        print(path)


if __name__ == "__main__":
    main()
