#!/usr/bin/env python3
"""Write numerical-range boundary CSVs for a gallery of showcase matrices.

Output files plot directly (re, im columns): a normal matrix collapses to a
segment, the nilpotent shift gives a disk, and a sectorial sample shows the
cone opening that the sector half-angle measures.
"""

import argparse
import math
import os

import numpy as np

import sectoria as s
from sectoria.cli import write_matrix


def gallery():
    yield "identity", np.eye(2)
    yield "segment", np.diag([1.0, 2.0])
    yield "disk", np.array([[0.0, 2.0], [0.0, 0.0]])
    yield "sectorial", s.gen_sectorial(4, math.pi / 4, 2024)
    yield "rotated_ad", np.exp(-1j * math.pi / 4) * s.gen_accretive_dissipative(4, 2024)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="boundary_csv")
    parser.add_argument("--points", type=int, default=720)
    parser.add_argument("--write-matrices", action="store_true",
                        help="also save each matrix as a JSON file for the CLI")
    args = parser.parse_args()

    os.makedirs(args.out_dir, exist_ok=True)
    for name, matrix in gallery():
        points = s.numerical_range_boundary(matrix, args.points)
        path = os.path.join(args.out_dir, f"{name}.csv")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("re,im\n")
            for z in points:
                fh.write(f"{float(z.real)!r},{float(z.imag)!r}\n")
        if args.write_matrices:
            write_matrix(os.path.join(args.out_dir, f"{name}.json"), matrix)
        print(f"{path}: {args.points} points")


if __name__ == "__main__":
    main()
