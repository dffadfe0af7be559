"""Simplex reduction of VR complexes on a uniform sphere sample by their cores.

    python scripts/table1_sphere.py --n 500 --seed 0 --output table1.csv
"""

import argparse
import sys

import numpy as np

from deltacore.complexes import core_reduction_table
from deltacore.datasets import sphere
from deltacore.io import format_reduction_table
from deltacore.metric_space import PointCloud


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-scale", type=float, default=0.6)
    ap.add_argument("--steps", type=int, default=15)
    ap.add_argument("--max-dim", type=int, default=3)
    ap.add_argument("--output")
    args = ap.parse_args(argv)

    cloud = PointCloud(sphere(args.n, seed=args.seed))
    scales = np.linspace(0, args.max_scale, args.steps).tolist()
    text = format_reduction_table(core_reduction_table(cloud, scales, args.max_dim))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)


if __name__ == "__main__":
    main()
