"""Scan T~(b, br+2) for both operators and compare with the extra special tree."""

import argparse
import csv
import sys

from steklov_trees.extremal import explore_conjecture


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--b", type=int, nargs="+", default=[3, 4])
    ap.add_argument("--r", type=int, default=1)
    args = ap.parse_args()
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["b", "r", "operator", "trees", "class_max", "conjectured", "gap", "es_is_argmax"])
    for b in args.b:
        for op in ("steklov", "laplacian"):
            rep = explore_conjecture(b, args.r, op)
            w.writerow([b, args.r, op, rep.n_trees, f"{rep.class_max:.15g}", f"{rep.conjectured_value:.15g}", f"{rep.gap:.3g}", rep.agrees])


if __name__ == "__main__":
    main()
