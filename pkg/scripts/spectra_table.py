"""Tabulate sigma_2 and lambda_2 of the extremal families against their closed forms."""

import argparse
import math

from steklov_trees.closed_forms import crab_steklov, es_sigma_pm, spider_steklov
from steklov_trees.graph import FamilySpec
from steklov_trees.polynomials import smallest_real_root
from steklov_trees.quotients import crab_cubic
from steklov_trees.spectra import laplacian_spectrum, steklov_spectrum


def rows(n_max: int):
    for n in range(5, n_max + 1):
        fam = FamilySpec.crab(1, n - 3, 1)
        t = fam.build()
        yield fam, steklov_spectrum(t).kth(2), float(crab_steklov(1, n - 3, 1).values()[1]), laplacian_spectrum(t).kth(2), smallest_real_root(crab_cubic(n - 2))
    for n in range(7, n_max + 1):
        for m in range(3, n // 2 + 1):
            fam = FamilySpec.spider([(m - 1, 2), (n - 2 * m + 1, 1)])
            t = fam.build()
            yield fam, steklov_spectrum(t).kth(2), float(spider_steklov(m - 1, n - 2 * m + 1, 2, 1).values()[1]), laplacian_spectrum(t).kth(2), 4 * math.sin(math.pi / 10) ** 2
    for b in range(3, 7):
        fam = FamilySpec.es(b, 2)
        t = fam.build()
        yield fam, steklov_spectrum(t).kth(2), es_sigma_pm(b, 2)[0], laplacian_spectrum(t).kth(2), float("nan")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=12)
    args = ap.parse_args()
    print(f"{'family':22s} {'sigma_2':>14s} {'closed':>14s} {'lambda_2':>14s} {'closed':>14s}")
    for fam, s, sc, l, lc in rows(args.n_max):
        print(f"{str(fam):22s} {s:14.10f} {sc:14.10f} {l:14.10f} {lc:14.10f}")


if __name__ == "__main__":
    main()
