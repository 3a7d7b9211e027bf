"""Exact minimum forcing sets of the standard and diagonal patterns.

Shows the standard pattern sitting at ceil(mn/2) (with the domino construction
matching it) and the diagonal pattern at m+n-2, including odd-by-odd sizes.
"""
import argparse

from miura_forcing.experiments import ExtremesConfig, run_extremes


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-rows", type=int, default=ExtremesConfig.max_rows)
    p.add_argument("--max-cols", type=int, default=ExtremesConfig.max_cols)
    args = p.parse_args()
    print(f"{'size':>6} {'standard':>9} {'domino':>7} {'diagonal':>9}")
    for r in run_extremes(ExtremesConfig(args.max_rows, args.max_cols)):
        mark = "" if r.standard_min == r.domino else "  (domino not minimum)"
        print(f"{r.rows}x{r.cols:<4} {r.standard_min:>9} {r.domino:>7} {r.diagonal_min:>9}{mark}")


if __name__ == "__main__":
    main()
