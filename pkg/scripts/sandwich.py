"""Distribution of minimum forcing set sizes for random assignments.

    python3 scripts/sandwich.py --samples 200 --seed 0
"""
import argparse

from miura_forcing.experiments import SandwichConfig, run_sandwich


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--samples", type=int, default=SandwichConfig.samples)
    p.add_argument("--seed", type=int, default=SandwichConfig.seed)
    p.add_argument("--max", type=int, default=6, help="largest row and column count")
    args = p.parse_args()
    sizes = tuple(range(2, args.max + 1))
    cfg = SandwichConfig(rows=sizes, cols=sizes, samples=args.samples, seed=args.seed)
    print(f"{'size':>6} {'m+n-2':>6} {'ceil':>5} {'mean':>6}  greedy  histogram")
    for row in run_sandwich(cfg):
        flag = "ok" if row.within_bounds else "VIOLATION"
        print(
            f"{row.rows}x{row.cols:<4} {row.lower:>6} {row.upper:>5} {row.mean:>6.2f}  "
            f"{'ok' if row.greedy_ok else 'FAIL':>6}  {row.histogram} {flag}"
        )


if __name__ == "__main__":
    main()
