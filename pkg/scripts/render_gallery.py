"""Write SVG and ASCII drawings of a few patterns into a directory."""
import argparse
from pathlib import Path

from miura_forcing import GridSize, RenderConfig, coloring_to_mv, diagonal_coloring, random_coloring, render_ascii, render_svg
from miura_forcing.core import PartialMVAssignment, standard_assignment
from miura_forcing.min_forcing import min_forcing_set


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("outdir", type=Path)
    p.add_argument("--alpha", type=float, default=RenderConfig.alpha)
    args = p.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    cfg = RenderConfig(alpha=args.alpha)
    size = GridSize(4, 6)
    diag = coloring_to_mv(diagonal_coloring(size))
    patterns = {
        "standard_4x6": standard_assignment(size),
        "diagonal_4x6": diag,
        "random_4x6": coloring_to_mv(random_coloring(size, 1)),
        # only the creases of a minimum forcing set; everything else drawn neutral
        "diagonal_4x6_forcing": diag.restrict(min_forcing_set(diagonal_coloring(size))),
        "empty_1x1": PartialMVAssignment(GridSize(1, 1), {}),
    }
    for name, a in patterns.items():
        (args.outdir / f"{name}.svg").write_text(render_svg(a, cfg))
        (args.outdir / f"{name}.txt").write_text(render_ascii(a))
        print(f"wrote {name}")


if __name__ == "__main__":
    main()
