"""Write T_N(k) curves for one, two and four deltas in natural units.

    python scripts/reproduce_figures.py --out figures/ [--plot]

Produces t1.csv, t2.csv, t4.csv (columns k,T,R) and, with --plot, a PNG per
curve.  Grid: k in [0.05, 10], 2000 points, L = 1, hbar^2/(2 m lambda) = 1.
"""
import argparse
from pathlib import Path

from deltacomb.cli import RunConfig, run_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="figures")
    ap.add_argument("--steps", type=int, default=2000)
    ap.add_argument("--plot", action="store_true", help="also save PNGs (needs matplotlib)")
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for n in (1, 2, 4):
        text = run_sweep(RunConfig("sweep", n=n, steps=args.steps, natural_units=True))
        path = out / f"t{n}.csv"
        path.write_text(text)
        print(f"wrote {path}")
        if args.plot:
            import matplotlib
            matplotlib.use("Agg")
            import matplotlib.pyplot as plt
            import numpy as np

            data = np.loadtxt(path, delimiter=",", skiprows=1)
            fig, ax = plt.subplots(figsize=(6, 3.5))
            ax.plot(data[:, 0], data[:, 1], lw=1)
            ax.set_xlabel("k")
            ax.set_ylabel(f"T_{n}")
            ax.set_ylim(0, 1.05)
            fig.tight_layout()
            fig.savefig(out / f"t{n}.png", dpi=150)
            plt.close(fig)


if __name__ == "__main__":
    main()
