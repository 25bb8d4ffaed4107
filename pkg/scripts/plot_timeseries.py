#!/usr/bin/env python3
"""Plot an emitted CSV time series (needs matplotlib, see the 'plots' extra)."""

import argparse
import csv
from pathlib import Path


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("csv_path", help="file produced by 'spinpair simulate' or 'preset'")
    parser.add_argument("--out", help="write a PNG here instead of opening a window")
    parser.add_argument("--purity", action="store_true", help="also draw the purity column")
    args = parser.parse_args()

    import matplotlib

    if args.out:
        matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    with open(args.csv_path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise SystemExit("no data rows in the file")
    t = [float(r["t"]) for r in rows]

    fig, ax = plt.subplots(figsize=(9, 5))
    ax.plot(t, [float(r["lqfi"]) for r in rows], "r-", label="LQFI")
    ax.plot(t, [float(r["lqu"]) for r in rows], "b-.", label="LQU")
    ax.plot(t, [float(r["log_negativity"]) for r in rows], "g--", label="log-negativity")
    if args.purity:
        ax.plot(t, [float(r["purity"]) for r in rows], "k:", label="purity")
    ax.set_xlabel("t")
    ax.set_ylabel("correlation")
    ax.set_ylim(-0.02, 1.02)
    ax.legend()
    ax.set_title(Path(args.csv_path).stem)
    fig.tight_layout()
    if args.out:
        fig.savefig(args.out, dpi=150)
        print(f"wrote {args.out}")
    else:
        plt.show()


if __name__ == "__main__":
    main()
