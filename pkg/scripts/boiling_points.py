#!/usr/bin/env python3
"""Class scans: confusion-interval statistics and boiling-point bounds.

Recomputes the two headline class bounds:
  * Domineering snakes fitting 2xn  -> ell <= 2, boiling point <= 3
  * Snort decorated paths           -> ell <= 5, boiling point <= 15/2
and prints how much slack the scanned positions actually leave.
"""

import argparse

from hotgames import GameStore, class_scan, dom_game, snake_enumerate, snort_game
from hotgames.tables import snort_path_board


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--snake-width", type=int, default=8)
    ap.add_argument("--path-len", type=int, default=10)
    args = ap.parse_args()

    store = GameStore()

    snakes = [dom_game(b, store) for b in snake_enumerate(args.snake_width)]
    report = class_scan(snakes, f"domineering snakes fitting 2x{args.snake_width}")
    print(report.class_label)
    print(f"  positions {report.positions_scanned}, K = {report.max_ell}, "
          f"J = {report.max_ell_options}")
    print(f"  bound K/2 + J = {report.bp_bound}, hottest seen {report.max_observed_temp}")

    paths = []
    for family in ("P", "LP", "LPL", "LPR"):
        for n in range(1, args.path_len + 1):
            board = snort_path_board(family, n)
            if board is not None:
                paths.append(snort_game(board, store))
    report = class_scan(paths, f"snort decorated paths, n <= {args.path_len}")
    print(report.class_label)
    print(f"  positions {report.positions_scanned}, K = {report.max_ell}, "
          f"J = {report.max_ell_options}")
    print(f"  bound K/2 + J = {report.bp_bound}, hottest seen {report.max_observed_temp}")


if __name__ == "__main__":
    main()
