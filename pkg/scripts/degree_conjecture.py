#!/usr/bin/env python3
"""Scan small connected graphs for Snort temperatures above the degree.

Conjecture under test: t(Snort on B) <= max degree of B. Stars achieve
equality (K_{1,n} is ±n), so the scan reports the hottest games per
degree as well as any outright counterexample.
"""

import argparse
from collections import defaultdict

from hotgames import Dyadic, GameStore, graph_enumerate, snort_game, temperature


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-vertices", type=int, default=6)
    args = ap.parse_args()

    store = GameStore()
    hottest = defaultdict(lambda: Dyadic(-1))
    counterexamples = []
    scanned = 0
    for board in graph_enumerate(args.max_vertices, cap=args.max_vertices):
        scanned += 1
        t = temperature(snort_game(board, store))
        d = board.degree()
        hottest[d] = max(hottest[d], t)
        if not t <= Dyadic(d):
            counterexamples.append((board, t))

    print(f"connected graphs scanned (<= {args.max_vertices} vertices): {scanned}")
    for d in sorted(hottest):
        print(f"  max degree {d}: hottest temperature {hottest[d]}")
    if counterexamples:
        print(f"counterexamples found: {len(counterexamples)}")
        for board, t in counterexamples:
            print(f"  t = {t} > degree {board.degree()}:")
            print("    " + board.format().replace("\n", "; "))
    else:
        print("no counterexample: t <= degree on every scanned graph")


if __name__ == "__main__":
    main()
