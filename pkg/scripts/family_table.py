#!/usr/bin/env python3
"""Vertex counts of the four classical graph-associahedron families.

Tabulates permutohedra (n!), associahedra (Catalan), cyclohedra (central
binomial) and stellohedra against three computation routes and checks the
shift recurrences against the vertex-deletion route on the defining graphs.

Usage:
    python scripts/family_table.py [--max-n 7] [--check-recurrences]
"""

import argparse

from nestoqsym.buildset import from_graph
from nestoqsym.invariants import (
    family_F,
    family_graph,
    family_recurrence_check,
    family_vertex_counts,
)
from nestoqsym.nestopoly import maximal_nested_sets
from nestoqsym.qsym import vertex_count


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--check-recurrences", action="store_true")
    args = ap.parse_args()

    kinds = ("permutohedron", "associahedron", "cyclohedron", "stellohedron")
    print(f"{'n':>3} {'pe':>8} {'as':>8} {'cy':>8} {'st':>8}")
    for n in range(1, args.max_n + 1):
        counts = family_vertex_counts(n)
        print(f"{n:>3} " + " ".join(f"{c:>8}" for c in counts))
        if n <= 7:
            for kind, expect in zip(kinds, counts):
                got = len(maximal_nested_sets(from_graph(family_graph(kind, n))))
                assert got == expect, (kind, n, got, expect)
                assert vertex_count(family_F(kind, n), n) == expect
    print("nested-set and specialization routes agree with the closed forms")

    if args.check_recurrences:
        for kind in kinds:
            ok = all(family_recurrence_check(kind, n) for n in range(1, args.max_n + 1))
            print(f"{kind}: shift recurrence matches the deletion route: {ok}")


if __name__ == "__main__":
    main()
