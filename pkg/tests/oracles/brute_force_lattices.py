"""Naive lattice counter used to pin the enumeration fixture.

Deliberately shares no code with the package.  Every finite lattice has a
labelling where bottom is 0, top is n-1 and the order refines the natural
order of the labels, so it suffices to try every transitive strict relation
on the middle points {1..n-2} that only relates i < j, keep the ones whose
bounded completion is a lattice, and collapse isomorphic copies by taking
the minimum relation code over all permutations of the middle points.

Run as a script to regenerate ``tests/fixtures/lattice_counts.json``.
"""
import json
import sys
import time
from itertools import combinations, permutations
from pathlib import Path

FIXTURE = Path(__file__).resolve().parent.parent / "fixtures" / "lattice_counts.json"


def _is_lattice(n, le):
    for a in range(n):
        for b in range(a + 1, n):
            lower = [c for c in range(n) if le[c][a] and le[c][b]]
            if sum(1 for m in lower if all(le[c][m] for c in lower)) != 1:
                return False
            upper = [c for c in range(n) if le[a][c] and le[b][c]]
            if sum(1 for m in upper if all(le[m][c] for c in upper)) != 1:
                return False
    return True


def count(n):
    if n <= 2:
        return 1
    middle = list(range(1, n - 1))
    pairs = list(combinations(middle, 2))
    classes = set()
    for mask in range(1 << len(pairs)):
        rel = {pairs[i] for i in range(len(pairs)) if mask >> i & 1}
        if any((a, c) not in rel for (a, b) in rel for (b2, c) in rel if b == b2):
            continue
        le = [[i == j or i == 0 or j == n - 1 for j in range(n)] for i in range(n)]
        for a, b in rel:
            le[a][b] = True
        if not _is_lattice(n, le):
            continue
        code = None
        for perm in permutations(middle):
            image = tuple(sorted((perm[a - 1], perm[b - 1]) for a, b in rel))
            if code is None or image < code:
                code = image
        classes.add(code)
    return len(classes)


def main(max_n=7):
    counts, timings = {}, {}
    for n in range(1, max_n + 1):
        t = time.perf_counter()
        counts[str(n)] = count(n)
        timings[str(n)] = round(time.perf_counter() - t, 3)
        print(f"n={n}: {counts[str(n)]} lattices ({timings[str(n)]}s)", flush=True)
    record = {
        "method": "naturally labelled strict relations on the middle points, "
                  "lattice filter, quotient by all permutations of the middle points",
        "script": "tests/oracles/brute_force_lattices.py",
        "counts": counts,
        "seconds": timings,
    }
    FIXTURE.write_text(json.dumps(record, indent=2) + "\n")
    return counts


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 7)
