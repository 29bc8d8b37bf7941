"""Exact minimum rainbow tree partitions at desk scale.

The solver runs a dynamic program over vertex subsets; a subset can become a
tree exactly when its induced edges contain a rainbow spanning tree, decided
by matroid intersection (graphic matroid x color partition matroid).

Run: python demos/03_exact_solver.py
"""

import random

from rainbowtrees import (
    format_partition,
    generate_canonical,
    monochromatic_complete,
    partition_number,
    rainbow_complete,
    random_surjective_coloring,
    solve,
    solve_bruteforce,
)

print("classic instances")
for name, c in (
    ("monochromatic K_6", monochromatic_complete(6)),
    ("rainbow K_6", rainbow_complete(6)),
    ("canonical K_6 r=5", generate_canonical(6, 5)[0]),
    ("canonical K_9 r=4", generate_canonical(9, 4)[0]),
):
    res = solve(c)
    print(f"  {name:<22} -> {res.count} trees "
          f"(feasibility checks: {res.stats['feasibility_checks']})")

print("\none optimal partition for canonical K_6 r=5:")
res = solve(generate_canonical(6, 5)[0])
print(format_partition(res.partition), end="")

print("\nrandom colorings stay at or below the worst case")
rng = random.Random(1)
for _ in range(6):
    n = rng.randint(5, 9)
    r = rng.randint(2, n * (n - 1) // 2)
    c = random_surjective_coloring(n, r, rng)
    got = solve(c).count
    print(f"  n={n} r={r:>2}: exact={got}  worst-case={partition_number(n, r)}")

print("\ncross-check against the set-partition brute force (n <= 7)")
agreements = 0
for _ in range(40):
    n = rng.randint(2, 7)
    r = rng.randint(1, n * (n - 1) // 2)
    c = random_surjective_coloring(n, r, rng)
    assert solve(c).count == solve_bruteforce(c)
    agreements += 1
print(f"  {agreements}/40 random instances agree")
