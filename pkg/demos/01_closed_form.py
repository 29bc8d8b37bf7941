"""The closed-form partition number and its color-count threshold.

For r >= 2 colors there is a unique threshold t with
C(t,2)+2 <= r <= C(t+1,2)+1, and an r-edge-colored complete graph K_n needs
at most ceil((n-t)/2) vertex-disjoint rainbow trees, with some coloring
attaining that number.  This script prints the threshold bands and a value
table.

Run: python demos/01_closed_form.py
"""

from math import comb

from rainbowtrees import f_of_r, partition_number, r_range_for_t

print("threshold bands (all color counts sharing one t)")
for t in range(1, 9):
    lo, hi = r_range_for_t(t)
    print(f"  t={t}: r in [{lo}, {hi}]")

print("\nspot checks of f(r)")
for r in (2, 5, 7, 8, 11, 12, 45):
    print(f"  f({r}) = {f_of_r(r)}")

print("\npartition number table: rows n, columns r (dot = no such coloring)")
ns = range(3, 11)
rs = range(1, comb(10, 2) + 1)
header = "  n\\r " + " ".join(f"{r:>2}" for r in rs)
print(header)
for n in ns:
    row = []
    for r in rs:
        row.append(f"{partition_number(n, r):>2}" if r <= comb(n, 2) else " .")
    print(f"  {n:>3} " + " ".join(row))

print("\nfixed n, increasing r: the value never goes up")
n = 9
values = [partition_number(n, r) for r in range(1, comb(n, 2) + 1)]
print(f"  n={n}: {values}")
assert all(a >= b for a, b in zip(values, values[1:]))

print("\na fully rainbow K_n always packs into a single tree:")
for n in (4, 7, 10):
    print(f"  n={n}, r=C(n,2)={comb(n, 2)}: value = {partition_number(n, comb(n, 2))}")
