"""Count the same words four ways and watch the answers agree."""
from multidescent import DescentSet, count_naive, count_prefix
from multidescent import descent_count, count_via_jacobi_trudi

ds = DescentSet((2, 4))
print(f"descent set {ds}: words where positions 2 and 4 step down, "
      f"everything else steps up or stays")

# three copies of each of 1..3, so words have 9 cells
n, m = 3, 3
print(f"\nn={n}, m={m}")
print("  full enumeration :", count_naive(ds, n, m))
print("  prefix counting  :", count_prefix(ds, n, m))
print("  recurrence       :", descent_count(ds, n, m))
print("  determinant      :", count_via_jacobi_trudi(ds, n, m))

# the determinant route needs more cells than the largest descent; the other
# routes cover the degenerate corner on their own
print("\nsmall grid, all routes that apply:")
print(f"{'n':>3} {'m':>3} {'count':>8}")
for n in range(1, 5):
    for m in range(1, 4):
        value = descent_count(ds, n, m)
        assert value == count_prefix(ds, n, m)
        if n * m <= 12:
            assert value == count_naive(ds, n, m)
        if n * m > ds.largest:
            assert value == count_via_jacobi_trudi(ds, n, m)
        print(f"{n:>3} {m:>3} {value:>8}")

print("\nevery route agreed at every point")
