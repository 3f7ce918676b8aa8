"""The stabilized count in closed form, and its slice-by-last-value anatomy."""
from multidescent import (
    DescentSet,
    count_prefix,
    last_fixed_formula,
    stabilization_point,
    stable_descent_count,
)

ds = DescentSet((2, 4, 5))
point = stabilization_point(ds)

print(f"descent set {ds}, stabilized from multiplicity {point} on")
print(f"{'n':>3} {'enumerated':>12} {'closed form':>12}")
for n in range(ds.largest, ds.largest + 5):
    enumerated = count_prefix(ds, n, point)
    closed = stable_descent_count(ds, n)
    assert enumerated == closed
    print(f"{n:>3} {enumerated:>12} {closed:>12}")

# the closed form splits over the value sitting in the last tracked cell;
# a word ending its prefix in 1 can never be extended, so the slices start
# at last value 2
n = ds.largest + 2
slices = [last_fixed_formula(ds, n, j) for j in range(2, n + 1)]
print(f"\nn={n}: slices by last value {slices}")
print(f"sum of slices = {sum(slices)}, "
      f"stabilized count = {stable_descent_count(ds, n)}")
assert sum(slices) == stable_descent_count(ds, n)

# the formula is a polynomial, so it also evaluates where no words exist;
# those values are what the coefficient extraction in demo 05 interpolates
print("\npolynomial values at small and negative n:",
      [stable_descent_count(ds, n) for n in range(-3, 4)])
