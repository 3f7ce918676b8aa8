"""From a descent set to a ribbon to a determinant to a count.

Words with a prescribed descent set are fillings of a staircase-like skew
shape with no 2x2 block.  The count is then a signed sum over permutations
of products of bounded-multiset counts, one factor per nonzero degree.
"""
from multidescent import (
    DescentSet,
    count_naive,
    count_via_jacobi_trudi,
    jacobi_trudi_terms,
    rect_coeff,
    ribbon_shape,
)

ds = DescentSet((2, 4))
n, m = 3, 3

shape = ribbon_shape(ds, n, m)
print(f"descent set {ds}, n={n}, m={m}")
print(f"outer shape {shape.outer.parts}, inner shape {shape.inner.parts}")
print(f"{shape.cell_count} cells in {shape.row_count} rows, "
      f"row lengths {shape.row_lengths}")

# draw it: each row starts where the previous one ends, offset by one column
inner = shape.inner.padded(shape.row_count)
for outer_len, inner_len in zip(shape.outer.parts, inner):
    print("  " + ". " * inner_len + "# " * (outer_len - inner_len))

print("\ndeterminant expansion (sign, degrees of the factors):")
total = 0
for term in jacobi_trudi_terms(shape):
    # each factor h_d stands for the weakly increasing words of length d
    # over 1..n; the whole term contributes the matrices with those row
    # sums whose columns each sum to m, one contingency count per term
    value = rect_coeff(term.h_degrees, n, m)
    total += term.sign * value
    sign = "+" if term.sign > 0 else "-"
    print(f"  {sign} h{list(term.h_degrees)} -> {value}")

print(f"\nsigned total      : {total}")
print(f"direct count      : {count_naive(ds, n, m)}")
print(f"library determinant: {count_via_jacobi_trudi(ds, n, m)}")
assert total == count_naive(ds, n, m) == count_via_jacobi_trudi(ds, n, m)
