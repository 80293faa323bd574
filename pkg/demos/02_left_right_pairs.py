"""
Which pairs of matrices give a forest?
======================================

(A, B) is a left-right pair when A(D) and B(D) do not meet. The integer
test a1*d2 <= b2*c1 or a2*d1 <= c2*b1 is compared here with a direct look
at the two slices, and a witness point is printed when they overlap.
"""

from moebius_forest import Matrix, disjointness_oracle, is_left_right_pair, slice_of, verify_pairs

candidates = [
    (Matrix(1, 1, 0, 1), Matrix(1, 0, 1, 1)),
    (Matrix(2, 1, 1, 1), Matrix(1, 0, 1, 1)),   # slices touch at 1
    (Matrix(1, 1, 1, 2), Matrix(1, 0, 1, 1)),   # nested slices
    (Matrix(1, 2, 0, 1), Matrix(1, 5, 0, 1)),   # two translations
]
for A, B in candidates:
    v = disjointness_oracle(A, B)
    print(f"A=({A}) {slice_of(A)}   B=({B}) {slice_of(B)}")
    print(f"   pair: {is_left_right_pair(A, B)}   witness: {v.witness}")

s = verify_pairs(8)
print("exhaustive check, entries <= 8:", s.to_json())
