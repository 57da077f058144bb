"""
Distances between hesitant fuzzy sets
=====================================

Two sets on a three-element universe, compared with several distance
families. Shorter elements are padded with their smallest grade before
the grades are paired up.
"""
from hfsim import DistanceSpec, HesitantSet, distance, exponential_distance, max_distance
from hfsim.core import extend_pair
from hfsim.distances import common_lengths

A = HesitantSet.from_mapping({"x1": [0.5, 0.4], "x2": [0.9, 0.6], "x3": [0.3]})
B = HesitantSet.from_mapping({"x1": [0.7, 0.4, 0.2], "x2": [0.8], "x3": [0.6, 0.5, 0.1]})

# the padded pairs that every measure works on
for key in A.ids:
    a, b = extend_pair(A[key], B[key])
    print(key, a.values, b.values)

# normalized families stay in [0, 1]; the lp family grows with element length
lengths = common_lengths(A, B)
for family, p in [("hamming", 1), ("euclidean", 2), ("generalized", 3), ("type2-generalized", 3),
                  ("hamming-hausdorff", 1), ("lp", 3)]:
    spec = DistanceSpec(family, p)
    print(f"{family:20s} p={p}  d={distance(A, B, spec):.4f}  max={max_distance(spec, lengths):.4f}")

# as p grows the lp distance falls towards the Hamming-Hausdorff distance
hausdorff = distance(A, B, DistanceSpec("hamming-hausdorff"))
for p in (1, 2, 4, 16, 64):
    print(f"p={p:3d}  lp - hausdorff = {distance(A, B, DistanceSpec('lp', p)) - hausdorff:.4f}")

# weighted variants take one weight per universe element
w = (0.5, 0.3, 0.2)
print("type2-weighted", round(distance(A, B, DistanceSpec("type2-weighted", 2, w)), 4))

# any distance can be squashed into [0, 1] by the exponential normalization
print("exponential lp", round(exponential_distance(A, B, DistanceSpec("lp", 2)), 4))
