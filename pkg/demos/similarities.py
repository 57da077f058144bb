"""
Similarity measures
===================

Geometric similarities subtract a distance-like term from one, the
set-theoretic one compares summed minima to summed maxima, and any
distance can be turned into a similarity through a decreasing map.
"""
from hfsim import DistanceSpec, HesitantSet, SimilaritySpec, similarity

A = HesitantSet.from_mapping({"x1": [0.5, 0.4], "x2": [0.9, 0.6], "x3": [0.3]})
B = HesitantSet.from_mapping({"x1": [0.7, 0.4, 0.2], "x2": [0.8], "x3": [0.6, 0.5, 0.1]})
w = (0.5, 0.3, 0.2)

for family in ("geometric-outer", "geometric-inner", "geometric-sum"):
    row = [similarity(A, B, SimilaritySpec(family, p, w)) for p in (1, 2, 6)]
    print(f"{family:16s}", " ".join(f"{s:.4f}" for s in row))

print("set-theoretic   ", round(similarity(A, B, SimilaritySpec("set-theoretic")), 4))

# the three transforms rescale so that d = 0 maps to 1 and d = d_max maps to 0
base = DistanceSpec("lp", 2)
for t in ("linear", "exponential", "reciprocal"):
    s = similarity(A, B, SimilaritySpec("from-distance", base=base, transform=t))
    print(f"from lp via {t:11s} {s:.4f}")

# identical sets are always fully similar
print(similarity(A, A, SimilaritySpec("geometric-sum", 3, w)))
