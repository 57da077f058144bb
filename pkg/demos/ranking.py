"""
Ranking energy projects
=======================

Five projects rated on four attributes. Each project is scored by how
much closer it is to the best possible ratings than to the worst ones,
and the ranking is compared across measures and orders p.
"""
from hfsim import SimilaritySpec, ideal_alternatives, load_bundled, relative_similarity

problem = load_bundled()
print("attributes", problem.attributes, "weights", problem.weights)

# ideal ratings take the best and worst padded grade at each position
best, worst = ideal_alternatives(problem)
for key in problem.attributes:
    print(key, "best", best[key].values, "worst", worst[key].values)

for family in ("geometric-outer", "geometric-inner", "geometric-sum"):
    for p in (1, 2, 6, 10):
        res = relative_similarity(problem, SimilaritySpec(family, p=p))
        scores = " ".join(f"{s:.4f}" for s in res.scores)
        print(f"{family:16s} p={p:2d}  {scores}  {res.ranking_string()}")

res = relative_similarity(problem, SimilaritySpec("set-theoretic"), use_weights=False)
print("set-theoretic (unweighted)", " ".join(f"{s:.4f}" for s in res.scores), res.ranking_string())
