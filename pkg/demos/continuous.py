"""
Measures on a continuous universe
=================================

A hesitant function on an interval is sampled on a grid and the measures
are integrated with the trapezoid rule. Refining the grid shows the
quadrature settling down.
"""
import numpy as np

from hfsim import (SampledHesitantFunction, SampledWeightFunction, continuous_distance,
                   continuous_similarity)


def opinions(x):
    # two experts drift apart along the interval, a third stays put
    return [0.5 + 0.4 * np.sin(x), 0.5 - 0.3 * np.sin(x), 0.4]


def consensus(x):
    return [0.6, 0.5]


for n in (5, 9, 17, 33, 65):
    nodes = np.linspace(0, np.pi, n)
    A = SampledHesitantFunction.sample(opinions, nodes)
    B = SampledHesitantFunction.sample(consensus, nodes)
    d = continuous_distance(A, B, p=2, variant="type2-normalized")
    s = continuous_similarity(A, B, p=2, variant="set-theoretic-normalized")
    print(f"n={n:3d}  distance={d:.6f}  set-theoretic similarity={s:.6f}")

# a weight density that favours the middle of the interval
nodes = np.linspace(0, np.pi, 65)
dens = np.sin(nodes)
w = SampledWeightFunction(nodes, dens / np.trapezoid(dens, nodes))
A = SampledHesitantFunction.sample(opinions, nodes)
B = SampledHesitantFunction.sample(consensus, nodes)
print("weighted", round(continuous_distance(A, B, w, p=2, variant="type2-weighted"), 6))
print("uniform ", round(continuous_distance(A, B, p=2, variant="type2-normalized"), 6))
