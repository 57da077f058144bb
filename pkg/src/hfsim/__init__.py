"""Distance and similarity measures for hesitant fuzzy sets, and ranking by ideal sets.

>>> from hfsim import HesitantSet, DistanceSpec, distance
>>> A = HesitantSet.from_mapping({"x": [0.5, 0.4]})
>>> B = HesitantSet.from_mapping({"x": [0.7, 0.4, 0.2]})
>>> round(distance(A, B, DistanceSpec("hamming")), 6)
0.133333
"""
from .continuous import (ContinuousDistance, ContinuousSimilarity, SampledHesitantFunction,
                         SampledWeightFunction, continuous_distance, continuous_similarity)
from .core import (ExtensionPolicy, HesitantElement, HesitantSet, Relation, compare_elements,
                   extend_pair, extend_to, is_quasi_subset, make_element, sets_equal, weight_vector)
from .distances import (Distance, DistanceSpec, distance, exponential_distance, max_distance)
from .documents import (HesitantPair, dump_pair, dump_problem, load_bundled, parse_document,
                        parse_pair, parse_problem)
from .errors import (BoundaryWarning, DegenerateScores, EmptyElement, GridMismatch, HFSError,
                     InvalidProblem, InvalidSpec, OutOfRange, ParseError, UniverseMismatch,
                     ValidationError, WeightNotNormalized)
from .madm import (DecisionProblem, RankingResult, ideal_alternatives, ideal_sets,
                   relative_similarity)
from .similarities import (Similarity, SimilaritySpec, Transform, set_theoretic_similarity,
                           similarity, similarity_from_distance)

__version__ = "0.1.0"
