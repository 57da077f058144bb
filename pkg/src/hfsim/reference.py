"""Reference relative-similarity scores for the bundled energy-project problem.

Keys are ``(measure, p)``; the set-theoretic row is unweighted and
independent of ``p`` (stored under ``p=None``). Scores are listed for
H1..H5 in order.
"""

REFERENCE_SCORES = {
    ("geometric-outer", 1): (0.4719, 0.47033, 0.5111, 0.47788, 0.5547),
    ("geometric-outer", 2): (0.46814, 0.48052, 0.5138, 0.46197, 0.55475),
    ("geometric-outer", 6): (0.47238, 0.48158, 0.52557, 0.4262, 0.55783),
    ("geometric-outer", 10): (0.47854, 0.47206, 0.53101, 0.40649, 0.56777),
    ("geometric-inner", 1): (0.4719, 0.47033, 0.5111, 0.47788, 0.5547),
    ("geometric-inner", 2): (0.47016, 0.46967, 0.50993, 0.48055, 0.55334),
    ("geometric-inner", 6): (0.47058, 0.45747, 0.51003, 0.48376, 0.54219),
    ("geometric-inner", 10): (0.47124, 0.4518, 0.51049, 0.48481, 0.5389),
    ("geometric-sum", 1): (0.4728, 0.4735, 0.51883, 0.4735, 0.54951),
    ("geometric-sum", 2): (0.46962, 0.48329, 0.51937, 0.45865, 0.55016),
    ("geometric-sum", 6): (0.4976, 0.49856, 0.50208, 0.4905, 0.50783),
    ("geometric-sum", 10): (0.49985, 0.49978, 0.50015, 0.49819, 0.50167),
    ("set-theoretic", None): (0.49857, 0.49975, 0.57059, 0.49975, 0.6122),
}

REFERENCE_RANKINGS = {
    ("geometric-outer", 1): "H5 ≻ H3 ≻ H4 ≻ H1 ≻ H2",
    ("geometric-outer", 2): "H5 ≻ H3 ≻ H2 ≻ H1 ≻ H4",
    ("geometric-outer", 6): "H5 ≻ H3 ≻ H2 ≻ H1 ≻ H4",
    ("geometric-outer", 10): "H5 ≻ H3 ≻ H1 ≻ H2 ≻ H4",
    ("geometric-inner", 1): "H5 ≻ H3 ≻ H4 ≻ H1 ≻ H2",
    ("geometric-inner", 2): "H5 ≻ H3 ≻ H4 ≻ H1 ≻ H2",
    ("geometric-inner", 6): "H5 ≻ H3 ≻ H4 ≻ H1 ≻ H2",
    ("geometric-inner", 10): "H5 ≻ H3 ≻ H4 ≻ H1 ≻ H2",
    ("geometric-sum", 1): "H5 ≻ H3 ≻ H2 ≻ H4 ≻ H1",
    ("geometric-sum", 2): "H5 ≻ H3 ≻ H2 ≻ H1 ≻ H4",
    ("geometric-sum", 6): "H5 ≻ H3 ≻ H2 ≻ H1 ≻ H4",
    ("geometric-sum", 10): "H5 ≻ H3 ≻ H1 ≻ H2 ≻ H4",
    ("set-theoretic", None): "H5 ≻ H3 ≻ H2 ≻ H4 ≻ H1",
}

REFERENCE_P = (1, 2, 6, 10)
TOLERANCE = 2e-3
