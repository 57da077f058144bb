import io
import json

import pytest

from hfsim import (HesitantPair, HesitantSet, ParseError, ValidationError, dump_pair, dump_problem,
                   load_bundled, parse_document, parse_pair, parse_problem)
from hfsim.cli import EXIT_INVALID, EXIT_OK, EXIT_TOLERANCE, run
from hfsim.documents import BUNDLED, bundled_text

PAIR = {"A": {"x1": [0.5, 0.4], "x2": [0.9]}, "B": {"x1": [0.7, 0.4, 0.2], "x2": [0.3, 0.1]},
        "weights": [0.25, 0.75]}


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def pair_file(tmp_path):
    f = tmp_path / "pair.json"
    f.write_text(json.dumps(PAIR))
    return str(f)


@pytest.fixture
def problem_file(tmp_path):
    f = tmp_path / "problem.json"
    f.write_text(bundled_text())
    return str(f)


def test_bundled_problem():
    prob = load_bundled()
    assert prob.names == ("H1", "H2", "H3", "H4", "H5")
    assert prob.attributes == ("x1", "x2", "x3", "x4")
    assert prob.weights == (0.15, 0.3, 0.2, 0.35)
    assert prob.alternatives[4][1]["x2"].values == (0.8, 0.7, 0.6, 0.4, 0.1)
    printed = load_bundled(BUNDLED[1])
    assert printed.alternatives[4][1]["x2"].values == (0.8, 0.7, 0.6, 0.4)


def test_grades_are_sorted_and_deduplicated():
    pair = parse_pair('{"A": {"x": [0.2, 0.7, 0.2]}, "B": {"x": [0.1]}}')
    assert pair.A["x"].values == (0.7, 0.2)
    assert pair.weights is None


@pytest.mark.parametrize("doc, reason", [
    ({"A": {"x": [1.2]}, "B": {"x": [0.1]}}, "OutOfRange"),
    ({"A": {"x": [0.2], "y": [0.1]}, "B": {"x": [0.1], "y": [0.2]}, "weights": [0.5, 0.6]},
     "WeightSum"),
    ({"A": {"x": [0.2]}, "B": {"x": [0.1]}, "weights": [0.5, 0.5]}, "WeightLength"),
    ({"A": {"x": [0.2], "y": [0.1]}, "B": {"x": [0.1], "y": [0.2]}, "weights": [1.5, -0.5]},
     "WeightRange"),
    ({"A": {"x": [0.2]}, "B": {"y": [0.1]}}, "UniverseMismatch"),
    ({"attributes": ["a", "b"], "weights": [0.5, 0.5],
      "alternatives": {"H1": [[0.1]], "H2": [[0.2], [0.3]]}}, "AttributeCount"),
])
def test_validation_errors(doc, reason):
    with pytest.raises(ValidationError) as info:
        parse_document(json.dumps(doc))
    assert info.value.reason == reason


def test_parse_error_location():
    with pytest.raises(ParseError) as info:
        parse_document('{"A": {"x": [0.2]},\n "B": {"x": [0.1]]}')
    assert info.value.location.startswith("line 2")
    with pytest.raises(ParseError) as info:
        parse_document('{"A": {"x": "high"}, "B": {"x": [0.1]}}')
    assert info.value.location == "A.x"
    with pytest.raises(ValidationError) as info:
        parse_document('{"A": {"x": []}, "B": {"x": [0.1]}}')
    assert info.value.reason == "EmptyElement"
    with pytest.raises(ParseError):
        parse_problem(json.dumps(PAIR))
    with pytest.raises(ParseError):
        parse_pair(bundled_text())


def test_round_trip():
    prob = load_bundled()
    text = dump_problem(prob)
    assert parse_problem(text) == prob
    assert dump_problem(parse_problem(text)) == text
    pair = parse_pair(json.dumps(PAIR))
    assert parse_pair(dump_pair(pair)) == pair
    bare = HesitantPair(pair.A, pair.B)
    assert parse_pair(dump_pair(bare)) == bare


def test_cli_distance_identical_is_zero(tmp_path):
    f = tmp_path / "same.json"
    f.write_text(json.dumps({"A": PAIR["A"], "B": PAIR["A"]}))
    for measure in ("hamming", "euclidean", "lp", "hamming-hausdorff"):
        code, out, _ = cli("distance", "--input", str(f), "--measure", measure, "--format", "csv")
        assert code == EXIT_OK
        header, row = out.splitlines()
        assert header == "p,value" and row.endswith(",0.000000")


def test_cli_distance_value(pair_file):
    code, out, _ = cli("distance", "--input", pair_file, "--measure", "hamming", "--format", "csv")
    # x1 pads A to (0.5, 0.4, 0.4): gaps 0.2, 0, 0.2; x2 pads A to (0.9, 0.9): gaps 0.6, 0.8
    assert code == EXIT_OK
    assert out == f"p,value\n1,{(0.4 / 3 + 0.7) / 2:.6f}\n"


def test_cli_multiple_p_and_weights(pair_file):
    code, out, _ = cli("distance", "--input", pair_file, "--measure", "type2-weighted",
                       "--p", "1,2", "6", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert [r["p"] for r in doc["results"]] == [1, 2, 6]
    code, out, _ = cli("similarity", "--input", pair_file, "--measure", "euclidean",
                       "--transform", "exponential", "--format", "csv")
    assert code == EXIT_OK and out.startswith("p,value\n2,")


@pytest.mark.xfail(strict=True, reason="the geometric-sum formula with its outer root gives "
                   "H5 ≻ H3 ≻ H4 ≻ H1 ≻ H2 at p=10; the reference ordering needs the root dropped")
def test_cli_rank_geometric_sum_p10(problem_file):
    code, out, _ = cli("rank", "--input", problem_file, "--measure", "geometric-sum", "--p", "10")
    assert code == EXIT_OK
    assert "ranking: H5 ≻ H3 ≻ H1 ≻ H2 ≻ H4" in out


def test_cli_rank_geometric_sum_p10_as_implemented(problem_file):
    code, out, _ = cli("rank", "--input", problem_file, "--measure", "geometric-sum", "--p", "10")
    assert code == EXIT_OK
    assert "ranking: H5 ≻ H3 ≻ H4 ≻ H1 ≻ H2" in out


def test_cli_rank_csv(problem_file):
    code, out, _ = cli("rank", "--input", problem_file, "--measure", "geometric-outer",
                       "--p", "1", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "p,alternative,score,rank"
    assert lines[5] == "1,H5,0.554699,1"


def test_cli_output_is_byte_stable(problem_file, pair_file):
    for argv in (("rank", "--input", problem_file, "--measure", "set-theoretic", "--format", "json"),
                 ("rank", "--input", problem_file, "--measure", "geometric-inner",
                  "--p", "1", "2", "--format", "csv"),
                 ("similarity", "--input", pair_file, "--measure", "geometric-sum",
                  "--format", "json")):
        first, second = cli(*argv), cli(*argv)
        assert first == second and first[0] == EXIT_OK
        if "json" in argv:
            json.loads(first[1])


def test_cli_reproduce_exit_codes(tmp_path):
    code, out, _ = cli("reproduce-paper")
    # the geometric-sum rows at p >= 2 and the set-theoretic row do not match
    assert code == EXIT_TOLERANCE
    assert "max abs deviation" in out
    code, out, _ = cli("reproduce-paper", "--format", "json")
    doc = json.loads(out)
    ok = {(r["measure"], r["p"]) for r in doc["rows"]
          if r["max_abs_deviation"] <= 2e-3 and r["ranking"] == r["reference_ranking"]}
    assert {("geometric-outer", p) for p in (1, 2, 6, 10)} <= ok
    assert {("geometric-inner", p) for p in (1, 2, 6, 10)} <= ok
    code, out, _ = cli("reproduce-paper", "--format", "csv")
    assert out.splitlines()[0] == "measure,p,alternative,score,reference,deviation,rank"
    printed = tmp_path / "printed.json"
    printed.write_text(bundled_text(BUNDLED[1]))
    assert cli("reproduce-paper", "--input", str(printed))[0] == EXIT_TOLERANCE


@pytest.mark.parametrize("content, argv", [
    ('{"A": {"x": [1.2]}, "B": {"x": [0.1]}}', ("distance", "--measure", "hamming")),
    ('{"A": {"x": [0.2]}, "B": {"x": [0.1]}', ("distance", "--measure", "hamming")),
    ('{"A": {"x": [0.2]}, "B": {"x": [0.1]}}', ("distance", "--measure", "type2-weighted")),
    ('{"A": {"x": [0.2]}, "B": {"x": [0.1]}}', ("distance", "--measure", "lp", "--p", "0.5")),
    ('{"A": {"x": [0.2]}, "B": {"x": [0.1]}}', ("distance", "--measure", "nope")),
    ('{"A": {"x": [0.2]}, "B": {"x": [0.1]}}', ("rank", "--measure", "geometric-inner")),
])
def test_cli_errors_exit_1(tmp_path, content, argv):
    f = tmp_path / "bad.json"
    f.write_text(content)
    code, out, err = cli(argv[0], "--input", str(f), *argv[1:])
    assert code == EXIT_INVALID
    assert out == ""


def test_cli_missing_file():
    code, _, err = cli("distance", "--input", "/nonexistent/x.json", "--measure", "hamming")
    assert code == EXIT_INVALID and "cannot read" in err
