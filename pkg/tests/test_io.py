"""Problem files: the JSON schema, the canonical writer, the CSV importer."""

import json

import pytest

from iftopsis.errors import ProblemFormatError
from iftopsis.problem_io import (
    BUNDLED_PROBLEMS,
    DATA_DIR_ENV,
    data_dir,
    dump_problem,
    load_matrix_csv,
    load_problem,
    parse_problem,
    problem_from_csv,
    resolve_problem_path,
    save_problem,
)
from iftopsis.topsis import DecisionProblem, IfvWeights, ScalarWeights
from iftopsis.values import IFV

GOOD = {
    "alternatives": ["A1", "A2"],
    "attributes": [{"name": "O1", "kind": "benefit"}, {"name": "O2", "kind": "cost"}],
    "weights": {"scalar": [0.6, 0.4]},
    "matrix": [[[0.6, 0.3], [0.5, 0.2]], [[0.4, 0.4], [0.7, 0.1]]],
}


def doc(**overrides):
    d = {k: json.loads(json.dumps(v)) for k, v in GOOD.items()}
    d.update(overrides)
    return json.dumps(d)


class TestParse:
    def test_good_document(self):
        p = parse_problem(doc())
        assert p.alternatives == ("A1", "A2")
        assert p.attributes[1].kind == "cost"
        assert isinstance(p.weights, ScalarWeights)
        assert p.matrix[1][0] == IFV(0.4, 0.4)

    def test_ifv_weights(self):
        p = parse_problem(doc(weights={"ifv": [[1.0, 0.0], [0.9, 0.05]]}))
        assert isinstance(p.weights, IfvWeights)
        assert p.weights.values[1] == IFV(0.9, 0.05)

    def test_attribute_kind_defaults_to_benefit(self):
        p = parse_problem(doc(attributes=[{"name": "O1"}, {"name": "O2"}]))
        assert all(a.kind == "benefit" for a in p.attributes)

    def test_syntax_error_located(self):
        with pytest.raises(ProblemFormatError, match=r"line 1 column 1"):
            parse_problem("not json")

    def test_source_name_in_message(self):
        with pytest.raises(ProblemFormatError, match=r"^budget\.json:"):
            parse_problem("[]", source="budget.json")

    def test_top_level_must_be_object(self):
        with pytest.raises(ProblemFormatError, match="top level"):
            parse_problem("[]")

    def test_missing_key(self):
        d = json.loads(doc())
        del d["weights"]
        with pytest.raises(ProblemFormatError, match="missing key 'weights'"):
            parse_problem(json.dumps(d))

    def test_unknown_key(self):
        with pytest.raises(ProblemFormatError, match="notes.*unknown key"):
            parse_problem(doc(notes="hi"))

    def test_weights_exactly_one_kind(self):
        bad = {"scalar": [0.5, 0.5], "ifv": [[1, 0], [1, 0]]}
        with pytest.raises(ProblemFormatError, match="exactly one"):
            parse_problem(doc(weights=bad))
        with pytest.raises(ProblemFormatError, match="unknown weight kind 'fuzzy'"):
            parse_problem(doc(weights={"fuzzy": [0.5, 0.5]}))

    def test_scalar_weights_must_sum_to_one(self):
        with pytest.raises(ProblemFormatError, match="weights.scalar"):
            parse_problem(doc(weights={"scalar": [0.6, 0.6]}))

    def test_bad_matrix_cell_located(self):
        d = json.loads(doc())
        d["matrix"][1][1] = [0.7, 0.6]  # mu + nu > 1
        with pytest.raises(ProblemFormatError, match=r"matrix\[1\]\[1\]"):
            parse_problem(json.dumps(d))
        d["matrix"][1][1] = [0.7]
        with pytest.raises(ProblemFormatError, match=r"matrix\[1\]\[1\].*pair"):
            parse_problem(json.dumps(d))

    def test_booleans_are_not_numbers(self):
        d = json.loads(doc())
        d["matrix"][0][0] = [True, False]
        with pytest.raises(ProblemFormatError, match=r"matrix\[0\]\[0\]"):
            parse_problem(json.dumps(d))

    def test_attribute_object_shape(self):
        with pytest.raises(ProblemFormatError, match=r"attributes\[0\]"):
            parse_problem(doc(attributes=["O1", "O2"]))
        bad = [{"name": "O1", "kind": "target"}, {"name": "O2"}]
        with pytest.raises(ProblemFormatError, match=r"attributes\[0\]\.kind"):
            parse_problem(json.dumps({**json.loads(doc()), "attributes": bad}))

    def test_dimension_mismatch_reported(self):
        d = json.loads(doc())
        d["alternatives"] = ["A1", "A2", "A3"]
        with pytest.raises(ProblemFormatError):
            parse_problem(json.dumps(d))


class TestRoundTrip:
    def test_dump_parse_dump_stable(self):
        for name in BUNDLED_PROBLEMS:
            text = resolve_problem_path(name).read_text(encoding="utf-8")
            problem = parse_problem(text, source=name)
            dumped = dump_problem(problem)
            assert dumped == text  # bundled files are already canonical
            assert dump_problem(parse_problem(dumped)) == dumped

    def test_round_trip_preserves_problem(self):
        p = parse_problem(doc())
        q = parse_problem(dump_problem(p))
        assert q == p

    def test_writer_shape(self):
        text = dump_problem(parse_problem(doc()))
        assert text.endswith("\n") and not text.endswith("\n\n")
        assert "\r" not in text
        keys = list(json.loads(text))
        assert keys == ["alternatives", "attributes", "weights", "matrix"]

    def test_save_load(self, tmp_path):
        p = parse_problem(doc())
        target = tmp_path / "p.json"
        save_problem(p, target)
        assert load_problem(target) == p
        assert target.read_bytes() == dump_problem(p).encode()


class TestResolution:
    def test_bundled_names_resolve(self):
        for name in BUNDLED_PROBLEMS:
            path = resolve_problem_path(name)
            assert path.name == f"{name}.json"
            assert load_problem(path).n_alternatives >= 2

    def test_explicit_path_wins(self, tmp_path):
        target = tmp_path / "table3"  # shadows the bundled name
        target.write_text(doc(), encoding="utf-8")
        assert resolve_problem_path(str(target)) == target

    def test_missing_name(self):
        with pytest.raises(ProblemFormatError, match="no such file"):
            resolve_problem_path("table99")

    def test_data_dir_override(self, tmp_path, monkeypatch):
        monkeypatch.setenv(DATA_DIR_ENV, str(tmp_path))
        assert data_dir() == tmp_path
        (tmp_path / "mine.json").write_text(doc(), encoding="utf-8")
        assert resolve_problem_path("mine") == tmp_path / "mine.json"
        with pytest.raises(ProblemFormatError):
            resolve_problem_path("table3")

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(ProblemFormatError):
            load_problem(tmp_path / "nope.json")


CSV_TEXT = "alt,O1,O2\nA1,\"0.6,0.3\",\"0.5,0.2\"\nA2,\"0.4,0.4\",\"0.7,0.1\"\n"


class TestCsv:
    def test_matrix_import(self, tmp_path):
        f = tmp_path / "m.csv"
        f.write_text(CSV_TEXT, encoding="utf-8")
        alts, names, matrix = load_matrix_csv(f)
        assert alts == ["A1", "A2"]
        assert names == ["O1", "O2"]
        assert matrix[0] == (IFV(0.6, 0.3), IFV(0.5, 0.2))

    def test_problem_from_csv(self, tmp_path):
        f = tmp_path / "m.csv"
        f.write_text(CSV_TEXT, encoding="utf-8")
        p = problem_from_csv(f, (0.5, 0.5), kinds=("benefit", "cost"))
        assert isinstance(p, DecisionProblem)
        assert p.attributes[1].kind == "cost"
        with pytest.raises(ProblemFormatError, match="kinds for"):
            problem_from_csv(f, (0.5, 0.5), kinds=("cost",))
        with pytest.raises(ProblemFormatError, match="weights sum"):
            problem_from_csv(f, (0.5, 0.2))

    def test_bad_cell_located(self, tmp_path):
        f = tmp_path / "m.csv"
        f.write_text("alt,O1\nA1,\"0.6;0.3\"\nA2,\"0.4,0.4\"\n", encoding="utf-8")
        with pytest.raises(ProblemFormatError, match="row 2, column 'O1'"):
            load_matrix_csv(f)

    def test_row_width_checked(self, tmp_path):
        f = tmp_path / "m.csv"
        f.write_text("alt,O1,O2\nA1,\"0.6,0.3\"\n", encoding="utf-8")
        with pytest.raises(ProblemFormatError, match="row 2"):
            load_matrix_csv(f)

    def test_needs_header_and_data(self, tmp_path):
        f = tmp_path / "m.csv"
        f.write_text("alt,O1\n", encoding="utf-8")
        with pytest.raises(ProblemFormatError, match="header"):
            load_matrix_csv(f)
