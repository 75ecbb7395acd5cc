import json
import os
import pathlib

import pytest

import promut

CORPUS = pathlib.Path(os.environ.get(
    "PROMUT_CORPUS", pathlib.Path(__file__).resolve().parents[2] / "corpus"))


def read(name):
    return (CORPUS / name).read_text()


def test_operators():
    ops = promut.operators()
    assert len(ops) == 27
    assert ops[0] == ("remove_predicate", "remove predicate", True)
    assert [name for name, _, sensible in ops if not sensible] == [
        "permute_cut", "reverse_predicate"]


def test_solve():
    out = promut.solve(read("min.pl"), "min(2, 1, X)")
    assert out["outcome"] == "success"
    assert out["bindings"] == {"X": "1"}
    assert promut.solve("p :- q.", "p")["error"].startswith("existence_error")


def test_min_campaign():
    report = promut.run(read("min.pl"), read("min_tests.pl"), ops="lt_to_ge")
    assert report["schema_version"] == promut.SCHEMA_VERSION
    assert report["totals"] == {"alive": 0, "dead": 1, "timeout": 0}
    assert report["mutation_score_text"] == "100.00%"


def test_timeout_leaves_score_undefined():
    report = promut.run(read("add_to_list.pl"), read("add_to_list_tests.pl"),
                        ops="reverse_predicate")
    assert report["totals"]["timeout"] == 1
    assert report["mutation_score"] is None


def test_coverage():
    cov = promut.coverage(read("min.pl"), read("min_tests.pl"))
    assert cov["schema_version"] == promut.SCHEMA_VERSION
    assert cov["clause"]["pct"] == 100.0
    assert cov["uncovered"] == []


def test_cli_matches_binding():
    code, out, _ = promut.cli("--format", "json", "run", CORPUS / "min.pl",
                              "--tests", CORPUS / "min_tests.pl")
    assert code == 0
    assert json.loads(out) == promut.run(read("min.pl"), read("min_tests.pl"))


def test_errors():
    with pytest.raises(promut.PromutError):
        promut.format_program("p :- (.")
    with pytest.raises(ValueError):
        promut.run(read("min.pl"), "")
    assert promut.cli("run", "--bogus")[0] == 2
