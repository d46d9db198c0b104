import json
import logging

import pytest
from hypothesis import HealthCheck, given, settings

from data.models import CheckResult, FAIL, PASS, VerificationReport
from families.psl2 import psl2_graph, psl2_spec_from_q
from graphs.prime_graph import PrimeGraph
from storage.files import (
    graph_to_json, load_degree_set, load_graph, load_instance, save_degree_set, save_graph, save_reports,
)
from tests.strategies import degree_sets, prime_graphs
from utils.errors import InvalidDataError, ParseError


def _write(path, text):
    path.write_text(text, encoding="utf-8")
    return path


def test_load_sample_s5(samples_dir):
    degree_set, annotations = load_degree_set(samples_dir / "S5.json")
    assert degree_set.name == "S5"
    assert degree_set.degrees == (1, 4, 5, 6)
    assert annotations["group_realizable"] is True
    assert annotations["solvable"] is False


def test_empty_degrees_rejected(tmp_path):
    with pytest.raises(InvalidDataError):
        load_degree_set(_write(tmp_path / "d.json", '{"degrees":[]}'))


def test_non_positive_degree_rejected(tmp_path):
    with pytest.raises(InvalidDataError):
        load_degree_set(_write(tmp_path / "d.json", '{"degrees":[1,0,6]}'))


def test_unknown_annotation_rejected(tmp_path):
    with pytest.raises(InvalidDataError):
        load_degree_set(_write(tmp_path / "d.json", '{"degrees":[1,6],"annotations":{"abelian":true}}'))


def test_duplicates_collapsed_with_warning(tmp_path, caplog):
    with caplog.at_level(logging.WARNING, logger="storage.files"):
        degree_set, _ = load_degree_set(_write(tmp_path / "dup.json", '{"degrees":[1,6,6]}'))
    assert degree_set.degrees == (1, 6)
    assert "duplicados" in caplog.text


def test_name_defaults_to_file_stem(tmp_path):
    degree_set, annotations = load_degree_set(_write(tmp_path / "mystery.json", '{"degrees":[1,2]}'))
    assert degree_set.name == "mystery"
    assert annotations == {}


def test_malformed_json_reports_position(tmp_path):
    with pytest.raises(ParseError) as excinfo:
        load_degree_set(_write(tmp_path / "bad.json", '{"degrees": [1, 2,'))
    assert excinfo.value.line == 1
    assert excinfo.value.column is not None


def test_top_level_must_be_object(tmp_path):
    with pytest.raises(InvalidDataError):
        load_instance(_write(tmp_path / "list.json", "[1, 2, 3]"))


def test_graph_file_with_composite_vertex_rejected(tmp_path):
    with pytest.raises(InvalidDataError):
        load_graph(_write(tmp_path / "g.json", '{"vertices":[2,4],"edges":[]}'))


def test_psl2_11_graph_text():
    g = psl2_graph(psl2_spec_from_q(11))
    assert graph_to_json(g) == '{"vertices":[2,3,5,11],"edges":[[2,3],[2,5]]}\n'


def test_empty_graph_text():
    assert graph_to_json(PrimeGraph()) == '{"vertices":[],"edges":[]}\n'


def test_edges_written_smaller_prime_first(tmp_path):
    path = tmp_path / "g.json"
    save_graph(path, PrimeGraph((3, 2, 7), [(7, 2), (3, 2)]))
    assert json.loads(path.read_text())["edges"] == [[2, 3], [2, 7]]


@settings(max_examples=100, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(g=prime_graphs())
def test_graph_round_trip(tmp_path, g):
    path = tmp_path / "graph.json"
    save_graph(path, g)
    assert load_graph(path) == g


@settings(max_examples=50, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(d=degree_sets(name="R"))
def test_degree_set_round_trip(tmp_path, d):
    path = tmp_path / "degrees.json"
    save_degree_set(path, d, {"group_realizable": False, "source": "fuzz"})
    loaded, annotations = load_degree_set(path)
    assert loaded == d
    assert annotations == {"group_realizable": False, "source": "fuzz"}


def test_load_instance_dispatch(tmp_path, samples_dir):
    from_degrees = load_instance(samples_dir / "c5_control.json")
    assert from_degrees.degree_set is not None
    assert from_degrees.graph.vertices == (2, 3, 5, 7, 11)
    assert from_degrees.annotations["group_realizable"] is False

    from_graph = load_instance(_write(tmp_path / "tri.json", '{"vertices":[2,3,5],"edges":[[2,3],[3,5],[2,5]]}'))
    assert from_graph.name == "tri"
    assert from_graph.degree_set is None
    assert len(from_graph.graph.edges) == 3

    with pytest.raises(InvalidDataError):
        load_instance(_write(tmp_path / "other.json", '{"primes":[2,3]}'))


def test_save_reports(tmp_path):
    report = VerificationReport(instance_name="S5", family="ingested", group_realizable=True)
    report.checks.append(CheckResult(check_id="theorem-a", status=PASS))
    report.checks.append(CheckResult(check_id="palfy", status=FAIL, certificate={"independent_set": [3, 5, 7]},
                                     note="alpha=3", conclusive=False))
    path = tmp_path / "reports.json"
    save_reports(path, [report])
    payload = json.loads(path.read_text())
    assert payload[0]["instance_name"] == "S5"
    assert payload[0]["summary"] == "fail"
    assert payload[0]["checks"][1]["certificate"] == {"independent_set": [3, 5, 7]}
    assert payload[0]["checks"][1]["conclusive"] is False
