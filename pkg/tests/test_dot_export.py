import pytest

from data.models import HoleCertificate, HOLE, ANTIHOLE
from graphs.perfection import find_odd_antihole, find_odd_hole
from graphs.prime_graph import PrimeGraph
from utils.dot_export import export_dot, write_dot
from utils.errors import DomainError


def _edge_lines(text):
    return [line for line in text.splitlines() if " -- " in line]


def test_single_edge():
    text = export_dot(PrimeGraph((2, 3), [(2, 3)]))
    assert text.startswith("graph Delta {")
    assert len(_edge_lines(text)) == 1
    assert "2 -- 3" in text
    assert "color" not in text


def test_c5_hole_highlight(c5):
    text = export_dot(c5, find_odd_hole(c5))
    edges = _edge_lines(text)
    assert len(edges) == 5
    assert all("color=red" in line for line in edges)


def test_c7_complement_antihole_highlight(c7_complement):
    certificate = find_odd_antihole(c7_complement)
    assert certificate.kind == ANTIHOLE
    edges = _edge_lines(export_dot(c7_complement, certificate))
    assert len(edges) == 14
    assert all("color=red" in line for line in edges)


def test_partial_highlight_marks_only_cycle(c5):
    g = PrimeGraph((2, 3, 5, 7, 11, 13), list(c5.edges) + [(11, 13)])
    text = export_dot(g, HoleCertificate(kind=HOLE, cycle=(2, 3, 5, 7, 11)))
    edges = _edge_lines(text)
    assert len(edges) == 6
    assert [line for line in edges if "color=red" not in line] == ["\t11 -- 13"]


def test_invalid_certificate_rejected(c5):
    with pytest.raises(DomainError):
        export_dot(c5, HoleCertificate(kind=ANTIHOLE, cycle=(2, 3, 5, 7, 11)))
    with pytest.raises(DomainError):
        export_dot(PrimeGraph((2, 3)), HoleCertificate(kind=HOLE, cycle=(2, 3, 5, 7, 11)))


def test_output_deterministic(tmp_path, c7_complement):
    first, second = tmp_path / "a.dot", tmp_path / "b.dot"
    write_dot(first, c7_complement)
    write_dot(second, PrimeGraph(reversed(c7_complement.vertices), reversed(c7_complement.edges)))
    assert first.read_bytes() == second.read_bytes()
