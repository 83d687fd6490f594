import pytest
from hypothesis import given, settings

from app.core.exceptions import EdgeListError, EXIT_INPUT_ERROR
from app.services.edge_list import emit_edge_list, parse_edge_list, read_edge_list
from tests.strategies import nonisolated_digraphs


def test_parse_two_cycle():
    digraph = parse_edge_list("0 1\n1 0")
    assert digraph.n == 2
    assert digraph.arcs == ((0, 1), (1, 0))


def test_loop_is_rejected_with_line_number():
    with pytest.raises(EdgeListError) as exc:
        parse_edge_list("0 0")
    assert exc.value.line == 1
    assert "loop" in exc.value.message
    assert exc.value.exit_code == EXIT_INPUT_ERROR


def test_duplicate_arc_reports_second_line():
    with pytest.raises(EdgeListError) as exc:
        parse_edge_list("0 1\n0 1")
    assert exc.value.line == 2
    assert "duplicate" in exc.value.message


@pytest.mark.parametrize("text", ["0", "0 1 2", "a b", "0 -1", "0 \u00b2", "\u0661 0"])
def test_malformed_lines(text):
    with pytest.raises(EdgeListError):
        parse_edge_list(text)


def test_comments_and_blank_lines_are_skipped():
    digraph = parse_edge_list("# leading comment\n\n0 1  # trailing\n\n1 2\n")
    assert digraph.n == 3
    assert digraph.arcs == ((0, 1), (1, 2))


def test_header_sets_vertex_count():
    assert parse_edge_list("# n=5\n0 1\n").n == 5


def test_override_beats_header():
    assert parse_edge_list("# n=5\n0 1\n", n_override=3).n == 3


def test_vertex_beyond_override():
    with pytest.raises(EdgeListError) as exc:
        parse_edge_list("0 1\n0 5\n", n_override=3)
    assert exc.value.line == 2


def test_empty_input_without_count():
    with pytest.raises(EdgeListError):
        parse_edge_list("# nothing here\n")


def test_missing_file(tmp_path):
    with pytest.raises(EdgeListError):
        read_edge_list(tmp_path / "missing.txt")


def test_emitter_is_sorted_with_header():
    digraph = parse_edge_list("2 0\n0 2\n1 0\n")
    assert emit_edge_list(digraph) == "# n=3\n0 2\n1 0\n2 0\n"


@given(nonisolated_digraphs())
@settings(max_examples=100, deadline=None)
def test_emit_then_parse_preserves_digraph(digraph):
    assert parse_edge_list(emit_edge_list(digraph)) == digraph
