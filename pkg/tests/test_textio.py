import pytest
from hypothesis import given

from dom22.errors import ParseError
from dom22.generate import cycle, theta
from dom22.multigraph import MultiGraph
from dom22.textio import (format_certificate, format_graph, parse_certificate, parse_graph,
                          to_dot)
from dom22.transform import Certificate, Partition, decompose

from strategies import multigraphs


def test_format_example():
    g = MultiGraph(3, {(0, 1): 2, (1, 2): 1}, [0, 0, 3])
    assert format_graph(g) == "n 3\ne 0 1 2\ne 1 2\nloop 2 3\n"


def test_parse_accepts_comments_and_repeats():
    text = "# a double edge\nn 2\ne 0 1\ne 1 0  # again\n\nloop 1\n"
    assert parse_graph(text) == MultiGraph(2, {(0, 1): 2}, [0, 1])


@pytest.mark.parametrize("text, line", [
    ("e 0 1\n", 1),
    ("n 2\nn 3\n", 2),
    ("n 2\ne 0 2\n", 2),
    ("n 2\ne 0 0\n", 2),
    ("n 2\ne 0 1 0\n", 2),
    ("n 2\n\nedge 0 1\n", 3),
    ("n x\n", 1),
    ("n 2\nloop 0 1 1\n", 2),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as err:
        parse_graph(text)
    assert err.value.line == line
    assert str(err.value).startswith(f"line {line}:")


def test_missing_header():
    with pytest.raises(ParseError):
        parse_graph("# nothing\n")


@given(multigraphs(max_n=7, max_mult=3))
def test_graph_round_trip_is_byte_stable(g):
    text = format_graph(g)
    assert parse_graph(text) == g
    assert format_graph(parse_graph(text)) == text


def test_dot_output():
    g = MultiGraph(2, {(0, 1): 2}, [1, 0])
    assert to_dot(g) == "graph G {\n  0;\n  1;\n  0 -- 0;\n  0 -- 1;\n  0 -- 1;\n}\n"


def test_certificate_format():
    c = Certificate(cycle(4), (Partition(0, [[3, 1]]), Partition(2, [[5, 4], [1]])))
    text = format_certificate(c)
    assert text == ("SEED\nn 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\nEND\n"
                    "step 0 | 1 3\nstep 2 | 1 ; 4 5\n")
    assert parse_certificate(text) == c
    assert format_certificate(parse_certificate(text)) == text


def test_certificate_round_trip_of_decomposition():
    c = decompose(theta())
    assert parse_certificate(format_certificate(c)) == c


@pytest.mark.parametrize("text", [
    "n 2\n",
    "SEED\nn 2\ne 0 1\n",
    "SEED\nn 2\ne 0 1\nEND\nstep 0 1\n",
    "SEED\nn 2\ne 0 1\nEND\nstep 0 | 1 ; \n",
    "SEED\nn 2\ne 0 1\nEND\nstep a | 1\n",
])
def test_bad_certificates(text):
    with pytest.raises(ParseError):
        parse_certificate(text)
