import pytest

from minhom import io as fmt
from minhom.reductions import UGraph

from conftest import dg


def test_digraph_round_trip():
    text = "n 3\na 0 1\na 0 2\na 1 2\n"
    assert fmt.format_digraph(fmt.parse_digraph(text)) == text
    named = "n 2\nv 0 left\nv 1 right\na 1 0\n"
    assert fmt.format_digraph(fmt.parse_digraph(named)) == named


def test_digraph_canonicalises_order_and_comments():
    d = fmt.parse_digraph("# tt3\nn 3\na 1 2\na 0 2  # trailing\na 0 1\n")
    assert d == dg(3, [(0, 1), (0, 2), (1, 2)])
    assert fmt.format_digraph(d) == "n 3\na 0 1\na 0 2\na 1 2\n"


@pytest.mark.parametrize(
    "text",
    [
        "a 0 1\n",  # no header
        "n 2\na 0 0\n",  # loop
        "n 2\na 0 1\na 0 1\n",  # parallel arc
        "n 2\na 0 5\n",  # out of range
        "n 2\nx 1\n",  # unknown record
        "n two\n",
    ],
)
def test_digraph_errors(text):
    with pytest.raises(fmt.FormatError):
        fmt.parse_digraph(text)


def test_bipartite_round_trip():
    text = "nw 2\nnb 2\ne 0 0\ne 1 1\n"
    assert fmt.format_bipartite(fmt.parse_bipartite(text)) == text
    with pytest.raises(fmt.FormatError):
        fmt.parse_bipartite("nw 1\ne 0 0\n")


def test_ugraph_round_trip_and_colouring():
    text = "n 3\ne 0 1\ne 1 2\ncolor 0 U\ncolor 1 V\ncolor 2 W\n"
    g = fmt.parse_ugraph(text)
    assert g == UGraph(3, frozenset({(0, 1), (1, 2)}), ("U", "V", "W"))
    assert fmt.format_ugraph(g) == text
    with pytest.raises(fmt.FormatError):
        fmt.parse_ugraph("n 2\ne 0 1\ncolor 0 U\ncolor 1 U\n")  # improper colouring


def test_costs():
    text = "1,-2,3\n4,5,-6\n"
    m = fmt.parse_costs(text, rows=2, cols=3)
    assert m == [[1, -2, 3], [4, 5, -6]]
    assert fmt.format_costs(m) == text
    with pytest.raises(fmt.FormatError):
        fmt.parse_costs(text, rows=3)
    with pytest.raises(fmt.FormatError):
        fmt.parse_costs("1,2\n3\n")
    with pytest.raises(fmt.FormatError):
        fmt.parse_costs("1,x\n")
