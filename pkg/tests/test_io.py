import numpy as np
import pytest

from graphfilt import build_graph
from graphfilt.errors import ParseError
from graphfilt.io import (
    format_edge_list,
    format_signal,
    parse_edge_list,
    parse_signal,
)

from conftest import random_graph


def test_edge_list_round_trip():
    g = random_graph(3, max_n=40)
    assert parse_edge_list(format_edge_list(g)) == g


def test_edge_list_header():
    g = build_graph(3, [(0, 2, 1.5)])
    text = format_edge_list(g)
    assert text.splitlines()[0] == "n 3"
    assert text.splitlines()[1].startswith("0 2 ")


def test_rejects_noncanonical_orientation():
    with pytest.raises(ParseError, match="line 2"):
        parse_edge_list("n 3\n2 0 1.0\n")


def test_rejects_bad_header():
    with pytest.raises(ParseError):
        parse_edge_list("3\n0 1 1.0\n")


def test_bad_triple_reports_line():
    with pytest.raises(ParseError, match="line 3"):
        parse_edge_list("n 3\n0 1 1.0\n0 2\n")


def test_signal_round_trip():
    s = np.random.default_rng(0).standard_normal(17)
    assert np.array_equal(parse_signal(format_signal(s)), s)


def test_signal_bad_value():
    with pytest.raises(ParseError, match="line 2"):
        parse_signal("1.0\nxyz\n")
