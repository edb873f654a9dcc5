import re

import pytest

from structctrl.core.pattern import Pattern
from structctrl.core.pattern_graph import PatternGraph, graph_of_pattern, transitive_closure
from structctrl.utils.dot_writer import graph_to_dot, write_closure_dot_files

EDGE_STATEMENT = re.compile(r"^\s*(\d+) -- (\d+) \[style=(solid|dashed)\];$")


def parse_edges(text):
    edges = {"solid": set(), "dashed": set()}
    for line in text.splitlines():
        match = EDGE_STATEMENT.match(line)
        if match:
            edges[match.group(3)].add((int(match.group(1)), int(match.group(2))))
    return edges


def test_graph_to_dot_styles():
    g = PatternGraph(3, solid={(1, 2), (2, 3)}, broken={(1, 4)})
    text = graph_to_dot(g, "fig")
    assert text.startswith("graph fig {")
    assert text.rstrip().endswith("}")
    assert parse_edges(text) == {"solid": {(1, 2), (2, 3)}, "dashed": {(1, 4)}}
    assert text.count(" -- ") == 3
    for v in range(1, 5):
        assert f"  {v};" in text


@pytest.mark.parametrize("name, expected", [("step-1", "step_1"), ("2x", "g_2x"), ("", "g_")])
def test_graph_names_are_sanitised(name, expected):
    assert graph_to_dot(PatternGraph(1), name).startswith(f"graph {expected} {{")


def test_write_closure_dot_files(tmp_path, path_pattern):
    trace = transitive_closure(graph_of_pattern(path_pattern))
    paths = write_closure_dot_files(trace, str(tmp_path / "dot"), "path")
    assert [p.rsplit("/", 1)[-1] for p in paths] == ["path_step0.dot", "path_step1.dot", "path_step2.dot"]

    expected = [
        ({(1, 2), (2, 3)}, {(1, 4)}),
        ({(1, 2), (2, 3), (1, 3)}, {(1, 4), (2, 4)}),
        ({(1, 2), (2, 3), (1, 3)}, {(1, 4), (2, 4), (3, 4)}),
    ]
    for path, (solid, broken) in zip(paths, expected):
        with open(path, encoding="utf-8") as f:
            assert parse_edges(f.read()) == {"solid": solid, "dashed": broken}


def test_empty_pattern_writes_single_file(tmp_path):
    trace = transitive_closure(graph_of_pattern(Pattern.empty(2)))
    paths = write_closure_dot_files(trace, str(tmp_path))
    assert len(paths) == 1
    with open(paths[0], encoding="utf-8") as f:
        assert " -- " not in f.read()
