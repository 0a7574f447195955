import re
from typing import List, Tuple, Union

from lcadag.lca_constants import COMMENT_CHAR
from lcadag.lca_dag_core import build_dag
from lcadag.lca_helpers import InvalidLabel, ParseError
from lcadag.lca_types import Dag

"""
Edge list file format
--------------------------
One statement per line, tokens separated by whitespace.

file ::= {<edge> | <node> | <comment> | <blank>}
edge ::= <parent> <child>
node ::= "node" <label>
comment ::= "#" anything, also allowed after a statement

Labels are one or more non-whitespace characters. A line of exactly two
tokens whose first token is "node" declares an isolated vertex, so a
vertex named "node" cannot have children. Labels holding "#" cannot be
written either, DOT quotes them. Blank lines are ignored, a completely
empty file is an error.
"""

NODE_KEYWORD = "node"

ParsedGraph = Tuple[List[Tuple[str, str]], List[str]]


def parse_edge_list(text: str) -> Union[ParsedGraph, str]:
    """Returns (edges, isolated labels) or a string describing the first bad line"""
    edges = []  # type: List[Tuple[str, str]]
    isolated = []  # type: List[str]
    for i, line in enumerate(text.splitlines(), start=1):
        statement = line.split(COMMENT_CHAR, 1)[0].split()
        if not statement:
            continue
        elif len(statement) != 2:
            return "Line {}: expected 'parent child' or 'node <label>', got '{}'".format(
                i, line.strip()
            )
        elif statement[0] == NODE_KEYWORD:
            isolated.append(statement[1])
        else:
            edges.append((statement[0], statement[1]))

    if not edges and not isolated:
        return "File has no vertices in it"
    return edges, isolated


def load_edge_list(text: str) -> Dag:
    parsed = parse_edge_list(text)
    if isinstance(parsed, str):
        match = re.match(r"Line (\d+)", parsed)
        raise ParseError(parsed, line=int(match.group(1)) if match else None)
    edges, isolated = parsed
    return build_dag(edges, isolated)


def emit_edge_list(g: Dag) -> str:
    for label in g.labels:
        if COMMENT_CHAR in label:
            raise InvalidLabel(
                f"'{label}' holds '{COMMENT_CHAR}' and cannot be written as an edge list,"
                " use --dot",
                witness=label,
            )
    lines = []
    for u, v in g.sorted_edges():
        if g.label_of(u) == NODE_KEYWORD:
            raise InvalidLabel(
                "A vertex named 'node' with children cannot be written as an edge list,"
                " use --dot",
                witness=NODE_KEYWORD,
            )
        lines.append(f"{g.label_of(u)} {g.label_of(v)}")
    for v in g.ids:
        if not g.parents[v] and not g.children[v]:
            lines.append(f"{NODE_KEYWORD} {g.label_of(v)}")
    return "\n".join(lines) + "\n"
