"""
The small part of Graphviz DOT this tool reads and writes: one digraph
block of quoted or bare node statements and "a -> b;" edge statements,
no attributes, no subgraphs
"""

import re
from typing import List, Tuple, Union

from lcadag.lca_dag_core import build_dag
from lcadag.lca_helpers import ParseError
from lcadag.lca_types import Dag

_ID = r'(?:"((?:[^"\\]|\\.)*)"|([A-Za-z0-9_.]+))'
_HEADER_RE = re.compile(r"^\s*(?:strict\s+)?digraph\s*(?:" + _ID + r")?\s*\{\s*$")
_EDGE_RE = re.compile(r"^\s*" + _ID + r"\s*->\s*" + _ID + r"\s*;?\s*$")
_NODE_RE = re.compile(r"^\s*" + _ID + r"\s*;?\s*$")


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _unquote(quoted: str, bare: str) -> str:
    if quoted is None:
        return bare
    return re.sub(r"\\(.)", r"\1", quoted)


def emit_dot(g: Dag, name: str = "G") -> str:
    lines = [f"digraph {_quote(name)} {{"]
    lines += [f"  {_quote(label)};" for label in g.labels]
    lines += [f"  {_quote(g.label_of(u))} -> {_quote(g.label_of(v))};" for u, v in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dot(text: str) -> Union[Tuple[List[Tuple[str, str]], List[str]], str]:
    edges = []  # type: List[Tuple[str, str]]
    nodes = []  # type: List[str]
    state = "header"
    for i, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.strip().startswith("//"):
            continue
        if state == "header":
            if not _HEADER_RE.match(line):
                return "Line {}: expected 'digraph name {{'".format(i)
            state = "body"
        elif state == "body":
            if line.strip() == "}":
                state = "done"
                continue
            edge = _EDGE_RE.match(line)
            node = _NODE_RE.match(line)
            if edge:
                edges.append((_unquote(*edge.group(1, 2)), _unquote(*edge.group(3, 4))))
            elif node:
                nodes.append(_unquote(*node.group(1, 2)))
            else:
                return "Line {}: only 'a;' and 'a -> b;' statements are supported".format(i)
        else:
            return "Line {}: text after the closing brace".format(i)
    if state != "done":
        return "The digraph block is not closed"
    in_edges = {label for edge in edges for label in edge}
    isolated = []
    for label in nodes:
        if label not in in_edges and label not in isolated:
            isolated.append(label)
    return edges, isolated


def load_dot(text: str) -> Dag:
    parsed = parse_dot(text)
    if isinstance(parsed, str):
        match = re.match(r"Line (\d+)", parsed)
        raise ParseError(parsed, line=int(match.group(1)) if match else None)
    return build_dag(*parsed)


def looks_like_dot(text: str) -> bool:
    for line in text.splitlines():
        if line.strip() and not line.strip().startswith(("#", "//")):
            return bool(_HEADER_RE.match(line))
    return False
