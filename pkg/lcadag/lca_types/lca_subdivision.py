from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

Path = Tuple[int, ...]


def _path_is_invalid(g, name: str, path: Path, start: int, end: int) -> str:
    if not path:
        return f"path {name} is empty"
    if path[0] != start or path[-1] != end:
        return (
            f"path {name} runs {g.label_of(path[0])}..{g.label_of(path[-1])},"
            f" expected {g.label_of(start)}..{g.label_of(end)}"
        )
    if len(set(path)) != len(path):
        return f"path {name} repeats a vertex"
    for u, v in zip(path, path[1:]):
        if (u, v) not in g.edges:
            return f"path {name} uses {g.label_of(u)} -> {g.label_of(v)}, not an edge"
    return ""


def _meet_is_invalid(g, names: str, a: Path, b: Path, expected: set) -> str:
    common = set(a) & set(b)
    if common != expected:
        return (
            f"paths {names} share {g.format(sorted(common))},"
            f" expected {g.format(sorted(expected))}"
        )
    return ""


@dataclass(frozen=True)
class K22Subdivision:
    """
    Two roots r, r2 and two sinks l, l2 joined by four directed paths,
    r->l, r->l2, r2->l, r2->l2. Paths from the same root meet only in the
    root, paths into the same sink meet only in the sink and the crossing
    pairs are disjoint. strict also asks for incomparable roots and sinks
    """

    roots: Tuple[int, int]
    sinks: Tuple[int, int]
    paths: Tuple[Path, Path, Path, Path]
    strict: bool = True

    def is_invalid(self, g) -> str:
        """Returns "" when the certificate holds in g, else what is wrong with it"""
        (r, r2), (l, l2) = self.roots, self.sinks
        if len({r, r2, l, l2}) != 4:
            return "roots and sinks must be four different vertices"
        p_rl, p_rl2, p_r2l, p_r2l2 = self.paths
        for name, path, start, end in (
            ("r->l", p_rl, r, l),
            ("r->l2", p_rl2, r, l2),
            ("r2->l", p_r2l, r2, l),
            ("r2->l2", p_r2l2, r2, l2),
        ):
            problem = _path_is_invalid(g, name, path, start, end)
            if problem:
                return problem
        for names, a, b, expected in (
            ("r->l/r->l2", p_rl, p_rl2, {r}),
            ("r2->l/r2->l2", p_r2l, p_r2l2, {r2}),
            ("r->l/r2->l2", p_rl, p_r2l2, set()),
            ("r2->l/r->l2", p_r2l, p_rl2, set()),
            ("r->l/r2->l", p_rl, p_r2l, {l}),
            ("r->l2/r2->l2", p_rl2, p_r2l2, {l2}),
        ):
            problem = _meet_is_invalid(g, names, a, b, expected)
            if problem:
                return problem
        if self.strict:
            poset = g.poset
            if poset.comparable(r, r2):
                return f"roots {g.format((r, r2))} are comparable"
            if poset.comparable(l, l2):
                return f"sinks {g.format((l, l2))} are comparable"
        return ""

    @property
    def endpoints(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return self.roots, self.sinks

    def to_json(self, g) -> Dict[str, Any]:
        return {
            "roots": list(g.labels_of(self.roots)),
            "sinks": list(g.labels_of(self.sinks)),
            "paths": [list(g.labels_of(p)) for p in self.paths],
            "strict": self.strict,
        }


@dataclass(frozen=True)
class XSubdivision:
    """
    An hourglass: r->top and r2->top meet only in top, a path top->bottom,
    then bottom->l and bottom->l2 meet only in bottom. top == bottom is
    the five vertex X shape, otherwise the six vertex X' shape
    """

    roots: Tuple[int, int]
    sinks: Tuple[int, int]
    top: int
    bottom: int
    upper: Tuple[Path, Path]
    middle: Path
    lower: Tuple[Path, Path]

    @property
    def is_x(self) -> bool:
        return self.top == self.bottom

    @property
    def centers(self) -> Tuple[int, ...]:
        return (self.top,) if self.is_x else (self.top, self.bottom)

    def is_invalid(self, g) -> str:
        (r, r2), (l, l2) = self.roots, self.sinks
        v, w = self.top, self.bottom
        if len({r, r2, l, l2}) != 4 or {v, w} & {r, r2, l, l2}:
            return "roots, sinks and centers must be different vertices"
        (p_rv, p_r2v), (p_wl, p_wl2) = self.upper, self.lower
        for name, path, start, end in (
            ("r->top", p_rv, r, v),
            ("r2->top", p_r2v, r2, v),
            ("top->bottom", self.middle, v, w),
            ("bottom->l", p_wl, w, l),
            ("bottom->l2", p_wl2, w, l2),
        ):
            problem = _path_is_invalid(g, name, path, start, end)
            if problem:
                return problem
        upper = set(p_rv) | set(p_r2v)
        lower = set(p_wl) | set(p_wl2)
        for names, a, b, expected in (
            ("r->top/r2->top", p_rv, p_r2v, {v}),
            ("bottom->l/bottom->l2", p_wl, p_wl2, {w}),
            ("upper/middle", tuple(upper), self.middle, {v}),
            ("lower/middle", tuple(lower), self.middle, {w}),
            ("upper/lower", tuple(upper), tuple(lower), {v} if v == w else set()),
        ):
            problem = _meet_is_invalid(g, names, a, b, expected)
            if problem:
                return problem
        return ""

    def to_json(self, g) -> Dict[str, Any]:
        return {
            "shape": "X" if self.is_x else "X'",
            "roots": list(g.labels_of(self.roots)),
            "sinks": list(g.labels_of(self.sinks)),
            "centers": list(g.labels_of(self.centers)),
            "paths": [
                list(g.labels_of(p))
                for p in (self.upper[0], self.upper[1], self.middle, self.lower[0], self.lower[1])
            ],
        }
