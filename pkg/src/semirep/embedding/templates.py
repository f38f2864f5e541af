"""Small oriented target graphs for the embedding constructions.

Arc sets are frozen data. Each template carries the exact list of its
shortcutting paths (and which of them are shortcuts in the template
itself); building a template re-derives that list and refuses to return
a template whose arcs disagree with it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ..graph import Graph, Orientation, enumerate_shortcutting_paths, find_directed_cycle


class TemplateChecksumError(ValueError):
    pass


@dataclass(frozen=True)
class OrientedTemplate:
    name: str
    vertices: tuple[str, ...]
    arcs: tuple[tuple[str, str], ...]

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def graph(self) -> Graph:
        idx = self.index
        return Graph.from_edges(len(self.vertices), ((idx[t], idx[h]) for t, h in self.arcs), self.vertices)

    @cached_property
    def orientation(self) -> Orientation:
        idx = self.index
        return Orientation(self.graph, frozenset((idx[t], idx[h]) for t, h in self.arcs))

    @cached_property
    def arc_bits(self) -> tuple[int, ...]:
        return self.orientation.out_bits

    def shortcutting_paths(self) -> list[tuple[tuple[str, ...], bool]]:
        return [
            (tuple(self.vertices[v] for v in sp.path), sp.is_shortcut)
            for sp in enumerate_shortcutting_paths(self.orientation)
        ]


FIG3 = OrientedTemplate(
    "FIG3",
    ("R'", "B", "Rbar2", "R2", "G"),
    (
        ("R'", "B"), ("R'", "Rbar2"), ("R'", "R2"), ("R'", "G"),
        ("B", "G"), ("B", "Rbar2"), ("B", "R2"),
        ("Rbar2", "G"), ("R2", "G"),
    ),
)

_FIG4_6_VERTICES = ("R1", "R2", "B1", "B2", "B3", "B4", "G1", "G2", "G3", "G4")

FIG4 = OrientedTemplate(
    "FIG4",
    _FIG4_6_VERTICES,
    (
        ("R1", "G4"), ("G2", "R1"), ("R1", "B4"), ("R1", "G1"), ("R1", "G3"),
        ("B4", "R2"), ("R2", "B2"), ("B1", "R2"), ("G4", "R2"), ("B3", "R2"),
        ("B1", "B2"), ("G2", "G1"), ("G4", "B1"), ("G4", "B3"), ("G4", "B2"),
        ("G2", "B4"), ("G3", "B4"), ("G1", "B4"), ("G3", "B3"),
    ),
)

FIG6 = OrientedTemplate(
    "FIG6",
    _FIG4_6_VERTICES,
    (
        ("R1", "G4"), ("R1", "G2"), ("R1", "B4"), ("R1", "G1"), ("R1", "G3"),
        ("R2", "B4"), ("R2", "B2"), ("R2", "B1"), ("R2", "G4"), ("R2", "B3"),
        ("B2", "B1"), ("G2", "G1"), ("G4", "B1"), ("G4", "B3"), ("G4", "B2"),
        ("G2", "B4"), ("G3", "B4"), ("G1", "B4"), ("G3", "B3"),
    ),
)

TRIANGLE = OrientedTemplate("TRIANGLE", ("Red", "Blue", "Green"), (("Red", "Blue"), ("Red", "Green"), ("Blue", "Green")))

# path -> is it a shortcut inside the template itself
EXPECTED_PATHS: dict[str, dict[tuple[str, ...], bool]] = {
    "FIG3": {
        ("R'", "B", "R2", "G"): False,
        ("R'", "B", "Rbar2", "G"): False,
    },
    "FIG4": {
        ("G2", "R1", "G1", "B4"): False,
        ("G2", "R1", "G3", "B4"): True,
        ("G4", "B1", "R2", "B2"): False,
        ("G4", "B3", "R2", "B2"): True,
    },
    "FIG6": {
        ("R1", "G2", "G1", "B4"): False,
        ("R2", "G4", "B2", "B1"): False,
    },
    "TRIANGLE": {},
}

# expected number of arcs per template
EXPECTED_ARC_COUNT = {"FIG3": 9, "FIG4": 19, "FIG6": 19, "TRIANGLE": 3}

_FIXED = {t.name: t for t in (FIG3, FIG4, FIG6, TRIANGLE)}
COLOR_RANK = {"Red": 0, "Blue": 1, "Green": 2}


def s0_colored(n: int) -> OrientedTemplate:
    """S_0(n,2) coloured by forms, oriented Red -> Blue -> Green and Red -> Green."""
    from ..families import s_m
    from .forms import color_S0

    G = s_m(n, 2, 0)
    colors = color_S0(n)
    arcs = []
    for u, v in G.edge_list:
        t, h = (u, v) if COLOR_RANK[colors[u]] < COLOR_RANK[colors[v]] else (v, u)
        arcs.append((G.label(t), G.label(h)))
    return OrientedTemplate(f"S0_colored({n})", tuple(G.labels), tuple(arcs))


def verify_template(t: OrientedTemplate, expected: dict | None) -> list[str]:
    """Problems found when re-deriving the template's shortcutting paths (empty when it checks out)."""
    problems = []
    cycle = find_directed_cycle(t.orientation)
    if cycle is not None:
        return [f"template {t.name} has a directed cycle {[t.vertices[v] for v in cycle]}"]
    if len(t.graph.edges) != len(t.arcs):
        problems.append(f"template {t.name} repeats an edge")
    want = EXPECTED_ARC_COUNT.get(t.name)
    if want is not None and len(t.arcs) != want:
        problems.append(f"template {t.name} has {len(t.arcs)} arcs, expected {want}")
    found = dict(t.shortcutting_paths())
    if expected is not None and found != expected:
        missing = sorted(set(expected) - set(found))
        extra = sorted(set(found) - set(expected))
        flags = sorted(p for p in set(found) & set(expected) if found[p] != expected[p])
        problems.append(
            f"template {t.name} checksum mismatch: missing {missing}, unexpected {extra}, shortcut flag differs on {flags}"
        )
    return problems


def template(name: str) -> OrientedTemplate:
    """A named template (FIG3, FIG4, FIG6, TRIANGLE or S0_colored(n)), checksum-verified."""
    if name.startswith("S0_colored(") and name.endswith(")"):
        t = s0_colored(int(name[len("S0_colored("):-1]))
        expected: dict | None = {}
    else:
        try:
            t = _FIXED[name]
        except KeyError:
            raise ValueError(f"unknown template {name!r}") from None
        expected = EXPECTED_PATHS[name]
    problems = verify_template(t, expected)
    if problems:
        raise TemplateChecksumError("; ".join(problems))
    return t
