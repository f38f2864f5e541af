import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semirep.embedding.homomorphisms import Homomorphism, lift
from semirep.embedding.pipeline import NOT_COVERED, SEMI_TRANSITIVE, lifted_shortcuts, pipeline, select_construction
from semirep.embedding.templates import template
from semirep.families import FamilySpec
from semirep.graph import Graph, check_witness, find_shortcut


@pytest.mark.parametrize(
    "spec,construction",
    [
        (FamilySpec("simplified_overlap", 5), "hom_sp"),
        (FamilySpec("simplified_overlap", 4), "hom_sp"),
        (FamilySpec("simplified_overlap", 2), "trivial"),
        (FamilySpec("simplified_m", 4, 5, 1), "hom_n4"),
        (FamilySpec("simplified", 7, 2), "triangle"),
        (FamilySpec("simplified_m", 2, 9, 3), "lex"),
        (FamilySpec("simplified_m", 3, 8, 2), "hom_n3"),
        (FamilySpec("simplified_m", 5, 6, 1), "hom_odd"),
        (FamilySpec("simplified_m", 6, 4, 1), "hom_even"),
    ],
)
def test_semi_transitive(spec, construction):
    rep = pipeline(spec)
    assert rep.construction == construction
    assert rep.verdict == SEMI_TRANSITIVE, rep.to_dict()
    assert [s.name for s in rep.steps][0] == "homomorphism+lift"
    assert rep.steps[-1].name == "full-scan"
    assert all(s.ok for s in rep.steps)


@pytest.mark.parametrize(
    "spec",
    [
        FamilySpec("simplified_m", 2, 10, 3),
        FamilySpec("simplified_m", 3, 5, 1),
        FamilySpec("simplified_m", 4, 6, 1),
        FamilySpec("simplified_m", 5, 11, 1),
        FamilySpec("simplified", 2, 3),
        FamilySpec("wheel", 5),
    ],
)
def test_not_covered(spec):
    rep = pipeline(spec)
    assert rep.verdict == NOT_COVERED and rep.reason
    assert isinstance(select_construction(spec), str)


def test_report_lists_template_paths():
    d = pipeline(FamilySpec("simplified_m", 6, 4, 1)).to_dict()
    step2 = next(s for s in d["steps"] if s["name"] == "template-paths")
    assert len(step2["detail"]["paths"]) == 4
    assert sum(p["shortcut_in_template"] for p in step2["detail"]["paths"]) == 2


@st.composite
def blow_ups(draw):
    """A random graph with a homomorphism into a template: copies of template vertices, some template edges kept."""
    t = template(draw(st.sampled_from(["FIG3", "FIG4", "FIG6"])))
    copies = [draw(st.integers(1, 3)) for _ in t.vertices]
    mapping = [i for i, c in enumerate(copies) for _ in range(c)]
    rnd = random.Random(draw(st.integers(0, 2**32)))
    edges = [
        (u, v)
        for u in range(len(mapping))
        for v in range(u + 1, len(mapping))
        if t.graph.has_edge(mapping[u], mapping[v]) and rnd.random() < 0.7
    ]
    return Homomorphism(Graph.from_edges(len(mapping), edges), t, tuple(mapping))


@given(blow_ups())
def test_targeted_check_is_complete(f):
    D = lift(f)
    _, found = lifted_shortcuts(f, D)
    assert bool(found) == (find_shortcut(D) is not None)
    for w in found:
        assert check_witness(D, w)
