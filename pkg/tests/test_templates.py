import pytest

from semirep.embedding import templates as tm
from semirep.embedding.templates import (
    EXPECTED_PATHS,
    FIG3,
    FIG4,
    OrientedTemplate,
    TemplateChecksumError,
    template,
    verify_template,
)
from semirep.graph import is_acyclic, is_semi_transitive


@pytest.mark.parametrize("name,count", [("FIG3", 2), ("FIG4", 4), ("FIG6", 2), ("TRIANGLE", 0)])
def test_checksums(name, count):
    t = template(name)
    paths = dict(t.shortcutting_paths())
    assert paths == EXPECTED_PATHS[name] and len(paths) == count
    assert is_acyclic(t.orientation)


def test_fig3_arcs():
    assert set(FIG3.arcs) == {
        ("R'", "B"), ("R'", "Rbar2"), ("R'", "R2"), ("R'", "G"),
        ("B", "G"), ("B", "Rbar2"), ("B", "R2"), ("Rbar2", "G"), ("R2", "G"),
    }


def test_fig4_right_column_are_shortcuts():
    flagged = {p for p, s in template("FIG4").shortcutting_paths() if s}
    assert flagged == {("G2", "R1", "G3", "B4"), ("G4", "B3", "R2", "B2")}
    assert not is_semi_transitive(FIG4.orientation)


def test_fig6_and_fig3_are_semi_transitive():
    assert is_semi_transitive(template("FIG6").orientation)
    assert is_semi_transitive(template("FIG3").orientation)


@pytest.mark.parametrize("n", range(2, 7))
def test_colored_s0_has_no_shortcutting_paths(n):
    t = template(f"S0_colored({n})")
    assert t.shortcutting_paths() == []


def test_corrupted_arc_detected():
    arcs = [a for a in FIG3.arcs if a != ("B", "R2")] + [("R2", "B")]
    bad = OrientedTemplate("FIG3", FIG3.vertices, tuple(arcs))
    assert verify_template(bad, EXPECTED_PATHS["FIG3"])


def test_missing_arc_detected():
    # R1->G4 lies on no shortcutting path; the arc count still catches its loss
    assert FIG4.arcs[0] == ("R1", "G4")
    bad = OrientedTemplate("FIG4", FIG4.vertices, FIG4.arcs[1:])
    assert dict(bad.shortcutting_paths()) == EXPECTED_PATHS["FIG4"]
    assert any("arcs, expected 19" in p for p in verify_template(bad, EXPECTED_PATHS["FIG4"]))


def test_path_changing_arc_loss_detected():
    arcs = tuple(a for a in FIG4.arcs if a != ("G3", "B4"))
    problems = verify_template(OrientedTemplate("FIG4", FIG4.vertices, arcs), EXPECTED_PATHS["FIG4"])
    assert any("checksum mismatch" in p for p in problems)


def test_cyclic_template_detected():
    bad = OrientedTemplate("X", ("a", "b", "c"), (("a", "b"), ("b", "c"), ("c", "a")))
    assert "directed cycle" in verify_template(bad, {})[0]


def test_corrupted_template_aborts(monkeypatch):
    arcs = [a for a in FIG3.arcs if a != ("R'", "G")] + [("G", "R'")]
    monkeypatch.setitem(tm._FIXED, "FIG3", OrientedTemplate("FIG3", FIG3.vertices, tuple(arcs)))
    with pytest.raises(TemplateChecksumError):
        template("FIG3")


def test_unknown_name():
    with pytest.raises(ValueError):
        template("FIG5")
