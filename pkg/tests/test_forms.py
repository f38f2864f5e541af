import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semirep.embedding.forms import (
    CASE_EVEN,
    CASE_EVEN_SPLIT,
    CASE_ODD,
    ColorScheme,
    FormPattern,
    SchemeError,
    classify_form,
    color_S0,
    monochromatic_edges,
    tau,
)
from semirep.families import s_m, words_of

SCHEMES = (CASE_EVEN, CASE_ODD, CASE_EVEN_SPLIT)


def binary_words(max_len, min_len=0):
    for n in range(min_len, max_len + 1):
        yield from itertools.product((0, 1), repeat=n)


def bits(s):
    return tuple(int(c) for c in s)


class TestTau:
    def test_examples(self):
        assert tau((0, 1, 0)) == (1, 0)
        assert tau(tuple(range(1, 8))) == (1,) * 6
        assert tau((2, 3, 1, 4)) == (1, 0, 1)
        assert tau((0, 0)) == (1,)

    def test_too_short(self):
        with pytest.raises(ValueError):
            tau((1,))


class TestFormPattern:
    def test_parse_and_print(self):
        assert str(FormPattern.parse("o1e0b1")) == "o1e0b1"
        for bad in ("x1", "a1e0", "e1e0e0", "e1x"):
            with pytest.raises(ValueError):
                FormPattern.parse(bad)

    def test_grammar(self):
        e1 = FormPattern.parse("e1")
        assert e1.matches(bits("11")) and not e1.matches(bits("1")) and not e1.matches(())
        a0 = FormPattern.parse("o1a0")
        assert a0.matches(bits("10")) and a0.matches(bits("1011")) and not a0.matches(bits("1"))
        b0 = FormPattern.parse("o1b0")
        assert b0.matches(bits("1")) and b0.matches(bits("10")) and not b0.matches(bits("11"))

    def test_matcher_equals_regex(self):
        atoms = [k + c for k in "eo" for c in "01"]
        forms = []
        for r in range(1, 4):
            for seq in itertools.product(atoms, repeat=r):
                for tail in ("", "a0", "a1", "b0", "b1"):
                    try:
                        forms.append(FormPattern(seq + ((tail,) if tail else ())))
                    except ValueError:
                        pass
        for f in forms:
            for w in binary_words(9):
                assert f.matches(w) == bool(f.regex.fullmatch("".join(map(str, w)))), (str(f), w)


class TestSchemes:
    @pytest.mark.parametrize("scheme", SCHEMES, ids=lambda s: s.name)
    def test_partition(self, scheme):
        for w in binary_words(12, 1):
            if (len(w) % 2 == 0) != (scheme.parity == "even"):
                continue
            hits = [f for f, _ in scheme.items() if f.matches(w)]
            assert len(hits) == 1, (w, [str(h) for h in hits])

    def test_examples(self):
        f, c = classify_form(bits("1100"), CASE_EVEN)
        assert (str(f), c) == ("e1b0", "Red")
        f, c = classify_form(bits("1"), CASE_ODD)
        assert (str(f), c) == ("o1", "Blue")
        f, c = classify_form(bits("100"), CASE_ODD)
        assert (str(f), c) == ("o1e0b1", "Blue")

    def test_parity_mismatch(self):
        with pytest.raises(ValueError):
            classify_form(bits("1"), CASE_EVEN)

    def test_broken_scheme_detected(self):
        broken = ColorScheme("broken", "odd", (("Red", (FormPattern.parse("o1"), FormPattern.parse("o1b0"))),))
        with pytest.raises(SchemeError):
            classify_form(bits("1"), broken)
        with pytest.raises(SchemeError):
            classify_form(bits("0"), broken)

    def test_first_letter_removal(self):
        # dropping the first letter: e1 b0 -> o1 b0, and o1 b0 -> e1 b0 or b0 (and the same with letters swapped)
        for x, y in ((1, 0), (0, 1)):
            eb = FormPattern.parse(f"e{x}b{y}")
            ob = FormPattern.parse(f"o{x}b{y}")
            b = FormPattern.parse(f"b{y}")
            for w in binary_words(12, 1):
                if eb.matches(w):
                    assert ob.matches(w[1:])
                if ob.matches(w):
                    assert eb.matches(w[1:]) or b.matches(w[1:])


class TestColoring:
    @pytest.mark.parametrize("n", range(2, 11))
    def test_proper(self, n):
        colors = color_S0(n)
        assert not monochromatic_edges(s_m(n, 2, 0), colors)

    def test_n2(self):
        G = s_m(2, 2, 0)
        colors = dict(zip(G.labels, color_S0(2)))
        assert G.vertex_count == 4 and len(G.edges) == 5
        assert all(colors[G.label(u)] != colors[G.label(v)] for u, v in G.edges)

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_all_ones_red(self, n):
        G = s_m(n, 2, 0)
        assert color_S0(n)[G.index_of("1" * n)] == "Red"

    def test_uses_refined_scheme_consistently(self):
        # the split scheme colours every even-length word like the unsplit one
        for w in binary_words(10, 2):
            if len(w) % 2 == 0:
                assert classify_form(w, CASE_EVEN)[1] == classify_form(w, CASE_EVEN_SPLIT)[1]
