"""Descent words and the e/o/a/b form grammar used to 3-colour S_0(n,2).

Atoms over a binary alphabet:

    e1 / e0   a positive even number of 1s / 0s, nothing else
    o1 / o0   an odd number of 1s / 0s
    a1 / a0   a non-empty word beginning with 1 / 0
    b1 / b0   a word beginning with 1 / 0, or the empty word

A form is a sequence of atoms; a binary word has the form when it splits
into consecutive pieces matching the atoms.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from ..graph import Graph


class SchemeError(ValueError):
    """A colour scheme failed to assign exactly one form to a word."""


_ATOM = re.compile(r"[eoab][01]")


@dataclass(frozen=True)
class FormPattern:
    atoms: tuple[str, ...]

    def __post_init__(self):
        if not self.atoms:
            raise ValueError("a form needs at least one atom")
        for i, atom in enumerate(self.atoms):
            if not _ATOM.fullmatch(atom):
                raise ValueError(f"bad atom {atom!r}")
            if atom[0] in "ab" and i != len(self.atoms) - 1:
                raise ValueError("an a/b atom may only appear last")
        for x, y in zip(self.atoms, self.atoms[1:]):
            if x[1] == y[1]:
                # run matching below relies on neighbouring atoms using different letters
                raise ValueError(f"consecutive atoms {x}{y} share a letter")

    @classmethod
    def parse(cls, text: str) -> FormPattern:
        atoms = tuple(_ATOM.findall(text))
        if "".join(atoms) != text:
            raise ValueError(f"cannot parse form {text!r}")
        return cls(atoms)

    def __str__(self) -> str:
        return "".join(self.atoms)

    def matches(self, bw: Sequence[int]) -> bool:
        runs = [(int(k), len(list(g))) for k, g in itertools.groupby(bw)]
        pos = 0
        for atom in self.atoms:
            kind, letter = atom[0], int(atom[1])
            if kind in "eo":
                if pos >= len(runs) or runs[pos][0] != letter:
                    return False
                if (runs[pos][1] % 2 == 0) != (kind == "e"):
                    return False
                pos += 1
            elif kind == "a":
                return pos < len(runs) and runs[pos][0] == letter
            else:
                return pos == len(runs) or runs[pos][0] == letter
        return pos == len(runs)

    @cached_property
    def regex(self) -> re.Pattern:
        """The same grammar as a regular expression; used as an independent matcher."""
        parts = []
        for atom in self.atoms:
            kind, c = atom
            parts.append({"e": f"(?:{c}{c})+", "o": f"{c}(?:{c}{c})*", "a": f"{c}[01]*", "b": f"(?:{c}[01]*)?"}[kind])
        return re.compile("".join(parts))


def _forms(*texts: str) -> tuple[FormPattern, ...]:
    return tuple(FormPattern.parse(t) for t in texts)


@dataclass(frozen=True)
class ColorScheme:
    name: str
    parity: str  # parity of the binary word length the scheme is meant for
    classes: tuple  # ((colour, (FormPattern, ...)), ...)

    def items(self):
        for color, forms in self.classes:
            for form in forms:
                yield form, color


CASE_EVEN = ColorScheme(
    "even",
    "even",
    (
        ("Red", _forms("e0b1", "e1b0")),
        ("Blue", _forms("o1e0a1", "o1o0b1")),
        ("Green", _forms("o0e1a0", "o0o1b0")),
    ),
)

CASE_ODD = ColorScheme(
    "odd",
    "odd",
    (
        ("Red", _forms("e0a1", "e1a0")),
        ("Blue", _forms("o1", "o1o0a1", "o1e0b1")),
        ("Green", _forms("o0", "o0o1a0", "o0e1b0")),
    ),
)

# the even case with e0b1 / e1b0 split into their empty and non-empty tails
CASE_EVEN_SPLIT = ColorScheme(
    "even-split",
    "even",
    (
        ("Red", _forms("e0", "e1", "e0a1", "e1a0")),
        ("Blue", _forms("o1e0a1", "o1o0b1")),
        ("Green", _forms("o0e1a0", "o0o1b0")),
    ),
)

SCHEMES = {s.name: s for s in (CASE_EVEN, CASE_ODD, CASE_EVEN_SPLIT)}


def scheme_for_length(length: int) -> ColorScheme:
    return CASE_EVEN if length % 2 == 0 else CASE_ODD


def tau(w: Sequence[int]) -> tuple[int, ...]:
    """Descent word: 0 where the next letter is smaller, 1 otherwise."""
    if len(w) < 2:
        raise ValueError("tau needs a word of length >= 2")
    return tuple(0 if a > b else 1 for a, b in zip(w, w[1:]))


def classify_form(bw: Sequence[int], scheme: ColorScheme) -> tuple[FormPattern, str]:
    """The unique form of ``bw`` in ``scheme`` and its colour."""
    if (len(bw) % 2 == 0) != (scheme.parity == "even"):
        raise ValueError(f"word of length {len(bw)} does not fit the {scheme.parity}-length scheme")
    hits = [(form, color) for form, color in scheme.items() if form.matches(bw)]
    if len(hits) != 1:
        word = "".join(map(str, bw))
        raise SchemeError(f"{len(hits)} forms of scheme {scheme.name!r} match {word!r}")
    return hits[0]


def color_S0(n: int) -> list[str]:
    """Proper 3-colouring of S_0(n,2), indexed like ``s_m(n, 2, 0)``."""
    from ..families import s_m, words_of

    if n < 2:
        raise ValueError("need n >= 2")
    G = s_m(n, 2, 0)
    scheme = scheme_for_length(n)
    colors = [classify_form(w, scheme)[1] for w in words_of(G)]
    bad = monochromatic_edges(G, colors)
    if bad:
        u, v = bad[0]
        raise SchemeError(f"edge {G.label(u)}-{G.label(v)} is monochromatic ({colors[u]})")
    return colors


def monochromatic_edges(G: Graph, colors: Sequence[str]) -> list[tuple[int, int]]:
    return [(u, v) for u, v in G.edge_list if colors[u] == colors[v]]
