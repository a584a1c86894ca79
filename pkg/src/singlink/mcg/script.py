"""Derivation-script files.

::

    # comment
    surface two-holed-torus
    word alpha2 gamma^3 beta^3 alpha1 delta
    move slide-gamma
    word alpha2 gamma^2 beta alpha1 beta^2 alpha1 delta
    ...

``word`` and ``move`` lines alternate, starting and ending with ``word``.
A move names a registered relation, ``commute``, ``rotate``, ``free``,
``auto`` (any single move) or ``search`` (any chain of moves found by
bounded breadth-first rewriting).
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .models import surface_model
from .rewrite import (DEFAULT_REWRITE_DEPTH, DerivationVerdict, Move, search_derivation,
                      verify_derivation)
from .surface import SurfaceModel, UnknownCurve
from .words import Word, WordSyntaxError, format_word, parse_word


class ScriptSyntaxError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Script:
    surface: str
    words: tuple[Word, ...]
    moves: tuple[str, ...]

    @property
    def model(self) -> SurfaceModel:
        return surface_model(self.surface)

    def verify(self, depth: int = DEFAULT_REWRITE_DEPTH) -> DerivationVerdict:
        if "search" not in self.moves:
            if len(self.words) == 1:
                return DerivationVerdict(True)
            return verify_derivation(self.words, self.model, claims=self.moves)
        used: list[Move] = []
        for i, (w1, w2) in enumerate(zip(self.words, self.words[1:])):
            if self.moves[i] == "search":
                chain = search_derivation(w1, w2, self.model, depth=depth, rotations=True)
                if chain is None:
                    return DerivationVerdict(False, i, f"no chain of at most {depth} moves takes "
                                             f"{format_word(w1)} to {format_word(w2)}", tuple(used))
                if len(chain) == 1:
                    continue
                v = verify_derivation(chain, self.model)
            else:
                v = verify_derivation([w1, w2], self.model, claims=[self.moves[i]])
            if not v.valid:
                return DerivationVerdict(False, i, v.reason, tuple(used))
            used.extend(v.moves)
        return DerivationVerdict(True, None, "", tuple(used))


def parse_script(text: str) -> Script:
    surface = None
    words: list[Word] = []
    moves: list[str] = []
    expect = "surface"
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "surface":
            if expect != "surface":
                raise ScriptSyntaxError("duplicate surface line", lineno)
            try:
                surface_model(rest)
            except KeyError as exc:
                raise ScriptSyntaxError(str(exc.args[0]), lineno) from None
            surface = rest
            expect = "word"
        elif key in ("word", "move"):
            if expect == "surface":
                raise ScriptSyntaxError("script must start with a surface line", lineno)
            if key != expect:
                raise ScriptSyntaxError(f"expected a {expect} line, found {key}", lineno)
            if key == "word":
                try:
                    w = parse_word(rest)
                    for name, _ in w:
                        surface_model(surface).vector(name)
                except (WordSyntaxError, UnknownCurve) as exc:
                    raise ScriptSyntaxError(str(exc).strip("'\""), lineno) from None
                words.append(w)
                expect = "move"
            else:
                if not rest or " " in rest:
                    raise ScriptSyntaxError("move line needs exactly one name", lineno)
                moves.append(rest)
                expect = "word"
        else:
            raise ScriptSyntaxError(f"unknown directive {key!r}", lineno)
    if surface is None:
        raise ScriptSyntaxError("missing surface line")
    if not words:
        raise ScriptSyntaxError("script has no words")
    if expect == "word":
        raise ScriptSyntaxError("script ends with a move line")
    return Script(surface, tuple(words), tuple(moves))


def load_script(path: str | Path) -> Script:
    return parse_script(Path(path).read_text())


def serialize_script(s: Script, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"surface {s.surface}")
    for i, w in enumerate(s.words):
        if i:
            lines.append(f"move {s.moves[i - 1]}")
        lines.append(f"word {format_word(w)}")
    return "\n".join(lines) + "\n"


def derivation_script(d) -> Script:
    """Freeze a :class:`~singlink.mcg.derivations.Derivation` into a script."""
    return Script(d.surface, tuple(d.words), tuple(d.claims))
