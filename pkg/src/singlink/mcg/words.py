"""Words in Dehn twists.

A word is a tuple of ``(curve, exponent)`` letters with exponent +1 for a
right-handed twist and -1 for a left-handed one.  Words are read left to
right and act right to left, so ``ab`` means "twist along b, then along a".
"""
from __future__ import annotations

import re
from typing import Iterable

Letter = tuple[str, int]
Word = tuple[Letter, ...]

_TOKEN = re.compile(r"^([A-Za-z][A-Za-z0-9_']*)(?:\^(-?\d+))?$")


class WordSyntaxError(ValueError):
    pass


def parse_word(text: str | Iterable[str]) -> Word:
    """Parse ``"alpha1 beta^2 delta1^-1"``; powers expand into repeated letters."""
    tokens = text.split() if isinstance(text, str) else list(text)
    out: list[Letter] = []
    for tok in tokens:
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise WordSyntaxError(f"bad twist token {tok!r}")
        power = int(m.group(2)) if m.group(2) is not None else 1
        if power == 0:
            raise WordSyntaxError(f"zero power in {tok!r}")
        sign = 1 if power > 0 else -1
        out.extend([(m.group(1), sign)] * abs(power))
    return tuple(out)


def format_word(w: Word) -> str:
    """Inverse of :func:`parse_word`, collapsing runs into powers."""
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        name, sign = w[i]
        power = (j - i) * sign
        parts.append(name if power == 1 else f"{name}^{power}")
        i = j
    return " ".join(parts)


def inverse(w: Word) -> Word:
    return tuple((name, -e) for name, e in reversed(w))


def power(w: Word, k: int) -> Word:
    return w * k if k >= 0 else inverse(w) * (-k)


def curves(w: Word) -> set[str]:
    return {name for name, _ in w}
