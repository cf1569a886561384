"""Text form of W~ elements: ``t[c1,...,cn].s3.s1``.

The printed form is canonical: the translation coordinates, then the canonical
reduced word of the finite part (1-based).  The parser also accepts any word in
the simple affine reflections (``s0``, ``s0_2``) with or without a leading
translation.
"""

from __future__ import annotations

import re

from src.affine.element import ExtAffElem
from src.affine.group import AffineWeylGroup
from src.errors import NotationError

_TRANSLATION = re.compile(r"^t\[\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]$")
_LETTER = re.compile(r"^s(\d+)(?:_(\d+))?$")


def format_elem(x: ExtAffElem) -> str:
    head = "t[" + ",".join(str(c) for c in x.mu) + "]"
    return ".".join([head] + [f"s{i + 1}" for i in x.w.word])


def parse_elem(group: AffineWeylGroup, text: str) -> ExtAffElem:
    tokens = [t.strip() for t in text.strip().split(".") if t.strip()]
    if not tokens:
        raise NotationError("empty element notation")
    out = group.identity
    first = _TRANSLATION.match(tokens[0])
    if first:
        coords = [int(c) for c in first.group(1).split(",")] if first.group(1) else []
        if len(coords) != group.rank:
            raise NotationError(f"translation '{tokens[0]}' needs {group.rank} coordinates")
        out = group.translation(coords)
        tokens = tokens[1:]
    for token in tokens:
        if not _LETTER.match(token):
            raise NotationError(f"cannot parse '{token}' in '{text}'")
        if token == "s0" and len(group.datum.components) > 1:
            raise NotationError("use s0_<component> for a product of simple types")
        index = int(_LETTER.match(token).group(1))
        if index > group.rank:
            raise NotationError(f"'{token}' out of range for rank {group.rank}")
        out = group.compose(out, group.simple(token).elem)
    return out


def format_word(labels: tuple[str, ...]) -> str:
    return ".".join(labels) if labels else "e"
