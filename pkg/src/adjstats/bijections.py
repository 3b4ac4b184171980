"""Executable bijections between four families counted by the same
sequence (1, 4, 14, 48, 164, ...):

  * colored compositions of n+1 in which a part of size i carries a
    nonempty subset of its cells as its color (2^i - 1 choices);
  * growth sequences of n construction moves over {1, 2, 3, 4} in which
    a 4 never directly follows a 2 or 3;
  * 4-ary words of length n avoiding the adjacent pairs 2-4 and 3-4;
  * 4-ary words of length n avoiding the adjacent pairs 1-3 and 2-4;

plus the separate bijection from ternary words (no 1-3, no equal
neighbors, first letter 2) onto square-and-domino tilings.

A colored composition is drawn as a row of dots separated by bars, with
the colored cells circled; every gap between bars holds at least one
circled dot.  The four moves grow such a picture one dot at a time:

  1 -- append a bar and then a circled dot (start a new part);
  2 -- append a circled dot;
  3 -- append a plain dot;
  4 -- insert a plain dot directly before the last circled dot.

Replaying a picture left to right emits each part as: one move 4 per
plain dot before the part's first circled dot, then moves 2/3 for the
remaining circled/plain dots; parts after the first are opened by a
move 1.  That convention makes the encoding a bijection -- within a
part, the leading plain dots can only ever be produced by 4s right
after the part is opened.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .oracle import words


class InvalidComposition(ValueError):
    """A part has an empty color set or is otherwise malformed."""


class InvalidSequence(ValueError):
    """A move sequence breaks the no-4-after-2-or-3 rule."""


class InvalidWord(ValueError):
    """A word is outside the family a map expects."""


Part = tuple[int, frozenset]


@dataclass(frozen=True)
class ColoredComposition:
    """A composition whose part of size i carries a nonempty subset of
    [1, i] as its color."""

    parts: tuple[Part, ...]

    def __post_init__(self):
        for size, colored in self.parts:
            if size < 1:
                raise InvalidComposition(f"part size {size} < 1")
            if not colored:
                raise InvalidComposition("a part has an empty color set")
            if not all(1 <= c <= size for c in colored):
                raise InvalidComposition(f"colors {set(colored)} outside [1, {size}]")

    @property
    def total(self) -> int:
        return sum(size for size, _ in self.parts)


def composition_to_maneuvers(comp: ColoredComposition) -> tuple[int, ...]:
    """Encode a colored composition of n+1 as its n construction moves."""
    if not comp.parts:
        raise InvalidComposition("a composition has at least one part")
    ops = []
    for index, (size, colored) in enumerate(comp.parts):
        if index > 0:
            ops.append(1)
        first = min(colored)
        ops.extend([4] * (first - 1))
        for pos in range(first + 1, size + 1):
            ops.append(2 if pos in colored else 3)
    return tuple(ops)


def maneuvers_to_composition(ops) -> ColoredComposition:
    """Replay construction moves from the single circled dot."""
    ops = maneuvers_to_v_word(ops)
    parts = [[True]]
    for op in ops:
        part = parts[-1]
        if op == 1:
            parts.append([True])
        elif op == 2:
            part.append(True)
        elif op == 3:
            part.append(False)
        else:
            last_circled = len(part) - 1 - part[::-1].index(True)
            part.insert(last_circled, False)
    return ColoredComposition(
        tuple(
            (len(part), frozenset(i + 1 for i, marked in enumerate(part) if marked))
            for part in parts
        )
    )


def maneuvers_to_v_word(ops) -> tuple[int, ...]:
    """A move sequence read letter-for-letter as a 4-ary word; valid
    sequences are exactly the words avoiding adjacent 2-4 and 3-4."""
    ops = tuple(ops)
    if not all(op in (1, 2, 3, 4) for op in ops):
        raise InvalidSequence(f"moves must be in 1..4, got {ops}")
    for a, b in itertools.pairwise(ops):
        if b == 4 and a in (2, 3):
            raise InvalidSequence(f"move 4 directly follows {a} in {ops}")
    return ops


def is_v_word(word) -> bool:
    """Member of the family avoiding adjacent 2-4 and 3-4."""
    return all(1 <= c <= 4 for c in word) and not any(
        (a, b) in ((2, 4), (3, 4)) for a, b in itertools.pairwise(word)
    )


def is_w_word(word) -> bool:
    """Member of the family avoiding adjacent 1-3 and 2-4."""
    return all(1 <= c <= 4 for c in word) and not any(
        (a, b) in ((1, 3), (2, 4)) for a, b in itertools.pairwise(word)
    )


def v_to_w(word) -> tuple[int, ...]:
    """Rewrite each maximal run 1^d 3 as 3 4^d (d >= 0), mapping words
    avoiding 2-4/3-4 onto words avoiding 1-3/2-4."""
    word = tuple(word)
    if not is_v_word(word):
        raise InvalidWord(f"{word} contains 2-4 or 3-4")
    out = []
    i = 0
    n = len(word)
    while i < n:
        if word[i] == 1:
            j = i
            while j < n and word[j] == 1:
                j += 1
            if j < n and word[j] == 3:
                out.append(3)
                out.extend([4] * (j - i))
                i = j + 1
            else:
                out.extend([1] * (j - i))
                i = j
        else:
            out.append(word[i])
            i += 1
    result = tuple(out)
    assert is_w_word(result), result
    return result


def w_to_v(word) -> tuple[int, ...]:
    """Inverse of v_to_w: rewrite each maximal run 3 4^d as 1^d 3."""
    word = tuple(word)
    if not is_w_word(word):
        raise InvalidWord(f"{word} contains 1-3 or 2-4")
    out = []
    i = 0
    n = len(word)
    while i < n:
        if word[i] == 3:
            j = i + 1
            while j < n and word[j] == 4:
                j += 1
            out.extend([1] * (j - i - 1))
            out.append(3)
            i = j
        else:
            out.append(word[i])
            i += 1
    result = tuple(out)
    assert is_v_word(result), result
    return result


def is_level_free_no13_start2(word) -> bool:
    """Ternary, no adjacent equal letters, no adjacent 1-3, first letter 2."""
    word = tuple(word)
    if not all(1 <= c <= 3 for c in word):
        return False
    if word and word[0] != 2:
        return False
    return not any(a == b or (a, b) == (1, 3) for a, b in itertools.pairwise(word))


def jpp_to_tiling(word) -> tuple[int, ...]:
    """Map a level-free no-1-3 word starting with 2 onto a tiling, given as
    piece lengths (1 = square, 2 = domino).

    Scanning right to left, each rightmost available 2-1 or 3-2 factor is
    paired into a domino; everything left over becomes a square.
    """
    word = tuple(word)
    if not is_level_free_no13_start2(word):
        raise InvalidWord(f"{word} is not a level-free no-1-3 word starting with 2")
    pieces = []
    i = len(word) - 1
    while i >= 0:
        if i >= 1 and (word[i - 1], word[i]) in ((2, 1), (3, 2)):
            pieces.append(2)
            i -= 2
        else:
            pieces.append(1)
            i -= 1
    return tuple(reversed(pieces))


# Left-to-right letter choices forced by the greedy right-to-left pairing:
# after each previous letter there is exactly one letter that starts a
# square without creating a pairable factor, and exactly one legal domino.
_SQUARE_AFTER = {None: 2, 1: 2, 2: 3, 3: 1}
_DOMINO_AFTER = {None: (2, 1), 1: (2, 1), 2: (3, 2), 3: (2, 1)}


def tiling_to_jpp(tiling) -> tuple[int, ...]:
    """Inverse of jpp_to_tiling."""
    tiling = tuple(tiling)
    if not all(piece in (1, 2) for piece in tiling):
        raise InvalidWord(f"pieces must have length 1 or 2, got {tiling}")
    out: list[int] = []
    prev = None
    for piece in tiling:
        if piece == 1:
            out.append(_SQUARE_AFTER[prev])
        else:
            out.extend(_DOMINO_AFTER[prev])
        prev = out[-1]
    return tuple(out)


def colored_compositions(total: int):
    """All colored compositions of `total`, in a fixed deterministic order."""
    if total < 1:
        raise ValueError("need total >= 1")

    def split(remaining):
        if remaining == 0:
            yield ()
            return
        for size in range(1, remaining + 1):
            for rest in split(remaining - size):
                yield (size,) + rest

    for sizes in split(total):
        color_menus = []
        for size in sizes:
            menu = [
                frozenset(sub)
                for r in range(1, size + 1)
                for sub in itertools.combinations(range(1, size + 1), r)
            ]
            color_menus.append(menu)
        for colors in itertools.product(*color_menus):
            yield ColoredComposition(tuple(zip(sizes, colors)))


def v_words(n: int):
    """All 4-ary words of length n avoiding adjacent 2-4 and 3-4."""
    return (w for w in words(4, n) if is_v_word(w))


def w_words(n: int):
    """All 4-ary words of length n avoiding adjacent 1-3 and 2-4."""
    return (w for w in words(4, n) if is_w_word(w))


def jpp_words(n: int):
    """All level-free no-1-3 ternary words of length n starting with 2."""
    return (w for w in words(3, n) if is_level_free_no13_start2(w))


def tilings(n: int):
    """All square-and-domino tilings of a strip of length n, as tuples of
    piece lengths."""
    if n == 0:
        yield ()
        return
    for t in tilings(n - 1):
        yield t + (1,)
    if n >= 2:
        for t in tilings(n - 2):
            yield t + (2,)
