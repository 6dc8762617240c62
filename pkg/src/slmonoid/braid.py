"""Braid words in the Artin generators and the action of B_n on F_n.

Equality of braids is decided through the Artin representation: a braid
word is sent to an automorphism of the free group and two braids are equal
iff the reduced images of the generators agree.  No normal form for the
braid itself is ever computed.

Conventions
-----------
* ``sigma_i`` (letter ``i``) sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i;
  letter ``-i`` is the inverse automorphism.
* ``represent(u + v) == compose_endo(represent(u), represent(v))``.
* Strand positions are numbered 1..n from bottom to top.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from .freegroup import EndoMap, FreeWord, _substitute, endo_from_letters, identity_endo

if TYPE_CHECKING:
    from .stringlink import SliceDiagram


class StrandCountError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for pos, a in enumerate(self.letters):
            if a == 0 or abs(a) > self.strands - 1:
                raise ValueError(f"letter {a} at index {pos} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: BraidWord) -> BraidWord:
        _check_strands(self, other)
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return braid_inverse(self) ** -k
        return BraidWord(self.strands, self.letters * k)

    def __str__(self) -> str:
        return format_word(self)


def _check_strands(b1: BraidWord, b2: BraidWord) -> None:
    if b1.strands != b2.strands:
        raise StrandCountError(f"strand count mismatch: {b1.strands} != {b2.strands}")


def sigma(n: int, i: int, power: int = 1) -> BraidWord:
    """sigma_i^power in B_n."""
    letter = i if power > 0 else -i
    return BraidWord(n, (letter,) * abs(power))


def generator_endo(n: int, i: int, sign: int) -> EndoMap:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for {n} strands")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    images: list[Sequence[int]] = [(k,) for k in range(1, n + 1)]
    if sign > 0:
        images[i - 1] = (i, i + 1, -i)
        images[i] = (i,)
    else:
        images[i - 1] = (i + 1,)
        images[i] = (-(i + 1), i, i + 1)
    return endo_from_letters(n, images)


def represent(b: BraidWord) -> EndoMap:
    """The automorphism of F_n induced by ``b``."""
    n = b.strands
    images: list[tuple[int, ...]] = [(k,) for k in range(1, n + 1)]
    # right-multiplying by a generator only touches two images
    for a in b.letters:
        i = abs(a)
        if a > 0:
            new_i = _substitute(images, (i, i + 1, -i))
            new_j = images[i - 1]
        else:
            new_i = images[i]
            new_j = _substitute(images, (-(i + 1), i, i + 1))
        images[i - 1], images[i] = new_i, new_j
    return EndoMap(n, tuple(FreeWord(n, img) for img in images))


def braid_equal(b1: BraidWord, b2: BraidWord) -> bool:
    _check_strands(b1, b2)
    if b1.letters == b2.letters:
        return True
    if underlying_permutation(b1) != underlying_permutation(b2):
        return False
    return represent(b1).images == represent(b2).images


def braid_inverse(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, tuple(-a for a in reversed(b.letters)))


def is_trivial(b: BraidWord) -> bool:
    return represent(b) == identity_endo(b.strands)


@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..n; ``images[k - 1]`` is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition ``self`` after ``other``."""
        return Permutation(tuple(self(other(k)) for k in range(1, other.size + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.size + 1))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))


def underlying_permutation(b: BraidWord) -> Permutation:
    """Product of the transpositions (i, i+1) of the letters, in word order.

    With functions composed right to left this is the permutation ``p`` for
    which ``represent(b)`` sends x_k to a conjugate of x_{p(k)}; geometrically
    ``p(k)`` is the left-face position of the strand ending at right
    position ``k``.
    """
    images = list(range(1, b.strands + 1))
    # apply the transpositions in reverse order to get t_1 o t_2 o ... o t_m
    for a in reversed(b.letters):
        i = abs(a)
        images = [i + 1 if v == i else i if v == i + 1 else v for v in images]
    return Permutation(tuple(images))


def to_string_link(b: BraidWord) -> SliceDiagram:
    """The natural map from braids to string-link diagrams: one crossing per letter."""
    from .stringlink import Cross, SliceDiagram

    return SliceDiagram(b.strands, tuple(Cross(abs(a), 1 if a > 0 else -1) for a in b.letters))


_HEADER = re.compile(r"\s*n\s*=\s*(-?\d+)")


def parse_word(text: str) -> BraidWord:
    """Parse ``[n=<int>] <letter> <letter> ...``; letters are nonzero integers.

    Without a header the strand count is 1 + max |letter|.
    """
    strands = None
    m = _HEADER.match(text)
    if m:
        strands = int(m.group(1))
        text = text[m.end():]
    letters = []
    for tok in text.split():
        try:
            a = int(tok)
        except ValueError:
            raise ValueError(f"bad letter {tok!r} in braid word") from None
        if a == 0:
            raise ValueError("braid letters must be nonzero")
        letters.append(a)
    if strands is None:
        strands = 1 + max((abs(a) for a in letters), default=0)
    return BraidWord(strands, tuple(letters))


def format_word(b: BraidWord, header: bool = False) -> str:
    body = " ".join(str(a) for a in b.letters)
    if header:
        return f"n={b.strands} {body}".rstrip()
    return body
