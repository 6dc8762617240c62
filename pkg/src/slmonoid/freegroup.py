"""Free groups F_n and their endomorphisms.

Letters are signed generator indices: ``k`` is x_k and ``-k`` is x_k^-1.
Words are kept freely reduced, which is a unique normal form, so two words
are equal in F_n exactly when their letter tuples are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class RankError(ValueError):
    """Two objects living in free groups of different rank were combined."""


def _free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for a in letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        for pos, a in enumerate(self.letters):
            if a == 0 or abs(a) > self.rank:
                raise ValueError(f"letter {a} at index {pos} out of range for rank {self.rank}")
        for pos in range(len(self.letters) - 1):
            if self.letters[pos] == -self.letters[pos + 1]:
                raise ValueError(f"word not reduced at index {pos}: {self.letters}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return concat(self, other)

    def __invert__(self) -> FreeWord:
        return invert_word(self)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in self.letters)


def reduce(rank: int, raw_letters: Sequence[int]) -> FreeWord:
    """Freely reduce ``raw_letters`` to the normal form in F_rank."""
    for pos, a in enumerate(raw_letters):
        if a == 0 or abs(a) > rank:
            raise ValueError(f"letter {a} at index {pos} out of range for rank {rank}")
    return FreeWord(rank, _free_reduce(raw_letters))


def generator(rank: int, k: int) -> FreeWord:
    return reduce(rank, [k])


def _check_rank(a: int, b: int) -> None:
    if a != b:
        raise RankError(f"rank mismatch: {a} != {b}")


def concat(u: FreeWord, v: FreeWord) -> FreeWord:
    _check_rank(u.rank, v.rank)
    # only the seam can cancel since both sides are reduced
    a, b = u.letters, v.letters
    k = 0
    while k < len(a) and k < len(b) and a[len(a) - 1 - k] == -b[k]:
        k += 1
    return FreeWord(u.rank, a[: len(a) - k] + b[k:])


def invert_word(u: FreeWord) -> FreeWord:
    return FreeWord(u.rank, tuple(-a for a in reversed(u.letters)))


@dataclass(frozen=True)
class EndoMap:
    """Endomorphism of F_n given by the images of x_1..x_n (index 0 is x_1)."""

    rank: int
    images: tuple[FreeWord, ...]

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise ValueError(f"expected {self.rank} images, got {len(self.images)}")
        for w in self.images:
            _check_rank(self.rank, w.rank)

    def __call__(self, w: FreeWord) -> FreeWord:
        return apply(self, w)

    def __str__(self) -> str:
        return ", ".join(f"x{i + 1} -> {w}" for i, w in enumerate(self.images))


def identity_endo(rank: int) -> EndoMap:
    return EndoMap(rank, tuple(generator(rank, k) for k in range(1, rank + 1)))


def endo_from_letters(rank: int, images: Sequence[Sequence[int]]) -> EndoMap:
    return EndoMap(rank, tuple(reduce(rank, img) for img in images))


def _substitute(images: Sequence[tuple[int, ...]], letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for a in letters:
        img = images[a - 1] if a > 0 else tuple(-b for b in reversed(images[-a - 1]))
        for b in img:
            if stack and stack[-1] == -b:
                stack.pop()
            else:
                stack.append(b)
    return tuple(stack)


def apply(e: EndoMap, w: FreeWord) -> FreeWord:
    """Evaluate ``e`` on ``w``: substitute images for generators and reduce."""
    _check_rank(e.rank, w.rank)
    return FreeWord(e.rank, _substitute([img.letters for img in e.images], w.letters))


def compose_endo(e1: EndoMap, e2: EndoMap) -> EndoMap:
    """The map x -> e1(e2(x))."""
    _check_rank(e1.rank, e2.rank)
    images = [img.letters for img in e1.images]
    return EndoMap(e1.rank, tuple(FreeWord(e1.rank, _substitute(images, w.letters)) for w in e2.images))


def endo_equal(e1: EndoMap, e2: EndoMap) -> bool:
    _check_rank(e1.rank, e2.rank)
    return e1.images == e2.images
