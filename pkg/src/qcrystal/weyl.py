"""Weyl group action on word crystals, conjugated odd operators, extremal vectors."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import kernels
from .partitions import is_strict_weight
from .words import Label, Word, check_index, check_label, check_rank


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n`` in one-line notation.

    Products compose right to left: ``(p * q)(j) == p(q(j))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        check_index(i, n)
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        return cls(tuple(img))

    @classmethod
    def from_word(cls, word, n: int) -> "Permutation":
        """The product ``s_{a_1} ... s_{a_k}`` of a word in the simple transpositions."""
        p = cls.identity(n)
        for a in word:
            p = p * cls.simple(a, n)
        return p

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self.images[q - 1] for q in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for j, p in enumerate(self.images, start=1):
            inv[p - 1] = j
        return Permutation(tuple(inv))

    def length(self) -> int:
        img = self.images
        return sum(1 for a in range(self.n) for b in range(a + 1, self.n) if img[a] > img[b])

    def descents(self) -> list[int]:
        """Right descents: ``i`` with ``p(i) > p(i+1)``."""
        return [i for i in range(1, self.n) if self.images[i - 1] > self.images[i]]

    def reduced_word(self) -> tuple[int, ...]:
        """A canonical reduced word (bubble sort, smallest descent first)."""
        img = list(self.images)
        steps = []
        while True:
            for k in range(len(img) - 1):
                if img[k] > img[k + 1]:
                    img[k], img[k + 1] = img[k + 1], img[k]
                    steps.append(k + 1)
                    break
            else:
                break
        return tuple(reversed(steps))

    def reduced_words(self) -> list[tuple[int, ...]]:
        """Every reduced word of the permutation."""
        return list(_reduced_words(self.images))

    def act(self, mu):
        """Permute coordinates: the result has ``mu_j`` at position ``p(j)``."""
        if len(mu) != self.n:
            raise ValueError("weight length does not match permutation size")
        out = [0] * self.n
        for j, m in enumerate(mu):
            out[self.images[j] - 1] = m
        return tuple(out)


@lru_cache(maxsize=None)
def _reduced_words(images: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    desc = [i for i in range(1, len(images)) if images[i - 1] > images[i]]
    if not desc:
        return ((),)
    out = []
    for i in desc:
        img = list(images)
        img[i - 1], img[i] = img[i], img[i - 1]
        out.extend(w + (i,) for w in _reduced_words(tuple(img)))
    return tuple(out)


def s_action(word: Word, i: int, n: int) -> Word:
    """``S_i``: apply ``f_i^m`` (or ``e_i^{-m}``) with ``m = <h_i, wt>``.

    Equivalently, the uncanceled part ``-^q +^p`` of the ``i``-signature is
    replaced by ``-^p +^q``.
    """
    check_index(i, n)
    return kernels.s_action(tuple(word), i)


def w_action(word: Word, p: Permutation, reduced_word: Optional[tuple[int, ...]] = None) -> Word:
    """``S_p`` applied along a reduced word of ``p`` (the canonical one by default)."""
    if reduced_word is None:
        reduced_word = p.reduced_word()
    for a in reduced_word:
        check_index(a, p.n)
    return kernels.s_apply(tuple(word), tuple(reversed(reduced_word)))


def f_odd(word: Word, i: int, n: int) -> Optional[Word]:
    """``f_{i-bar} = S_{w_i^{-1}} f_{1-bar} S_{w_i}``, with ``w_i = s_2...s_i s_1...s_{i-1}``."""
    check_index(i, n)
    return kernels.f_odd(tuple(word), i)


def e_odd(word: Word, i: int, n: int) -> Optional[Word]:
    check_index(i, n)
    return kernels.e_odd(tuple(word), i)


def apply_f(word: Word, label: Label, n: int) -> Optional[Word]:
    check_label(label, n)
    if label.odd:
        return kernels.f_odd(tuple(word), label.index)
    return kernels.f_even(tuple(word), label.index)


def apply_e(word: Word, label: Label, n: int) -> Optional[Word]:
    check_label(label, n)
    if label.odd:
        return kernels.e_odd(tuple(word), label.index)
    return kernels.e_even(tuple(word), label.index)


def is_highest(word: Word, n: int) -> bool:
    """True when every raising operator, even and odd, kills the word."""
    check_rank(n)
    return all(v is None for v in kernels.e_all(tuple(word), n))


def is_lowest(word: Word, n: int) -> bool:
    """True when ``S_{w0}`` of the word is a highest weight vector."""
    return is_highest(w_action(word, Permutation.longest(n)), n)


def enumerate_highest(length: int, n: int) -> set[Word]:
    """Highest weight words of ``B^{(x)length}``, built letter by letter.

    A highest weight word of length N is ``1`` followed by
    ``f_1 f_2 ... f_{j-1} b`` (``f_{j-1}`` applied first) for a highest weight
    word ``b`` of length N-1 whose weight plus ``e_j`` is a strict partition.
    """
    check_rank(n)
    if length < 0:
        raise ValueError("length must be non-negative")
    level: set[Word] = {()}
    for _ in range(length):
        nxt = set()
        for b in level:
            mu = kernels.weight(b, n)
            for j in range(1, n + 1):
                nu = list(mu)
                nu[j - 1] += 1
                if not is_strict_weight(nu):
                    continue
                v = b
                for k in range(j - 1, 0, -1):
                    v = kernels.f_even(v, k)
                    if v is None:
                        raise RuntimeError(f"f_{k} undefined while extending {b} by {j}")
                nxt.add((1,) + v)
        level = nxt
    return level
