"""Letters, words and the primitive Kashiwara operators.

A word of rank ``n`` is a tuple of ints in ``1..n``; the k-th letter is the
k-th tensor factor of ``B^{(x)N}``, leftmost first. Operators return ``None``
where they are undefined.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Optional

from . import kernels

Word = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Label:
    """Operator index: ``Label(i)`` is the even ``i``, ``Label(i, odd=True)`` is ``i``-bar."""

    index: int
    odd: bool = False

    def __str__(self) -> str:
        return f"{self.index}~" if self.odd else str(self.index)

    def pretty(self) -> str:
        # combining macron renders as i-bar
        return f"{self.index}̄" if self.odd else str(self.index)

    @classmethod
    def parse(cls, text: str) -> "Label":
        text = text.strip()
        if text.endswith("~") or text.endswith("̄"):
            return cls(int(text[:-1]), odd=True)
        return cls(int(text))


def labels(n: int) -> list[Label]:
    """All operator labels for rank ``n``: even ``1..n-1`` then odd ``1..n-1``.

    This is also the order of the lists returned by ``kernels.f_all``.
    """
    return [Label(i) for i in range(1, n)] + [Label(i, True) for i in range(1, n)]


def check_rank(n: int) -> None:
    if n < 1:
        raise ValueError(f"rank must be positive, got {n}")


def check_index(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"operator index {i} out of range for rank {n}")


def check_label(label: Label, n: int) -> None:
    check_index(label.index, n)


def check_word(word: Iterable[int], n: int) -> Word:
    """Return ``word`` as a tuple after checking every letter lies in ``1..n``."""
    check_rank(n)
    w = tuple(int(a) for a in word)
    for a in w:
        if not 1 <= a <= n:
            raise ValueError(f"letter {a} out of range for rank {n}")
    return w


def all_words(length: int, n: int) -> Iterator[Word]:
    """Every word of the given length over ``1..n``, in lexicographic order."""
    return product(range(1, n + 1), repeat=length)


def weight(word: Word, n: int) -> Word:
    """Letter multiplicities: entry ``j-1`` counts occurrences of ``j``."""
    return kernels.weight(check_word(word, n), n)


def pairing(mu: Word, i: int) -> int:
    """``<h_i, mu> = mu_i - mu_{i+1}``."""
    return mu[i - 1] - mu[i]


def simple_root(i: int, n: int) -> Word:
    return tuple(1 if j == i - 1 else -1 if j == i else 0 for j in range(n))


def eps(word: Word, i: int, n: int) -> int:
    """Number of uncanceled ``-`` symbols in the ``i``-signature."""
    check_index(i, n)
    return kernels.eps(tuple(word), i)


def phi(word: Word, i: int, n: int) -> int:
    check_index(i, n)
    return kernels.phi(tuple(word), i)


def f_even(word: Word, i: int, n: int) -> Optional[Word]:
    """Lower the leftmost uncanceled ``i`` to ``i+1``."""
    check_index(i, n)
    return kernels.f_even(tuple(word), i)


def e_even(word: Word, i: int, n: int) -> Optional[Word]:
    """Raise the rightmost uncanceled ``i+1`` to ``i``."""
    check_index(i, n)
    return kernels.e_even(tuple(word), i)


def f_odd1(word: Word, n: int = 2) -> Optional[Word]:
    """Change the rightmost letter in ``{1, 2}`` from 1 to 2, if it is a 1."""
    if n < 2:
        raise ValueError("odd operators need rank >= 2")
    return kernels.f_odd1(tuple(word))


def e_odd1(word: Word, n: int = 2) -> Optional[Word]:
    if n < 2:
        raise ValueError("odd operators need rank >= 2")
    return kernels.e_odd1(tuple(word))
