"""Hook words, semistandard decomposition tableaux and the crystals B(lambda)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .graph import CrystalError, CrystalGraph, closure
from .partitions import Partition, check_strict, is_strict
from .words import Word


def hook_split(word: Word) -> Optional[int]:
    """Length ``k`` of the decreasing part if ``word`` is a hook word, else None.

    ``u_1 >= ... >= u_k < u_{k+1} < ... < u_N``; the split is unique because
    ``k`` must sit at the first strict ascent.
    """
    w = tuple(word)
    if not w:
        raise ValueError("hook words are non-empty")
    k = 1
    while k < len(w) and w[k] <= w[k - 1]:
        k += 1
    for t in range(k, len(w) - 1):
        if w[t] >= w[t + 1]:
            return None
    return k


def is_hook(word: Word) -> bool:
    return hook_split(word) is not None


def hook_parts(word: Word) -> tuple[Word, Word]:
    """``(decreasing part, increasing part)`` of a hook word."""
    k = hook_split(word)
    if k is None:
        raise ValueError(f"{word} is not a hook word")
    w = tuple(word)
    return w[:k], w[k:]


def max_hook_subword_len(word: Word) -> int:
    """Length of the longest (scattered) subword that is a hook word.

    For each pivot ``p`` ending the decreasing part: longest weakly decreasing
    subsequence ending at ``p`` plus longest strictly increasing subsequence
    after ``p`` whose values exceed ``w[p]``. O(N^2).
    """
    w = tuple(word)
    N = len(w)
    if N == 0:
        return 0
    dec = [1] * N
    for p in range(N):
        for q in range(p):
            if w[q] >= w[p] and dec[q] + 1 > dec[p]:
                dec[p] = dec[q] + 1
    inc = [1] * N  # longest strictly increasing subsequence starting at p
    for p in range(N - 1, -1, -1):
        for q in range(p + 1, N):
            if w[q] > w[p] and inc[q] + 1 > inc[p]:
                inc[p] = inc[q] + 1
    best = 0
    for p in range(N):
        tail = max((inc[q] for q in range(p + 1, N) if w[q] > w[p]), default=0)
        best = max(best, dec[p] + tail)
    return best


@dataclass(frozen=True)
class ShiftedTableau:
    """A filling of a shifted shape, stored as row words from the top row down."""

    rows: tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(a) for a in r) for r in self.rows))
        if any(len(r) == 0 for r in self.rows):
            raise ValueError("tableau rows must be non-empty")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def reading_word(self) -> Word:
        """Rows concatenated from the bottom row to the top row."""
        out: tuple[int, ...] = ()
        for r in reversed(self.rows):
            out += r
        return out

    @classmethod
    def from_word(cls, word: Word, shape: Partition) -> "ShiftedTableau":
        """Cut a reading word into rows of lengths ``shape[-1], ..., shape[0]``."""
        w = tuple(word)
        if len(w) != sum(shape):
            raise ValueError(f"word of length {len(w)} does not fill shape {tuple(shape)}")
        rows = []
        pos = 0
        for length in reversed(shape):
            rows.append(w[pos:pos + length])
            pos += length
        return cls(tuple(reversed(rows)))

    def __str__(self) -> str:
        return "/".join(_literal(r) for r in self.rows)


EMPTY = ShiftedTableau(())


def _literal(word: Word) -> str:
    sep = "." if any(a > 9 for a in word) else ""
    return sep.join(str(a) for a in word)


def violation(T: ShiftedTableau) -> Optional[str]:
    """Describe the first failed SSDT condition, or None if ``T`` is valid."""
    if not is_strict(T.shape):
        return f"shape {T.shape} is not a strict partition"
    for i, row in enumerate(T.rows, start=1):
        if not is_hook(row):
            return f"condition (i): row {i} '{_literal(row)}' is not a hook word"
    for i in range(1, len(T.rows)):
        below, row = T.rows[i], T.rows[i - 1]
        m = max_hook_subword_len(below + row)
        if m != len(row):
            return (
                f"condition (ii): row {i} '{_literal(row)}' is not a maximal hook subword of"
                f" '{_literal(below + row)}' (found length {m} > {len(row)})"
            )
    return None


def validate(T: ShiftedTableau) -> bool:
    """True iff ``T`` is a semistandard decomposition tableau."""
    return violation(T) is None


def highest_tableau(lam: Partition, n: int) -> ShiftedTableau:
    """``T^lam``: row k holds ``(j-k+1)^(lam_j - lam_{j+1})`` for j = r, ..., k."""
    lam = check_strict(lam, n)
    r = len(lam)
    ext = lam + (0,)
    rows = []
    for k in range(1, r + 1):
        row: list[int] = []
        for j in range(r, k - 1, -1):
            row.extend([j - k + 1] * (ext[j - 1] - ext[j]))
        rows.append(tuple(row))
    return ShiftedTableau(tuple(rows))


def lowest_tableau(lam: Partition, n: int) -> ShiftedTableau:
    """``L^lam``: row k is constant ``n-k+1``."""
    lam = check_strict(lam, n)
    return ShiftedTableau(tuple((n - k,) * part for k, part in enumerate(lam)))


def build_crystal(lam: Partition, n: int, max_vertices: Optional[int] = None) -> CrystalGraph:
    """``B(lam)`` as the operator closure of ``T^lam``; vertices are reading words.

    Every vertex is re-cut into the shape and checked to be an SSDT.
    """
    lam = check_strict(lam, n)
    top = highest_tableau(lam, n).reading_word()
    g = closure([top], n, shape=lam, max_vertices=max_vertices)
    for v in g.vertices:
        problem = violation(ShiftedTableau.from_word(v, lam))
        if problem is not None:
            raise CrystalError(f"closure of T^{lam} reached an invalid tableau {v}: {problem}")
    return g


@lru_cache(maxsize=256)
def crystal_words(lam: Partition, n: int) -> tuple[Word, ...]:
    """Reading words of ``B(lam)`` in sorted order (cached)."""
    return tuple(sorted(build_crystal(tuple(lam), n).vertices))


def tableaux(lam: Partition, n: int) -> list[ShiftedTableau]:
    lam = tuple(lam)
    return [ShiftedTableau.from_word(w, lam) for w in crystal_words(lam, n)]


def reading_word(T: ShiftedTableau) -> Word:
    return T.reading_word()
