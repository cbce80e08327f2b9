"""Insertion into decomposition tableaux, queer Knuth moves, crystal equivalence."""

from __future__ import annotations

from collections import deque
from typing import Iterator, Optional

from . import kernels
from .graph import CrystalError
from .ssdt import ShiftedTableau, hook_split, is_hook, violation
from .words import Word, check_rank


def bump(T: ShiftedTableau, x: int) -> tuple[ShiftedTableau, int]:
    """``T <- x`` together with the 1-based row that received the new box.

    Row by row: append when ``row + x`` is a hook word; otherwise the leftmost
    increasing-part entry ``>= x`` is replaced by ``x``, the leftmost
    decreasing-part entry smaller than it takes its value, and the displaced
    entry moves on to the next row.
    """
    rows = [list(r) for r in T.rows]
    carry = int(x)
    r = 0
    while True:
        if r == len(rows):
            rows.append([carry])
            break
        v = rows[r]
        if is_hook(v + [carry]):
            v.append(carry)
            break
        k = hook_split(v)
        j = next((t for t in range(k, len(v)) if v[t] >= carry), None)
        if j is None:
            raise CrystalError(f"no increasing entry >= {carry} in row {r + 1} of {T}")
        big = v[j]
        v[j] = carry
        i = next((t for t in range(k) if v[t] < big), None)
        if i is None:
            raise CrystalError(f"no decreasing entry < {big} in row {r + 1} of {T}")
        carry = v[i]
        v[i] = big
        r += 1
    return ShiftedTableau(tuple(tuple(row) for row in rows)), r + 1


def insert_letter(T: ShiftedTableau, x: int, check: bool = True) -> ShiftedTableau:
    if check:
        problem = violation(T)
        if problem is not None:
            raise ValueError(f"not a decomposition tableau: {problem}")
    return bump(T, x)[0]


def insertion_steps(T: ShiftedTableau, word: Word, check: bool = True) -> Iterator[ShiftedTableau]:
    """Yield ``T <- u_1``, ``(T <- u_1) <- u_2``, ... for the letters of ``word``."""
    if check:
        problem = violation(T)
        if problem is not None:
            raise ValueError(f"not a decomposition tableau: {problem}")
    for x in word:
        T = bump(T, x)[0]
        yield T


def insert_word(T: ShiftedTableau, word: Word, check: bool = True) -> ShiftedTableau:
    for T in insertion_steps(T, word, check):
        pass
    return T


def insert_tableau(T: ShiftedTableau, U: ShiftedTableau, check: bool = True) -> ShiftedTableau:
    """``T <- U``: insert the reading word of ``U`` letter by letter."""
    if check:
        problem = violation(U)
        if problem is not None:
            raise ValueError(f"not a decomposition tableau: {problem}")
    return insert_word(T, U.reading_word(), check)


def knuth_case(word: Word) -> Optional[str]:
    """Which of the eight cases A-H of the queer Knuth map applies, if any."""
    if len(word) != 4:
        raise ValueError("the queer Knuth map acts on words of length 4")
    a, b, c, d = word
    if d <= b <= a < c:
        return "A"
    if b < d <= a < c:
        return "B"
    if b <= a < d <= c:
        return "C"
    if a < b < d <= c:
        return "D"
    if b < d <= c <= a:
        return "E"
    if d <= b < c <= a:
        return "F"
    if a < d <= b < c:
        return "G"
    if d <= a < b < c:
        return "H"
    return None


def knuth_map(word: Word) -> Optional[Word]:
    """``psi``: acbd in cases A-D, bacd in E-F, abdc in G-H, None elsewhere."""
    case = knuth_case(word)
    if case is None:
        return None
    a, b, c, d = word
    if case in "ABCD":
        return (a, c, b, d)
    if case in "EF":
        return (b, a, c, d)
    return (a, b, d, c)


def crystal_equivalent(w1: Word, w2: Word, n: int) -> bool:
    """True iff ``w1 -> w2`` extends to an isomorphism ``C(w1) -> C(w2)``.

    Both components are walked in lockstep under every raising and lowering
    operator; the induced correspondence must be defined on the same labels
    and injective.
    """
    check_rank(n)
    w1, w2 = tuple(w1), tuple(w2)
    if kernels.weight(w1, n) != kernels.weight(w2, n):
        return False
    fwd = {w1: w2}
    bwd = {w2: w1}
    queue = deque([(w1, w2)])
    while queue:
        a, b = queue.popleft()
        pairs = list(zip(kernels.f_all(a, n), kernels.f_all(b, n)))
        pairs += zip(kernels.e_all(a, n), kernels.e_all(b, n))
        for a2, b2 in pairs:
            if (a2 is None) != (b2 is None):
                return False
            if a2 is None:
                continue
            seen = fwd.get(a2)
            if seen is None:
                if b2 in bwd:
                    return False
                fwd[a2] = b2
                bwd[b2] = a2
                queue.append((a2, b2))
            elif seen != b2:
                return False
    return True
