"""Pure-Python word kernels.

Words are tuples of ints in ``1..n``. Every function here has a twin with the
same signature in the compiled ``_kernels`` extension; ``qcrystal.kernels``
picks one at import time.
"""

from __future__ import annotations


def _unmatched(word, i):
    """Positions of uncanceled ``-`` (letter i+1) and ``+`` (letter i) symbols.

    Bracket matching with ``+`` as opener: a ``+`` cancels the nearest
    uncanceled ``-`` to its right.
    """
    plus = []
    minus = []
    j = i + 1
    for pos, a in enumerate(word):
        if a == i:
            plus.append(pos)
        elif a == j:
            if plus:
                plus.pop()
            else:
                minus.append(pos)
    return minus, plus


def weight(word, n):
    counts = [0] * n
    for a in word:
        counts[a - 1] += 1
    return tuple(counts)


def eps(word, i):
    return len(_unmatched(word, i)[0])


def phi(word, i):
    return len(_unmatched(word, i)[1])


def f_even(word, i):
    plus = _unmatched(word, i)[1]
    if not plus:
        return None
    p = plus[0]
    return word[:p] + (i + 1,) + word[p + 1:]


def e_even(word, i):
    minus = _unmatched(word, i)[0]
    if not minus:
        return None
    p = minus[-1]
    return word[:p] + (i,) + word[p + 1:]


def f_odd1(word):
    for p in range(len(word) - 1, -1, -1):
        a = word[p]
        if a == 1:
            return word[:p] + (2,) + word[p + 1:]
        if a == 2:
            return None
    return None


def e_odd1(word):
    for p in range(len(word) - 1, -1, -1):
        a = word[p]
        if a == 2:
            return word[:p] + (1,) + word[p + 1:]
        if a == 1:
            return None
    return None


def _s_inplace(w, i):
    minus, plus = _unmatched(w, i)
    m = len(plus) - len(minus)
    if m > 0:
        for p in plus[:m]:
            w[p] = i + 1
    elif m < 0:
        for p in minus[len(minus) + m:]:
            w[p] = i


def s_action(word, i):
    w = list(word)
    _s_inplace(w, i)
    return tuple(w)


def s_apply(word, seq):
    """Apply ``S_j`` for each ``j`` of ``seq``, first element first."""
    w = list(word)
    for j in seq:
        _s_inplace(w, j)
    return tuple(w)


def conjugator(i):
    """Application order of the simple reflections making up ``S_{w_i}``."""
    return tuple(range(i - 1, 0, -1)) + tuple(range(i, 1, -1))


def f_odd(word, i):
    if i == 1:
        return f_odd1(word)
    seq = conjugator(i)
    v = f_odd1(s_apply(word, seq))
    if v is None:
        return None
    return s_apply(v, seq[::-1])


def e_odd(word, i):
    if i == 1:
        return e_odd1(word)
    seq = conjugator(i)
    v = e_odd1(s_apply(word, seq))
    if v is None:
        return None
    return s_apply(v, seq[::-1])


def f_all(word, n):
    """Images under ``f_1..f_{n-1}`` then ``f_1bar..f_{n-1}bar`` (None when undefined)."""
    out = [f_even(word, i) for i in range(1, n)]
    out.extend(f_odd(word, i) for i in range(1, n))
    return out


def e_all(word, n):
    out = [e_even(word, i) for i in range(1, n)]
    out.extend(e_odd(word, i) for i in range(1, n))
    return out
