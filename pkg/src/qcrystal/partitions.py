"""Strict partitions and shifted shapes."""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

Partition = tuple[int, ...]


def is_strict(parts: Iterable[int]) -> bool:
    """True for a strictly decreasing sequence of positive integers (empty allowed)."""
    parts = tuple(parts)
    return all(p > 0 for p in parts) and all(a > b for a, b in zip(parts, parts[1:]))


def is_strict_weight(mu: Iterable[int]) -> bool:
    """True when the weight vector is a strict partition padded with zeros.

    Positive entries strictly decrease and every zero is trailing.
    """
    mu = tuple(mu)
    k = len(mu)
    while k and mu[k - 1] == 0:
        k -= 1
    return is_strict(mu[:k])


def strip(mu: Iterable[int]) -> Partition:
    """Drop trailing zeros of a weight vector."""
    mu = list(mu)
    while mu and mu[-1] == 0:
        mu.pop()
    return tuple(mu)


def pad(lam: Partition, n: int) -> tuple[int, ...]:
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} parts")
    return tuple(lam) + (0,) * (n - len(lam))


def check_strict(lam: Iterable[int], n: Optional[int] = None) -> Partition:
    lam = tuple(int(p) for p in lam)
    if not is_strict(lam):
        raise ValueError(f"{lam} is not a strict partition")
    if n is not None and len(lam) > n:
        raise ValueError(f"strict partition {lam} has more than {n} parts")
    return lam


def strict_partitions(size: int, max_len: Optional[int] = None) -> Iterator[Partition]:
    """Strict partitions of ``size`` in reverse lexicographic order."""

    def rec(rest: int, cap: int, prefix: tuple[int, ...]):
        if rest == 0:
            yield prefix
            return
        if max_len is not None and len(prefix) == max_len:
            return
        for p in range(min(rest, cap), 0, -1):
            yield from rec(rest - p, p - 1, prefix + (p,))

    yield from rec(size, size, ())


def add_box(lam: Partition, row: int) -> Optional[Partition]:
    """``lam <- row``: add a box to the (1-based) row, or None if not a shifted shape."""
    parts = list(lam)
    if row == len(parts) + 1:
        parts.append(1)
    elif 1 <= row <= len(parts):
        parts[row - 1] += 1
    else:
        return None
    if row >= 2 and parts[row - 2] <= parts[row - 1]:
        return None
    return tuple(parts)


def size(lam: Partition) -> int:
    return sum(lam)
