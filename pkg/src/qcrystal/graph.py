"""Finite crystal graphs on words."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional

from . import kernels
from .words import Label, Word, check_rank, labels


class CrystalError(RuntimeError):
    """A computed crystal violates a structural guarantee (closure, uniqueness)."""


class CrystalTooLarge(RuntimeError):
    """A closure exceeded the configured vertex budget."""


class CrystalGraph:
    """Vertices are words; ``edges[(v, label)]`` is the image of ``v`` under ``f_label``.

    Raising operators are read off the reversed edges. When ``shape`` is set the
    vertices are reading words of tableaux of that shifted shape.
    """

    def __init__(self, n: int, vertices: Iterable[Word], edges: dict, shape=None):
        self.n = n
        self.vertices = list(vertices)
        self.edges = edges
        self.shape = None if shape is None else tuple(shape)
        self._reverse = None
        self._index = None

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        if self._index is None:
            self._index = set(self.vertices)
        return v in self._index

    def __iter__(self) -> Iterator[Word]:
        return iter(self.vertices)

    @property
    def labels(self) -> list[Label]:
        return labels(self.n)

    def f(self, v: Word, label: Label) -> Optional[Word]:
        return self.edges.get((v, label))

    def e(self, v: Word, label: Label) -> Optional[Word]:
        if self._reverse is None:
            self._reverse = {(u, lab): src for (src, lab), u in self.edges.items()}
        return self._reverse.get((v, label))

    def edge_set(self, only: Optional[Iterable[Label]] = None) -> set[tuple[Word, Label, Word]]:
        keep = None if only is None else set(only)
        return {
            (v, lab, u)
            for (v, lab), u in self.edges.items()
            if keep is None or lab in keep
        }

    def sorted_vertices(self) -> list[Word]:
        return sorted(self.vertices, key=lambda w: (len(w), w))

    def weight(self, v: Word) -> tuple[int, ...]:
        return kernels.weight(v, self.n)

    def highest(self) -> list[Word]:
        """Vertices with no incoming edge, i.e. killed by every raising operator."""
        targets = set(self.edges.values())
        return [v for v in self.vertices if v not in targets]

    def lowest(self) -> list[Word]:
        from .weyl import is_lowest

        return [v for v in self.vertices if is_lowest(v, self.n)]

    def tableau(self, v: Word):
        from .ssdt import ShiftedTableau

        if self.shape is None:
            raise ValueError("graph vertices are plain words, not tableaux")
        return ShiftedTableau.from_word(v, self.shape)

    @classmethod
    def on_vertices(cls, vertices: Iterable[Word], n: int, shape=None) -> "CrystalGraph":
        """Graph on a vertex set that is closed under every operator."""
        check_rank(n)
        verts = list(vertices)
        index = set(verts)
        labs = labels(n)
        edges = {}
        for v in verts:
            for lab, u in zip(labs, kernels.f_all(v, n)):
                if u is None:
                    continue
                if u not in index:
                    raise CrystalError(f"f_{lab}({v}) = {u} leaves the vertex set")
                edges[(v, lab)] = u
        g = cls(n, verts, edges, shape)
        g._index = index
        return g


def closure(seeds: Iterable[Word], n: int, shape=None, max_vertices: Optional[int] = None) -> CrystalGraph:
    """Breadth-first closure of ``seeds`` under all raising and lowering operators."""
    check_rank(n)
    labs = labels(n)
    seen = {}
    queue = deque()
    for s in seeds:
        s = tuple(s)
        if s not in seen:
            seen[s] = None
            queue.append(s)
    edges = {}
    while queue:
        v = queue.popleft()
        for lab, u in zip(labs, kernels.f_all(v, n)):
            if u is None:
                continue
            edges[(v, lab)] = u
            if u not in seen:
                seen[u] = None
                queue.append(u)
        for u in kernels.e_all(v, n):
            if u is not None and u not in seen:
                seen[u] = None
                queue.append(u)
        if max_vertices is not None and len(seen) > max_vertices:
            raise CrystalTooLarge(f"closure exceeds {max_vertices} vertices")
    g = CrystalGraph(n, seen, edges, shape)
    return g


def component_of(word: Word, n: int, max_vertices: Optional[int] = None) -> CrystalGraph:
    """The connected component ``C(word)`` inside ``B^{(x)len(word)}``."""
    return closure([tuple(word)], n, max_vertices=max_vertices)
