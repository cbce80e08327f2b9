"""Tensor products of crystals and shifted Littlewood-Richardson coefficients.

Three independent routes to ``B(lam) (x) B(mu) = sum_nu f^nu B(nu)``:

* ``lr_words``     - box-addition along reading words of ``B(lam)``
* ``lr_insertion`` - ``T <- L^mu`` must be a lowest tableau ``L^nu``
* ``lr_graph``     - brute-force component decomposition of the tensor graph
"""

from __future__ import annotations

from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from . import kernels
from .graph import CrystalError, CrystalGraph
from .insertion import insert_word
from .partitions import Partition, add_box, check_strict, strip
from .ssdt import ShiftedTableau, crystal_words, lowest_tableau
from .weyl import Permutation
from .words import Word, all_words

METHODS = ("words", "insertion", "graph")

# below this many reading words a process pool costs more than it saves
PARALLEL_THRESHOLD = 2000


@dataclass
class LRResult:
    """Multiplicities ``f^nu_{lam,mu}`` with optional witnesses per ``nu``."""

    coefficients: Counter = field(default_factory=Counter)
    witnesses: dict = field(default_factory=dict)

    def add(self, nu: Partition, witness=None) -> None:
        self.coefficients[nu] += 1
        if witness is not None:
            self.witnesses.setdefault(nu, []).append(witness)

    def merge(self, other: "LRResult") -> None:
        self.coefficients.update(other.coefficients)
        for nu, ws in other.witnesses.items():
            self.witnesses.setdefault(nu, []).extend(ws)

    def items(self) -> list[tuple[Partition, int]]:
        """``(nu, multiplicity)`` pairs, largest first row first."""
        return sorted(self.coefficients.items(), reverse=True)

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.coefficients)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LRResult):
            return NotImplemented
        return +self.coefficients == +other.coefficients


@dataclass
class Component:
    top: Word
    top_weight: tuple[int, ...]
    vertices: list[Word]

    @property
    def shape(self) -> Partition:
        return strip(self.top_weight)

    def __len__(self) -> int:
        return len(self.vertices)


def tensor_words(lam: Partition, mu: Partition, n: int) -> CrystalGraph:
    """``B(lam) (x) B(mu)`` realized on concatenated reading words."""
    lam = check_strict(lam, n)
    mu = check_strict(mu, n)
    left = crystal_words(lam, n)
    right = crystal_words(mu, n)
    return CrystalGraph.on_vertices((u + v for u in left for v in right), n)


def tensor_power(N: int, n: int) -> CrystalGraph:
    """``B^{(x)N}`` on all words of length N."""
    return CrystalGraph.on_vertices(all_words(N, n), n)


def components(G: CrystalGraph) -> list[Component]:
    """Weakly connected components, each with its unique highest weight vertex.

    Components are listed in order of their top vertex.
    """
    adj: dict = {}
    for (v, _), u in G.edges.items():
        adj.setdefault(v, []).append(u)
        adj.setdefault(u, []).append(v)
    targets = set(G.edges.values())
    seen = set()
    out = []
    for start in G.vertices:
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in adj.get(v, ()):
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        tops = [v for v in comp if v not in targets]
        if len(tops) != 1:
            raise CrystalError(f"component of {start} has {len(tops)} highest weight vertices")
        out.append(Component(tops[0], kernels.weight(tops[0], G.n), comp))
    out.sort(key=lambda c: c.top)
    return out


def weight_multiplicities(G: CrystalGraph) -> Counter:
    """Number of vertices of each weight."""
    return Counter(kernels.weight(v, G.n) for v in G.vertices)


def _lr_words_chunk(args) -> LRResult:
    words, mu, n = args
    res = LRResult()
    w0 = Permutation.longest(n)
    for u in words:
        shape = mu
        for letter in reversed(u):
            shape = add_box(shape, n - letter + 1)
            if shape is None:
                break
        else:
            nu_minus_mu = tuple(a - b for a, b in zip(_pad(shape, n), _pad(mu, n)))
            if kernels.weight(u, n) != w0.act(nu_minus_mu):
                raise CrystalError(f"weight condition fails for witness {u}")
            res.add(shape, u)
    return res


def _pad(lam: Partition, n: int) -> tuple[int, ...]:
    return tuple(lam) + (0,) * (n - len(lam))


def _lr_insertion_chunk(args) -> LRResult:
    words, lam, mu, n = args
    res = LRResult()
    low_mu = lowest_tableau(mu, n).reading_word()
    for u in words:
        T = ShiftedTableau.from_word(u, lam)
        R = insert_word(T, low_mu, check=False)
        nu = R.shape
        if len(nu) <= n and R == lowest_tableau(nu, n):
            res.add(nu, T)
    return res


def _run_chunks(fn, words, extra, workers: Optional[int]) -> LRResult:
    words = list(words)
    if workers is None or workers <= 1 or len(words) < PARALLEL_THRESHOLD:
        return fn((words, *extra))
    size = -(-len(words) // (workers * 4))
    chunks = [(words[k:k + size], *extra) for k in range(0, len(words), size)]
    res = LRResult()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves chunk order, so witness lists are schedule independent
        for part in pool.map(fn, chunks):
            res.merge(part)
    return res


def lr_words(lam: Partition, mu: Partition, n: int, workers: Optional[int] = None) -> LRResult:
    """Keep reading words ``u`` of ``B(lam)`` for which adding boxes to ``mu`` in rows
    ``n-u_N+1, ..., n-u_1+1`` (last letter first) stays a shifted shape."""
    lam = check_strict(lam, n)
    mu = check_strict(mu, n)
    return _run_chunks(_lr_words_chunk, crystal_words(lam, n), (mu, n), workers)


def lr_insertion(lam: Partition, mu: Partition, n: int, workers: Optional[int] = None) -> LRResult:
    """Keep tableaux ``T`` of ``B(lam)`` with ``T <- L^mu`` equal to some ``L^nu``."""
    lam = check_strict(lam, n)
    mu = check_strict(mu, n)
    return _run_chunks(_lr_insertion_chunk, crystal_words(lam, n), (lam, mu, n), workers)


def lr_graph(lam: Partition, mu: Partition, n: int) -> LRResult:
    """Top weights of the connected components of the tensor graph; witnesses are the tops."""
    res = LRResult()
    for comp in components(tensor_words(lam, mu, n)):
        res.add(comp.shape, comp.top)
    return res


def lr(lam: Partition, mu: Partition, n: int, method: str, workers: Optional[int] = None) -> LRResult:
    if method == "words":
        return lr_words(lam, mu, n, workers)
    if method == "insertion":
        return lr_insertion(lam, mu, n, workers)
    if method == "graph":
        return lr_graph(lam, mu, n)
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def crystal_size(lam: Partition, n: int) -> int:
    return len(crystal_words(tuple(lam), n))


def conservation_holds(result: LRResult, lam: Partition, mu: Partition, n: int) -> bool:
    """``sum_nu f^nu |B(nu)| == |B(lam)| |B(mu)|``."""
    total = sum(m * crystal_size(nu, n) for nu, m in result.coefficients.items())
    return total == crystal_size(lam, n) * crystal_size(mu, n)
