"""The ten acceptance criteria, each timed against its own limit.

Every criterion prints one ``[PASS]`` / ``[FAIL]`` line; the lines are repeated
in the "acceptance criteria" section of the pytest summary.
"""

import itertools
import time
from contextlib import contextmanager

import conftest
import figures
from helpers import S, T, W
from qcrystal import formats
from qcrystal.decompose import METHODS, components, conservation_holds, lr, tensor_power, tensor_words
from qcrystal.insertion import crystal_equivalent, insert_letter, insertion_steps
from qcrystal.partitions import strict_partitions
from qcrystal.ssdt import EMPTY, build_crystal, highest_tableau, lowest_tableau, tableaux
from qcrystal.weyl import Permutation, e_odd, enumerate_highest, f_odd, is_highest, w_action
from qcrystal.words import (
    Label,
    all_words,
    e_even,
    e_odd1,
    eps,
    f_even,
    f_odd1,
    pairing,
    phi,
    weight,
)

FIGURE_LABELS = (Label(1), Label(2), Label(1, True))


@contextmanager
def criterion(num, title, limit):
    """Time the body; record a pass/fail line and fail the test if over ``limit`` seconds."""
    notes = []
    start = time.perf_counter()
    ok = False
    try:
        yield notes
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        passed = ok and elapsed < limit
        detail = f" [{'; '.join(notes)}]" if notes else ""
        line = (f"[{'PASS' if passed else 'FAIL'}] AC{num} {title}"
                f" ({elapsed:.2f} s, limit {limit:g} s){detail}")
        conftest.ACCEPTANCE_LINES.append((num, line))
        print(line)
    assert elapsed < limit, f"AC{num} took {elapsed:.1f} s (limit {limit} s)"


def figure_view(G):
    verts = {formats.vertex_literal(G, v) for v in G}
    edges = {
        (formats.vertex_literal(G, a), str(lab), formats.vertex_literal(G, b))
        for a, lab, b in G.edge_set(FIGURE_LABELS)
    }
    return verts, edges


def strict_upto(max_size, n):
    for N in range(max_size + 1):
        yield from strict_partitions(N, n)


def test_ac1_tensor_square_figure():
    with criterion(1, "B (x) B, n=3 edge-exact", 1) as notes:
        verts, edges = figure_view(tensor_words((1,), (1,), 3))
        assert verts == figures.TENSOR_SQUARE_VERTICES
        assert edges == figures.TENSOR_SQUARE_EDGES
        odd = {e for e in edges if e[1] == "1~"}
        assert {("11", "1~", "12"), ("21", "1~", "22"), ("31", "1~", "32")} <= odd
        notes.append(f"{len(verts)} vertices, {len(edges)} edges")


def test_ac2_single_row_and_21_figures():
    with criterion(2, "B((3)) and B((2,1)), n=3 edge-exact; B^(x)3 = 19 + 8", 1) as notes:
        for lam, fig_v, fig_e in (
            ((3,), figures.B_3_VERTICES, figures.B_3_EDGES),
            ((2, 1), figures.B_21_VERTICES, figures.B_21_EDGES),
        ):
            verts, edges = figure_view(build_crystal(lam, 3))
            assert verts == fig_v
            assert edges == fig_e
            notes.append(f"{lam}: {len(verts)} vertices, {len(edges)} edges")
        comps = components(tensor_power(3, 3))
        assert sorted(len(c) for c in comps) == [8, 19]
        assert {c.shape for c in comps} == {(3,), (2, 1)}


def test_ac3_31_figure():
    with criterion(3, "B((3,1)), n=3 edge-exact", 1) as notes:
        G = build_crystal((3, 1), 3)
        verts, edges = figure_view(G)
        assert len(verts) == 24
        assert verts == figures.B_31_VERTICES
        assert edges == figures.B_31_EDGES
        assert [formats.vertex_literal(G, v) for v in G.highest()] == ["211/1"]
        assert [formats.vertex_literal(G, v) for v in G.lowest()] == ["333/2"]
        notes.append(f"{len(verts)} vertices, {len(edges)} edges")


def test_ac4_insertion_golden():
    with criterion(4, "insertion golden tests", 1):
        assert insert_letter(T("66135"), 2) == T("66325", "1")
        assert insert_letter(T("66135", "324"), 2) == T("66325", "421", "3")
        steps = list(insertion_steps(T("22", "1"), W("333")))
        assert steps == [T("223", "1"), T("323", "12"), T("333", "22", "1")]


def test_ac5_lr_golden():
    with criterion(5, "LR golden test (2,1) x (3), n=3, all methods", 1) as notes:
        expected = {(3, 2, 1): 1, (4, 2): 1, (5, 1): 1}
        results = {m: lr((2, 1), (3,), 3, m) for m in METHODS}
        for m, res in results.items():
            assert res.as_dict() == expected, m
        words = {S(u) for ws in results["words"].witnesses.values() for u in ws}
        tabs = {str(t) for ws in results["insertion"].witnesses.values() for t in ws}
        assert words == {"122", "232", "233"}
        assert tabs == {"22/1", "32/2", "33/2"}
        notes.append(f"words {sorted(words)}, tableaux {sorted(tabs)}")


def test_ac6_extremal_tableaux():
    with criterion(6, "T^lam, L^lam and S_w0 T^lam = L^lam", 30) as notes:
        assert highest_tableau((7, 4, 2), 4) == T("3322111", "2211", "11")
        assert lowest_tableau((7, 4, 2), 4) == T("4444444", "3333", "22")
        count = 0
        for n in range(1, 5):
            w0 = Permutation.longest(n)
            for lam in strict_upto(8, n):
                top = highest_tableau(lam, n).reading_word()
                assert w_action(top, w0) == lowest_tableau(lam, n).reading_word(), (lam, n)
                count += 1
        notes.append(f"{count} (lam, n) pairs")


def test_ac7_highest_weight_enumeration():
    with criterion(7, "enumerate_highest = brute-force scan, N <= 6, n <= 4", 300) as notes:
        cases = 0
        for n in range(1, 5):
            for N in range(0, 7):
                scan = {w for w in all_words(N, n) if is_highest(w, n)}
                assert enumerate_highest(N, n) == scan, (N, n)
                cases += 1
        notes.append(f"{cases} cases")


def _then(op, x):
    return None if x is None else op(x)


def axiom_violations(w, n, perms):
    bad = []
    mu = weight(w, n)
    for i in range(1, n):
        alpha = [0] * n
        alpha[i - 1], alpha[i] = 1, -1
        lowered = tuple(m - a for m, a in zip(mu, alpha))
        v = f_even(w, i, n)
        if v is not None and (e_even(v, i, n) != w or weight(v, n) != lowered):
            bad.append(("even law", i))
        u = e_even(w, i, n)
        if u is not None and f_even(u, i, n) != w:
            bad.append(("even inverse", i))
        if phi(w, i, n) - eps(w, i, n) != pairing(mu, i):
            bad.append(("phi - eps", i))
        v = f_odd(w, i, n)
        if v is not None and (e_odd(v, i, n) != w or weight(v, n) != lowered):
            bad.append(("odd law", i))
        u = e_odd(w, i, n)
        if u is not None and f_odd(u, i, n) != w:
            bad.append(("odd inverse", i))
    if n < 2:
        # rank 1 has no operators; only the Weyl group part applies
        return reduced_word_violations(w, perms)
    if _then(lambda x: f_odd1(x, n), f_odd1(w, n)) is not None:
        bad.append(("f1bar^2", 1))
    if _then(lambda x: e_odd1(x, n), e_odd1(w, n)) is not None:
        bad.append(("e1bar^2", 1))
    for i in range(3, n):
        for even in (lambda x: f_even(x, i, n), lambda x: e_even(x, i, n)):
            for odd in (lambda x: f_odd1(x, n), lambda x: e_odd1(x, n)):
                if _then(odd, even(w)) != _then(even, odd(w)):
                    bad.append(("commutation", i))
        up = e_odd1(w, n)
        if up is not None and (eps(up, i, n), phi(up, i, n)) != (eps(w, i, n), phi(w, i, n)):
            bad.append(("eps/phi under e1bar", i))
    return bad + reduced_word_violations(w, perms)


def reduced_word_violations(w, perms):
    bad = []
    for p in perms:
        images = {w_action(w, p, rw) for rw in p.reduced_words()}
        if len(images) != 1:
            bad.append(("reduced word", p.images))
    return bad


def test_ac8_operator_axioms():
    with criterion(8, "operator axiom suite, |w| <= 5, n <= 4", 300) as notes:
        checked = 0
        violations = []
        for n in range(1, 5):
            perms = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
            for N in range(0, 6):
                for w in all_words(N, n):
                    violations += [(w, n, b) for b in axiom_violations(w, n, perms)]
                    checked += 1
        notes.append(f"{checked} words, {len(violations)} violations")
        assert not violations, violations[:5]


def test_ac9_lr_three_way_sweep():
    with criterion(9, "three-way LR agreement + conservation, |lam|+|mu| <= 8, 2 <= n <= 4", 600) as notes:
        cases = 0
        bad = []
        for n in range(2, 5):
            for a in range(0, 9):
                for lam in strict_partitions(a, n):
                    for b in range(0, 9 - a):
                        for mu in strict_partitions(b, n):
                            res = [lr(lam, mu, n, m) for m in METHODS]
                            if not (res[0] == res[1] == res[2]):
                                bad.append((lam, mu, n, "disagree"))
                            if not conservation_holds(res[2], lam, mu, n):
                                bad.append((lam, mu, n, "conservation"))
                            cases += 1
        notes.append(f"{cases} cases, {len(bad)} failures")
        assert not bad, bad[:5]


def test_ac10_insertion_crystal_equivalence():
    with criterion(10, "read(T) x ~ read(T <- x), |T| <= 4, n <= 4", 600) as notes:
        checked = 0
        bad = []
        for n in range(1, 5):
            tabs = [EMPTY] + [t for N in range(1, 5) for lam in strict_partitions(N, n)
                              for t in tableaux(lam, n)]
            for tab in tabs:
                for x in range(1, n + 1):
                    out = insert_letter(tab, x)
                    if not crystal_equivalent(tab.reading_word() + (x,), out.reading_word(), n):
                        bad.append((str(tab), x, n))
                    checked += 1
        notes.append(f"{checked} (T, x, n) triples, {len(bad)} failures")
        assert not bad, bad[:5]
