import itertools
import math
import random

import pytest

from hypergraph_spectra.errors import GuardError
from hypergraph_spectra.hypergraphs import (
    Hypergraph,
    complete,
    complete_cylinder,
    disjoint_union,
    single_edge,
)
from hypergraph_spectra.macaulay import (
    build_macaulay,
    charpoly,
    int_determinant,
    predicted_coefficient_bits,
)
from hypergraph_spectra.polynomials import UniPoly


def _charpoly_by_permanent_expansion(h):
    """Leibniz-formula characteristic polynomial for k=2, as an oracle."""
    assert h.k == 2
    n = h.n
    lam = UniPoly({1: 1})
    entries = {}
    for i in range(n):
        entries[(i, i)] = lam
    for (a, b) in h.edges:
        entries[(a, b)] = UniPoly({0: -1})
        entries[(b, a)] = UniPoly({0: -1})
    total = UniPoly()
    for perm in itertools.permutations(range(n)):
        term = UniPoly.one()
        ok = True
        for i in range(n):
            e = entries.get((i, perm[i]))
            if e is None:
                ok = False
                break
            term = term * e
        if not ok:
            continue
        inversions = sum(1 for i in range(n) for j in range(i + 1, n)
                         if perm[i] > perm[j])
        total = total + (term if inversions % 2 == 0 else -term)
    return total


def test_int_determinant_small():
    assert int_determinant([[2]]) == 2
    assert int_determinant([[1, 2], [3, 4]]) == -2
    assert int_determinant([[0, 1], [1, 0]]) == -1
    assert int_determinant([[1, 2], [2, 4]]) == 0
    assert int_determinant([]) == 1
    # 4x4 with a zero diagonal, forces pivoting
    m = [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]]
    # cross-check against numpy rounding
    import numpy as np

    assert int_determinant(m) == round(np.linalg.det(np.array(m, float)))


def test_int_determinant_random_vs_numpy():
    import numpy as np

    rng = random.Random(23)
    for _ in range(30):
        n = rng.randint(1, 6)
        m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        want = round(np.linalg.det(np.array(m, float)))
        assert int_determinant(m) == want


def test_build_shapes_single_edge():
    mac = build_macaulay(single_edge(3).eigen_system())
    assert mac.size == math.comb(6, 2) == 15
    assert mac.reduced_count == 3 * 2 ** 2 == 12
    assert mac.max_row_sum == 1
    # every row col set is disjoint from the diagonal
    for r, cols in enumerate(mac.rows):
        assert r not in cols


def test_build_shapes_k2():
    # k=2 recovers the adjacency matrix: all monomials reduced
    path = Hypergraph(3, 2, [(0, 1), (1, 2)])
    mac = build_macaulay(path.eigen_system())
    assert mac.size == 3
    assert mac.reduced_count == 3
    got = {(r, c) for r, cols in enumerate(mac.rows) for c in cols}
    # monomials are unit vectors in descending lex: x0, x1, x2
    assert got == {(0, 1), (1, 0), (1, 2), (2, 1)}


def test_guard_raises_with_estimate():
    with pytest.raises(GuardError) as ei:
        build_macaulay(complete(5, 4).eigen_system(), max_matrix_size=100)
    assert ei.value.estimate["matrix_size"] == math.comb(15, 4)


def test_predicted_bits_monotone():
    assert predicted_coefficient_bits(10, 1) < predicted_coefficient_bits(10, 5)
    assert predicted_coefficient_bits(10, 3) < predicted_coefficient_bits(50, 3)


def test_charpoly_single_vertex():
    h = Hypergraph(1, 3, [])
    res = charpoly(h)
    assert res.phi == UniPoly({1: 1})


def test_charpoly_edgeless():
    h = Hypergraph(3, 3, [])
    res = charpoly(h, decompose=False)
    assert res.phi == UniPoly({12: 1})


def test_charpoly_k2_triangle():
    h = complete(3, 2)
    res = charpoly(h)
    # lambda^3 - 3 lambda - 2
    assert res.phi == UniPoly({3: 1, 1: -3, 0: -2})
    assert res.phi == _charpoly_by_permanent_expansion(h)


def test_charpoly_k2_exhaustive_n4():
    pool = list(itertools.combinations(range(4), 2))
    for bits in range(2 ** len(pool)):
        edges = [pool[i] for i in range(len(pool)) if bits >> i & 1]
        h = Hypergraph(4, 2, edges)
        res = charpoly(h, decompose=False)
        assert res.phi == _charpoly_by_permanent_expansion(h)


def test_charpoly_k2_random_n6():
    rng = random.Random(31)
    pool = list(itertools.combinations(range(6), 2))
    for _ in range(10):
        edges = rng.sample(pool, rng.randint(0, len(pool)))
        h = Hypergraph(6, 2, edges)
        res = charpoly(h, decompose=False)
        assert res.phi == _charpoly_by_permanent_expansion(h)


def test_charpoly_single_3edge():
    res = charpoly(single_edge(3))
    want = UniPoly({3: 1}) * UniPoly({3: 1, 0: -1}) ** 3
    assert res.phi == want
    assert res.method == "interpolation"
    assert res.matrix_size == 15 and res.reduced_size == 3
    assert res.detM is not None and res.detMprime is not None
    assert res.detM == res.phi * res.detMprime


def test_charpoly_single_4edge():
    res = charpoly(single_edge(4))
    want = UniPoly({44: 1}) * UniPoly({4: 1, 0: -1}) ** 16
    assert res.phi == want


def test_charpoly_methods_agree_tetra():
    h = Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])
    a = charpoly(h, method="interpolation")
    b = charpoly(h, method="modular")
    assert a.phi == b.phi
    assert a.phi.degree == 4 * 2 ** 3


def test_charpoly_methods_agree_cylinder():
    h = complete_cylinder([1, 1, 2])
    a = charpoly(h, method="interpolation")
    b = charpoly(h, method="modular")
    assert a.phi == b.phi


def test_charpoly_relabel_invariant():
    h = Hypergraph(4, 3, [(0, 1, 2), (1, 2, 3)])
    base = charpoly(h).phi
    rng = random.Random(3)
    for _ in range(3):
        perm = list(range(4))
        rng.shuffle(perm)
        assert charpoly(h.relabel(perm)).phi == base


def test_charpoly_disjoint_union_identity():
    g = single_edge(3)
    u = disjoint_union(g, Hypergraph(1, 3, []))
    via_components = charpoly(u, decompose=True)
    direct = charpoly(u, decompose=False)
    assert via_components.method == "disjoint"
    assert via_components.phi == direct.phi
    phi_e3 = UniPoly({3: 1}) * UniPoly({3: 1, 0: -1}) ** 3
    want = phi_e3 ** 2 * UniPoly({1: 1}) ** 8
    assert direct.phi == want


def test_charpoly_codegree_closed_forms_random():
    # codegrees 1..k-1 vanish; codegree k counts edges
    rng = random.Random(41)
    pool = list(itertools.combinations(range(4), 3))
    for _ in range(6):
        edges = rng.sample(pool, rng.randint(1, 4))
        h = Hypergraph(4, 3, edges)
        phi = charpoly(h, decompose=False).phi
        assert phi.coeff_at_codegree(1) == 0
        assert phi.coeff_at_codegree(2) == 0
        k, n = 3, 4
        want = -(k ** (k - 2)) * (k - 1) ** (n - k) * len(edges)
        assert phi.coeff_at_codegree(3) == want


def test_charpoly_eval_points_override():
    h = single_edge(3)
    res = charpoly(h, method="interpolation", eval_points=20)
    want = UniPoly({3: 1}) * UniPoly({3: 1, 0: -1}) ** 3
    assert res.phi == want
    with pytest.raises(ValueError):
        charpoly(h, method="interpolation", eval_points=3)


def test_charpoly_threads_match():
    h = Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])
    a = charpoly(h, threads=1)
    b = charpoly(h, threads=4)
    assert a.phi == b.phi
