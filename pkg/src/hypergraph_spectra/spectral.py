"""Numeric spectral analysis: largest eigenvalue, verification, bounds,
coloring, and closed-form spectra for structured families.

Eigenpairs use the link form of the eigenvalue equations: at vertex j,
sum over edges through j of the product of the other k-1 entries equals
lambda * x_j^(k-1).
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import GuardError
from .hypergraphs import (
    Hypergraph,
    cartesian_product,
    complete,
    complete_cylinder,
    is_subgraph,
    ultracube,
)
from .polynomials import UniPoly, numeric_roots

__all__ = [
    "ColoringReport",
    "Eigenpair",
    "FamilySpectrum",
    "LambdaMaxReport",
    "cartesian_eigenpair",
    "complete3_spectrum",
    "cylinder_spectrum",
    "degree_bounds_check",
    "greedy_color",
    "lambda_max",
    "root_of_unity_symmetry",
    "single_edge_charpoly",
    "subgraph_monotonicity_check",
    "ultracube_sporadic",
    "verify_eigenpair",
]


# -- eigenpair verification ----------------------------------------------------


def verify_eigenpair(h: Hypergraph, lam, x) -> float:
    """Max residual of the eigenvalue equations, scaled by the vector size.

    Returns max_j |sum over links(j) of x^e - lam * x_j^(k-1)|, divided by
    max(1, max_i |x_i|^(k-1)).
    """
    vec = [complex(v) for v in x]
    if len(vec) != h.n:
        raise ValueError(f"vector has {len(vec)} entries for n={h.n}")
    if all(v == 0 for v in vec):
        raise ValueError("zero vector is not an eigenvector")
    lam = complex(lam)
    k = h.k
    norm = max(abs(v) for v in vec) ** (k - 1)
    worst = 0.0
    for j in range(h.n):
        total = 0j
        for rest in h.link(j):
            prod = 1 + 0j
            for u in rest:
                prod *= vec[u]
            total += prod
        worst = max(worst, abs(total - lam * vec[j] ** (k - 1)))
    return worst / max(1.0, norm)


@dataclass
class Eigenpair:
    value: complex
    vector: tuple
    residual: float


# -- largest eigenvalue ---------------------------------------------------------


@dataclass
class LambdaMaxReport:
    """Largest eigenvalue with a Collatz-style enclosure.

    value sits midway in [lower, upper]; the vector is normalized so the
    k-th powers of its entries sum to 1, and is strictly positive when the
    input is connected.
    """

    value: float
    vector: tuple
    lower: float
    upper: float
    iterations: int
    converged: bool
    residual: float

    @property
    def width(self) -> float:
        return self.upper - self.lower


def _uniform_unit_vector(n: int, k: int):
    return [n ** (-1.0 / k)] * n


def _lambda_max_connected(h: Hypergraph, tol: float, max_iter: int):
    n, k = h.n, h.k
    links = [h.link(v) for v in range(n)]
    if h.num_edges == 0:
        x = _uniform_unit_vector(n, k)
        return LambdaMaxReport(0.0, tuple(x), 0.0, 0.0, 0, True, 0.0)
    shift = float(max(len(lk) for lk in links))
    x = _uniform_unit_vector(n, k)
    lower = -math.inf
    upper = math.inf
    iterations = 0
    converged = False
    inv = 1.0 / (k - 1)
    while iterations < max_iter:
        iterations += 1
        ax = []
        for j in range(n):
            s = 0.0
            for rest in links[j]:
                prod = 1.0
                for u in rest:
                    prod *= x[u]
                s += prod
            ax.append(s)
        powers = [v ** (k - 1) for v in x]
        ratios = [a / p for a, p in zip(ax, powers)]
        lower = max(lower, min(ratios))
        upper = min(upper, max(ratios))
        mid = 0.5 * (lower + upper)
        residual = max(abs(a - mid * p) for a, p in zip(ax, powers))
        if upper - lower <= tol and residual <= max(tol * 1e-2, 1e-13):
            converged = True
            break
        y = [(a + shift * p) ** inv for a, p in zip(ax, powers)]
        scale = sum(v ** k for v in y) ** (1.0 / k)
        x = [v / scale for v in y]
    mid = 0.5 * (lower + upper)
    return LambdaMaxReport(mid, tuple(x), lower, upper, iterations, converged,
                           verify_eigenpair(h, mid, x))


def lambda_max(h: Hypergraph, tol: float = 1e-8,
               max_iter: int = 100000) -> LambdaMaxReport:
    """Largest eigenvalue via shifted power iteration with certified bounds.

    A connected input yields a strictly positive eigenvector.  Disconnected
    inputs are decomposed; the report carries the winning component's vector
    extended by zeros (still an exact eigenpair of the union) and the summed
    iteration count.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if h.num_edges == 0:
        x = _uniform_unit_vector(h.n, h.k)
        return LambdaMaxReport(0.0, tuple(x), 0.0, 0.0, 0, True, 0.0)
    comps = h.components()
    if len(comps) == 1:
        return _lambda_max_connected(h, tol, int(max_iter))
    best = None
    best_verts = None
    total_iter = 0
    all_converged = True
    for sub, verts in comps:
        rep = _lambda_max_connected(sub, tol, int(max_iter))
        total_iter += rep.iterations
        all_converged = all_converged and rep.converged
        if best is None or rep.value > best.value:
            best = rep
            best_verts = verts
    full = [0.0] * h.n
    for i, v in enumerate(best_verts):
        full[v] = best.vector[i]
    return LambdaMaxReport(best.value, tuple(full), best.lower, best.upper,
                           total_iter, all_converged,
                           verify_eigenpair(h, best.value, full))


def degree_bounds_check(h: Hypergraph, tol: float = 1e-6):
    """(average degree, lambda_max, max degree, pass) for the sandwich bound."""
    if h.num_edges == 0:
        return Fraction(0), 0.0, 0, True
    dmin, davg, dmax = h.degrees()
    lam = lambda_max(h).value
    ok = float(davg) - tol <= lam <= dmax + tol
    return davg, lam, dmax, ok


# -- coloring --------------------------------------------------------------------


@dataclass
class ColoringReport:
    """Greedy weak coloring along a smallest-last elimination order.

    colors maps each vertex to a positive integer; no edge ends up with all
    vertices the same color; count <= degeneracy + 1.
    """

    colors: dict
    count: int
    order: tuple
    degeneracy: int


def greedy_color(h: Hypergraph) -> ColoringReport:
    n = h.n
    alive_edges = [set(e) for e in h.edges]
    incident = [[] for _ in range(n)]
    for idx, e in enumerate(h.edges):
        for v in e:
            incident[v].append(idx)
    removed = [False] * n
    edge_alive = [True] * len(h.edges)
    degree = [len(incident[v]) for v in range(n)]
    order = []
    degeneracy = 0
    for _ in range(n):
        v = min((u for u in range(n) if not removed[u]),
                key=lambda u: (degree[u], u))
        degeneracy = max(degeneracy, degree[v])
        order.append(v)
        removed[v] = True
        for idx in incident[v]:
            if edge_alive[idx]:
                edge_alive[idx] = False
                for u in alive_edges[idx]:
                    if not removed[u]:
                        degree[u] -= 1
    colors: dict = {}
    for v in reversed(order):
        forbidden = set()
        for idx in incident[v]:
            others = [u for u in h.edges[idx] if u != v]
            if all(u in colors for u in others):
                cs = {colors[u] for u in others}
                if len(cs) == 1:
                    forbidden.add(next(iter(cs)))
        c = 1
        while c in forbidden:
            c += 1
        colors[v] = c
    for e in h.edges:
        assert len({colors[v] for v in e}) > 1, "monochromatic edge"
    return ColoringReport(colors=colors, count=max(colors.values()),
                          order=tuple(order), degeneracy=degeneracy)


def subgraph_monotonicity_check(g: Hypergraph, h: Hypergraph,
                                embedding=None, tol: float = 1e-8) -> bool:
    """Check lambda_max(g) <= lambda_max(h) + tol for an embedded subgraph."""
    if not is_subgraph(g, h, embedding):
        raise ValueError("g does not embed into h along the given map")
    return lambda_max(g).value <= lambda_max(h).value + tol


# -- structured families ----------------------------------------------------------


def single_edge_charpoly(k: int) -> UniPoly:
    """Closed-form characteristic polynomial of one k-edge."""
    if k < 2:
        raise ValueError("uniformity k must be at least 2")
    r = k * (k - 1) ** (k - 1) - k ** (k - 1)
    body = UniPoly({k: 1, 0: -1}) ** (k ** (k - 2))
    return body.shift(r)


def root_of_unity_symmetry(phi: UniPoly, k: int) -> bool:
    """True when every nonzero coefficient sits at codegree 0 mod k."""
    if phi.is_zero:
        raise ValueError("zero polynomial")
    top = phi.degree
    return all((top - d) % k == 0 for d, v in phi.coefficients().items() if v)


@dataclass
class FamilySpectrum:
    """Eigenvalues of a structured family with verification witnesses.

    values are deduplicated; descriptions give the radical-times-root-of-
    unity form; witnesses are explicit eigenvectors (None when a value is
    listed without a constructed vector) and residuals come from
    verify_eigenpair on those witnesses.
    """

    family: str
    values: tuple
    descriptions: tuple
    residuals: tuple
    witnesses: tuple
    note: str

    @property
    def real_values(self) -> list:
        return sorted(v.real for v in self.values if abs(v.imag) < 1e-9)

    def max_real(self) -> float:
        return max(self.real_values)


def _dedup_key(z: complex):
    return (round(z.real, 9) + 0.0, round(z.imag, 9) + 0.0)


def cylinder_spectrum(part_sizes, *, max_assignments: int = 10 ** 6,
                      include_witnesses: bool = True) -> FamilySpectrum:
    """Spectrum of the complete cylinder with the given part sizes.

    Nonzero values come from per-part phase sums: each vertex of part i
    carries a (k-1)-st root of unity, m_i is the part sum, and the k values
    with lambda^k = prod m_i^(k-1) are eigenvalues, realized by the vector
    x_v = phase_v * m_i^(-1/k).  Only the phase counts matter, so parts are
    enumerated by count vectors.  Zero belongs to the spectrum except for a
    single 2-uniform edge.
    """
    sizes = [int(m) for m in part_sizes]
    k = len(sizes)
    num_phases = max(k - 1, 1)
    total_assignments = 1
    for m in sizes:
        total_assignments *= math.comb(m + num_phases - 1, num_phases - 1)
    if total_assignments > max_assignments:
        raise GuardError(
            f"{total_assignments} phase assignments exceed the guard",
            {"assignments": total_assignments, "guard": max_assignments})
    h = complete_cylinder(sizes)
    n = h.n
    groups = []
    base = 0
    for m in sizes:
        groups.append(list(range(base, base + m)))
        base += m
    zeta = cmath.exp(2j * cmath.pi / num_phases) if num_phases > 1 else 1.0
    omega = cmath.exp(2j * cmath.pi / k)
    found: dict = {}

    def add(value, desc, witness):
        key = _dedup_key(value)
        if key in found:
            return
        res = verify_eigenpair(h, value, witness) if witness else None
        found[key] = (value, desc, res, tuple(witness) if witness else None)

    # zero, with an exact witness
    if k >= 3:
        e0 = [0.0] * n
        e0[0] = 1.0
        add(0j, "0", e0)
    elif n > 2:
        big = max(range(k), key=lambda i: sizes[i])
        w = [0.0] * n
        w[groups[big][0]] = 1.0
        w[groups[big][1]] = -1.0
        add(0j, "0", w)

    per_part_counts = [
        list(_count_vectors(m, num_phases)) for m in sizes
    ]
    for counts in itertools.product(*per_part_counts):
        ms = []
        for cvec in counts:
            s = 0j
            for r, c in enumerate(cvec):
                s += c * (zeta ** r if num_phases > 1 else 1.0)
            ms.append(s)
        if any(abs(m) < 1e-12 for m in ms):
            continue
        mus = [m ** (-1.0 / k) for m in ms]
        lam_base = 1 + 0j
        for m, mu in zip(ms, mus):
            lam_base *= m * mu
        m_desc = ",".join(_fmt_complex(m) for m in ms)
        for t in range(k):
            lam = lam_base * omega ** t
            key = _dedup_key(lam)
            if key in found:
                continue
            witness = None
            if include_witnesses:
                witness = [0j] * n
                for i, (grp, cvec) in enumerate(zip(groups, counts)):
                    mu = mus[i] * (omega ** t if i == 0 else 1.0)
                    pos = 0
                    for r, c in enumerate(cvec):
                        for _ in range(c):
                            phase = zeta ** r if num_phases > 1 else 1.0
                            witness[grp[pos]] = phase * mu
                            pos += 1
            desc = f"rot{t} of ({m_desc})^({k - 1}/{k})"
            add(lam, desc, witness)
    vals, descs, ress, wits = [], [], [], []
    for value, desc, res, wit in found.values():
        vals.append(value)
        descs.append(desc)
        ress.append(res)
        wits.append(wit)
    return FamilySpectrum(
        family="complete_cylinder" + str(tuple(sizes)),
        values=tuple(vals), descriptions=tuple(descs), residuals=tuple(ress),
        witnesses=tuple(wits), note="transversal phase construction")


def _count_vectors(total: int, bins: int):
    """All nonnegative integer vectors of length bins summing to total."""
    if bins == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _count_vectors(total - first, bins - 1):
            yield (first,) + rest


def _fmt_complex(z: complex) -> str:
    re = round(z.real, 6)
    im = round(z.imag, 6)
    if im == 0:
        return f"{re:g}"
    return f"{re:g}{im:+g}i"


def complete3_spectrum(n: int) -> FamilySpectrum:
    """Spectrum of the complete 3-uniform hypergraph on n vertices.

    Besides 0, 1, and C(n-1,2), every eigenvalue realized by a two-valued
    vector (c on t vertices, 1 on the rest) appears; eliminating lambda from
    the two vertex equations leaves a degree-4 polynomial in c per t, whose
    roots give lambda = C(t,2)c^2 + t(n-t-1)c + C(n-t-1,2).
    """
    if n < 3:
        raise ValueError("need n >= 3")
    h = complete(n, 3)
    found: dict = {}

    def add(value, desc, witness):
        key = _dedup_key(value)
        if key in found:
            return
        res = verify_eigenpair(h, value, witness)
        found[key] = (value, desc, res, tuple(witness))

    ones = [1.0] * n
    add(complex(math.comb(n - 1, 2)), f"C({n - 1},2)", ones)
    zeta3 = cmath.exp(2j * cmath.pi / 3)
    w1 = [1.0 + 0j, zeta3, zeta3 ** 2] + [0j] * (n - 3)
    add(1 + 0j, "1", w1)
    e0 = [0.0] * n
    e0[0] = 1.0
    add(0j, "0", e0)
    for t in range(1, n // 2 + 1):
        quartic = UniPoly({
            4: math.comb(t, 2),
            3: t * (n - t - 1),
            2: math.comb(n - t - 1, 2) - math.comb(t - 1, 2),
            1: -(t - 1) * (n - t),
            0: -math.comb(n - t, 2),
        })
        for c, _mult in numeric_roots(quartic).roots:
            lam = (math.comb(t, 2) * c * c + t * (n - t - 1) * c
                   + math.comb(n - t - 1, 2))
            witness = [c] * t + [1.0 + 0j] * (n - t)
            add(lam, f"t={t}, c={_fmt_complex(c)}", witness)
    vals, descs, ress, wits = [], [], [], []
    for value, desc, res, wit in found.values():
        vals.append(value)
        descs.append(desc)
        ress.append(res)
        wits.append(wit)
    return FamilySpectrum(
        family=f"complete({n},3)",
        values=tuple(vals), descriptions=tuple(descs), residuals=tuple(ress),
        witnesses=tuple(wits), note="two-valued vectors plus a quartic")


def cartesian_eigenpair(g: Hypergraph, lam_g, u, h: Hypergraph, lam_h, v,
                        *, tol: float = 1e-8) -> Eigenpair:
    """Combine factor eigenpairs into one of the cartesian product.

    The product vector w_(a,b) = u_a * v_b carries eigenvalue lam_g + lam_h;
    vertex (a, b) has index a * h.n + b, matching cartesian_product.
    """
    res_g = verify_eigenpair(g, lam_g, u)
    if res_g > tol:
        raise ValueError(f"first factor pair fails verification ({res_g:.2e})")
    res_h = verify_eigenpair(h, lam_h, v)
    if res_h > tol:
        raise ValueError(f"second factor pair fails verification ({res_h:.2e})")
    w = [0j] * (g.n * h.n)
    for a in range(g.n):
        for b in range(h.n):
            w[a * h.n + b] = complex(u[a]) * complex(v[b])
    value = complex(lam_g) + complex(lam_h)
    prod = cartesian_product(g, h)
    return Eigenpair(value=value, vector=tuple(w),
                     residual=verify_eigenpair(prod, value, w))


def ultracube_sporadic(k: int, d: int) -> Eigenpair:
    """The eigenpair (d^(1/k), x) of the k-uniform d-dimensional ultracube
    with x = d^(1/k) at the origin, 1 at Hamming distance one, 0 elsewhere.

    The zero pattern only closes the equations when edges have at least two
    other vertices, so k > 2; d > 1 keeps the value off the single-edge
    spectrum.
    """
    if k <= 2:
        raise ValueError("needs k > 2")
    if d <= 1:
        raise ValueError("needs d > 1")
    h = ultracube(k, d)
    lam = d ** (1.0 / k)
    x = [0.0] * h.n
    x[0] = lam
    for axis in range(d):
        stride = k ** (d - 1 - axis)
        for c in range(1, k):
            x[c * stride] = 1.0
    return Eigenpair(value=complex(lam), vector=tuple(x),
                     residual=verify_eigenpair(h, lam, x))
