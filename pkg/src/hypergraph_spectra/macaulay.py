"""Characteristic polynomials via the Macaulay determinant quotient.

The eigenvalue system of a k-uniform hypergraph on n vertices consists of n
forms of degree k-1.  Writing D = n(k-1) - n + 1, every monomial of degree D
has some coordinate >= k-1, so each monomial row can be assigned to the
first such coordinate and filled with the corresponding form.  The matrix is
lambda*I - N for a 0/1 integer matrix N, the quotient by the minor on rows
whose monomial has two or more coordinates >= k-1 is exact, and the result
is the monic characteristic polynomial of degree n(k-1)^(n-1).

Two exact determinant paths are provided: evaluation at integer points with
fraction-free elimination followed by interpolation, and a modular path
(characteristic polynomial of N per prime, recombined by CRT with a held-out
verification prime).  The switch is based on a coefficient-size prediction.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import GuardError
from .hypergraphs import EigenSystem, Hypergraph
from .polynomials import UniPoly, enumerate_monomials, interpolate

__all__ = [
    "CharPolyResult",
    "MacaulayMatrix",
    "build_macaulay",
    "charpoly",
    "int_determinant",
    "predicted_coefficient_bits",
]

# Interpolation with big-int elimination is only competitive on small
# matrices; beyond this size the modular path wins regardless of predicted
# coefficient growth.
_INTERPOLATION_SIZE_CAP = 160

_DEFAULT_MATRIX_GUARD = 4000


@dataclass
class MacaulayMatrix:
    """The matrix lambda*I - N, stored through N's 0/1 sparsity.

    rows[r] lists the column indices of the ones in row r of N; classes[r]
    is the vertex whose form fills row r; reduced[r] marks monomials with
    exactly one coordinate >= k-1 (the rows removed to form the minor).
    """

    n: int
    k: int
    degree: int
    monomials: tuple
    index: dict
    classes: tuple
    rows: tuple
    reduced: tuple

    @property
    def size(self) -> int:
        return len(self.monomials)

    @property
    def reduced_count(self) -> int:
        return sum(self.reduced)

    @property
    def max_row_sum(self) -> int:
        return max((len(r) for r in self.rows), default=0)

    def dense_n(self) -> np.ndarray:
        mat = np.zeros((self.size, self.size), dtype=np.int64)
        for r, cols in enumerate(self.rows):
            for c in cols:
                mat[r, c] = 1
        return mat


def build_macaulay(system: EigenSystem, *,
                   max_matrix_size: int = _DEFAULT_MATRIX_GUARD) -> MacaulayMatrix:
    """Assemble the Macaulay matrix of an eigenvalue system."""
    n, k = system.n, system.k
    big_d = n * (k - 1) - n + 1
    size = math.comb(n * (k - 1), n - 1)
    if size > max_matrix_size:
        est = {
            "matrix_size": size,
            "charpoly_degree": n * (k - 1) ** (n - 1),
            "dense_bytes": size * size * 8,
            "max_matrix_size": max_matrix_size,
        }
        raise GuardError(
            f"Macaulay matrix would be {size} x {size} "
            f"(guard is {max_matrix_size}); pass a larger max_matrix_size "
            "to proceed", est)
    monomials = enumerate_monomials(n, big_d)
    assert len(monomials) == size
    index = {m: i for i, m in enumerate(monomials)}
    classes = []
    rows = []
    reduced = []
    for alpha in monomials:
        cls = next(i for i, a in enumerate(alpha) if a >= k - 1)
        classes.append(cls)
        reduced.append(sum(1 for a in alpha if a >= k - 1) == 1)
        cols = []
        base = list(alpha)
        base[cls] -= k - 1
        for rest in system.links[cls]:
            beta = base.copy()
            for u in rest:
                beta[u] += 1
            cols.append(index[tuple(beta)])
        assert len(set(cols)) == len(cols)
        rows.append(tuple(cols))
    mac = MacaulayMatrix(n=n, k=k, degree=big_d, monomials=tuple(monomials),
                         index=index, classes=tuple(classes), rows=tuple(rows),
                         reduced=tuple(reduced))
    assert mac.reduced_count == n * (k - 1) ** (n - 1)
    return mac


# -- coefficient-size prediction ----------------------------------------------


def predicted_coefficient_bits(size: int, max_row_sum: int) -> int:
    """Upper bound in bits on charpoly coefficients of a matrix whose
    eigenvalues are at most max_row_sum in modulus: |c_j| <= C(size,j)*r^j.
    """
    if size == 0:
        return 1
    r = max(max_row_sum, 1)
    log2r = math.log2(r)
    ln2 = math.log(2.0)
    best = 0.0
    lg = math.lgamma
    for j in range(size + 1):
        logc = (lg(size + 1) - lg(j + 1) - lg(size - j + 1)) / ln2
        best = max(best, logc + j * log2r)
    return int(best) + 2


# -- exact sparse integer determinant ------------------------------------------


def _sparse_int_det(rows) -> int:
    """Determinant of an integer matrix given as dicts col -> value.

    Fraction-free one-step elimination with Markowitz pivoting; every
    division is checked exact.  The input rows are consumed.
    """
    m = len(rows)
    if m == 0:
        return 1
    data = {i: dict(r) for i, r in enumerate(rows)}
    col_count: dict = {}
    for r in data.values():
        for c in r:
            col_count[c] = col_count.get(c, 0) + 1
    active_rows = list(range(m))
    active_cols = list(range(m))
    sign = 1
    prev = 1
    while active_rows:
        best = None
        for i in active_rows:
            row = data[i]
            if not row:
                return 0
            rw = len(row) - 1
            for j in row:
                score = rw * (col_count[j] - 1)
                if best is None or score < best[0]:
                    best = (score, i, j)
                    if score == 0:
                        break
            if best[0] == 0:
                break
        _, pi, pj = best
        piv = data[pi][pj]
        if (active_rows.index(pi) + active_cols.index(pj)) % 2:
            sign = -sign
        active_rows.remove(pi)
        active_cols.remove(pj)
        prow = data.pop(pi)
        for c in prow:
            col_count[c] -= 1
        for i in active_rows:
            row = data[i]
            f = row.pop(pj, 0)
            if f:
                col_count[pj] -= 1
                for c, v in prow.items():
                    if c == pj:
                        continue
                    cur = row.get(c, 0)
                    num = cur * piv - f * v
                    q, rem = divmod(num, prev)
                    assert not rem
                    if q:
                        if not cur:
                            col_count[c] += 1
                        row[c] = q
                    elif cur:
                        del row[c]
                        col_count[c] -= 1
                for c in list(row):
                    if c not in prow:
                        q, rem = divmod(row[c] * piv, prev)
                        assert not rem
                        row[c] = q
            else:
                for c in row:
                    q, rem = divmod(row[c] * piv, prev)
                    assert not rem
                    row[c] = q
        prev = piv
    return sign * prev


def int_determinant(matrix) -> int:
    """Exact determinant of a square integer matrix (list of rows)."""
    rows = []
    m = len(matrix)
    for r in matrix:
        if len(r) != m:
            raise ValueError("matrix is not square")
        rows.append({j: int(v) for j, v in enumerate(r) if v})
    return _sparse_int_det(rows)


# -- determinant polynomial: interpolation path ---------------------------------


def _det_poly_interpolation(row_cols, *, eval_points=None, threads=1):
    """det(lambda*I - N) as a UniPoly, via values at 0..degree."""
    m = len(row_cols)
    if m == 0:
        return UniPoly.one(), []
    points = m + 1 if eval_points is None else int(eval_points)
    if points < m + 1:
        raise ValueError(f"need at least {m + 1} evaluation points, got {points}")

    def eval_at(lam):
        t0 = time.perf_counter()
        rows = []
        for i, cols in enumerate(row_cols):
            row = {c: -1 for c in cols}
            if lam:
                row[i] = lam  # diagonal of N is empty, so no accumulation
            rows.append(row)
        val = _sparse_int_det(rows)
        return lam, val, time.perf_counter() - t0

    results = _parallel_map(eval_at, range(points), threads)
    per_point = [t for _, _, t in results]
    poly = interpolate([(lam, val) for lam, val, _ in results])
    assert poly.degree == m and poly.is_monic
    return poly, per_point


def _parallel_map(fn, items, threads):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(fn, items))
    return [fn(it) for it in items]


# -- determinant polynomial: modular path ----------------------------------------


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if q % p == 0:
            return q == p
    d = q - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, q)
        if x in (1, q - 1):
            continue
        for _ in range(r - 1):
            x = x * x % q
            if x == q - 1:
                break
        else:
            return False
    return True


def _primes_descending(bits: int):
    q = (1 << bits) - 1
    while q > 2:
        if _is_prime(q):
            yield q
        q -= 2


def _prime_bits_for(size: int) -> int:
    # products of two residues plus a sum over <= size terms must fit int64
    return min(25, (62 - max(size, 2).bit_length()) // 2)


def _charpoly_mod_prime(mat: np.ndarray, p: int) -> np.ndarray:
    """Characteristic polynomial coefficients of mat modulo p, ascending.

    Similarity reduction to Hessenberg form, then the leading-minor
    recurrence.  All arithmetic stays below 2^63 by the prime-size choice.
    """
    n = mat.shape[0]
    h = mat % p
    for c in range(n - 2):
        sub = h[c + 1:, c]
        nz = np.nonzero(sub)[0]
        if nz.size == 0:
            continue
        piv = int(nz[0]) + c + 1
        if piv != c + 1:
            h[[c + 1, piv], :] = h[[piv, c + 1], :]
            h[:, [c + 1, piv]] = h[:, [piv, c + 1]]
        inv = pow(int(h[c + 1, c]), p - 2, p)
        mult = (h[c + 2:, c] * inv) % p
        if np.any(mult):
            h[c + 2:, c:] = (h[c + 2:, c:] - mult[:, None] * h[c + 1, c:]) % p
            h[:, c + 1] = (h[:, c + 1] + h[:, c + 2:] @ mult) % p
    q = np.zeros((n + 1, n + 1), dtype=np.int64)
    q[0, 0] = 1
    t = np.zeros(n, dtype=np.int64)  # t[i] = product of subdiagonals i+1..m-1
    for m in range(1, n + 1):
        d = int(h[m - 1, m - 1])
        q[m, 1:m + 1] = q[m - 1, :m]
        q[m, :m] = (q[m, :m] - d * q[m - 1, :m]) % p
        if m >= 2:
            s = int(h[m - 1, m - 2])
            t[:m - 2] = (t[:m - 2] * s) % p
            t[m - 2] = s
            cs = (h[:m - 1, m - 1] * t[:m - 1]) % p
            if np.any(cs):
                q[m, :m] = (q[m, :m] - cs @ q[:m - 1, :m]) % p
    out = q[n]
    assert out[n] == 1
    return out


def _det_poly_modular(row_cols, *, bits_needed: int, threads=1):
    """det(lambda*I - N) by per-prime characteristic polynomials and CRT."""
    m = len(row_cols)
    if m == 0:
        return UniPoly.one(), {"num_primes": 0, "per_prime_s": []}
    mat = np.zeros((m, m), dtype=np.int64)
    for r, cols in enumerate(row_cols):
        for c in cols:
            mat[r, c] = 1
    gen = _primes_descending(_prime_bits_for(m))
    primes = []
    total = 0.0
    target = bits_needed + 8
    while total < target:
        p = next(gen)
        primes.append(p)
        total += math.log2(p)
    check_prime = next(gen)

    timings = []

    def run(p):
        t0 = time.perf_counter()
        res = _charpoly_mod_prime(mat, p)
        timings.append(time.perf_counter() - t0)
        return res

    residues = _parallel_map(run, primes, threads)
    coeffs = [0] * (m + 1)
    modulus = 1
    for p, res in zip(primes, residues):
        if modulus == 1:
            coeffs = [int(v) for v in res]
            modulus = p
            continue
        minv = pow(modulus % p, p - 2, p)
        for idx in range(m + 1):
            t = ((int(res[idx]) - coeffs[idx]) * minv) % p
            coeffs[idx] += modulus * t
        modulus *= p
    half = modulus // 2
    lifted = [v - modulus if v > half else v for v in coeffs]
    # held-out prime check: recompute independently and compare
    check = _charpoly_mod_prime(mat, check_prime)
    for idx in range(m + 1):
        if lifted[idx] % check_prime != int(check[idx]) % check_prime:
            raise ArithmeticError(
                f"modular determinant failed verification at degree {idx}")
    poly = UniPoly(enumerate(lifted))
    assert poly.degree == m and poly.is_monic
    return poly, {"num_primes": len(primes), "per_prime_s": timings,
                  "verification_prime": check_prime}


# -- public characteristic polynomial -------------------------------------------


@dataclass
class CharPolyResult:
    """Characteristic polynomial with how it was obtained.

    detM and detMprime are the full and minor determinant polynomials
    (None when the result was combined from connected components).
    components holds per-component results in that case.
    """

    phi: UniPoly
    method: str
    matrix_size: int
    reduced_size: int
    detM: UniPoly | None
    detMprime: UniPoly | None
    timings: dict = field(default_factory=dict)
    components: list | None = None

    @property
    def degree(self) -> int:
        return self.phi.degree


def charpoly(h: Hypergraph, *, method: str = "auto",
             modular_threshold_bits: int = 512,
             eval_points=None, threads: int = 1,
             max_matrix_size: int = _DEFAULT_MATRIX_GUARD,
             decompose: bool = True) -> CharPolyResult:
    """Exact characteristic polynomial of a k-uniform hypergraph.

    With decompose=True a disconnected input is split into components and
    the results are combined by the disjoint-union power identity, which
    avoids the much larger joint matrix.
    """
    t_start = time.perf_counter()
    if method not in ("auto", "interpolation", "modular"):
        raise ValueError(f"unknown method {method!r}")
    if decompose:
        comps = h.components()
        if len(comps) > 1:
            parts = []
            phi = UniPoly.one()
            for sub, _verts in comps:
                res = charpoly(sub, method=method,
                               modular_threshold_bits=modular_threshold_bits,
                               eval_points=eval_points, threads=threads,
                               max_matrix_size=max_matrix_size,
                               decompose=False)
                parts.append(res)
                phi = phi * res.phi ** ((h.k - 1) ** (h.n - sub.n))
            assert phi.degree == h.n * (h.k - 1) ** (h.n - 1)
            return CharPolyResult(
                phi=phi, method="disjoint",
                matrix_size=sum(r.matrix_size for r in parts),
                reduced_size=sum(r.reduced_size for r in parts),
                detM=None, detMprime=None,
                timings={"total_s": time.perf_counter() - t_start},
                components=parts)
    mac = build_macaulay(h.eigen_system(), max_matrix_size=max_matrix_size)
    t_build = time.perf_counter()
    bits = predicted_coefficient_bits(mac.size, mac.max_row_sum)
    if method == "auto":
        if bits <= modular_threshold_bits and mac.size <= _INTERPOLATION_SIZE_CAP:
            method = "interpolation"
        else:
            method = "modular"
    keep = [i for i, red in enumerate(mac.reduced) if not red]
    keep_pos = {i: pos for pos, i in enumerate(keep)}
    sub_rows = []
    for i in keep:
        sub_rows.append(tuple(keep_pos[c] for c in mac.rows[i] if c in keep_pos))
    timings = {"predicted_bits": bits, "build_s": t_build - t_start}
    if method == "interpolation":
        det_m, per_point = _det_poly_interpolation(
            mac.rows, eval_points=eval_points, threads=threads)
        t_full = time.perf_counter()
        det_mp, per_point_red = _det_poly_interpolation(
            sub_rows, threads=threads)
        timings["per_point_s"] = per_point
        timings["per_point_reduced_s"] = per_point_red
    else:
        sub_bits = predicted_coefficient_bits(
            len(sub_rows), max((len(r) for r in sub_rows), default=0))
        det_m, info = _det_poly_modular(mac.rows, bits_needed=bits,
                                        threads=threads)
        t_full = time.perf_counter()
        det_mp, info_red = _det_poly_modular(sub_rows, bits_needed=sub_bits,
                                             threads=threads)
        timings["modular_full"] = info
        timings["modular_reduced"] = info_red
    t_dets = time.perf_counter()
    timings["det_full_s"] = t_full - t_build
    timings["det_reduced_s"] = t_dets - t_full
    phi, rem = det_m.divide(det_mp)
    assert rem.is_zero, "minor does not divide the full determinant"
    assert phi.is_monic
    assert phi.degree == h.n * (h.k - 1) ** (h.n - 1)
    timings["divide_s"] = time.perf_counter() - t_dets
    timings["total_s"] = time.perf_counter() - t_start
    return CharPolyResult(phi=phi, method=method, matrix_size=mac.size,
                          reduced_size=len(sub_rows), detM=det_m,
                          detMprime=det_mp, timings=timings)
