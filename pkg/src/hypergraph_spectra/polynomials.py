"""Exact univariate polynomial arithmetic, monomial enumeration, and roots.

Coefficients are arbitrary-precision Python integers; characteristic
polynomials of even small hypergraphs have coefficients far beyond any fixed
width.  Rationals (``fractions.Fraction``) appear transiently during
interpolation and trace identities.  Floating point is confined to the
numeric root finder and to residual estimates.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "UniPoly",
    "RootSet",
    "enumerate_monomials",
    "interpolate",
    "numeric_roots",
    "poly_residual",
    "square_free_decomposition",
]


class UniPoly:
    """Integer polynomial in one variable ``L``, stored as degree -> coeff.

    The map never holds zero coefficients; the zero polynomial is the empty
    map.  Instances are treated as immutable: no public method mutates
    ``self``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for d, v in items:
                d = int(d)
                v = int(v)
                if d < 0:
                    raise ValueError("negative exponent in polynomial")
                if v:
                    c[d] = c.get(d, 0) + v
                    if not c[d]:
                        del c[d]
        self._c = c

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def one(cls) -> "UniPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "UniPoly":
        return cls({degree: coeff})

    @classmethod
    def from_coeff_list(cls, ascending) -> "UniPoly":
        """Build from a list of coefficients, index = degree."""
        return cls(enumerate(ascending))

    # -- inspection --------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the convention deg(0) = -1."""
        return max(self._c) if self._c else -1

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def leading_coefficient(self) -> int:
        return self._c[max(self._c)] if self._c else 0

    @property
    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def __getitem__(self, degree: int) -> int:
        return self._c.get(degree, 0)

    def coefficients(self) -> dict:
        return dict(self._c)

    def terms_descending(self):
        for d in sorted(self._c, reverse=True):
            yield d, self._c[d]

    def coeff_at_codegree(self, codegree: int) -> int:
        """Coefficient of L^(degree - codegree)."""
        if self.is_zero:
            raise ValueError("zero polynomial has no codegrees")
        e = self.degree - codegree
        return self._c.get(e, 0) if e >= 0 else 0

    def content(self) -> int:
        return math.gcd(*self._c.values()) if self._c else 0

    def max_coefficient_bits(self) -> int:
        return max((abs(v).bit_length() for v in self._c.values()), default=0)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = UniPoly({0: other})
        if not isinstance(other, UniPoly):
            return NotImplemented
        c = dict(self._c)
        for d, v in other._c.items():
            nv = c.get(d, 0) + v
            if nv:
                c[d] = nv
            elif d in c:
                del c[d]
        out = UniPoly.__new__(UniPoly)
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = UniPoly.__new__(UniPoly)
        out._c = {d: -v for d, v in self._c.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = UniPoly({0: other})
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return UniPoly()
            out = UniPoly.__new__(UniPoly)
            out._c = {d: v * other for d, v in self._c.items()}
            return out
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) > len(b):
            a, b = b, a
        c: dict = {}
        for da, va in a.items():
            for db, vb in b.items():
                d = da + db
                nv = c.get(d, 0) + va * vb
                if nv:
                    c[d] = nv
                elif d in c:
                    del c[d]
        out = UniPoly.__new__(UniPoly)
        out._c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, s: int) -> "UniPoly":
        """Multiply by L^s."""
        if s < 0:
            raise ValueError("negative shift")
        out = UniPoly.__new__(UniPoly)
        out._c = {d + s: v for d, v in self._c.items()}
        return out

    def derivative(self) -> "UniPoly":
        return UniPoly({d - 1: d * v for d, v in self._c.items() if d > 0})

    def divide(self, divisor: "UniPoly"):
        """Exact euclidean division, returning (quotient, remainder).

        Both outputs must lie in Z[L]; a division whose quotient leaves the
        integers raises ValueError.  A nonzero remainder is returned, not
        raised, so callers can flag it.
        """
        if not isinstance(divisor, UniPoly) or divisor.is_zero:
            raise ValueError("division by zero polynomial")
        dd = divisor.degree
        lead = divisor.leading_coefficient
        rem = dict(self._c)
        quot: dict = {}
        while rem:
            rd = max(rem)
            if rd < dd:
                break
            q, r = divmod(rem[rd], lead)
            if r:
                raise ValueError("quotient leaves the integers")
            e = rd - dd
            quot[e] = q
            for d, v in divisor._c.items():
                nd = d + e
                nv = rem.get(nd, 0) - q * v
                if nv:
                    rem[nd] = nv
                elif nd in rem:
                    del rem[nd]
        return UniPoly(quot), UniPoly(rem)

    def primitive(self):
        """Return (content-and-sign-free part, unit*content) with positive lead."""
        if self.is_zero:
            return UniPoly(), 0
        c = self.content()
        if self.leading_coefficient < 0:
            c = -c
        out = UniPoly({d: v // c for d, v in self._c.items()})
        return out, c

    # -- evaluation --------------------------------------------------------

    def evaluate(self, point):
        """Horner evaluation; exact for int/Fraction arguments."""
        acc = 0
        prev = None
        for d in sorted(self._c, reverse=True):
            if prev is not None:
                acc *= point ** (prev - d)
            acc += self._c[d]
            prev = d
        if prev is not None:
            acc *= point**prev
        return acc

    def evaluate_complex_exact(self, z: complex):
        """Evaluate at a complex point with exact rational arithmetic.

        Returns (real, imag) as Fractions.  The float components of ``z``
        are taken at their exact binary values, so the only error in the
        result is whatever error ``z`` itself carries.
        """
        re, im = Fraction(z.real), Fraction(z.imag)
        are, aim = Fraction(0), Fraction(0)
        prev = None
        for d in sorted(self._c, reverse=True):
            if prev is not None:
                for _ in range(prev - d):
                    are, aim = are * re - aim * im, are * im + aim * re
            are += self._c[d]
            prev = d
        if prev:
            for _ in range(prev):
                are, aim = are * re - aim * im, are * im + aim * re
        return are, aim

    # -- formatting --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = UniPoly({0: other})
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._c == other._c

    __hash__ = None

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for d in sorted(self._c, reverse=True):
            v = self._c[d]
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if d == 0:
                body = str(a)
            else:
                var = "L" if d == 1 else f"L^{d}"
                body = var if a == 1 else f"{a}*{var}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def to_json(self) -> list:
        """[[degree, coefficient-as-decimal-string], ...], descending."""
        return [[d, str(v)] for d, v in self.terms_descending()]

    @classmethod
    def from_json(cls, pairs) -> "UniPoly":
        return cls((int(d), int(v)) for d, v in pairs)


# -- monomials ---------------------------------------------------------------


def enumerate_monomials(n: int, d: int) -> list:
    """All exponent vectors of total degree d in n variables, graded-lex.

    Within the single degree block, order is lexicographic descending on the
    exponent vector, e.g. (2,2) -> [(2,0), (1,1), (0,2)].
    """
    if n < 1:
        raise ValueError("need at least one variable")
    if d < 0:
        raise ValueError("negative degree")
    out = []
    stack = [((), d)]
    while stack:
        prefix, rest = stack.pop()
        pos = len(prefix)
        if pos == n - 1:
            out.append(prefix + (rest,))
            continue
        # push ascending so the largest first coordinate pops first
        for e in range(rest + 1):
            stack.append((prefix + (e,), rest - e))
    return out


# -- interpolation -----------------------------------------------------------


def interpolate(points) -> UniPoly:
    """Exact polynomial through (abscissa, value) pairs, via Newton's form.

    Abscissae must be distinct integers; values may be ints or Fractions.
    The interpolant must have integer coefficients or ValueError is raised
    (a non-integer result signals a degree-bound bug upstream).
    """
    pts = [(int(x), Fraction(y)) for x, y in points]
    if len({x for x, _ in pts}) != len(pts):
        raise ValueError("duplicate abscissae")
    if not pts:
        raise ValueError("no interpolation points")
    # divided differences
    coeffs = [y for _, y in pts]
    xs = [x for x, _ in pts]
    m = len(pts)
    for level in range(1, m):
        for i in range(m - 1, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - level])
    # expand Newton form to the monomial basis
    poly = {0: Fraction(0)}
    for i in range(m - 1, -1, -1):
        # poly <- poly*(x - xs[i]) + coeffs[i]
        new = {}
        for d, v in poly.items():
            new[d + 1] = new.get(d + 1, Fraction(0)) + v
            new[d] = new.get(d, Fraction(0)) - v * xs[i]
        new[0] = new.get(0, Fraction(0)) + coeffs[i]
        poly = new
    out = {}
    for d, v in poly.items():
        if v:
            if v.denominator != 1:
                raise ValueError(f"non-integer coefficient {v} at degree {d}")
            out[d] = int(v)
    return UniPoly(out)


# -- gcd and square-free decomposition ---------------------------------------


def _poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Primitive gcd in Z[L] via the subresultant remainder sequence."""
    if p.is_zero:
        return q.primitive()[0] if not q.is_zero else UniPoly()
    if q.is_zero:
        return p.primitive()[0]
    a, _ = p.primitive()
    b, _ = q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    g, h = 1, 1
    while True:
        delta = a.degree - b.degree
        # pseudo-remainder of a by b
        lead = b.leading_coefficient
        rem = a * (lead ** (delta + 1))
        rem = rem.divide(b)[1]
        if rem.is_zero:
            return b.primitive()[0]
        if b.degree == 0 or rem.degree == 0:
            return UniPoly.one()
        divisor = g * h**delta
        a = b
        b = UniPoly({d: v // divisor for d, v in rem.coefficients().items()})
        g = a.leading_coefficient
        h = (g**delta * h) // h**delta if delta else h
        # the divisions above are exact by the subresultant theory


def square_free_decomposition(p: UniPoly) -> list:
    """Yun's algorithm: return [(factor, multiplicity), ...] with factors
    primitive, square-free, pairwise coprime, and
    p = unit * content * prod factor^multiplicity.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    f, _ = p.primitive()
    if f.degree == 0:
        return []
    d = f.derivative()
    g = _poly_gcd(f, d)
    if g.degree == 0:
        return [(f, 1)]
    c = f.divide(g)[0]
    w = d.divide(g)[0] - c.derivative()
    out = []
    i = 1
    while c.degree > 0:
        a = _poly_gcd(c, w)
        if a.degree > 0:
            out.append((a.primitive()[0], i))
            c = c.divide(a)[0]
            w = w.divide(a)[0]
        w = w - c.derivative()
        i += 1
    return out


# -- numeric roots ------------------------------------------------------------

# Yun's algorithm is skipped beyond these sizes and multiplicities fall back
# to clustering.
_SQUAREFREE_DEGREE_LIMIT = 512
_SQUAREFREE_BITS_LIMIT = 40000


@dataclass
class RootSet:
    """Numeric roots with multiplicities and per-root residual bounds.

    ``roots`` is a list of (value, multiplicity); ``residual_bounds`` holds
    an upper bound on |p(root)| (exact-arithmetic evaluation at the stored
    double-precision root); ``residuals`` are the same quantities normalized
    by the weighted coefficient norm sum |c_i|*|root|^i.
    """

    roots: list
    residual_bounds: list
    residuals: list
    method: str
    converged: bool = True

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.roots)


def _scaled_float_coeffs(p: UniPoly):
    """Monic float coefficients c_i / c_deg, correctly rounded via Fraction."""
    out = [0.0] * (p.degree + 1)
    lead = p.leading_coefficient
    for d, v in p.coefficients().items():
        try:
            out[d] = float(Fraction(v, lead))
        except OverflowError:
            raise ArithmeticError(
                "coefficient ratio too large for float root finding") from None
    return out


def _horner(coeffs, z):
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _aberth(coeffs, tol=5e-15, max_iter=400):
    """Simultaneous (Aberth-Ehrlich) iteration on a square-free polynomial.

    ``coeffs`` ascending, monic floats.  Returns (roots, converged).
    """
    deg = len(coeffs) - 1
    if deg == 0:
        return [], True
    if deg == 1:
        return [complex(-coeffs[0])], True
    dcoeffs = [i * coeffs[i] for i in range(1, deg + 1)]
    radius = 1.0 + max(abs(c) for c in coeffs[:-1])
    z = [radius * 0.8 * cmath.exp(2j * math.pi * (j + 0.37) / deg) + 0.1j
         for j in range(deg)]
    converged = False
    for _ in range(max_iter):
        moved = 0.0
        for j in range(deg):
            pv = _horner(coeffs, z[j])
            if pv == 0:
                continue
            dv = _horner(dcoeffs, z[j])
            if dv == 0:
                z[j] += 1e-8 + 1e-8j
                moved = math.inf
                continue
            ratio = pv / dv
            s = 0j
            for i in range(deg):
                if i != j:
                    diff = z[j] - z[i]
                    if diff == 0:
                        diff = 1e-12
                    s += 1.0 / diff
            denom = 1.0 - ratio * s
            w = ratio if denom == 0 else ratio / denom
            z[j] -= w
            moved = max(moved, abs(w) / (1.0 + abs(z[j])))
        if moved <= tol:
            converged = True
            break
    # polish with plain Newton
    for j in range(deg):
        for _ in range(3):
            dv = _horner(dcoeffs, z[j])
            if dv == 0:
                break
            z[j] -= _horner(coeffs, z[j]) / dv
    return z, converged


def _log2_fraction(fr: Fraction) -> float:
    if fr == 0:
        return -math.inf
    n, d = abs(fr.numerator), fr.denominator
    def lg(v):
        bl = v.bit_length()
        top = v >> max(0, bl - 53)
        return math.log2(top) + max(0, bl - 53)
    return lg(n) - lg(d)


def _log2_abs_eval(p: UniPoly, z: complex) -> float:
    """log2 |p(z)| with exact rational evaluation."""
    re, im = p.evaluate_complex_exact(z)
    v = re * re + im * im
    return _log2_fraction(v) / 2.0 if v else -math.inf


def _log2_weighted_norm(p: UniPoly, r: float) -> float:
    """log2 of sum_i |c_i| * r^i, computed stably in log space."""
    lr = math.log2(r) if r > 0 else -math.inf
    logs = []
    for d, v in p.coefficients().items():
        logs.append(math.log2(abs(v)) + (d * lr if d else 0.0))
    top = max(logs)
    if math.isinf(top):
        return top
    return top + math.log2(sum(2.0 ** (x - top) for x in logs))


def poly_residual(p: UniPoly, z: complex) -> float:
    """|p(z)| / sum_i |c_i||z|^i: backward-error style root residual."""
    if p.is_zero:
        return 0.0
    num = _log2_abs_eval(p, complex(z))
    den = _log2_weighted_norm(p, abs(complex(z)))
    if num == -math.inf:
        return 0.0
    return 2.0 ** min(num - den, 64.0)


def numeric_roots(p: UniPoly, tol: float = 1e-9) -> RootSet:
    """All complex roots of p with multiplicities.

    The exact factor L^r is stripped first.  When the square-free
    decomposition is feasible (degree and coefficient-size limits), each
    square-free factor is solved by Aberth iteration and multiplicities are
    exact; otherwise roots are clustered within a tol^(1/degree)-scaled
    radius and multiplicities are estimates.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no finite root set")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    roots = []
    r0 = min(p.coefficients()) if not p.is_zero else 0
    if r0 > 0:
        roots.append((0j, r0))
        p_stripped = UniPoly({d - r0: v for d, v in p.coefficients().items()})
    else:
        p_stripped = p
    q, _ = p_stripped.primitive()
    method = "aberth"
    converged = True
    if q.degree > 0:
        feasible = (q.degree <= _SQUAREFREE_DEGREE_LIMIT
                    and q.max_coefficient_bits() <= _SQUAREFREE_BITS_LIMIT)
        if feasible:
            factors = square_free_decomposition(q)
            method = "yun+aberth"
        else:
            factors = [(q, 1)]
        collected = []
        for factor, mult in factors:
            vals, ok = _aberth(_scaled_float_coeffs(factor))
            converged = converged and ok
            collected.extend((v, mult) for v in vals)
        if not feasible:
            # multiplicity by clustering
            radius = tol ** (1.0 / q.degree)
            clusters = []
            for v, _ in collected:
                for c in clusters:
                    if abs(v - c[0]) <= radius * max(1.0, abs(v)):
                        c[1] += 1
                        break
                else:
                    clusters.append([v, 1])
            collected = [(v, m) for v, m in clusters]
            method = "aberth+cluster"
        roots.extend(collected)
    bounds = []
    residuals = []
    for v, _ in roots:
        lg = _log2_abs_eval(p, v)
        raw = 0.0 if lg == -math.inf else 2.0 ** min(lg, 1000.0)
        bounds.append(raw * 4.0)
        residuals.append(poly_residual(p, v))
    rs = RootSet(roots=roots, residual_bounds=bounds, residuals=residuals,
                 method=method, converged=converged)
    if rs.total_multiplicity != p.degree:
        raise ArithmeticError("root multiplicities do not sum to the degree")
    if not converged and method != "aberth+cluster":
        # square-free factors must converge; stalling there means a bug, while
        # the clustering fallback legitimately stalls on multiple roots
        worst = max(residuals) if residuals else 0.0
        raise ArithmeticError(f"root iteration did not converge; residual {worst:.3e}")
    return rs
