"""Embedded tangent spaces of nu_d(P^n) and spans built from them.

Coordinates on the ambient space are the divided-power coordinates b_I of S_d,
so nu_d([x]) has coordinates x^I (ordinary monomials).  All Subspace
dimensions here are affine; subtract one for the projective dimension.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import exact, mindex
from .classify import expected_secant_dim
from .errors import DomainError
from .exact import ExactMatrix, Subspace
from .parse import parse_univariate


def normalize_point(x):
    """Rational coordinates scaled so the first nonzero one is 1."""
    x = tuple(Fraction(c) for c in x)
    if not x:
        raise DomainError("a point needs at least one coordinate")
    for c in x:
        if c:
            return tuple(v / c for v in x)
    raise DomainError("the zero vector is not a projective point")


def _monomial_value(x, index):
    v = Fraction(1)
    for c, e in zip(x, index):
        if e:
            v *= c**e
    return v


def veronese(x, d):
    """nu_d(x) over the graded-lex basis of S_d."""
    return tuple(_monomial_value(x, I) for I in mindex.enumerate_basis(len(x), d))


def _partial_row(x, d, j):
    out = []
    for I in mindex.enumerate_basis(len(x), d):
        e = I[j]
        if not e:
            out.append(Fraction(0))
            continue
        J = list(I)
        J[j] -= 1
        out.append(e * _monomial_value(x, J))
    return tuple(out)


@dataclass(frozen=True)
class TangentFrame:
    point: tuple
    d: int
    chart: int
    matrix: ExactMatrix

    @property
    def span(self):
        return exact.row_space(self.matrix)

    @property
    def rank(self):
        return exact.rank(self.matrix)


def tangent_frame(x, d):
    """Rows: nu_d and its derivatives in the affine chart {x_c = 1}, where c is
    the first nonzero coordinate of ``x``."""
    if d < 1:
        raise DomainError("degree must be at least 1")
    p = normalize_point(x)
    c = next(i for i, v in enumerate(p) if v)
    rows = [veronese(p, d)]
    labels = ["nu"]
    for j in range(len(p)):
        if j != c:
            rows.append(_partial_row(p, d, j))
            labels.append(f"d/dx{j}")
    basis = mindex.enumerate_basis(len(p), d)
    return TangentFrame(p, d, c, ExactMatrix(tuple(rows), tuple(labels), basis))


def terracini_span(points, d):
    """Span of the tangent frames at the given points."""
    points = [normalize_point(x) for x in points]
    if not points:
        raise DomainError("need at least one point")
    if len(set(points)) != len(points):
        raise DomainError("points must be pairwise distinct")
    nv = len(points[0])
    if any(len(x) != nv for x in points):
        raise DomainError("points live in different projective spaces")
    basis = mindex.enumerate_basis(nv, d)
    rows = []
    for x in points:
        rows.extend(tangent_frame(x, d).matrix.entries)
    return Subspace.span(basis, rows)


def random_points(k, nvars, rng, height=5):
    """k distinct projective points with integer coordinates in [-height, height]."""
    seen = set()
    out = []
    while len(out) < k:
        x = tuple(rng.randint(-height, height) for _ in range(nvars))
        if not any(x):
            continue
        key = normalize_point(x)
        if key in seen:
            continue
        seen.add(key)
        out.append(x)
    return out


def random_terracini_dim(k, d, n, seed=0, tries=3, height=5):
    """Affine dimension of the Terracini span at k random points of P^n.

    A sample below the generic bound min(k(n+1), binom(n+d,d)) is resampled;
    the largest of ``tries`` samples is returned.
    """
    top = min(k * (n + 1), comb(n + d, d))
    rng = random.Random(seed)
    best = 0
    for _ in range(tries):
        best = max(best, terracini_span(random_points(k, n + 1, rng, height), d).dim)
        if best == top:
            break
    return best


# -- curve families ---------------------------------------------------------------


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _trim(p):
    p = list(p)
    while len(p) > 1 and not p[-1]:
        p.pop()
    return tuple(p)


@dataclass(frozen=True)
class CurveFamily:
    """Point [p_0(t) : ... : p_n(t)] with polynomial coordinates, constant term first."""

    coords: tuple

    def __post_init__(self):
        cs = tuple(_trim(tuple(Fraction(c) for c in p)) for p in self.coords)
        if not cs:
            raise DomainError("a family needs at least one coordinate")
        if not any(any(p) for p in cs):
            raise DomainError("the zero family has no points")
        object.__setattr__(self, "coords", cs)

    @property
    def nvars(self):
        return len(self.coords)

    @property
    def degree(self):
        return max(len(p) - 1 for p in self.coords)

    @classmethod
    def constant(cls, point):
        return cls(tuple((c,) for c in point))

    @classmethod
    def line(cls, p, q):
        """p + t q."""
        if len(p) != len(q):
            raise DomainError("endpoints in different spaces")
        return cls(tuple((a, b) for a, b in zip(p, q)))

    @classmethod
    def from_strings(cls, specs, var="t"):
        return cls(tuple(parse_univariate(s, var) for s in specs))

    @classmethod
    def parse(cls, spec, var="t"):
        """Comma-separated coordinate polynomials, e.g. "1,t,0,0"."""
        return cls.from_strings([s for s in spec.split(",")], var)

    def at(self, t):
        t = Fraction(t)
        return tuple(sum(c * t**i for i, c in enumerate(p)) for p in self.coords)


def moving_tangent_span(family, d):
    """Span of the tangent spaces at every point of the family.

    Each homogeneous partial derivative of nu_d is a polynomial vector in t
    along the family; the span of its t-coefficient vectors is the span of its
    values over all t.
    """
    if d < 1:
        raise DomainError("degree must be at least 1")
    nv = family.nvars
    basis = mindex.enumerate_basis(nv, d)
    # powers[i][e] = p_i(t)^e
    powers = []
    for p in family.coords:
        pw = [(Fraction(1),)]
        for _ in range(d):
            pw.append(tuple(_pmul(pw[-1], p)))
        powers.append(pw)

    def mono(index):
        acc = (Fraction(1),)
        for i, e in enumerate(index):
            if e:
                acc = tuple(_pmul(acc, powers[i][e]))
        return acc

    # the partials with respect to each x_j span the cone tangent space
    rows = []
    lower = mindex.enumerate_basis(nv, d - 1)
    low_vals = {J: mono(J) for J in lower}
    for j in range(nv):
        polys = []
        for I in basis:
            if I[j] == 0:
                polys.append(())
                continue
            J = list(I)
            J[j] -= 1
            polys.append(tuple(I[j] * c for c in low_vals[tuple(J)]))
        top = max((len(p) for p in polys), default=0)
        for power in range(top):
            vec = {}
            for col, p in enumerate(polys):
                if power < len(p) and p[power]:
                    vec[col] = p[power]
            if vec:
                rows.append(vec)
    return Subspace.span(basis, rows)


def linear_embedding(m, n, positions=None):
    """Coordinate embedding P^m -> P^n placing coordinates at ``positions``."""
    if positions is None:
        positions = range(m + 1)
    positions = list(positions)
    if len(positions) != m + 1 or max(positions) > n:
        raise DomainError("bad coordinate positions")

    def emb(y):
        x = [0] * (n + 1)
        for p, c in zip(positions, y):
            x[p] = c
        return tuple(x)

    return emb


def sampled_moving_span(m, n, d, seed=0, batch=None, stable_batches=3, height=5, max_batches=200):
    """Span of the tangent spaces of nu_d(P^n) along nu_d(P^m), by sampling.

    Frames at random points of a coordinate P^m are added in batches until the
    span has not grown for ``stable_batches`` consecutive batches.  Being
    exact, the result is always a subspace of the true span.
    """
    if not 1 <= m < n:
        raise DomainError("need 1 <= m < n")
    emb = linear_embedding(m, n)
    rng = random.Random(seed)
    batch = batch or (m + 2)
    basis = mindex.enumerate_basis(n + 1, d)
    builder = exact.EchelonBuilder(len(basis))
    quiet = 0
    for _ in range(max_batches):
        before = len(builder)
        for y in random_points(batch, m + 1, rng, height):
            for r in tangent_frame(emb(y), d).matrix.entries:
                builder.add(list(r))
        quiet = quiet + 1 if len(builder) == before else 0
        if quiet >= stable_batches or len(builder) == len(basis):
            break
    return Subspace(basis, builder.rref())


def subsecant_tangent_bound(d, m, n):
    """Projective lower bound binom(m+d,d) - 1 + (n-m) binom(m+d-1,d-1) for the
    span of tangent spaces along nu_d(P^m)."""
    if not 1 <= m < n:
        raise DomainError(f"need 1 <= m < n (got m={m}, n={n})")
    return comb(m + d, d) - 1 + (n - m) * comb(m + d - 1, d - 1)


@dataclass(frozen=True)
class ExcessReport:
    components: tuple
    pairwise_intersections: tuple
    total: int
    expected: int
    k: int
    d: int
    n: int

    @property
    def projective_total(self):
        return self.total - 1

    @property
    def excess(self):
        return self.projective_total > self.expected

    @property
    def verdict(self):
        return "Singular" if self.excess else "Inconclusive"

    def to_dict(self):
        return {
            "components_affine": list(self.components),
            "pairwise_intersections_affine": [list(p) for p in self.pairwise_intersections],
            "total_affine": self.total,
            "total_projective": self.projective_total,
            "expected_projective": self.expected,
            "verdict": self.verdict,
        }


def tangent_excess_verdict(spans, k, d, n):
    """Compare the projective dimension of the joined spans with dim sigma_k."""
    spans = list(spans)
    if not spans:
        raise DomainError("need at least one span")
    basis = mindex.enumerate_basis(n + 1, d)
    for s in spans:
        if s.ambient != basis:
            raise DomainError(f"span is not in the degree-{d} space of {n + 1} variables")
    pairs = []
    for i in range(len(spans)):
        for j in range(i + 1, len(spans)):
            pairs.append((i, j, spans[i].intersection(spans[j]).dim))
    total = exact.span_sum(*spans).dim
    return ExcessReport(
        tuple(s.dim for s in spans),
        tuple(pairs),
        total,
        expected_secant_dim(k, d, n),
        k,
        d,
        n,
    )
