"""Young flattenings S^{d1}V* (x) L^a V -> S^{d2}V (x) L^{a+1}V and their conormal bound.

The column for g (x) alpha (g a plain monomial of T_{d1}, alpha an increasing
index tuple) is sum_j (y_j g . f) (x) (alpha ^ z_j).  The global constant
d!/(d1! d2!) of the co-multiplication is dropped; it changes neither rank,
kernel nor image.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

from . import exact, mindex
from .errors import DomainError, PreconditionError
from .exact import EchelonBuilder, ExactMatrix, Subspace, _sparse_int
from .gpoly import PRIMAL, GradedForm


def wedge_basis(nvars, a):
    """Increasing index tuples of length a, lexicographic."""
    if not 0 <= a <= nvars:
        raise DomainError(f"no wedge power {a} of a {nvars}-dimensional space")
    return tuple(combinations(range(nvars), a))


def wedge_with(alpha, j):
    """alpha ^ z_j as (sign, beta) with beta increasing, or None if j in alpha."""
    if j in alpha:
        return None
    # move z_j left past every larger index
    larger = sum(1 for i in alpha if i > j)
    beta = tuple(sorted(alpha + (j,)))
    return (-1 if larger % 2 else 1), beta


@dataclass(frozen=True)
class YoungFlattening:
    f: GradedForm
    d1: int
    d2: int
    a: int
    matrix: ExactMatrix

    @property
    def n(self):
        return self.f.nvars - 1

    @property
    def decomposable_rank(self):
        """Rank of the flattening of a single d-th power: binom(n, a)."""
        return comb(self.n, self.a)


def _check_params(f, d1, d2, a):
    if f.convention is not PRIMAL:
        raise DomainError("Young flattenings are built from forms in S")
    if d1 < 0 or d2 < 0 or d1 + d2 + 1 != f.degree:
        raise DomainError(f"need d1 + d2 + 1 = {f.degree}, got d1={d1}, d2={d2}")
    n = f.nvars - 1
    if not 1 <= a <= n:
        raise DomainError(f"wedge index a={a} outside 1..{n}")


def default_params(d):
    """(d1, d2, a) = (d-2, 1, 1)."""
    if d < 2:
        raise DomainError("Young flattenings need degree at least 2")
    return d - 2, 1, 1


def young_flattening(f, d1=None, d2=None, a=None):
    if d1 is None and d2 is None and a is None:
        d1, d2, a = default_params(f.degree)
    _check_params(f, d1, d2, a)
    nv = f.nvars
    col_mons = mindex.enumerate_basis(nv, d1)
    row_mons = mindex.enumerate_basis(nv, d2)
    alphas = wedge_basis(nv, a)
    betas = wedge_basis(nv, a + 1)
    col_labels = tuple((g, al) for g in col_mons for al in alphas)
    row_labels = tuple((h, be) for h in row_mons for be in betas)
    row_index = {lab: i for i, lab in enumerate(row_labels)}
    cols = []
    b = f.coeffs
    for g, al in col_labels:
        col = [0] * len(row_labels)
        for j in range(nv):
            w = wedge_with(al, j)
            if w is None:
                continue
            sign, be = w
            gj = list(g)
            gj[j] += 1
            for h in row_mons:
                c = b.get(tuple(x + y for x, y in zip(gj, h)))
                if c:
                    col[row_index[(h, be)]] += sign * c
        cols.append(col)
    entries = tuple(zip(*cols)) if cols else ()
    return YoungFlattening(f, d1, d2, a, ExactMatrix(entries, row_labels, col_labels))


def yf_rank(yf):
    return exact.rank(yf.matrix)


def yf_border_rank_bound(yf, k):
    """True iff the rank certifies f outside sigma_{k-1}."""
    return yf_rank(yf) > (k - 1) * yf.decomposable_rank


def yf_border_rank_lower_bound(yf):
    """Smallest r with r * binom(n, a) >= rank."""
    p = yf.decomposable_rank
    return -(-yf_rank(yf) // p)


def interior(alpha, beta):
    """iota_alpha of the dual wedge beta*: {j: sign} with alpha ^ z_j = sign * beta."""
    out = {}
    for j in beta:
        w = wedge_with(alpha, j)
        if w is not None and w[1] == beta:
            out[j] = w[0]
    return out


def conormal_span_young(f, k, d1=None, d2=None, a=None, stop_at=None):
    """Span in T_d of the images of ker(YF) (x) im(YF)^perp.

    Each pair (v, w) maps to the functional f' -> w^T YF(f') v on S_d, written
    in the dual monomial basis; on basis tensors this is g.h.(iota_alpha beta).
    Requires rank YF(f) = k binom(n, a).
    """
    if d1 is None and d2 is None and a is None:
        d1, d2, a = default_params(f.degree)
    yf = young_flattening(f, d1, d2, a)
    r = yf_rank(yf)
    want = k * yf.decomposable_rank
    if r != want:
        raise PreconditionError(
            f"Young flattening has rank {r}, expected {want} for k={k}", actual=r, expected=want
        )
    K = exact.kernel(yf.matrix)
    P = exact.left_kernel(yf.matrix)
    nv = f.nvars
    target = mindex.monomial_basis(nv, f.degree)
    cols = yf.matrix.col_labels
    rows = yf.matrix.row_labels
    units = [mindex.unit(nv, j) for j in range(nv)]
    iota_cache = {}

    def iota(al, be):
        key = (al, be)
        v = iota_cache.get(key)
        if v is None:
            v = interior(al, be)
            iota_cache[key] = v
        return v

    mon_cache = {}

    def mon(g, h, j):
        key = (g, h, j)
        t = mon_cache.get(key)
        if t is None:
            t = target.rank(tuple(x + y + u for x, y, u in zip(g, h, units[j])))
            mon_cache[key] = t
        return t

    krows = [_sparse_int(dict(r_)) for r_ in K.sparse_rows()]
    prows = [_sparse_int(dict(r_)) for r_ in P.sparse_rows()]
    builder = EchelonBuilder(len(target))
    seen = set()
    for v in krows:
        for w in prows:
            out = {}
            for ci, x in v.items():
                g, al = cols[ci]
                for ri, y in w.items():
                    h, be = rows[ri]
                    for j, s in iota(al, be).items():
                        t = mon(g, h, j)
                        nv_ = out.get(t, 0) + s * x * y
                        if nv_:
                            out[t] = nv_
                        else:
                            out.pop(t, None)
            if not out:
                continue
            key = frozenset(out.items())
            if key in seen:
                continue
            seen.add(key)
            builder.add(out)
            if stop_at is not None and len(builder) >= stop_at:
                return Subspace(target.monomials, builder.rref())
    return Subspace(target.monomials, builder.rref())


def conormal_dim_young(f, k, d1=None, d2=None, a=None):
    """(dimension, subspace of T_d) of the Young-flattening conormal bound."""
    space = conormal_span_young(f, k, d1, d2, a)
    return space.dim, space
