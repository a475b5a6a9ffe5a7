"""Catalecticants, apolar ideal pieces and the catalecticant conormal bound."""

from dataclasses import dataclass

from . import exact, mindex
from .errors import DomainError, PreconditionError
from .exact import EchelonBuilder, ExactMatrix, Subspace, _sparse_int
from .gpoly import PRIMAL, GradedForm


@dataclass(frozen=True)
class Catalecticant:
    """phi_{d-a,a}(f): rows are T_{d-a} monomials, columns S_a monomials,
    entry (J, I) = b_{I+J}."""

    f: GradedForm
    a: int
    matrix: ExactMatrix

    @property
    def rank(self):
        return exact.rank(self.matrix)


def _flattening(f, e):
    """Matrix with rows T_e and columns S_{d-e}; 0 <= e <= d."""
    n1, d = f.nvars, f.degree
    rows = mindex.enumerate_basis(n1, e)
    cols = mindex.enumerate_basis(n1, d - e)
    b = f.coeffs
    entries = []
    for J in rows:
        entries.append([b.get(tuple(x + y for x, y in zip(I, J)), 0) for I in cols])
    return ExactMatrix(tuple(entries), rows, cols)


def catalecticant(f, a):
    if f.convention is not PRIMAL:
        raise DomainError("catalecticants are built from forms in S")
    d = f.degree
    if not 1 <= a <= d - 1:
        raise DomainError(f"flattening index a={a} outside 1..{d - 1}")
    return Catalecticant(f, a, _flattening(f, d - a))


def catalecticant_rank(f, a):
    return exact.rank(_flattening(f, f.degree - a))


def apolar_piece(f, e):
    """(f^perp)_e as a subspace of T_e (coordinates: graded-lex monomials)."""
    if e < 0:
        raise DomainError("degree must be non-negative")
    basis = mindex.enumerate_basis(f.nvars, e)
    if e > f.degree:
        return Subspace.full(basis)
    return exact.left_kernel(_flattening(f, e), ambient=basis)


def hilbert_function(f):
    """dim (T/f^perp)_e for e = 0..d."""
    return [exact.rank(_flattening(f, e)) for e in range(f.degree + 1)]


def _ambient_info(space):
    labels = space.ambient
    if not labels:
        raise DomainError("empty ambient space")
    first = labels[0]
    return len(first), sum(first)


def product_span(A, B, stop_at=None):
    """Span of all products of basis elements of A in T_a and B in T_b.

    ``stop_at`` ends the computation early once that dimension is reached
    (the returned space is then only a subspace of the full product span).
    """
    na, da = _ambient_info(A)
    nb, db = _ambient_info(B)
    if na != nb:
        raise DomainError("factors live in rings with different numbers of variables")
    target = mindex.monomial_basis(na, da + db)
    if A.dim == 0 or B.dim == 0:
        return Subspace.zero(target.monomials)
    arows = [_sparse_int(dict(r)) for r in A.sparse_rows()]
    brows = [_sparse_int(dict(r)) for r in B.sparse_rows()]
    alab, blab = A.ambient, B.ambient
    cache = {}

    def idx(i, j):
        key = (i, j)
        t = cache.get(key)
        if t is None:
            t = target.rank(tuple(x + y for x, y in zip(alab[i], blab[j])))
            cache[key] = t
        return t

    builder = EchelonBuilder(len(target))
    seen = set()
    for ar in arows:
        for br in brows:
            prod_ = {}
            for i, x in ar.items():
                for j, y in br.items():
                    t = idx(i, j)
                    v = prod_.get(t, 0) + x * y
                    if v:
                        prod_[t] = v
                    else:
                        prod_.pop(t, None)
            if not prod_:
                continue
            key = frozenset(prod_.items())
            if key in seen:
                continue
            seen.add(key)
            builder.add(prod_)
            if stop_at is not None and len(builder) >= stop_at:
                return Subspace(target.monomials, builder.rref())
    return Subspace(target.monomials, builder.rref())


def conormal_span_symmetric(f, k, a=None, stop_at=None):
    """(f^perp)_a . (f^perp)_{d-a}, a subspace of the conormal space at [f]
    whenever rank phi_{d-a,a}(f) = k and f is outside sigma_{k-1}."""
    d = f.degree
    if a is None:
        a = d // 2
    if not 1 <= a <= (d + 1) // 2:
        raise DomainError(f"flattening index a={a} outside 1..{(d + 1) // 2}")
    r = catalecticant_rank(f, d - a)
    if r != k:
        raise PreconditionError(
            f"catalecticant phi_({d - a},{a}) has rank {r}, not {k}", actual=r, expected=k
        )
    return product_span(apolar_piece(f, a), apolar_piece(f, d - a), stop_at=stop_at)


def conormal_dim_symmetric(f, k, a=None):
    return conormal_span_symmetric(f, k, a).dim


def border_rank_lower_bound(f):
    """Largest catalecticant rank; f is outside sigma_{r-1} for the returned r."""
    d = f.degree
    if f.is_zero():
        return 0
    if d < 2:
        return 1
    # phi_{a,d-a} is the transpose of phi_{d-a,a}
    return max(catalecticant_rank(f, a) for a in range(1, d // 2 + 1))
