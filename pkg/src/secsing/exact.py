"""Exact linear algebra over Q on labeled coordinate spaces.

Ranks come from fraction-free (Bareiss) elimination on integer rows obtained
by clearing denominators row by row.  Subspaces are built by sparse
fraction-free incremental reduction and kept in reduced row echelon form, so
two equal subspaces always have identical bases.  Pivoting is fixed: leftmost
column, topmost nonzero row.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import DomainError


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, eq=False)
class ExactMatrix:
    entries: tuple
    row_labels: tuple
    col_labels: tuple

    def __post_init__(self):
        rows = tuple(tuple(_frac(x) for x in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))
        if len(self.row_labels) != len(rows):
            raise DomainError("row label count does not match the number of rows")
        if any(len(r) != len(self.col_labels) for r in rows):
            raise DomainError("every row must have one entry per column label")

    @classmethod
    def from_rows(cls, rows, row_labels=None, col_labels=None):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else len(col_labels or ())
        if row_labels is None:
            row_labels = range(len(rows))
        if col_labels is None:
            col_labels = range(ncols)
        return cls(tuple(rows), tuple(row_labels), tuple(col_labels))

    @classmethod
    def zeros(cls, row_labels, col_labels):
        row_labels, col_labels = tuple(row_labels), tuple(col_labels)
        z = Fraction(0)
        return cls(tuple((z,) * len(col_labels) for _ in row_labels), row_labels, col_labels)

    @classmethod
    def identity(cls, k):
        return cls.from_rows([[int(i == j) for j in range(k)] for i in range(k)])

    @property
    def shape(self):
        return len(self.row_labels), len(self.col_labels)

    @property
    def nrows(self):
        return len(self.row_labels)

    @property
    def ncols(self):
        return len(self.col_labels)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self):
        if not self.nrows:
            return ExactMatrix.zeros(self.col_labels, ())
        return ExactMatrix(tuple(zip(*self.entries)), self.col_labels, self.row_labels)

    @property
    def T(self):
        return self.transpose()

    def __add__(self, other):
        if self.shape != other.shape:
            raise DomainError("shape mismatch")
        return ExactMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
            self.row_labels,
            self.col_labels,
        )

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.entries == other.entries and self.shape == other.shape

    def __hash__(self):
        return hash(self.entries)

    def is_zero(self):
        return not any(any(r) for r in self.entries)

    def apply(self, vector):
        """Matrix times a column vector."""
        if len(vector) != self.ncols:
            raise DomainError("vector length does not match the column count")
        return [sum((a * b for a, b in zip(r, vector) if a and b), Fraction(0)) for r in self.entries]

    def to_text(self):
        """Dump as 'rows cols' followed by one line of p/q rationals per row."""
        lines = [f"{self.nrows} {self.ncols}"]
        for r in self.entries:
            lines.append(" ".join(f"{x.numerator}/{x.denominator}" for x in r))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [ln for ln in text.strip().splitlines()]
        nr, nc = (int(t) for t in lines[0].split())
        rows = [[Fraction(t) for t in ln.split()] for ln in lines[1 : 1 + nr]]
        if len(rows) != nr or any(len(r) != nc for r in rows):
            raise DomainError("matrix dump is truncated or ragged")
        return cls.from_rows(rows, range(nr), range(nc))

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols})"


# -- integer row helpers -----------------------------------------------------


def _int_row(values):
    """Scale a rational row to a primitive integer row (positive leading entry)."""
    fr = [_frac(v) for v in values]
    den = 1
    for x in fr:
        if x:
            den = lcm(den, x.denominator)
    ints = [int(x * den) for x in fr]
    return ints


def _primitive_sparse(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g not in (0, 1):
        row = {k: v // g for k, v in row.items()}
    return row


def _sparse_int(vector):
    if isinstance(vector, dict):
        items = [(k, _frac(v)) for k, v in vector.items() if v]
    else:
        items = [(k, _frac(v)) for k, v in enumerate(vector) if v]
    if not items:
        return {}
    den = 1
    for _, x in items:
        den = lcm(den, x.denominator)
    return _primitive_sparse({k: int(x * den) for k, x in items})


# -- Bareiss -------------------------------------------------------------------


def bareiss_echelon(int_rows, ncols):
    """Fraction-free row echelon form of an integer matrix.

    Returns (rows, pivot_columns).  Rows are modified copies; every division
    is exact (Bareiss), so entries stay minors of the input.
    """
    m = [list(r) for r in int_rows]
    nrows = len(m)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        prow = m[r]
        for i in range(r + 1, nrows):
            row = m[i]
            a = row[c]
            if a:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - a * prow[j]) // prev
                row[c] = 0
            else:
                # still has to be rescaled to keep the Bareiss invariant
                if p != prev:
                    for j in range(c + 1, ncols):
                        if row[j]:
                            row[j] = (p * row[j]) // prev
        pivots.append(c)
        prev = p
        r += 1
    return m[: len(pivots)], pivots


def rank(matrix):
    """Exact rank of an ExactMatrix (or a list of rational rows)."""
    if isinstance(matrix, ExactMatrix):
        rows, ncols = matrix.entries, matrix.ncols
    else:
        rows = [list(r) for r in matrix]
        ncols = len(rows[0]) if rows else 0
    int_rows = [_int_row(r) for r in rows if any(r)]
    if not int_rows:
        return 0
    return len(bareiss_echelon(int_rows, ncols)[1])


def rank_mod_p(matrix, p):
    """Rank over GF(p); an independent check on ``rank`` (never exceeds it).

    Raises DomainError if p divides a denominator.
    """
    rows = matrix.entries if isinstance(matrix, ExactMatrix) else matrix
    m = []
    for r in rows:
        out = []
        for x in r:
            x = _frac(x)
            if x.denominator % p == 0:
                raise DomainError(f"prime {p} divides a denominator")
            out.append(x.numerator * pow(x.denominator, -1, p) % p)
        m.append(out)
    ncols = len(m[0]) if m else 0
    rk = 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = pow(m[rk][c], -1, p)
        prow = [v * inv % p for v in m[rk]]
        m[rk] = prow
        for i in range(rk + 1, len(m)):
            a = m[i][c]
            if a:
                m[i] = [(v - a * w) % p for v, w in zip(m[i], prow)]
        rk += 1
    return rk


# -- sparse incremental echelon ------------------------------------------------


class EchelonBuilder:
    """Grows an echelon basis one generator at a time.

    Rows are sparse primitive integer dicts keyed by column; each stored row
    has a distinct leading column.  ``add`` returns True when the generator
    was independent of what is already stored.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, row):
        rows = self.rows
        while row:
            c = min(row)
            b = rows.get(c)
            if b is None:
                return row
            a = row[c]
            p = b[c]
            g = gcd(a, p)
            fa, fp = a // g, p // g
            new = {k: fp * v for k, v in row.items()}
            for k, v in b.items():
                nv = new.get(k, 0) - fa * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            row = _primitive_sparse(new) if new else new
        return row

    def add(self, vector):
        row = vector if isinstance(vector, dict) and _is_int_dict(vector) else _sparse_int(vector)
        if not row:
            return False
        row = self.reduce(_primitive_sparse(row))
        if not row:
            return False
        self.rows[min(row)] = row
        return True

    def rref(self):
        """Reduced rows as a tuple of ((col, Fraction), ...) tuples, pivot-sorted."""
        reduced = {}
        for piv in sorted(self.rows, reverse=True):
            row = self.rows[piv]
            lead = row[piv]
            frow = {k: Fraction(v, lead) for k, v in row.items()}
            for c in sorted(k for k in frow if k > piv):
                if c in reduced and c in frow:
                    a = frow[c]
                    for k, v in reduced[c].items():
                        nv = frow.get(k, 0) - a * v
                        if nv:
                            frow[k] = nv
                        else:
                            frow.pop(k, None)
            reduced[piv] = frow
        return tuple(tuple(sorted(reduced[p].items())) for p in sorted(reduced))


def _is_int_dict(d):
    return all(isinstance(v, int) for v in d.values())


# -- subspaces -------------------------------------------------------------------


class Subspace:
    """A linear subspace of Q^D with labeled coordinates, stored in RREF."""

    __slots__ = ("ambient", "_rows", "_index")

    def __init__(self, ambient, rref_rows):
        self.ambient = tuple(ambient)
        self._rows = tuple(rref_rows)
        self._index = None

    @classmethod
    def span(cls, ambient, vectors):
        ambient = tuple(ambient)
        b = EchelonBuilder(len(ambient))
        for v in vectors:
            if not isinstance(v, dict) and len(v) != len(ambient):
                raise DomainError("vector length does not match the ambient dimension")
            b.add(v)
        return cls(ambient, b.rref())

    @classmethod
    def zero(cls, ambient):
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient):
        ambient = tuple(ambient)
        return cls(ambient, tuple(((i, Fraction(1)),) for i in range(len(ambient))))

    @property
    def dim(self):
        return len(self._rows)

    @property
    def ambient_dim(self):
        return len(self.ambient)

    @property
    def codim(self):
        return len(self.ambient) - len(self._rows)

    @property
    def pivots(self):
        return tuple(r[0][0] for r in self._rows)

    def sparse_rows(self):
        return self._rows

    def vectors(self):
        """Dense basis vectors (RREF rows)."""
        D = len(self.ambient)
        out = []
        for r in self._rows:
            v = [Fraction(0)] * D
            for k, x in r:
                v[k] = x
            out.append(tuple(v))
        return out

    def labeled_vectors(self):
        """Basis rows as {label: coefficient} dicts."""
        return [{self.ambient[k]: x for k, x in r} for r in self._rows]

    def basis_matrix(self):
        return ExactMatrix(tuple(self.vectors()), range(self.dim), self.ambient)

    def _check(self, other):
        if self.ambient != other.ambient:
            raise DomainError("subspaces live in different ambient spaces")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self._rows == other._rows

    def __hash__(self):
        return hash((self.ambient, self._rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim})"

    def contains(self, vector):
        if isinstance(vector, Subspace):
            self._check(vector)
            return all(self.contains(dict(r)) for r in vector._rows)
        if not isinstance(vector, dict):
            if len(vector) != len(self.ambient):
                raise DomainError("vector length does not match the ambient dimension")
            vector = {k: _frac(x) for k, x in enumerate(vector) if x}
        v = {k: _frac(x) for k, x in vector.items() if x}
        for r in self._rows:
            piv = r[0][0]
            a = v.get(piv)
            if a:
                for k, x in r:
                    nv = v.get(k, 0) - a * x
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
        return not v

    __contains__ = contains

    def __add__(self, other):
        return span_sum(self, other)

    def intersection(self, other):
        self._check(other)
        return annihilator(span_sum(annihilator(self), annihilator(other)))

    def relabel(self, ambient):
        ambient = tuple(ambient)
        if len(ambient) != len(self.ambient):
            raise DomainError("relabeling must keep the dimension")
        return Subspace(ambient, self._rows)


def span_sum(*spaces):
    if not spaces:
        raise DomainError("need at least one subspace")
    first = spaces[0]
    b = EchelonBuilder(first.ambient_dim)
    for s in spaces:
        first._check(s)
        for r in s._rows:
            b.add(dict(r))
    return Subspace(first.ambient, b.rref())


def dim(space):
    return space.dim


def contains(space, vector):
    return space.contains(vector)


def _rref_of_rows(rows, ncols):
    b = EchelonBuilder(ncols)
    for r in rows:
        b.add(r)
    return b.rref()


def _nullspace(rref_rows, ncols):
    pivots = [r[0][0] for r in rref_rows]
    pivset = set(pivots)
    vecs = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = {free: Fraction(1)}
        for r in rref_rows:
            for k, x in r[1:]:
                if k == free:
                    v[r[0][0]] = -x
                    break
        vecs.append(v)
    return vecs


def kernel(matrix, ambient=None):
    """Right kernel {v : M v = 0} as a subspace of the column space."""
    rows = [r for r in matrix.entries if any(r)]
    rr = _rref_of_rows(rows, matrix.ncols)
    ambient = matrix.col_labels if ambient is None else ambient
    return Subspace.span(ambient, _nullspace(rr, matrix.ncols))


def left_kernel(matrix, ambient=None):
    """{w : w^T M = 0}, the annihilator of the column image."""
    return kernel(matrix.transpose(), ambient=matrix.row_labels if ambient is None else ambient)


def row_space(matrix):
    return Subspace.span(matrix.col_labels, [r for r in matrix.entries if any(r)])


def column_space(matrix):
    return row_space(matrix.transpose())


def annihilator(space, ambient=None):
    """Vectors pairing to zero with every basis row under the coordinate dot product."""
    n = space.ambient_dim
    vecs = _nullspace(space._rows, n)
    return Subspace.span(space.ambient if ambient is None else ambient, vecs)
