"""Homogeneous forms and the apolar (differentiation) action.

Forms in S = C[x0..xn] are stored in divided-power coordinates: f = sum b_I X^I
with X^I = x^I / I!.  Forms in the dual ring T = C[y0..yn] use plain monomials
Y^J.  With that pair of bases the differentiation action is the shift
Y^J . X^I = X^(I-J), and Y^I . X^I = 1 is the coordinate pairing between T_d
and S_d.  The convention is carried on every form and checked at each
operation so a plain-coefficient form is never fed where a divided-power one
is expected.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import factorial
from types import MappingProxyType

from . import mindex
from .errors import DegreeError, DomainError


class Convention(Enum):
    PRIMAL = "divided-power"
    DUAL = "plain-monomial"


PRIMAL = Convention.PRIMAL
DUAL = Convention.DUAL


def _frac(c):
    return c if isinstance(c, Fraction) else Fraction(c)


@dataclass(frozen=True, eq=False)
class GradedForm:
    nvars: int
    degree: int
    coeffs: "MappingProxyType" = field(default_factory=dict)
    convention: Convention = PRIMAL

    def __post_init__(self):
        if self.nvars < 1:
            raise DomainError("a form needs at least one variable")
        if self.degree < 0:
            raise DomainError("degree must be non-negative")
        clean = {}
        for key, c in dict(self.coeffs).items():
            key = tuple(key)
            if len(key) != self.nvars or sum(key) != self.degree or min(key) < 0:
                raise DomainError(
                    f"monomial {key} does not belong to degree {self.degree} "
                    f"in {self.nvars} variables"
                )
            c = _frac(c)
            if c:
                clean[key] = clean.get(key, 0) + c
        clean = {k: v for k, v in clean.items() if v}
        object.__setattr__(self, "coeffs", MappingProxyType(clean))

    @classmethod
    def zero(cls, nvars, degree, convention=PRIMAL):
        return cls(nvars, degree, {}, convention)

    @classmethod
    def monomial(cls, exponents, coeff=1, convention=PRIMAL):
        exponents = tuple(exponents)
        return cls(len(exponents), sum(exponents), {exponents: coeff}, convention)

    def coeff(self, index):
        return self.coeffs.get(tuple(index), Fraction(0))

    def is_zero(self):
        return not self.coeffs

    def terms(self):
        """(index, coefficient) pairs in graded-lex order."""
        return sorted(self.coeffs.items(), reverse=True)

    def _check_compatible(self, other):
        if not isinstance(other, GradedForm):
            return NotImplemented
        if (self.nvars, self.degree, self.convention) != (
            other.nvars,
            other.degree,
            other.convention,
        ):
            raise DomainError("forms live in different graded pieces")
        return True

    def __add__(self, other):
        if self._check_compatible(other) is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return GradedForm(self.nvars, self.degree, out, self.convention)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _frac(c)
        return GradedForm(
            self.nvars, self.degree, {k: c * v for k, v in self.coeffs.items()}, self.convention
        )

    def __mul__(self, c):
        if isinstance(c, GradedForm):
            return multiply_dual(self, c)
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GradedForm):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.degree == other.degree
            and self.convention == other.convention
            and dict(self.coeffs) == dict(other.coeffs)
        )

    def __hash__(self):
        return hash((self.nvars, self.degree, self.convention, frozenset(self.coeffs.items())))

    def __repr__(self):
        tag = "S" if self.convention is PRIMAL else "T"
        return f"GradedForm({tag}_{self.degree}, nvars={self.nvars}, {dict(self.terms())})"


@dataclass(frozen=True)
class LinearForm:
    coeffs: tuple

    def __post_init__(self):
        cs = tuple(_frac(c) for c in self.coeffs)
        if not cs:
            raise DomainError("a linear form needs at least one variable")
        if not any(cs):
            raise DomainError("the zero linear form is not allowed")
        object.__setattr__(self, "coeffs", cs)

    @property
    def nvars(self):
        return len(self.coeffs)


def _require(f, convention, what):
    if f.convention is not convention:
        raise DomainError(f"{what} must use the {convention.value} convention")


def contract(g, f):
    """Apolar action g(d/dx0, ..., d/dxn) f for g in T_e, f in S_d."""
    _require(g, DUAL, "the operator")
    _require(f, PRIMAL, "the operand")
    if g.nvars != f.nvars:
        raise DomainError("operator and form have different numbers of variables")
    if g.degree > f.degree:
        raise DegreeError(f"cannot apply a degree-{g.degree} operator to a degree-{f.degree} form")
    out = {}
    for j, gj in g.coeffs.items():
        for i, bi in f.coeffs.items():
            k = mindex.try_sub(i, j)
            if k is not None:
                out[k] = out.get(k, 0) + gj * bi
    return GradedForm(f.nvars, f.degree - g.degree, out, PRIMAL)


def multiply_dual(g, h):
    """Ordinary product in T."""
    _require(g, DUAL, "left factor")
    _require(h, DUAL, "right factor")
    if g.nvars != h.nvars:
        raise DomainError("factors have different numbers of variables")
    out = {}
    for a, ca in g.coeffs.items():
        for b, cb in h.coeffs.items():
            k = mindex.add(a, b)
            out[k] = out.get(k, 0) + ca * cb
    return GradedForm(g.nvars, g.degree + h.degree, out, DUAL)


def power_form(linear, d):
    """l^d in divided-power coordinates; b_I = d! * c^I."""
    if not isinstance(linear, LinearForm):
        linear = LinearForm(tuple(linear))
    if d < 1:
        raise DomainError("power must be at least 1")
    c = linear.coeffs
    df = factorial(d)
    out = {}
    for index in mindex.enumerate_basis(len(c), d):
        v = Fraction(df)
        for cj, e in zip(c, index):
            if e:
                v *= cj**e
                if not v:
                    break
        if v:
            out[index] = v
    return GradedForm(len(c), d, out, PRIMAL)


def sum_of_powers(linears, d):
    linears = list(linears)
    if not linears:
        raise DomainError("need at least one linear form")
    total = power_form(linears[0], d)
    for lf in linears[1:]:
        total = total + power_form(lf, d)
    return total


def restrict(f, vars_kept, squeeze=True):
    """Keep the terms supported on ``vars_kept``.

    With ``squeeze`` the result lives in ``len(vars_kept)`` variables (the
    coordinate projection); otherwise it stays in the original ring, which is
    what a membership test ``restrict(f, vs, squeeze=False) == f`` wants.
    """
    kept = sorted(set(vars_kept))
    if not kept:
        raise DomainError("must keep at least one variable")
    if kept[0] < 0 or kept[-1] >= f.nvars:
        raise DomainError(f"variable index out of range for {f.nvars} variables")
    dropped = [i for i in range(f.nvars) if i not in set(kept)]
    out = {}
    for index, c in f.coeffs.items():
        if all(index[i] == 0 for i in dropped):
            out[tuple(index[i] for i in kept) if squeeze else index] = c
    n = len(kept) if squeeze else f.nvars
    return GradedForm(n, f.degree, out, f.convention)


def embed(f, nvars, positions=None):
    """Inverse of a squeezing restrict: place f's variables at ``positions``
    of a ring with ``nvars`` variables (default: the first ones)."""
    if positions is None:
        positions = range(f.nvars)
    positions = list(positions)
    if len(positions) != f.nvars or len(set(positions)) != f.nvars:
        raise DomainError("positions must list one distinct slot per variable")
    if max(positions) >= nvars:
        raise DomainError("target ring too small")
    out = {}
    for index, c in f.coeffs.items():
        new = [0] * nvars
        for p, e in zip(positions, index):
            new[p] = e
        out[tuple(new)] = c
    return GradedForm(nvars, f.degree, out, f.convention)


def in_coordinate_span(f, vars_kept):
    """True iff f only involves the variables in ``vars_kept``."""
    return restrict(f, vars_kept, squeeze=False) == f


def ordinary_to_divided(nvars, degree, coeffs):
    """Build a form in S from ordinary coefficients c_I of x^I (b_I = I! c_I)."""
    return GradedForm(
        nvars,
        degree,
        {tuple(k): _frac(v) * mindex.factorial_product(k) for k, v in dict(coeffs).items()},
        PRIMAL,
    )


def divided_to_ordinary(f):
    _require(f, PRIMAL, "the form")
    return {k: v / mindex.factorial_product(k) for k, v in f.coeffs.items()}


def dual_from_vector(nvars, degree, vector):
    """Element of T_degree from a coordinate vector over the graded-lex basis."""
    basis = mindex.enumerate_basis(nvars, degree)
    return GradedForm(nvars, degree, {basis[i]: c for i, c in enumerate(vector) if c}, DUAL)


def dual_to_vector(g):
    _require(g, DUAL, "the form")
    basis = mindex.monomial_basis(g.nvars, g.degree)
    vec = [Fraction(0)] * len(basis)
    for k, c in g.coeffs.items():
        vec[basis.rank(k)] = c
    return vec
