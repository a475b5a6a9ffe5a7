"""Expected secant dimensions and the subsecant trichotomy, as pure arithmetic.

Every verdict names the rule that produced it and the threshold values that
were compared, so a caller can audit it without rerunning anything.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import ceil, comb, floor

from .errors import DomainError

# (d, n, k) where sigma_k(nu_d(P^n)) falls one short of its expected dimension
AH_DEFECTIVE = frozenset({(3, 4, 7), (4, 2, 5), (4, 3, 9), (4, 4, 14)})

# (d, m) pairs handled with floor/ceil thresholds
EXCEPTIONAL_DM = frozenset({(3, 4), (4, 2), (4, 3), (4, 4)})

# (k, d, m) that sit in the smooth range numerically but are singular
SPECIAL_SINGULAR_KDM = frozenset({(9, 6, 2), (9, 3, 5)})


def ambient_dim(d, n):
    """Projective dimension N of the span of nu_d(P^n)."""
    return comb(n + d, d) - 1


def naive_secant_dim(k, d, n):
    return min(k * n + k - 1, ambient_dim(d, n))


def expected_secant_dim(k, d, n):
    """Actual projective dimension of sigma_k(nu_d(P^n)), defective cases included."""
    if k < 1 or n < 1 or d < 1:
        raise DomainError("need k, d, n >= 1")
    if k == 1 or d == 1:
        return n
    N = ambient_dim(d, n)
    if d == 2:
        # symmetric (n+1)x(n+1) matrices of rank <= k
        if k >= n + 1:
            return N
        return k * (n + 1) - comb(k, 2) - 1
    naive = naive_secant_dim(k, d, n)
    if (d, n, k) in AH_DEFECTIVE:
        return naive - 1
    return naive


def is_defective(k, d, n):
    return expected_secant_dim(k, d, n) < naive_secant_dim(k, d, n)


def fills_span(k, d, m):
    """True iff sigma_k(nu_d(P^m)) is the whole span of nu_d(P^m)."""
    return expected_secant_dim(k, d, m) == ambient_dim(d, m)


class Tag(Enum):
    SMOOTH_GENERAL = "SmoothAtGeneralPoint"
    SMOOTH_EVERY = "SmoothAtEveryPoint"
    NONTRIVIAL_SINGULAR = "NontrivialSingular"
    TRIVIAL_CONTAINED = "TrivialContained"
    EXCEPTIONAL = "ExceptionalCase"
    UNSUPPORTED = "Unsupported"


@dataclass(frozen=True)
class SubsecantQuery:
    k: int
    d: int
    m: int
    n: int

    def __post_init__(self):
        k, d, m, n = self.k, self.d, self.m, self.n
        if k < 2 or d < 2 or m < 1:
            raise DomainError(f"need k >= 2, d >= 2, m >= 1 (got k={k}, d={d}, m={m})")
        if n <= m:
            raise DomainError(f"need n > m (got m={m}, n={n})")
        if m > k - 1:
            raise DomainError(f"m={m} exceeds k-1={k - 1}: P^m is not spanned by k points")


@dataclass(frozen=True)
class SubsecantVerdict:
    tag: Tag
    rule: str
    thresholds: dict = field(default_factory=dict)
    note: str = ""

    @property
    def justification(self):
        vals = ", ".join(f"{k}={v}" for k, v in self.thresholds.items())
        out = self.rule + (f" [{vals}]" if vals else "")
        return out + (f"; {self.note}" if self.note else "")

    def to_dict(self):
        return {
            "tag": self.tag.value,
            "rule": self.rule,
            "thresholds": {k: str(v) for k, v in self.thresholds.items()},
            "note": self.note,
        }


@dataclass(frozen=True)
class Thresholds:
    d: int
    m: int
    bound: Fraction
    floor: int
    ceil: int
    divisible: bool
    c0_binomial: int
    c0_closed: int

    @property
    def identity_holds(self):
        return self.c0_binomial == self.c0_closed


def trichotomy_thresholds(d, m):
    """B = binom(m+d, m)/(m+1) and the two forms of the dimension gap C0."""
    if d < 3 or m < 1:
        raise DomainError("need d >= 3 and m >= 1")
    B = Fraction(comb(m + d, m), m + 1)
    c0_binomial = -comb(m + d, d) + (m + 1) * comb(m + d - 1, d - 1)
    c0_closed = (d - 1) * comb(m + d - 1, m - 1)
    return Thresholds(d, m, B, floor(B), ceil(B), B.denominator == 1, c0_binomial, c0_closed)


def _m1(q):
    k, d, n = q.k, q.d, q.n
    th = {"d": d, "2k-1": 2 * k - 1, "2k-2": 2 * k - 2}
    if n == 2 and k == 3:
        th = {"d": d}
        if d == 4:
            return SubsecantVerdict(
                Tag.EXCEPTIONAL,
                "curve subsecant, planar k=3 exception",
                th,
                "smooth at every point outside sigma_2; the d = 2k-2 pattern does not apply here",
            )
        if d >= 4:
            return SubsecantVerdict(Tag.SMOOTH_EVERY, "curve subsecant, planar k=3: d >= 4", th)
        return SubsecantVerdict(Tag.TRIVIAL_CONTAINED, "curve subsecant, planar k=3: d <= 3", th)
    if d >= 2 * k - 1:
        return SubsecantVerdict(Tag.SMOOTH_EVERY, "curve subsecant: d >= 2k-1", th)
    if d == 2 * k - 2:
        return SubsecantVerdict(Tag.NONTRIVIAL_SINGULAR, "curve subsecant: d = 2k-2", th)
    return SubsecantVerdict(Tag.TRIVIAL_CONTAINED, "curve subsecant: d <= 2k-3", th)


def _general(q):
    k, d, m = q.k, q.d, q.m
    t = trichotomy_thresholds(d, m)
    th = {"k": k, "B": t.bound}
    if (k, d, m) in SPECIAL_SINGULAR_KDM:
        return SubsecantVerdict(
            Tag.NONTRIVIAL_SINGULAR,
            "plane subsecant, non-defective range: listed exception",
            th,
            f"(k,d,m)=({k},{d},{m}) is non-identifiable although k <= B",
        )
    note = ""
    if (k, d, m) == (8, 4, 3):
        note = "also a non-identifiable triple; verdict follows the threshold rule"
    if k <= t.bound:
        return SubsecantVerdict(Tag.SMOOTH_GENERAL, "plane subsecant, non-defective range: k <= B", th, note)
    if k < t.bound + 1:
        return SubsecantVerdict(
            Tag.NONTRIVIAL_SINGULAR, "plane subsecant, non-defective range: B < k < B+1", th, note
        )
    return SubsecantVerdict(Tag.TRIVIAL_CONTAINED, "plane subsecant, non-defective range: k >= B+1", th, note)


def _exceptional(q):
    k, d, m = q.k, q.d, q.m
    t = trichotomy_thresholds(d, m)
    th = {"k": k, "B": t.bound, "floor": t.floor, "ceil": t.ceil}
    note = ""
    if (k, d, m) == (8, 4, 3):
        note = "also a non-identifiable triple; verdict follows the floor/ceil rule"
    if k <= t.floor - 1:
        return SubsecantVerdict(Tag.SMOOTH_GENERAL, "plane subsecant, defective-prone range: k <= floor(B)-1", th, note)
    if k <= t.ceil + 1:
        return SubsecantVerdict(
            Tag.NONTRIVIAL_SINGULAR,
            "plane subsecant, defective-prone range: floor(B) <= k <= ceil(B)+1",
            th,
            note,
        )
    return SubsecantVerdict(Tag.TRIVIAL_CONTAINED, "plane subsecant, defective-prone range: k >= ceil(B)+2", th, note)


def classify_subsecant(q):
    """Verdict for sigma_k(nu_d(P^m)) inside sigma_k(nu_d(P^n))."""
    if not isinstance(q, SubsecantQuery):
        q = SubsecantQuery(*q)
    if q.m == q.k - 1:
        return SubsecantVerdict(
            Tag.UNSUPPORTED,
            "full-secant locus",
            {"k": q.k, "m": q.m},
            "m = k-1 is not a subsecant; use point certification instead",
        )
    if q.d == 2:
        return SubsecantVerdict(
            Tag.TRIVIAL_CONTAINED,
            "quadrics: rank picture",
            {"m+1": q.m + 1, "k-1": q.k - 1},
            "a quadric in m+1 <= k-1 variables has rank at most k-1",
        )
    if q.m == 1:
        return _m1(q)
    if (q.d, q.m) in EXCEPTIONAL_DM:
        return _exceptional(q)
    return _general(q)


@dataclass(frozen=True)
class ConeLocus:
    k: int
    d: int
    n: int
    description: str
    dim: int
    secant_dim: int
    case: str

    def to_dict(self):
        return {
            "description": self.description,
            "dim": self.dim,
            "secant_dim": self.secant_dim,
            "case": self.case,
        }


def _cone_case(k, d, n):
    if d == 2 and n >= k - 1:
        return "quadrics"
    if k == 2:
        return "second secant"
    if k == 3 and ((d == 3 and n >= 2) or (d == 4 and n >= 3)):
        return "third secant"
    if k == 4 and d == 3 and n >= 3:
        return "fourth secant of cubics"
    return None


def cone_locus_dim(k, d, n):
    """Projective dimension of the forms in at most k-1 variables."""
    r = k - 1
    if r >= n + 1:
        return ambient_dim(d, n)
    return r * (n + 1 - r) + comb(r - 1 + d, d) - 1


def cone_locus_description(k, d, n):
    """Closed form of Sing sigma_k(nu_d(P^n)) when it is the cone locus, else None."""
    if k < 1 or d < 2 or n < 1:
        return None
    case = _cone_case(k, d, n)
    if case is None:
        return None
    return ConeLocus(
        k,
        d,
        n,
        f"forms of degree {d} expressible in at most {k - 1} variables",
        cone_locus_dim(k, d, n),
        expected_secant_dim(k, d, n),
        case,
    )


@dataclass(frozen=True)
class FourthSecantReport:
    d: int
    n: int
    secant_dim: int
    ambient_dim: int
    full_locus: str
    plane: SubsecantVerdict
    line: SubsecantVerdict
    cone: ConeLocus | None

    def to_dict(self):
        return {
            "d": self.d,
            "n": self.n,
            "secant_dim": self.secant_dim,
            "ambient_dim": self.ambient_dim,
            "full_locus": self.full_locus,
            "m2": self.plane.to_dict(),
            "m1": self.line.to_dict(),
            "cone_locus": None if self.cone is None else self.cone.to_dict(),
        }

    def lines(self):
        out = [
            f"sigma_4(nu_{self.d}(P^{self.n})): dim {self.secant_dim} in P^{self.ambient_dim}",
            f"full-secant locus: {self.full_locus}",
            f"m=2 subsecant: {self.plane.tag.value} ({self.plane.justification})",
            f"m=1 subsecant: {self.line.tag.value} ({self.line.justification})",
        ]
        if self.cone is not None:
            out.append(f"Sing = {self.cone.description}; dim {self.cone.dim} inside dim {self.cone.secant_dim}")
        return out


def classify_fourth_secant(d, n):
    if d < 3 or n < 3:
        raise DomainError("the fourth-secant report needs d >= 3 and n >= 3")
    return FourthSecantReport(
        d,
        n,
        expected_secant_dim(4, d, n),
        ambient_dim(d, n),
        "smooth at every point outside sigma_3 and the m=2 subsecants",
        classify_subsecant(SubsecantQuery(4, d, 2, n)),
        classify_subsecant(SubsecantQuery(4, d, 1, n)),
        cone_locus_description(4, d, n),
    )
