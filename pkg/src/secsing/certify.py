"""Point certification: smooth, singular, or undecided, with replayable evidence.

A certificate is a verdict plus the ordered list of computations that led to
it.  Each step stores its inputs, a digest of those inputs, the numbers it
produced and the rule that justifies using them.
"""

import hashlib
import json
from dataclasses import dataclass, field
from enum import Enum
from math import comb

from . import flat, yflat
from .classify import ambient_dim, expected_secant_dim, fills_span, naive_secant_dim
from .errors import DomainError, PreconditionError
from .gpoly import PRIMAL, ordinary_to_divided
from .tangent import CurveFamily, moving_tangent_span, tangent_excess_verdict, tangent_frame


class Verdict(Enum):
    SMOOTH = "Smooth"
    SINGULAR = "Singular"
    INCONCLUSIVE = "Inconclusive"
    INCONSISTENT = "Inconsistent"


def form_digest(f):
    """sha256 over the canonical text of a form (sorted divided-power coefficients)."""
    parts = [f"{f.nvars};{f.degree};{f.convention.name}"]
    for index, c in sorted(f.coeffs.items()):
        parts.append(f"{','.join(map(str, index))}:{c.numerator}/{c.denominator}")
    return hashlib.sha256("|".join(parts).encode()).hexdigest()[:16]


def _digest(obj):
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()[:16]


@dataclass(frozen=True)
class EvidenceStep:
    op: str
    inputs: dict
    result: dict
    basis: str

    @property
    def inputs_digest(self):
        return _digest(self.inputs)

    def to_dict(self):
        return {
            "op": self.op,
            "inputs": self.inputs,
            "inputs_digest": self.inputs_digest,
            "result": self.result,
            "basis": self.basis,
        }


@dataclass
class Certificate:
    verdict: Verdict
    k: int
    d: int
    n: int
    form: str
    strategy: str = ""
    steps: list = field(default_factory=list)
    assumptions: list = field(default_factory=list)

    def add(self, op, inputs, result, basis):
        self.steps.append(EvidenceStep(op, inputs, result, basis))

    def to_dict(self):
        return {
            "verdict": self.verdict.value,
            "parameters": {"form": self.form, "k": self.k, "d": self.d, "n": self.n},
            "strategy": self.strategy,
            "assumptions": list(self.assumptions),
            "evidence": [s.to_dict() for s in self.steps],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


# -- strategies -------------------------------------------------------------------


@dataclass(frozen=True)
class Strategy:
    kind: str
    params: tuple = ()

    def __post_init__(self):
        if self.kind not in ("sym", "young", "auto"):
            raise DomainError(f"unknown strategy {self.kind!r}")
        if self.kind == "sym" and len(self.params) != 1:
            raise DomainError("sym strategy takes one index a")
        if self.kind == "young" and len(self.params) != 3:
            raise DomainError("young strategy takes d1, d2, a")
        if self.kind == "auto" and self.params:
            raise DomainError("auto strategy takes no parameters")

    def __str__(self):
        if self.kind == "auto":
            return "auto"
        return f"{self.kind}:{','.join(map(str, self.params))}"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text == "auto":
            return cls("auto")
        kind, _, rest = text.partition(":")
        try:
            params = tuple(int(p) for p in rest.split(",")) if rest else ()
        except ValueError:
            raise DomainError(f"bad strategy parameters in {text!r}") from None
        return cls(kind, params)


def Symmetric(a):
    return Strategy("sym", (a,))


def Young(d1, d2, a):
    return Strategy("young", (d1, d2, a))


AUTO = Strategy("auto")


# -- locus membership --------------------------------------------------------------


def essential_variables(f):
    """Number of variables f genuinely depends on (rank of its first derivatives)."""
    if f.is_zero():
        return 0
    if f.degree == 1:
        return 1
    return flat.catalecticant_rank(f, f.degree - 1)


def lower_secant_membership(f, k):
    """Decide f in sigma_{k-1} where an exact criterion is available.

    Returns (True/False/None, reason); None means no criterion applies.
    """
    d = f.degree
    s = k - 1
    if s < 1:
        return False, "sigma_0 is empty"
    r = essential_variables(f)
    if r == 0:
        return True, "zero form"
    if r == 1:
        return True, "a pure power lies on the Veronese itself"
    if r <= s and d >= 2 and fills_span(s, d, r - 1):
        return True, f"f uses {r} variables and sigma_{s} of nu_{d}(P^{r - 1}) fills its span"
    if r == 2:
        # binary forms: border rank <= s iff the (d-s, s) catalecticant has rank <= s
        if 2 * s >= d + 1:
            return True, f"binary form and sigma_{s} of the rational normal curve fills its span"
        rk = flat.catalecticant_rank(f, s)
        return rk <= s, f"binary form, catalecticant rank {rk} vs {s}"
    if r > s and flat.border_rank_lower_bound(f) >= k:
        return False, "a flattening rank certifies border rank >= k"
    return None, "no exact membership criterion for this form"


# -- pipeline ---------------------------------------------------------------------


def _yf_bounds(f, params):
    d1, d2, a = params
    yf = yflat.young_flattening(f, d1, d2, a)
    r = yflat.yf_rank(yf)
    return r, -(-r // yf.decomposable_rank)


def _sym_candidates(d):
    # middle flattening first: it is the strongest
    mid = d // 2
    order = [mid] + [a for a in range((d + 1) // 2, 0, -1) if a != mid]
    return order


def _conormal_attempt(cert, f, k, strategy, stop_at):
    """Run one strategy; returns the bound or None if its hypothesis fails."""
    try:
        if strategy.kind == "sym":
            (a,) = strategy.params
            dim = flat.conormal_span_symmetric(f, k, a, stop_at=stop_at).dim
            cert.add(
                "conormal_symmetric",
                {"a": a, "k": k},
                {"dim": dim, "truncated_at": stop_at},
                "products of apolar pieces in degrees a and d-a annihilate the tangent space",
            )
            return dim
        d1, d2, a = strategy.params
        dim = yflat.conormal_span_young(f, k, d1, d2, a, stop_at=stop_at).dim
        cert.add(
            "conormal_young",
            {"d1": d1, "d2": d2, "a": a, "k": k},
            {"dim": dim, "truncated_at": stop_at},
            "kernel times image-annihilator pairings of the Young flattening annihilate the tangent space",
        )
        return dim
    except (PreconditionError, DomainError) as e:
        cert.add(
            "conormal_precondition",
            {"strategy": str(strategy), "k": k},
            {"failed": str(e)},
            "the bound needs the flattening rank of a general point of sigma_k",
        )
        return None


def _auto_strategies(f, k):
    d, n = f.degree, f.nvars - 1
    out = [Symmetric(a) for a in _sym_candidates(d)]
    if d >= 2 and n >= 1:
        out.append(Young(*yflat.default_params(d)))
    return out


def certify_point(f, k, strategy=AUTO):
    if isinstance(strategy, str):
        strategy = Strategy.parse(strategy)
    if f.convention is not PRIMAL:
        raise DomainError("certify a form of S")
    d, n = f.degree, f.nvars - 1
    if d < 2 or k < 1:
        raise DomainError("need degree >= 2 and k >= 1")
    if n < 1:
        raise DomainError("need at least two variables")
    cert = Certificate(Verdict.INCONCLUSIVE, k, d, n, form_digest(f), str(strategy))

    # (1) f outside sigma_{k-1}
    cat = flat.border_rank_lower_bound(f)
    young_params = strategy.params if strategy.kind == "young" else yflat.default_params(d)
    yf_rank, yf_bound = _yf_bounds(f, young_params)
    outside = max(cat, yf_bound) >= k
    cert.add(
        "border_rank_bounds",
        {"k": k, "young": list(young_params)},
        {"catalecticant": cat, "young_rank": yf_rank, "young": yf_bound, "outside_lower_secant": outside},
        "a flattening of rank r exceeding (k-1) times its rank on powers excludes sigma_{k-1}",
    )

    if not outside:
        member, reason = lower_secant_membership(f, k)
        cert.add("lower_secant_membership", {"k": k}, {"member": member, "reason": reason}, "exact membership criteria")
        if member:
            fills = expected_secant_dim(k, d, n) == ambient_dim(d, n)
            cert.add(
                "trivial_locus",
                {"k": k, "d": d, "n": n},
                {"secant_fills_ambient": fills},
                "sigma_{k-1} lies in the singular locus of sigma_k unless sigma_k is the whole space",
            )
            if not fills:
                cert.verdict = Verdict.SINGULAR
            return cert

    # (2) expected codimension
    N = ambient_dim(d, n)
    codim = N - naive_secant_dim(k, d, n)
    cert.add(
        "expected_codimension",
        {"k": k, "d": d, "n": n},
        {"codim": codim, "ambient": N, "secant_dim_corrected": expected_secant_dim(k, d, n)},
        "binom(n+d,d) - 1 - min(kn+k-1, N)",
    )

    # (3) conormal lower bound; one past codim is enough to flag excess
    stop = codim + 1
    if strategy.kind == "auto":
        plan = _auto_strategies(f, k)
    else:
        plan = [strategy] + [s for s in _auto_strategies(f, k) if s != strategy]
    bound = None
    for s in plan:
        got = _conormal_attempt(cert, f, k, s, stop)
        if got is not None:
            bound = got if bound is None else max(bound, got)
            if bound >= codim:
                break

    # (4) verdict
    if bound is None:
        cert.verdict = Verdict.INCONCLUSIVE
    elif bound > codim:
        cert.verdict = Verdict.INCONSISTENT
    elif bound == codim and outside:
        cert.verdict = Verdict.SMOOTH
    else:
        cert.verdict = Verdict.INCONCLUSIVE
    cert.add("verdict", {"codim": codim}, {"bound": bound, "outside_lower_secant": outside}, "conormal sandwich")
    return cert


def replay(f, cert):
    """Recompute ``cert`` from scratch; True iff every number agrees."""
    again = certify_point(f, cert.k, Strategy.parse(cert.strategy))
    return again.to_dict() == cert.to_dict()


# -- normal forms -----------------------------------------------------------------

NORMAL_FORM_IDS = ("f1", "f2", "f3", "f4", "f5")


def normal_form_terms(name, d):
    """Ordinary coefficients of the four-variable normal forms."""
    if name not in NORMAL_FORM_IDS:
        raise DomainError(f"unknown normal form {name!r}")
    if d < 3:
        raise DomainError("normal forms are catalogued for d >= 3")
    return {
        "f1": {(d, 0, 0, 0): 1, (0, d, 0, 0): 1, (0, 0, d, 0): 1, (0, 0, 0, d): 1},
        "f2": {(d - 1, 1, 0, 0): 1, (0, 0, d, 0): 1, (0, 0, 0, d): 1},
        "f3": {(d - 1, 1, 0, 0): 1, (0, 0, d - 1, 1): 1},
        "f4": {(d - 2, 2, 0, 0): 1, (d - 1, 0, 1, 0): 1, (0, 0, 0, d): 1},
        "f5": {(d - 3, 3, 0, 0): 1, (d - 2, 1, 1, 0): 1, (d - 1, 0, 0, 1): 1},
    }[name]


def normal_form(name, d):
    return ordinary_to_divided(4, d, normal_form_terms(name, d))


@dataclass(frozen=True)
class SuiteRow:
    name: str
    d: int
    yf_rank: int
    conormal_dim: int
    expected: int
    computed: bool

    @property
    def ok(self):
        return self.yf_rank == 12 and self.conormal_dim == self.expected

    def to_dict(self):
        return {
            "form": self.name,
            "d": self.d,
            "young_rank": self.yf_rank,
            "conormal_dim": self.conormal_dim,
            "expected": self.expected,
            "ok": self.ok,
            "counts_toward_pass": self.computed,
        }


@dataclass(frozen=True)
class SuiteReport:
    d: int
    rows: tuple

    @property
    def passed(self):
        return all(r.ok for r in self.rows if r.computed)

    def to_dict(self):
        return {
            "d": self.d,
            "passed": self.passed,
            "rows": [r.to_dict() for r in self.rows],
            "note": "f1 is smooth by the orbit argument; its numbers are informational",
        }


def verify_fourth_secant_suite(d):
    """Young flattening rank and conormal dimension for f1..f5 at degree d."""
    if not 3 <= d <= 6:
        raise DomainError("the suite runs for 3 <= d <= 6")
    expected = comb(d + 3, 3) - 16
    rows = []
    for name in NORMAL_FORM_IDS:
        f = normal_form(name, d)
        yf = yflat.young_flattening(f)
        r = yflat.yf_rank(yf)
        dim = yflat.conormal_span_young(f, 4).dim if r == 12 else -1
        rows.append(SuiteRow(name, d, r, dim, expected, name != "f1"))
    return SuiteReport(d, tuple(rows))


# -- singularity witnesses --------------------------------------------------------


def singularity_witness(f, k, witnesses):
    """Singular iff the spans of the witness tangents exceed dim sigma_k.

    ``witnesses`` mixes CurveFamily objects (moving tangents) and points
    (fixed frames).  That they lie in the tangent space at f is the caller's
    assertion and is recorded as such.
    """
    witnesses = list(witnesses)
    if not witnesses:
        raise DomainError("need at least one witness")
    d, n = f.degree, f.nvars - 1
    cert = Certificate(Verdict.INCONCLUSIVE, k, d, n, form_digest(f), "witness")
    cert.assumptions.append("every witness tangent space lies in the tangent space of sigma_k at f")
    spans = []
    for w in witnesses:
        if isinstance(w, CurveFamily):
            if w.nvars != n + 1:
                raise DomainError("witness family has the wrong number of coordinates")
            s = moving_tangent_span(w, d)
            desc = {"family": [[str(c) for c in p] for p in w.coords]}
        else:
            if len(w) != n + 1:
                raise DomainError("witness point has the wrong number of coordinates")
            s = tangent_frame(w, d).span
            desc = {"point": [str(c) for c in w]}
        spans.append(s)
        cert.add("witness_span", desc, {"affine_dim": s.dim}, "span of tangent spaces of the Veronese")
    rep = tangent_excess_verdict(spans, k, d, n)
    cert.add(
        "tangent_excess",
        {"k": k, "d": d, "n": n},
        rep.to_dict(),
        "tangent space dimension above dim sigma_k forces a singular point",
    )
    cert.verdict = Verdict.SINGULAR if rep.excess else Verdict.INCONCLUSIVE
    return cert
