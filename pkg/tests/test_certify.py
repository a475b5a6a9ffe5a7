import json
import random
from math import comb

import hypothesis.strategies as st
import pytest
from hypothesis import assume, given, settings

from secsing.certify import (
    AUTO,
    CurveFamily,
    Strategy,
    Symmetric,
    Verdict,
    Young,
    certify_point,
    essential_variables,
    form_digest,
    lower_secant_membership,
    normal_form,
    replay,
    singularity_witness,
    verify_fourth_secant_suite,
)
from secsing.errors import DomainError
from secsing.gpoly import GradedForm, embed, ordinary_to_divided, power_form, sum_of_powers


def test_normal_forms_exact():
    assert normal_form("f1", 3) == ordinary_to_divided(4, 3, {(3, 0, 0, 0): 1, (0, 3, 0, 0): 1, (0, 0, 3, 0): 1, (0, 0, 0, 3): 1})
    assert normal_form("f3", 5) == ordinary_to_divided(4, 5, {(4, 1, 0, 0): 1, (0, 0, 4, 1): 1})
    assert normal_form("f4", 4) == ordinary_to_divided(4, 4, {(2, 2, 0, 0): 1, (3, 0, 1, 0): 1, (0, 0, 0, 4): 1})
    assert normal_form("f5", 3) == ordinary_to_divided(4, 3, {(0, 3, 0, 0): 1, (1, 1, 1, 0): 1, (2, 0, 0, 1): 1})
    with pytest.raises(DomainError):
        normal_form("f5", 2)
    with pytest.raises(DomainError):
        normal_form("f6", 4)


def test_binary_four_powers_smooth():
    f = embed(sum_of_powers([(1, 0), (0, 1), (1, 1), (1, -1)], 7), 4)
    c = certify_point(f, 4, Symmetric(4))
    assert c.verdict is Verdict.SMOOTH
    assert c.steps[2].result["dim"] == 104


def test_f2_young_smooth():
    c = certify_point(normal_form("f2", 3), 4, Young(1, 1, 1))
    assert c.verdict is Verdict.SMOOTH
    assert [s.op for s in c.steps] == ["border_rank_bounds", "expected_codimension", "conormal_young", "verdict"]


def test_pure_power_singular_by_locus():
    c = certify_point(power_form((1, 0, 0, 0), 5), 2)
    assert c.verdict is Verdict.SINGULAR
    assert c.steps[1].result["member"] is True
    assert all(s.op != "conormal_young" for s in c.steps)


def test_defective_case_inconsistent():
    f = sum_of_powers([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, -2, 3)], 4)
    c = certify_point(f, 5)
    assert c.verdict is Verdict.INCONSISTENT
    assert c.steps[1].result["codim"] == 0


def test_failed_strategy_falls_back():
    # five powers in four variables: the (3,1) catalecticant has rank 4, not 5
    f = sum_of_powers([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1)], 4)
    c = certify_point(f, 5, Symmetric(1))
    assert c.steps[2].op == "conormal_precondition"
    assert c.steps[2].result["failed"].startswith("catalecticant")
    assert c.verdict is Verdict.SMOOTH


def test_no_strategy_applies():
    c = certify_point(normal_form("f2", 4), 2)
    assert c.verdict is Verdict.INCONCLUSIVE


@settings(max_examples=20)
@given(st.integers(3, 7), st.integers(1, 4), st.integers(0, 10**6))
def test_random_genuine_points_smooth(d, k, seed):
    rng = random.Random(seed)
    ls = [tuple(rng.randint(-3, 3) for _ in range(4)) for _ in range(k)]
    f = sum_of_powers([l for l in ls if any(l)] or [(1, 0, 0, 0)], d)
    # full-secant locus only: the forms use exactly k variables
    assume(essential_variables(f) == k)
    assert certify_point(f, k, AUTO).verdict is Verdict.SMOOTH


def test_never_smooth_and_singular_together():
    for name in ("f2", "f3"):
        c = certify_point(normal_form(name, 4), 4)
        w = singularity_witness(normal_form(name, 4), 4, [(1, 0, 0, 0)])
        assert not (c.verdict is Verdict.SMOOTH and w.verdict is Verdict.SINGULAR)


def test_replay_and_json_stability():
    f = normal_form("f4", 4)
    c = certify_point(f, 4, "young:2,1,1")
    assert replay(f, c)
    again = certify_point(f, 4, "young:2,1,1")
    assert c.to_json() == again.to_json()
    data = json.loads(c.to_json())
    assert data["verdict"] == "Smooth"
    assert data["parameters"]["form"] == form_digest(f)
    assert all(len(s["inputs_digest"]) == 16 for s in data["evidence"])


def test_suite():
    for d, expected in [(3, 4), (4, 19)]:
        rep = verify_fourth_secant_suite(d)
        assert rep.passed
        assert [r.conormal_dim for r in rep.rows[1:]] == [expected] * 4 == [comb(d + 3, 3) - 16] * 4
    with pytest.raises(DomainError):
        verify_fourth_secant_suite(7)


def test_witness_special_form():
    f = ordinary_to_divided(4, 4, {(2, 2, 0, 0): 1, (0, 0, 4, 0): 1})
    w = singularity_witness(f, 4, [CurveFamily.parse("1,t,0,0"), (0, 0, 1, 0)])
    assert w.verdict is Verdict.SINGULAR
    rep = w.steps[-1].result
    assert rep["components_affine"] == [13, 4] and rep["total_projective"] == 16
    assert w.assumptions


def test_witness_generic_inconclusive():
    pts = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 1, 1, 1)]
    w = singularity_witness(sum_of_powers(pts, 4), 4, pts)
    assert w.verdict is Verdict.INCONCLUSIVE
    with pytest.raises(DomainError):
        singularity_witness(sum_of_powers(pts, 4), 4, [])


def test_lower_secant_membership():
    assert lower_secant_membership(power_form((1, 2, 3), 4), 2)[0] is True
    binary = embed(sum_of_powers([(1, 0), (0, 1)], 6), 3)
    assert lower_secant_membership(binary, 3)[0] is True
    assert lower_secant_membership(binary, 2)[0] is False
    assert lower_secant_membership(GradedForm.zero(3, 3), 2)[0] is True


def test_strategy_parsing():
    assert Strategy.parse("sym:3") == Symmetric(3)
    assert Strategy.parse("young:1,1,1") == Young(1, 1, 1)
    assert str(Strategy.parse("auto")) == "auto"
    for bad in ("sym", "young:1,1", "foo:1", "sym:x"):
        with pytest.raises(DomainError):
            Strategy.parse(bad)


def test_special_form_in_three_variables_is_smooth():
    # x0^2 x1^2 + x2^4 on sigma_4 of plane quartics: the (2,2) conormal bound
    # already reaches the codimension 3, so no tangent excess exists there
    f = ordinary_to_divided(3, 4, {(2, 2, 0): 1, (0, 0, 4): 1})
    c = certify_point(f, 4)
    assert c.verdict is Verdict.SMOOTH
    assert c.steps[-1].result["bound"] == 3
