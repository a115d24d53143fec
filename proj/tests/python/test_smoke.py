"""End-to-end smoke checks of the native extension through the package."""

import json
from fractions import Fraction

import recipstab as rs


def frac(s):
    return Fraction(s)


def test_version_present():
    assert rs.__version__


def test_norm_and_valuations():
    q3 = rs.ValuationSpec.padic(3)
    assert rs.norm("9/1", q3) == "1/9"
    assert rs.norm("1/3", q3) == "3/1"
    assert rs.norm("0/1", q3) == "0/1"
    real = rs.ValuationSpec.archimedean()
    assert rs.norm("-7/2", real) == "7/2"
    assert rs.ValuationSpec.from_name("p3").name() == q3.name()


def test_exact_solutions_annihilate_delta():
    for kind, policy in [
        (rs.EquationKind.nonic, rs.CoefficientPolicy.corrected),
        (rs.EquationKind.decic, rs.CoefficientPolicy.corrected),
    ]:
        m = rs.RootMapping.exact(kind)
        assert rs.delta(kind, policy, m, "5/3", "7/4") == "0/1"


def test_printed_policy_reference_residual():
    m = rs.RootMapping.exact(rs.EquationKind.nonic)
    residual = rs.delta(
        rs.EquationKind.nonic, rs.CoefficientPolicy.printed, m, "1/1", "1/1"
    )
    assert residual == "32/19683"


def test_collapse_matches_diagonal_delta():
    pert = rs.FinitePerturbation({"2/1": "1/2"})
    m = pert.mapping(rs.EquationKind.nonic)
    assert m.base_at("2/1") == "4/3"
    lhs = rs.collapse_diagonal(rs.EquationKind.nonic, m, "2/1")
    rhs = rs.delta(
        rs.EquationKind.nonic, rs.CoefficientPolicy.corrected, m, "2/1", "2/1"
    )
    assert lhs == rhs


def test_vanishing_condition_truth_table():
    q3 = rs.ValuationSpec.padic(3)
    kind = rs.EquationKind.nonic
    for q, plus, minus in [(-12, True, False), (-8, False, True), (-9, False, False)]:
        c = rs.ControlFunction.sum_powers("1/1", f"{q}/1")
        rec_plus = json.loads(rs.check_vanishing(c, q3, rs.Direction.contract, kind))
        rec_minus = json.loads(rs.check_vanishing(c, q3, rs.Direction.expand, kind))
        assert rec_plus["holds"] is plus
        assert rec_minus["holds"] is minus


def test_direct_method_round_trip():
    q3 = rs.ValuationSpec.padic(3)
    kind = rs.EquationKind.nonic
    pert = rs.FinitePerturbation({"3/1": "1/3", "9/1": "-1/4"})
    m = pert.mapping(kind)
    env = rs.measured_constant_envelope(pert, kind, "1/1", rs.Direction.expand, q3)
    est = rs.approximant(m, "1/1", rs.Direction.expand, 8, kind, env, q3)
    bound = rs.stability_bound("1/1", env, q3, rs.Direction.expand, kind)
    distance = rs.norm(str(frac(m.eval("1/1")) - frac(est["value"])), q3)
    allowance = max(frac(bound), frac(est["tail_bound"]["value"]))
    assert frac(distance) <= allowance
    assert rs.uniqueness_check(m, "1/1", rs.Direction.expand, 4, 8, kind, env, q3)


def test_audit_suite_shape():
    q3 = rs.ValuationSpec.padic(3)
    entries = json.loads(rs.audit_standard_suite(q3, "1/1"))
    assert len(entries) == 14
    by_id = {e["case"]: e for e in entries}
    assert by_id["decic_mixed_low"]["match"] == "equal"
    assert by_id["nonic_constant"]["match"] == "stated_larger"


def test_counterexample_series_and_witness():
    params = rs.GajdaParams.make(rs.EquationKind.nonic, "1/1")
    assert rs.series_bound(params) == "19683/19682"
    assert rs.rhs_constant(params) == "29525/9841"
    at_one = rs.series_eval(params, "1/1")
    assert at_one["value"] == "19683/19682"
    w = rs.nonstability_witness(params, "1/1")
    assert w["m"] == 4 and w["x"] == "54/1"
    assert frac(w["g_of_x"]) > frac(w["threshold"])


def test_certified_enclosures():
    lo, hi = rs.nth_root_enclosure("19683/512", 9, 128)
    assert frac(lo) <= frac("3/2") <= frac(hi)
    assert frac(hi) - frac(lo) <= Fraction(1, 2**64)
    params = rs.GajdaParams.make(rs.EquationKind.nonic, "1/1")
    ci = rs.delta_series(params, "3/1", "5/1", 128)
    assert ci["conclusive"]
    assert frac(ci["upper"]) <= frac(rs.rhs_constant(params))
