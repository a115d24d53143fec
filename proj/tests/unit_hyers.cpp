#include <doctest.h>

#include "recipstab/hyers.hpp"
#include "recipstab/sampling.hpp"

#include <map>

using namespace recipstab;

namespace {

const ValuationSpec kQ3 = ValuationSpec::padic(3);

ControlFunction sum_q(const Rational& q) {
    return ControlFunction::sum_powers(Rational(1), q);
}

}  // namespace

TEST_CASE("vanishing-condition truth table in Q3 (nonic, sum family)") {
    const std::map<int, std::pair<bool, bool>> table = {
        // q -> {holds at +1, holds at -1}
        {-12, {true, false}}, {-10, {true, false}}, {-9, {false, false}},
        {-8, {false, true}},  {0, {false, true}},   {2, {false, true}},
    };
    for (const auto& [q, expected] : table) {
        const auto plus = check_vanishing(sum_q(q), kQ3, Direction::Contract,
                                          EquationKind::Nonic);
        const auto minus = check_vanishing(sum_q(q), kQ3, Direction::Expand,
                                           EquationKind::Nonic);
        CHECK(plus.holds == expected.first);
        CHECK(minus.holds == expected.second);
        // At most one direction can hold: the two ratios are reciprocal.
        CHECK_FALSE((plus.holds && minus.holds));
    }
}

TEST_CASE("the condition fails identically over Q2 and Q5 where |3| = 1") {
    for (std::uint64_t p : {2ull, 5ull}) {
        const auto v = ValuationSpec::padic(p);
        for (int q : {-12, -10, -9, -8, 0, 2}) {
            for (Direction dir : {Direction::Contract, Direction::Expand}) {
                const auto rep = check_vanishing(sum_q(q), v, dir, EquationKind::Nonic);
                CHECK_FALSE(rep.holds);
                CHECK(rep.ratio_base == 1);
            }
        }
        CHECK(check_vanishing(sum_q(0), v, Direction::Contract, EquationKind::Nonic)
                  .two_norm_below_one == (p == 2));
    }
}

TEST_CASE("ratio frozen values") {
    const auto a = check_vanishing(sum_q(-12), kQ3, Direction::Contract,
                                   EquationKind::Nonic);
    REQUIRE(a.ratio.has_value());
    CHECK(*a.ratio == Rational(1, 27));
    const auto b = check_vanishing(sum_q(2), kQ3, Direction::Expand,
                                   EquationKind::Nonic);
    REQUIRE(b.ratio.has_value());
    CHECK(*b.ratio == pow_int(Rational(3), -11));
    // Rational exponent: ratio has no rational value but the verdict is exact.
    const auto c = check_vanishing(
        ControlFunction::sum_powers(Rational(1), Rational(-19, 2)), kQ3,
        Direction::Contract, EquationKind::Nonic);
    CHECK(c.holds);
    CHECK_FALSE(c.ratio.has_value());
    CHECK(c.ratio_exponent == Rational(1, 2));
}

TEST_CASE("choose_direction returns the unique holding direction or nothing") {
    CHECK(choose_direction(sum_q(-12), kQ3, EquationKind::Nonic) == Direction::Contract);
    CHECK(choose_direction(sum_q(2), kQ3, EquationKind::Nonic) == Direction::Expand);
    CHECK_FALSE(choose_direction(sum_q(-9), kQ3, EquationKind::Nonic).has_value());
    CHECK_FALSE(choose_direction(sum_q(0), ValuationSpec::padic(2), EquationKind::Nonic)
                    .has_value());
    // Decic diagonal degree boundary sits at -10.
    CHECK(choose_direction(sum_q(-11), kQ3, EquationKind::Decic) == Direction::Contract);
    CHECK_FALSE(choose_direction(sum_q(-10), kQ3, EquationKind::Decic).has_value());
}

TEST_CASE("stability bound frozen suprema at the first scaled term") {
    // Expanding direction, constant control: sup = eps * |1/S| = eps * 3^-9.
    const auto cst = ControlFunction::constant(Rational(1));
    CHECK(stability_bound(Rational(1), cst, kQ3, Direction::Expand,
                          EquationKind::Nonic).value == pow_int(Rational(3), -9));
    // Contracting direction, sum family q=-12 at |x|=1: sup = 2 * 3^-12.
    CHECK(stability_bound(Rational(1), sum_q(-12), kQ3, Direction::Contract,
                          EquationKind::Nonic).value ==
          2 * pow_int(Rational(3), -12));
    CHECK_THROWS_AS(stability_bound(Rational(1), sum_q(-9), kQ3, Direction::Contract,
                                    EquationKind::Nonic),
                    HypothesisError);
}

TEST_CASE("approximant of the exact solution is the exact solution") {
    const RootMapping m = RootMapping::exact(EquationKind::Nonic);
    const auto c = ControlFunction::constant(Rational(1, 19683));
    Sampler s(31);
    for (int i = 0; i < 10; ++i) {
        const Rational x = s.nonzero_rational(30, 20);
        const auto est = approximant(m, x, Direction::Expand, 6, EquationKind::Nonic,
                                     c, kQ3);
        CHECK(est.value == m.eval(x));
        CHECK(est.converged);
        CHECK(est.tail_bound.value > 0);
    }
}

TEST_CASE("iterate increments match the collapse residuals exactly") {
    // |value_{k+1} - value_k| = |1/S|^(pk+(p-1)/2) * |collapse(x_k*)|: the
    // engine's certified tail rests on this identity, checked here directly
    // against independently computed iterates.
    FinitePerturbation pert;
    pert.deviation[Rational(6)] = Rational(1, 4);
    pert.deviation[Rational(54)] = Rational(-2, 7);
    const EquationKind kind = EquationKind::Nonic;
    const RootMapping m = pert.mapping(kind);
    const auto& traits = EquationTraits::of(kind);
    const Rational x(2);
    const auto c = ControlFunction::constant(Rational(1));

    for (int k = 1; k <= 6; ++k) {
        const auto a1 = approximant(m, x, Direction::Expand, k, kind, c, kQ3);
        const auto a2 = approximant(m, x, Direction::Expand, k + 1, kind, c, kQ3);
        // p = -1: value_k = S^k m(3^k x), so value_{k+1} - value_k
        // = S^(k+1) (m(3u) - m(u)/S) at u = 3^k x.
        const Rational orbit = x * pow_int(Rational(3), k);
        const Rational weight = pow_int(Rational(19683), k + 1);
        const Rational increment = norm(a2.value - a1.value, kQ3).value;
        const Rational expected =
            norm(weight, kQ3).value * norm(collapse_diagonal(traits, m, orbit), kQ3).value;
        CHECK(increment == expected);
    }
}

TEST_CASE("approximant input validation") {
    const RootMapping m = RootMapping::exact(EquationKind::Nonic);
    const auto c = ControlFunction::constant(Rational(1));
    CHECK_THROWS_AS(approximant(m, Rational(0), Direction::Expand, 4,
                                EquationKind::Nonic, c, kQ3),
                    std::domain_error);
    CHECK_THROWS_AS(approximant(m, Rational(1), Direction::Expand, 0,
                                EquationKind::Nonic, c, kQ3),
                    std::invalid_argument);
    CHECK_THROWS_AS(approximant(m, Rational(1), Direction::Contract, 4,
                                EquationKind::Nonic, c, kQ3),
                    HypothesisError);
    CHECK_THROWS_AS(approximant(m, Rational(1), Direction::Expand, 4,
                                EquationKind::Nonic, c, ValuationSpec::archimedean()),
                    std::domain_error);
}

TEST_CASE("measured envelopes dominate every orbit increment") {
    Sampler s(73);
    const EquationKind kind = EquationKind::Nonic;
    const auto& traits = EquationTraits::of(kind);
    for (int trial = 0; trial < 12; ++trial) {
        const Rational x = s.nonzero_rational(25, 15);
        FinitePerturbation pert;
        // Half the deviations on the expanding orbit of x, half elsewhere.
        pert.deviation[Rational(x * pow_int(Rational(3), s.int_in(0, 4)))] =
            Rational(s.int_in(-90, 90), s.int_in(100, 400));
        pert.deviation[s.nonzero_rational(25, 15)] =
            Rational(s.int_in(-90, 90), s.int_in(100, 400));
        const RootMapping m = pert.mapping(kind);

        const auto env = measured_constant_envelope(pert, kind, x, Direction::Expand, kQ3);
        CHECK(env.family == ControlFamily::Constant);
        CHECK(env.epsilon > 0);
        for (int l = 0; l < 12; ++l) {
            const Rational orbit = x * pow_int(Rational(3), l);
            CHECK(norm(collapse_diagonal(traits, m, orbit), kQ3).value <= env.epsilon);
        }
    }
}

TEST_CASE("measured envelope floor applies to silent orbits") {
    FinitePerturbation pert;
    pert.deviation[Rational(7)] = Rational(1, 5);
    const auto env = measured_constant_envelope(pert, EquationKind::Nonic, Rational(5),
                                                Direction::Expand, kQ3);
    CHECK(env.epsilon == Rational(1, 19683));
}

TEST_CASE("uniqueness: deeper truncations stay within the earlier tail") {
    Sampler s(41);
    const EquationKind kind = EquationKind::Nonic;
    for (int trial = 0; trial < 8; ++trial) {
        const Rational x = s.nonzero_rational(20, 12);
        FinitePerturbation pert;
        pert.deviation[Rational(x * pow_int(Rational(3), s.int_in(0, 3)))] =
            Rational(s.int_in(-90, 90), s.int_in(100, 400));
        const RootMapping m = pert.mapping(kind);
        const auto env = measured_constant_envelope(pert, kind, x, Direction::Expand, kQ3);
        CHECK(uniqueness_check(m, x, Direction::Expand, 4, 8, kind, env, kQ3));
    }
}

TEST_CASE("audit suite shape and frozen Q3 values at x = 1") {
    const auto entries = audit_standard_suite(kQ3, Rational(1));
    REQUIRE(entries.size() == 14);
    std::map<std::string, const BoundAuditEntry*> by_id;
    for (const auto& e : entries) by_id[e.case_id] = &e;

    const auto* cst = by_id.at("nonic_constant");
    REQUIRE(cst != nullptr);
    CHECK(cst->hypothesis_holds);
    CHECK(cst->direction == Direction::Expand);
    CHECK(cst->computed_supremum == pow_int(Rational(3), -9));
    CHECK(cst->match == "stated_larger");  // valid but not tight
    CHECK_FALSE(cst->swap_match);

    const auto* sum_high = by_id.at("nonic_sum_powers_high");
    CHECK(sum_high->stated_value == 9);  // |2| eps / |3|^q * |x|^q at q=2
    CHECK(sum_high->match == "stated_larger");
    CHECK(sum_high->swap_match);

    const auto* sum_low = by_id.at("nonic_sum_powers_low");
    CHECK(sum_low->stated_value == pow_int(Rational(3), -9));
    CHECK(sum_low->computed_supremum_normcoeff == pow_int(Rational(3), -12));
    CHECK(sum_low->swap_match);

    // Every power-family case records the cross-branch agreement.
    for (const auto& e : entries)
        if (e.control.family != ControlFamily::Constant) CHECK(e.swap_match);

    // The one exact coincidence: decic mixed low, 3 * 3^-12 = 3^-11.
    CHECK(by_id.at("decic_mixed_low")->match == "equal");
    CHECK(by_id.at("nonic_mixed_low")->match == "stated_larger");
}

TEST_CASE("audit suite is deterministic") {
    const auto a = audit_standard_suite(kQ3, Rational(1));
    const auto b = audit_standard_suite(kQ3, Rational(1));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].case_id == b[i].case_id);
        CHECK(a[i].stated_value == b[i].stated_value);
        CHECK(a[i].computed_supremum == b[i].computed_supremum);
        CHECK(a[i].match == b[i].match);
        CHECK(a[i].swap_match == b[i].swap_match);
    }
}

TEST_CASE("direction helpers") {
    CHECK(direction_value(Direction::Contract) == 1);
    CHECK(direction_value(Direction::Expand) == -1);
    CHECK(direction_from_value(1) == Direction::Contract);
    CHECK(direction_from_value(-1) == Direction::Expand);
    CHECK_THROWS_AS(direction_from_value(0), std::invalid_argument);
    CHECK(to_string(Direction::Contract) == "+1");
    CHECK(to_string(Direction::Expand) == "-1");
}
