#pragma once

#include "recipstab/control.hpp"
#include "recipstab/funceq.hpp"
#include "recipstab/rational.hpp"
#include "recipstab/valuation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace recipstab {

/// Iteration direction p: Contract (+1) samples the mapping at x/3^(k+1),
/// Expand (-1) at x*3^k.
enum class Direction : int { Contract = +1, Expand = -1 };

inline int direction_value(Direction d) { return static_cast<int>(d); }
Direction direction_from_value(int p);
std::string to_string(Direction d);

/// Outcome of testing the vanishing condition: the scaled control terms
/// T_k = |1/S|^(pk + (p-1)/2) * zeta(x_k, x_k) along the orbit
/// x_k = x / 3^(pk + (p+1)/2) form a geometric sequence with ratio
/// rho = |3|^(-p (e + degree)); they vanish iff rho < 1.
struct ConditionReport {
    EquationKind kind;
    ValuationSpec valuation;
    Direction direction;
    bool holds;
    Rational ratio_base;            // |3| in the field
    Rational ratio_exponent;        // -p * (e + control degree)
    std::optional<Rational> ratio;  // rho materialized when rational
    bool two_norm_below_one;        // |2| < 1 here (forces |3| = 1)
    std::string diagnosis;
};

class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(ConditionReport report);
    const ConditionReport& report() const { return report_; }

private:
    ConditionReport report_;
};

ConditionReport check_vanishing(const ControlFunction& c, const ValuationSpec& v,
                                Direction p, EquationKind kind);

/// The direction (at most one) whose vanishing condition holds.
std::optional<Direction> choose_direction(const ControlFunction& c,
                                          const ValuationSpec& v, EquationKind kind);

/// Window length over which suprema/tails are scanned explicitly; beyond it
/// the exact geometric ratio (< 1 whenever the scan is reached) guarantees
/// strictly smaller terms, so the window max is the true supremum.
inline constexpr int kDefaultHorizon = 16;

struct ApproximantEstimate {
    Rational x;
    Direction direction;
    int iterations;       // K
    Rational value;       // S^(-pK) * m(x / 3^(pK))
    NormValue tail_bound; // max over l >= K of the scaled control terms T_l
    bool converged;
};

/// The K-th direct-method iterate with a certified ultrametric tail bound:
/// |value - limit| <= tail_bound whenever |delta(m, u, u)| <= zeta(u, u)
/// along the orbit. Requires a p-adic valuation and a holding vanishing
/// condition (HypothesisError otherwise).
ApproximantEstimate approximant(const RootMapping& m, const Rational& x, Direction p,
                                int K, EquationKind kind, const ControlFunction& c,
                                const ValuationSpec& v, int horizon = kDefaultHorizon);

/// sup over l >= 0 of T_l — the certified distance bound between the given
/// mapping and the limit solution. Exact; refuses (HypothesisError) when the
/// vanishing condition fails.
NormValue stability_bound(const Rational& x, const ControlFunction& c,
                          const ValuationSpec& v, Direction p, EquationKind kind,
                          int horizon = kDefaultHorizon);

/// Whether the K2-th and K1-th iterates agree to within the certified tail
/// at K1 — the finite-truncation shadow of limit uniqueness. K2 > K1.
bool uniqueness_check(const RootMapping& m, const Rational& x, Direction p, int K1,
                      int K2, EquationKind kind, const ControlFunction& c,
                      const ValuationSpec& v, int horizon = kDefaultHorizon);

/// Constant control measured from the mapping itself: epsilon is the exact
/// max of |delta(m, u, u)| over the entire orbit of x (finite active set:
/// the diagonal residual vanishes wherever the perturbation is silent),
/// floored at 1/S to stay positive. The returned control provably dominates
/// every increment the direct method takes from x in direction p.
ControlFunction measured_constant_envelope(const FinitePerturbation& pert,
                                           EquationKind kind, const Rational& x,
                                           Direction p, const ValuationSpec& v);

/// One audited closed-form bound: the stated formula evaluated literally
/// with field norms, against the supremum the direct method actually
/// yields (under both scalar conventions for the diagonal multiplicity).
struct BoundAuditEntry {
    std::string case_id;
    EquationKind kind;
    ControlFunction control;
    std::string branch;  // "all" | "high" (degree > -e) | "low" (degree < -e)
    Rational x;
    std::string stated_formula;
    Rational stated_value;
    bool hypothesis_holds;
    std::optional<Direction> direction;
    std::optional<Rational> computed_supremum;           // real-scalar multiplicity
    std::optional<Rational> computed_supremum_normcoeff; // field-norm multiplicity
    std::optional<Rational> other_branch_stated;
    // "equal" | "stated_larger" | "stated_smaller" | "hypothesis_vacuous"
    std::string match;
    bool swap_match;  // computed_supremum_normcoeff == other branch's stated value
    std::string note;
};

/// The fixed audit suite: constant, sum, product and mixed controls for both
/// equations, each power family on both exponent branches, evaluated at x.
std::vector<BoundAuditEntry> audit_standard_suite(const ValuationSpec& v,
                                                  const Rational& x);

}  // namespace recipstab
