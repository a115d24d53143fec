#include "recipstab/cli.hpp"

#include "recipstab/control.hpp"
#include "recipstab/counterexample.hpp"
#include "recipstab/funceq.hpp"
#include "recipstab/hyers.hpp"
#include "recipstab/interval.hpp"
#include "recipstab/rational.hpp"
#include "recipstab/report.hpp"
#include "recipstab/sampling.hpp"
#include "recipstab/valuation.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace recipstab {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

struct OutputOptions {
    std::string out_path;
    std::string tsv_path;
    bool timing = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--out", out.out_path,
                    "write the JSON report here (default: $RECIPSTAB_OUT_DIR/"
                    "<subcommand>.json if set, else stdout)");
    cmd->add_option("--tsv", out.tsv_path, "also write a tab-separated record table");
    cmd->add_flag("--timing", out.timing,
                  "include wall-clock timing in the report (off by default so "
                  "identical runs stay byte-identical)");
}

int finish(Report report, const OutputOptions& out, const std::string& subcommand,
           int exit_code, std::chrono::steady_clock::time_point started) {
    if (out.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        report.doc["timing"] = {
            {"wall_ms",
             std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};
    }
    report.doc["exit_code"] = exit_code;

    const std::string path = resolve_out_path(out.out_path, subcommand);
    const std::string bytes = report.to_json_bytes();
    if (path.empty())
        std::cout << bytes;
    else
        write_text_file(path, bytes);
    if (!out.tsv_path.empty()) write_text_file(out.tsv_path, report.to_tsv_bytes());
    return exit_code;
}

// ----- shared flag plumbing -------------------------------------------------

struct ControlOptions {
    std::string family = "sum_powers";
    std::string epsilon = "1";
    std::string q = "0";
    std::string r = "0";
    std::string s = "0";
};

void add_control_options(CLI::App* cmd, ControlOptions& c,
                         const std::string& default_family) {
    c.family = default_family;
    cmd->add_option("--family", c.family,
                    "control family: constant | sum_powers | product_powers | "
                    "mixed_product_sum" +
                        std::string(default_family == "measured"
                                        ? " | measured (exact per-orbit envelope)"
                                        : ""))
        ->capture_default_str();
    cmd->add_option("--epsilon", c.epsilon, "control scale epsilon (exact rational)")
        ->capture_default_str();
    cmd->add_option("--q", c.q, "sum/mixed family exponent (exact rational)")
        ->capture_default_str();
    cmd->add_option("--r", c.r, "product family exponent on |x|")
        ->capture_default_str();
    cmd->add_option("--s", c.s, "product family exponent on |y|")
        ->capture_default_str();
}

ControlFunction build_control(const ControlOptions& c) {
    const ControlFamily family = control_family_from_string(c.family);
    const Rational eps = parse_rational(c.epsilon);
    switch (family) {
        case ControlFamily::Constant: return ControlFunction::constant(eps);
        case ControlFamily::SumPowers:
            return ControlFunction::sum_powers(eps, parse_rational(c.q));
        case ControlFamily::ProductPowers:
            return ControlFunction::product_powers(eps, parse_rational(c.r),
                                                   parse_rational(c.s));
        case ControlFamily::MixedProductSum:
            return ControlFunction::mixed_product_sum(eps, parse_rational(c.q));
    }
    throw std::invalid_argument("unknown control family");
}

Json control_config_json(const ControlOptions& c) {
    if (c.family == "measured") return Json{{"family", "measured"}};
    return control_json(build_control(c));
}

// ----- subcommand configs ----------------------------------------------------

struct IdentityConfig {
    std::string equation = "nonic";
    std::string policy = "corrected";
    int samples = 500;
    std::uint64_t seed = 7;
    long long mag = 60;
    long long den = 40;
    OutputOptions out;
};

struct HypothesisConfig {
    std::string equation = "nonic";
    std::string field = "p3";
    std::string direction = "auto";
    ControlOptions control;
    OutputOptions out;
};

struct StabilizeConfig {
    std::string equation = "nonic";
    std::string field = "p3";
    std::uint64_t seed = 11;
    int perturbations = 3;
    int points = 5;
    int iterations = 8;
    int uniqueness_from = 4;
    int horizon = kDefaultHorizon;
    long long mag = 40;
    long long den = 20;
    int support_scale_max = 4;
    ControlOptions control;
    OutputOptions out;
};

struct AuditConfig {
    std::string field = "p3";
    std::string x = "1";
    OutputOptions out;
};

struct CounterexampleConfig {
    std::string equation = "nonic";
    std::string level = "1";
    std::string grid_min = "1/4";
    std::string grid_max = "81";
    int grid_steps = 20;
    unsigned precision = 128;
    std::string policy = "corrected";
    OutputOptions out;
};

struct WitnessConfig {
    std::string equation = "nonic";
    std::string level = "1";
    std::string alpha = "1";
    OutputOptions out;
};

struct ReportConfig {
    std::vector<std::string> inputs;
    OutputOptions out;
};

// ----- subcommand runners ----------------------------------------------------

int run_identity(const IdentityConfig& cfg) {
    const auto started = std::chrono::steady_clock::now();
    const EquationKind kind = equation_from_string(cfg.equation);
    const CoefficientPolicy policy = policy_from_string(cfg.policy);
    const EquationTraits& traits = EquationTraits::of(kind);
    const RootMapping m = RootMapping::exact(kind);
    Sampler sampler(cfg.seed);

    Json records = Json::array();
    int nonzero = 0;

    auto add_record = [&](const Rational& x, const Rational& y, bool reference) {
        const Rational resid = delta(traits, policy, m, x, y);
        if (resid != 0) ++nonzero;
        Json rec;
        rec["x"] = rational_json(x);
        rec["y"] = rational_json(y);
        rec["residual"] = rational_json(resid);
        rec["ok"] = resid == 0;
        if (reference) rec["reference"] = true;
        records.push_back(std::move(rec));
    };

    // The reference pair (1,1) is the first of the requested samples; the
    // remainder are drawn from the seeded stream.
    if (cfg.samples >= 1) add_record(Rational(1), Rational(1), true);
    for (int i = 1; i < cfg.samples; ++i) {
        auto [x, y] = sampler.admissible_pair(traits, m, cfg.mag, cfg.den);
        add_record(x, y, false);
    }

    Json config{{"equation", cfg.equation}, {"policy", cfg.policy},
                {"samples", cfg.samples},   {"seed", cfg.seed},
                {"mag", cfg.mag},           {"den", cfg.den}};
    Json summary{{"checked", static_cast<int>(records.size())},
                 {"nonzero_residuals", nonzero}};
    const int code = nonzero == 0 ? kExitPass : kExitFailed;
    return finish(Report::make("identity", config, records, summary), cfg.out,
                  "identity", code, started);
}

int run_hypothesis(const HypothesisConfig& cfg) {
    const auto started = std::chrono::steady_clock::now();
    const EquationKind kind = equation_from_string(cfg.equation);
    const ValuationSpec v = ValuationSpec::from_name(cfg.field);
    if (cfg.control.family == "measured")
        throw CLI::ValidationError(
            "--family measured is only meaningful for `stabilize`");
    const ControlFunction control = build_control(cfg.control);

    std::vector<Direction> directions;
    if (cfg.direction == "auto")
        directions = {Direction::Contract, Direction::Expand};
    else
        directions = {direction_from_value(std::stoi(cfg.direction))};

    Json records = Json::array();
    bool any_holds = false;
    for (Direction p : directions) {
        ConditionReport report = check_vanishing(control, v, p, kind);
        any_holds = any_holds || report.holds;
        records.push_back(condition_json(report));
    }

    Json config{{"equation", cfg.equation},
                {"field", cfg.field},
                {"direction", cfg.direction},
                {"control", control_config_json(cfg.control)}};
    Json summary{{"checked", static_cast<int>(records.size())},
                 {"holds", any_holds}};
    return finish(Report::make("hypothesis", config, records, summary), cfg.out,
                  "hypothesis", any_holds ? kExitPass : kExitFailed, started);
}

int run_stabilize(const StabilizeConfig& cfg) {
    const auto started = std::chrono::steady_clock::now();
    const EquationKind kind = equation_from_string(cfg.equation);
    const ValuationSpec v = ValuationSpec::from_name(cfg.field);
    if (!v.is_padic())
        throw CLI::ValidationError(
            "stabilize needs a p-adic field (the convergence argument is "
            "ultrametric); pass --field p<prime>");
    if (cfg.uniqueness_from >= cfg.iterations)
        throw CLI::ValidationError("--uniqueness-from must be below --iterations");

    const bool measured = cfg.control.family == "measured";
    const ControlFunction proto =
        measured ? ControlFunction::constant(Rational(1)) : build_control(cfg.control);

    Json config{{"equation", cfg.equation},
                {"field", cfg.field},
                {"seed", cfg.seed},
                {"perturbations", cfg.perturbations},
                {"points", cfg.points},
                {"iterations", cfg.iterations},
                {"uniqueness_from", cfg.uniqueness_from},
                {"horizon", cfg.horizon},
                {"mag", cfg.mag},
                {"den", cfg.den},
                {"support_scale_max", cfg.support_scale_max},
                {"control", control_config_json(cfg.control)}};

    const auto dir = choose_direction(proto, v, kind);
    if (!dir) {
        Json records = Json::array();
        for (Direction p : {Direction::Contract, Direction::Expand})
            records.push_back(condition_json(check_vanishing(proto, v, p, kind)));
        Json summary{{"checked", 0}, {"failed", 0}, {"refused", 1}};
        return finish(Report::make("stabilize", config, records, summary), cfg.out,
                      "stabilize", kExitInconclusive, started);
    }

    Sampler sampler(cfg.seed);
    Json records = Json::array();
    int failed = 0;

    for (int i = 0; i < cfg.perturbations; ++i) {
        std::vector<Rational> xs;
        for (int j = 0; j < cfg.points; ++j)
            xs.push_back(sampler.nonzero_rational(cfg.mag, cfg.den));

        // Deviations are planted on the iteration orbits of the sampled
        // points so the measured envelopes exercise nontrivial residuals.
        FinitePerturbation pert;
        const long long support = sampler.int_in(1, 3);
        for (long long c = 0; c < support; ++c) {
            const Rational& anchor =
                xs[static_cast<std::size_t>(sampler.int_in(0, cfg.points - 1))];
            const long long scale =
                sampler.int_in(0, cfg.support_scale_max);
            const long long exponent = *dir == Direction::Expand
                                           ? scale
                                           : -(scale + 1);
            Rational point = anchor * pow_int(Rational(3), exponent);
            pert.deviation[std::move(point)] =
                Rational(sampler.int_in(-98, 98), sampler.int_in(100, 999));
        }
        const RootMapping m = pert.mapping(kind);

        for (const Rational& x : xs) {
            const ControlFunction control =
                measured ? measured_constant_envelope(pert, kind, x, *dir, v) : proto;
            const ApproximantEstimate approx =
                approximant(m, x, *dir, cfg.iterations, kind, control, v, cfg.horizon);
            const NormValue sbound =
                stability_bound(x, control, v, *dir, kind, cfg.horizon);
            const NormValue dist = norm(m.eval(x) - approx.value, v);
            const Rational allowance =
                sbound.value > approx.tail_bound.value ? sbound.value
                                                       : approx.tail_bound.value;
            const bool sound = dist.value <= allowance;
            const bool unique =
                uniqueness_check(m, x, *dir, cfg.uniqueness_from, cfg.iterations, kind,
                                 control, v, cfg.horizon);
            if (!sound || !unique) ++failed;

            Json rec;
            rec["perturbation"] = i;
            rec["x"] = rational_json(x);
            rec["direction"] = to_string(*dir);
            rec["envelope"] = control_json(control);
            rec["value"] = rational_json(approx.value);
            rec["distance"] = norm_json(dist, v);
            rec["stability_bound"] = norm_json(sbound, v);
            rec["tail_bound"] = norm_json(approx.tail_bound, v);
            rec["sound"] = sound;
            rec["unique"] = unique;
            rec["ok"] = sound && unique;
            records.push_back(std::move(rec));
        }
    }

    Json summary{{"checked", static_cast<int>(records.size())},
                 {"failed", failed},
                 {"refused", 0}};
    return finish(Report::make("stabilize", config, records, summary), cfg.out,
                  "stabilize", failed == 0 ? kExitPass : kExitFailed, started);
}

int run_audit(const AuditConfig& cfg) {
    const auto started = std::chrono::steady_clock::now();
    const ValuationSpec v = ValuationSpec::from_name(cfg.field);
    const Rational x = parse_rational(cfg.x);

    Json records = Json::array();
    int equal = 0, larger = 0, smaller = 0, vacuous = 0, swaps = 0;
    for (const BoundAuditEntry& entry : audit_standard_suite(v, x)) {
        if (entry.match == "equal") ++equal;
        else if (entry.match == "stated_larger") ++larger;
        else if (entry.match == "stated_smaller") ++smaller;
        else ++vacuous;
        if (entry.swap_match) ++swaps;
        records.push_back(audit_json(entry));
    }

    Json config{{"field", cfg.field}, {"x", rational_json(x)}};
    Json summary{{"checked", static_cast<int>(records.size())},
                 {"equal", equal},
                 {"stated_larger", larger},
                 {"stated_smaller", smaller},
                 {"hypothesis_vacuous", vacuous},
                 {"swap_matches", swaps}};
    return finish(Report::make("audit", config, records, summary), cfg.out, "audit",
                  kExitPass, started);
}

int run_counterexample(const CounterexampleConfig& cfg) {
    const auto started = std::chrono::steady_clock::now();
    const EquationKind kind = equation_from_string(cfg.equation);
    const GajdaParams params = GajdaParams::make(kind, parse_rational(cfg.level));
    const CoefficientPolicy policy = policy_from_string(cfg.policy);
    const Rational lo = parse_rational(cfg.grid_min);
    const Rational hi = parse_rational(cfg.grid_max);
    if (cfg.grid_steps < 2 || lo >= hi)
        throw CLI::ValidationError("grid needs --grid-min < --grid-max and >= 2 steps");

    std::vector<Rational> axis;
    const Rational step = (hi - lo) / (cfg.grid_steps - 1);
    for (int i = 0; i < cfg.grid_steps; ++i) axis.push_back(lo + step * i);

    const Rational rhs = rhs_constant(params);
    Json records = Json::array();
    int holds = 0, violated = 0, inconclusive = 0;
    for (const Rational& x : axis) {
        for (const Rational& y : axis) {
            Json rec;
            rec["x"] = rational_json(x);
            rec["y"] = rational_json(y);
            rec["rhs"] = rational_json(rhs);
            GridVerdict verdict = GridVerdict::Inconclusive;
            try {
                CertifiedInterval enclosure =
                    delta_series(params, x, y, cfg.precision, policy);
                rec["lower"] = rational_json(enclosure.lower);
                rec["upper"] = rational_json(enclosure.upper);
                rec["conclusive"] = enclosure.conclusive;
                if (!enclosure.reason.empty()) rec["reason"] = enclosure.reason;
                if (enclosure.conclusive) {
                    if (enclosure.upper <= rhs) verdict = GridVerdict::Holds;
                    else if (enclosure.lower > rhs) verdict = GridVerdict::Violated;
                }
            } catch (const std::domain_error& err) {
                rec["conclusive"] = false;
                rec["reason"] = err.what();
            }
            rec["verdict"] = to_string(verdict);
            switch (verdict) {
                case GridVerdict::Holds: ++holds; break;
                case GridVerdict::Violated: ++violated; break;
                case GridVerdict::Inconclusive: ++inconclusive; break;
            }
            records.push_back(std::move(rec));
        }
    }

    Json config{{"equation", cfg.equation},
                {"level", rational_json(params.level)},
                {"grid_min", rational_json(lo)},
                {"grid_max", rational_json(hi)},
                {"grid_steps", cfg.grid_steps},
                {"precision", cfg.precision},
                {"policy", cfg.policy}};
    Json summary{{"checked", static_cast<int>(records.size())},
                 {"holds", holds},
                 {"violated", violated},
                 {"inconclusive", inconclusive}};
    int code = kExitPass;
    if (violated > 0) code = kExitFailed;
    else if (inconclusive > 0) code = kExitInconclusive;
    return finish(Report::make("counterexample", config, records, summary), cfg.out,
                  "counterexample", code, started);
}

int run_witness(const WitnessConfig& cfg) {
    const auto started = std::chrono::steady_clock::now();
    const EquationKind kind = equation_from_string(cfg.equation);
    const GajdaParams params = GajdaParams::make(kind, parse_rational(cfg.level));
    const Witness w = nonstability_witness(params, parse_rational(cfg.alpha));

    Json rec;
    rec["alpha"] = rational_json(w.alpha);
    rec["m"] = w.m;
    rec["x"] = rational_json(w.x);
    rec["g_of_x"] = rational_json(w.g_of_x);
    rec["envelope"] = rational_json(w.envelope);
    rec["threshold"] = rational_json(w.threshold);
    rec["ok"] = true;

    Json config{{"equation", cfg.equation},
                {"level", rational_json(params.level)},
                {"alpha", rational_json(w.alpha)}};
    Json summary{{"checked", 1}, {"failed", 0}};
    return finish(Report::make("witness", config, Json::array({rec}), summary),
                  cfg.out, "witness", kExitPass, started);
}

int run_report(const ReportConfig& cfg) {
    const auto started = std::chrono::steady_clock::now();
    Json inputs = Json::array();
    Json findings = Json::array();
    int failures = 0;

    for (const std::string& path : cfg.inputs) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot read input report: " + path);
        Json doc = Json::parse(in);
        const std::string sub = doc.value("subcommand", "unknown");

        auto add_finding = [&](const std::string& kind, const Json& record,
                               bool failure) {
            findings.push_back(
                Json{{"source", path}, {"subcommand", sub}, {"kind", kind},
                     {"record", record}});
            if (failure) ++failures;
        };

        for (const Json& rec : doc.value("records", Json::array())) {
            if (sub == "identity" && !rec.value("ok", true))
                add_finding("nonzero_residual", rec, true);
            else if (sub == "stabilize" && !rec.value("ok", true))
                add_finding("bound_violation", rec, true);
            else if (sub == "audit" && rec.value("match", "") != "equal")
                add_finding("bound_discrepancy", rec, false);
            else if (sub == "counterexample" &&
                     rec.value("verdict", "") == "violated")
                add_finding("inequality_violation", rec, true);
            else if (sub == "counterexample" &&
                     rec.value("verdict", "") == "inconclusive")
                add_finding("inconclusive_enclosure", rec, false);
        }
        inputs.push_back(Json{{"path", path},
                              {"subcommand", sub},
                              {"summary", doc.value("summary", Json::object())},
                              {"exit_code", doc.value("exit_code", -1)}});
    }

    Json config{{"inputs", cfg.inputs}};
    Json summary{{"inputs", static_cast<int>(inputs.size())},
                 {"findings", static_cast<int>(findings.size())},
                 {"failures", failures}};
    Report report = Report::make("report", config, findings, summary);
    report.doc["inputs"] = inputs;
    return finish(std::move(report), cfg.out, "report", kExitPass, started);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"recipstab: exact-arithmetic verification of reciprocal-nonic and "
                 "reciprocal-decic stability"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "key=value configuration file ([subcommand] sections; explicit "
                   "flags override file values)");

    IdentityConfig identity;
    auto* id = app.add_subcommand(
        "identity", "exact-solution residuals of the difference operator");
    id->add_option("--equation", identity.equation, "nonic | decic")
        ->capture_default_str();
    id->add_option("--policy", identity.policy, "corrected | printed")
        ->capture_default_str();
    id->add_option("--samples", identity.samples, "number of random admissible pairs")
        ->capture_default_str();
    id->add_option("--seed", identity.seed, "sample stream seed")->capture_default_str();
    id->add_option("--mag", identity.mag, "numerator magnitude bound")
        ->capture_default_str();
    id->add_option("--den", identity.den, "denominator bound")->capture_default_str();
    add_output_options(id, identity.out);

    HypothesisConfig hypothesis;
    auto* hy = app.add_subcommand("hypothesis",
                                  "vanishing-condition check for a control function");
    hy->add_option("--equation", hypothesis.equation, "nonic | decic")
        ->capture_default_str();
    hy->add_option("--field", hypothesis.field, "real | p<prime>")
        ->capture_default_str();
    hy->add_option("--direction", hypothesis.direction, "auto | +1 | -1")
        ->capture_default_str();
    add_control_options(hy, hypothesis.control, "sum_powers");
    add_output_options(hy, hypothesis.out);

    StabilizeConfig stabilize;
    auto* st = app.add_subcommand(
        "stabilize",
        "direct-method approximants with certified bounds over perturbed mappings");
    st->add_option("--equation", stabilize.equation, "nonic | decic")
        ->capture_default_str();
    st->add_option("--field", stabilize.field, "p<prime>")->capture_default_str();
    st->add_option("--seed", stabilize.seed, "sample stream seed")
        ->capture_default_str();
    st->add_option("--perturbations", stabilize.perturbations,
                   "number of sampled perturbed mappings")
        ->capture_default_str();
    st->add_option("--points", stabilize.points, "evaluation points per mapping")
        ->capture_default_str();
    st->add_option("--iterations", stabilize.iterations, "iteration depth K")
        ->capture_default_str();
    st->add_option("--uniqueness-from", stabilize.uniqueness_from,
                   "lower truncation K1 for the uniqueness comparison")
        ->capture_default_str();
    st->add_option("--horizon", stabilize.horizon, "tail scan window")
        ->capture_default_str();
    st->add_option("--mag", stabilize.mag, "numerator magnitude bound")
        ->capture_default_str();
    st->add_option("--den", stabilize.den, "denominator bound")->capture_default_str();
    st->add_option("--support-scale-max", stabilize.support_scale_max,
                   "max 3-power used to plant deviations on iteration orbits")
        ->capture_default_str();
    add_control_options(st, stabilize.control, "measured");
    add_output_options(st, stabilize.out);

    AuditConfig audit;
    auto* au = app.add_subcommand(
        "audit", "stated closed-form bounds against computed suprema");
    au->add_option("--field", audit.field, "real | p<prime>")->capture_default_str();
    au->add_option("--x", audit.x, "evaluation point (exact rational)")
        ->capture_default_str();
    add_output_options(au, audit.out);

    CounterexampleConfig counterexample;
    auto* ce = app.add_subcommand(
        "counterexample",
        "certified per-pair verdicts for the series difference-operator bound");
    ce->add_option("--equation", counterexample.equation, "nonic | decic")
        ->capture_default_str();
    ce->add_option("--k,--level", counterexample.level,
                   "series level constant (exact rational)")
        ->capture_default_str();
    ce->add_option("--grid-min", counterexample.grid_min, "grid lower endpoint")
        ->capture_default_str();
    ce->add_option("--grid-max", counterexample.grid_max, "grid upper endpoint")
        ->capture_default_str();
    ce->add_option("--grid-steps", counterexample.grid_steps, "points per axis")
        ->capture_default_str();
    ce->add_option("--precision", counterexample.precision,
                   "root-enclosure working precision in bits")
        ->capture_default_str();
    ce->add_option("--policy", counterexample.policy, "corrected | printed")
        ->capture_default_str();
    add_output_options(ce, counterexample.out);

    WitnessConfig witness;
    auto* wi = app.add_subcommand(
        "witness", "a point defeating a candidate critical-exponent bound");
    wi->add_option("--equation", witness.equation, "nonic | decic")
        ->capture_default_str();
    wi->add_option("--k,--level", witness.level,
                   "series level constant (exact rational)")
        ->capture_default_str();
    wi->add_option("--alpha", witness.alpha, "candidate bound to defeat")
        ->capture_default_str();
    add_output_options(wi, witness.out);

    ReportConfig aggregate;
    auto* re = app.add_subcommand(
        "report", "aggregate prior run reports into one findings document");
    re->add_option("--inputs", aggregate.inputs, "JSON reports from prior runs")
        ->expected(-1);
    add_output_options(re, aggregate.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int cli_code = app.exit(e);
        return cli_code == 0 ? 0 : kExitUsage;
    }

    try {
        if (id->parsed()) return run_identity(identity);
        if (hy->parsed()) return run_hypothesis(hypothesis);
        if (st->parsed()) return run_stabilize(stabilize);
        if (au->parsed()) return run_audit(audit);
        if (ce->parsed()) return run_counterexample(counterexample);
        if (wi->parsed()) return run_witness(witness);
        if (re->parsed()) return run_report(aggregate);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitUsage;
}

}  // namespace recipstab
