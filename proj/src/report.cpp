#include "recipstab/report.hpp"

#include "recipstab/version.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace recipstab {

Json rational_json(const Rational& q) { return format_rational(q); }

Json norm_json(const NormValue& n, const ValuationSpec& v) {
    Json out;
    out["value"] = format_rational(n.value);
    if (v.is_padic() && !n.is_zero()) {
        auto e = exact_power_of(n.value, v.prime());
        if (e)
            out["annotation"] = std::to_string(v.prime()) + "^" + std::to_string(*e);
    }
    return out;
}

Json control_json(const ControlFunction& c) {
    Json out;
    out["family"] = to_string(c.family);
    out["epsilon"] = rational_json(c.epsilon);
    switch (c.family) {
        case ControlFamily::Constant: break;
        case ControlFamily::SumPowers:
        case ControlFamily::MixedProductSum: out["q"] = rational_json(c.q); break;
        case ControlFamily::ProductPowers:
            out["r"] = rational_json(c.r);
            out["s"] = rational_json(c.s);
            break;
    }
    return out;
}

Json condition_json(const ConditionReport& r) {
    Json out;
    out["equation"] = to_string(r.kind);
    out["field"] = r.valuation.name();
    out["direction"] = to_string(r.direction);
    out["holds"] = r.holds;
    out["ratio_base"] = rational_json(r.ratio_base);
    out["ratio_exponent"] = rational_json(r.ratio_exponent);
    if (r.ratio) out["ratio"] = rational_json(*r.ratio);
    out["two_norm_below_one"] = r.two_norm_below_one;
    out["diagnosis"] = r.diagnosis;
    return out;
}

Json audit_json(const BoundAuditEntry& e) {
    Json out;
    out["case"] = e.case_id;
    out["equation"] = to_string(e.kind);
    out["control"] = control_json(e.control);
    out["branch"] = e.branch;
    out["x"] = rational_json(e.x);
    out["stated_formula"] = e.stated_formula;
    out["stated_value"] = rational_json(e.stated_value);
    out["hypothesis_holds"] = e.hypothesis_holds;
    if (e.direction) out["direction"] = to_string(*e.direction);
    if (e.computed_supremum)
        out["computed_supremum"] = rational_json(*e.computed_supremum);
    if (e.computed_supremum_normcoeff)
        out["computed_supremum_normcoeff"] =
            rational_json(*e.computed_supremum_normcoeff);
    if (e.other_branch_stated)
        out["other_branch_stated"] = rational_json(*e.other_branch_stated);
    out["match"] = e.match;
    out["swap_match"] = e.swap_match;
    if (!e.note.empty()) out["note"] = e.note;
    return out;
}

Report Report::make(const std::string& subcommand, Json config, Json records,
                    Json summary) {
    Report report;
    report.doc["toolkit"] = {{"name", kToolkitName}, {"version", kToolkitVersion}};
    report.doc["subcommand"] = subcommand;
    report.doc["config"] = std::move(config);
    report.doc["records"] = std::move(records);
    report.doc["summary"] = std::move(summary);
    return report;
}

std::string Report::to_json_bytes() const { return doc.dump(2) + "\n"; }

std::string Report::to_tsv_bytes() const {
    const Json& records = doc.at("records");
    std::set<std::string> columns;
    for (const Json& rec : records)
        for (auto it = rec.begin(); it != rec.end(); ++it) columns.insert(it.key());

    auto cell = [](const Json& value) -> std::string {
        if (value.is_string()) return value.get<std::string>();
        return value.dump();
    };

    std::ostringstream out;
    bool first = true;
    for (const std::string& col : columns) {
        if (!first) out << '\t';
        out << col;
        first = false;
    }
    out << '\n';
    for (const Json& rec : records) {
        first = true;
        for (const std::string& col : columns) {
            if (!first) out << '\t';
            if (rec.contains(col)) out << cell(rec.at(col));
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

std::string resolve_out_path(const std::string& explicit_path,
                             const std::string& subcommand) {
    if (!explicit_path.empty()) return explicit_path;
    if (const char* dir = std::getenv("RECIPSTAB_OUT_DIR"); dir && *dir)
        return std::string(dir) + "/" + subcommand + ".json";
    return {};
}

void write_text_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << bytes;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace recipstab
