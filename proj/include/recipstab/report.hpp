#pragma once

#include "recipstab/control.hpp"
#include "recipstab/hyers.hpp"
#include "recipstab/rational.hpp"
#include "recipstab/valuation.hpp"

#include <json.hpp>

#include <string>

namespace recipstab {

/// nlohmann::json keeps object keys sorted (std::map storage), which makes
/// every dump byte-stable for fixed contents; rationals are emitted as
/// exact "num/den" strings, never floats.
using Json = nlohmann::json;

Json rational_json(const Rational& q);
/// Norm value with a "p^e" annotation when the valuation is p-adic.
Json norm_json(const NormValue& n, const ValuationSpec& v);
Json control_json(const ControlFunction& c);
Json condition_json(const ConditionReport& r);
Json audit_json(const BoundAuditEntry& e);

struct Report {
    Json doc;

    static Report make(const std::string& subcommand, Json config, Json records,
                       Json summary);

    std::string to_json_bytes() const;  // canonical document plus trailing newline
    std::string to_tsv_bytes() const;   // header row + one row per record
};

/// Explicit path wins; otherwise $RECIPSTAB_OUT_DIR/<subcommand>.json when
/// that variable is set; empty result means stdout.
std::string resolve_out_path(const std::string& explicit_path,
                             const std::string& subcommand);

void write_text_file(const std::string& path, const std::string& bytes);

}  // namespace recipstab
