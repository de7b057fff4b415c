#pragma once

#include <json.hpp>

#include "betaword/bispecial.hpp"
#include "betaword/critexp.hpp"
#include "betaword/factor_oracle.hpp"

namespace betaword {

using Json = nlohmann::json;

/// Fractions travel as "num/den" strings; they routinely outgrow int64.
std::string frac_str(const BigRat& q);

Json extension_to_json(const ExtensionRecord& rec);
Json index_to_json(const IndexRecord& rec);
Json returns_to_json(const ReturnWordSet& rws);
Json return_types_to_json(const ReturnTypeReport& report);
Json bispecial_to_json(const BispecialFactor& v);
Json critexp_to_json(const CritExpReport& report);
Json verification_to_json(const VerificationReport& report);

}  // namespace betaword
