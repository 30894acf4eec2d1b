#pragma once

#include <nlohmann/json.hpp>

#include "kummer/checks.hpp"

namespace kummer {

using ordered_json = nlohmann::ordered_json;

/// Integers are emitted as JSON numbers below 2^53 and as decimal strings
/// above, so 53-bit consumers cannot corrupt them. Parsing accepts both.
ordered_json json_int(i128 x);
i128 int_from_json(const ordered_json& j, const std::string& what);

ordered_json radical_to_json(const PrimeField& fld, const RadicalField& f);
RadicalField radical_from_json(const PrimeField& fld, size_t r, const ordered_json& j);

ordered_json instance_to_json(const GenusInstance& inst);
GenusInstance instance_from_json(const ordered_json& j, u64 factor_seed = 0);

ordered_json certificate_to_json(const GenusCertificate& cert,
                                 const std::vector<CheckReport>& checks = {});
GenusCertificate certificate_from_json(const ordered_json& j);

ordered_json reports_to_json(const std::vector<CheckReport>& reports);

}  // namespace kummer
