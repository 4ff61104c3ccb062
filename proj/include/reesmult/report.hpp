#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "reesmult/rees.hpp"
#include "reesmult/theorems.hpp"

namespace reesmult {

struct InstanceDescription {
    std::string ring_key;
    std::vector<std::pair<std::string, std::string>> ideals;  // (name, canonical gens)
};

/// JSON value for an exact integer: a number when it fits in 64 bits,
/// otherwise its decimal string.
nlohmann::ordered_json int_json(const Int& v);

nlohmann::ordered_json check_json(const CheckResult& res);

/// Schema "reesmult/1": instance, dim, muN, eN, eNOracle, bound,
/// equationHolds, checks, timingMs (stable names, extra fields allowed).
nlohmann::ordered_json rees_report_json(const ReesReport& report,
                                        const InstanceDescription& instance,
                                        const std::vector<CheckResult>& checks,
                                        long long timing_ms);

std::string rees_report_text(const ReesReport& report, const InstanceDescription& instance,
                             const std::vector<CheckResult>& checks, long long timing_ms);

std::string check_text(const CheckResult& res);

}  // namespace reesmult
