#include "reesmult/report.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

namespace reesmult {

nlohmann::ordered_json int_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

nlohmann::ordered_json check_json(const CheckResult& res) {
    nlohmann::ordered_json j;
    j["name"] = res.name;
    j["instance"] = res.instance;
    j["lhs"] = int_json(res.lhs);
    j["rhs"] = int_json(res.rhs);
    j["holds"] = res.holds;
    j["mode"] = check_mode_name(res.mode);
    j["note"] = res.note;
    return j;
}

nlohmann::ordered_json rees_report_json(const ReesReport& report,
                                        const InstanceDescription& instance,
                                        const std::vector<CheckResult>& checks,
                                        long long timing_ms) {
    nlohmann::ordered_json j;
    j["schema"] = "reesmult/1";

    nlohmann::ordered_json inst;
    inst["ring"] = instance.ring_key;
    inst["ideals"] = nlohmann::ordered_json::array();
    for (const auto& [name, gens] : instance.ideals) {
        nlohmann::ordered_json e;
        e["name"] = name;
        e["gens"] = gens;
        inst["ideals"].push_back(std::move(e));
    }
    inst["ringMu"] = int_json(report.ring_mu);
    inst["ringE"] = int_json(report.ring_e);
    inst["ringMinimalMultiplicity"] = report.ring_minimal_multiplicity;
    j["instance"] = std::move(inst);

    j["dim"] = report.dim_B;
    j["muN"] = int_json(report.mu_n);
    j["eN"] = int_json(report.e_n);
    j["eNOracle"] = report.e_n_oracle ? int_json(*report.e_n_oracle)
                                      : nlohmann::ordered_json(nullptr);
    j["bound"] = int_json(report.bound);
    j["equationHolds"] = report.equation_holds;

    j["perIdeal"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < report.per_ideal.size(); ++i) {
        const PerIdealReport& per = report.per_ideal[i];
        nlohmann::ordered_json e;
        e["name"] = i < instance.ideals.size() ? instance.ideals[i].first
                                               : "I" + std::to_string(i + 1);
        e["mu"] = per.mu_count;
        e["eTopMixed"] = int_json(per.e_top_mixed);
        e["reductionNumber"] = per.reduction_number
                                   ? nlohmann::ordered_json(*per.reduction_number)
                                   : nlohmann::ordered_json(nullptr);
        j["perIdeal"].push_back(std::move(e));
    }

    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) j["checks"].push_back(check_json(c));

    j["timingMs"] = timing_ms;
    return j;
}

std::string check_text(const CheckResult& res) {
    std::ostringstream os;
    os << (res.holds ? "  ok   " : "  FAIL ") << std::left << std::setw(28) << res.name
       << " lhs=" << res.lhs.str() << " rhs=" << res.rhs.str() << " ["
       << check_mode_name(res.mode) << "]";
    if (!res.note.empty()) os << "  (" << res.note << ")";
    return os.str();
}

std::string rees_report_text(const ReesReport& report, const InstanceDescription& instance,
                             const std::vector<CheckResult>& checks, long long timing_ms) {
    std::ostringstream os;
    os << "ring           " << instance.ring_key << '\n';
    for (const auto& [name, gens] : instance.ideals)
        os << "ideal          " << name << " = " << gens << '\n';
    os << "ring data      mu(m) = " << report.ring_mu.str() << ", e(m) = " << report.ring_e.str()
       << ", minimal multiplicity: " << (report.ring_minimal_multiplicity ? "yes" : "no") << '\n';
    os << "dim B          " << report.dim_B << '\n';
    os << "mu(N)          " << report.mu_n.str() << '\n';
    os << "e(N)           " << report.e_n.str() << '\n';
    os << "e(N) oracle    " << (report.e_n_oracle ? report.e_n_oracle->str() : "off") << '\n';
    os << "bound          " << report.bound.str() << "   [mu(N) - dim B + 1]\n";
    os << "equation       " << (report.equation_holds ? "holds" : "fails") << '\n';
    for (size_t i = 0; i < report.per_ideal.size(); ++i) {
        const PerIdealReport& per = report.per_ideal[i];
        os << "ideal " << std::left << std::setw(9)
           << (i < instance.ideals.size() ? instance.ideals[i].first : "I" + std::to_string(i + 1))
           << "mu = " << per.mu_count << ", e_{d-1}(m|I) = " << per.e_top_mixed.str();
        if (per.reduction_number) os << ", r(I) = " << *per.reduction_number;
        os << '\n';
    }
    if (!checks.empty()) {
        os << "checks\n";
        for (const auto& c : checks) os << check_text(c) << '\n';
    }
    os << "time           " << timing_ms << " ms\n";
    return os.str();
}

}  // namespace reesmult
