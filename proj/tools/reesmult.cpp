// reesmult: multiplicities and minimal-multiplicity verdicts for
// multi-graded extended Rees algebras of monomial ideals.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "reesmult/laurent.hpp"
#include "reesmult/report.hpp"
#include "reesmult/session.hpp"
#include "reesmult/theorems.hpp"

using namespace reesmult;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitStabilization = 3;

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::StabilizationFailure:
            return kExitStabilization;
        case Errc::NonIntegralResult:
        case Errc::OracleMismatch:
        case Errc::CacheInconsistency:
            return kExitViolation;
        default:
            return kExitUsage;
    }
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoError, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

Session load_session(const std::string& path) { return parse_session(slurp(path)); }

const MonomialIdeal& ideal_by_name(const Session& session, const std::string& name) {
    auto it = session.ideals.find(name);
    if (it == session.ideals.end())
        throw Error(Errc::UsageError, "no ideal named '" + name + "' in the session");
    return it->second;
}

std::vector<MonomialIdeal> ideals_by_names(const Session& session, const std::string& csv,
                                           std::vector<std::string>* names_out = nullptr) {
    std::vector<MonomialIdeal> out;
    for (const std::string& name : split(csv, ',')) {
        out.push_back(ideal_by_name(session, name));
        if (names_out) names_out->push_back(name);
    }
    if (out.empty()) throw Error(Errc::UsageError, "--ideals must name at least one ideal");
    return out;
}

std::vector<long long> parse_csv_ints(const std::string& csv, const char* what) {
    std::vector<long long> out;
    for (const std::string& part : split(csv, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoll(part, &pos));
            if (pos != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw Error(Errc::UsageError, std::string("bad integer in ") + what);
        }
    }
    return out;
}

// Elements are ';'-separated monomials: "(1,0);(0,2)" or "4;8".
std::vector<Monomial> parse_elements(const std::string& text) {
    std::vector<Monomial> out;
    for (std::string part : split(text, ';')) {
        if (part.empty()) continue;
        if (part.front() == '(') {
            if (part.back() != ')')
                throw Error(Errc::UsageError, "unbalanced element tuple: " + part);
            out.emplace_back(parse_csv_ints(part.substr(1, part.size() - 2), "--elements"));
        } else {
            out.push_back(Monomial::semigroup_value(parse_csv_ints(part, "--elements")[0]));
        }
    }
    if (out.empty()) throw Error(Errc::UsageError, "--elements must not be empty");
    return out;
}

struct CacheOptions {
    std::string path;
    bool verify = false;
};

// REESMULT_CACHE overrides the command-line path when set.
std::string effective_cache_path(const std::string& flag_path) {
    if (const char* env = std::getenv("REESMULT_CACHE"); env && *env) return env;
    return flag_path;
}

void cache_preload(HilbertEngine& engine, const CacheOptions& opts) {
    if (opts.path.empty()) return;
    std::ifstream probe(opts.path);
    if (!probe.good()) return;  // fresh cache file
    probe.close();
    SampleCache loaded = SampleCache::load(opts.path);
    if (opts.verify) verify_cache(loaded);
    for (const auto& [k, v] : loaded.snapshot()) engine.cache().put(k, v);
}

void cache_flush(HilbertEngine& engine, const CacheOptions& opts) {
    if (!opts.path.empty()) engine.cache().store(opts.path);
}

void emit(const nlohmann::ordered_json& j, bool json_mode, const std::string& text) {
    if (json_mode)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

bool check_is_informational(const CheckResult& res) {
    return res.note.rfind("vacuous", 0) == 0 || res.note.rfind("unknown", 0) == 0;
}

int run_analyze(const Session& session, const std::string& ideals_csv, const std::string& oracle,
                bool json_mode, const CacheOptions& cache, StabilizationConfig stab) {
    Timer timer;
    HilbertEngine engine(stab);
    cache_preload(engine, cache);

    std::vector<std::string> names;
    std::vector<MonomialIdeal> ideals = ideals_by_names(session, ideals_csv, &names);
    ReesInstance inst = ReesInstance::make(ideals.front().ring(), ideals);

    bool with_oracle = false;
    if (oracle == "on")
        with_oracle = true;
    else if (oracle == "auto")
        with_oracle = rees_dim(inst) <= 4;
    else if (oracle != "off")
        throw Error(Errc::UsageError, "--oracle must be auto, on or off");

    ReesReport report = minimal_multiplicity_verdict(inst, with_oracle, engine);

    std::vector<CheckResult> checks;
    if (inst.g() == 2)
        checks = check_necessary_conditions_g2(engine, inst);
    else if (inst.g() >= 3)
        checks.push_back(check_equation_strict_g3(engine, inst));

    InstanceDescription desc;
    desc.ring_key = inst.ring->key();
    for (size_t i = 0; i < names.size(); ++i)
        desc.ideals.emplace_back(names[i], ideals[i].key());

    cache_flush(engine, cache);
    emit(rees_report_json(report, desc, checks, timer.ms()), json_mode,
         rees_report_text(report, desc, checks, timer.ms()));

    for (const auto& c : checks)
        if (!c.holds && !check_is_informational(c)) return kExitViolation;
    return kExitOk;
}

int run_mixed(const Session& session, const std::string& ideals_csv, const std::string& weights_csv,
              bool json_mode, const CacheOptions& cache, StabilizationConfig stab) {
    Timer timer;
    HilbertEngine engine(stab);
    cache_preload(engine, cache);

    std::vector<std::string> names;
    MixedQuery query;
    query.ideals = ideals_by_names(session, ideals_csv, &names);
    query.weights = parse_csv_ints(weights_csv, "--weights");
    Int value = engine.mixed_multiplicity(query);
    cache_flush(engine, cache);

    nlohmann::ordered_json j;
    j["schema"] = "reesmult/1";
    j["query"]["ring"] = query.ideals.front().ring()->key();
    j["query"]["ideals"] = names;
    j["query"]["weights"] = query.weights;
    j["value"] = int_json(value);
    j["timingMs"] = timer.ms();

    std::ostringstream os;
    os << "e(";
    for (size_t i = 0; i < names.size(); ++i)
        os << (i ? " | " : "") << names[i] << "^[" << query.weights[i] << "]";
    os << ") = " << value.str() << '\n';
    emit(j, json_mode, os.str());
    return kExitOk;
}

int run_colength(const Session& session, const std::string& name, bool json_mode) {
    Timer timer;
    const MonomialIdeal& I = ideal_by_name(session, name);
    auto len = colength(I);

    nlohmann::ordered_json j;
    j["schema"] = "reesmult/1";
    j["ideal"] = name;
    j["gens"] = I.key();
    j["value"] = len ? int_json(*len) : nlohmann::ordered_json(nullptr);
    j["infinite"] = !len.has_value();
    j["timingMs"] = timer.ms();

    std::ostringstream os;
    os << "colength(" << name << ") = " << (len ? len->str() : "infinite") << '\n';
    emit(j, json_mode, os.str());
    return kExitOk;
}

int run_reduction(const Session& session, const std::string& name, const std::string& j_name,
                  long long n_max, bool json_mode) {
    Timer timer;
    const MonomialIdeal& I = ideal_by_name(session, name);

    std::optional<long long> r;
    if (!j_name.empty()) {
        r = reduction_number_monomial(I, ideal_by_name(session, j_name), n_max);
    } else {
        if (I.ring()->kind() != RingKind::NumericalSemigroup)
            throw Error(Errc::UsageError,
                        "give --j for polynomial rings; r(I) is exact only in dimension 1");
        r = reduction_number_dim1(I);
    }

    nlohmann::ordered_json j;
    j["schema"] = "reesmult/1";
    j["ideal"] = name;
    if (!j_name.empty()) j["j"] = j_name;
    j["value"] = r ? nlohmann::ordered_json(*r) : nlohmann::ordered_json(nullptr);
    j["notReduction"] = !r.has_value();
    j["timingMs"] = timer.ms();

    std::ostringstream os;
    if (r)
        os << "reduction number = " << *r << '\n';
    else
        os << "not a reduction (no n <= " << n_max << " works)\n";
    emit(j, json_mode, os.str());
    return kExitOk;
}

int run_verify(const Session& session, const std::string& theorem, const std::string& ideal_name,
               const std::string& ideals_csv, const std::string& q_csv,
               const std::string& elements, long long r, long long q, bool json_mode,
               const CacheOptions& cache, StabilizationConfig stab) {
    Timer timer;
    HilbertEngine engine(stab);
    cache_preload(engine, cache);

    std::vector<CheckResult> checks;
    if (theorem == "nog") {
        if (ideal_name.empty()) throw Error(Errc::UsageError, "nog needs --ideal");
        checks.push_back(check_nog(engine, ideal_by_name(session, ideal_name)));
    } else if (theorem == "kv2") {
        auto ideals = ideals_by_names(session, ideals_csv);
        checks.push_back(check_kv2(engine, ideals, parse_csv_ints(q_csv, "--q")));
    } else if (theorem == "isw") {
        auto ideals = ideals_by_names(session, ideals_csv);
        checks.push_back(check_isw(engine, ideals, parse_elements(elements)));
    } else if (theorem == "scaling") {
        if (ideal_name.empty()) throw Error(Errc::UsageError, "scaling needs --ideal");
        for (auto& res : check_scaling(engine, ideal_by_name(session, ideal_name), r, q))
            checks.push_back(std::move(res));
    } else if (theorem == "g3") {
        auto ideals = ideals_by_names(session, ideals_csv);
        auto inst = ReesInstance::make(ideals.front().ring(), ideals);
        checks.push_back(check_equation_strict_g3(engine, inst));
    } else if (theorem == "g2") {
        auto ideals = ideals_by_names(session, ideals_csv);
        auto inst = ReesInstance::make(ideals.front().ring(), ideals);
        for (auto& res : check_necessary_conditions_g2(engine, inst))
            checks.push_back(std::move(res));
    } else {
        throw Error(Errc::UsageError, "--theorem must be one of nog, kv2, isw, scaling, g3, g2");
    }
    cache_flush(engine, cache);

    nlohmann::ordered_json j;
    j["schema"] = "reesmult/1";
    j["theorem"] = theorem;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) j["checks"].push_back(check_json(c));
    j["timingMs"] = timer.ms();

    std::ostringstream os;
    for (const auto& c : checks) os << check_text(c) << '\n';
    emit(j, json_mode, os.str());

    for (const auto& c : checks)
        if (!c.holds && !check_is_informational(c)) return kExitViolation;
    return kExitOk;
}

int run_explore(const ExploreConfig& cfg, bool json_mode) {
    Timer timer;
    ExploreSummary summary = explore_random(cfg);

    nlohmann::ordered_json j;
    j["schema"] = "reesmult/1";
    j["trials"] = summary.trials;
    j["checksRun"] = summary.checks_run;
    j["held"] = summary.held;
    j["vacuousOrUnknown"] = summary.vacuous_or_unknown;
    j["violations"] = summary.violated;
    j["stabilizationFailures"] = summary.stabilization_failures;
    j["witnesses"] = summary.violations;
    j["timingMs"] = timer.ms();

    emit(j, json_mode, summary.render());
    return summary.violated == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiplicities for multi-graded extended Rees algebras"};
    app.require_subcommand(1);

    std::string file, ideals_csv, ideal_name, weights_csv, q_csv, elements, j_name;
    std::string oracle = "off", theorem, cache_path, family = "poly";
    bool json_mode = false, verify_cache_flag = false;
    long long n_max = 20, scale_r = 1, scale_q = 0;
    StabilizationConfig stab;
    ExploreConfig explore_cfg;

    auto add_common = [&](CLI::App* cmd, bool with_cache = true) {
        cmd->add_flag("--json", json_mode, "emit a JSON report");
        if (with_cache) {
            cmd->add_option("--cache", cache_path, "sample cache file (JSONL)");
            cmd->add_flag("--verify-cache", verify_cache_flag,
                          "recompute every loaded cache entry");
            cmd->add_option("--stab-window", stab.window, "stabilization window")
                ->check(CLI::PositiveNumber);
            cmd->add_option("--stab-cap", stab.cap, "stabilization base-point cap")
                ->check(CLI::PositiveNumber);
        }
    };

    auto* analyze = app.add_subcommand("analyze", "minimal-multiplicity verdict for B(I_1,...,I_g)");
    analyze->add_option("file", file, "session file")->required();
    analyze->add_option("--ideals", ideals_csv, "comma-separated ideal names")->required();
    analyze->add_option("--oracle", oracle, "auto|on|off (default off)");
    add_common(analyze);

    auto* mixed = app.add_subcommand("mixed", "one mixed multiplicity");
    mixed->add_option("file", file)->required();
    mixed->add_option("--ideals", ideals_csv)->required();
    mixed->add_option("--weights", weights_csv, "nonnegative weights summing to dim R")->required();
    add_common(mixed);

    auto* col = app.add_subcommand("colength", "colength of an ideal");
    col->add_option("file", file)->required();
    col->add_option("--ideal", ideal_name)->required();
    add_common(col, false);

    auto* red = app.add_subcommand("reduction", "reduction numbers");
    red->add_option("file", file)->required();
    red->add_option("--ideal", ideal_name)->required();
    red->add_option("--j", j_name, "candidate reduction (defaults to the principal minimal "
                                   "reduction in dimension 1)");
    red->add_option("--nmax", n_max);
    add_common(red, false);

    auto* verify = app.add_subcommand("verify", "run one theorem checker");
    verify->add_option("file", file)->required();
    verify->add_option("--theorem", theorem, "nog|kv2|isw|scaling|g3|g2")->required();
    verify->add_option("--ideal", ideal_name);
    verify->add_option("--ideals", ideals_csv);
    verify->add_option("--q", q_csv, "composition for kv2, or single q for scaling");
    verify->add_option("--elements", elements, "';'-separated monomials, e.g. \"(1,0);(0,2)\"");
    verify->add_option("--r", scale_r, "power for scaling");
    add_common(verify);

    auto* explore = app.add_subcommand("explore", "randomized invariant exploration");
    explore->add_option("--family", family, "poly|semigroup");
    explore->add_option("--dim", explore_cfg.d);
    explore->add_option("--g", explore_cfg.g);
    explore->add_option("--trials", explore_cfg.trials);
    explore->add_option("--seed", explore_cfg.seed);
    explore->add_option("--gen-count-min", explore_cfg.gen_count_min);
    explore->add_option("--gen-count-max", explore_cfg.gen_count_max);
    explore->add_option("--exponent-bound", explore_cfg.exponent_bound);
    explore->add_flag("--json", json_mode);

    CLI11_PARSE(app, argc, argv);

    try {
        CacheOptions cache{effective_cache_path(cache_path), verify_cache_flag};
        if (analyze->parsed())
            return run_analyze(load_session(file), ideals_csv, oracle, json_mode, cache, stab);
        if (mixed->parsed())
            return run_mixed(load_session(file), ideals_csv, weights_csv, json_mode, cache, stab);
        if (col->parsed()) return run_colength(load_session(file), ideal_name, json_mode);
        if (red->parsed())
            return run_reduction(load_session(file), ideal_name, j_name, n_max, json_mode);
        if (verify->parsed()) {
            long long q_single = 0;
            if (theorem == "scaling" && !q_csv.empty())
                q_single = parse_csv_ints(q_csv, "--q")[0];
            return run_verify(load_session(file), theorem, ideal_name, ideals_csv, q_csv,
                              elements, scale_r, theorem == "scaling" ? q_single : scale_q,
                              json_mode, cache, stab);
        }
        if (explore->parsed()) {
            if (family == "poly") {
                explore_cfg.family = RingKind::PolynomialLocal;
            } else if (family == "semigroup") {
                explore_cfg.family = RingKind::NumericalSemigroup;
                explore_cfg.d = 1;
            } else {
                throw Error(Errc::UsageError, "--family must be poly or semigroup");
            }
            return run_explore(explore_cfg, json_mode);
        }
        return kExitUsage;
    } catch (const Error& e) {
        nlohmann::ordered_json j;
        j["error"] = errc_name(e.code());
        j["message"] = e.what();
        if (json_mode)
            std::cout << j.dump(2) << '\n';
        else
            std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
