#include "reesmult/hilbert.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace reesmult {

SampleCache::SampleCache(const SampleCache& o) {
    std::lock_guard<std::mutex> lock(o.mu_);
    map_ = o.map_;
}

std::optional<Int> SampleCache::get(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void SampleCache::put(const std::string& key, const Int& value) {
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = map_.emplace(key, value);
    if (!inserted && it->second != value)
        throw Error(Errc::CacheInconsistency,
                    "conflicting values for key " + key);
}

size_t SampleCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
}

std::map<std::string, Int> SampleCache::snapshot() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_;
}

SampleCache SampleCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoError, "cannot open " + path);
    SampleCache cache;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("k") || !j.contains("v") ||
            !j["k"].is_string() || !j["v"].is_string())
            throw Error(Errc::FormatError,
                        path + ":" + std::to_string(lineno) + ": bad cache record");
        const std::string v = j["v"].get<std::string>();
        if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
            throw Error(Errc::FormatError,
                        path + ":" + std::to_string(lineno) + ": value is not a decimal integer");
        cache.put(j["k"].get<std::string>(), Int(v));
    }
    return cache;
}

void SampleCache::store(const std::string& path) const {
    auto entries = snapshot();
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error(Errc::IoError, "cannot write " + path);
    for (const auto& [k, v] : entries) {
        nlohmann::json j;
        j["k"] = k;
        j["v"] = v.str();
        out << j.dump() << '\n';
    }
    if (!out) throw Error(Errc::IoError, "write failed for " + path);
}

namespace {

struct Factor {
    MonomialIdeal ideal;
    long long exponent;
    std::string ideal_key;
};

// Drop zero exponents, merge equal ideals, sort by canonical key. The
// resulting factor list determines the product ideal.
std::vector<Factor> canonical_factors(const std::vector<MonomialIdeal>& ideals,
                                      const std::vector<long long>& r) {
    if (ideals.size() != r.size())
        throw Error(Errc::QOutOfRange, "exponent vector length mismatch");
    std::vector<Factor> fs;
    for (size_t i = 0; i < ideals.size(); ++i) {
        if (r[i] < 0) throw Error(Errc::QOutOfRange, "negative exponent");
        if (r[i] == 0) continue;
        if (!fs.empty() && *ideals[i].ring() != *fs.front().ideal.ring())
            throw Error(Errc::RingMismatch, "sample over mixed rings");
        std::string key = ideals[i].key();
        auto it = std::find_if(fs.begin(), fs.end(),
                               [&](const Factor& f) { return f.ideal_key == key; });
        if (it != fs.end())
            it->exponent += r[i];
        else
            fs.push_back({ideals[i], r[i], std::move(key)});
    }
    std::sort(fs.begin(), fs.end(),
              [](const Factor& a, const Factor& b) { return a.ideal_key < b.ideal_key; });
    return fs;
}

std::string factors_key(const RingPtr& ring, const std::vector<Factor>& fs) {
    std::ostringstream os;
    os << "v1|" << ring->key();
    for (const Factor& f : fs) os << '|' << f.ideal_key << '@' << f.exponent;
    return os.str();
}

}  // namespace

std::string HilbertEngine::sample_key(const std::vector<MonomialIdeal>& ideals,
                                      const std::vector<long long>& r) {
    auto fs = canonical_factors(ideals, r);
    if (fs.empty()) return "";
    return factors_key(fs.front().ideal.ring(), fs);
}

Int HilbertEngine::sample_length(const std::vector<MonomialIdeal>& ideals,
                                 const std::vector<long long>& r) {
    auto fs = canonical_factors(ideals, r);
    if (fs.empty()) return 0;

    const std::string key = factors_key(fs.front().ideal.ring(), fs);
    if (auto hit = cache_.get(key)) return *hit;

    std::optional<MonomialIdeal> prod;
    for (const Factor& f : fs) {
        MonomialIdeal p = power(f.ideal, f.exponent);
        prod = prod ? product(*prod, p) : p;
    }
    auto len = colength(*prod);
    if (!len)
        throw Error(Errc::NotMPrimary, "sampled ideal is not m-primary: " + prod->key());
    cache_.put(key, *len);
    return *len;
}

// Iterated forward difference D_1^{q_1}...D_g^{q_g} of the length function,
// evaluated with every variable at `base`. Inside the polynomial range this
// is exactly the mixed multiplicity.
Int HilbertEngine::difference_at(const std::vector<MonomialIdeal>& ideals,
                                 const std::vector<long long>& weights, long long base) {
    const size_t g = ideals.size();
    std::vector<long long> offset(g, 0);
    Int total = 0;
    for (;;) {
        long long parity = 0;
        Int coeff = 1;
        std::vector<long long> r(g);
        for (size_t j = 0; j < g; ++j) {
            parity += weights[j] - offset[j];
            coeff *= binomial(weights[j], offset[j]);
            r[j] = base + offset[j];
        }
        Int term = coeff * sample_length(ideals, r);
        total += (parity % 2 == 0) ? term : -term;

        size_t j = 0;
        while (j < g) {
            if (++offset[j] <= weights[j]) break;
            offset[j] = 0;
            ++j;
        }
        if (j == g) break;
    }
    return total;
}

Int HilbertEngine::mixed_multiplicity(const MixedQuery& query) {
    if (query.ideals.empty())
        throw Error(Errc::QOutOfRange, "mixed multiplicity of an empty ideal list");
    if (query.ideals.size() != query.weights.size())
        throw Error(Errc::QOutOfRange, "weight vector length mismatch");
    const RingPtr& ring = query.ideals.front().ring();
    long long total = 0;
    for (size_t i = 0; i < query.ideals.size(); ++i) {
        if (*query.ideals[i].ring() != *ring)
            throw Error(Errc::RingMismatch, "mixed multiplicity over mixed rings");
        if (!is_m_primary(query.ideals[i]))
            throw Error(Errc::NotMPrimary, query.ideals[i].key());
        if (query.weights[i] < 0) throw Error(Errc::QOutOfRange, "negative weight");
        total += query.weights[i];
    }
    if (total != ring->dim())
        throw Error(Errc::QOutOfRange,
                    "weights sum to " + std::to_string(total) + ", expected dim = " +
                        std::to_string(ring->dim()));

    // Canonical form: weight-0 ideals drop out (I^0 = R), equal ideals merge.
    std::vector<MonomialIdeal> ideals;
    std::vector<long long> weights;
    {
        auto fs = canonical_factors(query.ideals, query.weights);
        for (auto& f : fs) {
            ideals.push_back(std::move(f.ideal));
            weights.push_back(f.exponent);
        }
    }

    std::string memo_key = "mm" + factors_key(ring, canonical_factors(ideals, weights));
    if (auto it = mixed_memo_.find(memo_key); it != mixed_memo_.end()) return it->second;

    // A constant window alone can be a pre-polynomial plateau (the plateau
    // D(1) = D(2) = 3 for m and (x^4, y^4, x^2 y^3) undershoots the true
    // value 4), so a window value only counts once the window at the
    // doubled base point reproduces it.
    std::map<long long, Int> diff_memo;
    auto diff = [&](long long x) -> const Int& {
        auto it = diff_memo.find(x);
        if (it == diff_memo.end())
            it = diff_memo.emplace(x, difference_at(ideals, weights, x)).first;
        return it->second;
    };
    auto window_value = [&](long long base) -> std::optional<Int> {
        const Int& first = diff(base);
        for (int w = 1; w < cfg_.window; ++w)
            if (diff(base + w) != first) return std::nullopt;
        return first;
    };

    Int last0 = 0, last1 = 0;
    for (long long base = 1; base <= cfg_.cap; base *= 2) {
        auto v = window_value(base);
        if (v && *v > 0 && base * 2 <= cfg_.cap) {
            auto confirm = window_value(base * 2);
            if (confirm && *confirm == *v) {
                mixed_memo_.emplace(memo_key, *v);
                return *v;
            }
        }
        last0 = diff(base);
        last1 = diff(base + cfg_.window - 1);
    }
    throw Error(Errc::StabilizationFailure,
                "no confirmed constant window up to base " + std::to_string(cfg_.cap) +
                    "; last candidates " + last0.str() + ", " + last1.str());
}

Int HilbertEngine::multiplicity(const MonomialIdeal& I) {
    return mixed_multiplicity({{I}, {I.ring()->dim()}});
}

Int HilbertEngine::e_q_pair(const MonomialIdeal& I1, const MonomialIdeal& I2, long long q) {
    const long long d = I1.ring()->dim();
    if (q < 0 || q > d - 1)
        throw Error(Errc::QOutOfRange, "q = " + std::to_string(q) + " outside [0, d-1]");
    return mixed_multiplicity({{I1, I2}, {d - q, q}});
}

namespace {

std::vector<long long> parse_int_list(const std::string& s, char sep, const std::string& ctx) {
    std::vector<long long> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        try {
            size_t pos = 0;
            long long v = std::stoll(cur, &pos);
            if (pos != cur.size()) throw std::invalid_argument(cur);
            out.push_back(v);
        } catch (const std::exception&) {
            throw Error(Errc::FormatError, "bad integer '" + cur + "' in " + ctx);
        }
    }
    if (out.empty()) throw Error(Errc::FormatError, "empty integer list in " + ctx);
    return out;
}

}  // namespace

void parse_sample_key(const std::string& key, RingPtr& ring,
                      std::vector<MonomialIdeal>& ideals, std::vector<long long>& r) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(key);
    while (std::getline(in, cur, '|')) parts.push_back(cur);
    if (parts.size() < 3 || parts[0] != "v1")
        throw Error(Errc::FormatError, "bad cache key: " + key);

    const std::string& rk = parts[1];
    if (rk.rfind("pl:", 0) == 0) {
        ring = make_ring_polynomial_local(static_cast<int>(parse_int_list(rk.substr(3), ',', key)[0]));
    } else if (rk.rfind("ns:", 0) == 0) {
        ring = make_ring_numerical_semigroup(parse_int_list(rk.substr(3), ',', key));
    } else {
        throw Error(Errc::FormatError, "bad ring descriptor in cache key: " + key);
    }

    ideals.clear();
    r.clear();
    // Remaining parts pair up as "[m|m|...]@exp"; '|' also separates the
    // generators inside the brackets, so rejoin until the bracket closes.
    for (size_t i = 2; i < parts.size();) {
        std::string piece = parts[i++];
        while (piece.find(']') == std::string::npos && i < parts.size())
            piece += "|" + parts[i++];
        size_t close = piece.find(']');
        size_t at = piece.find('@', close == std::string::npos ? 0 : close);
        if (piece.empty() || piece[0] != '[' || close == std::string::npos ||
            at == std::string::npos || at != close + 1)
            throw Error(Errc::FormatError, "bad ideal factor in cache key: " + key);
        std::string gens_str = piece.substr(1, close - 1);
        long long exp = parse_int_list(piece.substr(at + 1), ',', key)[0];
        std::vector<Monomial> gens;
        std::istringstream gin(gens_str);
        std::string gs;
        while (std::getline(gin, gs, '|'))
            gens.emplace_back(parse_int_list(gs, ',', key));
        ideals.push_back(ideal_from_gens(ring, std::move(gens)));
        r.push_back(exp);
    }
    if (ideals.empty()) throw Error(Errc::FormatError, "cache key has no factors: " + key);
}

void verify_cache(const SampleCache& cache) {
    HilbertEngine engine;
    for (const auto& [key, value] : cache.snapshot()) {
        RingPtr ring;
        std::vector<MonomialIdeal> ideals;
        std::vector<long long> r;
        parse_sample_key(key, ring, ideals, r);
        Int recomputed = engine.sample_length(ideals, r);
        if (recomputed != value)
            throw Error(Errc::CacheInconsistency,
                        key + ": stored " + value.str() + ", recomputed " + recomputed.str());
    }
}

}  // namespace reesmult
