#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "reesmult/monomial_ideal.hpp"
#include "reesmult/numbers.hpp"

namespace reesmult {

/// Write-once store of sampled lengths, keyed by a canonical, parseable
/// description of the product ideal. Safe for concurrent get/put; duplicate
/// puts of the same key must carry the same value.
class SampleCache {
public:
    SampleCache() = default;
    SampleCache(const SampleCache& o);
    SampleCache& operator=(const SampleCache&) = delete;

    std::optional<Int> get(const std::string& key) const;
    void put(const std::string& key, const Int& value);
    size_t size() const;
    std::map<std::string, Int> snapshot() const;

    /// Newline-delimited records {"k": "<key>", "v": "<decimal-integer>"}.
    /// Corrupted lines are rejected with their line number.
    static SampleCache load(const std::string& path);
    void store(const std::string& path) const;

private:
    mutable std::mutex mu_;
    std::map<std::string, Int> map_;
};

struct StabilizationConfig {
    int window = 2;     // consecutive base points that must agree
    long long cap = 64; // largest base point tried (doubling from 1)
};

struct MixedQuery {
    std::vector<MonomialIdeal> ideals;  // same ring, all m-primary
    std::vector<long long> weights;     // nonnegative, sum = dim
};

/// Samples the length function l(R/I_1^{r_1}...I_g^{r_g}) and extracts
/// multiplicities and mixed multiplicities by exact iterated forward
/// differences, with empirical detection of the polynomial range.
class HilbertEngine {
public:
    explicit HilbertEngine(StabilizationConfig cfg = {}) : cfg_(cfg) {}

    SampleCache& cache() { return cache_; }
    const StabilizationConfig& config() const { return cfg_; }

    /// Exact colength of I_1^{r_1}...I_g^{r_g}; r_j = 0 omits ideal j,
    /// the all-zero vector yields 0.
    Int sample_length(const std::vector<MonomialIdeal>& ideals,
                      const std::vector<long long>& r);

    /// e(I_1^[q_1] | ... | I_g^[q_g]) with sum q_j = dim R.
    Int mixed_multiplicity(const MixedQuery& query);

    /// e(I): normalized leading coefficient of n -> l(R/I^n).
    Int multiplicity(const MonomialIdeal& I);

    /// e_q(I1 | I2) = e(I1^[d-q] | I2^[q]) for 0 <= q <= d-1.
    Int e_q_pair(const MonomialIdeal& I1, const MonomialIdeal& I2, long long q);

    /// Canonical cache key (zero exponents dropped, equal ideals merged,
    /// factors sorted); empty product gives "".
    static std::string sample_key(const std::vector<MonomialIdeal>& ideals,
                                  const std::vector<long long>& r);

private:
    Int difference_at(const std::vector<MonomialIdeal>& ideals,
                      const std::vector<long long>& weights, long long base);

    StabilizationConfig cfg_;
    SampleCache cache_;
    std::map<std::string, Int> mixed_memo_;
};

/// Recompute every entry of a cache from its parsed key; throws
/// CacheInconsistency on the first mismatch.
void verify_cache(const SampleCache& cache);

/// Inverse of HilbertEngine::sample_key.
void parse_sample_key(const std::string& key, RingPtr& ring,
                      std::vector<MonomialIdeal>& ideals,
                      std::vector<long long>& r);

}  // namespace reesmult
