#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace botaudit {

// Data-level failure (bad manifest, bad CSV cell, violated precondition).
// The CLI maps these to exit code 1; usage problems are handled separately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Deterministic randomness.
//
// All randomness in the toolkit flows through Rng, a splitmix64 counter
// generator with hand-rolled distributions. The standard <random>
// distributions are implementation-defined, which would break the
// replayability contract across standard libraries, so none are used here.
// ---------------------------------------------------------------------------

// Stable derivation of a child seed from (master seed, stream index).
// Used to give every tree / fold / protocol cell an independent stream so
// results do not depend on scheduling order.
uint64_t mix_seed(uint64_t seed, uint64_t stream);

class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64();

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit();

    double uniform(double lo, double hi);

    // Box-Muller; two draws per value, no caching.
    double normal(double mean, double sd);

    bool bernoulli(double p);

    // Unbiased uniform index in [0, n). n must be > 0.
    std::size_t uniform_index(std::size_t n);

    // Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        if (v.size() < 2) return;
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            std::size_t j = uniform_index(i + 1);
            std::swap(v[i], v[j]);
        }
    }

private:
    uint64_t state_;
};

// ---------------------------------------------------------------------------
// FNV-1a 64 hashing (stable across platforms; used for dataset digests and
// id-keyed seed streams).
// ---------------------------------------------------------------------------

inline constexpr uint64_t kFnvOffset = 1469598103934665603ULL;
inline constexpr uint64_t kFnvPrime = 1099511628211ULL;

uint64_t fnv1a64(std::string_view bytes, uint64_t h = kFnvOffset);
std::string to_hex(uint64_t v);

// ---------------------------------------------------------------------------
// Calendar arithmetic. Timestamps are stored as fractional days since
// 1970-01-01 UTC.
// ---------------------------------------------------------------------------

int64_t days_from_civil(int year, int month, int day);
void civil_from_days(int64_t days, int& year, int& month, int& day);

// Accepts "YYYY-MM-DD" with an optional "[T ]HH:MM:SS[.sss][Z]" suffix, or a
// plain number already expressed in days. Returns nullopt on anything else.
std::optional<double> parse_timestamp(std::string_view text);

// Calendar date of the day containing `days` (floor), as "YYYY-MM-DD".
std::string format_days_as_date(double days);

// ---------------------------------------------------------------------------
// Number formatting.
// ---------------------------------------------------------------------------

// Shortest decimal string that round-trips through strtod.
std::string format_double(double v);

// Rounds to 15 significant digits (the precision results JSON carries).
double round_sig15(double v);

// Two decimals, half-up in decimal (0.975 -> "0.98"), for report tables.
std::string format_fixed2_half_up(double v);

// ---------------------------------------------------------------------------
// Threading. BOTAUDIT_THREADS overrides the worker count (read per call).
// parallel_for partitions [0, n) statically; bodies must write to disjoint
// slots so results are identical for every worker count.
// ---------------------------------------------------------------------------

int thread_count();

namespace detail {
void parallel_for_impl(std::size_t n, const std::function<void(std::size_t)>& fn);
}

template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    detail::parallel_for_impl(n, std::function<void(std::size_t)>(std::forward<Fn>(fn)));
}

} // namespace botaudit
