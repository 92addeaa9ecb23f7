#include "botaudit/util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <thread>

namespace botaudit {

namespace {

uint64_t splitmix64_finalize(uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    return splitmix64_finalize(seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
}

uint64_t Rng::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return splitmix64_finalize(state_);
}

double Rng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
}

double Rng::normal(double mean, double sd) {
    // u1 in (0, 1] so the log is finite.
    double u1 = 1.0 - next_unit();
    double u2 = next_unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sd * r * std::cos(2.0 * M_PI * u2);
}

bool Rng::bernoulli(double p) {
    return next_unit() < p;
}

std::size_t Rng::uniform_index(std::size_t n) {
    if (n == 0) throw Error("uniform_index: n must be positive");
    if (n == 1) return 0;
    // Rejection sampling to avoid modulo bias.
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t r;
    do {
        r = next_u64();
    } while (r >= limit);
    return static_cast<std::size_t>(r % n);
}

uint64_t fnv1a64(std::string_view bytes, uint64_t h) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

std::string to_hex(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// Howard Hinnant's civil-days algorithms.
int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 + static_cast<unsigned>(d) - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return static_cast<int64_t>(era) * 146097 + static_cast<int64_t>(doe) - 719468;
}

void civil_from_days(int64_t z, int& year, int& month, int& day) {
    z += 719468;
    const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int64_t y = static_cast<int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    day = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    month = static_cast<int>(mp < 10 ? mp + 3 : mp - 9);
    year = static_cast<int>(y + (month <= 2));
}

namespace {

bool parse_uint_fixed(std::string_view s, std::size_t pos, std::size_t len, int& out) {
    if (pos + len > s.size()) return false;
    int v = 0;
    for (std::size_t i = 0; i < len; ++i) {
        char c = s[pos + i];
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    out = v;
    return true;
}

bool days_in_month_ok(int y, int m, int d) {
    static const int lengths[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m < 1 || m > 12 || d < 1) return false;
    int max_d = lengths[m - 1];
    bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    if (m == 2 && leap) max_d = 29;
    return d <= max_d;
}

std::optional<double> parse_full_double(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::string buf(s);
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) return std::nullopt;
    if (std::isnan(v)) return std::nullopt;
    return v;
}

} // namespace

std::optional<double> parse_timestamp(std::string_view text) {
    // Trim ASCII whitespace.
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    int y, mo, d;
    if (text.size() >= 10 && text[4] == '-' && text[7] == '-' &&
        parse_uint_fixed(text, 0, 4, y) && parse_uint_fixed(text, 5, 2, mo) && parse_uint_fixed(text, 8, 2, d)) {
        if (!days_in_month_ok(y, mo, d)) return std::nullopt;
        double days = static_cast<double>(days_from_civil(y, mo, d));
        std::string_view rest = text.substr(10);
        if (rest.empty()) return days;
        if (rest.front() != 'T' && rest.front() != ' ') return std::nullopt;
        rest.remove_prefix(1);
        if (!rest.empty() && rest.back() == 'Z') rest.remove_suffix(1);
        int h, mi, se;
        if (rest.size() < 8 || rest[2] != ':' || rest[5] != ':' ||
            !parse_uint_fixed(rest, 0, 2, h) || !parse_uint_fixed(rest, 3, 2, mi) || !parse_uint_fixed(rest, 6, 2, se))
            return std::nullopt;
        if (h > 23 || mi > 59 || se > 60) return std::nullopt;
        double seconds = h * 3600.0 + mi * 60.0 + se;
        if (rest.size() > 8) {
            if (rest[8] != '.') return std::nullopt;
            auto frac = parse_full_double(std::string("0") + std::string(rest.substr(8)));
            if (!frac) return std::nullopt;
            seconds += *frac;
        }
        return days + seconds / 86400.0;
    }

    // Fall back to a raw number of days (synth exports store timestamps this way).
    return parse_full_double(text);
}

std::string format_days_as_date(double days) {
    int y, m, d;
    civil_from_days(static_cast<int64_t>(std::floor(days)), y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
    return buf;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double round_sig15(double v) {
    if (!std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return std::strtod(buf, nullptr);
}

std::string format_fixed2_half_up(double v) {
    // Decimal-string rounding: %.12f first so values that are 0.975 in
    // decimal (but slightly below in binary) still round up.
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    std::string s(buf);
    bool neg = false;
    if (!s.empty() && s[0] == '-') {
        neg = true;
        s.erase(0, 1);
    }
    auto dot = s.find('.');
    std::string digits = s.substr(0, dot) + s.substr(dot + 1); // all digits, implicit point after `dot`
    std::size_t keep = dot + 2;                                // digits kept before rounding position
    bool round_up = keep < digits.size() && digits[keep] >= '5';
    digits.resize(keep, '0');
    if (round_up) {
        int i = static_cast<int>(digits.size()) - 1;
        for (; i >= 0; --i) {
            if (digits[i] != '9') {
                ++digits[i];
                break;
            }
            digits[i] = '0';
        }
        if (i < 0) {
            digits.insert(digits.begin(), '1');
            ++dot;
        }
    }
    std::string out = digits.substr(0, dot) + "." + digits.substr(dot);
    if (neg && out.find_first_not_of("0.") != std::string::npos) out.insert(0, 1, '-');
    return out;
}

int thread_count() {
    const char* env = std::getenv("BOTAUDIT_THREADS");
    if (env != nullptr && *env != '\0') {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 256) return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

namespace detail {

void parallel_for_impl(std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    std::size_t workers = static_cast<std::size_t>(thread_count());
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace detail

} // namespace botaudit
