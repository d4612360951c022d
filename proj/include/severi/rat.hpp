#ifndef SEVERI_RAT_HPP
#define SEVERI_RAT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace severi {

/// Exact rational scalar. All library arithmetic is over Q.
using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "num", "num/den" or a decimal-free integer string.
Rat rat_parse(const std::string& s);

/// Canonical "num/den" form ("3", "-1/2", ...). Denominator omitted when 1.
std::string rat_str(const Rat& q);

Rat rat_pow(const Rat& base, long exp);

/// Deterministic, platform-independent generator for seeded sweeps.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    /// Signed integer in [-range, range].
    long small_int(long range) {
        return static_cast<long>(below(2 * static_cast<std::uint64_t>(range) + 1)) - range;
    }

    /// Small rational with numerator in [-range, range] and denominator in [1, maxden].
    Rat small_rat(long range, long maxden = 3) {
        return rat_of(small_int(range), static_cast<long>(below(static_cast<std::uint64_t>(maxden))) + 1);
    }

  private:
    std::uint64_t state_;
};

}  // namespace severi

#endif
