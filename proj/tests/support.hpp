#pragma once

#include "ekmu/rational.hpp"

#include <gmpxx.h>

#include <numeric>
#include <string>

namespace ekmu::test {

inline Rational Q(const char* text) { return Rational::parse(text); }
inline ResidueModZ R(const char* text) { return reduce_mod_z(Rational::parse(text)); }
inline AmbiguousResidue Set(const char* a, const char* b) { return AmbiguousResidue(R(a), R(b)); }

/// Deterministic source of large signed integers.
class BigGen {
public:
    explicit BigGen(unsigned long seed) : state_(gmp_randinit_mt) { state_.seed(seed); }

    /// Uniform in (-2^bits, 2^bits).
    Integer next(unsigned long bits = 256) {
        Integer v = state_.get_z_bits(bits);
        return state_.get_z_bits(1) == 1 ? Integer(-v) : v;
    }

    /// Nonzero, for denominators.
    Integer next_nonzero(unsigned long bits = 256) {
        Integer v;
        do {
            v = next(bits);
        } while (v == 0);
        return v;
    }

    unsigned long below(unsigned long n) { return Integer(state_.get_z_range(n)).get_ui(); }

private:
    gmp_randclass state_;
};

/// Fraction mod 1 on machine integers, independent of the library: returns
/// (p, q) with 0 <= p < q, gcd(p, q) = 1, p/q = num/den mod 1.
inline std::pair<long long, long long> small_mod1(__int128 num, long long den) {
    __int128 r = num % den;
    if (r < 0) {
        r += den;
    }
    const long long p = static_cast<long long>(r);
    const long long g = std::gcd(p, den);
    return p == 0 ? std::pair{0LL, 1LL} : std::pair{p / g, den / g};
}

inline std::string small_mod1_str(__int128 num, long long den) {
    const auto [p, q] = small_mod1(num, den);
    return q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q);
}

}  // namespace ekmu::test
