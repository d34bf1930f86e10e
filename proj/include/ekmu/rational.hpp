#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals and residues in Q/Z.
 *
 * Rational is an arbitrary-precision fraction kept in lowest terms with a
 * positive denominator. ResidueModZ is a class in Q/Z, stored through its
 * representative in [0, 1). AmbiguousResidue is a set of one or two residues
 * used for values that are only known up to an orientation sign, e.g. ±1/32.
 */

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ekmu {

using Integer = mpz_class;

/// Parses a base-10 integer with optional leading sign. Throws std::invalid_argument.
Integer parse_integer(std::string_view text);

class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p" or "p/q". Throws std::invalid_argument on malformed input or q == 0.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Largest integer not exceeding this value.
    Integer floor() const;

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;  // mpq_class keeps itself canonical after every arithmetic op
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// A class in Q/Z. The stored representative always lies in [0, 1).
class ResidueModZ {
public:
    ResidueModZ() = default;

    const Rational& rep() const { return rep_; }
    bool is_zero() const { return rep_.sign() == 0; }

    /// "p/q mod 1"
    std::string to_string() const;

    ResidueModZ operator-() const;
    friend ResidueModZ operator+(const ResidueModZ& a, const ResidueModZ& b);
    friend ResidueModZ operator-(const ResidueModZ& a, const ResidueModZ& b);
    friend ResidueModZ operator*(const Integer& n, const ResidueModZ& r);

    friend bool operator==(const ResidueModZ&, const ResidueModZ&) = default;
    friend auto operator<=>(const ResidueModZ& a, const ResidueModZ& b) { return a.rep_ <=> b.rep_; }

private:
    friend ResidueModZ reduce_mod_z(const Rational& q);
    explicit ResidueModZ(Rational rep) : rep_(std::move(rep)) {}

    Rational rep_;
};

std::ostream& operator<<(std::ostream& os, const ResidueModZ& r);

/// Canonical representative of q + Z in [0, 1).
ResidueModZ reduce_mod_z(const Rational& q);

struct DoubleAmbiguity : std::logic_error {
    DoubleAmbiguity()
        : std::logic_error("cannot add two independent sign ambiguities") {}
};

/**
 * A set of one or two residues.
 *
 * Built by ambiguous(q) it is {q, -q} mod Z and therefore closed under
 * negation. Adding a definite residue t gives {t + q, t - q}, which stays
 * negation-closed only for t in {0, 1/2}; otherwise it is a shifted pair.
 * Equality is always set equality.
 */
class AmbiguousResidue {
public:
    explicit AmbiguousResidue(const ResidueModZ& single);
    AmbiguousResidue(const ResidueModZ& a, const ResidueModZ& b);

    std::size_t size() const { return size_; }
    bool is_definite() const { return size_ == 1; }
    const ResidueModZ& operator[](std::size_t i) const { return values_.at(i); }
    const ResidueModZ* begin() const { return values_.data(); }
    const ResidueModZ* end() const { return values_.data() + size_; }

    bool contains(const ResidueModZ& r) const;
    bool is_negation_closed() const;

    /// Sorted representatives, e.g. {1/32, 31/32}.
    std::string to_string() const;

    friend bool operator==(const AmbiguousResidue& a, const AmbiguousResidue& b);

private:
    std::array<ResidueModZ, 2> values_;  // ascending; values_[1] unused when size_ == 1
    std::size_t size_ = 1;
};

std::ostream& operator<<(std::ostream& os, const AmbiguousResidue& a);

/// {q mod Z, -q mod Z}
AmbiguousResidue ambiguous(const Rational& q);

AmbiguousResidue add_ambiguous(const ResidueModZ& a, const ResidueModZ& b);
AmbiguousResidue add_ambiguous(const ResidueModZ& a, const AmbiguousResidue& b);
AmbiguousResidue add_ambiguous(const AmbiguousResidue& a, const ResidueModZ& b);
/// Throws DoubleAmbiguity when both arguments hold two elements.
AmbiguousResidue add_ambiguous(const AmbiguousResidue& a, const AmbiguousResidue& b);

/// A quantity known only up to sign: ±magnitude, magnitude >= 0.
template <typename T>
class PlusMinus {
public:
    PlusMinus() = default;
    explicit PlusMinus(const T& value) : magnitude_(value < T(0) ? T(-value) : value) {}

    const T& magnitude() const { return magnitude_; }
    /// {-magnitude, +magnitude}
    std::array<T, 2> values() const { return {T(-magnitude_), magnitude_}; }

    friend bool operator==(const PlusMinus&, const PlusMinus&) = default;

private:
    T magnitude_{};
};

}  // namespace ekmu
