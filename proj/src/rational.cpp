#include "ekmu/rational.hpp"

#include <algorithm>
#include <sstream>

namespace ekmu {

Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    // mpz_set_str rejects a leading '+'.
    std::string s(text.front() == '+' ? text.substr(1) : text);
    return Integer(s, 10);
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_.get_num() = num;
    value_.get_den() = den;
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text.substr(0, slash)), den);
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.sign() == 0) {
        throw std::domain_error("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

ResidueModZ reduce_mod_z(const Rational& q) {
    if (q.is_integer()) {
        return ResidueModZ(Rational(0));
    }
    const Integer& den = q.raw().get_den();
    Integer num;
    mpz_fdiv_r(num.get_mpz_t(), q.raw().get_num_mpz_t(), den.get_mpz_t());
    // gcd(num mod den, den) == gcd(num, den) == 1, so the result is already reduced.
    return ResidueModZ(Rational(num, den));
}

std::string ResidueModZ::to_string() const { return rep_.to_string() + " mod 1"; }

ResidueModZ ResidueModZ::operator-() const { return reduce_mod_z(-rep_); }

ResidueModZ operator+(const ResidueModZ& a, const ResidueModZ& b) {
    return reduce_mod_z(a.rep_ + b.rep_);
}

ResidueModZ operator-(const ResidueModZ& a, const ResidueModZ& b) {
    return reduce_mod_z(a.rep_ - b.rep_);
}

ResidueModZ operator*(const Integer& n, const ResidueModZ& r) {
    return reduce_mod_z(Rational(n) * r.rep_);
}

std::ostream& operator<<(std::ostream& os, const ResidueModZ& r) { return os << r.to_string(); }

AmbiguousResidue::AmbiguousResidue(const ResidueModZ& single) : values_{single, single} {}

AmbiguousResidue::AmbiguousResidue(const ResidueModZ& a, const ResidueModZ& b) {
    if (a == b) {
        values_ = {a, a};
        size_ = 1;
    } else {
        values_ = {std::min(a, b), std::max(a, b)};
        size_ = 2;
    }
}

bool AmbiguousResidue::contains(const ResidueModZ& r) const {
    return std::find(begin(), end(), r) != end();
}

bool AmbiguousResidue::is_negation_closed() const {
    return std::all_of(begin(), end(), [this](const ResidueModZ& r) { return contains(-r); });
}

std::string AmbiguousResidue::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < size_; ++i) {
        os << (i ? ", " : "") << values_[i].rep();
    }
    os << '}';
    return os.str();
}

bool operator==(const AmbiguousResidue& a, const AmbiguousResidue& b) {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
}

std::ostream& operator<<(std::ostream& os, const AmbiguousResidue& a) { return os << a.to_string(); }

AmbiguousResidue ambiguous(const Rational& q) {
    return AmbiguousResidue(reduce_mod_z(q), reduce_mod_z(-q));
}

AmbiguousResidue add_ambiguous(const ResidueModZ& a, const ResidueModZ& b) {
    return AmbiguousResidue(a + b);
}

AmbiguousResidue add_ambiguous(const ResidueModZ& a, const AmbiguousResidue& b) {
    if (b.is_definite()) {
        return AmbiguousResidue(a + b[0]);
    }
    return AmbiguousResidue(a + b[0], a + b[1]);
}

AmbiguousResidue add_ambiguous(const AmbiguousResidue& a, const ResidueModZ& b) {
    return add_ambiguous(b, a);
}

AmbiguousResidue add_ambiguous(const AmbiguousResidue& a, const AmbiguousResidue& b) {
    if (!a.is_definite() && !b.is_definite()) {
        throw DoubleAmbiguity();
    }
    return a.is_definite() ? add_ambiguous(a[0], b) : add_ambiguous(a, b[0]);
}

}  // namespace ekmu
