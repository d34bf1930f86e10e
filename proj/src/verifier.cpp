#include "ekmu/verifier.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <string>

namespace ekmu {

namespace {

bool divisible_by_56(const Integer& h) {
    const Integer prod = h * (h - 1);
    return mpz_divisible_ui_p(prod.get_mpz_t(), 56) != 0;
}

const AmbiguousResidue& target_set() {
    static const AmbiguousResidue v(reduce_mod_z(Rational(1, 32)), reduce_mod_z(Rational(-1, 32)));
    return v;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Returns (g, x) with a*x = g mod b.
std::pair<std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    return {old_r, old_s};
}

std::uint64_t range_length(const IntRange& r) {
    const Integer n = r.hi - r.lo + 1;
    if (!n.fits_ulong_p()) {
        throw std::invalid_argument("range too long: " + n.get_str() + " integers");
    }
    return n.get_ui();
}

SweepSummary sweep(const IntRange& range, bool keep_rows) {
    SweepSummary s;
    if (range.empty()) {
        return s;
    }
    for (Integer h = range.lo; h <= range.hi; ++h) {
        ++s.scanned;
        if (!divisible_by_56(h)) {
            continue;
        }
        ++s.checked;
        AmbiguousResidue mu = mu_quotient_oracle(h);
        const bool pass = mu == target_set();
        if (pass) {
            ++s.passed;
        } else {
            ++s.failed;
            s.failures.push_back(h);
        }
        if (keep_rows) {
            s.rows.push_back({h, std::move(mu), pass});
        }
    }
    return s;
}

}  // namespace

ResidueSolution enumerate_residues(std::uint64_t modulus) {
    if (modulus == 0 || modulus > kMaxScanModulus) {
        throw std::invalid_argument("modulus must be in [1, " + std::to_string(kMaxScanModulus) +
                                    "], got " + std::to_string(modulus));
    }
    ResidueSolution s{modulus, {}};
    for (std::uint64_t r = 0; r < modulus; ++r) {
        // r - 1 = r + 55 mod 56
        if ((r % 56) * ((r + 55) % 56) % 56 == 0) {
            s.residues.push_back(r);
        }
    }
    return s;
}

std::int64_t crt_pair(std::int64_t a, std::int64_t m, std::int64_t b, std::int64_t n) {
    const auto [g, m_inv] = ext_gcd(floor_mod(m, n), n);
    if (g != 1) {
        throw std::invalid_argument("crt_pair: moduli not coprime");
    }
    // x = a + m * t with m * t = b - a mod n
    const std::int64_t t = floor_mod(floor_mod(b - a, n) * floor_mod(m_inv, n), n);
    return floor_mod(a + m * t, m * n);
}

ResidueSolution lift(const ResidueSolution& s, std::uint64_t m) {
    ResidueSolution out{s.modulus * m, {}};
    out.residues.reserve(s.residues.size() * m);
    for (std::uint64_t i = 0; i < m; ++i) {
        for (const std::uint64_t r : s.residues) {
            out.residues.push_back(r + i * s.modulus);
        }
    }
    return out;
}

ResidueSolution enumerate_residues_crt(std::uint64_t modulus) {
    if (modulus == 0 || modulus % 56 != 0) {
        throw std::invalid_argument("CRT construction needs a positive multiple of 56");
    }
    // 56 = 8 * 7 with gcd(r, r - 1) = 1, so 8 | r(r-1) iff r = 0, 1 mod 8, likewise mod 7.
    ResidueSolution base{56, {}};
    for (const std::int64_t a : {0, 1}) {
        for (const std::int64_t b : {0, 1}) {
            base.residues.push_back(static_cast<std::uint64_t>(crt_pair(a, 8, b, 7)));
        }
    }
    std::sort(base.residues.begin(), base.residues.end());
    return lift(base, modulus / 56);
}

IntRange parse_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        throw std::invalid_argument("expected a range a..b, got '" + std::string(text) + "'");
    }
    return {parse_integer(text.substr(0, dots)), parse_integer(text.substr(dots + 2))};
}

std::string_view to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::I: return "i";
        case CaseLabel::II: return "ii";
        case CaseLabel::III: return "iii";
        case CaseLabel::IV: return "iv";
    }
    return "?";
}

const std::vector<CaseFixture>& case_fixtures() {
    static const std::vector<CaseFixture> fixtures{
        {CaseLabel::I, 0, Rational(0), Rational(-1, 32)},
        {CaseLabel::II, 1, Rational(0), Rational(1, 32)},
        {CaseLabel::III, 8, Rational(1, 2), Rational(-1, 32) + Rational(1, 2)},
        {CaseLabel::IV, 49, Rational(0), Rational(1, 32)},
    };
    return fixtures;
}

const CaseFixture& case_fixture(CaseLabel c) { return case_fixtures().at(static_cast<std::size_t>(c)); }

CaseReport check_case(CaseLabel c, const IntRange& k_range) {
    if (k_range.empty()) {
        throw RangeEmpty();
    }
    const CaseFixture& f = case_fixture(c);
    CaseReport report{f, k_range, 0, true, std::nullopt};
    // Expected residues for even and odd k (k/2 mod Z is 0 or 1/2).
    const ResidueModZ half_k = reduce_mod_z(Rational(1, 2));
    const std::array<ResidueModZ, 2> half_c{reduce_mod_z(f.half_constant),
                                            reduce_mod_z(f.half_constant) + half_k};
    const std::array<ResidueModZ, 2> odd_c{reduce_mod_z(f.odd_constant),
                                           reduce_mod_z(f.odd_constant) + half_k};
    Integer h, prod;
    for (Integer k = k_range.lo; k <= k_range.hi; ++k) {
        ++report.checked;
        const bool odd = mpz_odd_p(k.get_mpz_t()) != 0;
        h = 56 * k + f.offset;
        prod = h * (h - 1);
        const ResidueModZ t = reduce_mod_z(Rational(prod, 112));
        const ResidueModZ x = reduce_mod_z(Rational(Integer(2 * h - 1), 32));
        const bool ok = t == half_c[odd] && x == odd_c[odd] &&
                        AmbiguousResidue(t + x, t - x) == target_set();
        if (!ok && report.matches) {
            report.matches = false;
            report.first_failure = k;
        }
    }
    return report;
}

SweepSummary& SweepSummary::merge(SweepSummary other) {
    scanned += other.scanned;
    checked += other.checked;
    passed += other.passed;
    failed += other.failed;
    failures.insert(failures.end(), std::make_move_iterator(other.failures.begin()),
                    std::make_move_iterator(other.failures.end()));
    rows.insert(rows.end(), std::make_move_iterator(other.rows.begin()),
                std::make_move_iterator(other.rows.end()));
    return *this;
}

AmbiguousResidue mu_quotient_oracle(const Integer& h) {
    const Rational t(Integer(h * (h - 1)), 112);
    const Rational x(Integer(2 * h - 1), 32);
    return AmbiguousResidue(reduce_mod_z(t + x), reduce_mod_z(t - x));
}

SweepSummary brute_force_theorem(const IntRange& h_range, bool keep_rows, unsigned workers) {
    if (h_range.empty()) {
        return {};
    }
    const std::uint64_t n = range_length(h_range);
    workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, n));
    if (workers == 1) {
        return sweep(h_range, keep_rows);
    }
    const std::uint64_t chunk = (n + workers - 1) / workers;
    std::vector<std::future<SweepSummary>> parts;
    for (std::uint64_t start = 0; start < n; start += chunk) {
        const std::uint64_t end = std::min(n, start + chunk) - 1;
        IntRange sub{h_range.lo + Integer(start), h_range.lo + Integer(end)};
        parts.push_back(std::async(std::launch::async, sweep, std::move(sub), keep_rows));
    }
    SweepSummary total;
    for (auto& p : parts) {
        total.merge(p.get());
    }
    return total;
}

}  // namespace ekmu
