#pragma once

/**
 * @file verifier.hpp
 * @brief Independent checks of the quotient invariant.
 *
 * Everything here uses only rational.hpp for its arithmetic. The brute-force
 * sweep re-derives mu(M_h/tau_h) from scratch so that a mistake in
 * quotient_invariant.cpp cannot hide behind itself.
 */

#include "ekmu/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace ekmu {

/// Moduli above this are refused by enumerate_residues.
inline constexpr std::uint64_t kMaxScanModulus = 1'000'000;

struct ResidueSolution {
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> residues;  // ascending, in [0, modulus)

    friend bool operator==(const ResidueSolution&, const ResidueSolution&) = default;
};

/// All r in [0, modulus) with 56 | r(r - 1), by exhaustive scan.
ResidueSolution enumerate_residues(std::uint64_t modulus);

/// Same set built from r = 0, 1 mod 8 and r = 0, 1 mod 7 glued by the Chinese
/// remainder theorem and then lifted. Requires 56 | modulus.
ResidueSolution enumerate_residues_crt(std::uint64_t modulus);

/// The m-fold lift {r + i * s.modulus : 0 <= i < m}.
ResidueSolution lift(const ResidueSolution& s, std::uint64_t m);

/// x with x = a mod m and x = b mod n for coprime m, n; x in [0, m*n).
std::int64_t crt_pair(std::int64_t a, std::int64_t m, std::int64_t b, std::int64_t n);

/// Inclusive integer interval.
struct IntRange {
    Integer lo;
    Integer hi;

    bool empty() const { return lo > hi; }
};

/// Parses "a..b" (inclusive). Throws std::invalid_argument.
IntRange parse_range(std::string_view text);

struct RangeEmpty : std::invalid_argument {
    RangeEmpty() : std::invalid_argument("empty range") {}
};

/// h = 56k + {0, 1, 8, 49}.
enum class CaseLabel { I, II, III, IV };

std::string_view to_string(CaseLabel c);

struct CaseFixture {
    CaseLabel label;
    long offset;             ///< h = 56k + offset
    Rational half_constant;  ///< h(h-1)/112 = half_constant + k/2 mod Z
    Rational odd_constant;   ///< (2h-1)/32  = odd_constant + k/2 mod Z
};

/// The four congruences from the case analysis, transcribed as fixtures.
const std::vector<CaseFixture>& case_fixtures();
const CaseFixture& case_fixture(CaseLabel c);

struct CaseReport {
    CaseFixture fixture;
    IntRange k_range;
    std::uint64_t checked = 0;
    bool matches = true;
    std::optional<Integer> first_failure;  ///< smallest failing k
};

/// Checks the case's two congruences and the resulting ±1/32 for every k in
/// the range. Throws RangeEmpty.
CaseReport check_case(CaseLabel c, const IntRange& k_range);

struct SweepRow {
    Integer h;
    AmbiguousResidue mu;
    bool pass;
};

struct SweepSummary {
    std::uint64_t scanned = 0;  ///< integers in the range
    std::uint64_t checked = 0;  ///< those with 56 | h(h-1)
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::vector<Integer> failures;
    std::vector<SweepRow> rows;  ///< filled only when requested, ordered by h

    bool ok() const { return failed == 0; }

    /// Concatenates a sweep over the range directly above this one.
    SweepSummary& merge(SweepSummary other);
};

/// Direct evaluation of h(h-1)/112 ± (2h-1)/32 mod Z.
AmbiguousResidue mu_quotient_oracle(const Integer& h);

/// Evaluates the oracle at every h in range with 56 | h(h-1) and compares
/// against {1/32, 31/32}. Failures are reported, never thrown. With
/// workers > 1 the range is split into contiguous chunks swept concurrently.
SweepSummary brute_force_theorem(const IntRange& h_range, bool keep_rows = false,
                                 unsigned workers = 1);

}  // namespace ekmu
