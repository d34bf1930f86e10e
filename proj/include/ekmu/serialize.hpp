#pragma once

// JSON and CSV forms of the library's records. Rationals are always exact
// "p/q" strings; value sets are ascending arrays of such strings.
// Arbitrary-precision integers (h, p1 data) are decimal strings so that
// 256-bit values survive any JSON reader.

#include "ekmu/milnor_bundle.hpp"
#include "ekmu/quotient_invariant.hpp"
#include "ekmu/rational.hpp"
#include "ekmu/verifier.hpp"

#include <json.hpp>

#include <string>

namespace ekmu {

nlohmann::ordered_json to_json(const AmbiguousResidue& a);
/// Sorted pair ["-m", "m"].
nlohmann::ordered_json to_json(const PlusMinus<Rational>& v);

/// {h, euler, p1_magnitude, signature, p1_squared, mu, diffeo_s7, theta7}
nlohmann::ordered_json invariants_json(const MilnorBundle& b);

/// {h, a1, a2, equivariant_signature, mu_quotient, verdict}
nlohmann::ordered_json to_json(const QuotientReport& r);

nlohmann::ordered_json to_json(const ResidueSolution& s);
nlohmann::ordered_json to_json(const CaseReport& r);
nlohmann::ordered_json to_json(const SweepSummary& s);

/// "1/32;31/32", for CSV cells.
std::string join_set(const AmbiguousResidue& a);

/// Header line without trailing newline.
std::string csv_header(std::initializer_list<std::string_view> columns);

}  // namespace ekmu
