#pragma once

/**
 * @file quotient_invariant.hpp
 * @brief Eells-Kuiper invariant of the quotient M_h / tau_h.
 *
 * tau_h is the fibrewise antipodal involution. It extends to the disk bundle
 * N_h with fixed set the zero section S^4, and the equivariant index theorem
 * localises the correction terms there:
 *
 *   mu(M_h/tau_h) = h(h-1)/112 + A1/2 + (A2 - Sign(N_h, tau_h)) / (2^6 * 7)  mod Z
 *
 * with A1 = ±p1(W_h)/32 = ±(2h-1)/16, A2 = e(W_h) = 1 and Sign(N_h, tau_h) = 1,
 * W_h being the normal bundle of S^4 in N_h. This collapses to
 *
 *   mu(M_h/tau_h) = h(h-1)/112 ± (2h-1)/32  mod Z.
 *
 * The formula is only meaningful when M_h is a standard S^7; in that case the
 * quotient is either RP^7 (mu = ±1/32) or RP^7 # 14 M_2 (mu = ±1/32 + 1/2).
 */

#include "ekmu/milnor_bundle.hpp"
#include "ekmu/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>

namespace ekmu {

struct NotDiffeoS7 : std::domain_error {
    explicit NotDiffeoS7(const Integer& h);
};

struct DichotomyViolation : std::logic_error {
    DichotomyViolation(const Integer& h, const AmbiguousResidue& mu);
};

struct FixedPointContributions {
    PlusMinus<Rational> a1;  ///< ±(2h-1)/16, integral of the spin contribution over S^4
    Rational a2;             ///< Euler number of the normal bundle, always 1
    Integer equivariant_signature;  ///< Sign(N_h, tau_h), always 1
};

enum class QuotientType { RealProjective7, RealProjective7Sum14M2, NotApplicable };

std::string_view to_string(QuotientType t);

struct QuotientReport {
    Integer h;
    FixedPointContributions contributions;
    std::optional<AmbiguousResidue> mu_quotient;  ///< empty when NotApplicable
    QuotientType verdict = QuotientType::NotApplicable;
};

/// mu(RP^7) = ±1/32
const AmbiguousResidue& mu_rp7();
/// mu(RP^7 # 14 M_2) = ±1/32 + 1/2
const AmbiguousResidue& mu_rp7_sum_14m2();

FixedPointContributions fixed_point_contributions(const MilnorBundle& b);

/// h(h-1)/112 + ±(2h-1)/32 mod Z, evaluated directly.
AmbiguousResidue mu_quotient_closed_form(const MilnorBundle& b);

/// Term-by-term assembly from the disk bundle invariants and the fixed point
/// contributions.
AmbiguousResidue mu_quotient_assembled(const MilnorBundle& b);

/// Throws NotDiffeoS7 if 56 does not divide h(h-1). Both evaluation routes are
/// run and must agree (std::logic_error otherwise).
AmbiguousResidue mu_quotient(const MilnorBundle& b);

/// Throws DichotomyViolation if mu matches neither RP^7 nor RP^7 # 14 M_2.
QuotientReport classify_quotient(const MilnorBundle& b);

}  // namespace ekmu
