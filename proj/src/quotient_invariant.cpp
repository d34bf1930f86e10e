#include "ekmu/quotient_invariant.hpp"

namespace ekmu {

NotDiffeoS7::NotDiffeoS7(const Integer& h)
    : std::domain_error("M_h is not diffeomorphic to S^7 for h = " + h.get_str() +
                        " (56 does not divide h(h-1))") {}

DichotomyViolation::DichotomyViolation(const Integer& h, const AmbiguousResidue& mu)
    : std::logic_error("mu(M_h/tau_h) = " + mu.to_string() + " at h = " + h.get_str() +
                       " matches neither RP^7 nor RP^7 # 14 M_2") {}

std::string_view to_string(QuotientType t) {
    switch (t) {
        case QuotientType::RealProjective7: return "RP7";
        case QuotientType::RealProjective7Sum14M2: return "RP7#14M2";
        case QuotientType::NotApplicable: return "not_applicable";
    }
    return "?";
}

const AmbiguousResidue& mu_rp7() {
    static const AmbiguousResidue v(reduce_mod_z(Rational(1, 32)), reduce_mod_z(Rational(31, 32)));
    return v;
}

const AmbiguousResidue& mu_rp7_sum_14m2() {
    static const AmbiguousResidue v(reduce_mod_z(Rational(15, 32)), reduce_mod_z(Rational(17, 32)));
    return v;
}

FixedPointContributions fixed_point_contributions(const MilnorBundle& b) {
    // tau_h acts by -1 on W_h, and W_h is the bundle itself restricted to the
    // zero section, so its characteristic classes are those of the bundle.
    const CharacteristicData w = characteristic_data(b);
    return {PlusMinus<Rational>(Rational(w.p1_coeff.magnitude(), 32)), Rational(w.euler_coeff),
            Integer(1)};
}

AmbiguousResidue mu_quotient_closed_form(const MilnorBundle& b) {
    const Integer& h = b.h();
    const ResidueModZ definite = reduce_mod_z(Rational(Integer(h * (h - 1)), 112));
    return add_ambiguous(definite, ambiguous(Rational(Integer(2 * h - 1), 32)));
}

AmbiguousResidue mu_quotient_assembled(const MilnorBundle& b) {
    // Half of the total-space defect: the double cover halves the p1^2 and
    // signature terms. This must be halved as a rational, not mod Z.
    const Rational half_defect = eells_kuiper_defect(disk_bundle_invariants(b)) / Rational(2);
    const FixedPointContributions fp = fixed_point_contributions(b);
    const Rational signature_terms =
        (fp.a2 - Rational(fp.equivariant_signature)) / Rational(64 * 7);
    const ResidueModZ definite = reduce_mod_z(half_defect + signature_terms);
    return add_ambiguous(definite, ambiguous(fp.a1.magnitude() / Rational(2)));
}

AmbiguousResidue mu_quotient(const MilnorBundle& b) {
    if (!is_diffeo_s7(b)) {
        throw NotDiffeoS7(b.h());
    }
    AmbiguousResidue closed = mu_quotient_closed_form(b);
    const AmbiguousResidue assembled = mu_quotient_assembled(b);
    if (!(closed == assembled)) {
        throw std::logic_error("mu(M_h/tau_h) mismatch at h = " + b.h().get_str() + ": " +
                               closed.to_string() + " vs " + assembled.to_string());
    }
    return closed;
}

QuotientReport classify_quotient(const MilnorBundle& b) {
    QuotientReport report{b.h(), fixed_point_contributions(b), std::nullopt,
                          QuotientType::NotApplicable};
    if (!is_diffeo_s7(b)) {
        return report;
    }
    report.mu_quotient = mu_quotient(b);
    if (*report.mu_quotient == mu_rp7()) {
        report.verdict = QuotientType::RealProjective7;
    } else if (*report.mu_quotient == mu_rp7_sum_14m2()) {
        report.verdict = QuotientType::RealProjective7Sum14M2;
    } else {
        throw DichotomyViolation(b.h(), *report.mu_quotient);
    }
    return report;
}

}  // namespace ekmu
