#include "ekmu/milnor_bundle.hpp"

namespace ekmu {

MilnorBundle::MilnorBundle(Integer h, Integer j) : h_(std::move(h)), j_(std::move(j)) {
    if (h_ + j_ != 1) {
        throw InvalidBundle("only the family j = 1 - h is supported, got h = " + h_.get_str() +
                            ", j = " + j_.get_str());
    }
}

MilnorBundle MilnorBundle::from_h(Integer h) {
    Integer j = 1 - h;
    return MilnorBundle(std::move(h), std::move(j));
}

CharacteristicData characteristic_data(const MilnorBundle& b) {
    // e = x and p1 = ±2(h - j) x; with j = 1 - h that is ±2(2h - 1) x.
    const Integer h_minus_j = b.h() - b.j();
    return {Integer(1), PlusMinus<Integer>(Integer(2 * h_minus_j))};
}

DiskBundleInvariants disk_bundle_invariants(const MilnorBundle& b) {
    const CharacteristicData c = characteristic_data(b);
    // H^4(N_h) is generated by the pullback of x with self-intersection e = 1,
    // so p1^2[N_h] = p1_coeff^2 * e and the signature is sgn(e).
    const Integer& p = c.p1_coeff.magnitude();
    return {Integer(sgn(c.euler_coeff)), Integer(p * p * c.euler_coeff)};
}

Rational eells_kuiper_defect(const DiskBundleInvariants& n) {
    return Rational(n.p1_squared, 128 * 7) - Rational(n.signature, 32 * 7);
}

Rational mu_closed_form(const Integer& h) { return Rational(Integer(h * (h - 1)), 56); }

bool is_diffeo_s7(const MilnorBundle& b) {
    const Integer prod = b.h() * (b.h() - 1);
    return mpz_divisible_ui_p(prod.get_mpz_t(), 56) != 0;
}

ResidueModZ mu_total_space(const MilnorBundle& b) {
    const ResidueModZ from_bundle = reduce_mod_z(eells_kuiper_defect(disk_bundle_invariants(b)));
    const ResidueModZ closed = reduce_mod_z(mu_closed_form(b.h()));
    if (from_bundle != closed) {
        throw std::logic_error("mu(M_h) mismatch at h = " + b.h().get_str() + ": " +
                               from_bundle.to_string() + " vs " + closed.to_string());
    }
    return closed;
}

int theta7_class(const MilnorBundle& b) {
    const Integer half = b.h() * (b.h() - 1) / 2;  // h(h - 1) is always even
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), half.get_mpz_t(), 28);
    return static_cast<int>(r.get_si());
}

}  // namespace ekmu
