#pragma once

// Milnor S^3-bundles over S^4 with clutching u -> (v -> u^h v u^j), restricted
// to the family j = 1 - h whose total spaces M_h are homotopy 7-spheres.

#include "ekmu/rational.hpp"

#include <stdexcept>

namespace ekmu {

struct InvalidBundle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class MilnorBundle {
public:
    /// Throws InvalidBundle unless h + j == 1.
    MilnorBundle(Integer h, Integer j);

    static MilnorBundle from_h(Integer h);

    const Integer& h() const { return h_; }
    const Integer& j() const { return j_; }

    friend bool operator==(const MilnorBundle&, const MilnorBundle&) = default;

private:
    Integer h_;
    Integer j_;
};

/// Euler and first Pontryagin class of the bundle, as multiples of the
/// generator x of H^4(S^4; Z). The Pontryagin class is only fixed up to the
/// orientation sign.
struct CharacteristicData {
    Integer euler_coeff;
    PlusMinus<Integer> p1_coeff;  // ±2(2h - 1)
};

struct DiskBundleInvariants {
    Integer signature;
    Integer p1_squared;  // Pontryagin number p1^2[N_h]; sign-free
};

CharacteristicData characteristic_data(const MilnorBundle& b);

DiskBundleInvariants disk_bundle_invariants(const MilnorBundle& b);

/// p1^2 / (2^7 * 7) - Sign / (2^5 * 7), as an exact rational.
Rational eells_kuiper_defect(const DiskBundleInvariants& n);

/// h(h - 1) / 56, as an exact rational.
Rational mu_closed_form(const Integer& h);

/// True iff M_h is diffeomorphic to the standard S^7, i.e. 56 | h(h - 1).
bool is_diffeo_s7(const MilnorBundle& b);

/// Eells-Kuiper invariant of M_h. Computed from the disk bundle invariants
/// and from the closed form; throws std::logic_error if the two disagree.
ResidueModZ mu_total_space(const MilnorBundle& b);

/// Class of M_h in Theta(7) ~ Z/28 as a multiple of the generator M_2:
/// h(h - 1)/2 mod 28, in [0, 28).
int theta7_class(const MilnorBundle& b);

}  // namespace ekmu
