#include "ekmu/milnor_bundle.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ekmu;
using namespace ekmu::test;

namespace {

MilnorBundle B(long h) { return MilnorBundle::from_h(Integer(h)); }

}  // namespace

TEST_SUITE("milnor_bundle") {

TEST_CASE("only the h + j = 1 family is accepted") {
    CHECK_NOTHROW(MilnorBundle(Integer(3), Integer(-2)));
    CHECK_THROWS_AS(MilnorBundle(Integer(2), Integer(2)), InvalidBundle);
    CHECK(B(5).j() == -4);
    CHECK(B(-7).j() == 8);
}

TEST_CASE("characteristic data") {
    for (const auto& [h, p1] : {std::pair{0L, 2L}, {1L, 2L}, {2L, 6L}, {8L, 30L}, {-7L, 30L}}) {
        const CharacteristicData c = characteristic_data(B(h));
        CHECK(c.euler_coeff == 1);
        CHECK(c.p1_coeff.magnitude() == p1);
    }
}

TEST_CASE("disk bundle invariants") {
    CHECK(disk_bundle_invariants(B(0)).signature == 1);
    CHECK(disk_bundle_invariants(B(0)).p1_squared == 4);
    CHECK(disk_bundle_invariants(B(8)).p1_squared == 900);
    CHECK(disk_bundle_invariants(B(1)).p1_squared == 4);
    CHECK(disk_bundle_invariants(B(2)).p1_squared == 36);
}

TEST_CASE("the defect equals h(h-1)/56 exactly") {
    CHECK(eells_kuiper_defect(disk_bundle_invariants(B(0))) == Rational(0));
    CHECK(eells_kuiper_defect(disk_bundle_invariants(B(8))) == Rational(1));
    CHECK(eells_kuiper_defect(disk_bundle_invariants(B(2))) == Q("1/28"));
    BigGen gen(21);
    for (int i = 0; i < 300; ++i) {
        const Integer h = gen.next();
        CHECK(eells_kuiper_defect(disk_bundle_invariants(MilnorBundle::from_h(h))) ==
              mu_closed_form(h));
    }
}

TEST_CASE("diffeomorphism criterion") {
    CHECK(is_diffeo_s7(B(0)));
    CHECK(is_diffeo_s7(B(1)));
    CHECK_FALSE(is_diffeo_s7(B(2)));
    CHECK(is_diffeo_s7(B(8)));
    CHECK(is_diffeo_s7(B(49)));
    CHECK(is_diffeo_s7(B(-7)));
    CHECK_FALSE(is_diffeo_s7(B(7)));
}

TEST_CASE("mu of the total space") {
    CHECK(mu_total_space(B(0)).is_zero());
    CHECK(mu_total_space(B(2)) == R("1/28"));
    CHECK(mu_total_space(B(8)).is_zero());
    CHECK(mu_total_space(B(5)) == R("10/28"));
}

TEST_CASE("mu matches a machine-integer oracle over a window") {
    for (long h = -300; h <= 300; ++h) {
        const __int128 prod = static_cast<__int128>(h) * (h - 1);
        CHECK(mu_total_space(B(h)).rep().to_string() == small_mod1_str(prod, 56));
    }
}

TEST_CASE("theta7 class") {
    CHECK(theta7_class(B(2)) == 1);
    CHECK(theta7_class(B(0)) == 0);
    CHECK(theta7_class(B(5)) == 10);
    CHECK(theta7_class(B(-1)) == 1);  // (-1)(-2)/2
}

TEST_CASE("properties over h mod 56 and random 256-bit h") {
    for (long r = 0; r < 56; ++r) {
        const auto b = B(r);
        const ResidueModZ mu = mu_total_space(b);
        // denominator divides 28
        CHECK(mpz_divisible_p(Integer(28).get_mpz_t(), mu.rep().denominator().get_mpz_t()));
        CHECK(Integer(theta7_class(b)) * R("1/28") == mu);
        CHECK(is_diffeo_s7(b) == mu.is_zero());
        CHECK(is_diffeo_s7(b) == (theta7_class(b) == 0));
    }
    BigGen gen(22);
    for (int i = 0; i < 300; ++i) {
        const Integer h = gen.next();
        const auto b = MilnorBundle::from_h(h);
        const ResidueModZ mu = mu_total_space(b);
        CHECK(mu == mu_total_space(MilnorBundle::from_h(1 - h)));
        CHECK(mu == mu_total_space(MilnorBundle::from_h(h + 56 * gen.next(64))));
        CHECK(Integer(theta7_class(b)) * R("1/28") == mu);
        CHECK(is_diffeo_s7(b) == mu.is_zero());
    }
}

}
