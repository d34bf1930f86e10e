#include "ekmu/quotient_invariant.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ekmu;
using namespace ekmu::test;

namespace {

MilnorBundle B(long h) { return MilnorBundle::from_h(Integer(h)); }

// Smallest representative of the residue class r mod 56 shifted by 56 * n.
Integer in_class(const Integer& n, long r) { return 56 * n + r; }

}  // namespace

TEST_SUITE("quotient_invariant") {

TEST_CASE("fixed point contributions") {
    for (const auto& [h, a1] : {std::pair{0L, "1/16"}, {8L, "15/16"}, {1L, "1/16"}, {49L, "97/16"}}) {
        const FixedPointContributions fp = fixed_point_contributions(B(h));
        CHECK(fp.a1.magnitude() == Q(a1));
        CHECK(fp.a2 == Rational(1));
        CHECK(fp.equivariant_signature == 1);
    }
}

TEST_CASE("target sets") {
    CHECK(mu_rp7() == Set("1/32", "31/32"));
    CHECK(mu_rp7_sum_14m2() == Set("15/32", "17/32"));
    CHECK(mu_rp7_sum_14m2() == add_ambiguous(R("1/2"), mu_rp7()));
}

TEST_CASE("mu of the quotient: fixtures") {
    CHECK(mu_quotient(B(0)) == Set("1/32", "31/32"));
    CHECK(mu_quotient(B(8)) == Set("1/32", "31/32"));
    CHECK(mu_quotient(B(49)) == Set("1/32", "31/32"));
    CHECK(mu_quotient(B(1)) == Set("1/32", "31/32"));
    CHECK(mu_quotient(B(-7)) == Set("1/32", "31/32"));
}

TEST_CASE("mu of the quotient is refused when M_h is exotic") {
    CHECK_THROWS_AS(mu_quotient(B(2)), NotDiffeoS7);
    CHECK_THROWS_AS(mu_quotient(B(7)), NotDiffeoS7);
    // The closed form itself still evaluates; for h = 2 it is a shifted pair.
    const AmbiguousResidue raw = mu_quotient_closed_form(B(2));
    CHECK(raw == Set("25/224", "207/224"));
    CHECK_FALSE(raw.is_negation_closed());
}

TEST_CASE("closed form and assembly agree for every h, valid or not") {
    for (long h = -500; h <= 500; ++h) {
        CHECK(mu_quotient_closed_form(B(h)) == mu_quotient_assembled(B(h)));
    }
}

TEST_CASE("classification") {
    CHECK(classify_quotient(B(0)).verdict == QuotientType::RealProjective7);
    CHECK(classify_quotient(B(1)).verdict == QuotientType::RealProjective7);
    CHECK(classify_quotient(B(8)).verdict == QuotientType::RealProjective7);
    CHECK(classify_quotient(B(49)).verdict == QuotientType::RealProjective7);

    const QuotientReport r2 = classify_quotient(B(2));
    CHECK(r2.verdict == QuotientType::NotApplicable);
    CHECK_FALSE(r2.mu_quotient.has_value());
    CHECK(r2.contributions.a1.magnitude() == Q("3/16"));

    CHECK(to_string(QuotientType::RealProjective7) == "RP7");
    CHECK(to_string(QuotientType::RealProjective7Sum14M2) == "RP7#14M2");
    CHECK(to_string(QuotientType::NotApplicable) == "not_applicable");
}

TEST_CASE("verdict is RP7 for every valid h in a window") {
    for (long h = -2000; h <= 2000; ++h) {
        const QuotientReport r = classify_quotient(B(h));
        if (is_diffeo_s7(B(h))) {
            REQUIRE(r.verdict == QuotientType::RealProjective7);
            CHECK(*r.mu_quotient == mu_rp7());
        } else {
            CHECK(r.verdict == QuotientType::NotApplicable);
        }
    }
}

TEST_CASE("symmetry and periodicity on random 256-bit h in valid classes") {
    BigGen gen(31);
    const long classes[] = {0, 1, 8, 49};
    for (int i = 0; i < 300; ++i) {
        const Integer h = in_class(gen.next(), classes[gen.below(4)]);
        const AmbiguousResidue mu = mu_quotient(MilnorBundle::from_h(h));
        CHECK(mu == mu_rp7());
        CHECK(mu == mu_quotient(MilnorBundle::from_h(1 - h)));
        CHECK(mu == mu_quotient(MilnorBundle::from_h(h + 56 * gen.next(64))));
    }
}

}
