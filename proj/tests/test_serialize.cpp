#include "ekmu/serialize.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ekmu;
using namespace ekmu::test;
using json = nlohmann::ordered_json;

TEST_SUITE("serialize") {

TEST_CASE("invariants record") {
    const json j = invariants_json(MilnorBundle::from_h(Integer(8)));
    CHECK(j == json{{"h", "8"},           {"euler", 1},        {"p1_magnitude", "30"},
                    {"signature", 1},     {"p1_squared", "900"}, {"mu", "0"},
                    {"diffeo_s7", true},  {"theta7", 0}});
    const json j2 = invariants_json(MilnorBundle::from_h(Integer(2)));
    CHECK(j2["mu"] == "1/28");
    CHECK(j2["theta7"] == 1);
    CHECK(j2["diffeo_s7"] == false);
}

TEST_CASE("quotient record") {
    const json j = to_json(classify_quotient(MilnorBundle::from_h(Integer(8))));
    CHECK(j["h"] == "8");
    CHECK(j["a1"] == json::array({"-15/16", "15/16"}));
    CHECK(j["a2"] == "1");
    CHECK(j["equivariant_signature"] == 1);
    CHECK(j["mu_quotient"] == json::array({"1/32", "31/32"}));
    CHECK(j["verdict"] == "RP7");

    const json n = to_json(classify_quotient(MilnorBundle::from_h(Integer(2))));
    CHECK(n["mu_quotient"].is_null());
    CHECK(n["verdict"] == "not_applicable");
}

TEST_CASE("large h survives as a decimal string") {
    const Integer h = Integer(56) * parse_integer("123456789012345678901234567890123456789") + 49;
    const json j = json::parse(invariants_json(MilnorBundle::from_h(h)).dump());
    CHECK(parse_integer(j["h"].get<std::string>()) == h);
    CHECK(j["mu"] == "0");
}

TEST_CASE("sets and headers") {
    CHECK(join_set(Set("31/32", "1/32")) == "1/32;31/32");
    CHECK(join_set(AmbiguousResidue(R("1/2"))) == "1/2");
    CHECK(to_json(ambiguous(Q("0"))) == json::array({"0"}));
    CHECK(csv_header({"a", "b", "c"}) == "a,b,c");
}

TEST_CASE("case report record") {
    const json j = to_json(check_case(CaseLabel::III, IntRange{Integer(-1), Integer(1)}));
    CHECK(j["case"] == "iii");
    CHECK(j["half_constant"] == "1/2");
    CHECK(j["odd_constant"] == "15/32");
    CHECK(j["checked"] == 3);
    CHECK(j["matches"] == true);
    CHECK(j["first_failure"].is_null());
}

}
