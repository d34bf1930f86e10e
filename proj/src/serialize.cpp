#include "ekmu/serialize.hpp"

namespace ekmu {

using json = nlohmann::ordered_json;

json to_json(const AmbiguousResidue& a) {
    json out = json::array();
    for (const ResidueModZ& r : a) {
        out.push_back(r.rep().to_string());
    }
    return out;
}

json to_json(const PlusMinus<Rational>& v) {
    const auto [neg, pos] = v.values();
    if (neg == pos) {
        return json::array({pos.to_string()});
    }
    return json::array({neg.to_string(), pos.to_string()});
}

json invariants_json(const MilnorBundle& b) {
    const CharacteristicData c = characteristic_data(b);
    const DiskBundleInvariants n = disk_bundle_invariants(b);
    return {
        {"h", b.h().get_str()},
        {"euler", c.euler_coeff.get_si()},
        {"p1_magnitude", c.p1_coeff.magnitude().get_str()},
        {"signature", n.signature.get_si()},
        {"p1_squared", n.p1_squared.get_str()},
        {"mu", mu_total_space(b).rep().to_string()},
        {"diffeo_s7", is_diffeo_s7(b)},
        {"theta7", theta7_class(b)},
    };
}

json to_json(const QuotientReport& r) {
    return {
        {"h", r.h.get_str()},
        {"a1", to_json(r.contributions.a1)},
        {"a2", r.contributions.a2.to_string()},
        {"equivariant_signature", r.contributions.equivariant_signature.get_si()},
        {"mu_quotient", r.mu_quotient ? to_json(*r.mu_quotient) : json(nullptr)},
        {"verdict", std::string(to_string(r.verdict))},
    };
}

json to_json(const ResidueSolution& s) {
    return {{"modulus", s.modulus}, {"residues", s.residues}};
}

json to_json(const CaseReport& r) {
    return {
        {"case", std::string(to_string(r.fixture.label))},
        {"offset", r.fixture.offset},
        {"half_constant", r.fixture.half_constant.to_string()},
        {"odd_constant", r.fixture.odd_constant.to_string()},
        {"k_range", {r.k_range.lo.get_str(), r.k_range.hi.get_str()}},
        {"checked", r.checked},
        {"matches", r.matches},
        {"first_failure", r.first_failure ? json(r.first_failure->get_str()) : json(nullptr)},
    };
}

json to_json(const SweepSummary& s) {
    json failures = json::array();
    for (const Integer& h : s.failures) {
        failures.push_back(h.get_str());
    }
    return {{"scanned", s.scanned}, {"checked", s.checked}, {"passed", s.passed},
            {"failed", s.failed},   {"failures", failures}};
}

std::string join_set(const AmbiguousResidue& a) {
    std::string out;
    for (const ResidueModZ& r : a) {
        if (!out.empty()) {
            out += ';';
        }
        out += r.rep().to_string();
    }
    return out;
}

std::string csv_header(std::initializer_list<std::string_view> columns) {
    std::string out;
    for (const auto c : columns) {
        if (!out.empty()) {
            out += ',';
        }
        out += c;
    }
    return out;
}

}  // namespace ekmu
