#include "ekmu/cli.hpp"

#include "ekmu/milnor_bundle.hpp"
#include "ekmu/quotient_invariant.hpp"
#include "ekmu/serialize.hpp"
#include "ekmu/verifier.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <map>

namespace ekmu::cli {

namespace {

enum class Format { Table, Json, Csv };

const std::map<std::string, Format> kFormats{
    {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <typename F>
auto usage_guard(F&& f) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void print_json(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << '\n'; }

void print_table(std::ostream& out, const nlohmann::ordered_json& j) {
    std::size_t width = 0;
    for (const auto& [key, _] : j.items()) {
        width = std::max(width, key.size());
    }
    for (const auto& [key, value] : j.items()) {
        out << key << std::string(width - key.size() + 2, ' ')
            << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

std::string csv_cell(const nlohmann::ordered_json& v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_array()) {
        std::string s;
        for (const auto& e : v) {
            s += (s.empty() ? "" : ";") + csv_cell(e);
        }
        return s;
    }
    return v.is_null() ? "" : v.dump();
}

void print_csv_record(std::ostream& out, const nlohmann::ordered_json& j, bool header) {
    std::string names, cells;
    for (const auto& [key, value] : j.items()) {
        names += (names.empty() ? "" : ",") + key;
        cells += (cells.empty() ? "" : ",") + csv_cell(value);
    }
    if (header) {
        out << names << '\n';
    }
    out << cells << '\n';
}

void emit(std::ostream& out, Format f, const nlohmann::ordered_json& j) {
    switch (f) {
        case Format::Table: print_table(out, j); break;
        case Format::Json: print_json(out, j); break;
        case Format::Csv: print_csv_record(out, j, true); break;
    }
}

int cmd_invariants(const std::string& h_text, Format f, std::ostream& out) {
    const auto b = MilnorBundle::from_h(usage_guard([&] { return parse_integer(h_text); }));
    emit(out, f, invariants_json(b));
    return kExitOk;
}

int cmd_quotient(const std::string& h_text, Format f, std::ostream& out) {
    const auto b = MilnorBundle::from_h(usage_guard([&] { return parse_integer(h_text); }));
    emit(out, f, to_json(classify_quotient(b)));
    return kExitOk;
}

int cmd_enumerate(std::uint64_t modulus, Format f, std::ostream& out) {
    const ResidueSolution s = usage_guard([&] { return enumerate_residues(modulus); });
    nlohmann::ordered_json j = to_json(s);
    bool ok = true;
    if (modulus % 56 == 0) {
        ok = enumerate_residues_crt(modulus) == s;
        j["crt_agrees"] = ok;
    } else {
        j["crt_agrees"] = nullptr;
    }
    if (f == Format::Csv) {
        out << "residue\n";
        for (const auto r : s.residues) {
            out << r << '\n';
        }
    } else {
        emit(out, f, j);
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_cases(const std::string& k_text, Format f, std::ostream& out) {
    const IntRange k = usage_guard([&] { return parse_range(k_text); });
    if (k.empty()) {
        throw UsageError("k-range is empty");
    }
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    bool ok = true;
    for (const CaseFixture& fx : case_fixtures()) {
        const CaseReport r = check_case(fx.label, k);
        ok = ok && r.matches;
        reports.push_back(to_json(r));
    }
    switch (f) {
        case Format::Json: print_json(out, reports); break;
        case Format::Csv:
            for (std::size_t i = 0; i < reports.size(); ++i) {
                print_csv_record(out, reports[i], i == 0);
            }
            break;
        case Format::Table:
            for (std::size_t i = 0; i < reports.size(); ++i) {
                out << (i ? "\n" : "");
                print_table(out, reports[i]);
            }
            break;
    }
    return ok ? kExitOk : kExitCheckFailed;
}

struct VerifyRow {
    Integer h;
    AmbiguousResidue mu;
    QuotientType verdict;
    bool pass;
};

int cmd_verify(const std::string& h_text, unsigned workers, Format f, std::ostream& out,
               std::ostream& err) {
    const IntRange range = usage_guard([&] { return parse_range(h_text); });
    if (range.empty()) {
        throw UsageError("h-range is empty");
    }
    const auto start = std::chrono::steady_clock::now();
    SweepSummary summary = usage_guard([&] { return brute_force_theorem(range, true, workers); });

    // Every oracle row must also agree with the classification pipeline.
    std::vector<VerifyRow> rows;
    rows.reserve(summary.rows.size());
    std::uint64_t discrepancies = 0;
    for (SweepRow& row : summary.rows) {
        const QuotientReport q = classify_quotient(MilnorBundle::from_h(row.h));
        const bool agree = q.mu_quotient && *q.mu_quotient == row.mu;
        if (!agree) {
            ++discrepancies;
        }
        const bool pass = row.pass && agree && q.verdict == QuotientType::RealProjective7;
        rows.push_back({std::move(row.h), std::move(row.mu), q.verdict, pass});
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "verify: " << summary.checked << " of " << summary.scanned << " h checked with "
        << workers << " worker(s) in " << secs << " s\n";

    const bool ok = summary.ok() && discrepancies == 0;
    switch (f) {
        case Format::Csv:
            out << csv_header({"h", "residue_class", "mu_quotient_set", "verdict", "pass"}) << '\n';
            for (const VerifyRow& r : rows) {
                Integer cls;
                mpz_fdiv_r_ui(cls.get_mpz_t(), r.h.get_mpz_t(), 56);
                out << r.h.get_str() << ',' << cls.get_str() << ',' << join_set(r.mu) << ','
                    << to_string(r.verdict) << ',' << (r.pass ? "true" : "false") << '\n';
            }
            break;
        case Format::Json: {
            nlohmann::ordered_json j = to_json(summary);
            j["h_range"] = {range.lo.get_str(), range.hi.get_str()};
            j["pipeline_discrepancies"] = discrepancies;
            nlohmann::ordered_json js = nlohmann::ordered_json::array();
            for (const VerifyRow& r : rows) {
                js.push_back({{"h", r.h.get_str()},
                              {"mu_quotient", to_json(r.mu)},
                              {"verdict", std::string(to_string(r.verdict))},
                              {"pass", r.pass}});
            }
            j["rows"] = std::move(js);
            print_json(out, j);
            break;
        }
        case Format::Table: {
            nlohmann::ordered_json j = to_json(summary);
            j["pipeline_discrepancies"] = discrepancies;
            j["result"] = ok ? "pass" : "FAIL";
            print_table(out, j);
            break;
        }
    }
    return ok ? kExitOk : kExitCheckFailed;
}

unsigned default_workers() {
    const char* env = std::getenv(kParallelEnv);
    if (env == nullptr || *env == '\0') {
        return 1;
    }
    try {
        const unsigned long n = std::stoul(env);
        return n == 0 ? 1U : static_cast<unsigned>(n);
    } catch (const std::exception&) {
        return 1;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eells-Kuiper invariants of Milnor spheres and their antipodal quotients", "ekmu"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    Format format = Format::Table;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    };

    std::string h_text, k_text, h_range_text;
    std::uint64_t modulus = 0;
    unsigned workers = default_workers();

    auto* invariants = app.add_subcommand("invariants", "Characteristic data and mu(M_h)");
    invariants->add_option("--h", h_text, "Integer h")->required();
    add_format(invariants);

    auto* quotient = app.add_subcommand("quotient", "mu(M_h/tau_h) and its diffeomorphism type");
    quotient->add_option("--h", h_text, "Integer h")->required();
    add_format(quotient);

    auto* enumerate = app.add_subcommand("enumerate", "Residues r with 56 | r(r-1)");
    enumerate->add_option("--modulus", modulus, "Modulus m, 1 <= m <= 1000000")->required();
    add_format(enumerate);

    auto* cases = app.add_subcommand("cases", "Check the four residue-class cases over a k-range");
    cases->add_option("--k-range", k_text, "Inclusive range a..b")->required();
    add_format(cases);

    auto* verify = app.add_subcommand("verify", "Sweep an h-range and check mu = ±1/32");
    verify->add_option("--h-range", h_range_text, "Inclusive range a..b")->required();
    verify->add_option("--parallel", workers, std::string("Worker threads (default from ") +
                                                  kParallelEnv + ", else 1)")
        ->check(CLI::PositiveNumber);
    add_format(verify);

    // CLI11 takes argv in reverse order.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*invariants) return cmd_invariants(h_text, format, out);
        if (*quotient) return cmd_quotient(h_text, format, out);
        if (*enumerate) return cmd_enumerate(modulus, format, out);
        if (*cases) return cmd_cases(k_text, format, out);
        return cmd_verify(h_range_text, workers, format, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const std::logic_error& e) {
        // DichotomyViolation or a disagreement between evaluation routes.
        err << "check failed: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

}  // namespace ekmu::cli
