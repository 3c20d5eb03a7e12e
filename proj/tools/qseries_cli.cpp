// Command-line front end: series expansion, identity checks, oracle
// comparison and congruence sweeps.
//
// Exit status: 0 when every executed check passes, 1 when a check fails,
// 2 for usage errors, malformed input and unknown ids.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qseries/argument_map.hpp"
#include "qseries/claims.hpp"
#include "qseries/harness.hpp"
#include "qseries/identities.hpp"
#include "qseries/partitions.hpp"
#include "qseries/products.hpp"
#include "qseries/report.hpp"

using namespace qseries;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int fail_summary(const std::string& what, const std::optional<std::string>& first_id) {
    std::cout << what;
    if (first_id) std::cout << "; first failure: " << *first_id;
    std::cout << "\n";
    return first_id ? kCheckFailed : kOk;
}

int run_expand(const std::string& eta_text, std::size_t order, std::uint64_t modulus) {
    EtaQuotient eq;
    try {
        eq = EtaQuotient::parse(eta_text);
    } catch (const EtaParseError& e) {
        throw UsageError(e.what());
    }
    const Series s = modulus ? eta_quotient_series_mod(eq, order, modulus) : eta_quotient_series(eq, order);
    std::string line;
    for (std::size_t i = 0; i <= order; ++i) {
        if (i) line += ' ';
        line += s.coefficient(i).get_str();
    }
    std::cout << line << "\n";
    return kOk;
}

int run_identities(const std::string& glob, std::optional<std::size_t> order) {
    const auto& db = IdentityDatabase::standard();
    std::vector<const IdentityEntry*> selected;
    for (const IdentityEntry& e : db.entries()) {
        if (glob_match(glob, e.id)) selected.push_back(&e);
    }
    if (selected.empty()) throw UsageError("unknown identity id: " + glob);
    std::size_t ran = 0, failed = 0;
    std::optional<std::string> first;
    std::printf("%-32s  %6s  %-6s  %s\n", "id", "order", "result", "statement");
    for (const IdentityEntry* ep : selected) {
        const IdentityEntry& e = *ep;
        ++ran;
        const IdentityResult r = verify_identity(e, order.value_or(e.default_order));
        std::string result = r.equal ? "pass" : "fail";
        if (!r.equal) {
            ++failed;
            if (!first) first = e.id;
            result += " at q^" + std::to_string(r.first_mismatch.value_or(0));
        }
        std::printf("%-32s  %6zu  %-6s  %s\n", e.id.c_str(), r.order, result.c_str(), e.statement.c_str());
    }
    return fail_summary(std::to_string(ran - failed) + " identities passed, " + std::to_string(failed) + " failed",
                        first);
}

int run_oracle(const std::string& spec_text, std::size_t n_max) {
    const RegularOverpartitionSpec spec = [&] {
        try {
            return RegularOverpartitionSpec::parse(spec_text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("bad spec: ") + e.what());
        }
    }();
    const Series s = series_pjk(spec, n_max);
    std::size_t matches = 0;
    std::optional<std::string> first;
    std::printf("%5s  %20s  %20s  %s\n", "n", "series", "enumeration", "match");
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Integer a = s.coefficient(n);
        const Integer b = enumerate_pjk(spec, n);
        const bool ok = a == b;
        if (ok) {
            ++matches;
        } else if (!first) {
            first = "oracle(" + spec.to_string() + ") n=" + std::to_string(n);
        }
        std::printf("%5zu  %20s  %20s  %s\n", n, a.get_str().c_str(), b.get_str().c_str(), ok ? "yes" : "NO");
    }
    return fail_summary(std::to_string(matches) + " of " + std::to_string(n_max + 1) + " rows match", first);
}

struct ClaimOptions {
    std::string glob = "*";
    std::string group;
    std::optional<std::size_t> n_max;
    std::size_t budget = HarnessConfig{}.budget;
    std::string format = "text";
    std::optional<long> max_exponent;
    std::vector<long> primes;
    bool core_only = false;
};

std::vector<VerificationReport> sweep(const ClaimOptions& opt, Harness& h) {
    const auto selected = ClaimCatalog::standard().select(opt.glob, opt.group);
    if (selected.empty()) throw UsageError("unknown claim id: " + opt.glob);
    ParamBounds bounds;
    bounds.max_exponent = opt.max_exponent;
    if (!opt.primes.empty()) bounds.primes = opt.primes;
    std::vector<VerificationReport> reports;
    for (const CongruenceClaim* c : selected) {
        if (opt.core_only && !c->core) continue;
        for (auto& r : h.check_family(*c, opt.n_max.value_or(default_n_max(*c)), bounds)) reports.push_back(std::move(r));
    }
    return reports;
}

int emit_reports(const std::vector<VerificationReport>& reports, const std::string& format) {
    const ReportSummary s = summarize(reports);
    if (format == "json") {
        for (const auto& r : reports) std::cout << to_json_line(r) << "\n";
    } else {
        std::cout << format_table(reports);
    }
    std::cout << to_string(s) << "\n";
    return s.failed ? kCheckFailed : kOk;
}

int run_claims(const ClaimOptions& opt) {
    Harness h(HarnessConfig{opt.budget, HarnessConfig{}.min_window});
    return emit_reports(sweep(opt, h), opt.format);
}

int run_list(const std::string& glob, const std::string& group) {
    const auto selected = ClaimCatalog::standard().select(glob, group);
    for (const CongruenceClaim* c : selected) {
        std::printf("%-8s  %-12s  %s\n", c->id.c_str(), c->group.c_str(), c->statement().c_str());
    }
    return kOk;
}

int run_default_suite() {
    std::cout << "== identities\n";
    const int ids = run_identities("*", std::nullopt);
    std::cout << "== oracle\n";
    int oracle = kOk;
    for (const char* spec : {"4,8", "6,12", "8,16"}) {
        const auto parsed = RegularOverpartitionSpec::parse(spec);
        const Series s = series_pjk(parsed, 60);
        std::size_t bad = 0;
        for (std::size_t n = 0; n <= 60; ++n) bad += s.coefficient(n) != enumerate_pjk(parsed, n);
        std::printf("oracle %-5s  n<=60  %s\n", spec, bad ? "mismatch" : "match");
        if (bad) oracle = kCheckFailed;
    }
    std::cout << "== intermediate congruences\n";
    ClaimOptions opt;
    opt.group = "intermediate";
    opt.core_only = true;
    Harness h;
    const auto reports = sweep(opt, h);
    std::cout << format_table(reports);
    const ReportSummary s = summarize(reports);
    std::cout << to_string(s) << "\n";
    const bool ok = ids == kOk && oracle == kOk && s.failed == 0;
    std::cout << (ok ? "default suite passed" : "default suite failed") << "\n";
    return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-series engine and congruence verification harness", "qseries"};
    app.require_subcommand(0, 1);

    std::string eta_text;
    std::size_t order = 20;
    std::uint64_t modulus = 0;
    auto* expand = app.add_subcommand("expand", "Expand an eta-quotient such as \"f2*f1^-2\"");
    expand->add_option("--eta", eta_text, "eta-quotient")->required();
    expand->add_option("--order", order, "truncation order")->check(CLI::NonNegativeNumber);
    expand->add_option("--mod", modulus, "reduce modulo M (2 <= M < 2^63)");

    std::string identity_glob = "*";
    std::optional<std::size_t> identity_order;
    auto* ids = app.add_subcommand("verify-identities", "Check the built-in q-series identities");
    ids->add_option("--id", identity_glob, "identity id or glob");
    ids->add_option("--order", identity_order, "truncation order (default per identity)");

    ClaimOptions claim_opt;
    auto* claims = app.add_subcommand("verify-claims", "Check congruence claims over their parameter families");
    claims->add_option("--id", claim_opt.glob, "claim id or glob");
    claims->add_option("--group", claim_opt.group, "intermediate or theorem")
        ->check(CLI::IsMember({"intermediate", "theorem"}));
    claims->add_option("--n-max", claim_opt.n_max, "largest n checked (default per claim)");
    claims->add_option("--budget", claim_opt.budget, "largest series order computed")->check(CLI::PositiveNumber);
    claims->add_option("--format", claim_opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    claims->add_option("--max-exponent", claim_opt.max_exponent, "cap on alpha, beta, gamma");
    claims->add_option("--primes", claim_opt.primes, "primes substituted for p");

    std::string spec_text;
    std::size_t oracle_n = 40;
    auto* oracle = app.add_subcommand("oracle-compare", "Compare series coefficients with direct enumeration");
    oracle->add_option("--spec", spec_text, "j,k")->required();
    oracle->add_option("--n-max", oracle_n, "largest n compared");

    std::string list_glob = "*", list_group;
    auto* list = app.add_subcommand("list", "List catalogued claims");
    list->add_option("--id", list_glob, "claim id or glob");
    list->add_option("--group", list_group, "intermediate or theorem");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*expand) return run_expand(eta_text, order, modulus);
        if (*ids) return run_identities(identity_glob, identity_order);
        if (*claims) return run_claims(claim_opt);
        if (*oracle) return run_oracle(spec_text, oracle_n);
        if (*list) return run_list(list_glob, list_group);
        return run_default_suite();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
}
