// Command-line front end: compute cyclicity degrees from closed forms,
// cross-check them against the brute-force lattice oracle, and export the
// asymptotic / extremal tables.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error,
// 3 resource cap hit.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cyc/asymptotics.hpp"
#include "cyc/extremal.hpp"
#include "cyc/formulas.hpp"
#include "cyc/lattice.hpp"
#include "cyc/output.hpp"
#include "cyc/specparse.hpp"
#include "cyc/verify.hpp"

namespace {

using namespace cyc;
using u64 = std::uint64_t;

u64 parse_number(const std::string& text, const std::string& what) {
    if (text.empty()) throw parameter_error(what + ": empty number");
    u64 value = 0;
    std::size_t i = 0;
    auto digits = [&](u64& out) {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw parameter_error(what + ": expected a number, got '" + text + "'");
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            if (out > (UINT64_MAX - (text[i] - '0')) / 10)
                throw parameter_error(what + ": number out of range: '" + text + "'");
            out = out * 10 + (text[i] - '0');
        }
    };
    digits(value);
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        u64 exponent = 0;
        digits(exponent);
        for (u64 k = 0; k < exponent; ++k) {
            if (value > UINT64_MAX / 10)
                throw parameter_error(what + ": number out of range: '" + text + "'");
            value *= 10;
        }
    }
    if (i != text.size())
        throw parameter_error(what + ": expected a number, got '" + text + "'");
    return value;
}

void expect_params(const std::vector<std::string>& params, std::size_t n,
                   const std::string& usage) {
    if (params.size() != n)
        throw parameter_error("expected " + std::to_string(n) + " parameter(s): " + usage);
}

// Build the GroupSpec for a `cdeg` family invocation.
GroupSpec spec_for_family(const std::string& family, const std::vector<std::string>& params) {
    auto num = [&](std::size_t i) { return parse_number(params[i], "cdeg " + family); };
    if (family == "cyclic") {
        expect_params(params, 1, "cdeg cyclic <n>");
        return GroupSpec::cyclic(num(0));
    }
    if (family == "elem-abelian") {
        expect_params(params, 2, "cdeg elem-abelian <p> <k>");
        return GroupSpec::elementary_abelian(num(0), static_cast<unsigned>(num(1)));
    }
    if (family == "abelian") {
        if (params.empty()) throw parameter_error("cdeg abelian <n1> [n2 ...]");
        std::vector<u64> ns;
        for (std::size_t i = 0; i < params.size(); ++i) ns.push_back(num(i));
        return GroupSpec::abelian(ns);
    }
    if (family == "rank2") {
        expect_params(params, 2, "cdeg rank2 <m> <n>");
        return GroupSpec::abelian({num(0), num(1)});
    }
    if (family == "hamiltonian") {
        if (params.empty())
            throw parameter_error("cdeg hamiltonian <n> [odd invariants ...]");
        unsigned n = static_cast<unsigned>(num(0));
        std::vector<GroupSpec> factors{GroupSpec::generalized_quaternion(3)};
        if (n > 0) factors.push_back(GroupSpec::elementary_abelian(2, n));
        if (params.size() > 1) {
            std::vector<u64> odd;
            for (std::size_t i = 1; i < params.size(); ++i) odd.push_back(num(i));
            factors.push_back(GroupSpec::abelian(odd));
        }
        return factors.size() == 1 ? factors.front() : GroupSpec::product(std::move(factors));
    }
    if (family == "modM") {
        expect_params(params, 2, "cdeg modM <p> <n>");
        return GroupSpec::modular_m(num(0), static_cast<unsigned>(num(1)));
    }
    if (family == "dihedral2n") {
        expect_params(params, 1, "cdeg dihedral2n <n>  (group order 2^n)");
        u64 n = num(0);
        if (n < 2) throw parameter_error("cdeg dihedral2n: need n >= 2");
        if (n >= 64) throw parameter_error("cdeg dihedral2n: group order exceeds 64 bits");
        return GroupSpec::dihedral(u64(1) << (n - 1));
    }
    if (family == "quaternion2n") {
        expect_params(params, 1, "cdeg quaternion2n <n>  (group order 2^n)");
        return GroupSpec::generalized_quaternion(static_cast<unsigned>(num(0)));
    }
    if (family == "semidihedral2n") {
        expect_params(params, 1, "cdeg semidihedral2n <n>  (group order 2^n)");
        return GroupSpec::semidihedral(static_cast<unsigned>(num(0)));
    }
    if (family == "zm") {
        expect_params(params, 3, "cdeg zm <m> <n> <r>");
        return GroupSpec::zm(num(0), num(1), num(2));
    }
    if (family == "dihedral") {
        expect_params(params, 1, "cdeg dihedral <m>  (group order 2m)");
        return GroupSpec::dihedral(num(0));
    }
    if (family == "nilpotent") {
        if (params.empty())
            throw parameter_error("cdeg nilpotent <block> [block ...]  (group atoms)");
        std::vector<GroupSpec> factors;
        for (const std::string& atom : params) factors.push_back(parse_group(atom));
        return factors.size() == 1 ? factors.front() : GroupSpec::product(std::move(factors));
    }
    throw parameter_error(
        "unknown family '" + family +
        "'; known: cyclic, elem-abelian, abelian, rank2, hamiltonian, modM, dihedral2n, "
        "quaternion2n, semidihedral2n, zm, dihedral, nilpotent");
}

void print_record(const OutputRecord& record, const GroupSpec& spec, bool json, bool csv) {
    if (json) {
        std::cout << to_json(record);
    } else if (csv) {
        std::cout << to_csv(record);
    } else {
        std::cout << "group: " << spec.name() << " (order " << spec.order() << ")\n"
                  << to_human(record);
    }
}

int run_cdeg(const std::string& family, const std::vector<std::string>& params, bool json,
             bool csv) {
    GroupSpec spec = spec_for_family(family, params);
    FormulaCounts counts = formula_counts(spec);
    if (!counts.num_cyclic)
        throw parameter_error("no closed form covers " + spec.name() +
                              "; use the `oracle` command");

    std::string provenance = "formula";
    Integer num_subgroups;
    if (counts.num_subgroups) {
        num_subgroups = *counts.num_subgroups;
    } else {
        // |C| has a closed form but |L| does not (abelian with a rank >= 3
        // non-elementary p-block): enumerate |L| and cross-check |C|.
        OracleLimits limits = OracleLimits::from_env();
        CayleyGroup g = build_group(spec, limits);
        SubgroupLattice lattice = enumerate_subgroups(g, limits);
        if (Integer(static_cast<unsigned long>(lattice.num_cyclic())) != *counts.num_cyclic) {
            std::cerr << "verification failure: formula |C| = " << counts.num_cyclic->get_str()
                      << " but the oracle counts " << lattice.num_cyclic() << " for "
                      << spec.name() << "\n";
            return 1;
        }
        num_subgroups = Integer(static_cast<unsigned long>(lattice.size()));
        provenance = "both-agree";
    }

    OutputRecord record = make_record(spec, *counts.num_cyclic, num_subgroups, provenance);
    record.family = family;
    record.params = params;
    print_record(record, spec, json, csv);
    return 0;
}

int run_oracle(const std::string& spec_text, const std::string& with_text,
               const std::string& dump_path, std::optional<u64> cap, bool json, bool csv) {
    GroupSpec spec = parse_group(spec_text);
    OracleLimits limits = OracleLimits::from_env();
    if (cap) limits.max_order = *cap;

    bool want_ndeg = false, want_sd = false;
    if (!with_text.empty()) {
        for (const std::string& item : [&] {
                 std::vector<std::string> parts;
                 std::size_t start = 0;
                 while (true) {
                     std::size_t pos = with_text.find(',', start);
                     parts.push_back(with_text.substr(start, pos - start));
                     if (pos == std::string::npos) return parts;
                     start = pos + 1;
                 }
             }()) {
            if (item == "ndeg") want_ndeg = true;
            else if (item == "sd") want_sd = true;
            else throw parameter_error("--with accepts a comma list of: ndeg, sd");
        }
    }

    CayleyGroup g = build_group(spec, limits);
    SubgroupLattice lattice = enumerate_subgroups(g, limits);

    OutputRecord record =
        make_record(spec, Integer(static_cast<unsigned long>(lattice.num_cyclic())),
                    Integer(static_cast<unsigned long>(lattice.size())), "oracle");
    if (want_ndeg) record.ndeg = ndeg_of(lattice);
    if (want_sd) record.sd = sd_of(lattice, g, limits);

    if (!dump_path.empty()) {
        nlohmann::json dump;
        dump["group"] = spec.name();
        dump["order"] = g.order;
        dump["num_cyclic"] = lattice.num_cyclic();
        dump["num_subgroups"] = lattice.size();
        nlohmann::json subs = nlohmann::json::array();
        for (std::size_t i = 0; i < lattice.size(); ++i) {
            nlohmann::json s;
            s["index"] = i;
            s["order"] = lattice.subgroup_order(i);
            s["cyclic"] = lattice.is_cyclic(i);
            s["normal"] = lattice.is_normal(i);
            s["elements"] = lattice.elements(i);
            subs.push_back(std::move(s));
        }
        dump["subgroups"] = std::move(subs);
        std::ofstream out(dump_path);
        if (!out) throw parameter_error("cannot open dump file '" + dump_path + "'");
        out << dump.dump(2) << "\n";
        std::cerr << "wrote lattice to " << dump_path << "\n";
    }

    print_record(record, spec, json, csv);
    return 0;
}

int run_verify(const std::string& family, const std::string& range_text, std::optional<u64> cap) {
    OracleLimits limits = OracleLimits::from_env();
    if (cap) limits.max_order = *cap;
    RangeMap ranges = range_text.empty() ? RangeMap{} : parse_params_range(range_text);

    std::size_t pass = 0, fail = 0, skip = 0;
    for (const GroupSpec& spec : family_tuples(family, limits.max_order, ranges)) {
        ComparisonResult r = compare_counts(spec, limits);
        switch (r.status) {
        case CompareStatus::Pass:
            ++pass;
            std::cout << "PASS " << spec.name() << ": (|C|, |L|) = ("
                      << r.formula_cyclic->get_str() << ", " << r.formula_subgroups->get_str()
                      << ")\n";
            break;
        case CompareStatus::Fail:
            ++fail;
            std::cout << "FAIL " << spec.name() << ": " << r.note << "\n";
            break;
        case CompareStatus::SkipResource:
            ++skip;
            std::cout << "SKIP " << spec.name() << ": " << r.note << "\n";
            break;
        }
    }
    std::cout << pass + fail + skip << " tuples: " << pass << " pass, " << fail << " fail, "
              << skip << " skipped\n";
    return fail == 0 ? 0 : 1;
}

int run_meanvalue(u64 prime_bound, int digits, unsigned depth) {
    MeanValue mv = mean_value(prime_bound, depth);
    // Reported digits are truncated, not rounded: the paper's "M ~ 0.742"
    // quotes the leading digits, and 0.74287... would round to 0.743.
    std::cout << "M = " << decimal_trunc_string(to_rational(mv.value), digits) << "\n";
    std::cout << "prime_bound: " << prime_bound << "\n";
    std::cout << "tail_bound: " << format_ratio(mv.tail_bound) << "\n";
    return 0;
}

int run_partial_sum(const std::string& x_text, const std::string& profile_text, u64 prime_bound) {
    if (profile_text.empty()) {
        if (x_text.empty()) throw parameter_error("partial-sum needs --x or --profile");
        u64 x = parse_number(x_text, "--x");
        PartialSum s = partial_sum_f(x);
        if (s.is_exact) {
            std::cout << "S(" << x << ") = " << format_ratio(s.exact) << " = "
                      << decimal_string(s.exact, 6) << "\n";
        } else {
            std::cout << "S(" << x << ") = " << fixed6(s.approx) << "\n";
        }
        return 0;
    }
    std::vector<u64> xs;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = profile_text.find(',', start);
        xs.push_back(parse_number(profile_text.substr(start, pos - start), "--profile"));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    MeanValue mv = mean_value(prime_bound);
    std::cout << to_csv(error_profile(xs, mv));
    return 0;
}

int run_extremal(u64 p, unsigned n, bool csv) {
    ExtremalReport report = scan_rank2(p, n);
    if (csv) {
        std::cout << to_csv(report);
        return 0;
    }
    std::cout << "p: " << p << "\n" << "n: " << n << "\n";
    for (const ExtremalRow& row : report.rows) {
        std::cout << "alpha1=" << row.alpha1 << " alpha2=" << row.alpha2
                  << ": |C| = " << row.num_cyclic.get_str()
                  << ", |L| = " << row.num_subgroups.get_str()
                  << ", cdeg = " << format_ratio(row.cdeg) << " = "
                  << decimal_string(row.cdeg, 6) << "\n";
    }
    std::cout << "argmin_num_cyclic at alpha1=" << report.argmin_num_cyclic << "\n";
    std::cout << "argmax_num_cyclic at alpha1=" << report.argmax_num_cyclic << "\n";
    std::cout << "argmin_cdeg at alpha1=" << report.argmin_cdeg << "\n";
    std::cout << "argmax_cdeg at alpha1=" << report.argmax_cdeg << "\n";
    std::cout << "theorem_verified: " << (verify_extremal_theorem(p, n) ? "true" : "false")
              << "\n";
    return 0;
}

int run_density(const std::string& target_text, std::size_t count, u64 max_order) {
    Rational target = parse_ratio(target_text);
    std::vector<DensityMatch> matches = density_scan(target, max_order, count);
    std::cout << "# exploratory scan: nearest cyclicity degrees to " << format_ratio(target)
              << " among formula families with order <= " << max_order
              << "; which values occur as limit points is an open problem\n";
    for (const DensityMatch& match : matches) {
        std::cout << match.spec.name() << " cdeg = " << format_ratio(match.cdeg)
                  << " distance = " << format_ratio(match.distance) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclicity degree toolkit: closed-form subgroup counts, a brute-force "
                 "lattice oracle, and asymptotic tables"};
    app.require_subcommand(1);

    // cdeg
    std::string cdeg_family;
    std::vector<std::string> cdeg_params;
    bool cdeg_json = false, cdeg_csv = false;
    CLI::App* cdeg = app.add_subcommand("cdeg", "closed-form counts for a named family");
    cdeg->add_option("family", cdeg_family, "family name")->required();
    cdeg->add_option("params", cdeg_params, "family parameters");
    CLI::Option* cdeg_json_opt = cdeg->add_flag("--json", cdeg_json, "emit a JSON record");
    cdeg->add_flag("--csv", cdeg_csv, "emit a CSV row")->excludes(cdeg_json_opt);

    // oracle
    std::string oracle_spec, oracle_with, oracle_dump;
    u64 oracle_cap = 0;
    bool oracle_json = false, oracle_csv = false;
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force lattice counts for a group spec");
    oracle->footer("Spec mini-language (case-insensitive, 'x'-separated products):\n"
                   "  Z<n> or C<n>   cyclic of order n            Z<p>^<k>  elementary abelian\n"
                   "  Z<a>xZ<b>x...  abelian product              D<2m>     dihedral of order 2m\n"
                   "  Q<2^n>         generalized quaternion       SD<2^n>   semidihedral\n"
                   "  M(p,n)         modular maximal-cyclic       ZM(m,n,r) Z_m x| Z_n, y x y^-1 = x^r\n"
                   "  S3             symmetric group on 3 letters (alias for D6)\n"
                   "Examples: S3xC2, Q8, ZM(7,3,2), Z2xZ4xZ8, Q8xZ3^2");
    oracle->add_option("spec", oracle_spec, "group spec, e.g. S3xC2, Q8, ZM(7,3,2)")->required();
    oracle->add_option("--with", oracle_with, "extra degrees: comma list of ndeg, sd");
    oracle->add_option("--dump", oracle_dump, "write the full lattice as JSON to this file");
    CLI::Option* oracle_cap_opt = oracle->add_option("--cap", oracle_cap, "order cap override");
    CLI::Option* oracle_json_opt = oracle->add_flag("--json", oracle_json, "emit a JSON record");
    oracle->add_flag("--csv", oracle_csv, "emit a CSV row")->excludes(oracle_json_opt);

    // verify
    std::string verify_family, verify_range;
    u64 verify_cap = 0;
    CLI::App* verify = app.add_subcommand("verify", "compare formulas against the oracle");
    verify->footer("Families: cyclic(n), elem-abelian(p,k), abelian, rank2(m,n), hamiltonian(n),\n"
                   "  modM(p,n), dihedral2n(n), quaternion2n(n), semidihedral2n(n), zm(m,n,r),\n"
                   "  dihedral(m), nilpotent.\n"
                   "Range grammar: comma-separated clauses over the family's parameters;\n"
                   "  var=lo..hi, var=v, var<=hi, and shared bounds like m,n<=30.\n"
                   "Unbounded parameters sweep every value that keeps the group order under the cap.");
    verify->add_option("family", verify_family, "family name")->required();
    verify->add_option("--params-range", verify_range, "bounds, e.g. m=1..40 or m,n<=30");
    CLI::Option* verify_cap_opt = verify->add_option("--cap", verify_cap, "order cap override");

    // meanvalue
    u64 mv_prime_bound = 1'000'000;
    int mv_digits = 12;
    unsigned mv_depth = 64;
    CLI::App* meanvalue = app.add_subcommand("meanvalue", "Euler product for the mean of cdeg(Z_n x Z_n)");
    meanvalue->add_option("--prime-bound", mv_prime_bound, "truncate the product at this prime bound");
    meanvalue->add_option("--digits", mv_digits, "fractional digits to report (truncated)");
    meanvalue->add_option("--series-depth", mv_depth, "prime-power terms per factor");

    // partial-sum
    std::string ps_x, ps_profile;
    u64 ps_prime_bound = 1'000'000;
    CLI::App* partial = app.add_subcommand("partial-sum", "partial sums of cdeg(Z_n x Z_n)");
    partial->add_option("--x", ps_x, "sum f(n) for n <= x");
    partial->add_option("--profile", ps_profile, "comma list of x values; emits the residual CSV");
    partial->add_option("--prime-bound", ps_prime_bound, "prime bound for M in the profile");

    // extremal
    u64 ex_p = 0;
    unsigned ex_n = 0;
    bool ex_csv = false;
    CLI::App* extremal = app.add_subcommand("extremal", "rank-2 abelian p-groups of order p^n");
    extremal->add_option("--p", ex_p, "prime")->required();
    extremal->add_option("--n", ex_n, "total exponent")->required();
    extremal->add_flag("--csv", ex_csv, "emit the CSV table");

    // density
    std::string de_target;
    std::size_t de_count = 5;
    u64 de_max_order = 512;
    CLI::App* density = app.add_subcommand("density", "nearest cyclicity degrees to a target");
    density->add_option("--target", de_target, "target ratio a/b in (0, 1]")->required();
    density->add_option("--count", de_count, "number of matches to report");
    density->add_option("--max-order", de_max_order, "scan families up to this group order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cdeg->parsed()) return run_cdeg(cdeg_family, cdeg_params, cdeg_json, cdeg_csv);
        if (oracle->parsed())
            return run_oracle(oracle_spec, oracle_with, oracle_dump,
                              oracle_cap_opt->count() ? std::optional<u64>(oracle_cap)
                                                      : std::nullopt,
                              oracle_json, oracle_csv);
        if (verify->parsed())
            return run_verify(verify_family, verify_range,
                              verify_cap_opt->count() ? std::optional<u64>(verify_cap)
                                                      : std::nullopt);
        if (meanvalue->parsed()) return run_meanvalue(mv_prime_bound, mv_digits, mv_depth);
        if (partial->parsed()) return run_partial_sum(ps_x, ps_profile, ps_prime_bound);
        if (extremal->parsed()) return run_extremal(ex_p, ex_n, ex_csv);
        if (density->parsed()) return run_density(de_target, de_count, de_max_order);
    } catch (const parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
