#include "cyc/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>

#include "cyc/errors.hpp"
#include "cyc/formulas.hpp"

namespace cyc {

namespace {

// Index of the row minimizing `key`, setting `tie` if the minimum is attained
// more than once.
template <typename Key>
std::size_t argmin_row(const std::vector<ExtremalRow>& rows, Key key, bool& tie) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (key(rows[i]) < key(rows[best])) best = i;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (i != best && key(rows[i]) == key(rows[best])) tie = true;
    return best;
}

} // namespace

ExtremalReport scan_rank2(std::uint64_t p, unsigned n) {
    if (!is_prime(p)) throw parameter_error("scan_rank2: p must be prime");
    if (n < 2) throw parameter_error("scan_rank2: total exponent n must be at least 2");

    ExtremalReport report;
    report.p = p;
    report.n = n;
    for (unsigned a1 = 1; 2 * a1 <= n; ++a1) {
        ExtremalRow row;
        row.alpha1 = a1;
        row.alpha2 = n - a1;
        row.num_cyclic = c_rank2(p, a1, row.alpha2);
        row.num_subgroups = l_rank2(p, a1, row.alpha2);
        row.cdeg = make_ratio(row.num_cyclic, row.num_subgroups);
        report.rows.push_back(std::move(row));
    }

    auto by_cyclic = [](const ExtremalRow& r) { return r.num_cyclic; };
    auto by_cyclic_neg = [](const ExtremalRow& r) { return -r.num_cyclic; };
    auto by_cdeg = [](const ExtremalRow& r) { return r.cdeg; };
    auto by_cdeg_neg = [](const ExtremalRow& r) { return -r.cdeg; };
    const auto& rows = report.rows;
    report.argmin_num_cyclic = rows[argmin_row(rows, by_cyclic, report.has_tie)].alpha1;
    report.argmax_num_cyclic = rows[argmin_row(rows, by_cyclic_neg, report.has_tie)].alpha1;
    report.argmin_cdeg = rows[argmin_row(rows, by_cdeg, report.has_tie)].alpha1;
    report.argmax_cdeg = rows[argmin_row(rows, by_cdeg_neg, report.has_tie)].alpha1;
    return report;
}

bool verify_extremal_theorem(std::uint64_t p, unsigned n) {
    ExtremalReport report = scan_rank2(p, n);
    if (report.has_tie) return false;
    unsigned balanced = n / 2;
    if (report.argmin_num_cyclic != 1 || report.argmax_num_cyclic != balanced) return false;
    if (report.argmax_cdeg != 1 || report.argmin_cdeg != balanced) return false;
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        if (!(report.rows[i].num_cyclic > report.rows[i - 1].num_cyclic)) return false;
        if (!(report.rows[i].cdeg < report.rows[i - 1].cdeg)) return false;
    }
    return true;
}

namespace {

// Largest exponent k with base^k <= limit.
unsigned max_exponent(std::uint64_t base, std::uint64_t limit) {
    unsigned k = 0;
    std::uint64_t v = 1;
    while (v <= limit / base) {
        v *= base;
        ++k;
    }
    return k;
}

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exp; ++i) v *= base;
    return v;
}

} // namespace

std::vector<DensityMatch> density_scan(const Rational& target, std::uint64_t max_order,
                                       std::size_t count) {
    if (target <= 0 || target > 1)
        throw parameter_error("density_scan: target must lie in (0, 1]");
    if (max_order == 0) throw parameter_error("density_scan: max_order must be at least 1");

    std::vector<DensityMatch> pool;
    auto consider = [&](const GroupSpec& spec) {
        auto cd = formula_counts(spec).cdeg();
        if (!cd) return;
        pool.push_back({spec, *cd, abs(*cd - target)});
    };

    for (std::uint64_t m = 1; m <= max_order; ++m) consider(GroupSpec::cyclic(m));
    for (std::uint64_t m = 1; 2 * m <= max_order; ++m) consider(GroupSpec::dihedral(m));
    for (std::uint64_t p = 2; p <= max_order; ++p) {
        if (!is_prime(p)) continue;
        unsigned kmax = max_exponent(p, max_order);
        // elementary abelian of rank >= 2 (rank 1 is cyclic, handled above)
        for (unsigned k = 2; k <= kmax; ++k) consider(GroupSpec::elementary_abelian(p, k));
        // rank-2 with a repeated or mixed exponent, skipping the elementary case
        for (unsigned a1 = 1; 2 * a1 <= kmax; ++a1)
            for (unsigned a2 = std::max(a1, 2u); a1 + a2 <= kmax; ++a2)
                consider(GroupSpec::abelian({pow_u64(p, a1), pow_u64(p, a2)}));
        // maximal-cyclic non-abelian p-groups
        unsigned nmin = p == 2 ? 4 : 3;
        for (unsigned nn = nmin; nn <= kmax; ++nn) consider(GroupSpec::modular_m(p, nn));
    }
    for (unsigned nn = 3; pow_u64(2, nn) <= max_order; ++nn) {
        consider(GroupSpec::generalized_quaternion(nn));
        if (nn >= 4) consider(GroupSpec::semidihedral(nn));
    }
    // Hamiltonian 2-groups Q8 x Z_2^j
    for (unsigned j = 1; pow_u64(2, 3 + j) <= max_order; ++j) {
        std::vector<GroupSpec> factors{GroupSpec::generalized_quaternion(3),
                                       GroupSpec::elementary_abelian(2, j)};
        consider(GroupSpec::product(factors));
    }
    // split metacyclic groups: every valid ZM(m, n, r) with mn <= max_order
    for (std::uint64_t m = 2; m <= max_order / 2; ++m)
        for (std::uint64_t n = 2; m * n <= max_order; ++n) {
            if (std::gcd(m, n) != 1) continue;
            for (std::uint64_t r = 2; r < m; ++r) {
                if (std::gcd(m, r - 1) != 1 || pow_mod(r, n, m) != 1) continue;
                consider(GroupSpec::zm(m, n, r));
            }
        }

    std::stable_sort(pool.begin(), pool.end(), [](const DensityMatch& a, const DensityMatch& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        if (a.spec.order() != b.spec.order()) return a.spec.order() < b.spec.order();
        return a.spec.name() < b.spec.name();
    });
    std::vector<DensityMatch> out;
    std::unordered_set<std::string> seen;
    for (DensityMatch& match : pool) {
        if (out.size() == count) break;
        if (!seen.insert(match.spec.name()).second) continue;
        out.push_back(std::move(match));
    }
    return out;
}

} // namespace cyc
