#include "cyc/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cyc/errors.hpp"
#include "cyc/formulas.hpp"
#include "cyc/lattice.hpp"

namespace cyc {

namespace {

using u64 = std::uint64_t;

u64 pow_u64(u64 base, unsigned exp) {
    u64 v = 1;
    for (unsigned i = 0; i < exp; ++i) v *= base;
    return v;
}

// Effective [lo, hi] for one family variable, intersecting any user bound
// with the family's own default window.
struct Window {
    u64 lo, hi;
    bool contains(u64 v) const { return lo <= v && v <= hi; }
};

Window window(const RangeMap& ranges, const std::string& var, u64 default_lo, u64 default_hi) {
    auto it = ranges.find(var);
    if (it == ranges.end()) return {default_lo, default_hi};
    return {std::max(default_lo, it->second.lo), std::min(default_hi, it->second.hi)};
}

void check_vars(const std::string& family, const RangeMap& ranges,
                std::initializer_list<const char*> vars) {
    for (const auto& [key, value] : ranges) {
        (void)value;
        if (std::find(vars.begin(), vars.end(), key) == vars.end())
            throw parameter_error("family '" + family + "' has no parameter named '" + key + "'");
    }
}

// Canonical invariant-factor chains n1 | n2 | ... | nk (k >= 2, n1 >= 2) with
// product <= max_order, keeping only chains the formula layer fully covers.
void abelian_chains(u64 max_order, std::vector<u64>& chain, u64 product,
                    std::vector<GroupSpec>& out) {
    if (chain.size() >= 2) {
        GroupSpec spec = GroupSpec::abelian(chain);
        if (formula_counts(spec).num_subgroups) out.push_back(std::move(spec));
    }
    u64 base = chain.empty() ? 2 : chain.back();
    for (u64 next = base; product <= max_order / next; next += base) {
        chain.push_back(next);
        abelian_chains(max_order, chain, product * next, out);
        chain.pop_back();
    }
}

// Structured coprime-block products: a 2-group block times odd abelian (and a
// few odd non-abelian / three-block combinations), exercising the product
// dispatch rather than any single closed form.
std::vector<GroupSpec> nilpotent_tuples(u64 max_order) {
    std::vector<GroupSpec> two_blocks = {
        GroupSpec::generalized_quaternion(3), GroupSpec::generalized_quaternion(4),
        GroupSpec::dihedral(4),               GroupSpec::dihedral(8),
        GroupSpec::semidihedral(4),           GroupSpec::modular_m(2, 4),
        GroupSpec::elementary_abelian(2, 2),  GroupSpec::elementary_abelian(2, 3),
        GroupSpec::abelian({2, 4}),
    };
    std::vector<GroupSpec> odd_blocks = {
        GroupSpec::cyclic(3),  GroupSpec::cyclic(9),
        GroupSpec::cyclic(27), GroupSpec::elementary_abelian(3, 2),
        GroupSpec::abelian({3, 9}), GroupSpec::elementary_abelian(3, 3),
        GroupSpec::cyclic(5),  GroupSpec::cyclic(25),
        GroupSpec::elementary_abelian(5, 2), GroupSpec::cyclic(7),
        GroupSpec::cyclic(15),
    };
    std::vector<GroupSpec> out;
    auto add = [&](std::vector<GroupSpec> factors) {
        GroupSpec spec = GroupSpec::product(std::move(factors));
        if (spec.order() <= max_order) out.push_back(std::move(spec));
    };
    for (const GroupSpec& even : two_blocks)
        for (const GroupSpec& odd : odd_blocks) add({even, odd});
    // odd non-abelian block times a 2-block
    for (u64 m : {2, 4})
        add({GroupSpec::modular_m(3, 3), GroupSpec::cyclic(m)});
    add({GroupSpec::modular_m(3, 3), GroupSpec::elementary_abelian(2, 2)});
    // three blocks at three primes
    add({GroupSpec::generalized_quaternion(3), GroupSpec::elementary_abelian(3, 2),
         GroupSpec::cyclic(5)});
    add({GroupSpec::dihedral(4), GroupSpec::cyclic(9), GroupSpec::cyclic(5)});
    // hamiltonian block assembled from loose Z2 factors plus an odd part
    add({GroupSpec::generalized_quaternion(3), GroupSpec::cyclic(2), GroupSpec::cyclic(3)});
    add({GroupSpec::generalized_quaternion(3), GroupSpec::cyclic(2), GroupSpec::cyclic(2),
         GroupSpec::cyclic(9)});
    return out;
}

} // namespace

ComparisonResult compare_counts(const GroupSpec& spec, const OracleLimits& limits) {
    ComparisonResult result{spec, CompareStatus::Pass, std::nullopt, std::nullopt,
                            std::nullopt, std::nullopt, std::string{}};
    FormulaCounts counts = formula_counts(spec);
    if (!counts.num_cyclic || !counts.num_subgroups)
        throw parameter_error("no closed-form subgroup counts for " + spec.name());
    result.formula_cyclic = counts.num_cyclic;
    result.formula_subgroups = counts.num_subgroups;

    try {
        CayleyGroup g = build_group(spec, limits);
        SubgroupLattice lattice = enumerate_subgroups(g, limits);
        result.oracle_cyclic = Integer(static_cast<unsigned long>(lattice.num_cyclic()));
        result.oracle_subgroups = Integer(static_cast<unsigned long>(lattice.size()));
    } catch (const resource_error& e) {
        result.status = CompareStatus::SkipResource;
        result.note = e.what();
        return result;
    }

    if (*result.formula_cyclic != *result.oracle_cyclic ||
        *result.formula_subgroups != *result.oracle_subgroups) {
        result.status = CompareStatus::Fail;
        result.note = "formula (|C|, |L|) = (" + result.formula_cyclic->get_str() + ", " +
                      result.formula_subgroups->get_str() + "); oracle = (" +
                      result.oracle_cyclic->get_str() + ", " +
                      result.oracle_subgroups->get_str() + ")";
    }
    return result;
}

std::vector<GroupSpec> family_tuples(const std::string& family, u64 max_order,
                                     const RangeMap& ranges) {
    std::vector<GroupSpec> out;

    if (family == "cyclic") {
        check_vars(family, ranges, {"n"});
        Window n = window(ranges, "n", 1, max_order);
        for (u64 v = n.lo; v <= n.hi; ++v) out.push_back(GroupSpec::cyclic(v));
    } else if (family == "elem-abelian") {
        check_vars(family, ranges, {"p", "k"});
        Window p = window(ranges, "p", 2, max_order);
        Window k = window(ranges, "k", 1, 64);
        for (u64 pv = p.lo; pv <= p.hi; ++pv) {
            if (!is_prime(pv)) continue;
            u64 order = pv;
            for (u64 kv = 1; kv <= k.hi && order <= max_order; ++kv) {
                if (kv >= k.lo)
                    out.push_back(GroupSpec::elementary_abelian(pv, static_cast<unsigned>(kv)));
                if (order > max_order / pv) break;
                order *= pv;
            }
        }
    } else if (family == "abelian") {
        check_vars(family, ranges, {});
        std::vector<u64> chain;
        abelian_chains(max_order, chain, 1, out);
    } else if (family == "rank2") {
        check_vars(family, ranges, {"m", "n"});
        Window m = window(ranges, "m", 1, max_order);
        Window n = window(ranges, "n", 1, max_order);
        std::set<std::pair<u64, u64>> seen;
        for (u64 mv = m.lo; mv <= m.hi; ++mv)
            for (u64 nv = n.lo; nv <= n.hi && mv <= max_order / nv; ++nv) {
                auto pair = std::minmax(mv, nv);
                if (seen.insert(pair).second)
                    out.push_back(GroupSpec::abelian({pair.first, pair.second}));
            }
    } else if (family == "hamiltonian") {
        check_vars(family, ranges, {"n"});
        Window n = window(ranges, "n", 0, 60);
        for (u64 nv = n.lo; nv <= n.hi && pow_u64(2, static_cast<unsigned>(nv) + 3) <= max_order;
             ++nv) {
            if (nv == 0) {
                out.push_back(GroupSpec::generalized_quaternion(3));
            } else {
                out.push_back(GroupSpec::product(
                    {GroupSpec::generalized_quaternion(3),
                     GroupSpec::elementary_abelian(2, static_cast<unsigned>(nv))}));
            }
        }
    } else if (family == "modM") {
        check_vars(family, ranges, {"p", "n"});
        Window p = window(ranges, "p", 2, max_order);
        Window n = window(ranges, "n", 3, 64);
        for (u64 pv = p.lo; pv <= p.hi; ++pv) {
            if (!is_prime(pv)) continue;
            u64 start = std::max<u64>(n.lo, pv == 2 ? 4 : 3);
            for (u64 nv = start; nv <= n.hi && pow_u64(pv, static_cast<unsigned>(nv)) <= max_order;
                 ++nv)
                out.push_back(GroupSpec::modular_m(pv, static_cast<unsigned>(nv)));
        }
    } else if (family == "dihedral2n" || family == "quaternion2n" || family == "semidihedral2n") {
        check_vars(family, ranges, {"n"});
        u64 least = family == "dihedral2n" ? 2 : family == "quaternion2n" ? 3 : 4;
        Window n = window(ranges, "n", least, 62);
        for (u64 nv = n.lo; nv <= n.hi && pow_u64(2, static_cast<unsigned>(nv)) <= max_order; ++nv) {
            unsigned e = static_cast<unsigned>(nv);
            if (family == "dihedral2n") out.push_back(GroupSpec::dihedral(pow_u64(2, e - 1)));
            else if (family == "quaternion2n") out.push_back(GroupSpec::generalized_quaternion(e));
            else out.push_back(GroupSpec::semidihedral(e));
        }
    } else if (family == "zm") {
        check_vars(family, ranges, {"m", "n", "r"});
        Window m = window(ranges, "m", 2, max_order);
        Window n = window(ranges, "n", 2, max_order);
        Window r = window(ranges, "r", 2, max_order);
        for (u64 mv = m.lo; mv <= m.hi; ++mv)
            for (u64 nv = n.lo; nv <= n.hi && mv <= max_order / nv; ++nv) {
                if (std::gcd(mv, nv) != 1) continue;
                for (u64 rv = std::max<u64>(r.lo, 2); rv < mv && rv <= r.hi; ++rv) {
                    if (std::gcd(mv, rv - 1) != 1 || pow_mod(rv, nv, mv) != 1) continue;
                    out.push_back(GroupSpec::zm(mv, nv, rv));
                }
            }
    } else if (family == "dihedral") {
        check_vars(family, ranges, {"m"});
        Window m = window(ranges, "m", 1, max_order / 2);
        for (u64 mv = m.lo; mv <= m.hi && 2 * mv <= max_order; ++mv)
            out.push_back(GroupSpec::dihedral(mv));
    } else if (family == "nilpotent") {
        check_vars(family, ranges, {});
        out = nilpotent_tuples(max_order);
    } else {
        throw parameter_error("unknown verify family '" + family + "'");
    }
    return out;
}

const std::vector<std::string>& verify_families() {
    static const std::vector<std::string> kFamilies = {
        "cyclic",       "elem-abelian", "abelian",        "rank2",
        "hamiltonian",  "modM",         "dihedral2n",     "quaternion2n",
        "semidihedral2n", "zm",         "dihedral",       "nilpotent",
    };
    return kFamilies;
}

std::vector<GroupSpec> spot_tuples() {
    return {
        GroupSpec::cyclic(2000),
        GroupSpec::dihedral(1000),
        GroupSpec::abelian({40, 50}),
        GroupSpec::abelian({25, 25}),
        GroupSpec::elementary_abelian(5, 4),
        GroupSpec::modular_m(3, 6),
        GroupSpec::modular_m(2, 10),
        GroupSpec::dihedral(512),
        GroupSpec::generalized_quaternion(10),
        GroupSpec::semidihedral(10),
        GroupSpec::zm(125, 4, 57),
        GroupSpec::zm(341, 5, 157),
        GroupSpec::product({GroupSpec::modular_m(3, 3), GroupSpec::cyclic(49)}),
        GroupSpec::product({GroupSpec::generalized_quaternion(3),
                            GroupSpec::abelian({9, 27})}),
    };
}

} // namespace cyc
