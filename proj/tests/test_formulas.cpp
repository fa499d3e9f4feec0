#include <doctest.h>

#include <vector>

#include "cyc/formulas.hpp"
#include "cyc/lattice.hpp"

using namespace cyc;

namespace {

Rational ratio(long num, long den) { return make_ratio(Integer(num), Integer(den)); }

// All partitions of n into ascending parts, for the cross-formula sweeps.
void partitions_of(unsigned n, unsigned min_part, std::vector<unsigned>& cur,
                   std::vector<std::vector<unsigned>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned a = min_part; a <= n; ++a) {
        cur.push_back(a);
        partitions_of(n - a, a, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<unsigned>> partitions_up_to(unsigned max_n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    for (unsigned n = 1; n <= max_n; ++n) partitions_of(n, 1, cur, out);
    return out;
}

} // namespace

TEST_CASE("elementary abelian counts") {
    // Galois numbers |L(Z_2^k)| for k = 0..9
    const long galois2[] = {1, 2, 5, 16, 67, 374, 2825, 29212, 417199, 8283458};
    for (unsigned k = 0; k <= 9; ++k) CHECK(galois_number(k, 2) == galois2[k]);
    CHECK(galois_number(2, 3) == 6);
    CHECK(galois_number(3, 3) == 28); // 2(p^2+p+2) at p=3
    CHECK(galois_number(2, 5) == 8);

    CHECK(c_elem_abelian(2, 1) == 2);
    CHECK(c_elem_abelian(2, 4) == 16);
    CHECK(c_elem_abelian(3, 2) == 5);
    CHECK(c_elem_abelian(5, 2) == 7);
    CHECK(cdeg_elem_abelian(2, 2) == ratio(4, 5));
    CHECK_THROWS_AS(c_elem_abelian(6, 2), parameter_error);

    // paper's closed special values: cdeg(Z_p)=1, (p+2)/(p+3), 1/2, quartic
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        CAPTURE(p);
        Integer P(static_cast<unsigned long>(p));
        CHECK(cdeg_elem_abelian(p, 1) == ratio(1, 1));
        CHECK(cdeg_elem_abelian(p, 2) == make_ratio(P + 2, P + 3));
        CHECK(cdeg_elem_abelian(p, 3) == ratio(1, 2));
        CHECK(cdeg_elem_abelian(p, 4) ==
              make_ratio(P * P * P + P * P + P + 2,
                         P * P * P * P + 3 * P * P * P + 4 * P * P + 3 * P + 5));
    }
}

TEST_CASE("Galois number equals the subset-sum expansion") {
    // |L(Z_p^k)| = 2 + sum over nonempty proper-size subsets {i_1<...<i_a}
    // of {1..k} of p^{sum i_j - a(a+1)/2}
    for (std::uint64_t p : {2, 3, 5}) {
        for (unsigned k = 2; k <= 8; ++k) {
            CAPTURE(p);
            CAPTURE(k);
            Integer total = 2;
            for (unsigned mask = 1; mask < (1u << k); ++mask) {
                unsigned a = 0, sum = 0;
                for (unsigned i = 1; i <= k; ++i)
                    if (mask & (1u << (i - 1))) {
                        ++a;
                        sum += i;
                    }
                if (a == k) continue;
                total += pow_int(p, sum - a * (a + 1) / 2);
            }
            CHECK(total == galois_number(k, p));
        }
    }
}

TEST_CASE("rank-2 abelian p-group counts") {
    CHECK(c_rank2(2, 1, 1) == 4);
    CHECK(l_rank2(2, 1, 1) == 5);
    CHECK(c_rank2(2, 1, 2) == 6);
    CHECK(l_rank2(2, 1, 2) == 8);
    CHECK(c_rank2(2, 2, 2) == 10);
    CHECK(l_rank2(2, 2, 2) == 15);
    CHECK(c_rank2(3, 1, 2) == 8);
    CHECK(l_rank2(3, 1, 2) == 10);
    CHECK_THROWS_AS(c_rank2(2, 2, 1), parameter_error);
    CHECK_THROWS_AS(l_rank2(4, 1, 1), parameter_error);

    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (unsigned a1 = 1; a1 <= 6; ++a1) {
            for (unsigned a2 = a1; a2 <= 8; ++a2) {
                CAPTURE(p);
                CAPTURE(a1);
                CAPTURE(a2);
                Integer C = c_rank2(p, a1, a2), L = l_rank2(p, a1, a2);
                // the exact linear relation behind the monotonicity results
                CHECK(Integer(static_cast<unsigned long>(p)) * C -
                          Integer(static_cast<unsigned long>(p - 1)) * L ==
                      a1 + a2 + 1);
                // single-fraction closed form agrees
                CHECK(cdeg_rank2_closed(p, a1, a2) == make_ratio(C, L));
                // pair formulas specialize to the p-group formulas
                CHECK(c_cyclic_pair(eval_factorization({{p, a1}}), eval_factorization({{p, a2}})) ==
                      C);
                CHECK(l_cyclic_pair(eval_factorization({{p, a1}}), eval_factorization({{p, a2}})) ==
                      L);
            }
        }
    }
}

TEST_CASE("abelian p-group cyclic-subgroup count: h-sum vs expansion vs rank-2") {
    for (std::uint64_t p : {2, 3, 5}) {
        for (const auto& part : partitions_up_to(10)) {
            CAPTURE(p);
            CAPTURE(part.size());
            Integer via_h = c_abelian_pgroup(p, part);
            CHECK(via_h == c_abelian_pgroup_expanded(p, part));
            if (part.size() == 2) CHECK(via_h == c_rank2(p, part[0], part[1]));
            if (part.size() == 1) CHECK(via_h == part[0] + 1);
        }
    }
}

TEST_CASE("general abelian invariants: per-prime product vs phi/lcm tuple sum") {
    const std::vector<std::vector<std::uint64_t>> cases = {
        {}, {1}, {6}, {2, 4}, {4, 6}, {2, 2, 2}, {6, 10}, {3, 9, 27}, {2, 4, 8}, {12, 18}, {30, 4},
    };
    for (const auto& inv : cases) {
        CAPTURE(inv.size());
        CHECK(c_abelian(inv) == c_abelian_tuple_sum(inv));
    }
    // pair formulas match the per-prime route for mixed m, n
    for (std::uint64_t m = 1; m <= 30; ++m)
        for (std::uint64_t n = 1; n <= 30; n += 3) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(c_cyclic_pair(m, n) == c_abelian({m, n}));
            std::optional<Integer> L = l_abelian({m, n});
            REQUIRE(L.has_value());
            CHECK(l_cyclic_pair(m, n) == *L);
        }
    // no closed |L| at rank >= 3 with a square factor
    CHECK_FALSE(l_abelian({2, 4, 8}).has_value());
    CHECK(l_abelian({2, 2, 2}) == Integer(16));
    CHECK(l_abelian({4, 6}) == l_cyclic_pair(4, 6));
}

TEST_CASE("hamiltonian groups Q8 x Z_2^n") {
    const long c_vals[] = {5, 10, 20, 40, 80, 160};
    const long b_vals[] = {6, 19, 78, 425, 3132, 31663};
    for (unsigned n = 0; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(c_hamiltonian_2part(n) == c_vals[n]);
        CHECK(l_hamiltonian_2part(n) == b_vals[n]);
    }
    CHECK(l_hamiltonian_2part(6) == 443586);
    CHECK(cdeg_hamiltonian(1, {}) == ratio(10, 19));
    CHECK(cdeg_hamiltonian(1, {9, 3}) == ratio(8, 19)); // (10*8)/(19*10)
    CHECK_THROWS_AS(cdeg_hamiltonian(0, {6}), parameter_error);
    // elementary rank >= 3 odd parts are covered by the Galois numbers ...
    CHECK(cdeg_hamiltonian(0, {3, 3, 3}) == ratio(5, 12)); // (5*14)/(6*28)
    // ... but non-elementary rank >= 3 parts have no closed |L|
    CHECK_THROWS_AS(cdeg_hamiltonian(0, {9, 3, 3}), parameter_error);
}

TEST_CASE("p-groups with a cyclic maximal subgroup") {
    CHECK(c_modular_m(3, 3) == 8);
    CHECK(l_modular_m(3, 3) == 10);
    CHECK(c_modular_m(2, 4) == 8);
    CHECK(l_modular_m(2, 4) == 11);
    CHECK(c_modular_m(5, 3) == 12);
    CHECK(l_modular_m(5, 3) == 14);
    CHECK_THROWS_AS(c_modular_m(2, 3), parameter_error);
    CHECK_THROWS_AS(c_modular_m(3, 2), parameter_error);

    CHECK(cdeg_dihedral2n(3) == ratio(7, 10));
    CHECK(cdeg_dihedral2n(4) == ratio(12, 19));
    CHECK(cdeg_quaternion2n(3) == ratio(5, 6));
    CHECK(cdeg_quaternion2n(4) == ratio(8, 11));
    CHECK(cdeg_quaternion2n(5) == ratio(13, 20));
    CHECK(cdeg_semidihedral2n(4) == ratio(10, 15));
    CHECK(cdeg_semidihedral2n(5) == ratio(17, 28));
    CHECK_THROWS_AS(cdeg_quaternion2n(2), parameter_error);
    CHECK_THROWS_AS(cdeg_semidihedral2n(3), parameter_error);

    // limit behaviour: all three 2-group families tend to 1/2 ...
    for (unsigned n = 14; n <= 16; ++n) {
        CHECK(abs(cdeg_dihedral2n(n) - ratio(1, 2)) < ratio(1, 1000));
        CHECK(abs(cdeg_quaternion2n(n) - ratio(1, 2)) < ratio(1, 1000));
        CHECK(abs(cdeg_semidihedral2n(n) - ratio(1, 2)) < ratio(1, 1000));
    }
    // ... and M(p^n) tends to p/(p+1) as n grows
    for (std::uint64_t p : {2, 3, 5, 7}) {
        CAPTURE(p);
        Integer P(static_cast<unsigned long>(p));
        CHECK(abs(cdeg_modular_m(p, 1000) - make_ratio(P, P + 1)) < ratio(1, 100));
    }
}

TEST_CASE("ZM-group counts") {
    CHECK(c_zm(7, 3, 2) == 9);
    CHECK(l_zm(7, 3, 2) == 10);
    CHECK(c_zm(5, 4, 2) == 12);
    CHECK(l_zm(5, 4, 2) == 14);
    CHECK(c_zm(5, 4, 4) == 9);
    CHECK(l_zm(5, 4, 4) == 10);
    CHECK(c_zm(3, 4, 2) == 7);
    CHECK(l_zm(3, 4, 2) == 8);
    CHECK_THROWS_AS(c_zm(4, 2, 3), parameter_error);
    // degenerate m = 1 is the cyclic group Z_n
    CHECK(c_zm(1, 6, 0) == 4);
    CHECK(l_zm(1, 6, 0) == 4);

    // dihedral groups of order 2m (m odd) are the ZM(m, 2, m-1) instances
    for (std::uint64_t m = 1; m <= 31; m += 2) {
        CAPTURE(m);
        CHECK(cdeg_zm(m, 2, m - 1) == cdeg_dihedral(m));
    }
}

TEST_CASE("dihedral counts via tau and sigma") {
    CHECK(c_dihedral(1) == 2);
    CHECK(l_dihedral(1) == 2);
    CHECK(cdeg_dihedral(3) == ratio(5, 6));
    CHECK(cdeg_dihedral(4) == ratio(7, 10));
    CHECK(cdeg_dihedral(6) == ratio(10, 16));
    CHECK(cdeg_dihedral(12) == ratio(18, 34));
    CHECK_THROWS_AS(c_dihedral(0), parameter_error);
}

TEST_CASE("corrected minimality display equals the count ratio") {
    // cdeg(Z_{p^a1} x Z_{p^a2}) = 1 - (1/p) [1 - (n+1)(p-1)^2 / D] where
    // D = (n-2a1+1)p^{a1+2} - (n-2a1-1)p^{a1+1} - (n+3)p + (n+1), n = a1+a2.
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (unsigned n = 2; n <= 12; ++n) {
            for (unsigned a1 = 1; 2 * a1 <= n; ++a1) {
                CAPTURE(p);
                CAPTURE(n);
                CAPTURE(a1);
                const Integer P(static_cast<unsigned long>(p));
                const long m = static_cast<long>(n) - 2 * static_cast<long>(a1);
                Integer D = Integer(m + 1) * pow_int(p, a1 + 2) - Integer(m - 1) * pow_int(p, a1 + 1) -
                            Integer(static_cast<long>(n) + 3) * P + Integer(static_cast<long>(n) + 1);
                Rational display = 1 - make_ratio(Integer(1), P) *
                                           (1 - make_ratio(Integer(static_cast<long>(n) + 1) *
                                                               (P - 1) * (P - 1),
                                                           D));
                CHECK(display == cdeg_rank2(p, a1, n - a1));
            }
        }
    }
}

TEST_CASE("formula dispatch covers every family and multiplies over coprime blocks") {
    auto full = [](const GroupSpec& spec) {
        FormulaCounts fc = formula_counts(spec);
        REQUIRE(fc.num_cyclic.has_value());
        REQUIRE(fc.num_subgroups.has_value());
        return *fc.cdeg();
    };
    CHECK(full(GroupSpec::cyclic(12)) == ratio(1, 1));
    CHECK(full(GroupSpec::dihedral(4)) == ratio(7, 10));
    CHECK(full(GroupSpec::generalized_quaternion(5)) == ratio(13, 20));
    CHECK(full(GroupSpec::semidihedral(4)) == ratio(2, 3));
    CHECK(full(GroupSpec::modular_m(3, 3)) == ratio(4, 5));
    CHECK(full(GroupSpec::zm(7, 3, 2)) == ratio(9, 10));
    CHECK(full(GroupSpec::elementary_abelian(3, 3)) == ratio(1, 2));
    CHECK(full(GroupSpec::abelian({3, 9})) == ratio(8, 10));

    // coprime product: counts multiply
    GroupSpec coprime = GroupSpec::product({GroupSpec::dihedral(4), GroupSpec::cyclic(15)});
    CHECK(full(coprime) == ratio(7, 10) * ratio(1, 1));
    // abelian factors sharing primes are merged, not multiplied
    GroupSpec shared = GroupSpec::product({GroupSpec::cyclic(4), GroupSpec::cyclic(6)});
    CHECK(full(shared) == make_ratio(c_cyclic_pair(4, 6), l_cyclic_pair(4, 6)));
    // hamiltonian block detection, with and without an odd tail
    GroupSpec ham = GroupSpec::product({GroupSpec::generalized_quaternion(3),
                                        GroupSpec::elementary_abelian(2, 2)});
    CHECK(full(ham) == ratio(20, 78));
    GroupSpec ham_odd = GroupSpec::product(
        {GroupSpec::generalized_quaternion(3), GroupSpec::cyclic(2), GroupSpec::abelian({9, 3})});
    CHECK(full(ham_odd) == ratio(8, 19));

    // non-coprime non-hamiltonian product: no closed form
    FormulaCounts none =
        formula_counts(GroupSpec::product({GroupSpec::dihedral(3), GroupSpec::cyclic(2)}));
    CHECK_FALSE(none.num_cyclic.has_value());
    CHECK_FALSE(none.num_subgroups.has_value());
    // abelian rank >= 3 at a prime: |C| known, |L| not
    FormulaCounts partial = formula_counts(GroupSpec::abelian({2, 4, 8}));
    REQUIRE(partial.num_cyclic.has_value());
    CHECK(*partial.num_cyclic == c_abelian({2, 4, 8}));
    CHECK_FALSE(partial.num_subgroups.has_value());
    CHECK_FALSE(partial.cdeg().has_value());
}

TEST_CASE("formula counts agree with the brute-force oracle") {
    std::vector<GroupSpec> specs;
    for (std::uint64_t n = 1; n <= 30; ++n) specs.push_back(GroupSpec::cyclic(n));
    for (std::uint64_t m = 1; m <= 15; ++m) specs.push_back(GroupSpec::dihedral(m));
    for (unsigned n = 3; n <= 6; ++n) specs.push_back(GroupSpec::generalized_quaternion(n));
    for (unsigned n = 4; n <= 6; ++n) specs.push_back(GroupSpec::semidihedral(n));
    specs.push_back(GroupSpec::modular_m(3, 3));
    specs.push_back(GroupSpec::modular_m(3, 4));
    specs.push_back(GroupSpec::modular_m(5, 3));
    specs.push_back(GroupSpec::modular_m(2, 4));
    specs.push_back(GroupSpec::modular_m(2, 5));
    for (unsigned k = 1; k <= 5; ++k) specs.push_back(GroupSpec::elementary_abelian(2, k));
    for (unsigned k = 1; k <= 3; ++k) specs.push_back(GroupSpec::elementary_abelian(3, k));
    specs.push_back(GroupSpec::elementary_abelian(5, 2));
    specs.push_back(GroupSpec::elementary_abelian(7, 2));
    specs.push_back(GroupSpec::abelian({2, 8}));
    specs.push_back(GroupSpec::abelian({4, 8}));
    specs.push_back(GroupSpec::abelian({3, 9}));
    specs.push_back(GroupSpec::abelian({4, 6}));
    specs.push_back(GroupSpec::abelian({12, 18}));
    specs.push_back(GroupSpec::abelian({2, 4, 8}));
    specs.push_back(GroupSpec::zm(7, 3, 2));
    specs.push_back(GroupSpec::zm(5, 4, 2));
    specs.push_back(GroupSpec::zm(5, 4, 4));
    specs.push_back(GroupSpec::zm(3, 4, 2));
    specs.push_back(GroupSpec::zm(13, 4, 5));
    specs.push_back(GroupSpec::product({GroupSpec::dihedral(3), GroupSpec::cyclic(5)}));
    specs.push_back(GroupSpec::product(
        {GroupSpec::elementary_abelian(2, 2), GroupSpec::elementary_abelian(3, 2)}));
    specs.push_back(GroupSpec::product({GroupSpec::generalized_quaternion(3),
                                        GroupSpec::elementary_abelian(2, 2)}));
    specs.push_back(GroupSpec::product(
        {GroupSpec::generalized_quaternion(3), GroupSpec::cyclic(2), GroupSpec::cyclic(9)}));

    for (const GroupSpec& spec : specs) {
        CAPTURE(spec.name());
        FormulaCounts fc = formula_counts(spec);
        SubgroupLattice lat = enumerate_subgroups(build_group(spec));
        REQUIRE(fc.num_cyclic.has_value());
        CHECK(*fc.num_cyclic == lat.num_cyclic());
        if (fc.num_subgroups) CHECK(*fc.num_subgroups == lat.size());
    }
}

TEST_CASE("all-proper-cyclic groups sit at cdeg = (|L|-1)/|L|") {
    // the characterization theorem, crossed between formulas and oracle
    const GroupSpec at_bound[] = {
        GroupSpec::elementary_abelian(2, 2),
        GroupSpec::elementary_abelian(7, 2),
        GroupSpec::generalized_quaternion(3),
        GroupSpec::zm(7, 3, 2),
        GroupSpec::zm(5, 4, 4),
    };
    for (const GroupSpec& spec : at_bound) {
        CAPTURE(spec.name());
        FormulaCounts fc = formula_counts(spec);
        REQUIRE(fc.cdeg().has_value());
        CHECK(*fc.cdeg() == make_ratio(*fc.num_subgroups - 1, *fc.num_subgroups));
        CHECK(all_proper_cyclic(enumerate_subgroups(build_group(spec))));
    }
    const GroupSpec off_bound[] = {
        GroupSpec::dihedral(4),
        GroupSpec::semidihedral(4),
        GroupSpec::modular_m(3, 3),
        GroupSpec::zm(5, 4, 2),
    };
    for (const GroupSpec& spec : off_bound) {
        CAPTURE(spec.name());
        FormulaCounts fc = formula_counts(spec);
        REQUIRE(fc.cdeg().has_value());
        CHECK(*fc.cdeg() != make_ratio(*fc.num_subgroups - 1, *fc.num_subgroups));
        CHECK_FALSE(all_proper_cyclic(enumerate_subgroups(build_group(spec))));
    }
}
