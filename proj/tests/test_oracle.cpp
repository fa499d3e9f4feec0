#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "cyc/cayley.hpp"
#include "cyc/groupspec.hpp"
#include "cyc/lattice.hpp"
#include "micro_oracle.hpp"

using namespace cyc;

namespace {

Rational ratio(long num, long den) { return make_ratio(Integer(num), Integer(den)); }

struct LatticeCounts {
    std::size_t total, cyclic, normal;
};

LatticeCounts counts_of(const GroupSpec& spec, OracleLimits lim = {}) {
    CayleyGroup g = build_group(spec, lim);
    SubgroupLattice lat = enumerate_subgroups(g, lim);
    return {lat.size(), lat.num_cyclic(), lat.num_normal()};
}

} // namespace

TEST_CASE("group spec validation names the violated condition") {
    CHECK_THROWS_AS(GroupSpec::cyclic(0), parameter_error);
    CHECK_THROWS_AS(GroupSpec::elementary_abelian(4, 2), parameter_error);
    CHECK_THROWS_AS(GroupSpec::elementary_abelian(3, 0), parameter_error);
    CHECK_THROWS_AS(GroupSpec::abelian({}), parameter_error);
    CHECK_THROWS_AS(GroupSpec::dihedral(0), parameter_error);
    CHECK_THROWS_AS(GroupSpec::generalized_quaternion(2), parameter_error);
    CHECK_THROWS_AS(GroupSpec::semidihedral(3), parameter_error);
    CHECK_THROWS_AS(GroupSpec::modular_m(3, 2), parameter_error);
    CHECK_THROWS_AS(GroupSpec::modular_m(2, 3), parameter_error);  // p=2 needs n>=4
    CHECK_THROWS_AS(GroupSpec::modular_m(6, 4), parameter_error);  // p not prime
    CHECK_THROWS_AS(GroupSpec::zm(4, 2, 3), parameter_error);      // gcd(m,n) != 1
    CHECK_THROWS_AS(GroupSpec::zm(7, 3, 3), parameter_error);      // 3^3 != 1 mod 7
    CHECK_THROWS_AS(GroupSpec::zm(5, 3, 1), parameter_error);      // gcd(m, r-1) != 1
    CHECK(GroupSpec::zm(1, 6, 0).order() == 6);                    // degenerate: Z_6
    CHECK(GroupSpec::dihedral(4).name() == "D8");
    CHECK(GroupSpec::generalized_quaternion(4).name() == "Q16");
    CHECK(GroupSpec::modular_m(3, 3).order() == 27);
}

TEST_CASE("defining relations hold on the constructed tables") {
    SUBCASE("dihedral D8: r^4 = s^2 = e, s r s^-1 = r^-1") {
        CayleyGroup g = build_group(GroupSpec::dihedral(4));
        std::uint32_t r = 1, s = 4; // index j*m + i with m = 4
        std::uint32_t r4 = g.mul(g.mul(g.mul(r, r), r), r);
        CHECK(r4 == g.identity);
        CHECK(g.mul(s, s) == g.identity);
        CHECK(g.conj(s, r) == g.inverse[r]);
        CHECK_FALSE(g.abelian);
    }
    SUBCASE("ZM(7,3,2): b^-1 a b = a^2") {
        CayleyGroup g = build_group(GroupSpec::zm(7, 3, 2));
        std::uint32_t a = 1, b = 7;
        CHECK(g.mul(g.mul(g.inverse[b], a), b) == g.mul(a, a));
        CHECK(g.order == 21);
        CHECK_FALSE(g.abelian);
    }
    SUBCASE("M(3,3): y x y^-1 = x^4") {
        CayleyGroup g = build_group(GroupSpec::modular_m(3, 3));
        std::uint32_t x = 1, y = 9; // m = 9
        std::uint32_t x4 = g.mul(g.mul(g.mul(x, x), x), x);
        CHECK(g.conj(y, x) == x4);
    }
    SUBCASE("Q16: y^2 = x^4, y x y^-1 = x^-1") {
        CayleyGroup g = build_group(GroupSpec::generalized_quaternion(4));
        std::uint32_t x = 1, y = 8; // m = 8
        std::uint32_t x4 = g.mul(g.mul(g.mul(x, x), x), x);
        CHECK(g.mul(y, y) == x4);
        CHECK(g.conj(y, x) == g.inverse[x]);
    }
    SUBCASE("SD16: y x y^-1 = x^3") {
        CayleyGroup g = build_group(GroupSpec::semidihedral(4));
        std::uint32_t x = 1, y = 8;
        CHECK(g.conj(y, x) == g.mul(g.mul(x, x), x));
    }
    SUBCASE("cyclic Z6: element 1 generates") {
        CayleyGroup g = build_group(GroupSpec::cyclic(6));
        std::uint32_t cur = 1;
        int steps = 1;
        while (cur != g.identity) {
            cur = g.mul(cur, 1);
            ++steps;
        }
        CHECK(steps == 6);
        CHECK(g.abelian);
    }
}

TEST_CASE("order cap and environment override") {
    CHECK_THROWS_AS(build_group(GroupSpec::cyclic(3000)), resource_error);
    OracleLimits wide;
    wide.max_order = 4000;
    CHECK(build_group(GroupSpec::cyclic(3000), wide).order == 3000);

    setenv("CYC_CAP", "123", 1);
    CHECK(OracleLimits::from_env().max_order == 123);
    unsetenv("CYC_CAP");
    CHECK(OracleLimits::from_env().max_order == 2000);
}

TEST_CASE("element order spectrum") {
    CHECK(element_orders(build_group(GroupSpec::cyclic(6))) ==
          OrderSpectrum{{1, 1}, {2, 1}, {3, 1}, {6, 1}});
    CHECK(element_orders(build_group(GroupSpec::elementary_abelian(2, 2))) ==
          OrderSpectrum{{1, 1}, {2, 3}});
    CHECK(element_orders(build_group(GroupSpec::generalized_quaternion(3))) ==
          OrderSpectrum{{1, 1}, {2, 1}, {4, 3}});
}

TEST_CASE("lattice counts: pinned ground truth") {
    // (spec, |L|, |C|, |N|)
    struct Row {
        GroupSpec spec;
        std::size_t total, cyclic, normal;
    };
    const Row rows[] = {
        {GroupSpec::cyclic(12), 6, 6, 6},
        {GroupSpec::dihedral(1), 2, 2, 2},
        {GroupSpec::dihedral(2), 5, 4, 5},
        {GroupSpec::dihedral(3), 6, 5, 3},
        {GroupSpec::dihedral(4), 10, 7, 6},
        {GroupSpec::dihedral(6), 16, 10, 7},
        {GroupSpec::dihedral(12), 34, 18, 9},
        {GroupSpec::generalized_quaternion(3), 6, 5, 6},
        {GroupSpec::generalized_quaternion(4), 11, 8, 7},
        {GroupSpec::generalized_quaternion(5), 20, 13, 8},
        {GroupSpec::semidihedral(4), 15, 10, 7},
        {GroupSpec::semidihedral(5), 28, 17, 8},
        {GroupSpec::modular_m(3, 3), 10, 8, 7},
        {GroupSpec::modular_m(2, 4), 11, 8, 9},
        {GroupSpec::elementary_abelian(2, 2), 5, 4, 5},
        {GroupSpec::elementary_abelian(2, 3), 16, 8, 16},
        {GroupSpec::elementary_abelian(2, 4), 67, 16, 67},
        {GroupSpec::elementary_abelian(2, 5), 374, 32, 374},
        {GroupSpec::elementary_abelian(2, 6), 2825, 64, 2825},
        {GroupSpec::elementary_abelian(3, 2), 6, 5, 6},
        {GroupSpec::abelian({2, 4}), 8, 6, 8},
        {GroupSpec::abelian({4, 4}), 15, 10, 15},
        {GroupSpec::abelian({3, 9}), 10, 8, 10},
        {GroupSpec::abelian({2, 2, 3, 3}), 30, 20, 30},
        {GroupSpec::zm(7, 3, 2), 10, 9, 3},
        {GroupSpec::zm(5, 4, 2), 14, 12, 4},
        {GroupSpec::zm(5, 4, 4), 10, 9, 5},
        {GroupSpec::zm(3, 4, 2), 8, 7, 5},
        {GroupSpec::product({GroupSpec::dihedral(3), GroupSpec::cyclic(2)}), 16, 10, 7},
        {GroupSpec::product({GroupSpec::generalized_quaternion(3), GroupSpec::cyclic(2)}), 19, 10,
         19},
        {GroupSpec::product(
             {GroupSpec::generalized_quaternion(3), GroupSpec::elementary_abelian(2, 2)}),
         78, 20, 78},
        {GroupSpec::product(
             {GroupSpec::generalized_quaternion(3), GroupSpec::elementary_abelian(2, 3)}),
         425, 40, 425},
    };
    for (const auto& row : rows) {
        CAPTURE(row.spec.name());
        LatticeCounts got = counts_of(row.spec);
        CHECK(got.total == row.total);
        CHECK(got.cyclic == row.cyclic);
        CHECK(got.normal == row.normal);
    }
}

TEST_CASE("micro-oracle certifies the join enumerator on small groups") {
    const GroupSpec specs[] = {
        GroupSpec::cyclic(12),
        GroupSpec::cyclic(16),
        GroupSpec::dihedral(3),
        GroupSpec::dihedral(4),
        GroupSpec::dihedral(6),
        GroupSpec::generalized_quaternion(3),
        GroupSpec::generalized_quaternion(4),
        GroupSpec::semidihedral(4),
        GroupSpec::modular_m(2, 4),
        GroupSpec::elementary_abelian(2, 2),
        GroupSpec::elementary_abelian(2, 3),
        GroupSpec::elementary_abelian(2, 4),
        GroupSpec::abelian({2, 4}),
        GroupSpec::abelian({2, 8}),
        GroupSpec::product({GroupSpec::dihedral(3), GroupSpec::cyclic(2)}),
        GroupSpec::zm(7, 3, 2),   // order 21
        GroupSpec::dihedral(12),  // order 24
    };
    for (const auto& spec : specs) {
        CAPTURE(spec.name());
        CayleyGroup g = build_group(spec);
        SubgroupLattice lat = enumerate_subgroups(g);
        MicroCounts micro = micro_oracle(g);
        CHECK(lat.size() == micro.total);
        CHECK(lat.num_cyclic() == micro.cyclic);
        CHECK(lat.num_normal() == micro.normal);
    }
}

TEST_CASE("degree ratios from the lattice") {
    CHECK(cdeg_oracle(GroupSpec::cyclic(1)) == ratio(1, 1));
    CHECK(cdeg_oracle(GroupSpec::cyclic(2)) == ratio(1, 1));
    CHECK(cdeg_oracle(GroupSpec::cyclic(12)) == ratio(1, 1));
    CHECK(cdeg_oracle(GroupSpec::dihedral(3)) == ratio(5, 6));
    CHECK(cdeg_oracle(GroupSpec::product({GroupSpec::dihedral(3), GroupSpec::cyclic(2)})) ==
          ratio(5, 8));
    CHECK(cdeg_oracle(GroupSpec::generalized_quaternion(3)) == ratio(5, 6));
    CHECK(cdeg_oracle(GroupSpec::generalized_quaternion(4)) == ratio(8, 11));
    CHECK(cdeg_oracle(GroupSpec::semidihedral(4)) == ratio(2, 3));
    CHECK(cdeg_oracle(GroupSpec::modular_m(3, 3)) == ratio(4, 5));
    CHECK(cdeg_oracle(GroupSpec::zm(7, 3, 2)) == ratio(9, 10));

    // D_8 has 6 normal subgroups of 10: the two reflection classes fuse
    CHECK(ndeg_oracle(GroupSpec::dihedral(4)) == ratio(3, 5));
    CHECK(ndeg_oracle(GroupSpec::dihedral(3)) == ratio(1, 2));
    CHECK(ndeg_oracle(GroupSpec::generalized_quaternion(3)) == ratio(1, 1));
}

TEST_CASE("subgroup commutativity degree") {
    CHECK(sd_oracle(GroupSpec::cyclic(12)) == ratio(1, 1));
    CHECK(sd_oracle(GroupSpec::generalized_quaternion(3)) == ratio(1, 1));
    // S_3: only the six ordered pairs of distinct reflection subgroups fail
    CHECK(sd_oracle(GroupSpec::dihedral(3)) == ratio(5, 6));
    // D_8: the 8 ordered cross-pairs of reflection subgroups from different
    // Klein four-subgroups fail; (100 - 8)/100
    CHECK(sd_oracle(GroupSpec::dihedral(4)) == ratio(23, 25));
}

TEST_CASE("all_proper_cyclic instances") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
        CAPTURE(p);
        CayleyGroup g = build_group(GroupSpec::elementary_abelian(p, 2));
        CHECK(all_proper_cyclic(enumerate_subgroups(g)));
    }
    const GroupSpec yes[] = {
        GroupSpec::cyclic(12),
        GroupSpec::generalized_quaternion(3),
        GroupSpec::zm(7, 3, 2),
        GroupSpec::zm(5, 4, 4),
        GroupSpec::zm(3, 4, 2),
    };
    for (const auto& spec : yes) {
        CAPTURE(spec.name());
        CHECK(all_proper_cyclic(enumerate_subgroups(build_group(spec))));
    }
    const GroupSpec no[] = {
        GroupSpec::dihedral(4),
        GroupSpec::generalized_quaternion(4),
        GroupSpec::semidihedral(4),
        GroupSpec::modular_m(3, 3),
        GroupSpec::elementary_abelian(2, 3),
        GroupSpec::zm(5, 4, 2),
    };
    for (const auto& spec : no) {
        CAPTURE(spec.name());
        CHECK_FALSE(all_proper_cyclic(enumerate_subgroups(build_group(spec))));
    }
}

TEST_CASE("order spectrum identities and lattice consistency") {
    const GroupSpec specs[] = {
        GroupSpec::cyclic(30),
        GroupSpec::dihedral(9),
        GroupSpec::generalized_quaternion(5),
        GroupSpec::semidihedral(5),
        GroupSpec::modular_m(5, 3),
        GroupSpec::elementary_abelian(3, 3),
        GroupSpec::abelian({4, 6}),
        GroupSpec::zm(5, 4, 2),
        GroupSpec::product({GroupSpec::dihedral(3), GroupSpec::cyclic(5)}),
    };
    for (const auto& spec : specs) {
        CAPTURE(spec.name());
        CayleyGroup g = build_group(spec);
        OrderSpectrum spectrum = element_orders(g);
        std::uint64_t weighted = 0, plain = 0;
        for (auto [d, c] : spectrum) {
            CHECK(g.order % d == 0);
            weighted += c * euler_phi(d);
            plain += c;
        }
        CHECK(weighted == g.order); // sum c(d) phi(d) = |G|
        SubgroupLattice lat = enumerate_subgroups(g);
        CHECK(plain == lat.num_cyclic()); // sum c(d) = |C(G)|
        // Lagrange over the whole lattice
        for (std::size_t i = 0; i < lat.size(); ++i) REQUIRE(g.order % lat.subgroup_order(i) == 0);
    }
}

TEST_CASE("lattice is closed under intersection") {
    const GroupSpec specs[] = {
        GroupSpec::product({GroupSpec::dihedral(3), GroupSpec::cyclic(2)}),
        GroupSpec::dihedral(12),
        GroupSpec::elementary_abelian(2, 4),
        GroupSpec::zm(5, 4, 2),
    };
    for (const auto& spec : specs) {
        CAPTURE(spec.name());
        CayleyGroup g = build_group(spec);
        SubgroupLattice lat = enumerate_subgroups(g);
        std::vector<std::uint64_t> meet(lat.words());
        for (std::size_t i = 0; i < lat.size(); ++i) {
            for (std::size_t j = i + 1; j < lat.size(); ++j) {
                auto a = lat.mask(i), b = lat.mask(j);
                for (std::size_t w = 0; w < lat.words(); ++w) meet[w] = a[w] & b[w];
                REQUIRE(lat.find(meet).has_value());
            }
        }
    }
}

TEST_CASE("coprime multiplicativity of cdeg, with the non-coprime guard") {
    Rational s3 = cdeg_oracle(GroupSpec::dihedral(3));
    CHECK(cdeg_oracle(GroupSpec::product({GroupSpec::dihedral(3), GroupSpec::cyclic(5)})) ==
          s3 * ratio(1, 1));
    Rational a = cdeg_oracle(GroupSpec::elementary_abelian(2, 2));
    Rational b = cdeg_oracle(GroupSpec::elementary_abelian(3, 2));
    CHECK(cdeg_oracle(GroupSpec::product({GroupSpec::elementary_abelian(2, 2),
                                          GroupSpec::elementary_abelian(3, 2)})) == a * b);
    // orders not coprime: the product rule fails for S_3 x Z_2
    Rational z2 = cdeg_oracle(GroupSpec::cyclic(2));
    CHECK(cdeg_oracle(GroupSpec::product({GroupSpec::dihedral(3), GroupSpec::cyclic(2)})) !=
          s3 * z2);
}

TEST_CASE("resource budgets fail fast") {
    OracleLimits tiny;
    tiny.max_subgroups = 10;
    CHECK_THROWS_AS(enumerate_subgroups(build_group(GroupSpec::elementary_abelian(2, 4)), tiny),
                    resource_error);
    OracleLimits strained;
    strained.max_work = 1000;
    CHECK_THROWS_AS(enumerate_subgroups(build_group(GroupSpec::elementary_abelian(2, 4)), strained),
                    resource_error);
}
