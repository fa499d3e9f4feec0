#pragma once
// Closed-form counts of subgroups and cyclic subgroups for the group
// families where exact formulas exist, and the cyclicity degrees built
// from them. Everything is exact (GMP integers/rationals); the brute-force
// lattice enumerator in lattice.hpp is the independent cross-check.

#include <cstdint>
#include <optional>
#include <vector>

#include "cyc/arith.hpp"
#include "cyc/groupspec.hpp"

namespace cyc {

// --- elementary abelian Z_p^k --------------------------------------------

// |L(Z_p^k)| = sum over j of the Gaussian binomials [k choose j]_p.
Integer galois_number(unsigned k, std::uint64_t p);
// |C(Z_p^k)| = 1 + (p^k - 1)/(p - 1)  (= 2 + p + ... + p^{k-1}).
Integer c_elem_abelian(std::uint64_t p, unsigned k);
Rational cdeg_elem_abelian(std::uint64_t p, unsigned k);

// --- abelian groups --------------------------------------------------------

// Z_m x Z_n for arbitrary m, n >= 1:
//   cs(m,n) = sum_{a|m, b|n} phi(gcd(a,b)),   s(m,n) = sum_{a|m, b|n} gcd(a,b).
Integer c_cyclic_pair(std::uint64_t m, std::uint64_t n);
Integer l_cyclic_pair(std::uint64_t m, std::uint64_t n);

// Abelian p-group with exponent partition a_1 <= ... <= a_k (sorted copies
// are taken internally). |C| is computed by counting elements of each order:
// elements x with x^{p^a} = 1 number prod_i p^{min(a, a_i)}, so the cyclic
// subgroups of order p^a are (h(a) p^a - h(a-1) p^{a-1}) / (p^a - p^{a-1})
// with h(a) = prod_{i<k} p^{min(a, a_i)}; adding 1 for the trivial subgroup.
Integer c_abelian_pgroup(std::uint64_t p, std::vector<unsigned> part);
// Same count, via the closed expansion obtained by summing each segment
// a_{i-1} < a <= a_i in geometric form:
//   1 + (a_k - a_{k-1}) p^{s_k}
//     + sum_{i<k} p^{s_i} (p^{k-i+1}-1)/(p-1) sum_{b=a_{i-1}}^{a_i-1} p^{(k-i)b}
// where s_i = a_1 + ... + a_{i-1}. Kept as an independent second route.
Integer c_abelian_pgroup_expanded(std::uint64_t p, std::vector<unsigned> part);
// |L| for the partitions where a closed form exists: rank <= 2 and the
// elementary case (all exponents 1); nullopt otherwise.
std::optional<Integer> l_abelian_pgroup(std::uint64_t p, std::vector<unsigned> part);

// General abelian group given by invariants Z_{n_1} x ... x Z_{n_k}
// (any positive integers, not necessarily a divisibility chain).
Integer c_abelian(const std::vector<std::uint64_t>& invariants);
// The phi/lcm tuple sum over divisor tuples (d_i | n_i):
//   sum phi(d_1)...phi(d_k) / phi(lcm(d_1,...,d_k))
// — slower, used as an independent cross-check of c_abelian.
Integer c_abelian_tuple_sum(const std::vector<std::uint64_t>& invariants);
std::optional<Integer> l_abelian(const std::vector<std::uint64_t>& invariants);

// Rank-2 abelian p-group Z_{p^a1} x Z_{p^a2}, a1 <= a2:
//   |C| = 2(p^a1 - 1)/(p-1) + (a2 - a1 + 1) p^a1
//   |L| = ((d+1)p^{a1+2} - (d-1)p^{a1+1} - (a1+a2+3)p + (a1+a2+1)) / (p-1)^2
// with d = a2 - a1. These satisfy p|C| - (p-1)|L| = a1 + a2 + 1.
Integer c_rank2(std::uint64_t p, unsigned a1, unsigned a2);
Integer l_rank2(std::uint64_t p, unsigned a1, unsigned a2);
Rational cdeg_rank2(std::uint64_t p, unsigned a1, unsigned a2);
// Single-fraction form of the same ratio (numerator (p-1)^2 |C| over
// denominator (p-1)^2 |L|, with both polynomials written out).
Rational cdeg_rank2_closed(std::uint64_t p, unsigned a1, unsigned a2);

// --- hamiltonian groups Q8 x Z_2^n x (odd abelian) -------------------------

Integer c_hamiltonian_2part(unsigned n); // |C(Q8 x Z_2^n)| = 5 * 2^n
Integer l_hamiltonian_2part(unsigned n); // |L(Q8 x Z_2^n)| by Goursat counting
// cdeg of Q8 x Z_2^n x A for an odd abelian A given by its invariants.
// Requires a closed |L| for A (per-prime rank <= 2), else parameter_error.
Rational cdeg_hamiltonian(unsigned n, const std::vector<std::uint64_t>& odd_invariants);

// --- p-groups with a cyclic maximal subgroup -------------------------------

Integer c_modular_m(std::uint64_t p, unsigned n); // (n-1)p + 2
Integer l_modular_m(std::uint64_t p, unsigned n); // (1+p)n + 1 - p
Integer c_dihedral2n(unsigned n);                 // 2^{n-1} + n
Integer l_dihedral2n(unsigned n);                 // 2^n + n - 1
Integer c_quaternion2n(unsigned n);               // 2^{n-2} + n
Integer l_quaternion2n(unsigned n);               // 2^{n-1} + n - 1
Integer c_semidihedral2n(unsigned n);             // 3*2^{n-3} + n
Integer l_semidihedral2n(unsigned n);             // 3*2^{n-2} + n - 1
Rational cdeg_modular_m(std::uint64_t p, unsigned n);
Rational cdeg_dihedral2n(unsigned n);
Rational cdeg_quaternion2n(unsigned n);
Rational cdeg_semidihedral2n(unsigned n);

// --- ZM groups and dihedral groups -----------------------------------------

// For ZM(m,n,r), with Q(n1) = 1 + r^{n1} + r^{2 n1} + ... + r^{n - n1}:
//   |L| = sum_{m1|m, n1|n} gcd(m1, Q(n1))
//   |C| = the same sum restricted to pairs with (m/m1) | r^{n1} - 1.
Integer c_zm(std::uint64_t m, std::uint64_t n, std::uint64_t r);
Integer l_zm(std::uint64_t m, std::uint64_t n, std::uint64_t r);
Rational cdeg_zm(std::uint64_t m, std::uint64_t n, std::uint64_t r);

// Dihedral group of order 2m, all m >= 1:
//   |C| = m + tau(m),   |L| = tau(m) + sigma(m).
Integer c_dihedral(std::uint64_t m);
Integer l_dihedral(std::uint64_t m);
Rational cdeg_dihedral(std::uint64_t m);

// --- dispatch ---------------------------------------------------------------

// Formula-side counts for an arbitrary spec. Either field is nullopt when
// no closed form covers it (e.g. |L| of an abelian p-group of rank >= 3,
// or a product mixing non-coprime non-abelian factors).
struct FormulaCounts {
    std::optional<Integer> num_cyclic;
    std::optional<Integer> num_subgroups;

    std::optional<Rational> cdeg() const {
        if (!num_cyclic || !num_subgroups) return std::nullopt;
        return make_ratio(*num_cyclic, *num_subgroups);
    }
};

FormulaCounts formula_counts(const GroupSpec& spec);

} // namespace cyc
