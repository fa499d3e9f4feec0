#include "cyc/formulas.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cyc {

namespace {

Integer exact_div(const Integer& num, const Integer& den) {
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0)
        throw std::logic_error("exact_div: not divisible");
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Integer from_u64(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

void check_prime(std::uint64_t p, const char* who) {
    if (!is_prime(p)) throw parameter_error(std::string(who) + ": p must be prime");
}

void check_partition(const std::vector<unsigned>& part, const char* who) {
    for (unsigned a : part)
        if (a == 0) throw parameter_error(std::string(who) + ": exponents must be >= 1");
}

// prod_{i < k} p^{min(a, part[i])} over the ascending partition, i.e. the
// number of solutions of x^{p^a} = 1 in the product of all but the last factor.
Integer h_all_but_last(std::uint64_t p, const std::vector<unsigned>& part, unsigned a) {
    unsigned long e = 0;
    for (std::size_t i = 0; i + 1 < part.size(); ++i) e += std::min(a, part[i]);
    return pow_int(p, e);
}

} // namespace

// --- elementary abelian -----------------------------------------------------

Integer galois_number(unsigned k, std::uint64_t p) {
    Integer total = 0;
    for (unsigned j = 0; j <= k; ++j) total += gaussian_binomial(k, j, p);
    return total;
}

Integer c_elem_abelian(std::uint64_t p, unsigned k) {
    check_prime(p, "c_elem_abelian");
    return 1 + exact_div(pow_int(p, k) - 1, from_u64(p) - 1);
}

Rational cdeg_elem_abelian(std::uint64_t p, unsigned k) {
    return make_ratio(c_elem_abelian(p, k), galois_number(k, p));
}

// --- abelian ----------------------------------------------------------------

Integer c_cyclic_pair(std::uint64_t m, std::uint64_t n) {
    if (m == 0 || n == 0) throw parameter_error("c_cyclic_pair: m, n must be >= 1");
    Integer total = 0;
    for (std::uint64_t a : divisors(m))
        for (std::uint64_t b : divisors(n)) total += from_u64(euler_phi(std::gcd(a, b)));
    return total;
}

Integer l_cyclic_pair(std::uint64_t m, std::uint64_t n) {
    if (m == 0 || n == 0) throw parameter_error("l_cyclic_pair: m, n must be >= 1");
    Integer total = 0;
    for (std::uint64_t a : divisors(m))
        for (std::uint64_t b : divisors(n)) total += from_u64(std::gcd(a, b));
    return total;
}

Integer c_abelian_pgroup(std::uint64_t p, std::vector<unsigned> part) {
    check_prime(p, "c_abelian_pgroup");
    check_partition(part, "c_abelian_pgroup");
    if (part.empty()) return 1;
    std::sort(part.begin(), part.end());
    Integer total = 1;
    Integer pa = 1; // p^{a-1} entering each iteration
    for (unsigned a = 1; a <= part.back(); ++a) {
        Integer pa_next = pa * from_u64(p);
        // elements of order exactly p^a, divided by phi(p^a)
        Integer num = pa_next * h_all_but_last(p, part, a) - pa * h_all_but_last(p, part, a - 1);
        total += exact_div(num, pa_next - pa);
        pa = pa_next;
    }
    return total;
}

Integer c_abelian_pgroup_expanded(std::uint64_t p, std::vector<unsigned> part) {
    check_prime(p, "c_abelian_pgroup_expanded");
    check_partition(part, "c_abelian_pgroup_expanded");
    if (part.empty()) return 1;
    std::sort(part.begin(), part.end());
    const std::size_t k = part.size();
    const Integer P = from_u64(p);

    auto alpha = [&](std::size_t i) -> unsigned { return i == 0 ? 0 : part[i - 1]; };
    unsigned long prefix = 0; // s_i = a_1 + ... + a_{i-1}
    Integer total = 1;
    for (std::size_t i = 1; i < k; ++i) {
        Integer geo = 0; // sum_{b = a_{i-1}}^{a_i - 1} p^{(k-i) b}
        for (unsigned b = alpha(i - 1); b < alpha(i); ++b)
            geo += pow_int(p, static_cast<unsigned long>(k - i) * b);
        total += pow_int(p, prefix) * exact_div(pow_int(p, k - i + 1) - 1, P - 1) * geo;
        prefix += alpha(i);
    }
    total += from_u64(alpha(k) - alpha(k - 1)) * pow_int(p, prefix);
    return total;
}

std::optional<Integer> l_abelian_pgroup(std::uint64_t p, std::vector<unsigned> part) {
    check_prime(p, "l_abelian_pgroup");
    check_partition(part, "l_abelian_pgroup");
    std::sort(part.begin(), part.end());
    if (part.empty()) return Integer(1);
    if (part.size() == 1) return from_u64(part[0] + 1);
    if (part.size() == 2) return l_rank2(p, part[0], part[1]);
    if (part.back() == 1) return galois_number(static_cast<unsigned>(part.size()), p);
    return std::nullopt;
}

Integer c_abelian(const std::vector<std::uint64_t>& invariants) {
    std::map<std::uint64_t, std::vector<unsigned>> by_prime;
    for (std::uint64_t n : invariants) {
        if (n == 0) throw parameter_error("c_abelian: invariants must be >= 1");
        for (const PrimePower& pp : factorize(n)) by_prime[pp.prime].push_back(pp.exponent);
    }
    Integer total = 1;
    for (auto& [p, part] : by_prime) total *= c_abelian_pgroup(p, part);
    return total;
}

Integer c_abelian_tuple_sum(const std::vector<std::uint64_t>& invariants) {
    std::vector<std::vector<std::uint64_t>> divs;
    for (std::uint64_t n : invariants) {
        if (n == 0) throw parameter_error("c_abelian_tuple_sum: invariants must be >= 1");
        divs.push_back(divisors(n));
    }
    Rational total = 0;
    std::vector<std::size_t> idx(divs.size(), 0);
    while (true) {
        Integer num = 1;
        std::uint64_t lcm = 1;
        for (std::size_t i = 0; i < divs.size(); ++i) {
            std::uint64_t d = divs[i][idx[i]];
            num *= from_u64(euler_phi(d));
            lcm = std::lcm(lcm, d);
        }
        total += make_ratio(num, from_u64(euler_phi(lcm)));
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == divs[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    if (total.get_den() != 1)
        throw std::logic_error("c_abelian_tuple_sum: sum is not an integer");
    return total.get_num();
}

std::optional<Integer> l_abelian(const std::vector<std::uint64_t>& invariants) {
    std::map<std::uint64_t, std::vector<unsigned>> by_prime;
    for (std::uint64_t n : invariants) {
        if (n == 0) throw parameter_error("l_abelian: invariants must be >= 1");
        for (const PrimePower& pp : factorize(n)) by_prime[pp.prime].push_back(pp.exponent);
    }
    Integer total = 1;
    for (auto& [p, part] : by_prime) {
        std::optional<Integer> lp = l_abelian_pgroup(p, part);
        if (!lp) return std::nullopt;
        total *= *lp;
    }
    return total;
}

Integer c_rank2(std::uint64_t p, unsigned a1, unsigned a2) {
    check_prime(p, "c_rank2");
    if (a1 < 1 || a1 > a2) throw parameter_error("c_rank2: need 1 <= a1 <= a2");
    const Integer P = from_u64(p);
    return 2 * exact_div(pow_int(p, a1) - 1, P - 1) + from_u64(a2 - a1 + 1) * pow_int(p, a1);
}

Integer l_rank2(std::uint64_t p, unsigned a1, unsigned a2) {
    check_prime(p, "l_rank2");
    if (a1 < 1 || a1 > a2) throw parameter_error("l_rank2: need 1 <= a1 <= a2");
    const Integer P = from_u64(p);
    const long d = static_cast<long>(a2) - static_cast<long>(a1);
    Integer num = Integer(d + 1) * pow_int(p, a1 + 2) - Integer(d - 1) * pow_int(p, a1 + 1) -
                  from_u64(a1 + a2 + 3) * P + from_u64(a1 + a2 + 1);
    return exact_div(num, (P - 1) * (P - 1));
}

Rational cdeg_rank2(std::uint64_t p, unsigned a1, unsigned a2) {
    return make_ratio(c_rank2(p, a1, a2), l_rank2(p, a1, a2));
}

Rational cdeg_rank2_closed(std::uint64_t p, unsigned a1, unsigned a2) {
    check_prime(p, "cdeg_rank2_closed");
    if (a1 < 1 || a1 > a2) throw parameter_error("cdeg_rank2_closed: need 1 <= a1 <= a2");
    const Integer P = from_u64(p);
    const long d = static_cast<long>(a2) - static_cast<long>(a1);
    Integer num = Integer(d + 1) * pow_int(p, a1 + 2) - Integer(2 * d) * pow_int(p, a1 + 1) +
                  Integer(d - 1) * pow_int(p, a1) - 2 * P + 2;
    Integer den = Integer(d + 1) * pow_int(p, a1 + 2) - Integer(d - 1) * pow_int(p, a1 + 1) -
                  from_u64(a1 + a2 + 3) * P + from_u64(a1 + a2 + 1);
    return make_ratio(num, den);
}

// --- hamiltonian -------------------------------------------------------------

Integer c_hamiltonian_2part(unsigned n) { return 5 * pow_int(2, n); }

// Count the subgroups of Q8 x Z_2^n through Goursat's lemma: a subgroup
// projects onto a pair (A <= Q8, B <= Z_2^n) and is the pullback of an
// isomorphism between a common quotient of A and B. Quotients of subgroups
// of Q8 that are also quotients of elementary abelian subgroups are trivial,
// Z_2, or Z_2^2, giving (with a_j = |L(Z_2^j)| and [n,k]_2 subgroups of
// index-k-quotient count in Z_2^n):
//   b_n = 6 a_n + 7 sum_k [n,k]_2 (2^k - 1) + 6 sum_k [n,k]_2 [k,2]_2
// which collapses via sum_k [n,k]_2 2^k = a_{n+1} - a_n and
// sum_k [n,k]_2 [k,2]_2 = [n,2]_2 a_{n-2} to
//   b_n = 7 a_{n+1} - 8 a_n + 6 [n,2]_2 a_{n-2}.
Integer l_hamiltonian_2part(unsigned n) {
    if (n == 0) return 6;
    Integer b = 7 * galois_number(n + 1, 2) - 8 * galois_number(n, 2);
    if (n >= 2) b += 6 * gaussian_binomial(n, 2, 2) * galois_number(n - 2, 2);
    return b;
}

Rational cdeg_hamiltonian(unsigned n, const std::vector<std::uint64_t>& odd_invariants) {
    for (std::uint64_t v : odd_invariants)
        if (v % 2 == 0)
            throw parameter_error("cdeg_hamiltonian: the abelian part must have odd order");
    std::optional<Integer> l_odd = l_abelian(odd_invariants);
    if (!l_odd)
        throw parameter_error(
            "cdeg_hamiltonian: no closed subgroup count for the odd part "
            "(abelian rank >= 3 at some prime); use the oracle instead");
    return make_ratio(c_hamiltonian_2part(n) * c_abelian(odd_invariants),
                      l_hamiltonian_2part(n) * *l_odd);
}

// --- p-groups with a cyclic maximal subgroup ---------------------------------

namespace {
void check_modular_m(std::uint64_t p, unsigned n) {
    check_prime(p, "modular_m");
    if ((p % 2 == 1 && n < 3) || (p == 2 && n < 4))
        throw parameter_error("modular_m: need n >= 3 (odd p) or n >= 4 (p = 2)");
}
} // namespace

Integer c_modular_m(std::uint64_t p, unsigned n) {
    check_modular_m(p, n);
    return from_u64(n - 1) * from_u64(p) + 2;
}

Integer l_modular_m(std::uint64_t p, unsigned n) {
    check_modular_m(p, n);
    return from_u64(1 + p) * from_u64(n) + 1 - from_u64(p);
}

Integer c_dihedral2n(unsigned n) {
    if (n < 2) throw parameter_error("c_dihedral2n: need n >= 2");
    return pow_int(2, n - 1) + from_u64(n);
}

Integer l_dihedral2n(unsigned n) {
    if (n < 2) throw parameter_error("l_dihedral2n: need n >= 2");
    return pow_int(2, n) + from_u64(n) - 1;
}

Integer c_quaternion2n(unsigned n) {
    if (n < 3) throw parameter_error("c_quaternion2n: need n >= 3");
    return pow_int(2, n - 2) + from_u64(n);
}

Integer l_quaternion2n(unsigned n) {
    if (n < 3) throw parameter_error("l_quaternion2n: need n >= 3");
    return pow_int(2, n - 1) + from_u64(n) - 1;
}

Integer c_semidihedral2n(unsigned n) {
    if (n < 4) throw parameter_error("c_semidihedral2n: need n >= 4");
    return 3 * pow_int(2, n - 3) + from_u64(n);
}

Integer l_semidihedral2n(unsigned n) {
    if (n < 4) throw parameter_error("l_semidihedral2n: need n >= 4");
    return 3 * pow_int(2, n - 2) + from_u64(n) - 1;
}

Rational cdeg_modular_m(std::uint64_t p, unsigned n) {
    return make_ratio(c_modular_m(p, n), l_modular_m(p, n));
}
Rational cdeg_dihedral2n(unsigned n) { return make_ratio(c_dihedral2n(n), l_dihedral2n(n)); }
Rational cdeg_quaternion2n(unsigned n) {
    return make_ratio(c_quaternion2n(n), l_quaternion2n(n));
}
Rational cdeg_semidihedral2n(unsigned n) {
    return make_ratio(c_semidihedral2n(n), l_semidihedral2n(n));
}

// --- ZM groups and dihedral groups -------------------------------------------

namespace {

struct ZmSums {
    Integer cyclic, total;
};

// Shared evaluation of the ZM lattice sums. Validation is delegated to
// GroupSpec::zm so the CLI, the formulas, and the oracle accept exactly
// the same triples.
ZmSums zm_sums(std::uint64_t m, std::uint64_t n, std::uint64_t r) {
    GroupSpec::zm(m, n, r);
    r %= std::max<std::uint64_t>(m, 1);
    const Integer R = from_u64(r);
    ZmSums sums{0, 0};
    std::vector<std::uint64_t> mdivs = divisors(m);
    for (std::uint64_t n1 : divisors(n)) {
        // Q(n1) = 1 + r^{n1} + r^{2 n1} + ... (n/n1 terms)
        const Integer step = pow_int(r, n1);
        Integer q = 0, term = 1;
        for (std::uint64_t j = 0; j < n / n1; ++j) {
            q += term;
            term *= step;
        }
        for (std::uint64_t m1 : mdivs) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), from_u64(m1).get_mpz_t(), q.get_mpz_t());
            sums.total += g;
            // the subgroups for (m1, n1) are cyclic iff (m/m1) | r^{n1} - 1
            const std::uint64_t q0 = m / m1;
            if (pow_mod(r % q0, n1, q0) == 1 % q0) sums.cyclic += g;
        }
    }
    return sums;
}

} // namespace

Integer c_zm(std::uint64_t m, std::uint64_t n, std::uint64_t r) { return zm_sums(m, n, r).cyclic; }
Integer l_zm(std::uint64_t m, std::uint64_t n, std::uint64_t r) { return zm_sums(m, n, r).total; }

Rational cdeg_zm(std::uint64_t m, std::uint64_t n, std::uint64_t r) {
    ZmSums sums = zm_sums(m, n, r);
    return make_ratio(sums.cyclic, sums.total);
}

Integer c_dihedral(std::uint64_t m) {
    if (m == 0) throw parameter_error("c_dihedral: need m >= 1");
    return from_u64(m) + from_u64(tau(m));
}

Integer l_dihedral(std::uint64_t m) {
    if (m == 0) throw parameter_error("l_dihedral: need m >= 1");
    return from_u64(tau(m)) + sigma(m);
}

Rational cdeg_dihedral(std::uint64_t m) { return make_ratio(c_dihedral(m), l_dihedral(m)); }

// --- dispatch -----------------------------------------------------------------

namespace {

// Invariants of an abelian spec, or nullopt if the spec is not abelian.
std::optional<std::vector<std::uint64_t>> abelian_invariants(const GroupSpec& spec) {
    switch (spec.kind()) {
        case GroupSpec::Kind::Cyclic:
            return std::vector<std::uint64_t>{spec.params()[0]};
        case GroupSpec::Kind::ElementaryAbelian: {
            std::vector<std::uint64_t> inv(spec.params()[1], spec.params()[0]);
            return inv;
        }
        case GroupSpec::Kind::AbelianProduct:
            return spec.params();
        default:
            return std::nullopt;
    }
}

void flatten(const GroupSpec& spec, std::vector<GroupSpec>& out) {
    if (spec.kind() == GroupSpec::Kind::Product)
        for (const GroupSpec& f : spec.factors()) flatten(f, out);
    else
        out.push_back(spec);
}

FormulaCounts counts_for_block(const std::vector<GroupSpec>& block);

FormulaCounts product_counts(const GroupSpec& spec) {
    std::vector<GroupSpec> parts;
    flatten(spec, parts);

    // Group the factors into blocks of components with overlapping prime
    // support; counts multiply across blocks (coprime direct factors).
    std::vector<std::vector<GroupSpec>> blocks;
    std::map<std::uint64_t, int> prime_block;
    for (const GroupSpec& part : parts) {
        int target = -1;
        for (const PrimePower& pp : factorize(part.order())) {
            auto it = prime_block.find(pp.prime);
            if (it != prime_block.end()) {
                target = it->second;
                break;
            }
        }
        if (target == -1) {
            target = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[static_cast<std::size_t>(target)].push_back(part);
        for (const PrimePower& pp : factorize(part.order()))
            prime_block[pp.prime] = target; // may merge lazily below
    }
    // The greedy pass above can leave two blocks that share a prime when a
    // later factor bridges them; fold such blocks together until stable.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t a = 0; a < blocks.size() && !changed; ++a)
            for (std::size_t b = a + 1; b < blocks.size() && !changed; ++b) {
                auto support = [](const std::vector<GroupSpec>& blk) {
                    std::vector<std::uint64_t> ps;
                    for (const GroupSpec& g : blk)
                        for (const PrimePower& pp : factorize(g.order())) ps.push_back(pp.prime);
                    return ps;
                };
                auto pa = support(blocks[a]), pb = support(blocks[b]);
                bool overlap = false;
                for (std::uint64_t x : pa)
                    for (std::uint64_t y : pb)
                        if (x == y) overlap = true;
                if (overlap) {
                    blocks[a].insert(blocks[a].end(), blocks[b].begin(), blocks[b].end());
                    blocks.erase(blocks.begin() + static_cast<long>(b));
                    changed = true;
                }
            }
    }

    FormulaCounts result{Integer(1), Integer(1)};
    for (const auto& block : blocks) {
        FormulaCounts bc = counts_for_block(block);
        if (result.num_cyclic && bc.num_cyclic)
            *result.num_cyclic *= *bc.num_cyclic;
        else
            result.num_cyclic.reset();
        if (result.num_subgroups && bc.num_subgroups)
            *result.num_subgroups *= *bc.num_subgroups;
        else
            result.num_subgroups.reset();
    }
    return result;
}

FormulaCounts counts_for_block(const std::vector<GroupSpec>& block) {
    if (block.size() == 1) return formula_counts(block[0]);

    // All-abelian block: merge into one invariant list.
    std::vector<std::uint64_t> merged;
    bool all_abelian = true;
    for (const GroupSpec& g : block) {
        auto inv = abelian_invariants(g);
        if (!inv) {
            all_abelian = false;
            break;
        }
        merged.insert(merged.end(), inv->begin(), inv->end());
    }
    if (all_abelian) return {c_abelian(merged), l_abelian(merged)};

    // Hamiltonian block: one Q8 and otherwise only Z_2 factors.
    std::size_t q8_count = 0;
    unsigned z2_rank = 0;
    bool hamiltonian = true;
    for (const GroupSpec& g : block) {
        if (g.kind() == GroupSpec::Kind::GeneralizedQuaternion && g.params()[0] == 3) {
            ++q8_count;
        } else if (auto inv = abelian_invariants(g)) {
            for (std::uint64_t v : *inv) {
                if (v == 1) continue;
                if (v != 2) {
                    hamiltonian = false;
                    break;
                }
                ++z2_rank;
            }
        } else {
            hamiltonian = false;
        }
        if (!hamiltonian) break;
    }
    if (hamiltonian && q8_count == 1)
        return {c_hamiltonian_2part(z2_rank), l_hamiltonian_2part(z2_rank)};

    return {std::nullopt, std::nullopt};
}

} // namespace

FormulaCounts formula_counts(const GroupSpec& spec) {
    switch (spec.kind()) {
        case GroupSpec::Kind::Cyclic: {
            Integer t = from_u64(tau(spec.params()[0]));
            return {t, t};
        }
        case GroupSpec::Kind::ElementaryAbelian: {
            std::uint64_t p = spec.params()[0];
            unsigned k = static_cast<unsigned>(spec.params()[1]);
            return {c_elem_abelian(p, k), galois_number(k, p)};
        }
        case GroupSpec::Kind::AbelianProduct:
            return {c_abelian(spec.params()), l_abelian(spec.params())};
        case GroupSpec::Kind::Dihedral:
            return {c_dihedral(spec.params()[0]), l_dihedral(spec.params()[0])};
        case GroupSpec::Kind::GeneralizedQuaternion: {
            unsigned n = static_cast<unsigned>(spec.params()[0]);
            return {c_quaternion2n(n), l_quaternion2n(n)};
        }
        case GroupSpec::Kind::Semidihedral: {
            unsigned n = static_cast<unsigned>(spec.params()[0]);
            return {c_semidihedral2n(n), l_semidihedral2n(n)};
        }
        case GroupSpec::Kind::ModularM: {
            std::uint64_t p = spec.params()[0];
            unsigned n = static_cast<unsigned>(spec.params()[1]);
            return {c_modular_m(p, n), l_modular_m(p, n)};
        }
        case GroupSpec::Kind::ZM: {
            ZmSums sums = zm_sums(spec.params()[0], spec.params()[1], spec.params()[2]);
            return {sums.cyclic, sums.total};
        }
        case GroupSpec::Kind::Product:
            return product_counts(spec);
    }
    throw std::logic_error("formula_counts: unhandled spec kind");
}

} // namespace cyc
