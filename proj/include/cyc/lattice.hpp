#pragma once

// Brute-force ground truth: enumerate the full subgroup lattice of an
// explicit group and count cyclic / normal members exactly.
//
// Enumeration strategy: seed with every single-element closure <x> (these
// are exactly the cyclic subgroups), then saturate under joins <H union {g}>
// with g ranging over the seed generators. Every subgroup is an iterated
// join of its own cyclic subgroups, so saturation reaches the whole lattice.
// Joins fill right cosets H*u wholesale, which keeps a join at O(|K|) plus
// bookkeeping instead of a generic closure.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cyc/arith.hpp"
#include "cyc/cayley.hpp"

namespace cyc {

// d -> c(d): number of cyclic subgroups of order d (nonzero entries only).
using OrderSpectrum = std::map<std::uint64_t, std::uint64_t>;

class SubgroupLattice {
  public:
    std::size_t size() const { return orders_.size(); }
    std::uint32_t group_order() const { return group_order_; }

    std::uint32_t subgroup_order(std::size_t i) const { return orders_[i]; }
    bool is_cyclic(std::size_t i) const { return i < num_cyclic_; }
    bool is_normal(std::size_t i) const { return normal_[i]; }

    std::size_t num_cyclic() const { return num_cyclic_; }
    std::size_t num_normal() const { return num_normal_; }

    // Bitmask of subgroup i, words() 64-bit words, bit x = element x.
    std::span<const std::uint64_t> mask(std::size_t i) const {
        return {masks_.data() + i * words_, words_};
    }
    std::size_t words() const { return words_; }

    bool contains(std::size_t i, std::uint32_t x) const {
        return (mask(i)[x >> 6] >> (x & 63)) & 1;
    }

    // Sorted element indices of subgroup i.
    std::vector<std::uint32_t> elements(std::size_t i) const;

    // Index of the subgroup with exactly this element mask, if enumerated.
    std::optional<std::size_t> find(std::span<const std::uint64_t> m) const;

  private:
    friend SubgroupLattice enumerate_subgroups(const CayleyGroup&, const OracleLimits&);

    std::uint32_t group_order_ = 0;
    std::size_t words_ = 0;
    std::size_t num_cyclic_ = 0;
    std::size_t num_normal_ = 0;
    std::vector<std::uint64_t> masks_; // arena, words_ per subgroup
    std::vector<std::uint32_t> orders_;
    std::vector<bool> normal_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index_; // hash -> ids
};

SubgroupLattice enumerate_subgroups(const CayleyGroup& g, const OracleLimits& limits = {});

// c(d) table computed from element orders alone (independent of the lattice
// enumeration): each cyclic subgroup of order d has phi(d) generators.
OrderSpectrum element_orders(const CayleyGroup& g);

// Degree counts from an enumerated lattice.
Rational cdeg_of(const SubgroupLattice& lat);
Rational ndeg_of(const SubgroupLattice& lat);

// Subgroup commutativity degree: fraction of ordered pairs (H, K) with
// HK = KH as product sets. Quadratic in |L|; charged against max_work.
Rational sd_of(const SubgroupLattice& lat, const CayleyGroup& g, const OracleLimits& limits = {});

// True iff every proper subgroup is cyclic.
bool all_proper_cyclic(const SubgroupLattice& lat);

// Convenience wrappers: build + enumerate + count.
Rational cdeg_oracle(const GroupSpec& spec, const OracleLimits& limits = {});
Rational ndeg_oracle(const GroupSpec& spec, const OracleLimits& limits = {});
Rational sd_oracle(const GroupSpec& spec, const OracleLimits& limits = {});

} // namespace cyc
