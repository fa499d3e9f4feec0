#pragma once

// Explicit finite groups as N x N multiplication tables, built from a
// GroupSpec via normal forms. Everything downstream (the subgroup-lattice
// oracle) works on these tables.

#include <cstdint>
#include <string>
#include <vector>

#include "cyc/groupspec.hpp"

namespace cyc {

// Caps for the brute-force side. Enumeration charges elementary operations
// against max_work and fails fast with resource_error when a budget is hit,
// so infeasible inputs die loudly instead of running unbounded.
struct OracleLimits {
    std::uint64_t max_order = 2000;
    std::size_t max_subgroups = 600'000;
    std::uint64_t max_work = 16'000'000'000ull;

    // Default limits with the CYC_CAP environment variable (order cap)
    // applied when present and parseable. Flags override this upstream.
    static OracleLimits from_env();
};

struct CayleyGroup {
    std::uint32_t order = 0;
    std::vector<std::uint32_t> table; // row-major: table[a*order + b] = a*b
    std::uint32_t identity = 0;
    std::vector<std::uint32_t> inverse;
    std::vector<std::string> element_names;
    std::string name;
    bool abelian = false;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return table[static_cast<std::size_t>(a) * order + b];
    }
    // g x g^-1
    std::uint32_t conj(std::uint32_t g, std::uint32_t x) const {
        return mul(mul(g, x), inverse[g]);
    }
};

// Build the table for a spec. Throws resource_error past the order cap and
// logic_error if the constructed table fails its own consistency check.
CayleyGroup build_group(const GroupSpec& spec, const OracleLimits& limits = {});

// Latin-square property, identity/inverse laws, associativity (exhaustive
// for N <= 200, fixed-seed sampling of ~10^5 triples above). Guard against
// construction bugs; throws logic_error naming the failed law.
void verify_multiplication_table(const CayleyGroup& g);

} // namespace cyc
