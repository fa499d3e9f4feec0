#pragma once
// Formula-vs-oracle equivalence: build the group explicitly, enumerate its
// subgroup lattice, and compare the counts against the closed forms.  The
// per-family tuple enumerators are shared by the `verify` command and the
// acceptance sweep.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyc/arith.hpp"
#include "cyc/cayley.hpp"
#include "cyc/groupspec.hpp"

namespace cyc {

enum class CompareStatus {
    Pass,         // formula and oracle agree exactly
    Fail,         // they disagree; note carries both value sets
    SkipResource, // the oracle refused under the active limits
};

struct ComparisonResult {
    GroupSpec spec;
    CompareStatus status = CompareStatus::Pass;
    std::optional<Integer> formula_cyclic;
    std::optional<Integer> formula_subgroups;
    std::optional<Integer> oracle_cyclic;
    std::optional<Integer> oracle_subgroups;
    std::string note;
};

// Runs one comparison.  Throws parameter_error if the spec has no closed-form
// subgroup count (the enumerators below only emit fully formula-backed specs).
ComparisonResult compare_counts(const GroupSpec& spec, const OracleLimits& limits = {});

// Inclusive bound on one named family parameter.
struct ParamRange {
    std::uint64_t lo = 1;
    std::uint64_t hi = UINT64_MAX;
};
using RangeMap = std::map<std::string, ParamRange>;

// Every valid parameter tuple of the family with group order <= max_order,
// further restricted by any named bounds (family variables: cyclic n;
// elem-abelian p, k; rank2 m, n; hamiltonian n; modM p, n; dihedral2n /
// quaternion2n / semidihedral2n n; zm m, n, r; dihedral m; abelian and
// nilpotent accept only the order bound).  Throws parameter_error for an
// unknown family or a bound naming no variable of the family.
std::vector<GroupSpec> family_tuples(const std::string& family, std::uint64_t max_order,
                                     const RangeMap& ranges = {});

// The families family_tuples understands, in sweep order.
const std::vector<std::string>& verify_families();

// Hand-picked larger instances (orders in the hundreds to 2000) appended to
// the acceptance sweep on top of the exhaustive small tuples.
std::vector<GroupSpec> spot_tuples();

} // namespace cyc
