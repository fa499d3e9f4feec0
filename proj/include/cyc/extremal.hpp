#pragma once
// Extremal behaviour of the cyclicity degree across rank-2 abelian p-groups of
// a fixed order p^n, plus an exploratory nearest-value scan over all formula
// families (which rationals in (0,1] show up as cyclicity degrees, and where).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cyc/arith.hpp"
#include "cyc/groupspec.hpp"

namespace cyc {

// One candidate Z_{p^alpha1} x Z_{p^alpha2} with alpha1 <= alpha2.
struct ExtremalRow {
    unsigned alpha1 = 0;
    unsigned alpha2 = 0;
    Integer num_cyclic;
    Integer num_subgroups;
    Rational cdeg;
};

// Exact scan of every rank-2 abelian group of order p^n, one row per
// alpha1 = 1..floor(n/2) in increasing order.  The arg fields hold the alpha1
// attaining each extremum; ties (not expected to occur) resolve toward the
// smallest alpha1 and set has_tie.
struct ExtremalReport {
    std::uint64_t p = 0;
    unsigned n = 0;
    std::vector<ExtremalRow> rows;
    unsigned argmin_num_cyclic = 0;
    unsigned argmax_num_cyclic = 0;
    unsigned argmin_cdeg = 0;
    unsigned argmax_cdeg = 0;
    bool has_tie = false;
};

// Throws parameter_error unless p is prime and n >= 2.
ExtremalReport scan_rank2(std::uint64_t p, unsigned n);

// True iff the scan shows |C| strictly increasing and cdeg strictly decreasing
// in alpha1, placing min |C| / max cdeg at Z_p x Z_{p^{n-1}} (alpha1 = 1) and
// max |C| / min cdeg at the balanced split (alpha1 = floor(n/2)).
bool verify_extremal_theorem(std::uint64_t p, unsigned n);

// One candidate from the nearest-value scan.
struct DensityMatch {
    GroupSpec spec;
    Rational cdeg;
    Rational distance; // |cdeg - target|
};

// Enumerates the formula-backed families up to the given group order and
// returns the `count` groups whose cyclicity degree lies closest to `target`,
// nearest first; ties resolve toward the smaller group.  Exploratory only --
// which values are limit points of cyclicity degrees is an open problem.
// Throws parameter_error unless 0 < target <= 1.
std::vector<DensityMatch> density_scan(const Rational& target, std::uint64_t max_order = 512,
                                       std::size_t count = 5);

} // namespace cyc
