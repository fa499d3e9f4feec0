#pragma once
// Serialization of results: JSON records (stable, alphabetically ordered
// keys), fixed-header CSV, and a short human-readable block.  All output is
// deterministic -- no timestamps, '.' decimal separator, LF line endings.

#include <optional>
#include <string>
#include <vector>

#include "cyc/arith.hpp"
#include "cyc/asymptotics.hpp"
#include "cyc/extremal.hpp"
#include "cyc/groupspec.hpp"

namespace cyc {

struct OutputRecord {
    std::string family;
    std::vector<std::string> params;
    Integer num_cyclic;
    Integer num_subgroups;
    Rational cdeg;
    std::string provenance; // "formula", "oracle", or "both-agree"
    std::optional<Rational> ndeg;
    std::optional<Rational> sd;
};

OutputRecord make_record(const GroupSpec& spec, const Integer& num_cyclic,
                         const Integer& num_subgroups, const std::string& provenance);

// One JSON object, keys alphabetical, exact counts as decimal strings,
// cdeg_decimal with 6 fractional digits (round-half-even).
std::string to_json(const OutputRecord& record);

// Fixed header plus one data row; params joined by ' ' inside one cell.
std::string to_csv(const OutputRecord& record);

// Key: value lines ending in "cdeg: <num>/<den> = <decimal>".
std::string to_human(const OutputRecord& record);

// "alpha1,alpha2,num_cyclic,num_subgroups,cdeg_num,cdeg_den" rows.
std::string to_csv(const ExtremalReport& report);

// "x,partial_sum,residual,residual_over_log3" rows, 6 fractional digits;
// the x = 1 row prints "inf" for the undefined log^3 column.
std::string to_csv(const std::vector<ProfileRow>& rows);

// Fixed-point rendering of a high-precision float, 6 fractional digits.
std::string fixed6(const mpf_class& value);

} // namespace cyc
