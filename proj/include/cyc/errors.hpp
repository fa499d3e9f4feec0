#pragma once

#include <stdexcept>
#include <string>

namespace cyc {

// Violated parameter domain (bad user input). Message names the condition.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Computation would exceed a configured cap (order, memory, work budget).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cyc
