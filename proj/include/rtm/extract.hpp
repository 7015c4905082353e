#pragma once

#include "rtm/fnlab.hpp"
#include "rtm/machine.hpp"

namespace rtm {

// Tabulate the machine's function over inputs of length <= max_len. Inputs
// that reject or exceed their budget are simply absent from the table.
FiniteFn extract_fn(const Machine& m, std::size_t max_len, const OracleFn* oracle = nullptr);

} // namespace rtm
