#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rtm/codec.hpp"
#include "rtm/fnlab.hpp"
#include "rtm/machine.hpp"

namespace rtm {

// Brute-force inversion of a machine-computed function: returns the
// length-lexicographically least x with run(m, x) = Accept(y), searching
// |x| <= balance(|y|) capped at window_cap. Machines without a balance
// bound are rejected outright.
std::optional<Bits> fmin_invert(const Machine& m, const Bits& y, const OracleFn* oracle = nullptr,
                                std::size_t window_cap = 18);

// Tabulates fmin_invert over all outputs of length <= max_out_len.
FiniteFn fmin_table(const Machine& m, std::size_t max_out_len, const OracleFn* oracle = nullptr,
                    std::size_t window_cap = 18);

// Program for phi_w^{-1}: reverse the machine and swap its bounds. The map
// is an involution up to canonical renaming.
Program prog_inv_injective(const Program& w);

struct SearchStats {
    std::uint64_t steps_total = 0;
    std::uint64_t programs_tried = 0;
    std::optional<std::size_t> winner;             // index into the registry, or
    bool winner_is_fallback = false;               // the implicit enumerator won
    std::map<std::size_t, std::uint64_t> per_program_steps;
    std::uint64_t fallback_steps = 0;
    std::uint64_t verification_steps = 0;
};

struct LevinResult {
    std::optional<Bits> preimage;
    SearchStats stats;
};

// Dovetailed universal search for x with phi_w(x) = y: candidate inverter i
// gets 2^i steps per round, the implicit exhaustive enumerator always runs
// as the last candidate, and any candidate's claim is verified by running w
// before it is returned.
LevinResult levin_invert(const std::vector<Program>& registry, const Program& w, const Bits& y,
                         const OracleFn* oracle = nullptr, std::size_t window_cap = 18);

} // namespace rtm
