#pragma once

#include "rtm/machine.hpp"

namespace rtm {

struct ReverseResult {
    Machine machine;
    bool injective_input = true;  // false: reverse is flagged nondeterministic
};

// Syntactic reversal: every transition inverted, start/accept swapped,
// input/output tape roles swapped, oracle sites flipped to reverse mode.
// States are suffixed so double reversal is comparable after canonical
// renaming. If the input fails the injectivity scan the reverse is still
// returned, flagged.
ReverseResult reverse_machine(const Machine& m);

// Table reversal only: no renaming, no tape-role swap. Used internally by
// the Bennett constructions.
Machine reverse_core(const Machine& m, const std::string& suffix = "");

// BFS renaming from the start state; makes machines comparable up to
// renaming.
Machine canonical_rename(const Machine& m);
bool equivalent_up_to_renaming(const Machine& a, const Machine& b);

// m2 ∘ m1: m1's output tape feeds m2's input tape. Requires both
// deterministic and m2's start state not re-entered. Distinct oracles are
// merged under a tagged disjoint-union language (see oracle_registry).
Machine chain_machines(const Machine& m1, const Machine& m2);

// x -> pair_encode(x, f(x)), injective by construction (history-logged
// simulation, uncomputation, then pair assembly). The input machine must be
// deterministic; it may carry an oracle.
Machine bennett_garbage(const Machine& m);

// x -> f(x) for injective f: compute-with-history, uncompute, then erase x
// by running the inverse machine's logged simulation backwards. The
// desk-scale precondition (m_finv inverts m_f on a small window) is checked
// by direct runs; throws std::runtime_error("NotInverses") on failure.
Machine bennett_clean(const Machine& m_f, const Machine& m_finv,
                      const OracleFn* oracle = nullptr, std::size_t check_len = 4);

// Replace every reverse oracle call site by a forward call plus a recorded
// expected answer: a marker is pushed before the query and a checked delete
// after it accepts exactly the consistent answer. Machines without reversed
// sites are returned unchanged.
Machine simulate_reverse_oracle(const Machine& m);

} // namespace rtm
