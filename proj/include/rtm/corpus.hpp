#pragma once

#include <vector>

#include "rtm/machine.hpp"

namespace rtm {

// Built-in machines used across the test suites and the CLI. All of the
// injective ones are tidy: at accept every non-output tape is empty and the
// output head rests on the first output symbol, so reversal, chaining and
// the Bennett constructions compose without fixups.

Machine identity_machine();    // x -> x
Machine bitflip_machine();     // x -> complement of x
Machine append0_machine();     // x -> x0
Machine prepend1_machine();    // x -> 1x
Machine inc_machine();         // msb-first x+1 on inputs containing a 0
Machine dec_machine();         // msb-first x-1 on inputs containing a 1
Machine halving_machine();     // 0^(2^m) -> 0^m on a rubber tape (the "g" machine)
Machine drop_last_machine();   // xb -> x (not injective)
Machine erase_last_machine();  // xb -> x with a merged rewrite (injectivity demo)
Machine query_const_machine(const std::string& query, bool expect_yes,
                            const std::string& oracle_name);  // id gated on one query
Machine filter_even_machine(); // x -> x if weight(x) even, via oracle (deterministic)

// name -> machine lookup over everything above; throws on unknown names
Machine corpus_machine(const std::string& name);
std::vector<std::string> corpus_names();

// the injective subset used by the reversal suites
std::vector<std::string> injective_corpus_names();
// deterministic base machines fed to bennett_garbage in the suites
std::vector<std::string> bennett_corpus_names();

} // namespace rtm
