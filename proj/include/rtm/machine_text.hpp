#pragma once

#include <string>

#include "rtm/machine.hpp"

namespace rtm {

// Line-based machine format, '#' starts a comment:
//
//   machine <name>
//   tapes: <role>:<kind> [, ...]
//   states: <id> ...
//   start: <id> / accept: <id>
//   time: <a> <k>            # optional, q(n)=a(n^k+1)
//   balance: <a> <k>         # optional
//   oracle: <q_qu> <q_yes> <q_no> <name> [reversed]     # optional, repeatable
//   rw: <src> [<read>,...] -> <dst> [<write>,...]
//   shift: <src> -> <dst> [<L|R|S|I(sym)|D(sym)|D>,...]
//
// Unknown directives are rejected with their line number. print_machine
// emits a canonical form (states sorted, transitions in insertion order).

Machine parse_machine(const std::string& text);
Machine load_machine_file(const std::string& path);
std::string print_machine(const Machine& m);

} // namespace rtm
