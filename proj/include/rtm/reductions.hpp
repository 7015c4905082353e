#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rtm/codec.hpp"
#include "rtm/machine.hpp"

namespace rtm {

// A decidable language with an optional NP-style presentation: x is in the
// language iff some certificate of bounded length makes the verifier accept
// pair_encode(x, cert). Membership is always total.
struct OracleLanguage {
    std::string name;
    OracleFn membership;
    std::optional<Program> verifier;
    std::optional<PolyBound> cert_bound;
};

struct ReductionReport {
    std::vector<std::string> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

enum class ReductionKind { ManyOne, OneOne, InvFP };

struct ReductionWitness {
    std::function<std::optional<Bits>(const Bits&)> f;
    std::size_t window_len = 4;
    ReductionKind kind = ReductionKind::ManyOne;
};

// Verifies x in L1 <=> (f(x) defined and f(x) in L2) over the window, plus
// injectivity on the window for one-one / invfP witnesses.
ReductionReport check_reduction(const ReductionWitness& w, const OracleLanguage& L1,
                                const OracleLanguage& L2);

// code(v) 11 x 11 0^(|v| * p_v(|x|)), with |v| counted in serialized bits.
Bits hartmanis_map(const Program& v, const PolyBound& p_v, const Bits& x);

struct VerifierEntry {
    std::string language;  // registry language this program accepts
    Program program;
    PolyBound time;        // built-in polynomial used by the pad formula
    PolyBound cert_bound;
};

// The fixed finite stand-in for "all nondeterministic programs".
const std::vector<VerifierEntry>& verifier_registry();

// Membership in the universal language over the verifier registry: decodes
// code(w) 11 x 11 0^pad, requires w to be a registered verifier with the
// right pad length, then decides x by certificate enumeration. Malformed
// strings are simply not members.
bool universal_member(const Bits& s, const std::vector<VerifierEntry>& registry);

// Named oracle registry: direct predicates (evenweight, evenlength,
// sigmastar, subsetsum), im-<machine> image languages, the universal
// language, and dunion(a,b) combinators. Throws UnknownOracle on a miss.
OracleLanguage oracle_lookup(const std::string& name);
std::vector<std::string> oracle_names();

// fmin via oracle calls to im-<machine>: length-layered DFS over prefixes,
// pruned by the image language, candidates verified by direct runs.
std::optional<Bits> fmin_invert_via_oracle(const Machine& m, const Bits& y,
                                           std::size_t window_cap = 18);

// Oracle registry file: one stanza per language,
//
//   oracle <name>
//   cert: <a> <k>          # optional certificate bound; default empty-only
//   <machine text ...>
//
// where the machine is a verifier accepting code(x) 11 cert. Membership is
// decided by certificate enumeration.
std::vector<OracleLanguage> parse_oracle_file(const std::string& text);

// Verifier machines behind the registry presentations (exposed for tests).
Machine even_weight_verifier();  // accepts code(x) 11  with weight(x) even
Machine even_length_verifier();  // accepts code(x) 11  with |x| even
Machine copy_verifier();         // accepts code(x) 11 cert with cert == x

} // namespace rtm
