#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rtm/machine.hpp"

namespace rtm {

// code(0) = 00, code(1) = 01; {00,01,11} is a prefix code and 11 acts as
// the pair separator.
Bits code_bits(const Bits& x);
std::optional<Bits> decode_bits(const Bits& coded);
Bits pair_encode(const Bits& w, const Bits& x);
// splits at the first 11 on an even position; nullopt when there is none
std::optional<std::pair<Bits, Bits>> pair_decode(const Bits& s);

// canonical machine <-> bitstring serialization (8 bits per character of
// the canonical text form)
Bits serialize_machine(const Machine& m);
Machine deserialize_machine(const Bits& bits);  // throws MalformedProgram

enum class ProgramClass { FP, InvFP, InvFPOracle, CofPPair, RegCofPPair };

// A program is a serialized machine plus the class it claims; pair classes
// carry component programs instead of bits.
struct Program {
    ProgramClass tag = ProgramClass::FP;
    Bits bits;                    // leaf classes
    std::vector<Program> parts;   // pair classes

    static Program fp(const Machine& m);
    static Program invfp(const Machine& m);
    static Program invfp_oracle(const Machine& m);
    static Program cofp(Program vprime, Program w);
    static Program regcofp(Program u, Program vprime);
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Checks the invariants the class tag demands; throws EvalError
// ("InvalidProgram ...") otherwise and returns the deserialized machine for
// leaf classes.
Machine validate_program(const Program& p);

// injEv_q: code(w) 11 x  ->  code(w) 11 phi_w(x), defined only for valid
// injective programs with built-in bounds strictly below q. Throws
// EvalError with InvalidProgram / BoundTooLarge / NotInDomain.
Bits inj_ev(const PolyBound& q, const Bits& s, const OracleFn* oracle = nullptr);

// Function view of a leaf program under the bound q; nullopt outside the
// domain, throws on invalid programs or bounds >= q.
std::optional<Bits> program_apply(const PolyBound& q, const Program& p, const Bits& x,
                                  const OracleFn* oracle = nullptr);

// cofP-program (v', w) evaluated at y per the three-step rule; nullopt is
// "no output".
std::optional<Bits> cofp_eval(const PolyBound& q, const Program& vprime, const Program& w,
                              const Bits& y, const OracleFn* oracle = nullptr);
// string form evCo_q: code(v'-bits) 11 code(w-bits) 11 y
std::optional<Bits> cofp_eval_string(const PolyBound& q, const Bits& s,
                                     const OracleFn* oracle = nullptr);

// RegcofP-program (u, v'), both cofP pairs.
std::optional<Bits> regcofp_eval(const PolyBound& q, const Program& u, const Program& vprime,
                                 const Bits& x, const OracleFn* oracle = nullptr);

} // namespace rtm
