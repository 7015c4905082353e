#include "rtm/codec.hpp"

#include "rtm/machine_text.hpp"

namespace rtm {

Bits code_bits(const Bits& x) {
    Bits out;
    out.reserve(2 * x.size());
    for (char c : x) {
        out += '0';
        out += (c == '1' ? '1' : '0');
    }
    return out;
}

std::optional<Bits> decode_bits(const Bits& coded) {
    if (coded.size() % 2) return std::nullopt;
    Bits out;
    out.reserve(coded.size() / 2);
    for (std::size_t i = 0; i < coded.size(); i += 2) {
        if (coded[i] != '0') return std::nullopt;
        out += coded[i + 1];
    }
    return out;
}

Bits pair_encode(const Bits& w, const Bits& x) { return code_bits(w) + "11" + x; }

std::optional<std::pair<Bits, Bits>> pair_decode(const Bits& s) {
    for (std::size_t i = 0; i + 1 < s.size(); i += 2) {
        if (s[i] == '1') {
            if (s[i + 1] != '1') return std::nullopt;  // 10 is not a codeword
            auto w = decode_bits(s.substr(0, i));
            if (!w) return std::nullopt;
            return std::make_pair(*w, s.substr(i + 2));
        }
    }
    return std::nullopt;
}

Bits serialize_machine(const Machine& m) {
    std::string text = print_machine(m);
    Bits out;
    out.reserve(8 * text.size());
    for (unsigned char c : text)
        for (int b = 7; b >= 0; --b) out += ((c >> b) & 1) ? '1' : '0';
    return out;
}

Machine deserialize_machine(const Bits& bits) {
    if (bits.size() % 8 != 0) throw EvalError("MalformedProgram: bit length");
    std::string text;
    text.reserve(bits.size() / 8);
    for (std::size_t i = 0; i < bits.size(); i += 8) {
        unsigned char c = 0;
        for (int b = 0; b < 8; ++b) c = static_cast<unsigned char>((c << 1) | (bits[i + b] == '1'));
        text += static_cast<char>(c);
    }
    try {
        return parse_machine(text);
    } catch (const std::exception& e) {
        throw EvalError(std::string("MalformedProgram: ") + e.what());
    }
}

Program Program::fp(const Machine& m) { return {ProgramClass::FP, serialize_machine(m), {}}; }
Program Program::invfp(const Machine& m) {
    return {ProgramClass::InvFP, serialize_machine(m), {}};
}
Program Program::invfp_oracle(const Machine& m) {
    return {ProgramClass::InvFPOracle, serialize_machine(m), {}};
}
Program Program::cofp(Program vprime, Program w) {
    Program p;
    p.tag = ProgramClass::CofPPair;
    p.parts = {std::move(vprime), std::move(w)};
    return p;
}
Program Program::regcofp(Program u, Program vprime) {
    Program p;
    p.tag = ProgramClass::RegCofPPair;
    p.parts = {std::move(u), std::move(vprime)};
    return p;
}

Machine validate_program(const Program& p) {
    switch (p.tag) {
        case ProgramClass::FP:
        case ProgramClass::InvFP:
        case ProgramClass::InvFPOracle: {
            Machine m = deserialize_machine(p.bits);
            if (!m.time_bound || !m.balance_bound)
                throw EvalError("InvalidProgram: missing built-in bounds");
            if (!validate_deterministic(m).ok())
                throw EvalError("InvalidProgram: not deterministic");
            if (p.tag != ProgramClass::FP && !validate_injective(m).ok())
                throw EvalError("InvalidProgram: not injective");
            if (p.tag != ProgramClass::InvFPOracle && m.oracle_name)
                throw EvalError("InvalidProgram: unexpected oracle");
            return m;
        }
        case ProgramClass::CofPPair: {
            if (p.parts.size() != 2) throw EvalError("InvalidProgram: pair arity");
            if (p.parts[0].tag != ProgramClass::InvFP &&
                p.parts[0].tag != ProgramClass::InvFPOracle)
                throw EvalError("InvalidProgram: cofP first component");
            if (p.parts[1].tag != ProgramClass::FP)
                throw EvalError("InvalidProgram: cofP second component");
            validate_program(p.parts[0]);
            return validate_program(p.parts[1]);
        }
        case ProgramClass::RegCofPPair: {
            if (p.parts.size() != 2) throw EvalError("InvalidProgram: pair arity");
            for (const auto& q : p.parts)
                if (q.tag != ProgramClass::CofPPair)
                    throw EvalError("InvalidProgram: regcofP component");
            validate_program(p.parts[0]);
            return validate_program(p.parts[1]);
        }
    }
    throw EvalError("InvalidProgram: unknown tag");
}

namespace {

void check_bounds_below(const Machine& m, const PolyBound& q) {
    if (!m.time_bound->less_than(q) || !m.balance_bound->less_than(q))
        throw EvalError("BoundTooLarge");
}

std::optional<Bits> run_leaf(const Machine& m, const Bits& x, const OracleFn* oracle) {
    RunOutcome o = run(m, x, oracle);
    if (!o.accepted()) return std::nullopt;
    return o.output;
}

} // namespace

Bits inj_ev(const PolyBound& q, const Bits& s, const OracleFn* oracle) {
    auto pair = pair_decode(s);
    if (!pair) throw EvalError("InvalidProgram: not a code(w) 11 x pair");
    const auto& [wbits, x] = *pair;
    Program p;
    p.tag = oracle ? ProgramClass::InvFPOracle : ProgramClass::InvFP;
    p.bits = wbits;
    Machine m = validate_program(p);
    check_bounds_below(m, q);
    auto y = run_leaf(m, x, oracle);
    if (!y) throw EvalError("NotInDomain");
    return pair_encode(wbits, *y);
}

std::optional<Bits> program_apply(const PolyBound& q, const Program& p, const Bits& x,
                                  const OracleFn* oracle) {
    switch (p.tag) {
        case ProgramClass::FP:
        case ProgramClass::InvFP:
        case ProgramClass::InvFPOracle: {
            Machine m = validate_program(p);
            check_bounds_below(m, q);
            return run_leaf(m, x, oracle);
        }
        case ProgramClass::CofPPair:
            return cofp_eval(q, p.parts[0], p.parts[1], x, oracle);
        case ProgramClass::RegCofPPair:
            return regcofp_eval(q, p.parts[0], p.parts[1], x, oracle);
    }
    throw EvalError("InvalidProgram: unknown tag");
}

std::optional<Bits> cofp_eval(const PolyBound& q, const Program& vprime, const Program& w,
                              const Bits& y, const OracleFn* oracle) {
    if (vprime.tag != ProgramClass::InvFP && vprime.tag != ProgramClass::InvFPOracle)
        throw EvalError("InvalidProgram: v' must be an injective program");
    if (w.tag != ProgramClass::FP) throw EvalError("InvalidProgram: w must be an fP program");
    Machine mv = validate_program(vprime);
    Machine mw = validate_program(w);
    check_bounds_below(mv, q);
    check_bounds_below(mw, q);
    auto psi = [&](const Bits& a) { return run_leaf(mv, a, oracle); };
    auto phi = [&](const Bits& a) { return run_leaf(mw, a, oracle); };

    auto x = psi(y);
    if (!x) return std::nullopt;
    auto fx = phi(*x);
    if (!fx) return std::nullopt;
    // condition: phi psi phi(x) = phi(x) and psi phi psi(y) = psi(y)
    auto p1 = psi(*fx);
    if (!p1) return std::nullopt;
    auto p2 = phi(*p1);
    if (!p2 || *p2 != *fx) return std::nullopt;
    auto q2 = psi(*fx);
    if (!q2 || *q2 != *x) return std::nullopt;
    return *x;
}

std::optional<Bits> cofp_eval_string(const PolyBound& q, const Bits& s, const OracleFn* oracle) {
    auto outer = pair_decode(s);
    if (!outer) throw EvalError("InvalidProgram: not a pair");
    auto inner = pair_decode(outer->second);
    if (!inner) throw EvalError("InvalidProgram: not a nested pair");
    Program vp;
    vp.tag = oracle ? ProgramClass::InvFPOracle : ProgramClass::InvFP;
    vp.bits = outer->first;
    Program w;
    w.tag = ProgramClass::FP;
    w.bits = inner->first;
    auto out = cofp_eval(q, vp, w, inner->second, oracle);
    if (!out) return std::nullopt;
    return pair_encode(outer->first, pair_encode(inner->first, *out));
}

std::optional<Bits> regcofp_eval(const PolyBound& q, const Program& u, const Program& vprime,
                                 const Bits& x, const OracleFn* oracle) {
    if (u.tag != ProgramClass::CofPPair || vprime.tag != ProgramClass::CofPPair)
        throw EvalError("InvalidProgram: regcofP components must be cofP pairs");
    validate_program(u);
    validate_program(vprime);
    auto psi_u = [&](const Bits& a) { return cofp_eval(q, u.parts[0], u.parts[1], a, oracle); };
    auto psi_v = [&](const Bits& a) {
        return cofp_eval(q, vprime.parts[0], vprime.parts[1], a, oracle);
    };
    auto ux = psi_u(x);
    if (!ux) return std::nullopt;
    auto v = psi_v(*ux);
    if (!v) return std::nullopt;
    auto back = psi_u(*v);
    if (!back || *back != *ux) return std::nullopt;
    return *ux;
}

} // namespace rtm
