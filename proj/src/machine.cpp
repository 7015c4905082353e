#include "rtm/machine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rtm {

namespace {

std::string sym_vec_str(const SymVec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += v[i];
    }
    return s + "]";
}

} // namespace

int Machine::input_tape() const {
    for (std::size_t i = 0; i < tapes.size(); ++i)
        if (tapes[i].role == TapeRole::Input) return static_cast<int>(i);
    return -1;
}

int Machine::output_tape() const {
    for (std::size_t i = 0; i < tapes.size(); ++i)
        if (tapes[i].role == TapeRole::Output) return static_cast<int>(i);
    return -1;
}

std::set<Symbol> Machine::alphabet() const {
    std::set<Symbol> a = {'0', '1', kBlank};
    for (const auto& t : transitions) {
        for (Symbol s : t.read) a.insert(s);
        for (Symbol s : t.write) a.insert(s);
        for (const Move& mv : t.moves)
            if (mv.kind == Move::Insert || mv.kind == Move::Delete) a.insert(mv.sym);
    }
    return a;
}

void Machine::check_well_formed() const {
    auto fail = [&](const std::string& why) {
        throw std::runtime_error("machine '" + name + "': " + why);
    };
    if (!states.count(start)) fail("start state not in state set");
    if (!states.count(accept)) fail("accept state not in state set");
    int in = 0, out = 0, query = 0;
    for (const auto& t : tapes) {
        if (t.role == TapeRole::Input) ++in;
        if (t.role == TapeRole::Output) ++out;
        if (t.role == TapeRole::Query) ++query;
    }
    if (in != 1) fail("exactly one input tape required");
    if (out != 1) fail("exactly one output tape required");
    if (query > 1) fail("at most one query tape supported");
    for (const auto& t : transitions) {
        if (!states.count(t.source)) fail("transition source '" + t.source + "' not a state");
        if (!states.count(t.target)) fail("transition target '" + t.target + "' not a state");
        if (t.source == accept) fail("transition leaves the accept state");
        if (t.kind == Transition::RW) {
            if (t.read.size() != tapes.size() || t.write.size() != tapes.size())
                fail("rw vector width != tape count");
        } else {
            if (t.moves.size() != tapes.size()) fail("shift vector width != tape count");
            for (std::size_t i = 0; i < t.moves.size(); ++i) {
                const Move& mv = t.moves[i];
                if ((mv.kind == Move::Insert || mv.kind == Move::Delete) &&
                    tapes[i].kind != TapeKind::Rubber)
                    fail("insert/delete on non-rubber tape in shift from '" + t.source + "'");
            }
        }
    }
    for (const auto& site : oracle_sites) {
        for (const std::string* s : {&site.q_query, &site.q_yes, &site.q_no})
            if (!states.count(*s)) fail("oracle state '" + *s + "' not a state");
        const std::string& firing = site.reversed ? site.q_yes : site.q_query;
        const std::string& firing2 = site.reversed ? site.q_no : site.q_query;
        for (const auto& t : transitions)
            if (t.source == firing || t.source == firing2)
                fail("oracle firing state '" + t.source + "' has ordinary outgoing transitions");
        if (!oracle_name) fail("oracle sites present but no oracle name");
    }
}

ValidationReport validate_deterministic(const Machine& m) {
    ValidationReport rep;
    std::map<std::pair<std::string, SymVec>, int> rw_keys;
    std::map<std::string, int> shift_keys;
    std::set<std::string> rw_sources, shift_sources;
    for (const auto& t : m.transitions) {
        if (t.kind == Transition::RW) {
            rw_sources.insert(t.source);
            auto key = std::make_pair(t.source, t.read);
            if (++rw_keys[key] == 2)
                rep.conflicts.push_back("duplicate rw key (" + t.source + ", " +
                                        sym_vec_str(t.read) + ")");
        } else {
            shift_sources.insert(t.source);
            if (++shift_keys[t.source] == 2)
                rep.conflicts.push_back("duplicate shift key " + t.source);
        }
    }
    for (const auto& s : rw_sources)
        if (shift_sources.count(s))
            rep.conflicts.push_back("state " + s + " has both rw and shift transitions");
    for (const auto& site : m.oracle_sites) {
        // the implicit oracle step must be the only step from its firing states
        if (!site.reversed) {
            if (rw_sources.count(site.q_query) || shift_sources.count(site.q_query))
                rep.conflicts.push_back("oracle query state " + site.q_query +
                                        " also has ordinary transitions");
        } else {
            for (const std::string* s : {&site.q_yes, &site.q_no})
                if (rw_sources.count(*s) || shift_sources.count(*s))
                    rep.conflicts.push_back("reverse-oracle answer state " + *s +
                                            " also has ordinary transitions");
        }
    }
    return rep;
}

ValidationReport validate_injective(const Machine& m) {
    if (!validate_deterministic(m).ok())
        throw std::runtime_error("DeterminismFirst");
    ValidationReport rep;
    std::map<std::pair<std::string, SymVec>, int> rw_rev;
    std::map<std::string, int> shift_rev;
    std::set<std::string> rw_targets, shift_targets;
    for (const auto& t : m.transitions) {
        if (t.kind == Transition::RW) {
            rw_targets.insert(t.target);
            auto key = std::make_pair(t.target, t.write);
            if (++rw_rev[key] == 2)
                rep.conflicts.push_back("duplicate reverse rw key (" + t.target + ", " +
                                        sym_vec_str(t.write) + ")");
        } else {
            shift_targets.insert(t.target);
            if (++shift_rev[t.target] == 2)
                rep.conflicts.push_back("duplicate reverse shift key " + t.target);
            for (const Move& mv : t.moves)
                if (mv.kind == Move::Delete && !mv.checked)
                    rep.conflicts.push_back("unchecked delete from " + t.source +
                                            " has no determined reversal");
        }
    }
    for (const auto& s : rw_targets)
        if (shift_targets.count(s))
            rep.conflicts.push_back("state " + s + " is both an rw target and a shift target");
    // oracle sites: the states entered by the implicit step must not be
    // reachable any other way, mirroring the shift-target rule
    for (const auto& site : m.oracle_sites) {
        if (!site.reversed) {
            for (const std::string* s : {&site.q_yes, &site.q_no})
                if (rw_targets.count(*s) || shift_targets.count(*s))
                    rep.conflicts.push_back("oracle answer state " + *s +
                                            " also targeted by ordinary transitions");
        } else {
            if (rw_targets.count(site.q_query) || shift_targets.count(site.q_query))
                rep.conflicts.push_back("reverse-oracle query state " + site.q_query +
                                        " also targeted by ordinary transitions");
        }
    }
    return rep;
}

void Tape::normalize() {
    std::size_t i = 0;
    while (i < left.size() && left[i] == kBlank) ++i;
    if (i) left.erase(left.begin(), left.begin() + static_cast<std::ptrdiff_t>(i));
    i = 0;
    while (i < right.size() && right[i] == kBlank) ++i;
    if (i) right.erase(right.begin(), right.begin() + static_cast<std::ptrdiff_t>(i));
}

std::string Tape::content() const {
    std::string s(left.begin(), left.end());
    s.append(right.rbegin(), right.rend());
    std::size_t end = s.find_last_not_of(kBlank);
    if (end == std::string::npos) return "";
    return s.substr(0, end + 1);
}

Config initial_config(const Machine& m, const Bits& input) {
    Config c;
    c.state = m.start;
    c.tapes.resize(m.tape_count());
    int in = m.input_tape();
    if (in >= 0) c.tapes[static_cast<std::size_t>(in)].right.assign(input.rbegin(), input.rend());
    return c;
}

namespace {

void apply_move(Tape& tape, const Move& mv, TapeKind kind) {
    switch (mv.kind) {
        case Move::S:
            return;
        case Move::R: {
            Symbol h = tape.head();
            tape.left.push_back(h);
            if (!tape.right.empty()) tape.right.pop_back();
            tape.normalize();
            return;
        }
        case Move::L: {
            Symbol prev = tape.left.empty() ? kBlank : tape.left.back();
            tape.right.push_back(prev);
            if (!tape.left.empty()) tape.left.pop_back();
            tape.normalize();
            return;
        }
        case Move::Insert:
            if (kind != TapeKind::Rubber) throw std::runtime_error("IllegalRubberOp");
            tape.right.push_back(mv.sym);
            return;
        case Move::Delete:
            if (kind != TapeKind::Rubber) throw std::runtime_error("IllegalRubberOp");
            if (mv.checked && tape.head() != mv.sym)
                throw std::runtime_error("IllegalRubberOp: delete symbol mismatch");
            if (!tape.right.empty()) tape.right.pop_back();
            tape.normalize();
            return;
    }
}

} // namespace

StepResult step(const Machine& m, Config& c, const OracleFn* oracle) {
    if (c.state == m.accept) return StepResult::Halted;

    // oracle sites fire implicitly
    for (const auto& site : m.oracle_sites) {
        auto answer = [&](bool want_member, const std::string& next) -> StepResult {
            if (!oracle) throw std::runtime_error("OracleMissing");
            int q = -1;
            for (std::size_t i = 0; i < m.tapes.size(); ++i)
                if (m.tapes[i].role == TapeRole::Query) q = static_cast<int>(i);
            if (q < 0) throw std::runtime_error("oracle step with no query tape");
            bool in = (*oracle)(c.tapes[static_cast<std::size_t>(q)].content());
            if (in != want_member) return StepResult::Halted;
            c.state = next;
            ++c.steps;
            return StepResult::Stepped;
        };
        if (!site.reversed && c.state == site.q_query) {
            if (!oracle) throw std::runtime_error("OracleMissing");
            int q = -1;
            for (std::size_t i = 0; i < m.tapes.size(); ++i)
                if (m.tapes[i].role == TapeRole::Query) q = static_cast<int>(i);
            if (q < 0) throw std::runtime_error("oracle step with no query tape");
            bool in = (*oracle)(c.tapes[static_cast<std::size_t>(q)].content());
            c.state = in ? site.q_yes : site.q_no;
            ++c.steps;
            return StepResult::Stepped;
        }
        if (site.reversed && c.state == site.q_yes) return answer(true, site.q_query);
        if (site.reversed && c.state == site.q_no) return answer(false, site.q_query);
    }

    for (const auto& t : m.transitions) {
        if (t.source != c.state) continue;
        if (t.kind == Transition::RW) {
            bool match = true;
            for (std::size_t i = 0; i < t.read.size(); ++i)
                if (c.tapes[i].head() != t.read[i]) { match = false; break; }
            if (!match) continue;
            for (std::size_t i = 0; i < t.write.size(); ++i) {
                Tape& tp = c.tapes[i];
                if (tp.right.empty()) {
                    if (t.write[i] != kBlank) tp.right.push_back(t.write[i]);
                } else {
                    tp.right.back() = t.write[i];
                    tp.normalize();
                }
            }
            c.state = t.target;
            ++c.steps;
            return StepResult::Stepped;
        }
        // SHIFT: applicable unless a checked delete mismatches
        bool applicable = true;
        for (std::size_t i = 0; i < t.moves.size(); ++i) {
            const Move& mv = t.moves[i];
            if (mv.kind == Move::Delete && mv.checked && c.tapes[i].head() != mv.sym) {
                applicable = false;
                break;
            }
        }
        if (!applicable) continue;
        for (std::size_t i = 0; i < t.moves.size(); ++i)
            apply_move(c.tapes[i], t.moves[i], m.tapes[i].kind);
        c.state = t.target;
        ++c.steps;
        return StepResult::Stepped;
    }
    return StepResult::Halted;
}

RunOutcome run(const Machine& m, const Bits& input, const OracleFn* oracle,
               const RunLimits& limits) {
    Config c = initial_config(m, input);
    std::uint64_t ceiling = kDefaultFuel;
    if (limits.max_steps)
        ceiling = *limits.max_steps;
    else if (m.time_bound)
        ceiling = m.time_bound->eval(input.size());

    RunOutcome out;
    while (true) {
        if (c.steps >= ceiling && c.state != m.accept) {
            // allow exactly ceiling steps; halting states are fine at the ceiling
            if (step(m, c, oracle) == StepResult::Halted) break;
            out.tag = RunOutcome::TimeExceeded;
            out.steps = c.steps;
            return out;
        }
        if (step(m, c, oracle) == StepResult::Halted) break;
    }
    out.steps = c.steps;
    if (c.state != m.accept) {
        out.tag = RunOutcome::Reject;
        return out;
    }
    int ot = m.output_tape();
    std::string y = c.tapes[static_cast<std::size_t>(ot)].content();
    if (limits.enforce_balance && m.balance_bound) {
        std::uint64_t n = input.size(), k = y.size();
        if (k > m.balance_bound->eval(n) || n > m.balance_bound->eval(k)) {
            out.tag = RunOutcome::BalanceViolated;
            return out;
        }
    }
    out.tag = RunOutcome::Accept;
    out.output = y;
    return out;
}

} // namespace rtm
