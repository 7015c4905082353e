#include "rtm/inversion.hpp"

#include <stdexcept>

#include "rtm/transform.hpp"

namespace rtm {

std::optional<Bits> fmin_invert(const Machine& m, const Bits& y, const OracleFn* oracle,
                                std::size_t window_cap) {
    if (!m.balance_bound)
        throw std::runtime_error("fmin_invert: machine lacks a balance bound");
    std::uint64_t limit = m.balance_bound->eval(y.size());
    std::size_t window = static_cast<std::size_t>(std::min<std::uint64_t>(limit, window_cap));
    Bits x;
    while (x.size() <= window) {
        RunOutcome o = run(m, x, oracle);
        if (o.accepted() && o.output == y) return x;
        Bits next = llex_next(x);
        x = std::move(next);
    }
    return std::nullopt;
}

FiniteFn fmin_table(const Machine& m, std::size_t max_out_len, const OracleFn* oracle,
                    std::size_t window_cap) {
    FiniteFn::Table t;
    for (const auto& y : strings_up_to(max_out_len)) {
        auto x = fmin_invert(m, y, oracle, window_cap);
        if (x) t[y] = *x;
    }
    return FiniteFn(std::move(t));
}

Program prog_inv_injective(const Program& w) {
    if (w.tag != ProgramClass::InvFP && w.tag != ProgramClass::InvFPOracle)
        throw EvalError("InvalidProgram: prog_inv needs an injective program");
    Machine m = validate_program(w);
    Machine rev = canonical_rename(reverse_machine(m).machine);
    rev.name = m.name + "_inv";
    Program out;
    out.tag = w.tag;
    out.bits = serialize_machine(rev);
    return out;
}

namespace {

struct Candidate {
    Machine machine;
    Config config;
    std::uint64_t ceiling = 0;
    bool dead = false;
    bool is_fallback = false;
    // fallback enumeration state
    Bits next_input;
    std::optional<Config> running;  // paused forward run of w on next_input
    std::uint64_t window = 0;
    bool exhausted_window = false;
};

} // namespace

LevinResult levin_invert(const std::vector<Program>& registry, const Program& w, const Bits& y,
                         const OracleFn* oracle, std::size_t window_cap) {
    LevinResult res;
    Machine mw = validate_program(w);
    if (!mw.balance_bound)
        throw std::runtime_error("levin_invert: target lacks a balance bound");

    auto verify = [&](const Bits& x) -> bool {
        RunOutcome o = run(mw, x, oracle);
        res.stats.verification_steps += o.steps;
        return o.accepted() && o.output == y;
    };

    std::vector<Candidate> cands;
    for (const auto& p : registry) {
        Candidate c;
        c.machine = validate_program(p);
        c.config = initial_config(c.machine, y);
        c.ceiling = c.machine.time_bound ? c.machine.time_bound->eval(y.size()) : kDefaultFuel;
        cands.push_back(std::move(c));
    }
    Candidate fb;
    fb.is_fallback = true;
    fb.window = std::min<std::uint64_t>(mw.balance_bound->eval(y.size()), window_cap);
    cands.push_back(std::move(fb));

    auto step_machine_candidate = [&](std::size_t i, std::uint64_t budget)
        -> std::optional<Bits> {
        Candidate& c = cands[i];
        for (std::uint64_t t = 0; t < budget && !c.dead; ++t) {
            if (c.config.steps >= c.ceiling) {
                c.dead = true;
                break;
            }
            StepResult r = step(c.machine, c.config, oracle);
            res.stats.per_program_steps[i] += 1;
            res.stats.steps_total += 1;
            if (r == StepResult::Halted) {
                c.dead = true;
                if (c.config.state == c.machine.accept) {
                    int ot = c.machine.output_tape();
                    Bits x = c.config.tapes[static_cast<std::size_t>(ot)].content();
                    if (verify(x)) return x;
                }
            }
        }
        return std::nullopt;
    };

    auto step_fallback = [&](std::uint64_t budget) -> std::optional<Bits> {
        Candidate& c = cands.back();
        std::uint64_t used = 0;
        while (used < budget && !c.exhausted_window) {
            if (!c.running) {
                if (c.next_input.size() > c.window) {
                    c.exhausted_window = true;
                    break;
                }
                c.running = initial_config(mw, c.next_input);
            }
            std::uint64_t ceiling =
                mw.time_bound ? mw.time_bound->eval(c.next_input.size()) : kDefaultFuel;
            StepResult r = step(mw, *c.running, oracle);
            ++used;
            res.stats.fallback_steps += 1;
            res.stats.steps_total += 1;
            bool finished = (r == StepResult::Halted) || c.running->steps >= ceiling;
            if (finished) {
                bool ok = r == StepResult::Halted && c.running->state == mw.accept;
                if (ok) {
                    int ot = mw.output_tape();
                    Bits out = c.running->tapes[static_cast<std::size_t>(ot)].content();
                    if (out == y && verify(c.next_input)) return c.next_input;
                }
                c.running.reset();
                c.next_input = llex_next(c.next_input);
            }
        }
        return std::nullopt;
    };

    for (std::uint64_t round = 0;; ++round) {
        bool all_dead = true;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            std::uint64_t budget = std::uint64_t{1} << std::min<std::size_t>(i, 40);
            if (cands[i].is_fallback) {
                if (cands[i].exhausted_window) continue;
                all_dead = false;
                res.stats.programs_tried = std::max<std::uint64_t>(res.stats.programs_tried,
                                                                   static_cast<std::uint64_t>(i + 1));
                auto got = step_fallback(budget);
                if (got) {
                    res.preimage = *got;
                    res.stats.winner_is_fallback = true;
                    return res;
                }
            } else {
                if (cands[i].dead) continue;
                all_dead = false;
                res.stats.programs_tried = std::max<std::uint64_t>(res.stats.programs_tried,
                                                                   static_cast<std::uint64_t>(i + 1));
                auto got = step_machine_candidate(i, budget);
                if (got) {
                    res.preimage = *got;
                    res.stats.winner = i;
                    return res;
                }
            }
        }
        if (all_dead) break;
    }
    return res;  // NotInImage: fallback exhausted, nobody verified
}

} // namespace rtm
