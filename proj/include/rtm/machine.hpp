#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "rtm/bits.hpp"
#include "rtm/poly.hpp"

namespace rtm {

using Symbol = char;
constexpr Symbol kBlank = '_';

enum class TapeRole { Input, Output, Work, History, Query };
enum class TapeKind { Normal, Rubber };

struct TapeSpec {
    TapeRole role = TapeRole::Work;
    TapeKind kind = TapeKind::Normal;
};

// One head action for a SHIFT transition. Insert puts a fresh cell under the
// head (previous content shifts right); Delete removes the head cell, whose
// symbol must match (an unchecked Delete parses but fails the injectivity
// scan, since its reversal is underdetermined).
struct Move {
    enum Kind { L, R, S, Insert, Delete } kind = S;
    Symbol sym = kBlank;   // Insert/Delete payload
    bool checked = true;   // false only for a bare 'D'

    static Move left() { return {L, kBlank, true}; }
    static Move right() { return {R, kBlank, true}; }
    static Move stay() { return {S, kBlank, true}; }
    static Move ins(Symbol s) { return {Insert, s, true}; }
    static Move del(Symbol s) { return {Delete, s, true}; }
    static Move del_unchecked() { return {Delete, kBlank, false}; }

    bool operator==(const Move& o) const {
        return kind == o.kind && sym == o.sym && checked == o.checked;
    }
    bool operator<(const Move& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (sym != o.sym) return sym < o.sym;
        return checked < o.checked;
    }
};

using SymVec = std::vector<Symbol>;
using MoveVec = std::vector<Move>;

// Quadruple discipline: a transition either reads and rewrites every head
// (RW), or moves every head (SHIFT), never both. RW transitions are keyed on
// (source, read_vec); a SHIFT is keyed on its source state alone.
struct Transition {
    enum Kind { RW, SHIFT } kind = RW;
    std::string source;
    std::string target;
    SymVec read;    // RW only
    SymVec write;   // RW only
    MoveVec moves;  // SHIFT only

    static Transition rw(std::string src, SymVec r, std::string dst, SymVec w) {
        Transition t;
        t.kind = RW;
        t.source = std::move(src);
        t.target = std::move(dst);
        t.read = std::move(r);
        t.write = std::move(w);
        return t;
    }
    static Transition shift(std::string src, std::string dst, MoveVec m) {
        Transition t;
        t.kind = SHIFT;
        t.source = std::move(src);
        t.target = std::move(dst);
        t.moves = std::move(m);
        return t;
    }
};

struct OracleSite {
    std::string q_query;
    std::string q_yes;
    std::string q_no;
    bool reversed = false;  // reversed sites fire from the answer states
};

struct Machine {
    std::string name;
    std::set<std::string> states;
    std::string start;
    std::string accept;
    std::vector<TapeSpec> tapes;
    std::vector<Transition> transitions;
    std::optional<PolyBound> time_bound;
    std::optional<PolyBound> balance_bound;
    std::vector<OracleSite> oracle_sites;
    std::optional<std::string> oracle_name;

    std::size_t tape_count() const { return tapes.size(); }
    int input_tape() const;
    int output_tape() const;

    // Symbols appearing anywhere in the machine (vectors and move payloads).
    std::set<Symbol> alphabet() const;

    // Structural sanity: state references resolve, vector widths match the
    // tape count, exactly one input and one output tape, no transition out
    // of accept, oracle-site discipline. Throws std::runtime_error.
    void check_well_formed() const;
};

// A tape half is a stack of symbols; index 0 is the far end, back() is the
// cell nearest the head. The head reads the top of `right`.
struct Tape {
    std::vector<Symbol> left;
    std::vector<Symbol> right;

    Symbol head() const { return right.empty() ? kBlank : right.back(); }
    void normalize();
    std::string content() const;  // left-to-right, trailing blanks stripped

    bool operator==(const Tape& o) const { return left == o.left && right == o.right; }
};

struct Config {
    std::string state;
    std::vector<Tape> tapes;
    std::uint64_t steps = 0;
};

struct RunOutcome {
    enum Tag { Accept, Reject, TimeExceeded, BalanceViolated, OracleMissing } tag = Reject;
    Bits output;            // Accept only
    std::uint64_t steps = 0;

    bool accepted() const { return tag == Accept; }
};

// Oracle interface seen by the stepper: total membership predicate.
using OracleFn = std::function<bool(const std::string&)>;

struct ValidationReport {
    std::vector<std::string> conflicts;
    bool ok() const { return conflicts.empty(); }
};

struct RunLimits {
    std::optional<std::uint64_t> max_steps;   // overrides time_bound if set
    bool enforce_balance = true;
};

// Forward-key collision scan; empty report iff the machine is deterministic.
ValidationReport validate_deterministic(const Machine& m);

// Reverse-key collision scan; requires validate_deterministic to pass
// (throws std::runtime_error("DeterminismFirst") otherwise). Empty report
// iff the syntactic reverse of m is again deterministic, i.e. m is injective.
ValidationReport validate_injective(const Machine& m);

Config initial_config(const Machine& m, const Bits& input);

enum class StepResult { Stepped, Halted };

// Applies the unique applicable transition in place. Oracle steps change the
// state only. Throws on OracleMissing / IllegalRubberOp.
StepResult step(const Machine& m, Config& c, const OracleFn* oracle = nullptr);

RunOutcome run(const Machine& m, const Bits& input, const OracleFn* oracle = nullptr,
               const RunLimits& limits = {});

// Default step ceiling for machines without a time bound (and for
// extract_fn), generous at desk scale.
constexpr std::uint64_t kDefaultFuel = 4'000'000;

} // namespace rtm
