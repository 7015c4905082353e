#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rtm/corpus.hpp"
#include "rtm/extract.hpp"
#include "rtm/machine.hpp"
#include "rtm/machine_text.hpp"
#include "rtm/codec.hpp"
#include "rtm/transform.hpp"

using namespace rtm;

namespace {

const OracleFn even_weight = [](const std::string& s) {
    return std::count(s.begin(), s.end(), '1') % 2 == 0;
};

Bits zeros(std::size_t n) { return Bits(n, '0'); }


const OracleFn* oracle_for(const Machine& m) {
    return m.oracle_name ? &even_weight : nullptr;
}

bool tables_inverse(const FiniteFn& f, const FiniteFn& finv) {
    for (const auto& [x, y] : f.table()) {
        auto back = finv.apply(y);
        if (!back || *back != x) return false;
    }
    return true;
}

} // namespace

TEST_CASE("reverse runs every injective machine backwards") {
    for (const auto& name : injective_corpus_names()) {
        CAPTURE(name);
        Machine m = corpus_machine(name);
        const OracleFn* oracle = oracle_for(m);
        ReverseResult rr = reverse_machine(m);
        CHECK(rr.injective_input);
        CHECK(validate_deterministic(rr.machine).ok());
        CHECK(validate_injective(rr.machine).ok());
        FiniteFn fwd = extract_fn(m, 5, oracle);
        for (const auto& [x, y] : fwd.table()) {
            RunOutcome back = run(rr.machine, y, oracle);
            CAPTURE(x);
            REQUIRE(back.accepted());
            CHECK(back.output == x);
        }
    }
}

TEST_CASE("reverse of the halving machine doubles") {
    Machine g = halving_machine();
    Machine rg = reverse_machine(g).machine;
    RunOutcome o = run(rg, "000");
    REQUIRE(o.accepted());
    CHECK(o.output == zeros(8));
    // exponential blowup of the reverse
    for (int m = 3; m <= 10; ++m) {
        RunOutcome r = run(rg, zeros(static_cast<std::size_t>(m)));
        REQUIRE(r.accepted());
        CHECK(r.steps >= (std::uint64_t{1} << m));
    }
}

TEST_CASE("double reversal is the identity up to renaming") {
    for (const auto& name : injective_corpus_names()) {
        CAPTURE(name);
        Machine m = corpus_machine(name);
        Machine mm = reverse_machine(reverse_machine(m).machine).machine;
        CHECK(equivalent_up_to_renaming(m, mm));
    }
}

TEST_CASE("reverse of a noninjective machine is flagged") {
    ReverseResult rr = reverse_machine(drop_last_machine());
    CHECK_FALSE(rr.injective_input);
    CHECK_FALSE(validate_deterministic(rr.machine).ok());
}

TEST_CASE("reverse maps extracted tables to relational inverses") {
    for (const auto& name : injective_corpus_names()) {
        CAPTURE(name);
        Machine m = corpus_machine(name);
        const OracleFn* oracle = oracle_for(m);
        FiniteFn fwd = extract_fn(m, 4, oracle);
        FiniteFn back = extract_fn(reverse_machine(m).machine, 4, oracle);
        auto inv = relational_inverse(fwd);
        REQUIRE(inv.has_value());
        // window asymmetry: compare only where lengths stay inside both runs
        for (const auto& [y, x] : inv->table()) {
            if (y.size() <= 4) {
                auto got = back.apply(y);
                REQUIRE(got.has_value());
                CHECK(*got == x);
            }
        }
    }
}

TEST_CASE("chain composes machine functions") {
    Machine id = identity_machine(), g = halving_machine();
    Machine cg = chain_machines(id, g);
    CHECK(validate_deterministic(cg).ok());
    FiniteFn direct = extract_fn(g, 4);
    FiniteFn chained = extract_fn(cg, 4);
    CHECK(direct == chained);

    Machine gg = chain_machines(g, g);
    RunOutcome o = run(gg, zeros(16));
    REQUIRE(o.accepted());
    CHECK(o.output == "00");

    Machine fa = chain_machines(bitflip_machine(), append0_machine());
    CHECK(run(fa, "10").output == "010");
    CHECK(validate_injective(fa).ok());
}

TEST_CASE("chain of injective machines stays injective") {
    Machine c = chain_machines(inc_machine(), dec_machine());
    CHECK(validate_deterministic(c).ok());
    CHECK(validate_injective(c).ok());
    FiniteFn t = extract_fn(c, 6);
    for (const auto& [x, y] : t.table()) CHECK(x == y);  // dec after inc
    CHECK(t.defined("01"));
    CHECK_FALSE(t.defined("11"));  // outside Dom(inc)
}

TEST_CASE("chain reversal anti-commutes") {
    Machine m1 = bitflip_machine(), m2 = append0_machine();
    Machine lhs = chain_machines(reverse_machine(m2).machine, reverse_machine(m1).machine);
    Machine rhs = reverse_machine(chain_machines(m1, m2)).machine;
    FiniteFn a = extract_fn(lhs, 5), b = extract_fn(rhs, 5);
    CHECK(a == b);
}

TEST_CASE("bennett_garbage embeds any deterministic machine injectively") {
    for (const auto& name : bennett_corpus_names()) {
        CAPTURE(name);
        Machine m = corpus_machine(name);
        const OracleFn* oracle = m.oracle_name ? &even_weight : nullptr;
        Machine bg = bennett_garbage(m);
        CHECK(validate_deterministic(bg).ok());
        auto rep = validate_injective(bg);
        for (const auto& c : rep.conflicts) CAPTURE(c);
        CHECK(rep.ok());
        FiniteFn f = extract_fn(m, 4, oracle);
        for (const auto& [x, y] : f.table()) {
            RunOutcome o = run(bg, x, oracle);
            CAPTURE(x);
            REQUIRE(o.accepted());
            // code(x) 11 f(x)
            std::string want;
            for (char c : x) want += (c == '0' ? "00" : "01");
            want += "11";
            want += y;
            CHECK(o.output == want);
        }
        // rejection is preserved
        for (const auto& x : strings_up_to(4))
            if (!f.defined(x)) CHECK_FALSE(run(bg, x, oracle).accepted());
    }
}

TEST_CASE("bennett_garbage of the oracle filter works") {
    Machine m = filter_even_machine();
    Machine bg = bennett_garbage(m);
    CHECK(validate_injective(bg).ok());
    RunOutcome o = run(bg, "11", &even_weight);
    REQUIRE(o.accepted());
    CHECK(o.output == "010111" + std::string("11"));
    CHECK_FALSE(run(bg, "1", &even_weight).accepted());
}

TEST_CASE("bennett_clean computes exactly the forward function") {
    Machine inc = inc_machine(), dec = dec_machine();
    Machine clean = bennett_clean(inc, dec);
    CHECK(validate_deterministic(clean).ok());
    auto rep = validate_injective(clean);
    for (const auto& c : rep.conflicts) CAPTURE(c);
    CHECK(rep.ok());
    RunOutcome o = run(clean, "011");
    REQUIRE(o.accepted());
    CHECK(o.output == "100");
    CHECK(extract_fn(clean, 6) == extract_fn(inc, 6));
}

TEST_CASE("bennett_clean of identity with itself is the identity") {
    Machine id = identity_machine();
    Machine c = bennett_clean(id, id);
    CHECK(validate_injective(c).ok());
    FiniteFn t = extract_fn(c, 6);
    CHECK(t.size() == 127);
    for (const auto& [x, y] : t.table()) CHECK(x == y);
}

TEST_CASE("bennett_clean rejects non-inverses") {
    CHECK_THROWS_WITH_AS(bennett_clean(inc_machine(), inc_machine()),
                         doctest::Contains("NotInverses"), std::runtime_error);
}

TEST_CASE("bennett_clean survives oracle machines") {
    Machine f = filter_even_machine();
    Machine c = bennett_clean(f, f, &even_weight);
    CHECK(validate_injective(c).ok());
    FiniteFn direct = extract_fn(f, 4, &even_weight);
    FiniteFn via = extract_fn(c, 4, &even_weight);
    CHECK(direct == via);
}

TEST_CASE("reversing oracle machines gives reverse call sites that simulate away") {
    Machine m = query_const_machine("101", true, "evenweight");
    CHECK(validate_injective(m).ok());
    Machine rev = reverse_machine(m).machine;
    REQUIRE(rev.oracle_sites.size() == 1);
    CHECK(rev.oracle_sites[0].reversed);
    FiniteFn fwd = extract_fn(m, 4, &even_weight);
    FiniteFn back = extract_fn(rev, 4, &even_weight);
    CHECK(tables_inverse(fwd, back));

    Machine sim = simulate_reverse_oracle(rev);
    for (const auto& site : sim.oracle_sites) CHECK_FALSE(site.reversed);
    FiniteFn simt = extract_fn(sim, 4, &even_weight);
    CHECK(simt == back);

    // machines without reverse sites come back unchanged
    Machine same = simulate_reverse_oracle(m);
    CHECK(print_machine(same) == print_machine(m));
}

TEST_CASE("generated bennett machines reverse like any injective machine") {
    Machine clean = bennett_clean(inc_machine(), dec_machine());
    ReverseResult rr = reverse_machine(clean);
    CHECK(rr.injective_input);
    FiniteFn fwd = extract_fn(clean, 5);
    CHECK(fwd.size() > 0);
    for (const auto& [x, y] : fwd.table()) {
        RunOutcome back = run(rr.machine, y);
        CAPTURE(x);
        REQUIRE(back.accepted());
        CHECK(back.output == x);
    }
}

TEST_CASE("bennett embedding of a chained machine") {
    Machine chained = chain_machines(bitflip_machine(), append0_machine());
    Machine bg = bennett_garbage(chained);
    CHECK(validate_injective(bg).ok());
    RunOutcome o = run(bg, "10");
    REQUIRE(o.accepted());
    // bitflip(10) = 01, then append0: 010
    CHECK(o.output == pair_encode("10", "010"));
}

TEST_CASE("generated machines survive the text format") {
    Machine clean = bennett_clean(inc_machine(), dec_machine());
    Machine back = parse_machine(print_machine(clean));
    CHECK(print_machine(back) == print_machine(clean));
    CHECK(extract_fn(back, 5) == extract_fn(clean, 5));
    Machine bg = bennett_garbage(drop_last_machine());
    Machine back2 = parse_machine(print_machine(bg));
    CHECK(run(back2, "01").output == run(bg, "01").output);
}

TEST_CASE("chain carries a single oracle through") {
    Machine q = query_const_machine("101", true, "evenweight");
    Machine c = chain_machines(q, identity_machine());
    REQUIRE(c.oracle_name.has_value());
    CHECK(*c.oracle_name == "evenweight");
    FiniteFn direct = extract_fn(q, 4, &even_weight);
    FiniteFn chained = extract_fn(c, 4, &even_weight);
    CHECK(direct == chained);
}

TEST_CASE("chain merges distinct oracles under a tagged union") {
    Machine a = query_const_machine("101", true, "evenweight");
    Machine b = query_const_machine("11", true, "evenlength");
    b.oracle_name = "evenlength";
    Machine c = chain_machines(a, b);
    REQUIRE(c.oracle_name.has_value());
    CHECK(*c.oracle_name == "dunion(evenweight,evenlength)");
    CHECK(validate_deterministic(c).ok());
    const OracleFn du = [](const std::string& s) {
        if (s.empty()) return false;
        std::string rest = s.substr(1);
        if (s[0] == '0') return std::count(rest.begin(), rest.end(), '1') % 2 == 0;
        return rest.size() % 2 == 0;
    };
    // both gates stay open ("101" has even weight, "11" has even length), so
    // the chain behaves as the identity
    FiniteFn t = extract_fn(c, 3, &du);
    CHECK(t.size() == 15);
    for (const auto& [x, y] : t.table()) CHECK(x == y);
}

TEST_CASE("reverse oracle consistency rejection") {
    // the reverse of query101_yes reaches its answer state expecting the
    // query on the tape to be in the oracle; an oracle that denies it must
    // reject
    Machine m = query_const_machine("101", true, "evenweight");
    Machine rev = reverse_machine(m).machine;
    const OracleFn nothing = [](const std::string&) { return false; };
    CHECK_FALSE(run(rev, "0", &nothing).accepted());
    Machine sim = simulate_reverse_oracle(rev);
    CHECK_FALSE(run(sim, "0", &nothing).accepted());
}
