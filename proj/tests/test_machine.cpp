#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rtm/corpus.hpp"
#include "rtm/extract.hpp"
#include "rtm/machine.hpp"
#include "rtm/machine_text.hpp"

using namespace rtm;

namespace {

const OracleFn even_weight = [](const std::string& s) {
    return std::count(s.begin(), s.end(), '1') % 2 == 0;
};

Bits zeros(std::size_t n) { return Bits(n, '0'); }

} // namespace

TEST_CASE("poly bounds evaluate and compare") {
    PolyBound q(5, 2);
    CHECK(q.eval(0) == 5);
    CHECK(q.eval(3) == 50);
    CHECK(PolyBound(2, 1).less_than(PolyBound(5, 2)));
    CHECK(PolyBound(9, 3).less_than(PolyBound(5, 2)) == false);
    CHECK(PolyBound(3, 2).less_than(PolyBound(5, 2)));
    PolyBound c = poly_compose(PolyBound(60, 1), PolyBound(4096, 0));
    CHECK(c.eval(7) >= 60 * (4096 * 2 + 1) / 2);  // dominates q2(q1(n))
}

TEST_CASE("every corpus machine is structurally valid and deterministic") {
    for (const auto& name : corpus_names()) {
        Machine m = corpus_machine(name);
        CAPTURE(name);
        CHECK(validate_deterministic(m).ok());
    }
}

TEST_CASE("injectivity scan separates the corpus as designed") {
    for (const auto& name : injective_corpus_names()) {
        Machine m = corpus_machine(name);
        CAPTURE(name);
        auto rep = validate_injective(m);
        for (const auto& c : rep.conflicts) CAPTURE(c);
        CHECK(rep.ok());
    }
    CHECK_FALSE(validate_injective(corpus_machine("dropLast")).ok());
    auto erep = validate_injective(corpus_machine("eraseLast"));
    CHECK_FALSE(erep.ok());
    bool found_merge = false;
    for (const auto& c : erep.conflicts)
        if (c.find("duplicate reverse rw key") != std::string::npos) found_merge = true;
    CHECK(found_merge);
}

TEST_CASE("determinism checker reports forged duplicates") {
    Machine m = identity_machine();
    m.transitions.push_back(m.transitions.front());
    auto rep = validate_deterministic(m);
    CHECK_FALSE(rep.ok());
    CHECK_THROWS_AS(validate_injective(m), std::runtime_error);
}

TEST_CASE("identity copies its input") {
    Machine id = identity_machine();
    for (const Bits& x : {Bits(""), Bits("0"), Bits("1"), Bits("01"), Bits("1101")}) {
        RunOutcome o = run(id, x);
        CAPTURE(x);
        REQUIRE(o.accepted());
        CHECK(o.output == x);
    }
}

TEST_CASE("halving machine matches the 0^(2^m) -> 0^m law") {
    Machine g = halving_machine();
    CHECK(run(g, "0000").output == "00");
    CHECK(run(g, zeros(8)).output == "000");
    CHECK(run(g, "00").output == "0");
    CHECK(run(g, "0").accepted());
    CHECK(run(g, "0").output == "");
    CHECK(run(g, "000").tag == RunOutcome::Reject);
    CHECK(run(g, "").tag == RunOutcome::Reject);
    CHECK(run(g, zeros(6)).tag == RunOutcome::Reject);
    for (int m = 1; m <= 10; ++m) {
        RunOutcome o = run(g, zeros(std::size_t{1} << m));
        REQUIRE(o.accepted());
        CHECK(o.output == zeros(static_cast<std::size_t>(m)));
    }
}

TEST_CASE("increment and decrement are msb-first and mutually inverse") {
    Machine inc = inc_machine(), dec = dec_machine();
    CHECK(run(inc, "011").output == "100");
    CHECK(run(inc, "0").output == "1");
    CHECK(run(inc, "10").output == "11");
    CHECK(run(inc, "11").tag == RunOutcome::Reject);
    CHECK(run(inc, "").tag == RunOutcome::Reject);
    CHECK(run(dec, "100").output == "011");
    CHECK(run(dec, "1").output == "0");
    CHECK(run(dec, "00").tag == RunOutcome::Reject);
    FiniteFn fi = extract_fn(inc, 6), fd = extract_fn(dec, 6);
    for (const auto& [x, y] : fi.table()) {
        auto back = fd.apply(y);
        REQUIRE(back.has_value());
        CHECK(*back == x);
    }
}

TEST_CASE("simple rewriters behave") {
    CHECK(run(bitflip_machine(), "0110").output == "1001");
    CHECK(run(append0_machine(), "1").output == "10");
    CHECK(run(append0_machine(), "").output == "0");
    CHECK(run(prepend1_machine(), "00").output == "100");
    CHECK(run(prepend1_machine(), "").output == "1");
    CHECK(run(drop_last_machine(), "01").output == "0");
    CHECK(run(drop_last_machine(), "").tag == RunOutcome::Reject);
    FiniteFn dl = extract_fn(drop_last_machine(), 2);
    FiniteFn want(FiniteFn::Table{
        {"0", ""}, {"1", ""}, {"00", "0"}, {"01", "0"}, {"10", "1"}, {"11", "1"}});
    CHECK(dl == want);
    CHECK(extract_fn(erase_last_machine(), 2) == want);
}

TEST_CASE("extract_fn tabulates the identity window") {
    FiniteFn t = extract_fn(identity_machine(), 2);
    CHECK(t.size() == 7);
    for (const auto& [x, y] : t.table()) CHECK(x == y);
}

TEST_CASE("extract_fn on the halving machine") {
    FiniteFn t = extract_fn(halving_machine(), 4);
    FiniteFn want(FiniteFn::Table{{"0", ""}, {"00", "0"}, {"0000", "00"}});
    CHECK(t == want);
}

TEST_CASE("oracle step only changes the state") {
    Machine m = query_const_machine("101", true, "evenweight");
    Config c = initial_config(m, "1");
    // drive to the query state
    int guard = 0;
    while (c.state != "qqu" && guard++ < 50) REQUIRE(step(m, c, &even_weight) == StepResult::Stepped);
    REQUIRE(c.state == "qqu");
    int q = -1;
    for (std::size_t i = 0; i < m.tapes.size(); ++i)
        if (m.tapes[i].role == TapeRole::Query) q = static_cast<int>(i);
    REQUIRE(q >= 0);
    CHECK(c.tapes[static_cast<std::size_t>(q)].content() == "101");
    Config before = c;
    REQUIRE(step(m, c, &even_weight) == StepResult::Stepped);
    CHECK(c.state == "qyes");  // 101 has even weight
    for (std::size_t i = 0; i < c.tapes.size(); ++i) CHECK(c.tapes[i] == before.tapes[i]);

    // odd weight query answers no
    const OracleFn odd = [](const std::string& s) {
        return std::count(s.begin(), s.end(), '1') % 2 == 1;
    };
    Config c2 = initial_config(m, "1");
    guard = 0;
    while (c2.state != "qqu" && guard++ < 50) step(m, c2, &odd);
    Config before2 = c2;
    step(m, c2, &odd);
    CHECK(c2.state == "qno");
    for (std::size_t i = 0; i < c2.tapes.size(); ++i) CHECK(c2.tapes[i] == before2.tapes[i]);
}

TEST_CASE("oracle machines run end to end") {
    Machine m = query_const_machine("101", true, "evenweight");
    RunOutcome o = run(m, "0110", &even_weight);
    REQUIRE(o.accepted());
    CHECK(o.output == "0110");
    CHECK_THROWS(run(m, "0110"));  // OracleMissing

    Machine f = filter_even_machine();
    CHECK(run(f, "11", &even_weight).output == "11");
    CHECK(run(f, "1", &even_weight).tag == RunOutcome::Reject);
    CHECK(run(f, "", &even_weight).output == "");
    FiniteFn t = extract_fn(f, 4, &even_weight);
    for (const auto& [x, y] : t.table()) {
        CHECK(x == y);
        CHECK(std::count(x.begin(), x.end(), '1') % 2 == 0);
    }
    CHECK(t.defined("0110"));
    CHECK_FALSE(t.defined("100"));
}

TEST_CASE("time ceiling forces TimeExceeded") {
    Machine id = identity_machine();
    id.time_bound = PolyBound(1, 1);  // far below the real cost
    RunOutcome o = run(id, "010101");
    CHECK(o.tag == RunOutcome::TimeExceeded);
}

TEST_CASE("balance violations are caught at accept") {
    Machine a0 = append0_machine();
    a0.balance_bound = PolyBound(1, 0);  // outputs of length >= 3 violate |y| <= 2
    CHECK(run(a0, "111").tag == RunOutcome::BalanceViolated);
    CHECK(run(a0, "1").accepted());
}

TEST_CASE("runs are pure functions of machine and input") {
    Machine g = halving_machine();
    RunOutcome a = run(g, "0000"), b = run(g, "0000");
    CHECK(a.tag == b.tag);
    CHECK(a.output == b.output);
    CHECK(a.steps == b.steps);
}

TEST_CASE("machine text round trips the corpus") {
    for (const auto& name : corpus_names()) {
        Machine m = corpus_machine(name);
        CAPTURE(name);
        Machine back = parse_machine(print_machine(m));
        CHECK(print_machine(back) == print_machine(m));
        CHECK(back.states == m.states);
        CHECK(back.transitions.size() == m.transitions.size());
    }
}

TEST_CASE("parser rejects bad input with line numbers") {
    CHECK_THROWS_WITH_AS(parse_machine("machine x\nbogus: 1\n"),
                         doctest::Contains("line 2"), std::runtime_error);
    CHECK_THROWS(parse_machine("machine x\ntapes: input:normal\nstates: a\nstart: a / accept: a\n"
                               "rw: a [0] -> b [0]\n"));  // b unknown, single tape
}

TEST_CASE("injective corpus machines are injective on extracted windows") {
    for (const auto& name : injective_corpus_names()) {
        CAPTURE(name);
        Machine m = corpus_machine(name);
        const OracleFn* oracle = m.oracle_name ? &even_weight : nullptr;
        FiniteFn t = extract_fn(m, 6, oracle);
        CHECK(t.is_injective());
    }
}
