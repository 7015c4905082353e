#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rtm/codec.hpp"
#include "rtm/corpus.hpp"
#include "rtm/extract.hpp"

using namespace rtm;

TEST_CASE("code doubles and is prefix decodable") {
    CHECK(code_bits("0") == "00");
    CHECK(code_bits("") == "");
    CHECK(code_bits("101") == "010001");
    std::mt19937_64 rng(17);
    for (int i = 0; i < 2000; ++i) {
        Bits x = random_bits(rng, 24);
        auto back = decode_bits(code_bits(x));
        REQUIRE(back.has_value());
        CHECK(*back == x);
    }
    CHECK_FALSE(decode_bits("10").has_value());
    CHECK_FALSE(decode_bits("0").has_value());
}

TEST_CASE("pair encoding separates on the first aligned 11") {
    CHECK(pair_encode("1", "0") == "01110");
    auto p = pair_decode("00011110");
    REQUIRE(p.has_value());
    CHECK(p->first == "01");
    CHECK(p->second == "10");
    CHECK_FALSE(pair_decode("0000").has_value());
    CHECK_FALSE(pair_decode("").has_value());
    std::mt19937_64 rng(23);
    for (int i = 0; i < 2000; ++i) {
        Bits w = random_bits(rng, 10), x = random_bits(rng, 10);
        auto back = pair_decode(pair_encode(w, x));
        REQUIRE(back.has_value());
        CHECK(back->first == w);
        CHECK(back->second == x);
    }
}

TEST_CASE("machine serialization round trips") {
    for (const auto& name : corpus_names()) {
        CAPTURE(name);
        Machine m = corpus_machine(name);
        Machine back = deserialize_machine(serialize_machine(m));
        CHECK(serialize_machine(back) == serialize_machine(m));
    }
    CHECK_THROWS_AS(deserialize_machine("11"), EvalError);
}

TEST_CASE("program validation enforces class invariants") {
    CHECK_NOTHROW(validate_program(Program::invfp(identity_machine())));
    CHECK_NOTHROW(validate_program(Program::fp(drop_last_machine())));
    CHECK_THROWS_AS(validate_program(Program::invfp(drop_last_machine())), EvalError);
    Machine nob = identity_machine();
    nob.time_bound.reset();
    CHECK_THROWS_AS(validate_program(Program::fp(nob)), EvalError);
    // oracle machines need the oracle class
    CHECK_THROWS_AS(validate_program(Program::invfp(query_const_machine("101", true, "evenweight"))),
                    EvalError);
    CHECK_NOTHROW(
        validate_program(Program::invfp_oracle(query_const_machine("101", true, "evenweight"))));
}

TEST_CASE("inj_ev evaluates injective programs below the bound") {
    PolyBound q(5, 2);
    Program id = Program::invfp(identity_machine());
    Bits s = pair_encode(id.bits, "10");
    CHECK(inj_ev(q, s) == pair_encode(id.bits, "10"));

    Program g = Program::invfp(halving_machine());
    CHECK(inj_ev(q, pair_encode(g.bits, "0000")) == pair_encode(g.bits, "00"));
    CHECK_THROWS_WITH_AS(inj_ev(q, pair_encode(g.bits, "000")), doctest::Contains("NotInDomain"),
                         EvalError);

    // bound comparison is lexicographic on (k, a)
    Machine slow = identity_machine();
    slow.time_bound = PolyBound(9, 3);
    CHECK_THROWS_WITH_AS(inj_ev(q, pair_encode(Program::invfp(slow).bits, "1")),
                         doctest::Contains("BoundTooLarge"), EvalError);
    CHECK_THROWS_WITH_AS(inj_ev(q, "0000"), doctest::Contains("InvalidProgram"), EvalError);
    CHECK_THROWS_WITH_AS(inj_ev(q, pair_encode(Program::fp(drop_last_machine()).bits, "01")),
                         doctest::Contains("InvalidProgram"), EvalError);
}

TEST_CASE("inj_ev agrees with direct runs and is injective over a registry") {
    PolyBound q(5, 2);
    std::vector<Program> registry = {
        Program::invfp(identity_machine()), Program::invfp(bitflip_machine()),
        Program::invfp(append0_machine()), Program::invfp(prepend1_machine()),
        Program::invfp(inc_machine())};
    std::map<Bits, std::pair<std::size_t, Bits>> outputs;
    for (std::size_t i = 0; i < registry.size(); ++i) {
        Machine m = deserialize_machine(registry[i].bits);
        FiniteFn table = extract_fn(m, 4);
        for (const auto& x : strings_up_to(4)) {
            Bits s = pair_encode(registry[i].bits, x);
            if (!table.defined(x)) {
                CHECK_THROWS(inj_ev(q, s));
                continue;
            }
            Bits out = inj_ev(q, s);
            CHECK(out == pair_encode(registry[i].bits, *table.apply(x)));
            auto [it, fresh] = outputs.emplace(out, std::make_pair(i, x));
            CHECK(fresh);  // distinct valid inputs give distinct outputs
        }
    }
}

TEST_CASE("cofp_eval implements the three-step rule") {
    PolyBound q(5, 2);
    Program idv = Program::invfp(identity_machine());
    Program idw = Program::fp(identity_machine());
    CHECK(cofp_eval(q, idv, idw, "01") == Bits("01"));

    // v' appends a zero, w drops the last bit: conditions hold
    Program app = Program::invfp(append0_machine());
    Program drop = Program::fp(drop_last_machine());
    CHECK(cofp_eval(q, app, drop, "1") == Bits("10"));
    // v' prepends 1, w undefined on its images' shape: the example where the
    // check fails is a machine defined only on strings ending in 0
    Program pre = Program::invfp(prepend1_machine());
    Program inc = Program::fp(inc_machine());
    // psi(y) = 1y; inc(1y) defined only when 1y has a zero; for y = "1",
    // x = "11" and inc is undefined: no output
    CHECK_FALSE(cofp_eval(q, pre, inc, "1").has_value());
    CHECK_THROWS_AS(cofp_eval(q, idw, idw, "0"), EvalError);
}

TEST_CASE("cofp_eval output is a sub-inverse of phi_w and a subfunction of psi_v'") {
    PolyBound q(5, 2);
    struct Case {
        Program vp, w;
    };
    std::vector<Case> cases = {
        {Program::invfp(append0_machine()), Program::fp(drop_last_machine())},
        {Program::invfp(identity_machine()), Program::fp(drop_last_machine())},
        {Program::invfp(bitflip_machine()), Program::fp(bitflip_machine())},
    };
    for (const auto& c : cases) {
        Machine mv = deserialize_machine(c.vp.bits);
        Machine mw = deserialize_machine(c.w.bits);
        FiniteFn psi = extract_fn(mv, 4);
        FiniteFn phi = extract_fn(mw, 4);
        FiniteFn::Table got;
        for (const auto& y : strings_up_to(3)) {
            auto out = cofp_eval(q, c.vp, c.w, y);
            if (out) got[y] = *out;
        }
        FiniteFn Phi(std::move(got));
        CHECK(Phi.subfunction_of(psi));
        CHECK(is_subinverse(Phi, phi));
    }
}

TEST_CASE("cofp string evaluator wraps the programs back on") {
    PolyBound q(5, 2);
    Program app = Program::invfp(append0_machine());
    Program drop = Program::fp(drop_last_machine());
    Bits s = pair_encode(app.bits, pair_encode(drop.bits, "1"));
    auto out = cofp_eval_string(q, s);
    REQUIRE(out.has_value());
    CHECK(*out == pair_encode(app.bits, pair_encode(drop.bits, "10")));
}

TEST_CASE("regcofp_eval guards with the regularity identity") {
    PolyBound q(5, 2);
    Program idp = Program::cofp(Program::invfp(identity_machine()),
                                Program::fp(identity_machine()));
    CHECK(regcofp_eval(q, idp, idp, "0") == Bits("0"));

    Program flipw = Program::cofp(Program::invfp(bitflip_machine()),
                                  Program::fp(bitflip_machine()));
    CHECK(regcofp_eval(q, flipw, flipw, "01") == Bits("10"));

    // empty-domain v' kills everything
    Machine nothing;
    nothing.name = "nothing";
    nothing.tapes = {{TapeRole::Input, TapeKind::Rubber}, {TapeRole::Output, TapeKind::Rubber}};
    nothing.states = {"q0", "qa"};
    nothing.start = "q0";
    nothing.accept = "qa";
    nothing.time_bound = PolyBound(1, 1);
    nothing.balance_bound = PolyBound(1, 1);
    Program deadp = Program::cofp(Program::invfp(identity_machine()), Program::fp(nothing));
    for (const auto& x : strings_up_to(3)) {
        CHECK_FALSE(cofp_eval(q, deadp.parts[0], deadp.parts[1], x).has_value());
        CHECK_FALSE(regcofp_eval(q, idp, deadp, x).has_value());
    }
    CHECK_THROWS_AS(regcofp_eval(q, idp, Program::fp(nothing), "0"), EvalError);
}
