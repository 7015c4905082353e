#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rtm/corpus.hpp"
#include "rtm/extract.hpp"
#include "rtm/inversion.hpp"
#include "rtm/reductions.hpp"

using namespace rtm;

TEST_CASE("verifier machines decide their languages through certificates") {
    Machine vw = even_weight_verifier();
    CHECK(validate_deterministic(vw).ok());
    CHECK(run(vw, pair_encode("11", "")).accepted());
    CHECK_FALSE(run(vw, pair_encode("1", "")).accepted());
    CHECK_FALSE(run(vw, pair_encode("11", "0")).accepted());  // nonempty certificate

    Machine vl = even_length_verifier();
    CHECK(run(vl, pair_encode("10", "")).accepted());
    CHECK_FALSE(run(vl, pair_encode("101", "")).accepted());

    Machine vc = copy_verifier();
    CHECK(run(vc, pair_encode("011", "011")).accepted());
    CHECK_FALSE(run(vc, pair_encode("011", "01")).accepted());
    CHECK_FALSE(run(vc, pair_encode("011", "111")).accepted());
    CHECK(run(vc, pair_encode("", "")).accepted());
}

TEST_CASE("hartmanis_map emits the padded encoding") {
    Program v;
    v.tag = ProgramClass::FP;
    v.bits = "101";
    PolyBound p(2, 1);
    Bits s = hartmanis_map(v, p, "01");
    // code(101) 11 01 11 0^(3*6)
    Bits want = Bits("010001") + "11" + "01" + "11" + Bits(18, '0');
    CHECK(s == want);
    CHECK(hartmanis_map(v, p, "") == Bits("010001") + "11" + "11" + Bits(static_cast<std::size_t>(3 * p.eval(0)), '0'));
    // injectivity in x
    std::set<Bits> seen;
    for (const auto& x : strings_up_to(5)) CHECK(seen.insert(hartmanis_map(v, p, x)).second);
}

TEST_CASE("universal language accepts exactly padded registry members") {
    const auto& reg = verifier_registry();
    for (const auto& e : reg) {
        OracleLanguage L = oracle_lookup(e.language);
        for (const auto& x : strings_up_to(4)) {
            Bits s = hartmanis_map(e.program, e.time, x);
            CAPTURE(e.language);
            CAPTURE(x);
            CHECK(universal_member(s, reg) == L.membership(x));
        }
    }
    CHECK_FALSE(universal_member("11", reg));
    CHECK_FALSE(universal_member("", reg));
    // wrong pad length fails
    Bits good = hartmanis_map(reg[0].program, reg[0].time, "11");
    CHECK(universal_member(good, reg));
    CHECK_FALSE(universal_member(good + "0", reg));
    CHECK_FALSE(universal_member(good.substr(0, good.size() - 1), reg));
}

TEST_CASE("hartmanis maps are invfP reductions to the universal language") {
    OracleLanguage uni = oracle_lookup("universal");
    for (const auto& e : verifier_registry()) {
        OracleLanguage L = oracle_lookup(e.language);
        ReductionWitness w;
        w.kind = ReductionKind::InvFP;
        w.window_len = 5;
        w.f = [&](const Bits& x) -> std::optional<Bits> {
            return hartmanis_map(e.program, e.time, x);
        };
        ReductionReport rep = check_reduction(w, L, uni);
        CAPTURE(e.language);
        for (const auto& c : rep.counterexamples) CAPTURE(c);
        CHECK(rep.ok());
    }
}

TEST_CASE("identity reduces a language to itself; constant maps fail") {
    OracleLanguage L = oracle_lookup("evenweight");
    ReductionWitness idw;
    idw.kind = ReductionKind::ManyOne;
    idw.window_len = 5;
    idw.f = [](const Bits& x) -> std::optional<Bits> { return x; };
    CHECK(check_reduction(idw, L, L).ok());

    ReductionWitness bad;
    bad.kind = ReductionKind::ManyOne;
    bad.window_len = 4;
    bad.f = [](const Bits&) -> std::optional<Bits> { return Bits("1"); };  // fixed non-member
    ReductionReport rep = check_reduction(bad, L, L);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("the inverse of a reduction reduces only the image side") {
    // f = prepend1 reduces L1 = evenweight to L2 = {1x : x evenweight} =
    // oddweight strings starting with 1... use the tagged union to build L2
    OracleLanguage L1 = oracle_lookup("evenweight");
    OracleLanguage L2;
    L2.name = "shifted";
    L2.membership = [&](const Bits& s) {
        return !s.empty() && s[0] == '1' && L1.membership(s.substr(1));
    };
    ReductionWitness fw;
    fw.kind = ReductionKind::InvFP;
    fw.window_len = 5;
    fw.f = [](const Bits& x) -> std::optional<Bits> { return "1" + x; };
    CHECK(check_reduction(fw, L1, L2).ok());

    // relational inverse: defined on 1A* only, reduces L2 ∩ Im(f) to L1
    ReductionWitness bw;
    bw.kind = ReductionKind::InvFP;
    bw.window_len = 5;
    bw.f = [](const Bits& y) -> std::optional<Bits> {
        if (y.empty() || y[0] != '1') return std::nullopt;
        return y.substr(1);
    };
    // as a reduction of L2 it passes (Im(f) ⊇ L2 here)...
    CHECK(check_reduction(bw, L2, L1).ok());
    // ...but the asymmetry shows against a language with members outside
    // Im(f): L3 = evenweight ∪ {0}: f still reduces evenweight to L3? no —
    // witness the documented failure direction with L2' = all strings
    OracleLanguage all = oracle_lookup("sigmastar");
    ReductionWitness fw2;
    fw2.kind = ReductionKind::InvFP;
    fw2.window_len = 4;
    fw2.f = fw.f;
    CHECK(check_reduction(fw2, all, all).ok());
    ReductionWitness bw2;
    bw2.kind = ReductionKind::InvFP;
    bw2.window_len = 4;
    bw2.f = bw.f;
    ReductionReport rep = check_reduction(bw2, all, all);
    CHECK_FALSE(rep.ok());  // strings outside 1A* are members but unmapped
}

TEST_CASE("oracle registry lookups") {
    CHECK_NOTHROW(oracle_lookup("universal"));
    CHECK_NOTHROW(oracle_lookup("subsetsum"));
    CHECK_THROWS_WITH_AS(oracle_lookup("nope"), doctest::Contains("UnknownOracle"),
                         std::runtime_error);
    OracleLanguage du = oracle_lookup("dunion(evenweight,sigmastar)");
    CHECK(du.membership("011"));        // tag 0: "11" has even weight
    CHECK_FALSE(du.membership("01"));   // tag 0: "1" odd
    CHECK(du.membership("11"));         // tag 1: sigmastar
    CHECK_FALSE(du.membership(""));
}

TEST_CASE("subsetsum toy decides by enumeration") {
    OracleLanguage L = oracle_lookup("subsetsum");
    // target 3 = 11, weights {1, 10}: pair(11, pair(1, pair(10, "")))
    Bits inst = pair_encode("11", pair_encode("1", pair_encode("10", "")));
    CHECK(L.membership(inst));
    Bits inst2 = pair_encode("100", pair_encode("1", pair_encode("10", "")));
    CHECK_FALSE(L.membership(inst2));  // 4 unreachable from {1,2}
    CHECK_FALSE(L.membership("0000"));
}

TEST_CASE("image languages agree with extract_fn") {
    OracleLanguage im = oracle_lookup("im-dropLast");
    FiniteFn f = extract_fn(drop_last_machine(), 5);
    for (const auto& z : strings_up_to(3)) {
        bool any = false;
        for (const auto& [x, y] : f.table()) any = any || (y == z);
        CHECK(im.membership(pair_encode(z, "")) == any);
    }
    // prefix-constrained membership
    CHECK(im.membership(pair_encode("1", "11")));       // 11b maps to 11? no: dropLast(11?)..
    CHECK(im.membership(pair_encode("11", "11")));      // dropLast(11b) = 11
    CHECK_FALSE(im.membership(pair_encode("00", "11")));
}

TEST_CASE("fmin through the image oracle agrees with direct fmin") {
    for (const auto& name : {"dropLast", "identity", "halve"}) {
        CAPTURE(name);
        Machine m = corpus_machine(name);
        for (const auto& y : strings_up_to(2)) {
            auto via = fmin_invert_via_oracle(m, y);
            auto direct = fmin_invert(m, y);
            CAPTURE(y);
            CHECK(via == direct);
        }
    }
}
