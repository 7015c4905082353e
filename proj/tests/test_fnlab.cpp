#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rtm/fnlab.hpp"

using namespace rtm;

namespace {

FiniteFn fn(std::initializer_list<std::pair<std::string, std::string>> pairs) {
    FiniteFn::Table t;
    for (auto& [x, y] : pairs) t[x] = y;
    return FiniteFn(std::move(t));
}

const std::vector<std::string> kTri = {"a", "b", "c"};

} // namespace

TEST_CASE("composition, restriction, relational inverse") {
    FiniteFn drop = fn({{"00", "0"}, {"01", "0"}, {"10", "1"}, {"11", "1"}});
    FiniteFn app0 = fn({{"0", "00"}, {"1", "10"}});
    FiniteFn comp = compose(drop, app0);
    CHECK(comp == fn({{"0", "0"}, {"1", "1"}}));
    CHECK(restrict_to(drop, {}) == FiniteFn::theta());
    CHECK(restrict_to(drop, {"00"}) == fn({{"00", "0"}}));
    CHECK_FALSE(relational_inverse(fn({{"0", "1"}, {"1", "1"}})).has_value());
    auto inv = relational_inverse(app0);
    REQUIRE(inv.has_value());
    CHECK(*inv == fn({{"00", "0"}, {"10", "1"}}));
}

TEST_CASE("inverse and co-inverse predicates") {
    CHECK(is_mutual_inverse(fn({{"1", "0"}}), fn({{"0", "1"}})));
    // f(0)=1, f'(1)=1, f(1) undefined: not an inverse
    CHECK_FALSE(is_inverse(fn({{"1", "1"}}), fn({{"0", "1"}})));
    // the paper's non-injective mutual inverse: Dom(f') not inside Im(f)
    FiniteFn f = fn({{"a", "b"}});
    FiniteFn fp = fn({{"a", "a"}, {"b", "a"}});
    CHECK(is_mutual_inverse(fp, f));
    CHECK_FALSE(fp.is_injective());
    std::set<std::string> dom = fp.domain(), im = f.image();
    CHECK_FALSE(std::includes(im.begin(), im.end(), dom.begin(), dom.end()));
    // theta is an inverse of f iff Im(f) is empty
    CHECK(is_inverse(FiniteFn::theta(), FiniteFn::theta()));
    CHECK_FALSE(is_inverse(FiniteFn::theta(), f));
    CHECK(is_coinverse(FiniteFn::theta(), f));
}

TEST_CASE("inverse characterization via fibers") {
    std::mt19937_64 rng(7);
    auto window = Universe{"01", 3}.elements();
    for (int trial = 0; trial < 300; ++trial) {
        FiniteFn f = random_fn(rng, window);
        FiniteFn fp = random_fn(rng, window);
        bool lhs = is_inverse(fp, f);
        bool rhs = true;
        for (const auto& y : f.image()) {
            auto v = fp.apply(y);
            if (!v || !f.preimage(y).count(*v)) { rhs = false; break; }
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("choice functions enumerate one pick per fiber") {
    FiniteFn f = fn({{"00", "1"}, {"01", "1"}, {"10", "0"}});
    auto cs = choice_functions(f);
    CHECK(cs.size() == 2);
    for (const auto& c : cs) {
        CHECK(is_mutual_inverse(c, f));
        CHECK(c.domain() == f.image());
        CHECK(c.is_injective());
    }
    // injective f: single choice function = relational inverse
    FiniteFn injf = fn({{"0", "1"}, {"1", "00"}});
    auto single = choice_functions(injf);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == *relational_inverse(injf));
}

TEST_CASE("representative choice functions and the two bijections") {
    std::mt19937_64 rng(11);
    auto window = Universe{"01", 2}.elements();
    for (int trial = 0; trial < 120; ++trial) {
        FiniteFn f = random_fn(rng, window, 0.7);
        if (f.empty()) continue;
        auto cs = choice_functions(f);
        auto rs = repr_choice_functions(f);
        CHECK(cs.size() == rs.size());
        auto fibers = [](const FiniteFn& h) {
            std::set<std::set<std::string>> out;
            for (auto& [y, xs] : mod_partition(h).classes) out.insert(xs);
            return out;
        };
        for (const auto& r : rs) {
            CHECK(r.is_idempotent());
            CHECK(fibers(r) == fibers(f));  // mod_r equals mod_f as a partition
            for (const auto& v : r.image()) CHECK(r.apply(v) == v);
        }
        // rho and v are mutually inverse between the enumerations
        for (const auto& c : cs) {
            FiniteFn r = rho_of_choice(c, f);
            CHECK(choice_of_repr(r, f) == c);
        }
        for (const auto& r : rs) {
            FiniteFn c = choice_of_repr(r, f);
            CHECK(rho_of_choice(c, f) == r);
        }
    }
}

TEST_CASE("fmin picks llex-least representatives") {
    FiniteFn f = fn({{"00", "1"}, {"01", "1"}, {"10", "0"}});
    CHECK(fmin(f) == fn({{"1", "00"}, {"0", "10"}}));
    FiniteFn injf = fn({{"0", "1"}, {"11", "0"}});
    CHECK(fmin(injf) == *relational_inverse(injf));
    FiniteFn drop = fn({{"00", "0"}, {"01", "0"}, {"10", "1"}, {"11", "1"}});
    CHECK(fmin(drop) == fn({{"0", "00"}, {"1", "10"}}));
}

TEST_CASE("fmin properties hold exhaustively on small functions") {
    for (const auto& f : all_partial_fns(kTri, kTri)) {
        FiniteFn m = fmin(f);
        CHECK(compose(f, m) == FiniteFn::identity_on(f.image()));
        CHECK(m.is_injective());
        CHECK(compose(m, compose(f, m)) == m);
        CHECK(compose(f, compose(m, f)) == f);
    }
}

namespace {

// brute-force witness search, independent of is_subinverse's shortcuts
bool subinverse_by_witness(const FiniteFn& gp, const FiniteFn& f) {
    std::vector<std::pair<std::string, std::string>> items(f.table().begin(), f.table().end());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << items.size()); ++mask) {
        FiniteFn::Table sub;
        for (std::size_t i = 0; i < items.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) sub.insert(items[i]);
        FiniteFn g(std::move(sub));
        if (is_mutual_inverse(gp, g)) return true;
    }
    return false;
}

} // namespace

TEST_CASE("sub-inverse definition agrees with the co-inverse test for injective g'") {
    for (const auto& f : all_partial_fns(kTri, kTri)) {
        for (const auto& gp : all_partial_fns(kTri, kTri)) {
            if (!gp.is_injective()) continue;
            bool witness = subinverse_by_witness(gp, f);
            CHECK(is_subinverse(gp, f) == is_coinverse(gp, f));
            CHECK(witness == is_coinverse(gp, f));
        }
    }
}

TEST_CASE("a subfunction of a mutual inverse need not be a sub-inverse") {
    // pinned-by-enumeration: f' is a mutual inverse of f, g' is a
    // subfunction of f', and no subfunction of f has g' as a mutual inverse
    FiniteFn f = fn({{"", ""}});
    FiniteFn fp = fn({{"", ""}, {"0", ""}});
    FiniteFn gp = fn({{"0", ""}});
    CHECK(is_mutual_inverse(fp, f));
    CHECK(gp.subfunction_of(fp));
    CHECK_FALSE(subinverse_by_witness(gp, f));
    CHECK_FALSE(is_subinverse(gp, f));
}

TEST_CASE("sub-inverse examples") {
    FiniteFn f = fn({{"0", "0"}, {"1", "0"}});
    CHECK(is_subinverse(fn({{"0", "1"}}), f));   // mutual with f|{1}
    CHECK(is_subinverse(FiniteFn::theta(), f));  // empty witness
    for (const auto& c : choice_functions(f)) {
        FiniteFn r = restrict_to(f, c.image());
        auto ri = relational_inverse(r);
        REQUIRE(ri.has_value());
        CHECK(is_subinverse(*ri, f));
    }
}

TEST_CASE("idempotents") {
    CHECK(FiniteFn::identity_on({"0", "1"}).is_idempotent());
    CHECK(fn({{"0", "1"}, {"1", "1"}}).is_idempotent());
    CHECK_FALSE(fn({{"0", "1"}}).is_idempotent());
}

TEST_CASE("monoid closure: symmetric inverse monoid on two points") {
    std::set<std::string> uni = {"x", "y"};
    // generators: all partial injections on {x, y}
    std::vector<FiniteFn> gens;
    for (const auto& f : all_partial_fns({"x", "y"}, {"x", "y"}))
        if (f.is_injective()) gens.push_back(f);
    FiniteMonoid M = monoid_closure(gens, uni, 100);
    CHECK(M.elements.size() == 7);
    GreenRelations g = green_relations(M);
    CHECK(g.d_classes == 3);
    // every element of an inverse monoid is regular
    CHECK(regular_elements(M).size() == 7);
    // idempotents are exactly the partial identities
    for (const auto& e : idempotents(M)) {
        for (const auto& [x, y] : e.table()) CHECK(x == y);
    }
    // maximal subgroup at a rank-2 idempotent has order 2
    auto grp = maximal_subgroup(M, M.identity);
    CHECK(grp.size() == 2);
    // at a rank-1 idempotent it is trivial
    auto g1 = maximal_subgroup(M, FiniteFn::identity_on({"x"}));
    CHECK(g1.size() == 1);
}

TEST_CASE("monoid closure respects caps and trivial generators") {
    CHECK(monoid_closure({}, {"x"}, 5).elements.size() == 1);
    FiniteFn tau = fn({{"x", "y"}, {"y", "x"}});
    CHECK(monoid_closure({tau}, {"x", "y"}, 5).elements.size() == 2);
    std::vector<FiniteFn> gens;
    for (const auto& f : all_partial_fns({"x", "y"}, {"x", "y"})) gens.push_back(f);
    CHECK_THROWS_AS(monoid_closure(gens, {"x", "y"}, 3), std::runtime_error);
}

TEST_CASE("maximal L-classes: injective-regular or disjoint") {
    // closure of partial injections plus one non-injective element
    std::vector<FiniteFn> gens;
    for (const auto& f : all_partial_fns({"x", "y"}, {"x", "y"}))
        if (f.is_injective()) gens.push_back(f);
    gens.push_back(fn({{"x", "x"}, {"y", "x"}}));
    FiniteMonoid M = monoid_closure(gens, {"x", "y"}, 64);
    GreenRelations g = green_relations(M);
    std::vector<bool> regular(M.elements.size(), false), injective(M.elements.size(), false);
    for (std::size_t i = 0; i < M.elements.size(); ++i) {
        injective[i] = M.elements[i].is_injective();
        for (const auto& h : M.elements)
            if (compose(M.elements[i], compose(h, M.elements[i])) == M.elements[i]) {
                regular[i] = true;
                break;
            }
    }
    for (int cls = 0; cls < g.l_classes; ++cls) {
        bool any = false, all = true;
        for (std::size_t i = 0; i < M.elements.size(); ++i) {
            if (g.L[i] != cls) continue;
            bool good = regular[i] && injective[i];
            any = any || good;
            all = all && good;
        }
        CHECK((!any || all));
    }
}

TEST_CASE("fixators on a 3-point universe") {
    std::set<std::string> uni(kTri.begin(), kTri.end());
    FiniteMonoid M;
    M.identity = FiniteFn::identity_on(uni);
    M.elements = all_partial_fns(kTri, kTri);
    // constant function: every total map fixes it on the right
    FiniteFn cst = fn({{"a", "b"}, {"b", "b"}, {"c", "b"}});
    auto rf = rfix(cst, M);
    std::size_t total_count = 0;
    for (const auto& a : M.elements)
        if (a.domain().size() == 3) ++total_count;
    std::size_t total_in_rfix = 0;
    for (const auto& a : rf)
        if (a.domain().size() == 3) ++total_in_rfix;
    CHECK(total_in_rfix == total_count);  // 27 total maps all right-fix a constant
    // identity's right fixator among total functions is the identity alone
    FiniteFn idu = FiniteFn::identity_on(uni);
    std::size_t total_fixing_id = 0;
    for (const auto& a : rfix(idu, M))
        if (a.domain().size() == 3) ++total_fixing_id;
    CHECK(total_fixing_id == 1);
    // representative choice functions right-fix every f
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        FiniteFn f = random_fn(rng, kTri, 0.8);
        for (const auto& r : repr_choice_functions(f))
            CHECK(compose(f, r) == f);
    }
}

TEST_CASE("pad_zero and group_inverse on the paper's example") {
    FiniteFn f = fn({{"0", "0"}, {"1", "0"}});
    FiniteFn fp = fn({{"0", "0"}});
    FiniteFn f0 = pad_zero(f);
    CHECK(f0 == fn({{"00", "10"}, {"01", "10"}}));
    FiniteFn F = group_inverse(f, fp);
    CHECK(F == fn({{"10", "00"}, {"00", "10"}}));
    std::set<std::string> Z = {"00", "10"};
    CHECK(compose(F, F) == FiniteFn::identity_on(Z));
    CHECK(compose(f0, compose(F, f0)) == f0);
    CHECK(group_inverse(FiniteFn::theta(), FiniteFn::theta()) == FiniteFn::theta());
    CHECK_THROWS_AS(group_inverse(f, fn({{"0", "1"}, {"1", "1"}})), std::runtime_error);
}

TEST_CASE("group inverse of injective f is the swap closure") {
    FiniteFn f = fn({{"0", "1"}, {"11", "00"}});
    auto fp = relational_inverse(f);
    REQUIRE(fp.has_value());
    FiniteFn F = group_inverse(f, *fp);
    for (const auto& [x, y] : f.table()) {
        CHECK(F.apply("1" + y) == "0" + x);
        CHECK(F.apply("0" + x) == "1" + y);
    }
    CHECK(F.size() == 2 * f.size());
}

TEST_CASE("simulation identities") {
    std::mt19937_64 rng(5);
    auto window = Universe{"01", 3}.elements();
    std::vector<std::string> wide = Universe{"01", 4}.elements();
    for (int trial = 0; trial < 100; ++trial) {
        FiniteFn f = random_fn(rng, window, 0.6);
        FiniteFn f0 = pad_zero(f);
        FiniteFn pi0 = pi_fn('0', wide), pi1 = pi_fn('1', wide);
        FiniteFn pi0p = pi_prime_fn('0', wide), pi1p = pi_prime_fn('1', wide);
        CHECK(simulates(f0, f, pi1, pi0p));
        CHECK(simulates(f, f0, pi1p, pi0));
        CHECK(simulates(f, f, FiniteFn::identity_on(f.image()),
                        FiniteFn::identity_on(f.domain())));
    }
}

TEST_CASE("products of injective regular elements stay regular") {
    std::mt19937_64 rng(29);
    auto window = Universe{"01", 3}.elements();
    for (int trial = 0; trial < 200; ++trial) {
        FiniteFn g1 = random_fn(rng, window, 0.4);
        FiniteFn g2 = random_fn(rng, window, 0.4);
        if (!g1.is_injective() || !g2.is_injective()) continue;
        FiniteFn prod = compose(g2, g1);
        CHECK(prod.is_injective());
        auto inv = relational_inverse(prod);
        REQUIRE(inv.has_value());
        CHECK(is_mutual_inverse(*inv, prod));
        CHECK(inv->domain() == prod.image());
        // the witness is the product of the component inverses
        auto i1 = relational_inverse(g1);
        auto i2 = relational_inverse(g2);
        CHECK(compose(*i1, *i2) == *inv);
    }
}

TEST_CASE("perturbing a choice function by a fiber transposition") {
    std::mt19937_64 rng(31);
    auto window = Universe{"01", 3}.elements();
    int found = 0;
    for (int trial = 0; trial < 400 && found < 60; ++trial) {
        FiniteFn f = random_fn(rng, window, 0.5);
        if (f.is_injective() || f.empty()) continue;
        FiniteFn f1 = random_choice_function(rng, f);
        // find a fat fiber and swap its chosen element for an unchosen one
        std::string x1, x2;
        bool have = false;
        for (const auto& [y, xs] : mod_partition(f).classes) {
            if (xs.size() < 2) continue;
            x1 = *f1.apply(y);
            for (const auto& x : xs)
                if (x != x1) {
                    x2 = x;
                    have = true;
                }
            break;
        }
        if (!have) continue;
        ++found;
        FiniteFn::Table taut;
        for (const auto& z : window) taut[z] = z;
        taut[x1] = x2;
        taut[x2] = x1;
        FiniteFn tau(std::move(taut));
        FiniteFn f2 = compose(tau, f1);  // x2 replaces x1 in the choice set
        CHECK(f2 != f1);
        CHECK(f2.is_injective());
        CHECK(is_mutual_inverse(f2, f));
        CHECK(f2.image().count(x2) == 1);
        CHECK(f2.image().count(x1) == 0);
    }
    CHECK(found > 0);
}

TEST_CASE("regular elements are recovered from any extension by corner restriction") {
    std::mt19937_64 rng(37);
    auto window = Universe{"01", 3}.elements();
    for (int trial = 0; trial < 200; ++trial) {
        FiniteFn g = random_fn(rng, window, 0.3);
        if (!g.is_injective()) continue;
        // extend g arbitrarily outside its domain
        FiniteFn f = g;
        for (const auto& z : window)
            if (!f.defined(z) && (rng() & 1)) f.set(z, window[rng() % window.size()]);
        FiniteFn idK = FiniteFn::identity_on(g.image());
        FiniteFn idH = FiniteFn::identity_on(g.domain());
        CHECK(compose(idK, compose(f, idH)) == g);
    }
}

TEST_CASE("finite function text round trip") {
    FiniteFn f = fn({{"", "01"}, {"0", ""}, {"10", "10"}});
    FiniteFn back = FiniteFn::from_text(f.to_text());
    CHECK(back == f);
    CHECK_THROWS(FiniteFn::from_text("x => y\n"));
}
