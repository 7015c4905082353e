#include "rtm/corpus.hpp"

#include <stdexcept>

namespace rtm {

namespace {

// Shared construction idioms. Injective machines here follow three rules so
// the reverse-key scan stays clean: merge points are entered only by
// rewrites with pairwise distinct write vectors, every shift target has a
// single shift in-edge, and loops are entered through a marker read ('s' at
// the left end of the input) or a tape context that cannot occur mid-loop.
// Outputs are built as insertions so the head ends on the first symbol
// (tidy accept: non-output tapes empty, output head at its first cell).

struct Build {
    Machine m;

    Build(std::string name, std::vector<TapeSpec> tapes) {
        m.name = std::move(name);
        m.tapes = std::move(tapes);
    }
    void states(std::initializer_list<std::string> ss) {
        for (auto& s : ss) m.states.insert(s);
    }
    void rw(const std::string& src, const char* r, const std::string& dst, const char* w) {
        m.states.insert(src);
        m.states.insert(dst);
        m.transitions.push_back(
            Transition::rw(src, SymVec(r, r + m.tapes.size()), dst, SymVec(w, w + m.tapes.size())));
    }
    void sh(const std::string& src, const std::string& dst, MoveVec mv) {
        m.states.insert(src);
        m.states.insert(dst);
        m.transitions.push_back(Transition::shift(src, dst, std::move(mv)));
    }
    Machine done(const std::string& start, const std::string& accept,
                 std::optional<PolyBound> time, std::optional<PolyBound> balance) {
        m.start = start;
        m.accept = accept;
        m.states.insert(start);
        m.states.insert(accept);
        m.time_bound = time;
        m.balance_bound = balance;
        m.check_well_formed();
        return m;
    }
};

const std::vector<TapeSpec> kTwoTape = {{TapeRole::Input, TapeKind::Rubber},
                                        {TapeRole::Output, TapeKind::Rubber}};

// identity-shaped copy loop: bracket the input with 's', scan right, then
// consume right-to-left emitting out(bit) insertions
void copy_body(Build& b, Symbol out0, Symbol out1) {
    b.rw("ent", "s_", "enth", "s_");
    b.rw("enth", "s_", "sScan", "s_");
    b.sh("sScan", "sc", {Move::right(), Move::stay()});
    b.rw("sc", "0_", "sch0", "0_");
    b.rw("sch0", "0_", "sScan", "0_");
    b.rw("sc", "1_", "sch1", "1_");
    b.rw("sch1", "1_", "sScan", "1_");
    b.rw("sc", "__", "j1", "__");
    b.rw("j1", "__", "sL", "__");
    b.sh("sL", "cn", {Move::left(), Move::stay()});
    const char ctx[3] = {'_', out0, out1};
    for (int bi = 0; bi < 2; ++bi) {
        char in = bi ? '1' : '0';
        char out = bi ? out1 : out0;
        std::string sC = std::string("sC") + in;
        for (char c : ctx) {
            std::string hop = std::string("c") + in + c;
            char rv[3] = {in, c, 0};
            b.rw("cn", rv, hop, rv);
            b.rw(hop, rv, sC, rv);
        }
        std::string lam = std::string("lam") + in;
        std::string lamh = std::string("lamh") + in;
        b.sh(sC, lam, {Move::del(in), Move::ins(out)});
        char lv[3] = {'_', out, 0};
        b.rw(lam, lv, lamh, lv);
        b.rw(lamh, lv, "sL", lv);
    }
    for (char c : ctx) {
        std::string hop = std::string("f") + c;
        char rv[3] = {'s', c, 0};
        b.rw("cn", rv, hop, rv);
        b.rw(hop, rv, "sDS", rv);
    }
    b.sh("sDS", "fin", {Move::del('s'), Move::stay()});
}

} // namespace

Machine identity_machine() {
    Build b("identity", kTwoTape);
    b.rw("q0", "0_", "h0", "0_");
    b.rw("h0", "0_", "sIns", "0_");
    b.rw("q0", "1_", "h1", "1_");
    b.rw("h1", "1_", "sIns", "1_");
    b.rw("q0", "__", "hE", "__");
    b.rw("hE", "__", "sIns", "__");
    b.sh("sIns", "ent", {Move::ins('s'), Move::stay()});
    copy_body(b, '0', '1');
    b.rw("fin", "__", "qa", "__");
    b.rw("fin", "_0", "qa", "_0");
    b.rw("fin", "_1", "qa", "_1");
    return b.done("q0", "qa", PolyBound(30, 1), PolyBound(1, 1));
}

Machine bitflip_machine() {
    Build b("bitflip", kTwoTape);
    b.rw("q0", "0_", "h0", "0_");
    b.rw("h0", "0_", "sIns", "0_");
    b.rw("q0", "1_", "h1", "1_");
    b.rw("h1", "1_", "sIns", "1_");
    b.rw("q0", "__", "hE", "__");
    b.rw("hE", "__", "sIns", "__");
    b.sh("sIns", "ent", {Move::ins('s'), Move::stay()});
    copy_body(b, '1', '0');  // emit complements
    b.rw("fin", "__", "qa", "__");
    b.rw("fin", "_0", "qa", "_0");
    b.rw("fin", "_1", "qa", "_1");
    return b.done("q0", "qa", PolyBound(30, 1), PolyBound(1, 1));
}

Machine append0_machine() {
    Build b("append0", kTwoTape);
    b.rw("q0", "0_", "h0", "0_");
    b.rw("h0", "0_", "sIns", "0_");
    b.rw("q0", "1_", "h1", "1_");
    b.rw("h1", "1_", "sIns", "1_");
    b.rw("q0", "__", "hE", "__");
    b.rw("hE", "__", "sIns", "__");
    b.sh("sIns", "ent", {Move::ins('s'), Move::stay()});
    b.rw("ent", "s_", "enth", "s_");
    b.rw("enth", "s_", "sScan", "s_");
    b.sh("sScan", "sc", {Move::right(), Move::stay()});
    b.rw("sc", "0_", "sch0", "0_");
    b.rw("sch0", "0_", "sScan", "0_");
    b.rw("sc", "1_", "sch1", "1_");
    b.rw("sch1", "1_", "sScan", "1_");
    // at the right fringe, splice the appended 0 onto the input then consume
    b.rw("sc", "__", "j0", "__");
    b.rw("j0", "__", "sI0", "__");
    b.sh("sI0", "j1", {Move::ins('0'), Move::stay()});
    b.rw("j1", "0_", "j1h", "0_");
    b.rw("j1h", "0_", "sC0", "0_");
    for (int bi = 0; bi < 2; ++bi) {
        char in = bi ? '1' : '0';
        std::string sC = std::string("sC") + in;
        for (char c : {'0', '1'}) {
            std::string hop = std::string("c") + in + c;
            char rv[3] = {in, c, 0};
            b.rw("cn", rv, hop, rv);
            b.rw(hop, rv, sC, rv);
        }
        std::string lam = std::string("lam") + in;
        std::string lamh = std::string("lamh") + in;
        b.sh(sC, lam, {Move::del(in), Move::ins(in)});
        char lv[3] = {'_', in, 0};
        b.rw(lam, lv, lamh, lv);
        b.rw(lamh, lv, "sL", lv);
    }
    b.sh("sL", "cn", {Move::left(), Move::stay()});
    for (char c : {'0', '1'}) {
        std::string hop = std::string("f") + c;
        char rv[3] = {'s', c, 0};
        b.rw("cn", rv, hop, rv);
        b.rw(hop, rv, "sDS", rv);
    }
    b.sh("sDS", "fin", {Move::del('s'), Move::stay()});
    b.rw("fin", "_0", "qa", "_0");
    b.rw("fin", "_1", "qa", "_1");
    return b.done("q0", "qa", PolyBound(30, 1), PolyBound(1, 1));
}

Machine prepend1_machine() {
    Build b("prepend1", kTwoTape);
    b.rw("q0", "0_", "h0", "0_");
    b.rw("h0", "0_", "sIns", "0_");
    b.rw("q0", "1_", "h1", "1_");
    b.rw("h1", "1_", "sIns", "1_");
    b.rw("q0", "__", "hE", "__");
    b.rw("hE", "__", "sIns", "__");
    b.sh("sIns", "ent", {Move::ins('s'), Move::stay()});
    copy_body(b, '0', '1');
    b.rw("fin", "__", "g_", "__");
    b.rw("g_", "__", "sIF", "__");
    b.rw("fin", "_0", "g0", "_0");
    b.rw("g0", "_0", "sIF", "_0");
    b.rw("fin", "_1", "g1", "_1");
    b.rw("g1", "_1", "sIF", "_1");
    b.sh("sIF", "f2", {Move::stay(), Move::ins('1')});
    b.rw("f2", "_1", "qa", "_1");
    return b.done("q0", "qa", PolyBound(30, 1), PolyBound(1, 1));
}

Machine inc_machine() {
    Build b("inc", kTwoTape);
    b.rw("q0", "0_", "h0", "0_");
    b.rw("h0", "0_", "sIns", "0_");
    b.rw("q0", "1_", "h1", "1_");
    b.rw("h1", "1_", "sIns", "1_");
    b.sh("sIns", "ent", {Move::ins('s'), Move::stay()});
    b.rw("ent", "s_", "enth", "s_");
    b.rw("enth", "s_", "sScan", "s_");
    b.sh("sScan", "sc", {Move::right(), Move::stay()});
    b.rw("sc", "0_", "sch0", "0_");
    b.rw("sch0", "0_", "sScan", "0_");
    b.rw("sc", "1_", "sch1", "1_");
    b.rw("sch1", "1_", "sScan", "1_");
    // carry leftwards: 1s flip to 0 until a 0 flips to 1; all-ones rejects
    b.rw("sc", "__", "cwh", "__");
    b.rw("cwh", "__", "sCw", "__");
    b.sh("sCw", "cw", {Move::left(), Move::stay()});
    b.rw("cw", "1_", "cw1", "0_");
    b.rw("cw1", "0_", "sCw", "0_");
    b.rw("cw", "0_", "cd", "1_");
    b.rw("cd", "1_", "sFw", "1_");
    // walk back over the flipped zeros to the fringe
    b.sh("sFw", "fw", {Move::right(), Move::stay()});
    b.rw("fw", "0_", "fwh", "0_");
    b.rw("fwh", "0_", "sFw", "0_");
    b.rw("fw", "__", "j2", "__");
    b.rw("j2", "__", "sL", "__");
    b.sh("sL", "cn", {Move::left(), Move::stay()});
    const char ctx[3] = {'_', '0', '1'};
    for (int bi = 0; bi < 2; ++bi) {
        char in = bi ? '1' : '0';
        std::string sC = std::string("sC") + in;
        for (char c : ctx) {
            std::string hop = std::string("c") + in + c;
            char rv[3] = {in, c, 0};
            b.rw("cn", rv, hop, rv);
            b.rw(hop, rv, sC, rv);
        }
        std::string lam = std::string("lam") + in;
        std::string lamh = std::string("lamh") + in;
        b.sh(sC, lam, {Move::del(in), Move::ins(in)});
        char lv[3] = {'_', in, 0};
        b.rw(lam, lv, lamh, lv);
        b.rw(lamh, lv, "sL", lv);
    }
    for (char c : {'0', '1'}) {
        std::string hop = std::string("f") + c;
        char rv[3] = {'s', c, 0};
        b.rw("cn", rv, hop, rv);
        b.rw(hop, rv, "sDS", rv);
    }
    b.sh("sDS", "fin", {Move::del('s'), Move::stay()});
    b.rw("fin", "_0", "qa", "_0");
    b.rw("fin", "_1", "qa", "_1");
    return b.done("q0", "qa", PolyBound(40, 1), PolyBound(1, 1));
}

Machine dec_machine() {
    Build b("dec", kTwoTape);
    b.rw("q0", "0_", "h0", "0_");
    b.rw("h0", "0_", "sIns", "0_");
    b.rw("q0", "1_", "h1", "1_");
    b.rw("h1", "1_", "sIns", "1_");
    b.sh("sIns", "ent", {Move::ins('s'), Move::stay()});
    b.rw("ent", "s_", "enth", "s_");
    b.rw("enth", "s_", "sScan", "s_");
    b.sh("sScan", "sc", {Move::right(), Move::stay()});
    b.rw("sc", "0_", "sch0", "0_");
    b.rw("sch0", "0_", "sScan", "0_");
    b.rw("sc", "1_", "sch1", "1_");
    b.rw("sch1", "1_", "sScan", "1_");
    // borrow leftwards: 0s flip to 1 until a 1 flips to 0; all-zeros rejects
    b.rw("sc", "__", "cwh", "__");
    b.rw("cwh", "__", "sCw", "__");
    b.sh("sCw", "cw", {Move::left(), Move::stay()});
    b.rw("cw", "0_", "cw0", "1_");
    b.rw("cw0", "1_", "sCw", "1_");
    b.rw("cw", "1_", "cd", "0_");
    b.rw("cd", "0_", "sFw", "0_");
    b.sh("sFw", "fw", {Move::right(), Move::stay()});
    b.rw("fw", "1_", "fwh", "1_");
    b.rw("fwh", "1_", "sFw", "1_");
    b.rw("fw", "__", "j2", "__");
    b.rw("j2", "__", "sL", "__");
    b.sh("sL", "cn", {Move::left(), Move::stay()});
    const char ctx[3] = {'_', '0', '1'};
    for (int bi = 0; bi < 2; ++bi) {
        char in = bi ? '1' : '0';
        std::string sC = std::string("sC") + in;
        for (char c : ctx) {
            std::string hop = std::string("c") + in + c;
            char rv[3] = {in, c, 0};
            b.rw("cn", rv, hop, rv);
            b.rw(hop, rv, sC, rv);
        }
        std::string lam = std::string("lam") + in;
        std::string lamh = std::string("lamh") + in;
        b.sh(sC, lam, {Move::del(in), Move::ins(in)});
        char lv[3] = {'_', in, 0};
        b.rw(lam, lv, lamh, lv);
        b.rw(lamh, lv, "sL", lv);
    }
    for (char c : {'0', '1'}) {
        std::string hop = std::string("f") + c;
        char rv[3] = {'s', c, 0};
        b.rw("cn", rv, hop, rv);
        b.rw(hop, rv, "sDS", rv);
    }
    b.sh("sDS", "fin", {Move::del('s'), Move::stay()});
    b.rw("fin", "_0", "qa", "_0");
    b.rw("fin", "_1", "qa", "_1");
    return b.done("q0", "qa", PolyBound(40, 1), PolyBound(1, 1));
}

Machine halving_machine() {
    // Halving passes on a rubber tape: each pass deletes every second 0
    // starting with the first, prints one output 0 when the pass read an
    // even count, and accepts when a pass consumed the final cell. Inputs
    // 0^(2^m) map to 0^m (including 0 -> empty); everything else rejects.
    Build b("halve", kTwoTape);
    b.rw("q0", "0_", "q0h", "0_");
    b.rw("q0h", "0_", "sIns", "0_");
    b.sh("sIns", "ent", {Move::ins('s'), Move::stay()});
    b.rw("ent", "s_", "enth", "s_");
    b.rw("enth", "s_", "sKR", "s_");
    b.sh("sKR", "rdD", {Move::right(), Move::stay()});
    // delete position
    b.rw("rdD", "0_", "dh_", "0_");
    b.rw("dh_", "0_", "sDel", "0_");
    b.rw("rdD", "00", "dh0", "00");
    b.rw("dh0", "00", "sDel", "00");
    b.sh("sDel", "rdK", {Move::del('0'), Move::stay()});
    // keep position
    b.rw("rdK", "0_", "kh_", "0_");
    b.rw("kh_", "0_", "sKR", "0_");
    b.rw("rdK", "00", "kh0", "00");
    b.rw("kh0", "00", "sKR", "00");
    // even count at the fringe: print one 0 and rewind to the bracket
    b.rw("rdD", "__", "prh_", "__");
    b.rw("prh_", "__", "sPr", "__");
    b.rw("rdD", "_0", "prh0", "_0");
    b.rw("prh0", "_0", "sPr", "_0");
    b.sh("sPr", "rwE", {Move::stay(), Move::ins('0')});
    b.rw("rwE", "_0", "rwEh", "_0");
    b.rw("rwEh", "_0", "sRwL", "_0");
    b.sh("sRwL", "rwR", {Move::left(), Move::stay()});
    b.rw("rwR", "00", "rwRh", "00");
    b.rw("rwRh", "00", "sRwL", "00");
    b.rw("rwR", "s0", "reh", "s0");
    b.rw("reh", "s0", "sKR", "s0");
    // odd count at the fringe: accept iff the tape emptied (bracket next)
    b.rw("rdK", "__", "ch_", "__");
    b.rw("ch_", "__", "sChL", "__");
    b.rw("rdK", "_0", "ch0", "_0");
    b.rw("ch0", "_0", "sChL", "_0");
    b.sh("sChL", "chR", {Move::left(), Move::stay()});
    b.rw("chR", "s_", "clh_", "s_");
    b.rw("clh_", "s_", "sDlS", "s_");
    b.rw("chR", "s0", "clh0", "s0");
    b.rw("clh0", "s0", "sDlS", "s0");
    b.sh("sDlS", "fin", {Move::del('s'), Move::stay()});
    b.rw("fin", "__", "qa", "__");
    b.rw("fin", "_0", "qa", "_0");
    return b.done("q0", "qa", PolyBound(60, 1), PolyBound(4096, 0));
}

Machine drop_last_machine() {
    Build b("dropLast", kTwoTape);
    b.rw("d0", "0_", "dm", "0_");
    b.rw("d0", "1_", "dm", "1_");
    b.sh("dm", "d0", {Move::right(), Move::stay()});
    b.rw("d0", "__", "b1", "__");
    b.sh("b1", "dl", {Move::left(), Move::stay()});
    b.rw("dl", "0_", "dd0", "0_");
    b.sh("dd0", "cl", {Move::del('0'), Move::stay()});
    b.rw("dl", "1_", "dd1", "1_");
    b.sh("dd1", "cl", {Move::del('1'), Move::stay()});
    b.sh("cl", "cr", {Move::left(), Move::stay()});
    for (char c : {'_', '0', '1'}) {
        char r0[3] = {'0', c, 0}, r1[3] = {'1', c, 0}, re[3] = {'_', c, 0};
        b.rw("cr", r0, "ce0", r0);
        b.rw("cr", r1, "ce1", r1);
        b.rw("cr", re, "qa", re);
    }
    b.sh("ce0", "cl", {Move::del('0'), Move::ins('0')});
    b.sh("ce1", "cl", {Move::del('1'), Move::ins('1')});
    return b.done("d0", "qa", PolyBound(30, 1), PolyBound(1, 1));
}

Machine erase_last_machine() {
    // same function as dropLast, but the final bit is merged away by two
    // rewrites sharing (target, write): the canonical injectivity failure
    Build b("eraseLast", kTwoTape);
    b.rw("d0", "0_", "dm", "0_");
    b.rw("d0", "1_", "dm", "1_");
    b.sh("dm", "d0", {Move::right(), Move::stay()});
    b.rw("d0", "__", "b1", "__");
    b.sh("b1", "dl", {Move::left(), Move::stay()});
    b.rw("dl", "0_", "dle", "__");
    b.rw("dl", "1_", "dle", "__");
    b.sh("dle", "cr", {Move::left(), Move::stay()});
    for (char c : {'_', '0', '1'}) {
        char r0[3] = {'0', c, 0}, r1[3] = {'1', c, 0}, re[3] = {'_', c, 0};
        b.rw("cr", r0, "ce0", r0);
        b.rw("cr", r1, "ce1", r1);
        b.rw("cr", re, "qa", re);
    }
    b.sh("ce0", "cl", {Move::del('0'), Move::ins('0')});
    b.sh("ce1", "cl", {Move::del('1'), Move::ins('1')});
    b.sh("cl", "cr", {Move::left(), Move::stay()});
    return b.done("d0", "qa", PolyBound(30, 1), PolyBound(1, 1));
}

Machine query_const_machine(const std::string& query, bool expect_yes,
                            const std::string& oracle_name) {
    std::vector<TapeSpec> tapes = {{TapeRole::Input, TapeKind::Rubber},
                                   {TapeRole::Output, TapeKind::Rubber},
                                   {TapeRole::Query, TapeKind::Rubber}};
    Build b("query" + query, tapes);
    b.rw("q0", "0__", "h0", "0__");
    b.rw("h0", "0__", "sQ", "0__");
    b.rw("q0", "1__", "h1", "1__");
    b.rw("h1", "1__", "sQ", "1__");
    b.rw("q0", "___", "hE", "___");
    b.rw("hE", "___", "sQ", "___");
    // write the fixed query (insertions run back to front), ask, then undo;
    // the final hop into the query state is a rewrite so the state stays
    // rewrite-entered (the history-logging transform needs that), which is
    // possible here because the query content is a known constant
    std::string prev = "sQ";
    for (std::size_t i = 0; i < query.size(); ++i) {
        Symbol sym = query[query.size() - 1 - i];
        std::string next = (i + 1 == query.size()) ? "preq" : "v" + std::to_string(i);
        b.sh(prev, next, {Move::stay(), Move::stay(), Move::ins(sym)});
        prev = next;
    }
    for (char bb : {'0', '1', '_'}) {
        char rv[4] = {bb, '_', query.empty() ? '_' : query[0], 0};
        b.rw("preq", rv, "qqu", rv);
    }
    b.m.oracle_sites.push_back({"qqu", "qyes", "qno", false});
    b.m.oracle_name = oracle_name;
    b.m.states.insert("qqu");
    b.m.states.insert("qyes");
    b.m.states.insert("qno");
    std::string cont = expect_yes ? "qyes" : "qno";
    prev = cont;
    for (std::size_t i = 0; i < query.size(); ++i) {
        Symbol sym = query[i];
        if (i + 1 == query.size()) {
            // fuse the last unquery with the input bracket insert
            b.sh(prev, "ent", {Move::ins('s'), Move::stay(), Move::del(sym)});
        } else {
            std::string next = "u" + std::to_string(i);
            b.sh(prev, next, {Move::stay(), Move::stay(), Move::del(sym)});
            prev = next;
        }
    }
    // identity body over three tapes
    auto rw3 = [&](const std::string& s, const char* r, const std::string& t, const char* w) {
        char rv[4] = {r[0], r[1], '_', 0}, wv[4] = {w[0], w[1], '_', 0};
        b.rw(s, rv, t, wv);
    };
    rw3("ent", "s_", "enth", "s_");
    rw3("enth", "s_", "sScan", "s_");
    b.sh("sScan", "sc", {Move::right(), Move::stay(), Move::stay()});
    rw3("sc", "0_", "sch0", "0_");
    rw3("sch0", "0_", "sScan", "0_");
    rw3("sc", "1_", "sch1", "1_");
    rw3("sch1", "1_", "sScan", "1_");
    rw3("sc", "__", "j1", "__");
    rw3("j1", "__", "sL", "__");
    b.sh("sL", "cn", {Move::left(), Move::stay(), Move::stay()});
    const char ctx[3] = {'_', '0', '1'};
    for (int bi = 0; bi < 2; ++bi) {
        char in = bi ? '1' : '0';
        std::string sC = std::string("sC") + in;
        for (char c : ctx) {
            std::string hop = std::string("c") + in + c;
            char rv[3] = {in, c, 0};
            rw3("cn", rv, hop, rv);
            rw3(hop, rv, sC, rv);
        }
        std::string lam = std::string("lam") + in;
        std::string lamh = std::string("lamh") + in;
        b.sh(sC, lam, {Move::del(in), Move::ins(in), Move::stay()});
        char lv[3] = {'_', in, 0};
        rw3(lam, lv, lamh, lv);
        rw3(lamh, lv, "sL", lv);
    }
    for (char c : ctx) {
        std::string hop = std::string("f") + c;
        char rv[3] = {'s', c, 0};
        rw3("cn", rv, hop, rv);
        rw3(hop, rv, "sDS", rv);
    }
    b.sh("sDS", "fin", {Move::del('s'), Move::stay(), Move::stay()});
    rw3("fin", "__", "qa", "__");
    rw3("fin", "_0", "qa", "_0");
    rw3("fin", "_1", "qa", "_1");
    return b.done("q0", "qa", PolyBound(40, 1), PolyBound(1, 1));
}

Machine filter_even_machine() {
    // deterministic oracle machine for id restricted to the oracle language;
    // queried content is the reversed input, harmless for weight predicates
    std::vector<TapeSpec> tapes = {{TapeRole::Input, TapeKind::Rubber},
                                   {TapeRole::Output, TapeKind::Rubber},
                                   {TapeRole::Query, TapeKind::Rubber}};
    Build b("filterEven", tapes);
    for (char c : {'_', '0', '1'}) {
        char r0[4] = {'0', '_', c, 0}, r1[4] = {'1', '_', c, 0}, re[4] = {'_', '_', c, 0};
        b.rw("p1", r0, "pm0", r0);
        b.rw("p1", r1, "pm1", r1);
        b.rw("p1", re, "qqu", re);
    }
    b.sh("pm0", "p1", {Move::del('0'), Move::stay(), Move::ins('0')});
    b.sh("pm1", "p1", {Move::del('1'), Move::stay(), Move::ins('1')});
    b.m.oracle_sites.push_back({"qqu", "qyes", "qno", false});
    b.m.oracle_name = "evenweight";
    b.m.states.insert("qno");
    for (char o : {'_', '0', '1'}) {
        char r0[4] = {'_', o, '0', 0}, r1[4] = {'_', o, '1', 0}, re[4] = {'_', o, '_', 0};
        b.rw("qyes", r0, "qm0", r0);
        b.rw("qyes", r1, "qm1", r1);
        b.rw("qyes", re, "qa", re);
    }
    b.sh("qm0", "qyes", {Move::stay(), Move::ins('0'), Move::del('0')});
    b.sh("qm1", "qyes", {Move::stay(), Move::ins('1'), Move::del('1')});
    return b.done("p1", "qa", PolyBound(30, 1), PolyBound(1, 1));
}

Machine corpus_machine(const std::string& name) {
    if (name == "identity") return identity_machine();
    if (name == "bitflip") return bitflip_machine();
    if (name == "append0") return append0_machine();
    if (name == "prepend1") return prepend1_machine();
    if (name == "inc") return inc_machine();
    if (name == "dec") return dec_machine();
    if (name == "halve") return halving_machine();
    if (name == "dropLast") return drop_last_machine();
    if (name == "eraseLast") return erase_last_machine();
    if (name == "query101") return query_const_machine("101", true, "evenweight");
    if (name == "query100") return query_const_machine("100", false, "evenweight");
    if (name == "filterEven") return filter_even_machine();
    throw std::runtime_error("unknown corpus machine: " + name);
}

std::vector<std::string> corpus_names() {
    return {"identity", "bitflip", "append0", "prepend1", "inc",      "dec",
            "halve",    "dropLast", "eraseLast", "query101", "query100", "filterEven"};
}

std::vector<std::string> injective_corpus_names() {
    return {"identity", "bitflip", "append0", "prepend1", "inc",
            "dec",      "halve",   "query101", "query100"};
}

std::vector<std::string> bennett_corpus_names() { return corpus_names(); }

} // namespace rtm
