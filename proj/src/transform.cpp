#include "rtm/transform.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rtm {

namespace {

Move invert_move(const Move& mv, bool* lossy) {
    switch (mv.kind) {
        case Move::L: return Move::right();
        case Move::R: return Move::left();
        case Move::S: return Move::stay();
        case Move::Insert: return Move::del(mv.sym);
        case Move::Delete:
            if (!mv.checked) {
                if (lossy) *lossy = true;
                return Move::ins(kBlank);
            }
            return Move::ins(mv.sym);
    }
    return Move::stay();
}

std::string fresh_name(std::set<std::string>& used, std::string base) {
    while (used.count(base)) base += "q";
    used.insert(base);
    return base;
}

// Append extra tapes; existing vectors widened with blank reads/writes and
// stay moves.
Machine widen(const Machine& m, const std::vector<TapeSpec>& extra) {
    Machine out = m;
    for (const auto& e : extra) out.tapes.push_back(e);
    for (auto& t : out.transitions) {
        if (t.kind == Transition::RW) {
            t.read.resize(out.tapes.size(), kBlank);
            t.write.resize(out.tapes.size(), kBlank);
        } else {
            t.moves.resize(out.tapes.size(), Move::stay());
        }
    }
    return out;
}

// Place m's tapes at the given indices of a composite with total_width
// tapes; fresh positions read blank / stay.
Machine remap_tapes(const Machine& m, const std::vector<std::size_t>& where,
                    std::size_t total_width, const std::vector<TapeSpec>& layout) {
    Machine out = m;
    out.tapes = layout;
    for (auto& t : out.transitions) {
        if (t.kind == Transition::RW) {
            SymVec r(total_width, kBlank), w(total_width, kBlank);
            for (std::size_t i = 0; i < where.size(); ++i) {
                r[where[i]] = t.read[i];
                w[where[i]] = t.write[i];
            }
            t.read = std::move(r);
            t.write = std::move(w);
        } else {
            MoveVec mv(total_width, Move::stay());
            for (std::size_t i = 0; i < where.size(); ++i) mv[where[i]] = t.moves[i];
            t.moves = std::move(mv);
        }
    }
    return out;
}

Machine rename_states(const Machine& m, const std::map<std::string, std::string>& map) {
    auto nm = [&](const std::string& s) {
        auto it = map.find(s);
        return it == map.end() ? s : it->second;
    };
    Machine out = m;
    out.states.clear();
    for (const auto& s : m.states) out.states.insert(nm(s));
    out.start = nm(m.start);
    out.accept = nm(m.accept);
    for (auto& t : out.transitions) {
        t.source = nm(t.source);
        t.target = nm(t.target);
    }
    for (auto& site : out.oracle_sites) {
        site.q_query = nm(site.q_query);
        site.q_yes = nm(site.q_yes);
        site.q_no = nm(site.q_no);
    }
    return out;
}

} // namespace

Machine reverse_core(const Machine& m, const std::string& suffix) {
    Machine out;
    out.name = m.name + "_rev";
    out.tapes = m.tapes;
    out.time_bound = m.time_bound;
    out.balance_bound = m.balance_bound;
    out.oracle_name = m.oracle_name;
    auto nm = [&](const std::string& s) { return s + suffix; };
    for (const auto& s : m.states) out.states.insert(nm(s));
    out.start = nm(m.accept);
    out.accept = nm(m.start);
    bool lossy = false;
    for (const auto& t : m.transitions) {
        if (t.kind == Transition::RW) {
            out.transitions.push_back(Transition::rw(nm(t.target), t.write, nm(t.source), t.read));
        } else {
            MoveVec inv;
            for (const auto& mv : t.moves) inv.push_back(invert_move(mv, &lossy));
            out.transitions.push_back(Transition::shift(nm(t.target), nm(t.source), inv));
        }
    }
    for (const auto& site : m.oracle_sites) {
        OracleSite rs;
        rs.q_query = nm(site.q_query);
        rs.q_yes = nm(site.q_yes);
        rs.q_no = nm(site.q_no);
        rs.reversed = !site.reversed;
        out.oracle_sites.push_back(rs);
    }
    (void)lossy;
    return out;
}

ReverseResult reverse_machine(const Machine& m) {
    ReverseResult res;
    res.injective_input = validate_deterministic(m).ok() && validate_injective(m).ok();
    Machine rev = reverse_core(m, "_r");
    // the reverse reads where m wrote
    for (auto& spec : rev.tapes) {
        if (spec.role == TapeRole::Input) spec.role = TapeRole::Output;
        else if (spec.role == TapeRole::Output) spec.role = TapeRole::Input;
    }
    // per the forward/backward complexity argument, the reverse runs within
    // time(balance(n)) and keeps the same balance
    if (m.time_bound && m.balance_bound)
        rev.time_bound = poly_compose(*m.time_bound, *m.balance_bound);
    else
        rev.time_bound.reset();
    rev.balance_bound = m.balance_bound;
    res.machine = rev;
    return res;
}

Machine canonical_rename(const Machine& m) {
    std::map<std::string, std::string> names;
    std::deque<std::string> queue;
    auto visit = [&](const std::string& s) {
        if (!names.count(s)) {
            names[s] = "s" + std::to_string(names.size());
            queue.push_back(s);
        }
    };
    visit(m.start);
    while (!queue.empty()) {
        std::string s = queue.front();
        queue.pop_front();
        for (const auto& t : m.transitions)
            if (t.source == s) visit(t.target);
        for (const auto& site : m.oracle_sites) {
            if (!site.reversed && site.q_query == s) {
                visit(site.q_yes);
                visit(site.q_no);
            }
            if (site.reversed && (site.q_yes == s || site.q_no == s)) visit(site.q_query);
        }
    }
    for (const auto& s : m.states)
        if (!names.count(s)) names[s] = "s" + std::to_string(names.size());
    return rename_states(m, names);
}

bool equivalent_up_to_renaming(const Machine& a, const Machine& b) {
    auto shape = [](const Machine& m) {
        Machine c = canonical_rename(m);
        std::ostringstream out;
        for (const auto& spec : c.tapes)
            out << static_cast<int>(spec.role) << ':' << static_cast<int>(spec.kind) << ';';
        out << '|' << c.start << '|' << c.accept << '|';
        std::vector<std::string> lines;
        for (const auto& t : c.transitions) {
            std::ostringstream l;
            if (t.kind == Transition::RW) {
                l << "rw " << t.source << ' ';
                for (Symbol s : t.read) l << s;
                l << ' ' << t.target << ' ';
                for (Symbol s : t.write) l << s;
            } else {
                l << "sh " << t.source << ' ' << t.target;
                for (const auto& mv : t.moves)
                    l << ' ' << mv.kind << (mv.kind == Move::Insert || mv.kind == Move::Delete
                                                ? std::string(1, mv.sym)
                                                : "");
            }
            lines.push_back(l.str());
        }
        std::sort(lines.begin(), lines.end());
        for (const auto& l : lines) out << l << '\n';
        std::vector<std::string> sites;
        for (const auto& s : c.oracle_sites)
            sites.push_back(s.q_query + ',' + s.q_yes + ',' + s.q_no +
                            (s.reversed ? ",r" : ",f"));
        std::sort(sites.begin(), sites.end());
        for (const auto& s : sites) out << s << '\n';
        return out.str();
    };
    return shape(a) == shape(b);
}

Machine chain_machines(const Machine& m1in, const Machine& m2in) {
    if (!validate_deterministic(m1in).ok() || !validate_deterministic(m2in).ok())
        throw std::runtime_error("chain: machines must be deterministic");
    Machine m1 = m1in, m2 = m2in;

    // distinct oracles become one tagged union; each side's queries get a
    // tag inserted before the call and removed after it
    std::optional<std::string> oracle_name;
    if (m1.oracle_name && m2.oracle_name && *m1.oracle_name != *m2.oracle_name) {
        std::string merged = "dunion(" + *m1.oracle_name + "," + *m2.oracle_name + ")";
        auto tag_side = [&](Machine& m, char tag) {
            int q = -1;
            for (std::size_t i = 0; i < m.tapes.size(); ++i)
                if (m.tapes[i].role == TapeRole::Query) q = static_cast<int>(i);
            if (q < 0) throw std::runtime_error("chain: oracle machine lacks a query tape");
            m.tapes[static_cast<std::size_t>(q)].kind = TapeKind::Rubber;
            std::set<std::string> used = m.states;
            std::vector<OracleSite> fresh_sites;
            for (auto& site : m.oracle_sites) {
                if (site.reversed)
                    throw std::runtime_error("chain: simulate reverse oracle sites first");
                std::string pq = fresh_name(used, site.q_query + "_u");
                std::string py = fresh_name(used, site.q_yes + "_u");
                std::string pn = fresh_name(used, site.q_no + "_u");
                for (const std::string& s : {pq, py, pn}) m.states.insert(s);
                MoveVec ins(m.tapes.size(), Move::stay());
                ins[static_cast<std::size_t>(q)] = Move::ins(tag);
                MoveVec del(m.tapes.size(), Move::stay());
                del[static_cast<std::size_t>(q)] = Move::del(tag);
                m.transitions.push_back(Transition::shift(site.q_query, pq, ins));
                m.transitions.push_back(Transition::shift(py, site.q_yes, del));
                m.transitions.push_back(Transition::shift(pn, site.q_no, del));
                fresh_sites.push_back({pq, py, pn, false});
            }
            m.oracle_sites = fresh_sites;
        };
        tag_side(m1, '0');
        tag_side(m2, '1');
        oracle_name = merged;
    } else {
        oracle_name = m1.oracle_name ? m1.oracle_name : m2.oracle_name;
    }

    // m2's start must be entry-only so the weld state stays deterministic
    for (const auto& t : m2.transitions)
        if (t.target == m2.start)
            throw std::runtime_error("chain: second machine re-enters its start state");

    // tape layout: m1's tapes (output demoted to work), then m2's tapes
    // minus its input (identified with m1's output)
    std::vector<TapeSpec> layout = m1.tapes;
    int out1 = m1.output_tape();
    int in2 = m2.input_tape();
    layout[static_cast<std::size_t>(out1)].role = TapeRole::Work;
    layout[static_cast<std::size_t>(out1)].kind =
        (m1.tapes[static_cast<std::size_t>(out1)].kind == TapeKind::Rubber ||
         m2.tapes[static_cast<std::size_t>(in2)].kind == TapeKind::Rubber)
            ? TapeKind::Rubber
            : TapeKind::Normal;
    int q1 = -1;
    for (std::size_t i = 0; i < m1.tapes.size(); ++i)
        if (m1.tapes[i].role == TapeRole::Query) q1 = static_cast<int>(i);
    std::vector<std::size_t> where2(m2.tapes.size());
    for (std::size_t i = 0; i < m2.tapes.size(); ++i) {
        if (static_cast<int>(i) == in2) {
            where2[i] = static_cast<std::size_t>(out1);
        } else if (m2.tapes[i].role == TapeRole::Query && q1 >= 0) {
            // both sides query through one shared tape
            where2[i] = static_cast<std::size_t>(q1);
            if (m2.tapes[i].kind == TapeKind::Rubber)
                layout[static_cast<std::size_t>(q1)].kind = TapeKind::Rubber;
        } else {
            where2[i] = layout.size();
            layout.push_back(m2.tapes[i]);
        }
    }

    std::map<std::string, std::string> ren1, ren2;
    for (const auto& s : m1.states) ren1[s] = "f." + s;
    for (const auto& s : m2.states) ren2[s] = (s == m2.start) ? "f." + m1.accept : "g." + s;
    Machine a = rename_states(widen(m1, std::vector<TapeSpec>(layout.begin() + m1.tapes.size(), layout.end())), ren1);
    Machine b = rename_states(remap_tapes(m2, where2, layout.size(), layout), ren2);

    Machine out;
    out.name = m2in.name + "_after_" + m1in.name;
    out.tapes = layout;
    out.states = a.states;
    for (const auto& s : b.states) out.states.insert(s);
    out.start = a.start;
    out.accept = b.accept;
    out.transitions = a.transitions;
    for (auto& t : b.transitions) out.transitions.push_back(t);
    for (auto& s : a.oracle_sites) out.oracle_sites.push_back(s);
    for (auto& s : b.oracle_sites) out.oracle_sites.push_back(s);
    out.oracle_name = oracle_name;
    if (m1.time_bound && m2.time_bound && m1.balance_bound)
        out.time_bound = poly_sum(*m1.time_bound, poly_compose(*m2.time_bound, *m1.balance_bound));
    if (m1.balance_bound && m2.balance_bound) {
        out.balance_bound = poly_max(poly_compose(*m2.balance_bound, *m1.balance_bound),
                                     poly_compose(*m1.balance_bound, *m2.balance_bound));
    }
    out.check_well_formed();
    return out;
}

namespace {

// ---- history-logged simulation ----------------------------------------
//
// Every rewrite step of the source machine is re-played as
//     (s, [r, _]) -> (h_e, [w, _]) -> (sg_q, [w, marker]) -SHIFT H:R-> q
// so each merge point sg_q is entered by rewrites with pairwise distinct
// (write, marker) vectors; shift steps land in private copies that replay
// the target's dispatch. The result passes the injectivity scan no matter
// what the source machine looked like.

constexpr const char* kMarkerPool =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijkmnopqruvwxy23456789";

struct SigmaBuild {
    Machine b;
    std::size_t h_tape = 0;
};

SigmaBuild sigma_transform(const Machine& mplus) {
    Machine src = mplus;
    SigmaBuild out;
    std::size_t H = src.tapes.size();
    Machine m = widen(src, {TapeSpec{TapeRole::History, TapeKind::Normal}});

    Machine& b = out.b;
    out.h_tape = H;
    b.name = src.name + "_logged";
    b.tapes = m.tapes;
    b.start = m.start;
    b.accept = m.accept;
    b.oracle_sites = m.oracle_sites;
    b.oracle_name = m.oracle_name;
    std::set<std::string> used = m.states;
    b.states = m.states;

    // markers are distinct among all rewrites into the same merge point, so
    // the mirror stays deterministic even with its frozen columns
    std::map<std::string, std::size_t> group;
    auto marker_for = [&](const std::string& tgt, const SymVec&) -> Symbol {
        std::size_t i = group[tgt]++;
        if (i >= std::string(kMarkerPool).size())
            throw std::runtime_error("sigma_transform: history marker pool exhausted");
        return kMarkerPool[i];
    };

    std::set<std::string> sigma_done;
    auto sigma_of = [&](const std::string& q) {
        std::string sg = "sg_" + q;
        if (!sigma_done.count(sg)) {
            sigma_done.insert(sg);
            used.insert(sg);
            b.states.insert(sg);
            MoveVec mv(b.tapes.size(), Move::stay());
            mv[H] = Move::right();
            b.transitions.push_back(Transition::shift(sg, q, mv));
        }
        return sg;
    };

    // transitions of the source, indexed per state
    std::map<std::string, std::vector<const Transition*>> rw_of;
    std::map<std::string, const Transition*> shift_of;
    for (const auto& t : m.transitions) {
        if (t.kind == Transition::RW) rw_of[t.source].push_back(&t);
        else shift_of[t.source] = &t;
    }
    std::set<std::string> query_states;
    for (const auto& site : m.oracle_sites)
        query_states.insert(site.reversed ? site.q_yes : site.q_query);

    int fresh = 0;
    auto log_rw = [&](const std::string& from, const Transition& e) {
        // from: a state standing in for e.source, with the same head view
        std::string h = fresh_name(used, "h" + std::to_string(fresh++));
        b.states.insert(h);
        SymVec r = e.read, w = e.write;  // already H-widened with blanks
        b.transitions.push_back(Transition::rw(from, r, h, w));
        SymVec wm = w;
        wm[H] = marker_for("sg_" + e.target, w);
        b.transitions.push_back(Transition::rw(h, w, sigma_of(e.target), wm));
    };

    // dispatch replication for shift landings; recursion depth bounds
    // shift chains
    std::function<void(const std::string&, const std::string&, int)> replicate =
        [&](const std::string& landing, const std::string& like, int depth) {
            if (depth > 64)
                throw std::runtime_error("sigma_transform: shift chain too deep or cyclic");
            if (like == m.accept)
                throw std::runtime_error("sigma_transform: accept must be rw-entered");
            if (query_states.count(like))
                throw std::runtime_error("sigma_transform: oracle firing state shift-entered");
            auto it = shift_of.find(like);
            if (it != shift_of.end()) {
                std::string next = fresh_name(used, "lam" + std::to_string(fresh++));
                b.states.insert(next);
                b.transitions.push_back(Transition::shift(landing, next, it->second->moves));
                replicate(next, it->second->target, depth + 1);
                return;
            }
            for (const Transition* e : rw_of[like]) log_rw(landing, *e);
        };

    for (const auto& t : m.transitions) {
        if (t.kind == Transition::RW) {
            log_rw(t.source, t);
        } else {
            std::string lam = fresh_name(used, "lam" + std::to_string(fresh++));
            b.states.insert(lam);
            b.transitions.push_back(Transition::shift(t.source, lam, t.moves));
            replicate(lam, t.target, 0);
        }
    }
    // drop the original rw edges' duplicates: log_rw emitted fresh edges for
    // every source edge; the loop above never copied original transitions
    return out;
}

struct MPlus {
    Machine m;            // source machine followed by an output->G copy
    std::size_t g_tape = 0;
};

// After the source accepts, its output is moved (right to left, erasing it)
// onto a fresh rubber tape G, leaving G's head on the first symbol. Assumes
// the source is tidy: at accept all non-output tapes are empty and the
// output head sits at or left of its contiguous content.
MPlus make_mplus(const Machine& src) {
    MPlus res;
    std::size_t G = src.tapes.size();
    Machine m = widen(src, {TapeSpec{TapeRole::Work, TapeKind::Rubber}});
    res.g_tape = G;
    std::size_t OM = static_cast<std::size_t>(src.output_tape());

    std::set<std::string> used = m.states;
    std::string acc = m.accept;
    std::string csm = fresh_name(used, "cpm");
    std::string cb = fresh_name(used, "cpb");
    std::string accp = fresh_name(used, "accP");
    for (const auto& s : {csm, cb, accp}) m.states.insert(s);

    auto vec = [&](std::initializer_list<std::pair<std::size_t, Symbol>> at) {
        SymVec v(m.tapes.size(), kBlank);
        for (auto& [i, s] : at) v[i] = s;
        return v;
    };
    auto mv = [&](std::initializer_list<std::pair<std::size_t, Move>> at) {
        MoveVec v(m.tapes.size(), Move::stay());
        for (auto& [i, mvv] : at) v[i] = mvv;
        return v;
    };

    // scan the output rightwards to its fringe
    m.transitions.push_back(Transition::rw(acc, vec({{OM, '0'}}), csm, vec({{OM, '0'}})));
    m.transitions.push_back(Transition::rw(acc, vec({{OM, '1'}}), csm, vec({{OM, '1'}})));
    m.transitions.push_back(Transition::shift(csm, acc, mv({{OM, Move::right()}})));
    m.transitions.push_back(Transition::rw(acc, vec({}), cb, vec({})));
    // consume right-to-left into G; the state carries the bit last pushed
    // onto G so every read of the G head is a constant of the state (the
    // mirror freezes the G column, so data must not hide there)
    std::map<Symbol, std::string> cbs, ccs;
    for (Symbol c : {'0', '1'}) {
        cbs[c] = fresh_name(used, std::string("cpb") + c);
        m.states.insert(cbs[c]);
    }
    for (Symbol c : {kBlank, '0', '1'}) {
        ccs[c] = fresh_name(used, std::string("cpc") + (c == kBlank ? '_' : c));
        m.states.insert(ccs[c]);
    }
    m.transitions.push_back(Transition::shift(cb, ccs[kBlank], mv({{OM, Move::left()}})));
    for (Symbol c : {kBlank, '0', '1'}) {
        if (c != kBlank)
            m.transitions.push_back(
                Transition::shift(cbs[c], ccs[c], mv({{OM, Move::left()}})));
        for (Symbol b : {'0', '1'}) {
            std::string ce = fresh_name(used, std::string("cpe") + b +
                                                  (c == kBlank ? '_' : c));
            m.states.insert(ce);
            m.transitions.push_back(Transition::rw(ccs[c], vec({{OM, b}, {G, c}}), ce,
                                                   vec({{OM, b}, {G, c}})));
            m.transitions.push_back(
                Transition::shift(ce, cbs[b], mv({{OM, Move::del(b)}, {G, Move::ins(b)}})));
        }
        m.transitions.push_back(Transition::rw(ccs[c], vec({{G, c}}), accp, vec({{G, c}})));
    }

    m.accept = accp;
    m.name = src.name + "_plus";
    res.m = m;
    return res;
}

struct WBuild {
    Machine w;
    std::size_t g_tape = 0;
    std::size_t h_tape = 0;
    std::string end_state;  // mirror of the source start; W's accept
};

// x on the input tape  |->  x on the input tape, f(x) on G, all else empty.
// Composite of the logged simulation and its G-frozen mirror.
WBuild build_w(const Machine& src) {
    MPlus mp = make_mplus(src);
    SigmaBuild sb = sigma_transform(mp.m);
    Machine& b = sb.b;
    std::size_t G = mp.g_tape, H = sb.h_tape;

    WBuild res;
    res.g_tape = G;
    res.h_tape = H;
    Machine w = b;
    w.name = src.name + "_w";

    auto mirror = [&](const std::string& s) { return s + "@"; };
    for (const auto& s : b.states) w.states.insert(mirror(s));

    // park G's head one cell left of its content so the mirror can treat the
    // G column as frozen blank
    MoveVec bridge(w.tapes.size(), Move::stay());
    bridge[G] = Move::left();
    w.transitions.push_back(Transition::shift(b.accept, mirror(b.accept), bridge));

    // G-frozen mirror of every logged edge, exact duplicates merged
    std::set<std::string> seen_edges;
    for (const auto& t : b.transitions) {
        Transition r;
        if (t.kind == Transition::RW) {
            SymVec rr = t.write, ww = t.read;
            rr[G] = kBlank;
            ww[G] = kBlank;
            r = Transition::rw(mirror(t.target), rr, mirror(t.source), ww);
        } else {
            MoveVec inv;
            for (const auto& mv : t.moves) inv.push_back(invert_move(mv, nullptr));
            inv[G] = Move::stay();
            r = Transition::shift(mirror(t.target), mirror(t.source), inv);
        }
        std::ostringstream key;
        key << r.kind << '|' << r.source << '|' << r.target << '|';
        for (Symbol s : r.read) key << s;
        key << '|';
        for (Symbol s : r.write) key << s;
        key << '|';
        for (const auto& mv : r.moves) key << mv.kind << mv.sym << mv.checked;
        if (seen_edges.insert(key.str()).second) w.transitions.push_back(r);
    }
    for (const auto& site : b.oracle_sites) {
        OracleSite rs;
        rs.q_query = mirror(site.q_query);
        rs.q_yes = mirror(site.q_yes);
        rs.q_no = mirror(site.q_no);
        rs.reversed = !site.reversed;
        w.oracle_sites.push_back(rs);
    }
    w.accept = mirror(b.start);
    res.end_state = w.accept;
    res.w = w;
    return res;
}

// emit the standard consume-right-to-left loop over tape T, inserting a
// transform of each bit onto OUT; used by the pair assembler below. Entry
// is by an rw edge into sEnter written by the caller.
struct GadgetCtx {
    Machine* m;
    std::set<std::string>* used;
    std::size_t width;
};

SymVec gvec(const GadgetCtx& g, std::initializer_list<std::pair<std::size_t, Symbol>> at) {
    SymVec v(g.width, kBlank);
    for (auto& [i, s] : at) v[i] = s;
    return v;
}
MoveVec gmv(const GadgetCtx& g, std::initializer_list<std::pair<std::size_t, Move>> at) {
    MoveVec v(g.width, Move::stay());
    for (auto& [i, m] : at) v[i] = m;
    return v;
}
std::string gstate(GadgetCtx& g, const std::string& base) {
    std::string s = fresh_name(*g.used, base);
    g.m->states.insert(s);
    return s;
}

} // namespace

Machine bennett_garbage(const Machine& src) {
    if (!validate_deterministic(src).ok())
        throw std::runtime_error("NotDeterministic");
    WBuild wb = build_w(src);
    Machine m = wb.w;
    std::size_t G = wb.g_tape, IN = static_cast<std::size_t>(src.input_tape());

    // fresh pair-output tape; previous roles demoted
    std::size_t OUT = m.tapes.size();
    m = widen(m, {TapeSpec{TapeRole::Output, TapeKind::Rubber}});
    for (std::size_t i = 0; i < m.tapes.size() - 1; ++i)
        if (m.tapes[i].role == TapeRole::Output) m.tapes[i].role = TapeRole::Work;
    m.tapes[wb.h_tape].role = TapeRole::History;
    m.tapes[IN].role = TapeRole::Input;

    std::set<std::string> used = m.states;
    GadgetCtx g{&m, &used, m.tapes.size()};
    auto rw = [&](const std::string& s, SymVec r, const std::string& t, SymVec w) {
        m.transitions.push_back(Transition::rw(s, std::move(r), t, std::move(w)));
    };
    auto sh = [&](const std::string& s, const std::string& t, MoveVec v) {
        m.transitions.push_back(Transition::shift(s, t, std::move(v)));
    };

    // G's head steps back onto f(x); the input head parks left of x so the
    // pair phases see a blank input column until x itself is consumed
    std::string p4 = gstate(g, "p4");
    MoveVec stepr = gmv(g, {{G, Move::right()}, {IN, Move::left()}});
    sh(m.accept, p4, stepr);

    // ---- phase A: move f(x) from G onto OUT (right-to-left consume) ----
    std::string sIA = gstate(g, "p4sIA");
    for (Symbol b : {'0', '1', kBlank}) {
        std::string hop = gstate(g, std::string("p4a") + (b == kBlank ? '_' : b));
        rw(p4, gvec(g, {{G, b}}), hop, gvec(g, {{G, b}}));
        rw(hop, gvec(g, {{G, b}}), sIA, gvec(g, {{G, b}}));
    }
    std::string entA = gstate(g, "p4entA");
    sh(sIA, entA, gmv(g, {{G, Move::ins('s')}}));
    std::string scanA = gstate(g, "p4scanA");
    std::string scA = gstate(g, "p4scA");
    {
        std::string hop = gstate(g, "p4entAh");
        rw(entA, gvec(g, {{G, 's'}}), hop, gvec(g, {{G, 's'}}));
        rw(hop, gvec(g, {{G, 's'}}), scanA, gvec(g, {{G, 's'}}));
    }
    sh(scanA, scA, gmv(g, {{G, Move::right()}}));
    for (Symbol b : {'0', '1'}) {
        std::string hop = gstate(g, std::string("p4scAh") + b);
        rw(scA, gvec(g, {{G, b}}), hop, gvec(g, {{G, b}}));
        rw(hop, gvec(g, {{G, b}}), scanA, gvec(g, {{G, b}}));
    }
    std::string sLA = gstate(g, "p4sLA");
    {
        std::string hop = gstate(g, "p4jA");
        rw(scA, gvec(g, {}), hop, gvec(g, {}));
        rw(hop, gvec(g, {}), sLA, gvec(g, {}));
    }
    std::string cnA = gstate(g, "p4cnA");
    sh(sLA, cnA, gmv(g, {{G, Move::left()}}));
    std::string sDA[2];
    sDA[0] = gstate(g, "p4sDA0");
    sDA[1] = gstate(g, "p4sDA1");
    for (int bi = 0; bi < 2; ++bi) {
        Symbol b = bi ? '1' : '0';
        for (Symbol c : {'0', '1', kBlank}) {
            std::string hop = gstate(g, "p4cnAh");
            rw(cnA, gvec(g, {{G, b}, {OUT, c}}), hop, gvec(g, {{G, b}, {OUT, c}}));
            rw(hop, gvec(g, {{G, b}, {OUT, c}}), sDA[bi], gvec(g, {{G, b}, {OUT, c}}));
        }
        std::string lam = gstate(g, std::string("p4lamA") + b);
        sh(sDA[bi], lam, gmv(g, {{G, Move::del(b)}, {OUT, Move::ins(b)}}));
        std::string hop = gstate(g, std::string("p4lamAh") + b);
        rw(lam, gvec(g, {{OUT, b}}), hop, gvec(g, {{OUT, b}}));
        rw(hop, gvec(g, {{OUT, b}}), sLA, gvec(g, {{OUT, b}}));
    }
    std::string sDSA = gstate(g, "p4sDSA");
    for (Symbol c : {'0', '1', kBlank}) {
        std::string hop = gstate(g, "p4fA");
        rw(cnA, gvec(g, {{G, 's'}, {OUT, c}}), hop, gvec(g, {{G, 's'}, {OUT, c}}));
        rw(hop, gvec(g, {{G, 's'}, {OUT, c}}), sDSA, gvec(g, {{G, 's'}, {OUT, c}}));
    }
    std::string finA = gstate(g, "p4finA");
    sh(sDSA, finA, gmv(g, {{G, Move::del('s')}}));

    // ---- phase B: the 11 separator ----
    std::string sB1 = gstate(g, "p4sB1");
    for (Symbol c : {'0', '1', kBlank}) {
        std::string hop = gstate(g, "p4fB");
        rw(finA, gvec(g, {{OUT, c}}), hop, gvec(g, {{OUT, c}}));
        rw(hop, gvec(g, {{OUT, c}}), sB1, gvec(g, {{OUT, c}}));
    }
    std::string b1l = gstate(g, "p4b1l");
    sh(sB1, b1l, gmv(g, {{OUT, Move::ins('1')}}));
    std::string sB2 = gstate(g, "p4sB2");
    {
        std::string hop = gstate(g, "p4b1h");
        rw(b1l, gvec(g, {{OUT, '1'}}), hop, gvec(g, {{OUT, '1'}}));
        rw(hop, gvec(g, {{OUT, '1'}}), sB2, gvec(g, {{OUT, '1'}}));
    }
    std::string b2l = gstate(g, "p4b2l");
    sh(sB2, b2l, gmv(g, {{OUT, Move::ins('1')}}));

    // ---- phase C: code(x) from the input tape ----
    std::string sINR = gstate(g, "p4sINR");
    {
        std::string hop = gstate(g, "p4b2lh");
        rw(b2l, gvec(g, {{OUT, '1'}}), hop, gvec(g, {{OUT, '1'}}));
        rw(hop, gvec(g, {{OUT, '1'}}), sINR, gvec(g, {{OUT, '1'}}));
    }
    std::string b2r = gstate(g, "p4b2r");
    sh(sINR, b2r, gmv(g, {{IN, Move::right()}}));
    std::string sIC = gstate(g, "p4sIC");
    for (Symbol b : {'0', '1', kBlank}) {
        std::string hop = gstate(g, "p4b2h");
        rw(b2r, gvec(g, {{IN, b}, {OUT, '1'}}), hop, gvec(g, {{IN, b}, {OUT, '1'}}));
        rw(hop, gvec(g, {{IN, b}, {OUT, '1'}}), sIC, gvec(g, {{IN, b}, {OUT, '1'}}));
    }
    std::string entC = gstate(g, "p4entC");
    sh(sIC, entC, gmv(g, {{IN, Move::ins('s')}}));
    std::string scanC = gstate(g, "p4scanC");
    std::string scC = gstate(g, "p4scC");
    {
        std::string hop = gstate(g, "p4entCh");
        rw(entC, gvec(g, {{IN, 's'}, {OUT, '1'}}), hop, gvec(g, {{IN, 's'}, {OUT, '1'}}));
        rw(hop, gvec(g, {{IN, 's'}, {OUT, '1'}}), scanC, gvec(g, {{IN, 's'}, {OUT, '1'}}));
    }
    sh(scanC, scC, gmv(g, {{IN, Move::right()}}));
    for (Symbol b : {'0', '1'}) {
        std::string hop = gstate(g, std::string("p4scCh") + b);
        rw(scC, gvec(g, {{IN, b}, {OUT, '1'}}), hop, gvec(g, {{IN, b}, {OUT, '1'}}));
        rw(hop, gvec(g, {{IN, b}, {OUT, '1'}}), scanC, gvec(g, {{IN, b}, {OUT, '1'}}));
    }
    std::string sLC = gstate(g, "p4sLC");
    {
        std::string hop = gstate(g, "p4jC");
        rw(scC, gvec(g, {{OUT, '1'}}), hop, gvec(g, {{OUT, '1'}}));
        rw(hop, gvec(g, {{OUT, '1'}}), sLC, gvec(g, {{OUT, '1'}}));
    }
    std::string cnC = gstate(g, "p4cnC");
    sh(sLC, cnC, gmv(g, {{IN, Move::left()}}));
    std::string sDC[2];
    sDC[0] = gstate(g, "p4sDC0");
    sDC[1] = gstate(g, "p4sDC1");
    std::string sZ = gstate(g, "p4sZ");
    for (int bi = 0; bi < 2; ++bi) {
        Symbol b = bi ? '1' : '0';
        for (Symbol c : {'0', '1'}) {
            std::string hop = gstate(g, "p4cnCh");
            rw(cnC, gvec(g, {{IN, b}, {OUT, c}}), hop, gvec(g, {{IN, b}, {OUT, c}}));
            rw(hop, gvec(g, {{IN, b}, {OUT, c}}), sDC[bi], gvec(g, {{IN, b}, {OUT, c}}));
        }
        std::string lam = gstate(g, std::string("p4lamC") + b);
        sh(sDC[bi], lam, gmv(g, {{IN, Move::del(b)}, {OUT, Move::ins(b)}}));
        std::string hop = gstate(g, std::string("p4lamCh") + b);
        rw(lam, gvec(g, {{OUT, b}}), hop, gvec(g, {{OUT, b}}));
        rw(hop, gvec(g, {{OUT, b}}), sZ, gvec(g, {{OUT, b}}));
    }
    std::string lamZ = gstate(g, "p4lamZ");
    sh(sZ, lamZ, gmv(g, {{OUT, Move::ins('0')}}));
    {
        std::string hop = gstate(g, "p4lamZh");
        rw(lamZ, gvec(g, {{OUT, '0'}}), hop, gvec(g, {{OUT, '0'}}));
        rw(hop, gvec(g, {{OUT, '0'}}), sLC, gvec(g, {{OUT, '0'}}));
    }
    std::string sDSC = gstate(g, "p4sDSC");
    for (Symbol c : {'0', '1'}) {
        std::string hop = gstate(g, "p4fC");
        rw(cnC, gvec(g, {{IN, 's'}, {OUT, c}}), hop, gvec(g, {{IN, 's'}, {OUT, c}}));
        rw(hop, gvec(g, {{IN, 's'}, {OUT, c}}), sDSC, gvec(g, {{IN, 's'}, {OUT, c}}));
    }
    std::string finC = gstate(g, "p4finC");
    sh(sDSC, finC, gmv(g, {{IN, Move::del('s')}}));
    std::string bacc = gstate(g, "bgacc");
    for (Symbol c : {'0', '1'}) rw(finC, gvec(g, {{OUT, c}}), bacc, gvec(g, {{OUT, c}}));

    m.accept = bacc;
    m.name = "bennett(" + src.name + ")";
    if (src.time_bound) {
        PolyBound t = *src.time_bound;
        PolyBound lin(60, 1);
        PolyBound scaled(t.a <= UINT64_MAX / 24 ? 24 * t.a : UINT64_MAX, t.k);
        m.time_bound = poly_sum(scaled, src.balance_bound
                                            ? poly_sum(lin, poly_compose(lin, *src.balance_bound))
                                            : lin);
    } else {
        m.time_bound.reset();
    }
    if (src.balance_bound) {
        PolyBound pb = *src.balance_bound;
        PolyBound grow(3 * pb.a + 4, pb.k >= 1 ? pb.k : 1);
        m.balance_bound = grow;
    } else {
        m.balance_bound.reset();
    }
    m.check_well_formed();
    return m;
}

Machine bennett_clean(const Machine& m_f, const Machine& m_finv, const OracleFn* oracle,
                      std::size_t check_len) {
    if (!validate_deterministic(m_f).ok() || !validate_deterministic(m_finv).ok())
        throw std::runtime_error("NotDeterministic");
    // desk-scale inverse check both ways
    for (const auto& x : strings_up_to(check_len)) {
        RunOutcome o = run(m_f, x, oracle);
        if (o.accepted()) {
            RunOutcome back = run(m_finv, o.output, oracle);
            if (!back.accepted() || back.output != x) throw std::runtime_error("NotInverses");
        }
        RunOutcome o2 = run(m_finv, x, oracle);
        if (o2.accepted()) {
            RunOutcome fwd = run(m_f, o2.output, oracle);
            if (!fwd.accepted() || fwd.output != x) throw std::runtime_error("NotInverses");
        }
    }

    WBuild w1 = build_w(m_f);
    WBuild w2 = build_w(m_finv);

    // tape identification: w2's input is w1's G, w2's G is w1's input
    std::size_t in1 = static_cast<std::size_t>(m_f.input_tape());
    std::size_t in2 = static_cast<std::size_t>(m_finv.input_tape());
    std::vector<TapeSpec> layout = w1.w.tapes;
    int q1 = -1;
    for (std::size_t i = 0; i < w1.w.tapes.size(); ++i)
        if (w1.w.tapes[i].role == TapeRole::Query) q1 = static_cast<int>(i);
    std::vector<std::size_t> where2(w2.w.tapes.size());
    for (std::size_t i = 0; i < w2.w.tapes.size(); ++i) {
        if (i == in2) where2[i] = w1.g_tape;
        else if (i == w2.g_tape) where2[i] = in1;
        else if (w2.w.tapes[i].role == TapeRole::Query && q1 >= 0) {
            where2[i] = static_cast<std::size_t>(q1);
            if (w2.w.tapes[i].kind == TapeKind::Rubber)
                layout[static_cast<std::size_t>(q1)].kind = TapeKind::Rubber;
        } else {
            where2[i] = layout.size();
            layout.push_back(w2.w.tapes[i]);
        }
    }
    Machine a = widen(w1.w, std::vector<TapeSpec>(layout.begin() + w1.w.tapes.size(), layout.end()));
    Machine b0 = remap_tapes(w2.w, where2, layout.size(), layout);
    std::map<std::string, std::string> ren;
    for (const auto& s : b0.states) ren[s] = "c_" + s;
    Machine b = rename_states(b0, ren);
    Machine r2 = reverse_core(b, "");

    Machine out;
    out.name = "bennett(" + m_f.name + "," + m_finv.name + ")";
    out.tapes = layout;
    for (auto& spec : out.tapes) {
        if (spec.role == TapeRole::Output || spec.role == TapeRole::Input)
            spec.role = TapeRole::Work;
        if (spec.role == TapeRole::History) spec.role = TapeRole::Work;
    }
    out.tapes[in1].role = TapeRole::Input;
    out.tapes[w1.g_tape].role = TapeRole::Output;
    out.tapes[w1.h_tape].role = TapeRole::History;
    out.states = a.states;
    for (const auto& s : r2.states) out.states.insert(s);
    out.transitions = a.transitions;
    for (auto& t : r2.transitions) out.transitions.push_back(t);
    out.oracle_sites = a.oracle_sites;
    for (auto& s : r2.oracle_sites) out.oracle_sites.push_back(s);
    out.oracle_name = m_f.oracle_name ? m_f.oracle_name : m_finv.oracle_name;
    out.start = a.start;
    out.accept = r2.accept;

    // bridge: park the old input head left of x, bring G onto f(x)'s first
    // symbol; that is exactly the mirrored end configuration of w2
    MoveVec bridge(out.tapes.size(), Move::stay());
    bridge[in1] = Move::left();
    bridge[w1.g_tape] = Move::right();
    out.transitions.push_back(Transition::shift(a.accept, r2.start, bridge));

    if (m_f.time_bound && m_finv.time_bound && m_f.balance_bound) {
        PolyBound t1 = *m_f.time_bound;
        PolyBound t2comp = poly_compose(*m_finv.time_bound, *m_f.balance_bound);
        PolyBound both = poly_sum(t1, t2comp);
        PolyBound scaled(both.a <= UINT64_MAX / 30 ? 30 * both.a : UINT64_MAX, both.k);
        out.time_bound = poly_sum(scaled, PolyBound(60, 1));
    }
    out.balance_bound = m_f.balance_bound;
    out.check_well_formed();
    return out;
}

Machine simulate_reverse_oracle(const Machine& m) {
    bool any = false;
    for (const auto& site : m.oracle_sites) any = any || site.reversed;
    if (!any) return m;
    Machine out = m;
    std::size_t SCR = out.tapes.size();
    out = widen(out, {TapeSpec{TapeRole::Work, TapeKind::Rubber}});
    std::set<std::string> used = out.states;
    std::vector<OracleSite> sites;
    for (const auto& site : out.oracle_sites) {
        if (!site.reversed) {
            sites.push_back(site);
            continue;
        }
        std::string pq = fresh_name(used, site.q_query + "_s");
        std::string py = fresh_name(used, site.q_yes + "_s");
        std::string pn = fresh_name(used, site.q_no + "_s");
        for (const std::string& s : {pq, py, pn}) out.states.insert(s);
        auto mv1 = [&](Move mvv) {
            MoveVec v(out.tapes.size(), Move::stay());
            v[SCR] = mvv;
            return v;
        };
        out.transitions.push_back(Transition::shift(site.q_yes, pq, mv1(Move::ins('y'))));
        out.transitions.push_back(Transition::shift(site.q_no, pq, mv1(Move::ins('n'))));
        out.transitions.push_back(Transition::shift(py, site.q_query, mv1(Move::del('y'))));
        out.transitions.push_back(Transition::shift(pn, site.q_query, mv1(Move::del('n'))));
        sites.push_back({pq, py, pn, false});
    }
    out.oracle_sites = sites;
    out.name = m.name + "_fwdsim";
    out.check_well_formed();
    return out;
}

} // namespace rtm
