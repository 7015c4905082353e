#include "rtm/reductions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rtm/corpus.hpp"
#include "rtm/machine_text.hpp"

namespace rtm {

ReductionReport check_reduction(const ReductionWitness& w, const OracleLanguage& L1,
                                const OracleLanguage& L2) {
    ReductionReport rep;
    std::map<Bits, Bits> seen;
    for (const auto& x : strings_up_to(w.window_len)) {
        bool in1 = L1.membership(x);
        auto fx = w.f(x);
        bool mapped_in2 = fx.has_value() && L2.membership(*fx);
        if (in1 != mapped_in2)
            rep.counterexamples.push_back(x.empty() ? "-" : x);
        if (in1 && !fx)
            rep.counterexamples.push_back((x.empty() ? "-" : x) + " (undefined image)");
        if (fx && w.kind != ReductionKind::ManyOne) {
            auto [it, fresh] = seen.emplace(*fx, x);
            if (!fresh && it->second != x)
                rep.counterexamples.push_back("injectivity: " + (x.empty() ? "-" : x) + " vs " +
                                              (it->second.empty() ? "-" : it->second));
        }
    }
    return rep;
}

Bits hartmanis_map(const Program& v, const PolyBound& p_v, const Bits& x) {
    std::uint64_t pad = static_cast<std::uint64_t>(v.bits.size()) * p_v.eval(x.size());
    Bits s = pair_encode(v.bits, x);
    s += "11";
    s.append(pad, '0');
    return s;
}

namespace {

// verifier machines: plain deterministic acceptors over the pair format;
// output stays empty, acceptance is the verdict

const std::vector<TapeSpec> kVerifierTapes = {{TapeRole::Input, TapeKind::Normal},
                                              {TapeRole::Output, TapeKind::Normal}};

struct VBuild {
    Machine m;
    VBuild(std::string name, std::vector<TapeSpec> tapes) {
        m.name = std::move(name);
        m.tapes = std::move(tapes);
    }
    void rw(const std::string& src, const char* r, const std::string& dst, const char* w) {
        m.states.insert(src);
        m.states.insert(dst);
        m.transitions.push_back(Transition::rw(src, SymVec(r, r + m.tapes.size()), dst,
                                               SymVec(w, w + m.tapes.size())));
    }
    void sh(const std::string& src, const std::string& dst, MoveVec mv) {
        m.states.insert(src);
        m.states.insert(dst);
        m.transitions.push_back(Transition::shift(src, dst, std::move(mv)));
    }
    Machine done(const std::string& start, const std::string& accept, PolyBound time,
                 PolyBound balance) {
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

} // namespace

Machine even_weight_verifier() {
    VBuild b("vweven", kVerifierTapes);
    // track the weight parity of the data bits; accept only at "11" followed
    // by nothing (empty certificate) with even parity
    for (char par : {'E', 'O'}) {
        std::string p = std::string("p") + par;
        std::string d = std::string("d") + par;
        std::string e = std::string("e") + par;
        b.rw(p, "0_", d, "0_");
        b.sh(d, e, {Move::right(), Move::stay()});
        std::string flip = par == 'E' ? "pO" : "pE";
        std::string keep = par == 'E' ? "pE" : "pO";
        b.rw(e, "0_", std::string("g") + par, "0_");
        b.sh(std::string("g") + par, keep, {Move::right(), Move::stay()});
        b.rw(e, "1_", std::string("h") + par, "1_");
        b.sh(std::string("h") + par, flip, {Move::right(), Move::stay()});
        b.rw(p, "1_", std::string("s") + par, "1_");
        b.sh(std::string("s") + par, std::string("t") + par, {Move::right(), Move::stay()});
        b.rw(std::string("t") + par, "1_", std::string("u") + par, "1_");
        b.sh(std::string("u") + par, std::string("v") + par, {Move::right(), Move::stay()});
    }
    b.rw("vE", "__", "qa", "__");  // even parity, empty certificate: accept
    return b.done("pE", "qa", PolyBound(4, 1), PolyBound(4096, 0));
}

Machine even_length_verifier() {
    VBuild b("vlen", kVerifierTapes);
    for (char par : {'E', 'O'}) {
        std::string p = std::string("p") + par;
        std::string flip = par == 'E' ? "pO" : "pE";
        b.rw(p, "0_", std::string("d") + par, "0_");
        b.sh(std::string("d") + par, std::string("e") + par, {Move::right(), Move::stay()});
        // any data bit flips the length parity
        b.rw(std::string("e") + par, "0_", std::string("g") + par, "0_");
        b.rw(std::string("e") + par, "1_", std::string("g") + par, "1_");
        b.sh(std::string("g") + par, flip, {Move::right(), Move::stay()});
        b.rw(p, "1_", std::string("s") + par, "1_");
        b.sh(std::string("s") + par, std::string("t") + par, {Move::right(), Move::stay()});
        b.rw(std::string("t") + par, "1_", std::string("u") + par, "1_");
        b.sh(std::string("u") + par, std::string("v") + par, {Move::right(), Move::stay()});
    }
    b.rw("vE", "__", "qa", "__");
    return b.done("pE", "qa", PolyBound(4, 1), PolyBound(4096, 0));
}

Machine copy_verifier() {
    // accepts code(x) 11 cert iff cert == x; the data bits are copied to a
    // work tape during the parse and matched against the certificate
    std::vector<TapeSpec> tapes = {{TapeRole::Input, TapeKind::Normal},
                                   {TapeRole::Output, TapeKind::Normal},
                                   {TapeRole::Work, TapeKind::Normal}};
    VBuild b("vcopy", tapes);
    b.rw("p", "0__", "d", "0__");
    b.sh("d", "e", {Move::right(), Move::stay(), Move::stay()});
    b.rw("e", "0__", "w0", "0_0");
    b.rw("e", "1__", "w1", "1_1");
    b.sh("w0", "p", {Move::right(), Move::stay(), Move::right()});
    b.sh("w1", "p", {Move::right(), Move::stay(), Move::right()});
    b.rw("p", "1__", "s1", "1__");
    b.sh("s1", "s2", {Move::right(), Move::stay(), Move::stay()});
    b.rw("s2", "1__", "s3", "1__");
    b.sh("s3", "rw", {Move::right(), Move::stay(), Move::left()});
    // rewind the work copy to its left end
    for (char i : {'0', '1', '_'}) {
        for (char wch : {'0', '1'}) {
            char rv[4] = {i, '_', wch, 0};
            std::string hop = std::string("r") + i + wch;
            b.rw("rw", rv, hop, rv);
            b.sh(hop, "rw", {Move::stay(), Move::stay(), Move::left()});
        }
        char rv[4] = {i, '_', '_', 0};
        std::string hop = std::string("x") + i;
        b.rw("rw", rv, hop, rv);
        b.sh(hop, "mt", {Move::stay(), Move::stay(), Move::right()});
    }
    // match certificate against the copy
    for (char c : {'0', '1'}) {
        char rv[4] = {c, '_', c, 0};
        std::string hop = std::string("m") + c;
        b.rw("mt", rv, hop, rv);
        b.sh(hop, "mt", {Move::right(), Move::stay(), Move::right()});
    }
    b.rw("mt", "___", "qa", "___");
    return b.done("p", "qa", PolyBound(8, 1), PolyBound(4096, 0));
}

const std::vector<VerifierEntry>& verifier_registry() {
    static const std::vector<VerifierEntry> reg = [] {
        std::vector<VerifierEntry> v;
        v.push_back({"evenweight", Program::fp(even_weight_verifier()), PolyBound(4, 1),
                     PolyBound(1, 0)});
        v.push_back({"evenlength", Program::fp(even_length_verifier()), PolyBound(4, 1),
                     PolyBound(1, 0)});
        v.push_back({"sigmastar", Program::fp(copy_verifier()), PolyBound(8, 1),
                     PolyBound(1, 1)});
        return v;
    }();
    return reg;
}

namespace {

bool verifier_accepts(const Machine& m, const Bits& x, const Bits& cert) {
    RunOutcome o = run(m, pair_encode(x, cert));
    return o.accepted();
}

bool decides_by_certificates(const VerifierEntry& entry, const Bits& x) {
    Machine m = deserialize_machine(entry.program.bits);
    std::uint64_t limit = entry.cert_bound.eval(x.size());
    std::size_t cap = static_cast<std::size_t>(std::min<std::uint64_t>(limit, 16));
    for (const auto& cert : strings_up_to(cap))
        if (verifier_accepts(m, x, cert)) return true;
    return false;
}

} // namespace

bool universal_member(const Bits& s, const std::vector<VerifierEntry>& registry) {
    auto head = pair_decode(s);
    if (!head) return false;
    const Bits& wbits = head->first;
    const Bits& rest = head->second;
    const VerifierEntry* entry = nullptr;
    for (const auto& e : registry)
        if (e.program.bits == wbits) entry = &e;
    if (!entry) return false;
    // suffix zeros table so each candidate split is O(1)
    std::vector<std::size_t> zeros_from(rest.size() + 1, 0);
    for (std::size_t i = rest.size(); i-- > 0;)
        zeros_from[i] = rest[i] == '0' ? zeros_from[i + 1] + 1 : 0;
    for (std::size_t k = 0; k + 2 <= rest.size(); ++k) {
        if (rest[k] != '1' || rest[k + 1] != '1') continue;
        std::size_t pad = rest.size() - k - 2;
        if (zeros_from[k + 2] != pad) continue;
        Bits x = rest.substr(0, k);
        std::uint64_t want = static_cast<std::uint64_t>(wbits.size()) * entry->time.eval(x.size());
        if (pad != want) continue;
        if (decides_by_certificates(*entry, x)) return true;
    }
    return false;
}

namespace {

std::uint64_t bits_value(const Bits& s) {
    std::uint64_t v = 0;
    for (char c : s) v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    return v;
}

bool subsetsum_member(const Bits& s) {
    auto head = pair_decode(s);
    if (!head) return false;
    std::uint64_t target = bits_value(head->first);
    std::vector<std::uint64_t> weights;
    Bits rest = head->second;
    while (!rest.empty()) {
        auto item = pair_decode(rest);
        if (!item) return false;
        weights.push_back(bits_value(item->first));
        rest = item->second;
        if (weights.size() > 20) return false;
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << weights.size()); ++mask) {
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < weights.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) sum += weights[i];
        if (sum == target) return true;
    }
    return false;
}

OracleLanguage image_language(const std::string& machine_name) {
    OracleLanguage L;
    L.name = "im-" + machine_name;
    L.membership = [machine_name](const Bits& s) -> bool {
        auto pair = pair_decode(s);
        if (!pair) return false;
        const Bits& z = pair->first;
        const Bits& u = pair->second;
        Machine m = corpus_machine(machine_name);
        if (!m.balance_bound) return false;
        std::uint64_t limit = m.balance_bound->eval(z.size());
        std::size_t cap = static_cast<std::size_t>(std::min<std::uint64_t>(limit, 16));
        if (u.size() > cap) return false;
        const OracleFn even = [](const std::string& q) {
            return std::count(q.begin(), q.end(), '1') % 2 == 0;
        };
        const OracleFn* oracle = m.oracle_name ? &even : nullptr;
        for (const auto& v : strings_up_to(cap - u.size())) {
            RunOutcome o = run(m, u + v, oracle);
            if (o.accepted() && o.output == z) return true;
        }
        return false;
    };
    return L;
}

} // namespace

OracleLanguage oracle_lookup(const std::string& name) {
    OracleLanguage L;
    L.name = name;
    if (name == "evenweight") {
        L.membership = [](const Bits& s) {
            return std::count(s.begin(), s.end(), '1') % 2 == 0;
        };
        L.verifier = verifier_registry()[0].program;
        L.cert_bound = verifier_registry()[0].cert_bound;
        return L;
    }
    if (name == "evenlength") {
        L.membership = [](const Bits& s) { return s.size() % 2 == 0; };
        L.verifier = verifier_registry()[1].program;
        L.cert_bound = verifier_registry()[1].cert_bound;
        return L;
    }
    if (name == "sigmastar") {
        L.membership = [](const Bits&) { return true; };
        L.verifier = verifier_registry()[2].program;
        L.cert_bound = verifier_registry()[2].cert_bound;
        return L;
    }
    if (name == "subsetsum") {
        L.membership = subsetsum_member;
        return L;
    }
    if (name == "universal") {
        L.membership = [](const Bits& s) { return universal_member(s, verifier_registry()); };
        return L;
    }
    if (name.rfind("im-", 0) == 0) {
        std::string mn = name.substr(3);
        corpus_machine(mn);  // throws on unknown machines
        return image_language(mn);
    }
    if (name.rfind("dunion(", 0) == 0 && name.back() == ')') {
        std::string inner = name.substr(7, name.size() - 8);
        int depth = 0;
        std::size_t comma = std::string::npos;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            if (inner[i] == ')') --depth;
            if (inner[i] == ',' && depth == 0) {
                comma = i;
                break;
            }
        }
        if (comma != std::string::npos) {
            OracleLanguage a = oracle_lookup(inner.substr(0, comma));
            OracleLanguage b = oracle_lookup(inner.substr(comma + 1));
            L.membership = [a, b](const Bits& s) {
                if (s.empty()) return false;
                return s[0] == '0' ? a.membership(s.substr(1)) : b.membership(s.substr(1));
            };
            return L;
        }
    }
    throw std::runtime_error("UnknownOracle: " + name);
}

std::vector<std::string> oracle_names() {
    std::vector<std::string> names = {"evenweight", "evenlength", "sigmastar", "subsetsum",
                                      "universal"};
    for (const auto& m : corpus_names()) names.push_back("im-" + m);
    return names;
}

std::vector<OracleLanguage> parse_oracle_file(const std::string& text) {
    std::vector<OracleLanguage> out;
    std::istringstream in(text);
    std::string line;
    std::string name;
    std::optional<PolyBound> cert;
    std::string body;
    auto flush = [&]() {
        if (name.empty()) return;
        Machine verifier = parse_machine(body);
        PolyBound bound = cert.value_or(PolyBound(1, 0));
        bool empty_only = !cert.has_value();
        OracleLanguage L;
        L.name = name;
        L.verifier = Program::fp(verifier);
        L.cert_bound = bound;
        L.membership = [verifier, bound, empty_only](const Bits& x) -> bool {
            std::uint64_t limit = empty_only ? 0 : bound.eval(x.size());
            std::size_t cap = static_cast<std::size_t>(std::min<std::uint64_t>(limit, 14));
            for (const auto& c : strings_up_to(cap))
                if (run(verifier, pair_encode(x, c)).accepted()) return true;
            return false;
        };
        out.push_back(std::move(L));
        name.clear();
        cert.reset();
        body.clear();
    };
    while (std::getline(in, line)) {
        std::string t = line;
        if (t.rfind("oracle ", 0) == 0 || t.rfind("cert:", 0) == 0) {
            std::size_t hash = t.find('#');
            if (hash != std::string::npos) t = t.substr(0, hash);
        }
        if (t.rfind("oracle ", 0) == 0) {
            flush();
            name = t.substr(7);
            std::size_t e = name.find_last_not_of(" \t\r");
            name = e == std::string::npos ? "" : name.substr(0, e + 1);
        } else if (t.rfind("cert:", 0) == 0) {
            std::istringstream cs(t.substr(5));
            std::uint64_t a;
            std::uint32_t k;
            if (!(cs >> a >> k)) throw std::runtime_error("oracle file: bad cert line");
            cert = PolyBound(a, k);
        } else {
            body += t;
            body += '\n';
        }
    }
    flush();
    if (out.empty()) throw std::runtime_error("oracle file: no stanzas");
    return out;
}

std::optional<Bits> fmin_invert_via_oracle(const Machine& m, const Bits& y,
                                           std::size_t window_cap) {
    if (!m.balance_bound)
        throw std::runtime_error("fmin_invert_via_oracle: machine lacks a balance bound");
    OracleLanguage im = oracle_lookup("im-" + m.name);
    std::uint64_t limit = m.balance_bound->eval(y.size());
    std::size_t window = static_cast<std::size_t>(std::min<std::uint64_t>(limit, window_cap));
    const OracleFn even = [](const std::string& q) {
        return std::count(q.begin(), q.end(), '1') % 2 == 0;
    };
    const OracleFn* oracle = m.oracle_name ? &even : nullptr;

    // length-layered DFS over prefixes, pruned by the image oracle
    for (std::size_t len = 0; len <= window; ++len) {
        std::function<std::optional<Bits>(const Bits&)> dfs =
            [&](const Bits& prefix) -> std::optional<Bits> {
            if (!im.membership(pair_encode(y, prefix))) return std::nullopt;
            if (prefix.size() == len) {
                RunOutcome o = run(m, prefix, oracle);
                if (o.accepted() && o.output == y) return prefix;
                return std::nullopt;
            }
            for (char c : {'0', '1'}) {
                auto got = dfs(prefix + c);
                if (got) return got;
            }
            return std::nullopt;
        };
        auto got = dfs("");
        if (got) return got;
    }
    return std::nullopt;
}

} // namespace rtm
