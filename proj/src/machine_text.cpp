#include "rtm/machine_text.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rtm {

namespace {

[[noreturn]] void fail(int line, const std::string& why) {
    throw std::runtime_error("machine text, line " + std::to_string(line) + ": " + why);
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

// "[a,b,c]" -> {"a","b","c"}; empty items rejected
std::vector<std::string> parse_bracket_list(const std::string& s, int line) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail(line, "expected [..] list: " + s);
    std::vector<std::string> items;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            items.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    items.push_back(trim(cur));
    for (auto& it : items)
        if (it.empty()) fail(line, "empty item in list: " + s);
    return items;
}

Symbol parse_symbol(const std::string& s, int line) {
    if (s.size() != 1) fail(line, "symbols are single characters: '" + s + "'");
    return s[0];
}

Move parse_move(const std::string& s, int line) {
    if (s == "L") return Move::left();
    if (s == "R") return Move::right();
    if (s == "S") return Move::stay();
    if (s == "D") return Move::del_unchecked();
    if (s.size() == 4 && (s[0] == 'I' || s[0] == 'D') && s[1] == '(' && s[3] == ')')
        return s[0] == 'I' ? Move::ins(s[2]) : Move::del(s[2]);
    fail(line, "bad move '" + s + "'");
}

std::string move_str(const Move& m) {
    switch (m.kind) {
        case Move::L: return "L";
        case Move::R: return "R";
        case Move::S: return "S";
        case Move::Insert: return std::string("I(") + m.sym + ")";
        case Move::Delete:
            return m.checked ? std::string("D(") + m.sym + ")" : std::string("D");
    }
    return "?";
}

TapeRole parse_role(const std::string& s, int line) {
    if (s == "input") return TapeRole::Input;
    if (s == "output") return TapeRole::Output;
    if (s == "work") return TapeRole::Work;
    if (s == "history") return TapeRole::History;
    if (s == "query") return TapeRole::Query;
    fail(line, "bad tape role '" + s + "'");
}

std::string role_str(TapeRole r) {
    switch (r) {
        case TapeRole::Input: return "input";
        case TapeRole::Output: return "output";
        case TapeRole::Work: return "work";
        case TapeRole::History: return "history";
        case TapeRole::Query: return "query";
    }
    return "?";
}

} // namespace

Machine parse_machine(const std::string& text) {
    Machine m;
    bool saw_machine = false, saw_tapes = false, saw_states = false, saw_startacc = false;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string s = trim(raw);
        if (s.empty()) continue;

        auto starts = [&](const char* p) {
            std::size_t n = std::string(p).size();
            return s.rfind(p, 0) == 0 ? (s = trim(s.substr(n)), true) : false;
        };

        if (starts("machine ") || s == "machine") {
            if (s.empty()) fail(line, "machine needs a name");
            m.name = s;
            saw_machine = true;
        } else if (starts("tapes:")) {
            std::istringstream ts(s);
            std::string item;
            while (std::getline(ts, item, ',')) {
                item = trim(item);
                std::size_t colon = item.find(':');
                if (colon == std::string::npos) fail(line, "tape spec needs role:kind");
                TapeSpec spec;
                spec.role = parse_role(trim(item.substr(0, colon)), line);
                std::string kind = trim(item.substr(colon + 1));
                if (kind == "normal") spec.kind = TapeKind::Normal;
                else if (kind == "rubber") spec.kind = TapeKind::Rubber;
                else fail(line, "bad tape kind '" + kind + "'");
                m.tapes.push_back(spec);
            }
            saw_tapes = true;
        } else if (starts("states:")) {
            for (auto& w : split_ws(s)) m.states.insert(w);
            saw_states = true;
        } else if (starts("start:")) {
            std::size_t slash = s.find('/');
            if (slash == std::string::npos) fail(line, "expected 'start: <id> / accept: <id>'");
            m.start = trim(s.substr(0, slash));
            std::string acc = trim(s.substr(slash + 1));
            if (acc.rfind("accept:", 0) != 0) fail(line, "expected accept: after /");
            m.accept = trim(acc.substr(7));
            if (m.start.empty() || m.accept.empty()) fail(line, "empty start/accept");
            saw_startacc = true;
        } else if (starts("time:")) {
            auto w = split_ws(s);
            if (w.size() != 2) fail(line, "time: <a> <k>");
            m.time_bound = PolyBound(std::stoull(w[0]), static_cast<std::uint32_t>(std::stoul(w[1])));
        } else if (starts("balance:")) {
            auto w = split_ws(s);
            if (w.size() != 2) fail(line, "balance: <a> <k>");
            m.balance_bound = PolyBound(std::stoull(w[0]), static_cast<std::uint32_t>(std::stoul(w[1])));
        } else if (starts("oracle:")) {
            auto w = split_ws(s);
            if (w.size() != 4 && w.size() != 5) fail(line, "oracle: <q_qu> <q_yes> <q_no> <name> [reversed]");
            OracleSite site;
            site.q_query = w[0];
            site.q_yes = w[1];
            site.q_no = w[2];
            site.reversed = false;
            if (w.size() == 5) {
                if (w[4] != "reversed") fail(line, "trailing token must be 'reversed'");
                site.reversed = true;
            }
            if (m.oracle_name && *m.oracle_name != w[3])
                fail(line, "conflicting oracle names");
            m.oracle_name = w[3];
            m.oracle_sites.push_back(site);
        } else if (starts("rw:")) {
            auto w = split_ws(s);
            if (w.size() != 5 || w[2] != "->") fail(line, "rw: <src> [r,..] -> <dst> [w,..]");
            SymVec rv, wv;
            for (auto& it : parse_bracket_list(w[1], line)) rv.push_back(parse_symbol(it, line));
            for (auto& it : parse_bracket_list(w[4], line)) wv.push_back(parse_symbol(it, line));
            m.transitions.push_back(Transition::rw(w[0], rv, w[3], wv));
        } else if (starts("shift:")) {
            auto w = split_ws(s);
            if (w.size() != 4 || w[1] != "->") fail(line, "shift: <src> -> <dst> [m,..]");
            MoveVec mv;
            for (auto& it : parse_bracket_list(w[3], line)) mv.push_back(parse_move(it, line));
            m.transitions.push_back(Transition::shift(w[0], w[2], mv));
        } else {
            fail(line, "unknown directive: " + s);
        }
    }
    if (!saw_machine) throw std::runtime_error("machine text: missing 'machine' line");
    if (!saw_tapes) throw std::runtime_error("machine text: missing 'tapes:' line");
    if (!saw_states) throw std::runtime_error("machine text: missing 'states:' line");
    if (!saw_startacc) throw std::runtime_error("machine text: missing 'start:/accept:' line");
    m.check_well_formed();
    return m;
}

Machine load_machine_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open machine file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_machine(ss.str());
}

std::string print_machine(const Machine& m) {
    std::ostringstream out;
    out << "machine " << m.name << "\n";
    out << "tapes: ";
    for (std::size_t i = 0; i < m.tapes.size(); ++i) {
        if (i) out << ", ";
        out << role_str(m.tapes[i].role) << ':'
            << (m.tapes[i].kind == TapeKind::Rubber ? "rubber" : "normal");
    }
    out << "\n";
    out << "states:";
    for (const auto& s : m.states) out << ' ' << s;
    out << "\n";
    out << "start: " << m.start << " / accept: " << m.accept << "\n";
    if (m.time_bound) out << "time: " << m.time_bound->a << ' ' << m.time_bound->k << "\n";
    if (m.balance_bound)
        out << "balance: " << m.balance_bound->a << ' ' << m.balance_bound->k << "\n";
    for (const auto& site : m.oracle_sites) {
        out << "oracle: " << site.q_query << ' ' << site.q_yes << ' ' << site.q_no << ' '
            << (m.oracle_name ? *m.oracle_name : "?");
        if (site.reversed) out << " reversed";
        out << "\n";
    }
    for (const auto& t : m.transitions) {
        if (t.kind == Transition::RW) {
            out << "rw: " << t.source << " [";
            for (std::size_t i = 0; i < t.read.size(); ++i) out << (i ? "," : "") << t.read[i];
            out << "] -> " << t.target << " [";
            for (std::size_t i = 0; i < t.write.size(); ++i) out << (i ? "," : "") << t.write[i];
            out << "]\n";
        } else {
            out << "shift: " << t.source << " -> " << t.target << " [";
            for (std::size_t i = 0; i < t.moves.size(); ++i)
                out << (i ? "," : "") << move_str(t.moves[i]);
            out << "]\n";
        }
    }
    return out.str();
}

} // namespace rtm
