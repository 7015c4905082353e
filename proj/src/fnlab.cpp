#include "rtm/fnlab.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rtm {

FiniteFn FiniteFn::identity_on(const std::set<std::string>& xs) {
    Table t;
    for (const auto& x : xs) t[x] = x;
    return FiniteFn(std::move(t));
}

std::optional<std::string> FiniteFn::apply(const std::string& x) const {
    auto it = table_.find(x);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

std::set<std::string> FiniteFn::domain() const {
    std::set<std::string> d;
    for (const auto& [x, y] : table_) d.insert(x);
    return d;
}

std::set<std::string> FiniteFn::image() const {
    std::set<std::string> im;
    for (const auto& [x, y] : table_) im.insert(y);
    return im;
}

std::set<std::string> FiniteFn::preimage(const std::string& y) const {
    std::set<std::string> p;
    for (const auto& [x, v] : table_)
        if (v == y) p.insert(x);
    return p;
}

bool FiniteFn::is_injective() const {
    std::set<std::string> seen;
    for (const auto& [x, y] : table_)
        if (!seen.insert(y).second) return false;
    return true;
}

bool FiniteFn::is_idempotent() const {
    return compose(*this, *this) == *this;
}

bool FiniteFn::subfunction_of(const FiniteFn& g) const {
    for (const auto& [x, y] : table_) {
        auto v = g.apply(x);
        if (!v || *v != y) return false;
    }
    return true;
}

std::string FiniteFn::to_text() const {
    std::ostringstream out;
    for (const auto& [x, y] : table_)
        out << (x.empty() ? "-" : x) << " -> " << (y.empty() ? "-" : y) << "\n";
    return out.str();
}

FiniteFn FiniteFn::from_text(const std::string& text) {
    Table t;
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string x, arrow, y;
        if (!(ls >> x)) continue;
        if (!(ls >> arrow >> y) || arrow != "->")
            throw std::runtime_error("fn text, line " + std::to_string(n) + ": expected 'x -> y'");
        if (x == "-") x.clear();
        if (y == "-") y.clear();
        if (t.count(x))
            throw std::runtime_error("fn text, line " + std::to_string(n) + ": duplicate point");
        t[x] = y;
    }
    return FiniteFn(std::move(t));
}

FiniteFn compose(const FiniteFn& f2, const FiniteFn& f1) {
    FiniteFn::Table t;
    for (const auto& [x, y] : f1.table()) {
        auto z = f2.apply(y);
        if (z) t[x] = *z;
    }
    return FiniteFn(std::move(t));
}

FiniteFn restrict_to(const FiniteFn& f, const std::set<std::string>& S) {
    FiniteFn::Table t;
    for (const auto& [x, y] : f.table())
        if (S.count(x)) t[x] = y;
    return FiniteFn(std::move(t));
}

std::optional<FiniteFn> relational_inverse(const FiniteFn& f) {
    FiniteFn::Table t;
    for (const auto& [x, y] : f.table()) {
        if (t.count(y)) return std::nullopt;
        t[y] = x;
    }
    return FiniteFn(std::move(t));
}

bool is_inverse(const FiniteFn& fprime, const FiniteFn& f) {
    return compose(f, compose(fprime, f)) == f;
}

bool is_coinverse(const FiniteFn& fprime, const FiniteFn& f) {
    return compose(fprime, compose(f, fprime)) == fprime;
}

bool is_mutual_inverse(const FiniteFn& fprime, const FiniteFn& f) {
    return is_inverse(fprime, f) && is_coinverse(fprime, f);
}

ModPartition mod_partition(const FiniteFn& f) {
    ModPartition p;
    for (const auto& [x, y] : f.table()) p.classes[y].insert(x);
    return p;
}

std::vector<FiniteFn> choice_functions(const FiniteFn& f) {
    ModPartition p = mod_partition(f);
    std::vector<std::pair<std::string, std::vector<std::string>>> fibers;
    for (auto& [y, xs] : p.classes)
        fibers.emplace_back(y, std::vector<std::string>(xs.begin(), xs.end()));
    std::vector<FiniteFn> out;
    std::vector<std::size_t> pick(fibers.size(), 0);
    while (true) {
        FiniteFn::Table t;
        for (std::size_t i = 0; i < fibers.size(); ++i)
            t[fibers[i].first] = fibers[i].second[pick[i]];
        out.emplace_back(std::move(t));
        std::size_t i = 0;
        while (i < fibers.size() && ++pick[i] == fibers[i].second.size()) pick[i++] = 0;
        if (i == fibers.size()) break;
        if (fibers.empty()) break;
    }
    if (fibers.empty()) out = {FiniteFn::theta()};
    return out;
}

std::vector<FiniteFn> repr_choice_functions(const FiniteFn& f) {
    std::vector<FiniteFn> out;
    for (const auto& c : choice_functions(f)) out.push_back(rho_of_choice(c, f));
    return out;
}

FiniteFn rho_of_choice(const FiniteFn& c, const FiniteFn& f) {
    return compose(c, f);
}

FiniteFn choice_of_repr(const FiniteFn& r, const FiniteFn& f) {
    // r ∘ f^{-1} as relation composition: y -> r(x) for any x in the fiber
    // (well-defined since mod_r = mod_f)
    FiniteFn::Table t;
    for (const auto& [x, y] : f.table()) {
        auto v = r.apply(x);
        if (v) t[y] = *v;
    }
    return FiniteFn(std::move(t));
}

FiniteFn fmin(const FiniteFn& f) {
    FiniteFn::Table t;
    for (const auto& [y, xs] : mod_partition(f).classes) {
        std::string best;
        bool first = true;
        for (const auto& x : xs) {
            if (first || llex_less(x, best)) {
                best = x;
                first = false;
            }
        }
        t[y] = best;
    }
    return FiniteFn(std::move(t));
}

bool is_subinverse(const FiniteFn& gprime, const FiniteFn& f) {
    if (gprime.empty()) return true;  // mutual inverse of the empty subfunction
    if (gprime.is_injective()) return is_coinverse(gprime, f);
    // witness search: the natural candidate S = Im(g'), then every subset of
    // Dom(f) when Dom(f) is tiny
    FiniteFn g = restrict_to(f, gprime.image());
    if (is_mutual_inverse(gprime, g)) return true;
    auto dom = f.domain();
    if (dom.size() > 12) return false;
    std::vector<std::string> d(dom.begin(), dom.end());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.size()); ++mask) {
        std::set<std::string> S;
        for (std::size_t i = 0; i < d.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) S.insert(d[i]);
        FiniteFn sub = restrict_to(f, S);
        if (is_mutual_inverse(gprime, sub)) return true;
    }
    return false;
}

std::vector<std::string> Universe::elements() const {
    std::vector<std::string> out;
    std::vector<std::string> level = {""};
    out.push_back("");
    for (std::size_t n = 1; n <= max_len; ++n) {
        std::vector<std::string> next;
        for (const auto& s : level)
            for (char c : alphabet) next.push_back(s + c);
        std::sort(next.begin(), next.end());
        for (auto& s : next) out.push_back(s);
        level = std::move(next);
    }
    return out;
}

FiniteMonoid monoid_closure(const std::vector<FiniteFn>& gens,
                            const std::set<std::string>& universe, std::size_t cap) {
    FiniteMonoid M;
    M.identity = FiniteFn::identity_on(universe);
    std::set<FiniteFn> seen;
    std::vector<FiniteFn> queue;
    auto add = [&](const FiniteFn& f) {
        if (seen.insert(f).second) {
            if (seen.size() > cap) throw std::runtime_error("CapExceeded");
            queue.push_back(f);
        }
    };
    add(M.identity);
    for (const auto& g : gens) add(g);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        // compose with all current elements both ways
        for (std::size_t j = 0; j <= i; ++j) {
            add(compose(queue[i], queue[j]));
            add(compose(queue[j], queue[i]));
        }
    }
    M.elements.assign(seen.begin(), seen.end());
    return M;
}

namespace {

// principal ideal sets for relative Green's relations inside M
std::vector<std::set<std::size_t>> left_ideals(const FiniteMonoid& M) {
    std::map<FiniteFn, std::size_t> index;
    for (std::size_t i = 0; i < M.elements.size(); ++i) index[M.elements[i]] = i;
    std::vector<std::set<std::size_t>> ideal(M.elements.size());
    for (std::size_t i = 0; i < M.elements.size(); ++i) {
        ideal[i].insert(i);  // identity is in M
        for (const auto& u : M.elements) {
            auto it = index.find(compose(u, M.elements[i]));
            if (it != index.end()) ideal[i].insert(it->second);
        }
    }
    return ideal;
}

std::vector<std::set<std::size_t>> right_ideals(const FiniteMonoid& M) {
    std::map<FiniteFn, std::size_t> index;
    for (std::size_t i = 0; i < M.elements.size(); ++i) index[M.elements[i]] = i;
    std::vector<std::set<std::size_t>> ideal(M.elements.size());
    for (std::size_t i = 0; i < M.elements.size(); ++i) {
        ideal[i].insert(i);
        for (const auto& u : M.elements) {
            auto it = index.find(compose(M.elements[i], u));
            if (it != index.end()) ideal[i].insert(it->second);
        }
    }
    return ideal;
}

int classify(std::vector<int>& out, const std::vector<std::set<std::size_t>>& key) {
    std::map<std::set<std::size_t>, int> ids;
    out.resize(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) {
        auto [it, fresh] = ids.emplace(key[i], static_cast<int>(ids.size()));
        out[i] = it->second;
    }
    return static_cast<int>(ids.size());
}

} // namespace

GreenRelations green_relations(const FiniteMonoid& M) {
    GreenRelations g;
    auto li = left_ideals(M);
    auto ri = right_ideals(M);
    g.l_classes = classify(g.L, li);
    g.r_classes = classify(g.R, ri);
    // H = L ∧ R
    std::map<std::pair<int, int>, int> hids;
    g.H.resize(M.elements.size());
    for (std::size_t i = 0; i < M.elements.size(); ++i) {
        auto [it, fresh] =
            hids.emplace(std::make_pair(g.L[i], g.R[i]), static_cast<int>(hids.size()));
        g.H[i] = it->second;
    }
    g.h_classes = static_cast<int>(hids.size());
    // D = join of L and R: union-find over shared classes
    std::vector<int> parent(M.elements.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        return parent[static_cast<std::size_t>(x)] == x
                   ? x
                   : parent[static_cast<std::size_t>(x)] =
                         find(parent[static_cast<std::size_t>(x)]);
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        int ra = find(static_cast<int>(a)), rb = find(static_cast<int>(b));
        if (ra != rb) parent[static_cast<std::size_t>(ra)] = rb;
    };
    for (std::size_t i = 0; i < M.elements.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (g.L[i] == g.L[j] || g.R[i] == g.R[j]) unite(i, j);
    std::map<int, int> dids;
    g.D.resize(M.elements.size());
    for (std::size_t i = 0; i < M.elements.size(); ++i) {
        auto [it, fresh] =
            dids.emplace(find(static_cast<int>(i)), static_cast<int>(dids.size()));
        g.D[i] = it->second;
    }
    g.d_classes = static_cast<int>(dids.size());
    return g;
}

std::vector<FiniteFn> regular_elements(const FiniteMonoid& M) {
    std::vector<FiniteFn> out;
    for (const auto& f : M.elements)
        for (const auto& g : M.elements)
            if (compose(f, compose(g, f)) == f) {
                out.push_back(f);
                break;
            }
    return out;
}

std::vector<FiniteFn> idempotents(const FiniteMonoid& M) {
    std::vector<FiniteFn> out;
    for (const auto& f : M.elements)
        if (compose(f, f) == f) out.push_back(f);
    return out;
}

std::vector<FiniteFn> maximal_subgroup(const FiniteMonoid& M, const FiniteFn& e) {
    GreenRelations g = green_relations(M);
    int ei = -1;
    for (std::size_t i = 0; i < M.elements.size(); ++i)
        if (M.elements[i] == e) ei = static_cast<int>(i);
    if (ei < 0) throw std::runtime_error("idempotent not in monoid");
    std::vector<FiniteFn> out;
    for (std::size_t i = 0; i < M.elements.size(); ++i)
        if (g.H[i] == g.H[static_cast<std::size_t>(ei)]) out.push_back(M.elements[i]);
    return out;
}

std::vector<FiniteFn> rfix(const FiniteFn& f, const FiniteMonoid& M) {
    std::vector<FiniteFn> out;
    for (const auto& a : M.elements)
        if (compose(f, a) == f) out.push_back(a);
    return out;
}

std::vector<FiniteFn> lfix(const FiniteFn& f, const FiniteMonoid& M) {
    std::vector<FiniteFn> out;
    for (const auto& a : M.elements)
        if (compose(a, f) == f) out.push_back(a);
    return out;
}

FiniteFn pad_zero(const FiniteFn& f) {
    FiniteFn::Table t;
    for (const auto& [x, y] : f.table()) t["0" + x] = "1" + y;
    return FiniteFn(std::move(t));
}

FiniteFn group_inverse(const FiniteFn& f, const FiniteFn& fprime) {
    if (!is_mutual_inverse(fprime, f) || !fprime.is_injective())
        throw std::runtime_error("NotMutual");
    std::set<std::string> im = f.image();
    if (fprime.domain() != im) throw std::runtime_error("DomainMismatch");
    FiniteFn::Table t;
    for (const auto& [y, x] : fprime.table()) {
        t["1" + y] = "0" + x;   // f1'
        t["0" + x] = "1" + y;   // f1'^{-1}
    }
    return FiniteFn(std::move(t));
}

bool simulates(const FiniteFn& f1, const FiniteFn& f2, const FiniteFn& beta,
               const FiniteFn& alpha) {
    return compose(beta, compose(f2, alpha)) == f1;
}

FiniteFn pi_fn(char a, const std::vector<std::string>& window) {
    FiniteFn::Table t;
    for (const auto& z : window) t[z] = std::string(1, a) + z;
    return FiniteFn(std::move(t));
}

FiniteFn pi_prime_fn(char a, const std::vector<std::string>& window) {
    FiniteFn::Table t;
    for (const auto& z : window) t[std::string(1, a) + z] = z;
    return FiniteFn(std::move(t));
}

FiniteFn random_fn(std::mt19937_64& rng, const std::vector<std::string>& window,
                   double density) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, window.empty() ? 0 : window.size() - 1);
    FiniteFn::Table t;
    for (const auto& x : window)
        if (coin(rng) < density) t[x] = window[pick(rng)];
    return FiniteFn(std::move(t));
}

FiniteFn random_injective_coinverse(std::mt19937_64& rng, const FiniteFn& f) {
    std::uniform_int_distribution<int> coin(0, 1);
    FiniteFn::Table t;
    for (const auto& [y, xs] : mod_partition(f).classes) {
        if (coin(rng)) continue;
        std::vector<std::string> fiber(xs.begin(), xs.end());
        std::uniform_int_distribution<std::size_t> pick(0, fiber.size() - 1);
        t[y] = fiber[pick(rng)];
    }
    return FiniteFn(std::move(t));
}

FiniteFn random_choice_function(std::mt19937_64& rng, const FiniteFn& f) {
    FiniteFn::Table t;
    for (const auto& [y, xs] : mod_partition(f).classes) {
        std::vector<std::string> fiber(xs.begin(), xs.end());
        std::uniform_int_distribution<std::size_t> pick(0, fiber.size() - 1);
        t[y] = fiber[pick(rng)];
    }
    return FiniteFn(std::move(t));
}

std::vector<FiniteFn> all_partial_fns(const std::vector<std::string>& D,
                                      const std::vector<std::string>& R) {
    std::vector<FiniteFn> out;
    std::size_t options = R.size() + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < D.size(); ++i) total *= options;
    out.reserve(total);
    std::vector<std::size_t> pick(D.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
        FiniteFn::Table t;
        std::size_t v = n;
        for (std::size_t i = 0; i < D.size(); ++i) {
            std::size_t p = v % options;
            v /= options;
            if (p > 0) t[D[i]] = R[p - 1];
        }
        out.emplace_back(std::move(t));
    }
    return out;
}

} // namespace rtm
