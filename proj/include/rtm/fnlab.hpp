#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rtm/bits.hpp"

namespace rtm {

// An explicit finite partial function on strings. No implicit universe: the
// function is exactly its table. theta() is the empty map.
class FiniteFn {
  public:
    using Table = std::map<std::string, std::string>;

    FiniteFn() = default;
    explicit FiniteFn(Table t) : table_(std::move(t)) {}

    static FiniteFn theta() { return FiniteFn(); }
    static FiniteFn identity_on(const std::set<std::string>& xs);

    bool defined(const std::string& x) const { return table_.count(x) != 0; }
    std::optional<std::string> apply(const std::string& x) const;
    void set(const std::string& x, const std::string& y) { table_[x] = y; }

    std::set<std::string> domain() const;
    std::set<std::string> image() const;
    std::set<std::string> preimage(const std::string& y) const;

    bool empty() const { return table_.empty(); }
    std::size_t size() const { return table_.size(); }
    bool is_injective() const;
    bool is_idempotent() const;  // f(f(x)) == f(x) wherever f*f defined, and same table

    const Table& table() const { return table_; }

    bool operator==(const FiniteFn& o) const { return table_ == o.table_; }
    bool operator<(const FiniteFn& o) const { return table_ < o.table_; }

    // subfunction: every pair of *this is a pair of g
    bool subfunction_of(const FiniteFn& g) const;

    std::string to_text() const;               // "x -> y" per line
    static FiniteFn from_text(const std::string& text);

  private:
    Table table_;
};

// compose(f2, f1) = f2 after f1 (defined where both legs are defined)
FiniteFn compose(const FiniteFn& f2, const FiniteFn& f1);
FiniteFn restrict_to(const FiniteFn& f, const std::set<std::string>& S);
std::optional<FiniteFn> relational_inverse(const FiniteFn& f);  // nullopt unless injective

bool is_inverse(const FiniteFn& fprime, const FiniteFn& f);    // f∘f'∘f == f
bool is_coinverse(const FiniteFn& fprime, const FiniteFn& f);  // f'∘f∘f' == f'
bool is_mutual_inverse(const FiniteFn& fprime, const FiniteFn& f);

// Kernel partition of Dom(f): one class per image point.
struct ModPartition {
    // image value -> fiber f^{-1}(y)
    std::map<std::string, std::set<std::string>> classes;
};
ModPartition mod_partition(const FiniteFn& f);

// All choice functions of f (one preimage pick per class); count is the
// product of fiber sizes, so keep f small.
std::vector<FiniteFn> choice_functions(const FiniteFn& f);
// All representative choice functions (idempotents r with Dom(r)=Dom(f),
// mod_r = mod_f, r = id on its image).
std::vector<FiniteFn> repr_choice_functions(const FiniteFn& f);

// rho_c = c∘f ; v_r = r∘f^{-1} (relation composition collapsed on fibers)
FiniteFn rho_of_choice(const FiniteFn& c, const FiniteFn& f);
FiniteFn choice_of_repr(const FiniteFn& r, const FiniteFn& f);

// Length-lexicographically least choice function.
FiniteFn fmin(const FiniteFn& f);

// g' is a sub-inverse of f iff it is a mutual inverse of some subfunction
// of f. Injective g' reduces to the co-inverse test; otherwise the witness
// restriction is searched (image-based first, then all subsets when the
// domain is tiny).
bool is_subinverse(const FiniteFn& gprime, const FiniteFn& f);

// Finite stand-in for A^{<=max_len} over the given alphabet.
struct Universe {
    std::string alphabet = "01";
    std::size_t max_len = 2;
    std::vector<std::string> elements() const;  // llex order
};

struct FiniteMonoid {
    std::vector<FiniteFn> elements;  // closed under compose, identity included
    FiniteFn identity;
};

// Closure of gens under composition with identity_on(universe) adjoined.
// Throws std::runtime_error("CapExceeded") if the closure grows past cap.
FiniteMonoid monoid_closure(const std::vector<FiniteFn>& gens,
                            const std::set<std::string>& universe, std::size_t cap);

struct GreenRelations {
    // partition index per element, aligned with FiniteMonoid::elements
    std::vector<int> L, R, H, D;
    int l_classes = 0, r_classes = 0, h_classes = 0, d_classes = 0;
};
GreenRelations green_relations(const FiniteMonoid& M);
std::vector<FiniteFn> regular_elements(const FiniteMonoid& M);
std::vector<FiniteFn> idempotents(const FiniteMonoid& M);
// H-class of the idempotent e.
std::vector<FiniteFn> maximal_subgroup(const FiniteMonoid& M, const FiniteFn& e);

// Fixators within M: RFix(f) = {a in M : f∘a == f}, LFix symmetric.
std::vector<FiniteFn> rfix(const FiniteFn& f, const FiniteMonoid& M);
std::vector<FiniteFn> lfix(const FiniteFn& f, const FiniteMonoid& M);

// f0(0x) = 1 f(x)
FiniteFn pad_zero(const FiniteFn& f);
// F' = f1' ∪ f1'^{-1} with f1'(1y) = 0 f'(y); requires f' an injective
// mutual inverse of f with Dom(f') = Im(f). Throws NotMutual/DomainMismatch.
FiniteFn group_inverse(const FiniteFn& f, const FiniteFn& fprime);

// exact check f1 == beta ∘ f2 ∘ alpha
bool simulates(const FiniteFn& f1, const FiniteFn& f2, const FiniteFn& beta,
               const FiniteFn& alpha);
// pi_a(z) = a z and pi_a'(az) = z, materialized over a window of strings
FiniteFn pi_fn(char a, const std::vector<std::string>& window);
FiniteFn pi_prime_fn(char a, const std::vector<std::string>& window);

// Random partial function on the universe window (each point defined with
// probability density, image values drawn from the same window).
FiniteFn random_fn(std::mt19937_64& rng, const std::vector<std::string>& window,
                   double density = 0.5);
// Random injective co-inverse of f: picks a subset of Im(f) and one fiber
// element per picked point.
FiniteFn random_injective_coinverse(std::mt19937_64& rng, const FiniteFn& f);
// Random choice function (mutual inverse with Dom = Im(f)).
FiniteFn random_choice_function(std::mt19937_64& rng, const FiniteFn& f);

// All partial functions D -> R as tables (|R|+1 options per point).
std::vector<FiniteFn> all_partial_fns(const std::vector<std::string>& D,
                                      const std::vector<std::string>& R);

} // namespace rtm
