#pragma once

#include <cstdint>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "klr/poly.hpp"
#include "klr/report.hpp"
#include "klr/roots.hpp"
#include "klr/zlattice.hpp"

namespace klr {

/// PBW normal monomial psi_w y_1^{m_1}..y_d^{m_d} e(i); the word is the
/// right idempotent, the left word is w.i.
struct Monomial {
    int32_t perm = 0;            // index into Context::perms()
    int32_t word = 0;            // index into Context::words()
    std::vector<int32_t> dots;   // exponents m_1..m_d

    auto operator<=>(const Monomial&) const = default;
};

struct Gen {
    enum Kind { Idem, Dot, Cross } kind;
    int r = 0;   // dot/crossing index
    Word word;   // for Idem
    static Gen idem(Word w) { return Gen{Idem, 0, std::move(w)}; }
    static Gen dot(int r) { return Gen{Dot, r, {}}; }
    static Gen cross(int r) { return Gen{Cross, r, {}}; }
};

class Context;

/// Finite integer combination of normal monomials with a fixed ambient alpha.
class Element {
public:
    Element() : ctx_(nullptr) {}
    explicit Element(const Context* ctx) : ctx_(ctx) {}

    const Context* ctx() const { return ctx_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const Monomial& m, const Int& c);
    void add(const Element& o, const Int& scale = 1);

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element scaled(const Int& c) const;
    bool operator==(const Element& o) const;

    std::set<long> degrees() const;
    bool is_homogeneous(long* deg = nullptr) const;
    Element component(long n) const;

    std::string to_text() const;
    std::string to_json() const;

private:
    const Context* ctx_;
    std::map<Monomial, Int> terms_;
};

/// Per-alpha engine state: interned words and permutations, degree tables
/// and the normalization caches. Immutable tables after construction; the
/// caches tolerate concurrent readers with serialized writers.
class Context {
public:
    explicit Context(RootVector alpha, size_t cache_limit = size_t(1) << 20);
    Context(const Context&) = delete;

    const RootVector& alpha() const { return alpha_; }
    int d() const { return d_; }

    const std::vector<Word>& words() const { return words_; }
    int word_index(const Word& w) const;
    const std::vector<Permutation>& perms() const { return perms_; }
    int perm_index(const Permutation& p) const;

    long perm_length(int p) const { return lengths_[p]; }
    const std::vector<int>& canon_word(int p) const { return canon_[p]; }
    int sr_perm(int r, int p) const;            // index of s_r * p
    int act_word(int p, int w) const;           // index of p . i
    int sr_word(int r, int w) const;
    long deg0(int p, int w) const;              // deg(psi_p e(i_w))
    long degree(const Monomial& m) const;

    int identity_perm() const { return id_perm_; }

    // basic elements
    Element zero() const { return Element(this); }
    Element one() const;
    Element monomial(int p, std::vector<int32_t> dots, int w, const Int& c = 1) const;
    Element idem(int w) const;
    Element gen_element(const Gen& g) const;

    // normalized left multiplication by generators
    Element left_mul(const Gen& g, const Element& x) const;
    Element left_mul_psi(int r, const Element& x) const;
    Element left_mul_y(int s, const Element& x) const;
    Element left_mul_idem(int w, const Element& x) const;
    Element left_mul_poly(const Poly& f, const Element& x) const;

    /// Normal form of psi_{seq} y^{dots} e(i).
    Element normalize_seq(const std::vector<int>& seq, const std::vector<int32_t>& dots,
                          int word) const;

    /// tau(psi_p) as an element (summed over all words); cached.
    std::shared_ptr<const Element> tau_core(int p) const;

    size_t cache_entries() const;
    size_t cache_limit() const { return cache_limit_; }

private:
    RootVector alpha_;
    int d_;
    std::vector<Word> words_;
    std::map<Word, int> word_index_;
    std::vector<Permutation> perms_;
    std::map<std::vector<int>, int> perm_index_;
    std::vector<long> lengths_;
    std::vector<std::vector<int>> canon_;
    std::vector<std::vector<int>> act_;   // [perm][word]
    std::vector<std::vector<long>> deg0_;
    std::vector<std::vector<int>> srp_;   // [r-1][perm]
    int id_perm_;

    // memoized dot-free products psi_r * (psi_p e(i)), y_s * (psi_p e(i)) and
    // tau cores; bounded, least-recently-used eviction. Values are shared
    // pointers so in-flight readers survive eviction.
    struct CacheEntry {
        std::shared_ptr<const Element> value;
        std::list<uint64_t>::iterator lru_it;
    };
    mutable std::unordered_map<uint64_t, CacheEntry> cache_;
    mutable std::list<uint64_t> lru_;
    mutable std::shared_mutex cache_mutex_;
    size_t cache_limit_;

    std::shared_ptr<const Element> cache_get(uint64_t key) const;
    std::shared_ptr<const Element> cache_put(uint64_t key, Element val) const;

    Element psi_times(int r, int p, int w) const;  // psi_r * psi_p e(i), dot-free
    Element y_times(int s, int p, int w) const;    // y_s * psi_p e(i), dot-free

    struct Correction {
        int coeff;              // +1 or -1
        std::vector<int> seq;   // crossing sequence with strictly fewer letters
    };
    std::vector<Correction> walk_rewrite(std::vector<int> cur, const std::vector<int>& target,
                                         int word) const;
};

Element mul(const Element& x, const Element& y);
Element tau(const Element& x);

/// All normal monomials of degree exactly n, in canonical term order.
std::vector<Monomial> pbw_basis_at_degree(const Context& ctx, long n);

/// Graded dimension series of R_alpha from the PBW basis, truncated at N.
QSeries dim_q_pbw(const Context& ctx, long N);

long min_degree_bound(const Context& ctx);  // -d(d-1)

/// Canonical term order used for rendering and basis indexing:
/// (degree, w one-line, dots descending-lex, word).
bool term_order(const Context& ctx, const Monomial& a, const Monomial& b);

/// Degree component basis with column lookup.
struct DegreeBasis {
    long degree = 0;
    std::vector<Monomial> monomials;
    std::map<Monomial, int> index;

    int dim() const { return static_cast<int>(monomials.size()); }
};

DegreeBasis degree_basis(const Context& ctx, long n);

/// Coordinates of the degree-n component of x in the given basis.
SparseVec coords(const Element& x, const DegreeBasis& basis);

/// Defining-relation suite over all admissible indices and words of alpha.
std::vector<CheckResult> verify_relations(const Context& ctx);

/// Visits y^m x for every exponent vector m with |m| = total, sharing
/// partial dot products along the enumeration. Stops early when fn returns
/// false.
bool for_each_dot_multiple(const Context& ctx, long total, const Element& x,
                           const std::function<bool(const Element&)>& fn);

}  // namespace klr
