#include "klr/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace klr {

void Element::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Element::add(const Element& o, const Int& scale) {
    if (scale == 0) return;
    if (!ctx_) ctx_ = o.ctx_;
    if (&o == this) {
        Element copy = o;
        for (const auto& [m, c] : copy.terms_) add_term(m, c * scale);
        return;
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c * scale);
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    r.add(o);
    return r;
}

Element Element::operator-(const Element& o) const {
    Element r = *this;
    r.add(o, -1);
    return r;
}

Element Element::scaled(const Int& c) const {
    Element r(ctx_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

bool Element::operator==(const Element& o) const { return terms_ == o.terms_; }

std::set<long> Element::degrees() const {
    std::set<long> out;
    for (const auto& [m, c] : terms_) out.insert(ctx_->degree(m));
    return out;
}

bool Element::is_homogeneous(long* deg) const {
    auto ds = degrees();
    if (ds.size() > 1) return false;
    if (deg && !ds.empty()) *deg = *ds.begin();
    return true;
}

Element Element::component(long n) const {
    Element r(ctx_);
    for (const auto& [m, c] : terms_)
        if (ctx_->degree(m) == n) r.terms_[m] = c;
    return r;
}

// ---------------------------------------------------------------------------

Context::Context(RootVector alpha, size_t cache_limit)
    : alpha_(std::move(alpha)), cache_limit_(cache_limit) {
    d_ = alpha_.height();
    if (d_ > 8) throw std::invalid_argument("height > 8 not supported");
    words_ = words_of(alpha_);
    for (int k = 0; k < static_cast<int>(words_.size()); ++k) word_index_[words_[k]] = k;
    perms_ = Permutation::all(d_);
    for (int k = 0; k < static_cast<int>(perms_.size()); ++k)
        perm_index_[perms_[k].oneline()] = k;
    id_perm_ = perm_index_.at(Permutation(d_).oneline());

    int P = static_cast<int>(perms_.size());
    int W = static_cast<int>(words_.size());
    lengths_.resize(P);
    canon_.resize(P);
    deg0_.assign(P, std::vector<long>(W));
    act_.assign(P, std::vector<int>(W));
    for (int p = 0; p < P; ++p) {
        lengths_[p] = perms_[p].length();
        canon_[p] = perms_[p].canonical_word();
        for (int w = 0; w < W; ++w) {
            act_[p][w] = word_index_.at(act_on_word(perms_[p], words_[w]));
            long deg = 0;
            const Word& i = words_[w];
            for (const auto& [r, s] : perms_[p].inversions()) deg -= cartan(i[r - 1], i[s - 1]);
            deg0_[p][w] = deg;
        }
    }
    srp_.assign(std::max(0, d_ - 1), std::vector<int>(P));
    for (int r = 1; r < d_; ++r) {
        Permutation sr = Permutation::transposition(d_, r);
        for (int p = 0; p < P; ++p) srp_[r - 1][p] = perm_index_.at((sr * perms_[p]).oneline());
    }
}

int Context::word_index(const Word& w) const {
    auto it = word_index_.find(w);
    if (it == word_index_.end()) throw std::invalid_argument("word content does not match alpha");
    return it->second;
}

int Context::perm_index(const Permutation& p) const { return perm_index_.at(p.oneline()); }

int Context::sr_perm(int r, int p) const { return srp_[r - 1][p]; }

int Context::act_word(int p, int w) const { return act_[p][w]; }

int Context::sr_word(int r, int w) const {
    Word j = words_[w];
    std::swap(j[r - 1], j[r]);
    return word_index_.at(j);
}

long Context::deg0(int p, int w) const { return deg0_[p][w]; }

long Context::degree(const Monomial& m) const {
    long s = 0;
    for (int32_t e : m.dots) s += e;
    return deg0_[m.perm][m.word] + 2 * s;
}

Element Context::one() const {
    Element r(this);
    for (int w = 0; w < static_cast<int>(words_.size()); ++w)
        r.add_term(Monomial{id_perm_, w, std::vector<int32_t>(d_, 0)}, 1);
    return r;
}

Element Context::monomial(int p, std::vector<int32_t> dots, int w, const Int& c) const {
    Element r(this);
    r.add_term(Monomial{p, w, std::move(dots)}, c);
    return r;
}

Element Context::idem(int w) const {
    return monomial(id_perm_, std::vector<int32_t>(d_, 0), w);
}

Element Context::gen_element(const Gen& g) const {
    Element r(this);
    switch (g.kind) {
        case Gen::Idem:
            return idem(word_index(g.word));
        case Gen::Dot: {
            if (g.r < 1 || g.r > d_) throw std::invalid_argument("dot index out of range");
            std::vector<int32_t> dots(d_, 0);
            dots[g.r - 1] = 1;
            for (int w = 0; w < static_cast<int>(words_.size()); ++w)
                r.add_term(Monomial{id_perm_, w, dots}, 1);
            return r;
        }
        case Gen::Cross: {
            if (g.r < 1 || g.r >= d_) throw std::invalid_argument("crossing index out of range");
            for (int w = 0; w < static_cast<int>(words_.size()); ++w)
                r.add_term(Monomial{srp_[g.r - 1][id_perm_], w, std::vector<int32_t>(d_, 0)}, 1);
            return r;
        }
    }
    return r;
}

// --- cache ----------------------------------------------------------------

std::shared_ptr<const Element> Context::cache_get(uint64_t key) const {
    std::shared_lock lk(cache_mutex_);
    auto it = cache_.find(key);
    if (it == cache_.end()) return nullptr;
    return it->second.value;
}

std::shared_ptr<const Element> Context::cache_put(uint64_t key, Element val) const {
    std::unique_lock lk(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second.value;
    auto ptr = std::make_shared<const Element>(std::move(val));
    lru_.push_front(key);
    cache_.emplace(key, CacheEntry{ptr, lru_.begin()});
    if (cache_.size() > cache_limit_) {
        uint64_t victim = lru_.back();
        lru_.pop_back();
        cache_.erase(victim);
    }
    return ptr;
}

size_t Context::cache_entries() const {
    std::shared_lock lk(cache_mutex_);
    return cache_.size();
}

static uint64_t pack_key(int kind, int r, int p, int w, int P, int W) {
    return ((static_cast<uint64_t>(kind) * 16 + r) * P + p) * W + w;
}

// --- normalization core ----------------------------------------------------

static int braid_coeff(const Word& j, int t) {
    // psi_t psi_{t+1} psi_t e(j) = psi_{t+1} psi_t psi_{t+1} e(j) + c e(j)
    if (j[t - 1] != j[t + 1]) return 0;
    if (j[t - 1] == j[t] + 1) return 1;
    if (j[t - 1] == j[t] - 1) return -1;
    return 0;
}

std::vector<Context::Correction> Context::walk_rewrite(std::vector<int> cur,
                                                       const std::vector<int>& target,
                                                       int word) const {
    auto path = reduced_word_path(cur, target);
    if (!path) throw std::logic_error("walk_rewrite: no Matsumoto path");
    std::vector<Correction> out;
    for (const Move& mv : *path) {
        if (mv.kind == Move::Braid) {
            // word to the right of the braid triple
            Word j = words_[word];
            for (size_t k = cur.size(); k > static_cast<size_t>(mv.pos) + 3; --k) {
                int t = cur[k - 1];
                std::swap(j[t - 1], j[t]);
            }
            int x = cur[mv.pos], y = cur[mv.pos + 1];
            int c;
            if (y == x + 1)
                c = braid_coeff(j, x);       // [t,t+1,t] -> [t+1,t,t+1]
            else
                c = -braid_coeff(j, y);      // [t+1,t,t+1] -> [t,t+1,t]
            if (c != 0) {
                Correction corr;
                corr.coeff = c;
                corr.seq.reserve(cur.size() - 3);
                for (size_t k = 0; k < cur.size(); ++k)
                    if (k < static_cast<size_t>(mv.pos) || k > static_cast<size_t>(mv.pos) + 2)
                        corr.seq.push_back(cur[k]);
                if (corr.seq.size() + 3 != cur.size())
                    throw std::logic_error("correction must drop three crossings");
                out.push_back(std::move(corr));
            }
        }
        apply_move(cur, mv);
    }
    if (cur != target) throw std::logic_error("walk_rewrite: did not reach target");
    return out;
}

Element Context::psi_times(int r, int p, int w) const {
    int sp = srp_[r - 1][p];
    Element acc(this);
    if (lengths_[sp] == lengths_[p] + 1) {
        std::vector<int> start;
        start.push_back(r);
        start.insert(start.end(), canon_[p].begin(), canon_[p].end());
        const std::vector<int>& target = canon_[sp];
        auto corrections = walk_rewrite(start, target, w);
        acc.add_term(Monomial{sp, w, std::vector<int32_t>(d_, 0)}, 1);
        for (const auto& corr : corrections)
            acc.add(normalize_seq(corr.seq, std::vector<int32_t>(d_, 0), w), corr.coeff);
    } else {
        // rewrite canon(p) to a word starting with r, then resolve psi_r^2
        std::vector<int> target;
        target.push_back(r);
        target.insert(target.end(), canon_[sp].begin(), canon_[sp].end());
        auto corrections = walk_rewrite(canon_[p], target, w);
        int j_idx = act_[sp][w];  // word under the psi_r^2 pair
        const Word& j = words_[j_idx];
        int jr = j[r - 1], jr1 = j[r];
        if (jr == jr1) {
            // psi_r^2 = 0
        } else if (jr == jr1 + 1 || jr == jr1 - 1) {
            Element base = monomial(sp, std::vector<int32_t>(d_, 0), w);
            Element hi = left_mul_y(r + 1, base), lo = left_mul_y(r, base);
            acc.add(jr == jr1 + 1 ? hi - lo : lo - hi);
        } else {
            acc.add_term(Monomial{sp, w, std::vector<int32_t>(d_, 0)}, 1);
        }
        for (const auto& corr : corrections) {
            Element e = normalize_seq(corr.seq, std::vector<int32_t>(d_, 0), w);
            acc.add(left_mul_psi(r, e), corr.coeff);
        }
    }
    return acc;
}

Element Context::y_times(int s, int p, int w) const {
    const std::vector<int>& R = canon_[p];
    // words to the right of each crossing
    std::vector<int> after(R.size());
    int cur_word = w;
    for (size_t k = R.size(); k-- > 0;) {
        after[k] = cur_word;
        cur_word = sr_word(R[k], cur_word);
    }
    Element acc(this);
    int cur = s;
    for (size_t k = 0; k < R.size(); ++k) {
        int t = R[k];
        int delta_sign = 0;
        if (cur == t + 1) {
            delta_sign = 1;
            cur = t;
        } else if (cur == t) {
            delta_sign = -1;
            cur = t + 1;
        }
        if (delta_sign != 0) {
            const Word& j = words_[after[k]];
            if (j[t - 1] == j[t]) {
                std::vector<int> dropped;
                dropped.reserve(R.size() - 1);
                for (size_t l = 0; l < R.size(); ++l)
                    if (l != k) dropped.push_back(R[l]);
                acc.add(normalize_seq(dropped, std::vector<int32_t>(d_, 0), w), delta_sign);
            }
        }
    }
    std::vector<int32_t> dots(d_, 0);
    dots[cur - 1] = 1;
    acc.add_term(Monomial{p, w, std::move(dots)}, 1);
    return acc;
}

Element Context::left_mul_psi(int r, const Element& x) const {
    if (r < 1 || r >= d_) throw std::invalid_argument("crossing index out of range");
    int P = static_cast<int>(perms_.size()), W = static_cast<int>(words_.size());
    Element acc(this);
    for (const auto& [m, c] : x.terms()) {
        uint64_t key = pack_key(0, r, m.perm, m.word, P, W);
        auto base = cache_get(key);
        if (!base) base = cache_put(key, psi_times(r, m.perm, m.word));
        for (const auto& [bm, bc] : base->terms()) {
            Monomial t = bm;
            for (int k = 0; k < d_; ++k) t.dots[k] += m.dots[k];
            acc.add_term(t, bc * c);
        }
    }
    return acc;
}

Element Context::left_mul_y(int s, const Element& x) const {
    if (s < 1 || s > d_) throw std::invalid_argument("dot index out of range");
    int P = static_cast<int>(perms_.size()), W = static_cast<int>(words_.size());
    Element acc(this);
    for (const auto& [m, c] : x.terms()) {
        uint64_t key = pack_key(1, s, m.perm, m.word, P, W);
        auto base = cache_get(key);
        if (!base) base = cache_put(key, y_times(s, m.perm, m.word));
        for (const auto& [bm, bc] : base->terms()) {
            Monomial t = bm;
            for (int k = 0; k < d_; ++k) t.dots[k] += m.dots[k];
            acc.add_term(t, bc * c);
        }
    }
    return acc;
}

Element Context::left_mul_idem(int w, const Element& x) const {
    Element acc(this);
    for (const auto& [m, c] : x.terms())
        if (act_[m.perm][m.word] == w) acc.add_term(m, c);
    return acc;
}

Element Context::left_mul(const Gen& g, const Element& x) const {
    switch (g.kind) {
        case Gen::Idem: return left_mul_idem(word_index(g.word), x);
        case Gen::Dot: return left_mul_y(g.r, x);
        case Gen::Cross: return left_mul_psi(g.r, x);
    }
    return zero();
}

Element Context::left_mul_poly(const Poly& f, const Element& x) const {
    if (f.nvars() != d_) throw std::invalid_argument("polynomial arity mismatch");
    Element acc(this);
    for (const auto& [e, c] : f.terms()) {
        Element cur = x;
        for (int s = 1; s <= d_; ++s)
            for (int t = 0; t < e[s - 1]; ++t) cur = left_mul_y(s, cur);
        acc.add(cur, c);
    }
    return acc;
}

Element Context::normalize_seq(const std::vector<int>& seq, const std::vector<int32_t>& dots,
                               int word) const {
    Element acc = monomial(id_perm_, dots.empty() ? std::vector<int32_t>(d_, 0) : dots, word);
    for (size_t k = seq.size(); k-- > 0;) acc = left_mul_psi(seq[k], acc);
    return acc;
}

// ---------------------------------------------------------------------------

Element mul(const Element& x, const Element& y) {
    const Context* ctx = x.ctx() ? x.ctx() : y.ctx();
    if (!ctx) return Element();
    if (x.ctx() && y.ctx() && x.ctx() != y.ctx())
        throw std::invalid_argument("ambient mismatch in mul");
    Element acc(ctx);
    for (const auto& [m, c] : x.terms()) {
        Element z = ctx->left_mul_idem(m.word, y);
        if (z.is_zero()) continue;
        for (int s = 1; s <= ctx->d(); ++s)
            for (int t = 0; t < m.dots[s - 1]; ++t) z = ctx->left_mul_y(s, z);
        const auto& R = ctx->canon_word(m.perm);
        for (size_t k = R.size(); k-- > 0;) z = ctx->left_mul_psi(R[k], z);
        acc.add(z, c);
    }
    return acc;
}

std::shared_ptr<const Element> Context::tau_core(int p) const {
    int P = static_cast<int>(perms_.size()), W = static_cast<int>(words_.size());
    uint64_t key = pack_key(2, 0, p, 0, P, W);
    auto cached = cache_get(key);
    if (cached) return cached;
    std::vector<int> rev(canon_[p].rbegin(), canon_[p].rend());
    Element acc(this);
    for (int j = 0; j < W; ++j)
        acc.add(normalize_seq(rev, std::vector<int32_t>(d_, 0), j));
    return cache_put(key, std::move(acc));
}

Element tau(const Element& x) {
    const Context* ctx = x.ctx();
    if (!ctx) return x;
    Element acc(ctx);
    for (const auto& [m, c] : x.terms()) {
        Element e = *ctx->tau_core(m.perm);
        for (int s = 1; s <= ctx->d(); ++s)
            for (int t = 0; t < m.dots[s - 1]; ++t) e = ctx->left_mul_y(s, e);
        acc.add(ctx->left_mul_idem(m.word, e), c);
    }
    return acc;
}

long min_degree_bound(const Context& ctx) {
    return -static_cast<long>(ctx.d()) * (ctx.d() - 1);
}

static bool dot_multiple_rec(const Context& ctx, int slot, long rem, const Element& cur,
                             const std::function<bool(const Element&)>& fn) {
    if (slot == ctx.d()) {
        Element leaf = cur;
        for (long t = 0; t < rem; ++t) leaf = ctx.left_mul_y(ctx.d(), leaf);
        return fn(leaf);
    }
    Element running = cur;
    for (long x = 0; x <= rem; ++x) {
        if (!dot_multiple_rec(ctx, slot + 1, rem - x, running, fn)) return false;
        if (x < rem) running = ctx.left_mul_y(slot, running);
    }
    return true;
}

bool for_each_dot_multiple(const Context& ctx, long total, const Element& x,
                           const std::function<bool(const Element&)>& fn) {
    if (ctx.d() == 0) return total == 0 ? fn(x) : true;
    if (ctx.d() == 1) {
        Element leaf = x;
        for (long t = 0; t < total; ++t) leaf = ctx.left_mul_y(1, leaf);
        return fn(leaf);
    }
    return dot_multiple_rec(ctx, 1, total, x, fn);
}

bool term_order(const Context& ctx, const Monomial& a, const Monomial& b) {
    long da = ctx.degree(a), db = ctx.degree(b);
    if (da != db) return da < db;
    const auto& pa = ctx.perms()[a.perm].oneline();
    const auto& pb = ctx.perms()[b.perm].oneline();
    if (pa != pb) return pa < pb;
    if (a.dots != b.dots) return a.dots > b.dots;  // leading dot monomial first
    return ctx.words()[a.word] < ctx.words()[b.word];
}

static void compositions(int total, int parts, std::vector<int32_t>& cur,
                         const std::function<void(const std::vector<int32_t>&)>& emit) {
    if (parts == 1) {
        cur.push_back(total);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (int k = total; k >= 0; --k) {
        cur.push_back(k);
        compositions(total - k, parts - 1, cur, emit);
        cur.pop_back();
    }
}

std::vector<Monomial> pbw_basis_at_degree(const Context& ctx, long n) {
    std::vector<Monomial> out;
    int P = static_cast<int>(ctx.perms().size()), W = static_cast<int>(ctx.words().size());
    for (int p = 0; p < P; ++p)
        for (int w = 0; w < W; ++w) {
            long rem = n - ctx.deg0(p, w);
            if (rem < 0 || rem % 2 != 0) continue;
            int k = static_cast<int>(rem / 2);
            if (ctx.d() == 0) {
                if (k == 0) out.push_back(Monomial{p, w, {}});
                continue;
            }
            std::vector<int32_t> cur;
            compositions(k, ctx.d(), cur, [&](const std::vector<int32_t>& dots) {
                out.push_back(Monomial{p, w, dots});
            });
        }
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return term_order(ctx, a, b); });
    return out;
}

DegreeBasis degree_basis(const Context& ctx, long n) {
    DegreeBasis b;
    b.degree = n;
    b.monomials = pbw_basis_at_degree(ctx, n);
    for (int k = 0; k < static_cast<int>(b.monomials.size()); ++k) b.index[b.monomials[k]] = k;
    return b;
}

SparseVec coords(const Element& x, const DegreeBasis& basis) {
    std::map<int, Int> acc;
    for (const auto& [m, c] : x.terms()) {
        if (x.ctx()->degree(m) != basis.degree) continue;
        auto it = basis.index.find(m);
        if (it == basis.index.end()) throw std::logic_error("monomial outside basis");
        acc[it->second] = c;
    }
    SparseVec v;
    v.reserve(acc.size());
    for (auto& [col, c] : acc) v.emplace_back(col, std::move(c));
    return v;
}

QSeries dim_q_pbw(const Context& ctx, long N) {
    long M = N + 2 * std::abs(min_degree_bound(ctx)) + 2;
    QSeries base(min_degree_bound(ctx), M);
    for (int p = 0; p < static_cast<int>(ctx.perms().size()); ++p)
        for (int w = 0; w < static_cast<int>(ctx.words().size()); ++w) {
            long e = ctx.deg0(p, w);
            base.set_coeff(e, base.coeff(e) + 1);
        }
    QSeries geom = QSeries::inv_one_minus(2, M);
    QSeries r = base;
    for (int k = 0; k < ctx.d(); ++k) r = r * geom;
    return r.truncated(N);
}

// --- relation suite ---------------------------------------------------------

std::vector<CheckResult> verify_relations(const Context& ctx) {
    std::vector<CheckResult> out;
    const std::string alpha = ctx.alpha().to_text();
    auto record = [&](const std::string& check, bool ok, const std::string& witness = "") {
        out.push_back(CheckResult{"relations", check, alpha, "", std::nullopt, ok, witness});
    };
    int d = ctx.d();
    int W = static_cast<int>(ctx.words().size());
    std::vector<Element> e(W);
    for (int w = 0; w < W; ++w) e[w] = ctx.idem(w);
    std::vector<Element> y(d + 1, ctx.zero()), psi(d, ctx.zero());
    for (int r = 1; r <= d; ++r) y[r] = ctx.gen_element(Gen::dot(r));
    for (int r = 1; r < d; ++r) psi[r] = ctx.gen_element(Gen::cross(r));
    Element unit = ctx.one();

    auto word_text = [&](int w) {
        std::string s = "(";
        for (size_t k = 0; k < ctx.words()[w].size(); ++k)
            s += (k ? "," : "") + std::to_string(ctx.words()[w][k]);
        return s + ")";
    };

    bool ok = true;
    std::string wit;
    for (int a = 0; a < W && ok; ++a)
        for (int b = 0; b < W && ok; ++b) {
            Element expect = (a == b) ? e[a] : ctx.zero();
            if (!(mul(e[a], e[b]) == expect)) { ok = false; wit = word_text(a) + word_text(b); }
        }
    record("idempotents e(i)e(j)=delta e(i)", ok, wit);

    ok = true; wit.clear();
    for (int r = 1; r <= d && ok; ++r)
        if (!(mul(unit, y[r]) == y[r] && mul(y[r], unit) == y[r])) { ok = false; wit = "y" + std::to_string(r); }
    for (int r = 1; r < d && ok; ++r)
        if (!(mul(unit, psi[r]) == psi[r] && mul(psi[r], unit) == psi[r])) { ok = false; wit = "psi" + std::to_string(r); }
    record("sum of idempotents is the unit", ok, wit);

    ok = true; wit.clear();
    for (int r = 1; r <= d && ok; ++r)
        for (int w = 0; w < W && ok; ++w)
            if (!(mul(y[r], e[w]) == mul(e[w], y[r]))) { ok = false; wit = "y" + std::to_string(r) + word_text(w); }
    record("y_r e(i) = e(i) y_r", ok, wit);

    ok = true; wit.clear();
    for (int r = 1; r < d && ok; ++r)
        for (int w = 0; w < W && ok; ++w)
            if (!(mul(psi[r], e[w]) == mul(e[ctx.sr_word(r, w)], psi[r]))) { ok = false; wit = "psi" + std::to_string(r) + word_text(w); }
    record("psi_r e(i) = e(s_r i) psi_r", ok, wit);

    ok = true; wit.clear();
    for (int r = 1; r <= d && ok; ++r)
        for (int s = 1; s <= d && ok; ++s)
            if (!(mul(y[r], y[s]) == mul(y[s], y[r]))) { ok = false; wit = "y y"; }
    record("y_r y_s = y_s y_r", ok, wit);

    ok = true; wit.clear();
    for (int r = 1; r < d && ok; ++r)
        for (int s = 1; s <= d && ok; ++s) {
            if (s == r || s == r + 1) continue;
            if (!(mul(psi[r], y[s]) == mul(y[s], psi[r]))) { ok = false; wit = "psi" + std::to_string(r) + " y" + std::to_string(s); }
        }
    record("psi_r y_s = y_s psi_r (s != r,r+1)", ok, wit);

    ok = true; wit.clear();
    for (int r = 1; r < d && ok; ++r)
        for (int s = 1; s < d && ok; ++s) {
            if (std::abs(r - s) <= 1) continue;
            if (!(mul(psi[r], psi[s]) == mul(psi[s], psi[r]))) { ok = false; wit = "psi psi"; }
        }
    record("psi_r psi_s = psi_s psi_r (|r-s|>1)", ok, wit);

    ok = true; wit.clear();
    for (int r = 1; r < d && ok; ++r)
        for (int w = 0; w < W && ok; ++w) {
            const Word& i = ctx.words()[w];
            int delta = (i[r - 1] == i[r]) ? 1 : 0;
            Element lhs = mul(psi[r], mul(y[r + 1], e[w]));
            Element rhs = mul(y[r], mul(psi[r], e[w])) + e[w].scaled(delta);
            if (!(lhs == rhs)) { ok = false; wit = "r=" + std::to_string(r) + " i=" + word_text(w); }
        }
    record("psi_r y_{r+1} e(i) = (y_r psi_r + delta) e(i)", ok, wit);

    ok = true; wit.clear();
    for (int r = 1; r < d && ok; ++r)
        for (int w = 0; w < W && ok; ++w) {
            const Word& i = ctx.words()[w];
            int delta = (i[r - 1] == i[r]) ? 1 : 0;
            Element lhs = mul(y[r + 1], mul(psi[r], e[w]));
            Element rhs = mul(psi[r], mul(y[r], e[w])) + e[w].scaled(delta);
            if (!(lhs == rhs)) { ok = false; wit = "r=" + std::to_string(r) + " i=" + word_text(w); }
        }
    record("y_{r+1} psi_r e(i) = (psi_r y_r + delta) e(i)", ok, wit);

    ok = true; wit.clear();
    for (int r = 1; r < d && ok; ++r)
        for (int w = 0; w < W && ok; ++w) {
            const Word& i = ctx.words()[w];
            Element lhs = mul(psi[r], mul(psi[r], e[w]));
            Element rhs = ctx.zero();
            if (i[r - 1] == i[r]) {
                // zero
            } else if (std::abs(i[r - 1] - i[r]) > 1) {
                rhs = e[w];
            } else if (i[r - 1] == i[r] + 1) {
                rhs = mul(y[r + 1], e[w]) - mul(y[r], e[w]);
            } else {
                rhs = mul(y[r], e[w]) - mul(y[r + 1], e[w]);
            }
            if (!(lhs == rhs)) { ok = false; wit = "r=" + std::to_string(r) + " i=" + word_text(w); }
        }
    record("psi_r^2 e(i) case table", ok, wit);

    ok = true; wit.clear();
    for (int r = 1; r + 1 < d && ok; ++r)
        for (int w = 0; w < W && ok; ++w) {
            const Word& i = ctx.words()[w];
            int c = 0;
            if (i[r + 1] == i[r - 1] && i[r - 1] == i[r] + 1) c = 1;
            if (i[r + 1] == i[r - 1] && i[r - 1] == i[r] - 1) c = -1;
            Element lhs = mul(psi[r], mul(psi[r + 1], mul(psi[r], e[w])));
            Element rhs = mul(psi[r + 1], mul(psi[r], mul(psi[r + 1], e[w]))) + e[w].scaled(c);
            if (!(lhs == rhs)) { ok = false; wit = "r=" + std::to_string(r) + " i=" + word_text(w); }
        }
    record("braid relation with correction term", ok, wit);

    return out;
}

// --- rendering ---------------------------------------------------------------

std::string Element::to_text() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, Int>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
        return term_order(*ctx_, a->first, b->first);
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        if (!first) os << " + ";
        os << "(" << t->second << ")";
        const auto& cw = ctx_->canon_word(t->first.perm);
        if (!cw.empty()) {
            os << "*psi[";
            for (size_t k = 0; k < cw.size(); ++k) os << (k ? "," : "") << cw[k];
            os << "]";
        }
        bool any_dot = false;
        for (int32_t e : t->first.dots) any_dot = any_dot || e > 0;
        if (any_dot) {
            os << "*y[";
            for (size_t k = 0; k < t->first.dots.size(); ++k)
                os << (k ? "," : "") << t->first.dots[k];
            os << "]";
        }
        os << "*e(";
        const Word& i = ctx_->words()[t->first.word];
        for (size_t k = 0; k < i.size(); ++k) os << (k ? "," : "") << i[k];
        os << ")";
        first = false;
    }
    return os.str();
}

std::string Element::to_json() const {
    std::vector<const std::pair<const Monomial, Int>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    if (ctx_)
        std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
            return term_order(*ctx_, a->first, b->first);
        });
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto* t : ts) {
        if (!first) os << ",";
        os << "{\"coeff\":\"" << t->second << "\",\"psi\":[";
        const auto& cw = ctx_->canon_word(t->first.perm);
        for (size_t k = 0; k < cw.size(); ++k) os << (k ? "," : "") << cw[k];
        os << "],\"y\":[";
        for (size_t k = 0; k < t->first.dots.size(); ++k) os << (k ? "," : "") << t->first.dots[k];
        os << "],\"e\":[";
        const Word& i = ctx_->words()[t->first.word];
        for (size_t k = 0; k < i.size(); ++k) os << (k ? "," : "") << i[k];
        os << "]}";
        first = false;
    }
    os << "]";
    return os.str();
}

}  // namespace klr
