#include "klr/nilhecke.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace klr {

NilHecke::NilHecke(int a, int vertex, size_t cache_limit) : a_(a), vertex_(vertex) {
    if (a < 1) throw std::invalid_argument("nilHecke rank must be >= 1");
    ctx_ = std::make_unique<Context>(RootVector::simple(vertex, a), cache_limit);
}

Element NilHecke::delta() const {
    std::vector<int32_t> dots(a_);
    for (int s = 0; s < a_; ++s) dots[s] = s;
    return ctx_->monomial(ctx_->identity_perm(), std::move(dots), 0);
}

Element NilHecke::psi_w0() const {
    return ctx_->monomial(ctx_->perm_index(Permutation::longest_element(a_)),
                          std::vector<int32_t>(a_, 0), 0);
}

Element NilHecke::e_idem() const { return mul(psi_w0(), delta()); }

Element NilHecke::from_poly(const Poly& f) const {
    Element out(ctx_.get());
    for (const auto& [e, c] : f.terms()) {
        std::vector<int32_t> dots(e.begin(), e.end());
        out.add_term(Monomial{ctx_->identity_perm(), 0, std::move(dots)}, c);
    }
    return out;
}

Element NilHecke::psi_w(const Permutation& w) const {
    return ctx_->monomial(ctx_->perm_index(w), std::vector<int32_t>(a_, 0), 0);
}

Poly NilHecke::delta_poly() const {
    Poly f = Poly::one(a_);
    for (int s = 2; s <= a_; ++s) {
        Poly ys = Poly::var(a_, s);
        for (int t = 0; t < s - 1; ++t) f = f * ys;
    }
    return f;
}

Poly NilHecke::schubert(const Permutation& w) const {
    Poly f = delta_poly();
    auto word = w.canonical_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) f = divided_difference(*it, f);
    return f;
}

static std::vector<int> all_vars(int a) {
    std::vector<int> v(a);
    for (int k = 0; k < a; ++k) v[k] = k + 1;
    return v;
}

std::map<std::vector<int>, Poly> NilHecke::schubert_expand(const Poly& f) const {
    // Per-degree integer lattice solve against the generators m_lambda * S_w.
    auto perms = Permutation::all(a_);
    std::map<std::vector<int>, Poly> schuberts;
    for (const auto& w : perms) schuberts[w.oneline()] = schubert(w);

    std::map<std::vector<int>, Poly> out;
    for (const auto& w : perms) out[w.oneline()] = Poly::zero(a_);

    // split f into homogeneous components
    std::map<long, Poly> comps;
    for (const auto& [e, c] : f.terms()) {
        long deg = 0;
        for (int x : e) deg += x;
        auto it = comps.find(deg);
        if (it == comps.end()) it = comps.emplace(deg, Poly::zero(a_)).first;
        it->second.add_term(e, c);
    }

    long staircase = static_cast<long>(a_) * (a_ - 1) / 2;
    for (const auto& [D, fD] : comps) {
        // column index: monomials of total degree D
        std::map<std::vector<int>, int> col;
        std::function<void(int, int, std::vector<int>&)> enumerate = [&](int rem, int k,
                                                                         std::vector<int>& cur) {
            if (k == a_ - 1) {
                cur.push_back(rem);
                int id = static_cast<int>(col.size());
                col[cur] = id;
                cur.pop_back();
                return;
            }
            for (int x = rem; x >= 0; --x) {
                cur.push_back(x);
                enumerate(rem - x, k + 1, cur);
                cur.pop_back();
            }
        };
        std::vector<int> cur;
        enumerate(static_cast<int>(D), 0, cur);

        auto poly_coords = [&](const Poly& p) {
            std::map<int, Int> acc;
            for (const auto& [e, c] : p.terms()) acc[col.at(e)] = c;
            SparseVec v;
            for (auto& [k, c] : acc) v.emplace_back(k, std::move(c));
            return v;
        };

        SpanSolver solver(static_cast<int>(col.size()));
        struct GenInfo { std::vector<int> w; std::vector<int> lambda; };
        std::vector<GenInfo> gens;
        for (const auto& w : perms) {
            long sdeg = staircase - w.length();
            long k = D - sdeg;
            if (k < 0) continue;
            const Poly& S = schuberts[w.oneline()];
            if (S.is_zero()) continue;
            for (const auto& lambda : partitions_at_most(a_, static_cast<int>(k))) {
                Poly g = monomial_symmetric(a_, lambda, all_vars(a_)) * S;
                solver.add(poly_coords(g));
                gens.push_back(GenInfo{w.oneline(), lambda});
            }
        }
        auto sol = solver.express(poly_coords(fD));
        if (!sol) throw std::logic_error("schubert_expand: not in the Schubert span");
        for (size_t k = 0; k < gens.size(); ++k) {
            if ((*sol)[k] == 0) continue;
            Poly m = monomial_symmetric(a_, gens[k].lambda, all_vars(a_));
            out[gens[k].w] = out[gens[k].w] + m.scaled((*sol)[k]);
        }
    }

    // uniqueness sanity: reassemble
    Poly back = Poly::zero(a_);
    for (const auto& [w, c] : out)
        if (!c.is_zero()) back = back + c * schuberts[w];
    if (!(back == f)) throw std::logic_error("schubert_expand: reassembly failed");
    for (const auto& [w, c] : out)
        if (!c.is_symmetric()) throw std::logic_error("schubert_expand: coefficient not symmetric");
    return out;
}

std::map<std::vector<int>, Poly> NilHecke::schubert_expand_operators(const Poly& f) const {
    auto perms = Permutation::all(a_);
    std::sort(perms.begin(), perms.end(), [](const Permutation& x, const Permutation& y) {
        if (x.length() != y.length()) return x.length() < y.length();
        return x.oneline() < y.oneline();
    });
    Permutation w0 = Permutation::longest_element(a_);
    std::map<std::vector<int>, Poly> schuberts, out;
    for (const auto& w : perms) schuberts.emplace(w.oneline(), schubert(w));

    auto apply_dd = [&](const Permutation& v, Poly g) {
        auto word = v.canonical_word();
        for (auto it = word.rbegin(); it != word.rend(); ++it) g = divided_difference(*it, g);
        return g;
    };

    for (const auto& w : perms) {
        Permutation v = w0 * w.inverse();
        Poly t = apply_dd(v, f);
        // subtract contributions of strictly shorter u with additive lengths
        for (const auto& u : perms) {
            if (u.length() >= w.length()) break;
            auto it = out.find(u.oneline());
            if (it == out.end() || it->second.is_zero()) continue;
            Permutation vu = v * u;
            if (vu.length() != v.length() + u.length()) continue;
            t = t - it->second * schuberts.at(vu.oneline());
        }
        if (!t.is_symmetric())
            throw std::logic_error("schubert_expand_operators: coefficient not symmetric");
        out[w.oneline()] = std::move(t);
    }
    return out;
}

std::vector<Element> NilHecke::center_basis(long n) const {
    std::vector<Element> out;
    if (n < 0 || n % 2 != 0) return out;
    for (const auto& lambda : partitions_at_most(a_, static_cast<int>(n / 2)))
        out.push_back(from_poly(monomial_symmetric(a_, lambda, all_vars(a_))));
    return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> verify_nilhecke(int a, long N, int threads) {
    NilHecke nh(a);
    const Context& ctx = nh.ctx();
    const std::string alpha = ctx.alpha().to_text();
    std::vector<CheckResult> out;
    auto record = [&](const std::string& check, bool ok, std::optional<long> deg,
                      const std::string& wit = "") {
        out.push_back(CheckResult{"nilhecke", check, alpha, "", deg, ok, wit});
    };

    Element e = nh.e_idem();
    Element pw0 = nh.psi_w0();
    record("e_a is idempotent", mul(e, e) == e, std::nullopt);
    record("e_a psi_w0 = psi_w0", mul(e, pw0) == pw0, std::nullopt);
    record("psi_w0(delta_a) = 1", nh.schubert(Permutation::longest_element(a)) == Poly::one(a),
           std::nullopt);

    auto perms = Permutation::all(a);
    long lo = min_degree_bound(ctx);
    std::vector<long> degrees;
    for (long n = lo; n <= N; ++n) degrees.push_back(n);

    struct DegreeOutcome { std::vector<CheckResult> rs; };
    std::vector<DegreeOutcome> slots(degrees.size());

    // tau(psi_v) elements shared by all degrees
    std::vector<Element> tau_psi(perms.size());
    for (size_t v = 0; v < perms.size(); ++v)
        tau_psi[v] = tau(nh.psi_w(perms[v]));

    parallel_for(static_cast<int>(degrees.size()), threads, [&](int di) {
        long n = degrees[di];
        auto& rs = slots[di].rs;
        auto rec = [&](const std::string& check, bool ok, const std::string& wit = "") {
            rs.push_back(CheckResult{"nilhecke", check, alpha, "", n, ok, wit});
        };
        DegreeBasis basis = degree_basis(ctx, n);
        int dim = basis.dim();

        // (i) f -> f e_a : P_a ~ H_a e_a per degree
        {
            Lattice A(dim);
            int expected = 0;
            if (n >= 0 && n % 2 == 0) {
                for (const auto& m : pbw_basis_at_degree(ctx, n)) {
                    if (ctx.perms()[m.perm].is_identity()) {
                        Element x = ctx.monomial(m.perm, m.dots, m.word);
                        A.add_row(coords(mul(x, e), basis));
                        ++expected;
                    }
                }
            }
            Lattice B(dim);
            for (const auto& m : pbw_basis_at_degree(ctx, n))
                B.add_row(coords(mul(ctx.monomial(m.perm, m.dots, m.word), e), basis));
            rec("H_a e_a matches P_a (rank)", A.rank() == expected,
                A.rank() == expected ? "" : "rank mismatch");
            rec("H_a e_a spanned by P_a e_a", lattice_equal(A, B));
        }

        // (ii) b -> b e_a : Lambda_a ~ e_a H_a e_a per degree
        {
            Lattice A(dim);
            int expected = 0;
            if (n >= 0 && n % 2 == 0) {
                for (const auto& lambda : partitions_at_most(a, static_cast<int>(n / 2))) {
                    Poly b = monomial_symmetric(a, lambda, all_vars(a));
                    A.add_row(coords(mul(nh.from_poly(b), e), basis));
                    ++expected;
                }
            }
            Lattice B(dim);
            for (const auto& m : pbw_basis_at_degree(ctx, n))
                B.add_row(coords(mul(e, mul(ctx.monomial(m.perm, m.dots, m.word), e)), basis));
            rec("e_a H_a e_a matches Lambda_a (rank)", A.rank() == expected);
            rec("e_a H_a e_a spanned by Lambda_a e_a", lattice_equal(A, B));
        }

        // (iii) H_a e_a H_a = H_a per degree: stream psi_w y^m e_a y^{m'}
        // psi_v^tau by increasing total dot count until the span saturates
        {
            Lattice L(dim);
            bool done = dim == 0;
            // length multiset: total dots k is fixed by (l(w), l(v))
            std::map<long, std::vector<int>> by_len;
            for (size_t w = 0; w < perms.size(); ++w)
                by_len[perms[w].length()].push_back(static_cast<int>(w));
            long maxlen = static_cast<long>(a) * (a - 1) / 2;
            for (long k = 0; !done && 2 * k <= n + 4 * maxlen; ++k) {
                if ((n + 2 * k) % 2 != 0) continue;
                for (long lv = 0; lv <= maxlen && !done; ++lv) {
                    for (long lw = 0; lw <= maxlen && !done; ++lw) {
                        if (2 * k != n + 2 * lw + 2 * lv) continue;
                        auto itv = by_len.find(lv);
                        auto itw = by_len.find(lw);
                        if (itv == by_len.end() || itw == by_len.end()) continue;
                        for (int vi : itv->second) {
                            if (done) break;
                            for (long tR = 0; tR <= k && !done; ++tR) {
                                for_each_dot_multiple(ctx, tR, tau_psi[vi],
                                                      [&](const Element& rt) {
                                    Element right = mul(e, rt);
                                    return for_each_dot_multiple(ctx, k - tR, right,
                                                                 [&](const Element& body) {
                                        for (int wi : itw->second) {
                                            Element g = body;
                                            const auto& R =
                                                ctx.canon_word(ctx.perm_index(perms[wi]));
                                            for (size_t q = R.size(); q-- > 0;)
                                                g = ctx.left_mul_psi(R[q], g);
                                            L.add_row(coords(g, basis));
                                            if (L.is_unit()) {
                                                done = true;
                                                return false;
                                            }
                                        }
                                        return true;
                                    });
                                });
                            }
                        }
                    }
                }
            }
            rec("H_a e_a H_a = H_a", done || dim == 0,
                done ? "" : "component not exhausted by ideal");
        }

        // (iv) cellular set is a square unimodular change of basis
        {
            Lattice L(dim);
            int count = 0;
            Element delta_elt = nh.delta();
            for (size_t vi = 0; vi < perms.size(); ++vi) {
                Element yv = mul(e, tau_psi[vi]);
                Element dyv = mul(delta_elt, yv);
                long base = -2 * perms[vi].length() + a * static_cast<long>(a - 1);
                for (size_t wi = 0; wi < perms.size(); ++wi) {
                    long rem = n - base + 2 * perms[wi].length();
                    if (rem < 0 || rem % 2 != 0) continue;
                    for (const auto& lambda :
                         partitions_at_most(a, static_cast<int>(rem / 2))) {
                        Poly b = monomial_symmetric(a, lambda, all_vars(a));
                        Element g = ctx.left_mul_poly(b, dyv);
                        const auto& R = ctx.canon_word(ctx.perm_index(perms[wi]));
                        for (size_t t = R.size(); t-- > 0;) g = ctx.left_mul_psi(R[t], g);
                        L.add_row(coords(g, basis));
                        ++count;
                    }
                }
            }
            bool square = count == dim;
            rec("cellular set count equals PBW dimension", square,
                square ? "" : "count " + std::to_string(count) + " vs dim " + std::to_string(dim));
            rec("cellular set unimodular", dim == 0 || L.is_unit());
        }
    });

    for (auto& s : slots)
        for (auto& r : s.rs) out.push_back(std::move(r));
    sort_results(out);
    return out;
}

}  // namespace klr
