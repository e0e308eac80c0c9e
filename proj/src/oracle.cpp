#include "klr/oracle.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>

namespace klr {

Poly PolyVector::component(int w) const {
    auto it = comps_.find(w);
    return it == comps_.end() ? Poly::zero(ctx_->d()) : it->second;
}

void PolyVector::set_component(int w, const Poly& f) {
    if (f.is_zero())
        comps_.erase(w);
    else
        comps_[w] = f;
}

PolyVector PolyVector::operator+(const PolyVector& o) const {
    PolyVector r = *this;
    for (const auto& [w, f] : o.comps_) r.set_component(w, r.component(w) + f);
    return r;
}

PolyVector PolyVector::operator-(const PolyVector& o) const {
    PolyVector r = *this;
    for (const auto& [w, f] : o.comps_) r.set_component(w, r.component(w) - f);
    return r;
}

PolyVector PolyVector::scaled(const Int& c) const {
    PolyVector r(ctx_);
    if (c == 0) return r;
    for (const auto& [w, f] : comps_) r.comps_[w] = f.scaled(c);
    return r;
}

PolyVector act_gen(const Gen& g, const PolyVector& v) {
    const Context* ctx = v.ctx();
    PolyVector out(ctx);
    switch (g.kind) {
        case Gen::Idem: {
            int w = ctx->word_index(g.word);
            out.set_component(w, v.component(w));
            return out;
        }
        case Gen::Dot: {
            Poly yr = Poly::var(ctx->d(), g.r);
            for (const auto& [w, f] : v.components()) out.set_component(w, f * yr);
            return out;
        }
        case Gen::Cross: {
            int r = g.r;
            for (const auto& [w, f] : v.components()) {
                const Word& i = ctx->words()[w];
                int target = ctx->sr_word(r, w);
                Poly g_out = Poly::zero(ctx->d());
                if (i[r - 1] == i[r]) {
                    g_out = divided_difference(r, f);
                } else if (std::abs(i[r - 1] - i[r]) > 1) {
                    g_out = f.swap_vars(r);
                } else if (i[r - 1] == i[r] + 1) {
                    g_out = f.swap_vars(r);
                } else {
                    g_out = (Poly::var(ctx->d(), r + 1) - Poly::var(ctx->d(), r)) * f.swap_vars(r);
                }
                if (!g_out.is_zero()) out.set_component(target, out.component(target) + g_out);
            }
            return out;
        }
    }
    return out;
}

PolyVector act_word_seq(const std::vector<Gen>& gens, const PolyVector& v) {
    PolyVector cur = v;
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) cur = act_gen(*it, cur);
    return cur;
}

PolyVector act(const Element& x, const PolyVector& v) {
    const Context* ctx = v.ctx();
    if (x.ctx() && x.ctx() != ctx) throw std::invalid_argument("ambient mismatch in act");
    PolyVector acc(ctx);
    for (const auto& [m, c] : x.terms()) {
        PolyVector cur(ctx);
        int w = m.word;
        cur.set_component(w, v.component(w));
        for (int s = 1; s <= ctx->d(); ++s)
            for (int t = 0; t < m.dots[s - 1]; ++t) cur = act_gen(Gen::dot(s), cur);
        const auto& R = ctx->canon_word(m.perm);
        for (size_t k = R.size(); k-- > 0;) cur = act_gen(Gen::cross(R[k]), cur);
        acc = acc + cur.scaled(c);
    }
    return acc;
}

static Poly random_poly(std::mt19937& rng, int nvars, int max_deg, int n_terms) {
    Poly f(nvars);
    std::uniform_int_distribution<int> coef(-3, 3), expo(0, max_deg);
    for (int t = 0; t < n_terms; ++t) {
        std::vector<int> e(nvars, 0);
        int budget = max_deg;
        for (int k = 0; k < nvars; ++k) {
            int x = expo(rng) % (budget + 1);
            e[k] = x;
            budget -= x;
        }
        f.add_term(e, coef(rng));
    }
    return f;
}

static std::vector<Gen> random_gen_word(std::mt19937& rng, const Context& ctx, int len) {
    std::vector<Gen> out;
    int d = ctx.d();
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> dot(1, d);
    std::uniform_int_distribution<int> cross(1, std::max(1, d - 1));
    std::uniform_int_distribution<int> wi(0, static_cast<int>(ctx.words().size()) - 1);
    for (int k = 0; k < len; ++k) {
        switch (kind(rng)) {
            case 0: out.push_back(Gen::idem(ctx.words()[wi(rng)])); break;
            case 1: out.push_back(Gen::dot(dot(rng))); break;
            default:
                if (d >= 2)
                    out.push_back(Gen::cross(cross(rng)));
                else
                    out.push_back(Gen::dot(dot(rng)));
        }
    }
    return out;
}

static Element eval_gen_word(const Context& ctx, const std::vector<Gen>& gens) {
    Element acc = ctx.one();
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) acc = ctx.left_mul(*it, acc);
    return acc;
}

static PolyVector random_vector(std::mt19937& rng, const Context& ctx, int max_deg) {
    PolyVector v(&ctx);
    std::uniform_int_distribution<int> wi(0, static_cast<int>(ctx.words().size()) - 1);
    for (int k = 0; k < 2; ++k) {
        int w = wi(rng);
        v.set_component(w, v.component(w) + random_poly(rng, ctx.d(), max_deg, 3));
    }
    return v;
}

std::vector<CheckResult> verify_oracle(const Context& ctx, int n_words, int n_triples,
                                       unsigned seed) {
    std::vector<CheckResult> out;
    const std::string alpha = ctx.alpha().to_text();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> len(0, 6);

    bool ok = true;
    std::string wit;
    for (int t = 0; t < n_words && ok; ++t) {
        auto gens = random_gen_word(rng, ctx, len(rng));
        Element nf = eval_gen_word(ctx, gens);
        for (int v = 0; v < 5 && ok; ++v) {
            PolyVector pv = random_vector(rng, ctx, 6);
            if (!(act_word_seq(gens, pv) == act(nf, pv))) {
                ok = false;
                wit = "word #" + std::to_string(t);
            }
        }
    }
    out.push_back(CheckResult{"oracle", "raw word and normal form act identically", alpha, "",
                              std::nullopt, ok, wit});

    ok = true;
    wit.clear();
    for (int t = 0; t < n_triples && ok; ++t) {
        Element x = eval_gen_word(ctx, random_gen_word(rng, ctx, len(rng) % 5));
        Element y = eval_gen_word(ctx, random_gen_word(rng, ctx, len(rng) % 5));
        PolyVector v = random_vector(rng, ctx, 5);
        if (!(act(mul(x, y), v) == act(x, act(y, v)))) {
            ok = false;
            wit = "triple #" + std::to_string(t);
        }
    }
    out.push_back(CheckResult{"oracle", "module axiom act(xy,v)=act(x,act(y,v))", alpha, "",
                              std::nullopt, ok, wit});
    return out;
}

}  // namespace klr
