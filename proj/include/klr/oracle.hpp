#pragma once

#include <map>

#include "klr/engine.hpp"

namespace klr {

/// Faithful polynomial model: one polynomial in y_1..y_d per word of
/// <I>_alpha. Serves as an independent correctness oracle for the rewriting
/// engine; generators act by projection, multiplication and (twisted)
/// divided differences.
class PolyVector {
public:
    explicit PolyVector(const Context* ctx) : ctx_(ctx) {}

    const Context* ctx() const { return ctx_; }
    const std::map<int, Poly>& components() const { return comps_; }
    Poly component(int w) const;
    void set_component(int w, const Poly& f);

    PolyVector operator+(const PolyVector& o) const;
    PolyVector operator-(const PolyVector& o) const;
    PolyVector scaled(const Int& c) const;
    bool operator==(const PolyVector& o) const { return comps_ == o.comps_; }
    bool is_zero() const { return comps_.empty(); }

private:
    const Context* ctx_;
    std::map<int, Poly> comps_;  // word index -> polynomial, nonzero only
};

PolyVector act_gen(const Gen& g, const PolyVector& v);
PolyVector act_word_seq(const std::vector<Gen>& gens, const PolyVector& v);
PolyVector act(const Element& x, const PolyVector& v);

/// Oracle suite: random generator words act identically via raw word and via
/// engine normal form; module axiom act(xy, v) = act(x, act(y, v)).
std::vector<CheckResult> verify_oracle(const Context& ctx, int n_words, int n_triples,
                                       unsigned seed);

}  // namespace klr
