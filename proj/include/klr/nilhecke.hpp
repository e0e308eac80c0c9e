#pragma once

#include <memory>

#include "klr/engine.hpp"

namespace klr {

/// The affine nilHecke algebra H_a realized as R_{a alpha_i} for a single
/// vertex; all words coincide, so there is one idempotent and crossings
/// square to zero.
class NilHecke {
public:
    explicit NilHecke(int a, int vertex = 1, size_t cache_limit = size_t(1) << 20);

    int a() const { return a_; }
    const Context& ctx() const { return *ctx_; }

    Element delta() const;                       // y_2 y_3^2 ... y_a^{a-1}
    Element e_idem() const;                      // psi_{w_0} delta_a
    Element psi_w0() const;
    Element from_poly(const Poly& f) const;      // f(y) as an element
    Element psi_w(const Permutation& w) const;

    Poly delta_poly() const;
    Poly schubert(const Permutation& w) const;   // psi_w(delta_a)

    /// Unique Lambda_a-coefficients with f = sum_w c_w psi_w(delta_a),
    /// solved per degree over the integer lattice of monomials.
    std::map<std::vector<int>, Poly> schubert_expand(const Poly& f) const;

    /// Same coefficients by triangular divided-difference extraction:
    /// applying partial_{w_0 w^{-1}} isolates c_w up to shorter terms.
    std::map<std::vector<int>, Poly> schubert_expand_operators(const Poly& f) const;

    /// Monomial symmetric polynomials of grading degree n as central elements.
    std::vector<Element> center_basis(long n) const;

private:
    int a_;
    int vertex_;
    std::unique_ptr<Context> ctx_;
};

/// Per-degree verification of the nilHecke facts: e_a idempotent,
/// e_a psi_{w0} = psi_{w0}, psi_{w0}(delta)=1, P_a ~ H_a e_a, Lambda_a ~ e_a H_a e_a, H_a e_a H_a = H_a,
/// and the cellular set {psi_w b_x delta e_a psi_v^tau} as a unimodular
/// change of basis against the PBW basis.
std::vector<CheckResult> verify_nilhecke(int a, long N, int threads = 1);

}  // namespace klr
