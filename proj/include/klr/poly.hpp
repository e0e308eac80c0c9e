#pragma once

#include <map>
#include <string>
#include <vector>

#include "klr/bigint.hpp"

namespace klr {

/// Sparse multivariate polynomial over Z in variables y_1..y_n, stored by
/// exponent vector.
class Poly {
public:
    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}
    static Poly zero(int n) { return Poly(n); }
    static Poly one(int n);
    static Poly var(int n, int r);  // y_r, 1-based

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& e, const Int& c);
    Int coeff(const std::vector<int>& e) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Int& c) const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    long total_degree() const;  // -1 for zero
    bool is_homogeneous(long* deg = nullptr) const;

    Poly swap_vars(int r) const;  // exchange y_r, y_{r+1}
    bool is_symmetric() const;
    bool is_symmetric_in(const std::vector<int>& vars) const;  // 1-based indices

    std::string to_text() const;

private:
    int nvars_;
    std::map<std::vector<int>, Int> terms_;
};

/// (f - s_r f) / (y_{r+1} - y_r); exact by antisymmetry of the numerator.
Poly divided_difference(int r, const Poly& f);

/// Monomial symmetric polynomial m_lambda placed on the listed variables
/// (1-based); lambda has at most vars.size() parts.
Poly monomial_symmetric(int nvars, const std::vector<int>& lambda,
                        const std::vector<int>& vars);

/// Partitions of `size` into at most `parts` parts, entries descending;
/// enumerated in descending lexicographic order.
std::vector<std::vector<int>> partitions_at_most(int parts, int size);

}  // namespace klr
