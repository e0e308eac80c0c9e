#include "klr/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klr {

Poly Poly::one(int n) {
    Poly p(n);
    p.terms_[std::vector<int>(n, 0)] = 1;
    return p;
}

Poly Poly::var(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("variable index out of range");
    Poly p(n);
    std::vector<int> e(n, 0);
    e[r - 1] = 1;
    p.terms_[e] = 1;
    return p;
}

void Poly::add_term(const std::vector<int>& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int Poly::coeff(const std::vector<int>& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(nvars_);
    std::vector<int> e(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (int k = 0; k < nvars_; ++k) e[k] = e1[k] + e2[k];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Poly Poly::scaled(const Int& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

long Poly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<long>(std::accumulate(e.begin(), e.end(), 0)));
    return d;
}

bool Poly::is_homogeneous(long* deg) const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = std::accumulate(e.begin(), e.end(), 0L);
        if (d == -1) d = t;
        else if (d != t) return false;
    }
    if (deg) *deg = d;
    return true;
}

Poly Poly::swap_vars(int r) const {
    if (r < 1 || r >= nvars_) throw std::invalid_argument("swap_vars index out of range");
    Poly p(nvars_);
    for (const auto& [e, c] : terms_) {
        auto e2 = e;
        std::swap(e2[r - 1], e2[r]);
        p.terms_[e2] = c;
    }
    return p;
}

bool Poly::is_symmetric() const {
    for (int r = 1; r < nvars_; ++r)
        if (!(swap_vars(r) == *this)) return false;
    return true;
}

bool Poly::is_symmetric_in(const std::vector<int>& vars) const {
    for (size_t k = 0; k + 1 < vars.size(); ++k) {
        // transpose variables vars[k], vars[k+1]
        Poly p(nvars_);
        for (const auto& [e, c] : terms_) {
            auto e2 = e;
            std::swap(e2[vars[k] - 1], e2[vars[k + 1] - 1]);
            p.add_term(e2, c);
        }
        if (!(p == *this)) return false;
    }
    return true;
}

std::string Poly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c << ")";
        for (int k = 0; k < nvars_; ++k)
            if (e[k] > 0) {
                os << "*y" << (k + 1);
                if (e[k] > 1) os << "^" << e[k];
            }
        first = false;
    }
    return os.str();
}

Poly divided_difference(int r, const Poly& f) {
    if (r < 1 || r >= f.nvars()) throw std::invalid_argument("divided_difference index");
    Poly out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        int a = e[r - 1], b = e[r];
        if (a == b) continue;
        auto base = e;
        if (b > a) {
            // (y^a z^b - y^b z^a)/(z-y) = sum_t y^{b-1-t} z^{a+t}, t=0..b-a-1
            for (int t = 0; t <= b - a - 1; ++t) {
                base[r - 1] = b - 1 - t;
                base[r] = a + t;
                out.add_term(base, c);
            }
        } else {
            for (int t = 0; t <= a - b - 1; ++t) {
                base[r - 1] = a - 1 - t;
                base[r] = b + t;
                out.add_term(base, -c);
            }
        }
    }
    return out;
}

Poly monomial_symmetric(int nvars, const std::vector<int>& lambda,
                        const std::vector<int>& vars) {
    if (lambda.size() > vars.size())
        throw std::invalid_argument("partition has more parts than variables");
    std::vector<int> padded(vars.size(), 0);
    std::copy(lambda.begin(), lambda.end(), padded.begin());
    std::sort(padded.begin(), padded.end());
    Poly out(nvars);
    std::vector<int> e(nvars, 0);
    do {
        for (size_t k = 0; k < vars.size(); ++k) e[vars[k] - 1] = padded[k];
        out.add_term(e, 1);
        for (size_t k = 0; k < vars.size(); ++k) e[vars[k] - 1] = 0;
    } while (std::next_permutation(padded.begin(), padded.end()));
    return out;
}

static void partitions_rec(int maxpart, int parts, int size, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if (size == 0) {
        out.push_back(cur);
        return;
    }
    if (parts == 0) return;
    for (int p = std::min(maxpart, size); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(p, parts - 1, size - p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions_at_most(int parts, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (size == 0) {
        out.push_back({});
        return out;
    }
    partitions_rec(size, parts, size, cur, out);
    return out;
}

}  // namespace klr
