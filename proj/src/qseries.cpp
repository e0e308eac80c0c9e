#include "klr/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klr {

QSeries QSeries::one(long cutoff) {
    QSeries s(0, cutoff);
    if (cutoff >= 0) s.coeffs_[0] = 1;
    return s;
}

QSeries QSeries::monomial(const Int& c, long expo, long cutoff) {
    QSeries s(std::min(expo, cutoff), cutoff);
    if (expo <= cutoff && c != 0) s.coeffs_[expo] = c;
    return s;
}

QSeries QSeries::inv_one_minus(long k, long N) {
    if (k <= 0) throw std::invalid_argument("inv_one_minus: k must be >= 1");
    QSeries s(0, N);
    for (long m = 0; k * m <= N; ++m) s.coeffs_[k * m] = 1;
    return s;
}

Int QSeries::coeff(long n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void QSeries::set_coeff(long n, const Int& c) {
    if (n < lo_ || n > cutoff_) {
        if (c == 0) return;
        if (n > cutoff_) throw std::invalid_argument("set_coeff beyond cutoff");
        lo_ = n;
    }
    if (c == 0)
        coeffs_.erase(n);
    else
        coeffs_[n] = c;
}

void QSeries::trim() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0 || it->first < lo_ || it->first > cutoff_)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r(std::min(lo_, o.lo_), std::min(cutoff_, o.cutoff_));
    r.coeffs_ = coeffs_;
    for (const auto& [e, c] : o.coeffs_) r.coeffs_[e] += c;
    r.trim();
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
    QSeries r(std::min(lo_, o.lo_), std::min(cutoff_, o.cutoff_));
    r.coeffs_ = coeffs_;
    for (const auto& [e, c] : o.coeffs_) r.coeffs_[e] -= c;
    r.trim();
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
    // Unknown coefficients of one factor first pollute the product at
    // (cutoff+1) + lo of the other factor.
    long cut = std::min(cutoff_ + o.lo_, o.cutoff_ + lo_);
    QSeries r(lo_ + o.lo_, cut);
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) {
            long e = e1 + e2;
            if (e <= cut) r.coeffs_[e] += c1 * c2;
        }
    r.trim();
    return r;
}

QSeries QSeries::truncated(long N) const {
    QSeries r(lo_, std::min(cutoff_, N));
    for (const auto& [e, c] : coeffs_)
        if (e <= r.cutoff_) r.coeffs_[e] = c;
    return r;
}

QSeries::Comparison QSeries::compare(const QSeries& o) const {
    Comparison cmp;
    cmp.lo = std::min(lo_, o.lo_);
    cmp.hi = std::min(cutoff_, o.cutoff_);
    cmp.equal = true;
    cmp.first_diff = 0;
    for (long n = cmp.lo; n <= cmp.hi; ++n) {
        if (coeff(n) != o.coeff(n)) {
            cmp.equal = false;
            cmp.first_diff = n;
            return cmp;
        }
    }
    return cmp;
}

std::string QSeries::to_text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        os << c << "*q^" << e;
        first = false;
    }
    if (first) os << "0";
    os << " (mod q^" << (cutoff_ + 1) << ")";
    return os.str();
}

std::string QSeries::to_json() const {
    std::ostringstream os;
    os << "{\"lo\":" << lo_ << ",\"cutoff\":" << cutoff_ << ",\"coeffs\":{";
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << ",";
        os << "\"" << e << "\":\"" << c << "\"";
        first = false;
    }
    os << "}}";
    return os.str();
}

}  // namespace klr
