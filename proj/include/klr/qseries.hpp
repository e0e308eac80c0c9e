#pragma once

#include <map>
#include <string>

#include "klr/bigint.hpp"

namespace klr {

/// Truncated integer Laurent series in q. Coefficients of q^n for n > cutoff
/// are unknown and never reported; `lo` bounds the least exponent that can be
/// nonzero. Values are immutable once built.
class QSeries {
public:
    QSeries() : lo_(0), cutoff_(0) {}
    QSeries(long lo, long cutoff) : lo_(lo), cutoff_(cutoff) {}

    static QSeries zero(long cutoff) { return QSeries(0, cutoff); }
    static QSeries one(long cutoff);
    static QSeries monomial(const Int& c, long expo, long cutoff);

    /// sum_{m >= 0} q^{k m} truncated at N; requires k >= 1.
    static QSeries inv_one_minus(long k, long N);

    long lo() const { return lo_; }
    long cutoff() const { return cutoff_; }
    const std::map<long, Int>& coeffs() const { return coeffs_; }

    Int coeff(long n) const;
    void set_coeff(long n, const Int& c);
    bool is_zero_on_known_range() const { return coeffs_.empty(); }

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries truncated(long N) const;

    struct Comparison {
        bool equal;
        long lo;       // lowest exponent compared
        long hi;       // highest exponent compared
        long first_diff;  // valid when !equal
    };
    /// Coefficientwise comparison on the common known range only.
    Comparison compare(const QSeries& o) const;

    std::string to_text() const;
    std::string to_json() const;

private:
    long lo_;
    long cutoff_;
    std::map<long, Int> coeffs_;

    void trim();
};

}  // namespace klr
