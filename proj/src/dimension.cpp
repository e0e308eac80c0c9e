#include "klr/dimension.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace klr {

QSeries c_pi(const Context& ctx, const RootPartition& pi, long N) {
    int iw = ctx.word_index(pi.word());
    QSeries s(0, N);
    long sh = pi.sh();
    for (const auto& w : min_coset_reps(pi)) {
        long e = sh + ctx.deg0(ctx.perm_index(w), iw);
        if (e <= N) s.set_coeff(e, s.coeff(e) + 1);
    }
    return s;
}

QSeries l_pi(const RootPartition& pi, long N) {
    QSeries s = QSeries::one(N);
    for (const auto& [beta, p] : pi.parts())
        for (int m = 1; m <= p; ++m) s = s * QSeries::inv_one_minus(2 * m, N);
    return s;
}

static std::vector<long> lambda_degree_counts(const RootPartition& pi, long max_half) {
    // counts[h] = number of tuples of partitions (lambda^k with <= p_k parts)
    // with total size h
    std::vector<long> counts(max_half + 1, 0);
    counts[0] = 1;
    for (const auto& [beta, p] : pi.parts()) {
        // partition counts with at most p parts, by size
        std::vector<long> pc(max_half + 1, 0);
        for (long h = 0; h <= max_half; ++h)
            pc[h] = static_cast<long>(partitions_at_most(p, static_cast<int>(h)).size());
        std::vector<long> next(max_half + 1, 0);
        for (long a = 0; a <= max_half; ++a)
            if (counts[a] != 0)
                for (long b = 0; a + b <= max_half; ++b) next[a + b] += counts[a] * pc[b];
        counts = std::move(next);
    }
    return counts;
}

long cell_tuple_count(const Context& ctx, const RootPartition& pi, long n) {
    int iw = ctx.word_index(pi.word());
    long sh = pi.sh();
    auto reps = min_coset_reps(pi);
    std::vector<long> degs;
    degs.reserve(reps.size());
    for (const auto& w : reps) degs.push_back(ctx.deg0(ctx.perm_index(w), iw));
    long max_half = std::max<long>(0, (n - 2 * sh + 2 * static_cast<long>(ctx.d()) *
                                                        (ctx.d() - 1)) / 2);
    auto counts = lambda_degree_counts(pi, max_half);
    long total = 0;
    for (long dw : degs)
        for (long dv : degs) {
            long rem = n - dw - dv - 2 * sh;
            if (rem < 0 || rem % 2 != 0) continue;
            if (rem / 2 <= max_half) total += counts[rem / 2];
        }
    return total;
}

DimReport dim_check(const Context& ctx, long N) {
    DimReport rep;
    rep.alpha = ctx.alpha();
    rep.cutoff = N;
    rep.pbw = QSeries(min_degree_bound(ctx), N);
    for (long n = min_degree_bound(ctx); n <= N; ++n)
        rep.pbw.set_coeff(n, static_cast<long>(pbw_basis_at_degree(ctx, n).size()));

    long M = N + 4 * std::abs(min_degree_bound(ctx)) + 4;
    QSeries sum(min_degree_bound(ctx), M);
    auto partitions = root_partitions(ctx.alpha());
    for (const auto& pi : partitions) {
        QSeries c = c_pi(ctx, pi, M);
        sum = sum + c * c * l_pi(pi, M);
    }
    rep.formula = sum.truncated(N);

    rep.cellular = QSeries(min_degree_bound(ctx), N);
    for (long n = min_degree_bound(ctx); n <= N; ++n) {
        long total = 0;
        for (const auto& pi : partitions) total += cell_tuple_count(ctx, pi, n);
        rep.cellular.set_coeff(n, total);
    }

    auto c1 = rep.pbw.compare(rep.formula);
    auto c2 = rep.pbw.compare(rep.cellular);
    rep.agree = c1.equal && c2.equal;
    rep.first_diff = c1.equal ? (c2.equal ? 0 : c2.first_diff) : c1.first_diff;
    return rep;
}

std::string DimReport::to_text() const {
    std::ostringstream os;
    os << "graded dimension of R_alpha, alpha = " << alpha.to_text() << ", cutoff " << cutoff
       << "\n";
    long lo = std::min(pbw.lo(), std::min(formula.lo(), cellular.lo()));
    os << std::setw(6) << "n" << std::setw(14) << "pbw" << std::setw(14) << "formula"
       << std::setw(14) << "cellular" << "\n";
    for (long n = lo; n <= cutoff; ++n) {
        Int a = pbw.coeff(n), b = formula.coeff(n), c = cellular.coeff(n);
        if (a == 0 && b == 0 && c == 0) continue;
        os << std::setw(6) << n << std::setw(14) << a.str() << std::setw(14) << b.str()
           << std::setw(14) << c.str() << "\n";
    }
    os << (agree ? "agreement: yes" : ("agreement: NO, first difference at q^" +
                                       std::to_string(first_diff)))
       << "\n";
    return os.str();
}

std::string DimReport::to_json() const {
    nlohmann::json j;
    j["alpha"] = alpha.to_text();
    j["cutoff"] = cutoff;
    j["pbw"] = nlohmann::json::parse(pbw.to_json());
    j["formula"] = nlohmann::json::parse(formula.to_json());
    j["cellular"] = nlohmann::json::parse(cellular.to_json());
    j["agree"] = agree;
    if (!agree) j["first_diff"] = first_diff;
    return j.dump(2);
}

}  // namespace klr
