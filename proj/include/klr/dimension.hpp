#pragma once

#include "klr/engine.hpp"

namespace klr {

/// q^{sh(pi)} sum over S^pi of q^{deg psi_w e(i_pi)}; exact Laurent
/// polynomial reported with cutoff N.
QSeries c_pi(const Context& ctx, const RootPartition& pi, long N);

/// prod_k prod_{m=1}^{p_k} 1/(1 - q^{2m}) truncated at N.
QSeries l_pi(const RootPartition& pi, long N);

struct DimReport {
    RootVector alpha;
    long cutoff = 0;
    QSeries pbw;       // PBW monomial count by degree
    QSeries formula;   // sum over pi of l_pi c_pi^2
    QSeries cellular;  // cellular tuple enumeration by degree
    bool agree = false;
    long first_diff = 0;

    std::string to_text() const;
    std::string to_json() const;
};

DimReport dim_check(const Context& ctx, long N);

/// Number of cellular tuples (w, lambda, v) for pi at exact degree n.
long cell_tuple_count(const Context& ctx, const RootPartition& pi, long n);

}  // namespace klr
