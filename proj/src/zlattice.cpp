#include "klr/zlattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace klr {

Int floordiv(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

SparseVec sparse_axpy(const SparseVec& a, const Int& q, const SparseVec& b) {
    if (q == 0) return a;
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Int v = q * b[j].second;
            if (v != 0) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Int v = a[i].second + q * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) { return sparse_axpy(a, 1, b); }

SparseVec sparse_scale(const SparseVec& a, const Int& q) {
    if (q == 0) return {};
    SparseVec out = a;
    for (auto& [c, v] : out) v *= q;
    return out;
}

static void extgcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    // g = gcd(a,b) > 0 with g = x*a + y*b
    Int old_r = a, r = b, old_x = 1, x1 = 0, old_y = 0, y1 = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * x1; old_x = x1; x1 = t;
        t = old_y - q * y1; old_y = y1; y1 = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    g = old_r; x = old_x; y = old_y;
}

bool Lattice::add_row(SparseVec v) {
    bool changed = false;
    while (!v.empty()) {
        int c = v.front().first;
        if (c < 0 || c >= dim_) throw std::invalid_argument("column out of range");
        auto it = rows_.find(c);
        if (it == rows_.end()) {
            if (v.front().second < 0) v = sparse_scale(v, -1);
            rows_.emplace(c, std::move(v));
            canonical_ = false;
            return true;
        }
        const Int& p = it->second.front().second;
        const Int& a = v.front().second;
        if (a % p == 0) {
            v = sparse_axpy(v, -(a / p), it->second);
        } else {
            Int g, x, y;
            extgcd(p, a, g, x, y);
            SparseVec newpivot = sparse_axpy(sparse_scale(it->second, x), y, v);
            SparseVec rest = sparse_axpy(sparse_scale(v, p / g), -(a / g), it->second);
            it->second = std::move(newpivot);
            v = std::move(rest);
            changed = true;
            canonical_ = false;
        }
    }
    return changed;
}

bool Lattice::member(SparseVec v) const {
    while (!v.empty()) {
        int c = v.front().first;
        auto it = rows_.find(c);
        if (it == rows_.end()) return false;
        const Int& p = it->second.front().second;
        const Int& a = v.front().second;
        if (a % p != 0) return false;
        v = sparse_axpy(v, -(a / p), it->second);
    }
    return true;
}

bool Lattice::member_dense(const std::vector<Int>& v) const {
    SparseVec s;
    for (int c = 0; c < static_cast<int>(v.size()); ++c)
        if (v[c] != 0) s.emplace_back(c, v[c]);
    return member(std::move(s));
}

bool Lattice::is_unit() const {
    if (rank() != dim_) return false;
    for (const auto& [c, row] : rows_)
        if (row.front().second != 1) return false;
    return true;
}

void Lattice::canonicalize() {
    if (canonical_) return;
    for (auto& [c, row] : rows_) {
        // reduce this row's entries at later pivot columns
        bool again = true;
        while (again) {
            again = false;
            for (size_t k = 1; k < row.size(); ++k) {
                auto it = rows_.find(row[k].first);
                if (it == rows_.end()) continue;
                Int q = floordiv(row[k].second, it->second.front().second);
                if (q != 0) {
                    row = sparse_axpy(row, -q, it->second);
                    again = true;
                    break;
                }
            }
        }
    }
    canonical_ = true;
}

bool Lattice::equals(Lattice& other) {
    if (dim_ != other.dim_ || rank() != other.rank()) return false;
    canonicalize();
    other.canonicalize();
    return rows_ == other.rows_;
}

std::vector<std::vector<Int>> Lattice::dense_rows() {
    canonicalize();
    std::vector<std::vector<Int>> out;
    for (auto& [c, row] : rows_) {
        std::vector<Int> r(dim_, 0);
        for (auto& [col, v] : row) r[col] = v;
        out.push_back(std::move(r));
    }
    return out;
}

Lattice lattice_from(const IntegerMatrix& M) {
    Lattice L(M.cols);
    for (const auto& row : M.a) {
        SparseVec v;
        for (int c = 0; c < M.cols; ++c)
            if (row[c] != 0) v.emplace_back(c, row[c]);
        L.add_row(std::move(v));
    }
    return L;
}

IntegerMatrix hnf(const IntegerMatrix& M) {
    Lattice L = lattice_from(M);
    auto rows = L.dense_rows();
    IntegerMatrix out(static_cast<int>(rows.size()), M.cols);
    out.a = std::move(rows);
    return out;
}

bool is_unimodular_square(const IntegerMatrix& M) {
    if (M.rows != M.cols) return false;
    Lattice L = lattice_from(M);
    return L.is_unit();
}

bool lattice_equal(Lattice& a, Lattice& b) { return a.equals(b); }

void SpanSolver::add(const SparseVec& v) {
    Row nr{v, {{ngen_, 1}}};
    ++ngen_;
    while (!nr.vec.empty()) {
        int c = nr.vec.front().first;
        auto it = rows_.find(c);
        if (it == rows_.end()) {
            if (nr.vec.front().second < 0) {
                nr.vec = sparse_scale(nr.vec, -1);
                for (auto& [k, q] : nr.combo) q = -q;
            }
            rows_.emplace(c, std::move(nr));
            return;
        }
        const Int& p = it->second.vec.front().second;
        const Int& a = nr.vec.front().second;
        if (a % p == 0) {
            Int q = a / p;
            nr.vec = sparse_axpy(nr.vec, -q, it->second.vec);
            for (const auto& [k, cq] : it->second.combo) {
                Int nv = nr.combo[k] - q * cq;
                if (nv == 0) nr.combo.erase(k); else nr.combo[k] = nv;
            }
        } else {
            Int g, x, y;
            extgcd(p, a, g, x, y);
            Row np;
            np.vec = sparse_axpy(sparse_scale(it->second.vec, x), y, nr.vec);
            for (const auto& [k, cq] : it->second.combo) np.combo[k] += x * cq;
            for (const auto& [k, cq] : nr.combo) {
                Int nv = np.combo[k] + y * cq;
                if (nv == 0) np.combo.erase(k); else np.combo[k] = nv;
            }
            Row rest;
            rest.vec = sparse_axpy(sparse_scale(nr.vec, p / g), -(a / g), it->second.vec);
            std::map<int, Int> rc;
            for (const auto& [k, cq] : nr.combo) rc[k] += (p / g) * cq;
            for (const auto& [k, cq] : it->second.combo) {
                Int nv = rc[k] - (a / g) * cq;
                if (nv == 0) rc.erase(k); else rc[k] = nv;
            }
            rest.combo = std::move(rc);
            it->second = std::move(np);
            nr = std::move(rest);
        }
    }
}

std::optional<std::vector<Int>> SpanSolver::express(SparseVec target) const {
    std::map<int, Int> acc;
    while (!target.empty()) {
        int c = target.front().first;
        auto it = rows_.find(c);
        if (it == rows_.end()) return std::nullopt;
        const Int& p = it->second.vec.front().second;
        const Int& a = target.front().second;
        if (a % p != 0) return std::nullopt;
        Int q = a / p;
        target = sparse_axpy(target, -q, it->second.vec);
        for (const auto& [k, cq] : it->second.combo) acc[k] += q * cq;
    }
    std::vector<Int> out(ngen_, 0);
    for (const auto& [k, v] : acc) out[k] = v;
    return out;
}

}  // namespace klr
