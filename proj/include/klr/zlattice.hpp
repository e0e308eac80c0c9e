#pragma once

#include <map>
#include <optional>
#include <vector>

#include "klr/bigint.hpp"

namespace klr {

/// Sparse integer vector: (column, value) pairs sorted by column, values nonzero.
using SparseVec = std::vector<std::pair<int, Int>>;

SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_axpy(const SparseVec& a, const Int& q, const SparseVec& b);  // a + q*b
SparseVec sparse_scale(const SparseVec& a, const Int& q);

/// Row-span of integer vectors in Z^dim kept in echelon form (one row per
/// pivot column, positive pivots). canonicalize() reduces entries above
/// pivots, producing the row-style Hermite normal form.
class Lattice {
public:
    explicit Lattice(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Returns true iff the span changed.
    bool add_row(SparseVec v);

    bool member(SparseVec v) const;
    bool member_dense(const std::vector<Int>& v) const;

    /// Span equals all of Z^dim.
    bool is_unit() const;

    void canonicalize();
    const std::map<int, SparseVec>& rows() const { return rows_; }

    bool equals(Lattice& other);

    std::vector<std::vector<Int>> dense_rows();  // canonical HNF rows

private:
    int dim_;
    std::map<int, SparseVec> rows_;  // pivot column -> row
    bool canonical_ = false;
};

struct IntegerMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<Int>> a;

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), a(r, std::vector<Int>(c, 0)) {}
};

IntegerMatrix hnf(const IntegerMatrix& M);
bool is_unimodular_square(const IntegerMatrix& M);
Lattice lattice_from(const IntegerMatrix& M);
bool lattice_equal(Lattice& a, Lattice& b);

/// Echelon span that records how each reduced row combines the inserted
/// generators, so members can be expressed exactly over Z.
class SpanSolver {
public:
    explicit SpanSolver(int dim) : dim_(dim) {}

    void add(const SparseVec& v);  // generators are indexed by insertion order
    int generators() const { return ngen_; }

    /// Coefficients c with target = sum c_k * generator_k, if any.
    std::optional<std::vector<Int>> express(SparseVec target) const;

private:
    struct Row {
        SparseVec vec;
        std::map<int, Int> combo;
    };
    int dim_;
    int ngen_ = 0;
    std::map<int, Row> rows_;
};

Int floordiv(const Int& a, const Int& b);

}  // namespace klr
