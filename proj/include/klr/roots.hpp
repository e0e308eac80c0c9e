#pragma once

#include <map>
#include <string>
#include <vector>

#include "klr/permutations.hpp"

namespace klr {

using Word = std::vector<int>;  // letters are quiver vertices (integers)

/// Element of the nonnegative root lattice Q_+ of type A_infinity:
/// finitely supported vertex -> multiplicity map.
class RootVector {
public:
    RootVector() = default;
    explicit RootVector(std::map<int, int> mult);
    static RootVector simple(int i, int c = 1);
    static RootVector from_word(const Word& w);

    int height() const;
    int mult(int i) const;
    const std::map<int, int>& mults() const { return mult_; }
    bool contains(const RootVector& o) const;  // coordinatewise o <= this

    RootVector operator+(const RootVector& o) const;
    RootVector operator-(const RootVector& o) const;  // requires contains(o)
    RootVector scaled(int p) const;
    bool operator==(const RootVector& o) const { return mult_ == o.mult_; }
    bool operator<(const RootVector& o) const { return mult_ < o.mult_; }
    bool is_zero() const { return mult_.empty(); }

    std::string to_text() const;  // "1:2,2:1" style
    static RootVector parse(const std::string& s);

private:
    std::map<int, int> mult_;
};

/// Cartan matrix entry of type A_infinity.
inline int cartan(int i, int j) {
    if (i == j) return 2;
    return (i == j + 1 || i == j - 1) ? -1 : 0;
}

/// alpha(m, n) = alpha_m + ... + alpha_n with m <= n.
struct PositiveRoot {
    int m = 0, n = 0;
    Word word() const;
    int height() const { return n - m + 1; }
    RootVector vector() const;
    std::string to_text() const;  // "(m..n)"
    bool operator==(const PositiveRoot& o) const { return m == o.m && n == o.n; }
};

/// Lexicographic order on integer words; a proper prefix precedes the
/// longer word. Returns <0, 0, >0.
int compare_words(const Word& u, const Word& v);

/// true iff i_beta < i_gamma.
bool root_less(const PositiveRoot& beta, const PositiveRoot& gamma);

/// All words in <I>_alpha, lexicographically descending.
std::vector<Word> words_of(const RootVector& alpha);

/// Ordered decomposition alpha = p_1 b_1 + ... + p_N b_N with b_1 > ... > b_N.
class RootPartition {
public:
    RootPartition() = default;
    RootPartition(RootVector alpha, std::vector<std::pair<PositiveRoot, int>> parts);

    const RootVector& alpha() const { return alpha_; }
    const std::vector<std::pair<PositiveRoot, int>>& parts() const { return parts_; }

    Word word() const;        // i_pi
    long sh() const;          // sum p_k (p_k - 1) / 2
    int height() const { return alpha_.height(); }

    /// Consecutive strand blocks: p_1 blocks of size |b_1|, then p_2 of
    /// size |b_2|, ... Each entry is (first strand, size), 1-based.
    std::vector<std::pair<int, int>> blocks() const;

    std::string to_text() const;  // "(2..2)^1 (1..1)^1"
    bool operator==(const RootPartition& o) const;

private:
    RootVector alpha_;
    std::vector<std::pair<PositiveRoot, int>> parts_;
};

/// Positive roots fitting inside alpha, in increasing root order.
std::vector<PositiveRoot> positive_roots_below(const RootVector& alpha);

/// All root partitions of alpha, sorted by i_pi descending.
std::vector<RootPartition> root_partitions(const RootVector& alpha);

/// Minimal length left coset representatives of S_pi in S_d: the w that are
/// increasing on every pi-block. Sorted by (length, one-line).
std::vector<Permutation> min_coset_reps(const RootPartition& pi);

bool is_min_coset_rep(const Permutation& w, const RootPartition& pi);

/// Unique factorization w = w^pi * w_pi with w^pi in S^pi, w_pi in S_pi and
/// additive lengths.
std::pair<Permutation, Permutation> parabolic_factorize(const Permutation& w,
                                                        const RootPartition& pi);

/// Place permutation: (w . i)_{w(r)} = i_r.
Word act_on_word(const Permutation& w, const Word& i);

}  // namespace klr
