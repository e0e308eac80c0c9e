#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "klr/qseries.hpp"

namespace klr {

/// Element of S_d in one-line notation (1-based values).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int d);                       // identity
    explicit Permutation(std::vector<int> oneline);

    static Permutation transposition(int d, int r);    // s_r in S_d

    int degree() const { return static_cast<int>(line_.size()); }
    int operator()(int r) const { return line_[r - 1]; }
    const std::vector<int>& oneline() const { return line_; }

    Permutation inverse() const;
    Permutation operator*(const Permutation& o) const;  // (p*q)(r) = p(q(r))
    bool operator==(const Permutation& o) const { return line_ == o.line_; }
    bool operator<(const Permutation& o) const { return line_ < o.line_; }

    long length() const;                               // inversion count
    bool is_identity() const;

    /// Positions r < s with w(r) > w(s).
    std::vector<std::pair<int, int>> inversions() const;

    /// Lexicographically smallest reduced word (deterministic global choice).
    std::vector<int> canonical_word() const;

    static Permutation from_word(int d, const std::vector<int>& word);
    static Permutation longest_element(int d);
    static std::vector<Permutation> all(int d);

private:
    std::vector<int> line_;
};

struct Move {
    enum Kind { Commutation, Braid } kind;
    int pos;  // 0-based index of the leftmost letter touched
};

/// Braid/commutation move path between two reduced words of equal
/// permutations; empty optional if the inputs are not such a pair.
std::optional<std::vector<Move>> reduced_word_path(const std::vector<int>& r1,
                                                   const std::vector<int>& r2);

void apply_move(std::vector<int>& word, const Move& m);

/// Reduced word for w_0 in S_a whose reverse lies in its commutation class;
/// verified by BFS, throws if the construction fails.
std::vector<int> symmetric_w0_word(int a);

bool word_is_reduced(int d, const std::vector<int>& word);

/// Poincare polynomial of S_a via the product formula, truncated at N.
QSeries poincare(int a, long N);

/// Brute-force sum of t^{l(w)} over S_a.
QSeries poincare_bruteforce(int a, long N);

}  // namespace klr
