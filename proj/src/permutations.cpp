#include "klr/permutations.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace klr {

Permutation::Permutation(int d) : line_(d) {
    std::iota(line_.begin(), line_.end(), 1);
}

Permutation::Permutation(std::vector<int> oneline) : line_(std::move(oneline)) {
    std::vector<bool> seen(line_.size(), false);
    for (int v : line_) {
        if (v < 1 || v > static_cast<int>(line_.size()) || seen[v - 1])
            throw std::invalid_argument("not a permutation");
        seen[v - 1] = true;
    }
}

Permutation Permutation::transposition(int d, int r) {
    if (r < 1 || r >= d) throw std::invalid_argument("transposition index out of range");
    Permutation p(d);
    std::swap(p.line_[r - 1], p.line_[r]);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(line_.size());
    for (int r = 0; r < static_cast<int>(line_.size()); ++r) inv[line_[r] - 1] = r + 1;
    Permutation p;
    p.line_ = std::move(inv);
    return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (degree() != o.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> r(line_.size());
    for (int k = 0; k < static_cast<int>(line_.size()); ++k) r[k] = line_[o.line_[k] - 1];
    Permutation p;
    p.line_ = std::move(r);
    return p;
}

long Permutation::length() const {
    long n = 0;
    for (size_t r = 0; r < line_.size(); ++r)
        for (size_t s = r + 1; s < line_.size(); ++s)
            if (line_[r] > line_[s]) ++n;
    return n;
}

bool Permutation::is_identity() const {
    for (int r = 0; r < static_cast<int>(line_.size()); ++r)
        if (line_[r] != r + 1) return false;
    return true;
}

std::vector<std::pair<int, int>> Permutation::inversions() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= degree(); ++r)
        for (int s = r + 1; s <= degree(); ++s)
            if ((*this)(r) > (*this)(s)) out.emplace_back(r, s);
    return out;
}

std::vector<int> Permutation::canonical_word() const {
    // Greedy: always strip the smallest left descent. The set of first
    // letters of reduced words of w is exactly its left descent set, so this
    // yields the lexicographically least reduced word.
    std::vector<int> word;
    Permutation w = *this;
    Permutation winv = w.inverse();
    while (!w.is_identity()) {
        int r = 0;
        for (int t = 1; t < w.degree(); ++t) {
            if (winv(t) > winv(t + 1)) { r = t; break; }
        }
        word.push_back(r);
        w = Permutation::transposition(w.degree(), r) * w;
        winv = w.inverse();
    }
    return word;
}

Permutation Permutation::from_word(int d, const std::vector<int>& word) {
    Permutation w(d);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        w = Permutation::transposition(d, *it) * w;
    return w;
}

Permutation Permutation::longest_element(int d) {
    std::vector<int> line(d);
    for (int r = 0; r < d; ++r) line[r] = d - r;
    Permutation p;
    p.line_ = std::move(line);
    return p;
}

std::vector<Permutation> Permutation::all(int d) {
    std::vector<int> line(d);
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> out;
    do {
        Permutation p;
        p.line_ = line;
        out.push_back(p);
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

bool word_is_reduced(int d, const std::vector<int>& word) {
    return Permutation::from_word(d, word).length() == static_cast<long>(word.size());
}

void apply_move(std::vector<int>& word, const Move& m) {
    if (m.kind == Move::Commutation) {
        std::swap(word[m.pos], word[m.pos + 1]);
    } else {
        int x = word[m.pos], y = word[m.pos + 1];
        word[m.pos] = y;
        word[m.pos + 1] = x;
        word[m.pos + 2] = y;
    }
}

static std::vector<std::pair<Move, std::vector<int>>> neighbors(const std::vector<int>& w) {
    std::vector<std::pair<Move, std::vector<int>>> out;
    for (int p = 0; p + 1 < static_cast<int>(w.size()); ++p) {
        if (std::abs(w[p] - w[p + 1]) > 1) {
            auto n = w;
            Move m{Move::Commutation, p};
            apply_move(n, m);
            out.emplace_back(m, std::move(n));
        }
    }
    for (int p = 0; p + 2 < static_cast<int>(w.size()); ++p) {
        if (w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1) {
            auto n = w;
            Move m{Move::Braid, p};
            apply_move(n, m);
            out.emplace_back(m, std::move(n));
        }
    }
    return out;
}

std::optional<std::vector<Move>> reduced_word_path(const std::vector<int>& r1,
                                                   const std::vector<int>& r2) {
    if (r1.size() != r2.size()) return std::nullopt;
    int d = 1;
    for (int x : r1) d = std::max(d, x + 1);
    for (int x : r2) d = std::max(d, x + 1);
    if (!word_is_reduced(d, r1) || !word_is_reduced(d, r2)) return std::nullopt;
    if (!(Permutation::from_word(d, r1) == Permutation::from_word(d, r2))) return std::nullopt;
    if (r1 == r2) return std::vector<Move>{};

    std::map<std::vector<int>, std::pair<std::vector<int>, Move>> parent;
    std::queue<std::vector<int>> q;
    q.push(r1);
    parent[r1] = {r1, Move{Move::Commutation, -1}};
    while (!q.empty()) {
        auto cur = q.front();
        q.pop();
        for (auto& [m, nxt] : neighbors(cur)) {
            if (parent.count(nxt)) continue;
            parent[nxt] = {cur, m};
            if (nxt == r2) {
                std::vector<Move> path;
                auto node = r2;
                while (node != r1) {
                    auto& [prev, mv] = parent[node];
                    path.push_back(mv);
                    node = prev;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            q.push(nxt);
        }
    }
    // Matsumoto: two reduced words of one permutation are always connected.
    return std::nullopt;
}

std::vector<int> symmetric_w0_word(int a) {
    if (a < 1) throw std::invalid_argument("symmetric_w0_word: a must be >= 1");
    // Staircase word 1 | 2 1 | 3 2 1 | ... ; its reverse sits in its
    // commutation class, which we verify by BFS before returning.
    std::vector<int> word;
    for (int k = 1; k < a; ++k)
        for (int r = k; r >= 1; --r) word.push_back(r);
    if (word.empty()) return word;

    std::vector<int> rev(word.rbegin(), word.rend());
    std::map<std::vector<int>, bool> seen;
    std::queue<std::vector<int>> q;
    q.push(word);
    seen[word] = true;
    bool found = (word == rev);
    while (!q.empty() && !found) {
        auto cur = q.front();
        q.pop();
        for (auto& [m, nxt] : neighbors(cur)) {
            if (m.kind != Move::Commutation) continue;
            if (seen.count(nxt)) continue;
            seen[nxt] = true;
            if (nxt == rev) { found = true; break; }
            q.push(nxt);
        }
    }
    if (!found) throw std::logic_error("symmetric_w0_word: reverse not in commutation class");
    return word;
}

QSeries poincare(int a, long N) {
    if (a < 1) throw std::invalid_argument("poincare: a must be >= 1");
    QSeries p = QSeries::one(N);
    for (int r = 1; r <= a; ++r) {
        QSeries f(0, N);
        for (long e = 0; e < r && e <= N; ++e) f.set_coeff(e, 1);
        p = p * f;
    }
    return p;
}

QSeries poincare_bruteforce(int a, long N) {
    QSeries p(0, N);
    for (const auto& w : Permutation::all(a)) {
        long l = w.length();
        if (l <= N) p.set_coeff(l, p.coeff(l) + 1);
    }
    return p;
}

}  // namespace klr
