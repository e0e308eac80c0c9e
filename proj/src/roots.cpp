#include "klr/roots.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klr {

RootVector::RootVector(std::map<int, int> mult) : mult_(std::move(mult)) {
    for (auto it = mult_.begin(); it != mult_.end();) {
        if (it->second == 0)
            it = mult_.erase(it);
        else if (it->second < 0)
            throw std::invalid_argument("negative multiplicity");
        else
            ++it;
    }
}

RootVector RootVector::simple(int i, int c) {
    RootVector v;
    if (c > 0) v.mult_[i] = c;
    return v;
}

RootVector RootVector::from_word(const Word& w) {
    RootVector v;
    for (int l : w) v.mult_[l]++;
    return v;
}

int RootVector::height() const {
    int h = 0;
    for (const auto& [i, c] : mult_) h += c;
    return h;
}

int RootVector::mult(int i) const {
    auto it = mult_.find(i);
    return it == mult_.end() ? 0 : it->second;
}

bool RootVector::contains(const RootVector& o) const {
    for (const auto& [i, c] : o.mult_)
        if (mult(i) < c) return false;
    return true;
}

RootVector RootVector::operator+(const RootVector& o) const {
    auto m = mult_;
    for (const auto& [i, c] : o.mult_) m[i] += c;
    return RootVector(std::move(m));
}

RootVector RootVector::operator-(const RootVector& o) const {
    if (!contains(o)) throw std::invalid_argument("RootVector subtraction underflow");
    auto m = mult_;
    for (const auto& [i, c] : o.mult_) m[i] -= c;
    return RootVector(std::move(m));
}

RootVector RootVector::scaled(int p) const {
    auto m = mult_;
    for (auto& [i, c] : m) c *= p;
    return RootVector(std::move(m));
}

std::string RootVector::to_text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : mult_) {
        if (!first) os << ",";
        os << i << ":" << c;
        first = false;
    }
    return os.str();
}

RootVector RootVector::parse(const std::string& s) {
    std::map<int, int> m;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("alpha format is i:c,j:c,...");
        int i = std::stoi(item.substr(0, colon));
        int c = std::stoi(item.substr(colon + 1));
        if (c < 0) throw std::invalid_argument("negative multiplicity in alpha");
        if (c > 0) m[i] += c;
    }
    return RootVector(std::move(m));
}

Word PositiveRoot::word() const {
    Word w;
    for (int l = m; l <= n; ++l) w.push_back(l);
    return w;
}

RootVector PositiveRoot::vector() const { return RootVector::from_word(word()); }

std::string PositiveRoot::to_text() const {
    std::ostringstream os;
    os << "(" << m << ".." << n << ")";
    return os.str();
}

int compare_words(const Word& u, const Word& v) {
    size_t k = std::min(u.size(), v.size());
    for (size_t t = 0; t < k; ++t) {
        if (u[t] != v[t]) return u[t] < v[t] ? -1 : 1;
    }
    if (u.size() == v.size()) return 0;
    return u.size() < v.size() ? -1 : 1;
}

bool root_less(const PositiveRoot& beta, const PositiveRoot& gamma) {
    return compare_words(beta.word(), gamma.word()) < 0;
}

std::vector<Word> words_of(const RootVector& alpha) {
    Word sorted;
    for (const auto& [i, c] : alpha.mults())
        for (int t = 0; t < c; ++t) sorted.push_back(i);
    std::vector<Word> out;
    // ascending enumeration, then reversed for descending order
    do {
        out.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    std::reverse(out.begin(), out.end());
    return out;
}

RootPartition::RootPartition(RootVector alpha,
                             std::vector<std::pair<PositiveRoot, int>> parts)
    : alpha_(std::move(alpha)), parts_(std::move(parts)) {
    RootVector sum;
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k].second <= 0) throw std::invalid_argument("part multiplicity <= 0");
        if (k + 1 < parts_.size() && !root_less(parts_[k + 1].first, parts_[k].first))
            throw std::invalid_argument("root partition parts must strictly decrease");
        sum = sum + parts_[k].first.vector().scaled(parts_[k].second);
    }
    if (!(sum == alpha_)) throw std::invalid_argument("root partition does not sum to alpha");
}

Word RootPartition::word() const {
    Word w;
    for (const auto& [beta, p] : parts_) {
        Word wb = beta.word();
        for (int t = 0; t < p; ++t) w.insert(w.end(), wb.begin(), wb.end());
    }
    return w;
}

long RootPartition::sh() const {
    long s = 0;
    for (const auto& [beta, p] : parts_) s += static_cast<long>(p) * (p - 1) / 2;
    return s;
}

std::vector<std::pair<int, int>> RootPartition::blocks() const {
    std::vector<std::pair<int, int>> out;
    int pos = 1;
    for (const auto& [beta, p] : parts_) {
        for (int t = 0; t < p; ++t) {
            out.emplace_back(pos, beta.height());
            pos += beta.height();
        }
    }
    return out;
}

std::string RootPartition::to_text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [beta, p] : parts_) {
        if (!first) os << " ";
        os << beta.to_text() << "^" << p;
        first = false;
    }
    return os.str();
}

bool RootPartition::operator==(const RootPartition& o) const {
    if (!(alpha_ == o.alpha_) || parts_.size() != o.parts_.size()) return false;
    for (size_t k = 0; k < parts_.size(); ++k)
        if (!(parts_[k].first == o.parts_[k].first) || parts_[k].second != o.parts_[k].second)
            return false;
    return true;
}

std::vector<PositiveRoot> positive_roots_below(const RootVector& alpha) {
    std::vector<PositiveRoot> out;
    if (alpha.is_zero()) return out;
    int lo = alpha.mults().begin()->first;
    int hi = alpha.mults().rbegin()->first;
    for (int m = lo; m <= hi; ++m)
        for (int n = m; n <= hi; ++n) {
            PositiveRoot r{m, n};
            if (alpha.contains(r.vector())) out.push_back(r);
        }
    std::sort(out.begin(), out.end(),
              [](const PositiveRoot& a, const PositiveRoot& b) { return root_less(a, b); });
    return out;
}

static void enumerate_partitions(const RootVector& rem,
                                 const std::vector<PositiveRoot>& roots_desc, size_t idx,
                                 std::vector<std::pair<PositiveRoot, int>>& cur,
                                 const RootVector& alpha, std::vector<RootPartition>& out) {
    if (rem.is_zero()) {
        out.emplace_back(alpha, cur);
        return;
    }
    for (size_t k = idx; k < roots_desc.size(); ++k) {
        const auto& beta = roots_desc[k];
        RootVector bv = beta.vector();
        int pmax = 0;
        RootVector r = rem;
        while (r.contains(bv)) {
            r = r - bv;
            ++pmax;
        }
        RootVector taken;
        for (int p = 1; p <= pmax; ++p) {
            taken = taken + bv;
            cur.emplace_back(beta, p);
            enumerate_partitions(rem - taken, roots_desc, k + 1, cur, alpha, out);
            cur.pop_back();
        }
    }
}

std::vector<RootPartition> root_partitions(const RootVector& alpha) {
    if (alpha.height() < 1) throw std::invalid_argument("root_partitions: height >= 1 required");
    auto roots = positive_roots_below(alpha);
    std::reverse(roots.begin(), roots.end());  // largest first
    std::vector<RootPartition> out;
    std::vector<std::pair<PositiveRoot, int>> cur;
    enumerate_partitions(alpha, roots, 0, cur, alpha, out);
    std::sort(out.begin(), out.end(), [](const RootPartition& a, const RootPartition& b) {
        return compare_words(a.word(), b.word()) > 0;
    });
    return out;
}

bool is_min_coset_rep(const Permutation& w, const RootPartition& pi) {
    for (const auto& [first, size] : pi.blocks())
        for (int r = first; r < first + size - 1; ++r)
            if (w(r) > w(r + 1)) return false;
    return true;
}

std::vector<Permutation> min_coset_reps(const RootPartition& pi) {
    std::vector<Permutation> out;
    for (const auto& w : Permutation::all(pi.height()))
        if (is_min_coset_rep(w, pi)) out.push_back(w);
    std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
        long la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        return a.oneline() < b.oneline();
    });
    return out;
}

std::pair<Permutation, Permutation> parabolic_factorize(const Permutation& w,
                                                        const RootPartition& pi) {
    int d = w.degree();
    if (d != pi.height()) throw std::invalid_argument("degree mismatch");
    // w_pi sorts w within each block; w^pi = w * w_pi^{-1}.
    std::vector<int> wpi_line(d);
    for (const auto& [first, size] : pi.blocks()) {
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return w(first + a) < w(first + b); });
        // idx[j] = offset within block of the j-th smallest value
        for (int j = 0; j < size; ++j) wpi_line[first + idx[j] - 1] = first + j;
    }
    Permutation w_pi(wpi_line);
    Permutation w_up = w * w_pi.inverse();
    if (!is_min_coset_rep(w_up, pi) || w_up.length() + w_pi.length() != w.length())
        throw std::logic_error("parabolic factorization failed");
    return {w_up, w_pi};
}

Word act_on_word(const Permutation& w, const Word& i) {
    Word j(i.size());
    for (size_t r = 0; r < i.size(); ++r) j[w(static_cast<int>(r) + 1) - 1] = i[r];
    return j;
}

}  // namespace klr
