#include "thoma/rsk.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace thoma {

Permutation::Permutation(std::vector<int> one_line) : p_(std::move(one_line)) {
    int n = (int)p_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : p_) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    return Permutation(p);
}

Permutation Permutation::reversal(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = n - i;
    return Permutation(p);
}

Permutation Permutation::inverse() const {
    std::vector<int> q(p_.size());
    for (size_t i = 0; i < p_.size(); ++i) q[p_[i] - 1] = (int)i + 1;
    return Permutation(q);
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> q(p_.size());
    for (size_t i = 0; i < p_.size(); ++i) q[i] = p_[other.p_[i] - 1];
    return Permutation(q);
}

std::vector<int> Permutation::descents() const {
    std::vector<int> d;
    for (size_t i = 0; i + 1 < p_.size(); ++i)
        if (p_[i] > p_[i + 1]) d.push_back((int)i + 1);
    return d;
}

std::vector<int> Permutation::recoils() const { return inverse().descents(); }

Composition Permutation::descent_composition() const {
    return Composition::from_descent_set(descents(), size());
}

Composition Permutation::recoil_composition() const {
    return Composition::from_descent_set(recoils(), size());
}

std::vector<Permutation> all_permutations(int n) {
    if (n > 8) throw std::length_error("all_permutations: n <= 8");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Permutation standardize(const Word& w) {
    int n = (int)w.size();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    // sort by (letter, position): equal letters keep left-to-right order
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return w[a] < w[b]; });
    std::vector<int> s(n);
    for (int rank = 0; rank < n; ++rank) s[idx[rank]] = rank + 1;
    return Permutation(s);
}

namespace {

// Row-inserts a into rows; returns the row index (0-based) where a new cell
// was created.
int row_insert(std::vector<std::vector<int>>& rows, int a) {
    for (size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({a});
            return (int)r;
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), a);
        if (it == row.end()) {
            row.push_back(a);
            return (int)r;
        }
        std::swap(a, *it);
    }
}

}  // namespace

RskOutput rsk(const Word& w) {
    std::vector<std::vector<int>> prows, qrows;
    for (size_t k = 0; k < w.size(); ++k) {
        if (w[k] < 1) throw std::invalid_argument("rsk: letters must be positive");
        int r = row_insert(prows, w[k]);
        if (r == (int)qrows.size()) qrows.push_back({});
        qrows[r].push_back((int)k + 1);
    }
    RskOutput out;
    out.p = Tableau(prows);
    out.q = Tableau(qrows);
    out.shape = out.p.shape();
    return out;
}

RskOutput rsk(const Permutation& sigma) { return rsk(sigma.one_line()); }

std::vector<Partition> shape_process(const Word& w) {
    std::vector<Partition> shapes;
    shapes.push_back(Partition());
    std::vector<int> rowlen;
    std::vector<std::vector<int>> rows;
    for (int a : w) {
        int r = row_insert(rows, a);
        if (r == (int)rowlen.size())
            rowlen.push_back(1);
        else
            ++rowlen[r];
        shapes.push_back(Partition(rowlen));
    }
    return shapes;
}

long long greene_invariant(const Word& w, int r) {
    Partition sh = rsk(w).shape;
    long long s = 0;
    for (int i = 1; i <= r; ++i) s += sh.row(i);
    return s;
}

long long greene_invariant_oracle(const Word& w, int r) {
    int n = (int)w.size();
    if (n > 10) throw std::length_error("greene_invariant_oracle: n <= 10");
    // assign each position to one of r chains or to none; every chain must be
    // weakly increasing in letters (strictly in positions)
    long long best = 0;
    std::vector<int> assign(n, 0);
    std::vector<int> last(r + 1, 0);
    std::function<void(int, long long)> rec = [&](int pos, long long used) {
        if (pos == n) {
            best = std::max(best, used);
            return;
        }
        if (used + (n - pos) <= best) return;
        for (int c = 1; c <= r; ++c) {
            if (last[c] == 0 || last[c] <= w[pos]) {
                int save = last[c];
                last[c] = std::max(w[pos], 1);
                rec(pos + 1, used + 1);
                last[c] = save;
            }
        }
        rec(pos + 1, used);
    };
    rec(0, 0);
    return best;
}

}  // namespace thoma
