// Discrete-time path transforms: the pairwise operations x "meet" y and
// x "join" y, the folds D_d / T_d / G_d, and the Pitman operators P_i
// attached to the simple roots delta_i = e_i - e_{i+1}.
//
// A path of dimension d is stored coordinate-major: d series of equal length,
// each starting at 0 (position at time 0).  Scalars are exact (integers or
// rationals); there are no floating paths here.
#pragma once

#include "thoma/partition.hpp"
#include "thoma/rsk.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace thoma {

template <class T>
using Series = std::vector<T>;
template <class T>
using Path = std::vector<Series<T>>;  // path[c][k] = coordinate c at time k

// (x meet y)(k) = min_{j<=k} { x(j) - y(j) } + y(k)
template <class T>
Series<T> ydown(const Series<T>& x, const Series<T>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("ydown: length mismatch");
    Series<T> out(x.size());
    T m = x[0] - y[0];
    for (size_t k = 0; k < x.size(); ++k) {
        m = std::min(m, T(x[k] - y[k]));
        out[k] = m + y[k];
    }
    return out;
}

// (x join y)(k) = max_{j<=k} { x(j) - y(j) } + y(k)
template <class T>
Series<T> yup(const Series<T>& x, const Series<T>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("yup: length mismatch");
    Series<T> out(x.size());
    T m = x[0] - y[0];
    for (size_t k = 0; k < x.size(); ++k) {
        m = std::max(m, T(x[k] - y[k]));
        out[k] = m + y[k];
    }
    return out;
}

// D(x) = (x_1, x_1 join x_2, x_1 join x_2 join x_3, ...): left-associative
// prefix join folds.  The k-th entry, evaluated at time n, is the length of
// the row produced by the first k coordinates (restriction to a sub-alphabet).
template <class T>
Path<T> d_transform(const Path<T>& x) {
    Path<T> out;
    out.reserve(x.size());
    Series<T> fold = x[0];
    out.push_back(fold);
    for (size_t k = 1; k < x.size(); ++k) {
        fold = yup(fold, x[k]);
        out.push_back(fold);
    }
    return out;
}

// T(x) = (x_2 meet x_1, x_3 meet (x_1 join x_2), ..., x_d meet (x_1 join ... join x_{d-1}));
// the residual path that carries the rows below the first one.
template <class T>
Path<T> t_transform(const Path<T>& x) {
    if (x.size() < 2) throw std::invalid_argument("t_transform: need d >= 2");
    Path<T> out;
    out.reserve(x.size() - 1);
    Series<T> fold = x[0];
    out.push_back(ydown(x[1], x[0]));
    for (size_t k = 2; k < x.size(); ++k) {
        fold = yup(fold, x[k - 1]);
        out.push_back(ydown(x[k], fold));
    }
    return out;
}

// G_d(W)_i = full join fold of T^{i-1}(W), i.e. the last component of
// D(T^{i-1}W).  For a word path this is the length of row i of the inserted
// tableau at every time.
template <class T>
Path<T> g_transform(const Path<T>& w) {
    int d = (int)w.size();
    Path<T> out(d);
    Path<T> cur = w;
    for (int i = 1; i <= d; ++i) {
        out[i - 1] = d_transform(cur).back();
        if (i < d) cur = t_transform(cur);
    }
    return out;
}

// Row/letter counts m_{i,j} = D(T^{i-1}W)_{j-i+1}(n) - D(T^{i-1}W)_{j-i}(n):
// the prefix folds of the i-th residual path, evaluated at the end, give the
// lengths of row i after restricting to letters <= j, so consecutive
// differences count the letters j in row i of the inserted word.
template <class T>
std::vector<std::vector<T>> letter_row_counts(const Path<T>& w) {
    int d = (int)w.size();
    std::vector<Path<T>> folds;  // folds[i-1] = D(T^{i-1} W)
    Path<T> cur = w;
    for (int i = 1; i <= d; ++i) {
        folds.push_back(d_transform(cur));
        if (i < d) cur = t_transform(cur);
    }
    std::vector<std::vector<T>> m(d, std::vector<T>(d, T(0)));
    for (int i = 1; i <= d; ++i) {
        for (int j = i; j <= d; ++j) {
            T hi = folds[i - 1][j - i].back();
            T lo = (j == i) ? T(0) : folds[i - 1][j - i - 1].back();
            m[i - 1][j - 1] = hi - lo;
        }
    }
    return m;
}

// Pitman operator: (P_i w)(k) = w(k) - (min_{s<=k} <delta_i, w(s)>) delta_i.
template <class T>
Path<T> pitman_op(int i, const Path<T>& w) {
    int d = (int)w.size();
    if (i < 1 || i >= d) throw std::out_of_range("pitman_op: need 1 <= i <= d-1");
    Path<T> out = w;
    size_t len = w[0].size();
    T m = w[i - 1][0] - w[i][0];
    for (size_t k = 0; k < len; ++k) {
        m = std::min(m, T(w[i - 1][k] - w[i][k]));
        out[i - 1][k] = w[i - 1][k] - m;
        out[i][k] = w[i][k] + m;
    }
    return out;
}

// Word over d letters -> lattice path W(k) = (#1s, ..., #ds among the first k).
Path<long long> word_path(const Word& w, int d);

// Shape process cross-check: prefix values of G_d on the word path.
// Returns shapes[k] for k = 0..n as partitions (coordinates of G_d(W)(k)).
std::vector<Partition> g_shape_process(const Word& w, int d);

// m11/m12 bookkeeping for 2-letter words: X_k = 3k - 2(b_1+...+b_k),
// S_k = max_{j<=k} X_j, m11(k) = (k + X_k)/2, m12(k) = S_k - X_k.
struct TwoShuffleSeries {
    std::vector<long long> m11, m12;  // index k = 0..n
};
TwoShuffleSeries two_shuffle_decomposition(const Word& w);

}  // namespace thoma
