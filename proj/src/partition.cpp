#include "thoma/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace thoma {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw std::invalid_argument("Partition: parts must be weakly decreasing positive");
        n_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= row(1); ++j) {
        int cnt = 0;
        for (int p : parts_)
            if (p >= j) ++cnt;
        c.push_back(cnt);
    }
    return Partition(c);
}

int Partition::hook_length(int i, int j) const {
    if (!contains_cell(i, j)) throw std::out_of_range("hook_length: cell outside diagram");
    int colj = 0;  // lambda'_j
    for (int p : parts_)
        if (p >= j) ++colj;
    return row(i) + colj - i - j + 1;
}

int Partition::content(int i, int j) const {
    if (!contains_cell(i, j)) throw std::out_of_range("content: cell outside diagram");
    return i - j;
}

Int Partition::dim_hook() const {
    Int num = factorial(n_);
    Partition conj = conjugate();
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= row(i); ++j) num /= row(i) + conj.row(j) - i - j + 1;
    return num;
}

Int Partition::n_stat() const {
    Int s = 0;
    for (int i = 1; i <= length(); ++i) s += Int(i - 1) * row(i);
    return s;
}

std::vector<Partition> Partition::covers() const {
    std::vector<Partition> out;
    for (int i = 1; i <= length() + 1; ++i) {
        if (i == 1 || row(i) < row(i - 1)) {
            std::vector<int> p = parts_;
            if (i <= length())
                ++p[i - 1];
            else
                p.push_back(1);
            out.emplace_back(p);
        }
    }
    return out;
}

std::vector<Partition> Partition::covered_by() const {
    std::vector<Partition> out;
    for (int i = 1; i <= length(); ++i) {
        if (i == length() || row(i) > row(i + 1)) {
            std::vector<int> p = parts_;
            --p[i - 1];
            out.emplace_back(p);
        }
    }
    return out;
}

bool Partition::operator<(const Partition& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    // reverse lexicographic: (n) < (n-1,1) < ... < (1^n)
    return parts_ > o.parts_;
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0 || n > kEnumerationCap + 4)
        throw std::length_error("partitions_of: size over enumeration cap");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxp) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Int z_order(const Partition& mu) {
    Int z = 1;
    int run = 0, prev = -1;
    auto flush = [&]() {
        for (int i = 1; i <= run; ++i) z *= i;  // m_i!
    };
    for (int p : mu.parts()) {
        z *= p;
        if (p == prev)
            ++run;
        else {
            flush();
            prev = p;
            run = 1;
        }
    }
    flush();
    return z;
}

Partition union_parts(const Partition& a, const Partition& b) {
    std::vector<int> p = a.parts();
    p.insert(p.end(), b.parts().begin(), b.parts().end());
    std::sort(p.rbegin(), p.rend());
    return Partition(p);
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("Composition: parts must be positive");
        n_ += p;
    }
}

std::vector<int> Composition::descent_set() const {
    std::vector<int> d;
    int acc = 0;
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        acc += parts_[i];
        d.push_back(acc);
    }
    return d;
}

Composition Composition::from_descent_set(const std::vector<int>& descents, int n) {
    std::vector<int> d = descents;
    std::sort(d.begin(), d.end());
    std::vector<int> parts;
    int prev = 0;
    for (int x : d) {
        if (x <= prev || x >= n) throw std::out_of_range("from_descent_set: bad descent");
        parts.push_back(x - prev);
        prev = x;
    }
    if (n > 0) parts.push_back(n - prev);
    return Composition(parts);
}

Composition Composition::conjugate() const {
    // D(conj(c)) = { n - d : d in [1,n-1] \ D(c) }
    std::vector<int> d = descent_set();
    std::vector<bool> in(n_ + 1, false);
    for (int x : d) in[x] = true;
    std::vector<int> nd;
    for (int x = n_ - 1; x >= 1; --x)
        if (!in[x]) nd.push_back(n_ - x);
    return from_descent_set(nd, n_);
}

Composition Composition::restrict(int lo, int hi) const {
    if (lo < 1 || hi > n_ || lo > hi + 1) throw std::out_of_range("restrict: bad window");
    int m = hi - lo + 1;
    if (m <= 0) return Composition();
    std::vector<int> nd;
    for (int x : descent_set())
        if (x >= lo && x <= hi - 1) nd.push_back(x - lo + 1);
    return from_descent_set(nd, m);
}

int Composition::comaj() const {
    int s = 0;
    for (int d : descent_set()) s += n_ - d;
    return s;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

Partition Tableau::shape() const {
    std::vector<int> p;
    for (const auto& r : rows_) p.push_back((int)r.size());
    return Partition(p);
}

int Tableau::size() const {
    int s = 0;
    for (const auto& r : rows_) s += (int)r.size();
    return s;
}

bool Tableau::is_semistandard() const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i + 1 < rows_.size() && rows_[i].size() < rows_[i + 1].size()) return false;
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (j + 1 < rows_[i].size() && rows_[i][j] > rows_[i][j + 1]) return false;
            if (i + 1 < rows_.size() && j < rows_[i + 1].size() &&
                rows_[i][j] >= rows_[i + 1][j])
                return false;
        }
    }
    return true;
}

bool Tableau::is_standard() const {
    if (!is_semistandard()) return false;
    int n = size();
    std::vector<bool> seen(n + 1, false);
    for (const auto& r : rows_) {
        for (size_t j = 0; j + 1 < r.size(); ++j)
            if (r[j] >= r[j + 1]) return false;
        for (int x : r) {
            if (x < 1 || x > n || seen[x]) return false;
            seen[x] = true;
        }
    }
    return true;
}

Composition Tableau::descent_composition() const {
    int n = size();
    std::vector<int> rowof(n + 1, 0);
    for (size_t i = 0; i < rows_.size(); ++i)
        for (int x : rows_[i]) rowof[x] = (int)i + 1;
    std::vector<int> d;
    for (int i = 1; i < n; ++i)
        if (rowof[i + 1] > rowof[i]) d.push_back(i);
    return Composition::from_descent_set(d, n);
}

std::vector<Tableau> enumerate_syt(const Partition& shape) {
    if (shape.size() > kEnumerationCap)
        throw std::length_error("enumerate_syt: size over enumeration cap");
    int n = shape.size();
    std::vector<std::vector<int>> rows(shape.length());
    std::vector<Tableau> out;
    std::function<void(int)> rec = [&](int next) {
        if (next > n) {
            out.emplace_back(rows);
            return;
        }
        for (int i = 0; i < shape.length(); ++i) {
            int len = (int)rows[i].size();
            if (len >= shape.row(i + 1)) continue;
            if (i > 0 && (int)rows[i - 1].size() <= len) continue;
            rows[i].push_back(next);
            rec(next + 1);
            rows[i].pop_back();
        }
    };
    rec(1);
    return out;
}

}  // namespace thoma
