#include "thoma/specialization.hpp"

#include <stdexcept>

namespace thoma {

Alphabet Alphabet::finite(std::vector<Rat> v) {
    Alphabet a;
    a.kind = Finite;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || (i + 1 < v.size() && v[i] < v[i + 1]))
            throw std::invalid_argument("Alphabet: letters must be weakly decreasing >= 0");
    }
    a.values = std::move(v);
    return a;
}

Alphabet Alphabet::geometric(Rat a_, Rat q) {
    if (a_ < 0 || q < 0 || q >= 1)
        throw std::invalid_argument("Alphabet: need scale >= 0 and ratio in [0,1)");
    Alphabet a;
    a.kind = Geometric;
    a.scale = a_;
    a.ratio = q;
    return a;
}

Rat Alphabet::total() const {
    if (kind == Geometric) return scale / (1 - ratio);
    Rat s = 0;
    for (const Rat& x : values) s += x;
    return s;
}

Rat Alphabet::power_sum(int k) const {
    if (kind == Geometric) return pow_rat(scale, k) / (1 - pow_rat(ratio, k));
    Rat s = 0;
    for (const Rat& x : values) s += pow_rat(x, k);
    return s;
}

bool Alphabet::is_empty() const {
    return kind == Geometric ? scale == 0 : values.empty();
}

Thoma::Thoma(Alphabet a, Alphabet b) : alpha(std::move(a)), beta(std::move(b)) {
    gamma = 1 - alpha.total() - beta.total();
    if (gamma < 0) throw std::invalid_argument("Thoma: alphabets exceed total mass 1");
}

Rat p_k(const Thoma& omega, int k) {
    if (k < 1) throw std::invalid_argument("p_k: k >= 1 required");
    if (k == 1) return 1;
    Rat s = omega.alpha.power_sum(k);
    Rat b = omega.beta.power_sum(k);
    return (k % 2 == 1) ? Rat(s + b) : Rat(s - b);
}

Rat p_mu(const Thoma& omega, const Partition& mu) {
    Rat r = 1;
    for (int part : mu.parts()) r *= p_k(omega, part);
    return r;
}

std::vector<Rat> h_from_p(const std::vector<Rat>& p, int n) {
    std::vector<Rat> h(n + 1);
    h[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rat s = 0;
        for (int i = 1; i <= k; ++i) s += p[i] * h[k - i];
        h[k] = s / k;
    }
    return h;
}

namespace {

// Determinant by fraction-free-ish rational Gaussian elimination; m is small.
Rat det(std::vector<std::vector<Rat>> m) {
    int n = (int)m.size();
    Rat d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

}  // namespace

Rat schur_from_p(const Partition& lambda, const std::vector<Rat>& p) {
    int n = lambda.size();
    if ((int)p.size() < n + 1) throw std::invalid_argument("schur_from_p: need p_1..p_n");
    std::vector<Rat> h = h_from_p(p, n);
    int l = lambda.length();
    if (l == 0) return 1;
    std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            int idx = lambda.row(i) - i + j;
            m[i - 1][j - 1] = (idx < 0) ? Rat(0) : h[std::min(idx, n)];
            if (idx > n) throw std::logic_error("schur_from_p: index out of range");
        }
    return det(std::move(m));
}

Rat schur(const Partition& lambda, const Thoma& omega) {
    int n = lambda.size();
    std::vector<Rat> p(n + 1);
    for (int k = 1; k <= n; ++k) p[k] = p_k(omega, k);
    return schur_from_p(lambda, p);
}

Rat schur_hook_q(const Partition& lambda, const Rat& q) {
    Rat num = pow_rat(q, (int)lambda.n_stat().convert_to<long long>());
    Rat den = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j)
            den *= 1 - pow_rat(q, lambda.hook_length(i, j));
    return num / den;
}

Rat L_c(const Composition& c, const Alphabet& X) {
    int n = c.size();
    if (n == 0) return 1;
    if (X.kind == Alphabet::Geometric) {
        if (X.scale == 0) return 0;
        Rat den = 1;
        for (int i = 1; i <= n; ++i) den *= 1 - pow_rat(X.ratio, i);
        return pow_rat(X.scale, n) * pow_rat(X.ratio, c.comaj()) / den;
    }
    int N = (int)X.values.size();
    if (N == 0) return 0;
    std::vector<bool> strict(n + 1, false);  // strict increase required after position d
    for (int d : c.descent_set()) strict[d] = true;
    // f[i] = weight of admissible prefixes ending with letter index i (1-based)
    std::vector<Rat> f(N + 1);
    for (int i = 1; i <= N; ++i) f[i] = X.values[i - 1];
    for (int pos = 2; pos <= n; ++pos) {
        // prefix sums over allowed previous letters
        std::vector<Rat> g(N + 1);
        Rat acc = 0;
        for (int i = 1; i <= N; ++i) {
            if (strict[pos - 1])
                g[i] = acc;  // previous letter strictly smaller
            acc += f[i];
            if (!strict[pos - 1]) g[i] = acc;  // previous letter <= current
        }
        for (int i = 1; i <= N; ++i) f[i] = g[i] * X.values[i - 1];
    }
    Rat s = 0;
    for (int i = 1; i <= N; ++i) s += f[i];
    return s;
}

}  // namespace thoma
