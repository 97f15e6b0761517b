#include "thoma/characters.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace thoma {

FrobeniusCoords frobenius(const Partition& lambda) {
    FrobeniusCoords fc;
    Partition conj = lambda.conjugate();
    int d = 0;
    while (lambda.row(d + 1) >= d + 1) ++d;
    fc.d = d;
    for (int i = 1; i <= d; ++i) {
        fc.a.push_back(Rat(2 * lambda.row(i) - (2 * i - 1), 2));
        fc.b.push_back(Rat(2 * conj.row(i) - (2 * i - 1), 2));
    }
    return fc;
}

Rat p_obs(int k, const Partition& lambda) {
    if (k < 1) throw std::invalid_argument("p_obs: k >= 1");
    FrobeniusCoords fc = frobenius(lambda);
    Rat s = 0;
    for (const Rat& a : fc.a) s += pow_rat(a, k);
    Rat t = 0;
    for (const Rat& b : fc.b) t += pow_rat(b, k);
    return (k % 2 == 1) ? Rat(s + t) : Rat(s - t);
}

Rat p_obs_mu(const Partition& mu, const Partition& lambda) {
    Rat r = 1;
    for (int part : mu.parts()) r *= p_obs(part, lambda);
    return r;
}

namespace {

// Border-strip recursion on beta-numbers: removing a strip of length t means
// lowering one beta-number by t onto a free slot; the sign is (-1)^{#numbers
// jumped over}.
Int mn_rec(std::vector<int> beta, const std::vector<int>& mu, size_t mi) {
    if (mi == mu.size()) return 1;
    int t = mu[mi];
    Int total = 0;
    std::set<int> present(beta.begin(), beta.end());
    for (size_t i = 0; i < beta.size(); ++i) {
        int nb = beta[i] - t;
        if (nb < 0 || present.count(nb)) continue;
        int height = 0;
        for (int b : beta)
            if (b > nb && b < beta[i]) ++height;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        Int sub = mn_rec(std::move(nbeta), mu, mi + 1);
        total += (height % 2 == 0) ? sub : -sub;
    }
    return total;
}

std::mutex mn_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, Int> mn_memo;

}  // namespace

Int mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("mn_character: |lambda| != |mu|");
    if (lambda.size() == 0) return 1;
    auto key = std::make_pair(lambda.parts(), mu.parts());
    {
        std::lock_guard<std::mutex> lk(mn_mutex);
        auto it = mn_memo.find(key);
        if (it != mn_memo.end()) return it->second;
    }
    int L = lambda.length();
    std::vector<int> beta(L);
    for (int i = 1; i <= L; ++i) beta[i - 1] = lambda.row(i) + (L - i);
    // remove big parts first: fewer branches near the root
    std::vector<int> parts = mu.parts();
    Int v = mn_rec(std::move(beta), parts, 0);
    std::lock_guard<std::mutex> lk(mn_mutex);
    mn_memo.emplace(std::move(key), v);
    return v;
}

Rat sigma(const Partition& mu, const Partition& lambda) {
    int n = lambda.size(), m = mu.size();
    if (n < m) return 0;
    std::vector<int> parts = mu.parts();
    for (int i = 0; i < n - m; ++i) parts.push_back(1);
    std::sort(parts.rbegin(), parts.rend());
    Int falling = 1;
    for (int i = 0; i < m; ++i) falling *= n - i;
    return Rat(falling * mn_character(lambda, Partition(parts)), lambda.dim_hook());
}

std::vector<std::vector<Int>> character_table(int n) {
    if (n > 10) throw std::length_error("character_table: n <= 10");
    auto ps = partitions_of(n);
    std::vector<std::vector<Int>> t(ps.size(), std::vector<Int>(ps.size()));
    for (size_t l = 0; l < ps.size(); ++l)
        for (size_t m = 0; m < ps.size(); ++m) t[l][m] = mn_character(ps[l], ps[m]);
    return t;
}

std::string character_table_csv(int n) {
    auto ps = partitions_of(n);
    auto t = character_table(n);
    std::ostringstream out;
    out << "lambda";
    for (const auto& mu : ps) out << ",\"" << mu.str() << "\"";
    out << "\n";
    for (size_t l = 0; l < ps.size(); ++l) {
        out << "\"" << ps[l].str() << "\"";
        for (size_t m = 0; m < ps.size(); ++m) out << "," << t[l][m];
        out << "\n";
    }
    return out.str();
}

namespace {

// Solve A x = y exactly; throws on singular systems.
std::vector<Rat> solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> y) {
    int n = (int)a.size();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("solve_rational: singular system");
        std::swap(a[piv], a[c]);
        std::swap(y[piv], y[c]);
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rat f = a[r][c] / a[c][c];
            for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            y[r] -= f * y[c];
        }
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = y[i] / a[i][i];
    return x;
}

}  // namespace

std::map<Partition, Rat> expand_in_sigma_basis(
    const std::function<Rat(const Partition&)>& f, int degree_bound) {
    int D = degree_bound;
    if (D < 0 || D > 10) throw std::invalid_argument("expand_in_sigma_basis: degree <= 10");
    std::vector<Partition> mus;
    for (int k = 0; k <= D; ++k)
        for (auto& p : partitions_of(k)) mus.push_back(p);
    int m = (int)mus.size();
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m));
    std::vector<Rat> y(m);
    for (int t = 0; t < m; ++t) {
        for (int u = 0; u < m; ++u) a[t][u] = sigma(mus[u], mus[t]);
        y[t] = f(mus[t]);
    }
    std::vector<Rat> x = solve_rational(std::move(a), std::move(y));
    std::map<Partition, Rat> out;
    for (int u = 0; u < m; ++u)
        if (x[u] != 0) out[mus[u]] = x[u];
    // If f really has degree <= D, the expansion must also match on larger
    // partitions; otherwise report it instead of returning garbage.
    for (int k = D + 1; k <= std::min(D + 2, kEnumerationCap); ++k) {
        for (auto& lam : partitions_of(k)) {
            Rat v = 0;
            for (int u = 0; u < m; ++u)
                if (x[u] != 0) v += x[u] * sigma(mus[u], lam);
            if (v != f(lam))
                throw std::domain_error(
                    "expand_in_sigma_basis: residual on test partition; "
                    "input is not an observable of the stated degree");
        }
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> set_partitions(int r) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> cur;
    std::function<void(int)> rec = [&](int k) {
        if (k == r) {
            out.push_back(cur);
            return;
        }
        size_t blocks = cur.size();  // new singletons appended below must not be revisited
        for (size_t i = 0; i < blocks; ++i) {
            cur[i].push_back(k);
            rec(k + 1);
            cur[i].pop_back();
        }
        cur.push_back({k});
        rec(k + 1);
        cur.pop_back();
    };
    rec(0);
    return out;
}

}  // namespace thoma
