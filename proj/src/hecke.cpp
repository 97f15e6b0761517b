#include "thoma/hecke.hpp"

#include <stdexcept>

namespace thoma {

std::map<Partition, Rat> h_to_p(const Partition& mu) {
    if (mu.size() > 10) throw std::length_error("h_to_p: |mu| <= 10");
    std::map<Partition, Rat> acc;
    acc[Partition()] = 1;
    for (int k : mu.parts()) {
        std::map<Partition, Rat> hk;
        for (auto& nu : partitions_of(k)) hk[nu] = Rat(1, z_order(nu));
        std::map<Partition, Rat> next;
        for (auto& [a, ca] : acc)
            for (auto& [b, cb] : hk) next[union_parts(a, b)] += ca * cb;
        acc = std::move(next);
    }
    return acc;
}

Rat q_character(const Partition& lambda, const Partition& mu, const Rat& q) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("q_character: size mismatch");
    if (q == 1) return Rat(mn_character(lambda, mu));
    Rat sum = 0;
    for (auto& [nu, c] : h_to_p(mu)) {
        Rat prod = 1;
        for (int part : nu.parts()) prod *= pow_rat(q, part) - 1;
        sum += prod * c * Rat(mn_character(lambda, nu));
    }
    return sum / pow_rat(q - 1, mu.length());
}

namespace {

// prod over cells of ((1-q) + z (1 - q^{col-row})) / (1 - q^{hook}), times
// q^{n(lambda)}.  The content exponent is column minus row; with the
// convention flipped the identity with the Jacobi-Trudi route fails already
// at lambda = (2).
Rat hook_content_value(const Partition& lambda, const Rat& q, const Rat& z) {
    if (q == 0 || q == 1) throw std::domain_error("hook_content: q not in {0,1}");
    Rat v = pow_rat(q, (int)lambda.n_stat().convert_to<long long>());
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j) {
            v *= (1 - q) + z * (1 - pow_rat(q, j - i));
            v /= 1 - pow_rat(q, lambda.hook_length(i, j));
        }
    return v;
}

}  // namespace

TraceWeight markov_trace_weight(const Partition& lambda, const Rat& q, const Rat& z) {
    int n = lambda.size();
    std::vector<Rat> p(n + 1);
    for (int k = 1; k <= n; ++k)
        p[k] = (pow_rat(1 - q + z, k) - pow_rat(z, k)) / (1 - pow_rat(q, k));
    TraceWeight w;
    w.jacobi_trudi = schur_from_p(lambda, p);
    w.hook_content = hook_content_value(lambda, q, z);
    return w;
}

Thoma QtParams::omega() const {
    return Thoma(Alphabet::geometric(t * (1 - q), q),
                 Alphabet::geometric((1 - t) * (1 - q), q));
}

Rat qt_p_k(const Rat& q, const Rat& t, int k) {
    if (k == 1) return 1;
    return (pow_rat(t, k) - pow_rat(t - 1, k)) * pow_rat(1 - q, k) / (1 - pow_rat(q, k));
}

PartitionMeasure qt_plancherel(int n, const QtParams& params) {
    if (n > 12) throw std::length_error("qt_plancherel: n <= 12");
    std::vector<Rat> p(n + 1);
    for (int k = 1; k <= n; ++k) p[k] = qt_p_k(params.q, params.t, k);
    PartitionMeasure m;
    m.n = n;
    for (auto& lam : partitions_of(n)) {
        Rat dim(lam.dim_hook());
        Rat w = dim * schur_from_p(lam, p);
        // positive hook-content form, b(lambda) = n(lambda)
        Rat hc = pow_rat(params.q, (int)lam.n_stat().convert_to<long long>()) *
                 pow_rat(1 - params.q, n);
        for (int i = 1; i <= lam.length(); ++i)
            for (int j = 1; j <= lam.row(i); ++j) {
                hc *= params.t + (1 - params.t) * pow_rat(params.q, j - i);
                hc /= 1 - pow_rat(params.q, lam.hook_length(i, j));
            }
        if (dim * hc != w)
            throw std::logic_error("qt_plancherel: hook-content form disagrees at " + lam.str());
        m.weights[lam] = w;
    }
    return m;
}

Rat q_word_weight(const std::vector<int>& word, const Rat& q) {
    int m = (int)word.size();
    if (m == 0) return 1;
    long long comaj = 0;
    for (int i = 1; i < m; ++i)
        if (word[i - 1] > word[i]) comaj += m - i;
    Rat den = 1;  // {m!}_q = prod (1-q^i) / (1-q)^m
    for (int i = 1; i <= m; ++i) den *= 1 - pow_rat(q, i);
    return pow_rat(q, (int)comaj) * pow_rat(1 - q, m) / den;
}

PermutationMeasure qt_permutation_measure(int n, const QtParams& params) {
    if (n > 8) throw std::length_error("qt_permutation_measure: n <= 8");
    const Rat& q = params.q;
    const Rat& t = params.t;
    PermutationMeasure m;
    m.n = n;
    for (auto& sigma : all_permutations(n)) {
        std::vector<int> w = sigma.one_line();
        std::vector<int> wr(w.rbegin(), w.rend());  // sigma * w_0
        Rat total = 0;
        for (int i = 0; i <= n; ++i) {
            Rat coeff = pow_rat(t, i) * pow_rat(1 - t, n - i);
            if (coeff == 0) continue;
            std::vector<int> pre(w.begin(), w.begin() + i);
            std::vector<int> suf(wr.begin(), wr.begin() + (n - i));
            total += coeff * q_word_weight(pre, q) * q_word_weight(suf, q);
        }
        m.weights[sigma] = total;
    }
    return m;
}

}  // namespace thoma
