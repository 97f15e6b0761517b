#include "thoma/measures.hpp"

#include <sstream>
#include <stdexcept>

namespace thoma {

Rat PartitionMeasure::total() const {
    Rat s = 0;
    for (auto& [k, v] : weights) s += v;
    return s;
}

std::string PartitionMeasure::csv() const {
    std::ostringstream out;
    out << "object,weight\n";
    for (auto& [k, v] : weights) out << "\"" << k.str() << "\"," << to_string(v) << "\n";
    return out.str();
}

Rat PermutationMeasure::total() const {
    Rat s = 0;
    for (auto& [k, v] : weights) s += v;
    return s;
}

std::string PermutationMeasure::csv() const {
    std::ostringstream out;
    out << "object,weight\n";
    for (auto& [k, v] : weights) {
        out << "\"";
        for (int i = 1; i <= k.size(); ++i) {
            if (i > 1) out << " ";
            out << k(i);
        }
        out << "\"," << to_string(v) << "\n";
    }
    return out.str();
}

PartitionMeasure p_measure(int n, const Thoma& omega) {
    if (n > 12) throw std::length_error("p_measure: n <= 12");
    PartitionMeasure m;
    m.n = n;
    for (auto& lam : partitions_of(n)) m.weights[lam] = Rat(lam.dim_hook()) * schur(lam, omega);
    return m;
}

namespace {

struct LCache {
    const Thoma* omega;
    std::map<Composition, Rat> la;      // L_c(alpha)
    std::map<Composition, Rat> lbconj;  // L_{conj(c)}(beta)

    Rat alpha(const Composition& c) {
        auto it = la.find(c);
        if (it != la.end()) return it->second;
        Rat v = L_c(c, omega->alpha);
        la.emplace(c, v);
        return v;
    }
    Rat beta_conj(const Composition& c) {
        auto it = lbconj.find(c);
        if (it != lbconj.end()) return it->second;
        Rat v = L_c(c.conjugate(), omega->beta);
        lbconj.emplace(c, v);
        return v;
    }
};

Rat q_weight_cached(const Composition& c, const Thoma& omega, LCache& cache) {
    int n = c.size();
    Rat w = 0;
    bool has_gamma = omega.gamma > 0;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
            int k = n - i - j;
            if (k > 0 && !has_gamma) continue;
            Rat fa = (i == 0) ? Rat(1) : cache.alpha(c.restrict(1, i));
            if (fa == 0) continue;
            Rat fb = (j == 0) ? Rat(1) : cache.beta_conj(c.restrict(i + 1, i + j));
            if (fb == 0) continue;
            Rat fg = (k == 0) ? Rat(1) : pow_rat(omega.gamma, k) / Rat(factorial(k));
            w += fa * fb * fg;
        }
    }
    return w;
}

}  // namespace

Rat q_weight(const Permutation& sigma, const Thoma& omega) {
    LCache cache{&omega, {}, {}};
    return q_weight_cached(sigma.recoil_composition(), omega, cache);
}

PermutationMeasure q_measure(int n, const Thoma& omega) {
    if (n > 8) throw std::length_error("q_measure: n <= 8");
    PermutationMeasure m;
    m.n = n;
    LCache cache{&omega, {}, {}};
    for (auto& sigma : all_permutations(n))
        m.weights[sigma] = q_weight_cached(sigma.recoil_composition(), omega, cache);
    return m;
}

CheckReport pushforward_check(int n, const Thoma& omega) {
    PermutationMeasure q = q_measure(n, omega);
    std::map<Partition, Rat> fiber;
    for (auto& [sigma, w] : q.weights) fiber[rsk(sigma).shape] += w;
    PartitionMeasure p = p_measure(n, omega);
    CheckReport rep;
    for (auto& [lam, w] : p.weights) {
        Rat f = fiber.count(lam) ? fiber[lam] : Rat(0);
        if (f != w) {
            rep.ok = false;
            rep.detail = "mismatch at " + lam.str();
            return rep;
        }
    }
    return rep;
}

CheckReport harmonicity_check(const Thoma& omega, int n_max) {
    if (n_max > 11) throw std::length_error("harmonicity_check: n_max <= 11");
    CheckReport rep;
    for (int n = 0; n < n_max; ++n) {
        for (auto& lam : partitions_of(n)) {
            Rat lhs = schur(lam, omega);
            Rat rhs = 0;
            for (auto& big : lam.covers()) rhs += schur(big, omega);
            if (lhs != rhs) {
                rep.ok = false;
                rep.detail = "harmonicity fails at " + lam.str();
                return rep;
            }
        }
    }
    return rep;
}

ExpectSigma expect_sigma(int n, const Thoma& omega, const Partition& mu) {
    if (n > 10) throw std::length_error("expect_sigma: n <= 10");
    ExpectSigma e;
    e.by_enumeration = 0;
    for (auto& [lam, w] : p_measure(n, omega).weights)
        e.by_enumeration += w * sigma(mu, lam);
    if (mu.size() > n) {
        e.closed_form = 0;
    } else {
        Int falling = 1;
        for (int i = 0; i < mu.size(); ++i) falling *= n - i;
        e.closed_form = Rat(falling) * p_mu(omega, mu);
    }
    return e;
}

std::vector<std::pair<Partition, Rat>> growth_chain_weights(const Partition& lambda,
                                                            const Thoma& omega) {
    Rat denom = schur(lambda, omega);
    if (denom <= 0) throw std::domain_error("growth_chain: s_lambda(omega) must be > 0");
    std::vector<std::pair<Partition, Rat>> out;
    for (auto& big : lambda.covers()) out.emplace_back(big, schur(big, omega) / denom);
    return out;
}

PartitionMeasure growth_chain_marginal(int n, const Thoma& omega) {
    if (n > 12) throw std::length_error("growth_chain_marginal: n <= 12");
    std::map<Partition, Rat> cur;
    cur[Partition()] = 1;
    for (int level = 0; level < n; ++level) {
        std::map<Partition, Rat> next;
        for (auto& [lam, mass] : cur) {
            if (mass == 0) continue;
            for (auto& [big, p] : growth_chain_weights(lam, omega)) next[big] += mass * p;
        }
        cur = std::move(next);
    }
    PartitionMeasure m;
    m.n = n;
    m.weights = std::move(cur);
    return m;
}

}  // namespace thoma
