// Hecke-algebra character layer: h-to-p expansions, q-characters, Markov
// trace weights, and (q,t)-Plancherel measures.
#pragma once

#include "thoma/measures.hpp"

#include <map>

namespace thoma {

// Expansion of h_mu in the power-sum basis: coefficient of p_nu is
// <h_mu, p_nu> / z_nu (each h_k = sum over nu |- k of p_nu / z_nu).
std::map<Partition, Rat> h_to_p(const Partition& mu);

// zeta^lambda(q, T_mu) via the change-of-basis formula
// (q-1)^{l(mu)} zeta^lambda(q,T_mu) = sum_nu prod_i (q^{nu_i}-1) * c_nu * zeta^lambda(nu),
// with c_nu the h_to_p coefficients.  q = 1 returns the classical character.
Rat q_character(const Partition& lambda, const Partition& mu, const Rat& q);

// Markov trace weight s_lambda(X_{q,z}) where p_k(X_{q,z}) =
// ((1-q+z)^k - z^k)/(1-q^k).  Returns both computation routes: Jacobi-Trudi
// from the power sums, and the hook-content closed form
// q^{n(lambda)} * prod_cells ((1-q) + z(1 - q^{col-row})) / (1 - q^{hook}).
struct TraceWeight {
    Rat jacobi_trudi;
    Rat hook_content;
    Rat diff() const { return jacobi_trudi - hook_content; }
};
TraceWeight markov_trace_weight(const Partition& lambda, const Rat& q, const Rat& z);

struct QtParams {
    Rat q, t;
    Rat z() const { return -(1 - q) * (1 - t); }
    // alpha = geometric(t(1-q), q), beta = geometric((1-t)(1-q), q), gamma = 0
    Thoma omega() const;
};

// p_k of omega_{q,t} as a formal specialization, valid for any rational
// q != 1 (also q > 1, where the alphabets themselves no longer converge):
// p_k = (t^k - (t-1)^k)(1-q)^k / (1-q^k).
Rat qt_p_k(const Rat& q, const Rat& t, int k);

// The (q,t)-Plancherel measure on partitions of n, weights
// dim(lambda) * s_lambda(omega_{q,t}); computed from qt_p_k so q > 1 is
// allowed.  Also asserts the positive hook-content form
// q^{n(lambda)} (1-q)^n prod (t + (1-t) q^{col-row}) / prod (1 - q^{hook})
// for each weight, and throws on any disagreement.
PartitionMeasure qt_plancherel(int n, const QtParams& params);

// Permutation-level interpolation:
// Q_{n,q,t}[sigma] = sum_i t^i (1-t)^{n-i} Q_{i,q}[sigma restricted to 1..i]
//                    * Q_{n-i,q}[(sigma w_0) restricted to 1..n-i],
// with Q_{m,q}[w] = q^{comaj(w)} / {m!}_q on descent compositions; n <= 8.
PermutationMeasure qt_permutation_measure(int n, const QtParams& params);

// q^{comaj(c(w))}/{m!}_q for the descent composition of the first m values.
Rat q_word_weight(const std::vector<int>& word, const Rat& q);

}  // namespace thoma
