// Exact coherent measures on partitions and their permutation-level
// counterparts, plus coherence checks and observable expectations.
#pragma once

#include "thoma/characters.hpp"
#include "thoma/rsk.hpp"
#include "thoma/specialization.hpp"

#include <map>
#include <string>

namespace thoma {

struct PartitionMeasure {
    int n = 0;
    std::map<Partition, Rat> weights;

    Rat total() const;
    std::string csv() const;  // columns: object, weight (exact fraction)
};

struct PermutationMeasure {
    int n = 0;
    std::map<Permutation, Rat> weights;

    Rat total() const;
    std::string csv() const;
};

// P_{n,omega}[lambda] = dim(lambda) * s_lambda(A - B + gamma E); n <= 12.
PartitionMeasure p_measure(int n, const Thoma& omega);

// Q_{n,omega}[sigma] = sum_{i+j+k=n} (gamma^k/k!) L_{c[1..i]}(alpha)
//                      * L_{conj(c[i+1..i+j])}(beta), c = recoil composition
// of sigma; n <= 8.
PermutationMeasure q_measure(int n, const Thoma& omega);

// Weight a single permutation under Q_{n,omega} (no full enumeration).
Rat q_weight(const Permutation& sigma, const Thoma& omega);

struct CheckReport {
    bool ok = true;
    std::string detail;  // first failing object, if any
};

// RSK push-forward of q_measure equals p_measure, per lambda; n <= 8.
CheckReport pushforward_check(int n, const Thoma& omega);

// s_lambda(omega) = sum over covers of s_Lambda(omega), |lambda| < n_max <= 11.
CheckReport harmonicity_check(const Thoma& omega, int n_max);

// E_{n,omega}[Sigma_mu]: enumeration value and closed form n^{falling |mu|} p_mu.
struct ExpectSigma {
    Rat by_enumeration;
    Rat closed_form;
};
ExpectSigma expect_sigma(int n, const Thoma& omega, const Partition& mu);

// One step of the Young-graph chain with p(lambda,Lambda) = s_Lambda/s_lambda;
// cover weights are returned for the caller's sampler.
std::vector<std::pair<Partition, Rat>> growth_chain_weights(const Partition& lambda,
                                                            const Thoma& omega);

// Exact n-step marginal of the chain started at the empty partition.
PartitionMeasure growth_chain_marginal(int n, const Thoma& omega);

}  // namespace thoma
