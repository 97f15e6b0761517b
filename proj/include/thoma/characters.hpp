// Symmetric-group characters and the observable algebra on Young diagrams.
#pragma once

#include "thoma/partition.hpp"
#include "thoma/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace thoma {

struct FrobeniusCoords {
    std::vector<Rat> a, b;  // strictly decreasing positive half-integers
    int d = 0;              // diagonal size
};

FrobeniusCoords frobenius(const Partition& lambda);

// Frobenius moments: p_k(lambda) = sum a_i^k + (-1)^{k-1} sum b_i^k.
Rat p_obs(int k, const Partition& lambda);
Rat p_obs_mu(const Partition& mu, const Partition& lambda);  // product over parts

// Non-normalized irreducible character zeta^lambda(mu), |lambda| = |mu|,
// computed by the Murnaghan-Nakayama border-strip recursion (memoized;
// safe under concurrent calls).
Int mn_character(const Partition& lambda, const Partition& mu);

// Sigma_mu(lambda) = n^{falling |mu|} * zeta^lambda(mu + 1^{n-|mu|}) / dim lambda,
// and 0 when |lambda| < |mu|.
Rat sigma(const Partition& mu, const Partition& lambda);

// Full character table for S_n: rows lambda, columns mu, both in canonical
// (reverse lexicographic) order.
std::vector<std::vector<Int>> character_table(int n);
std::string character_table_csv(int n);

// Expands f (a function on partitions of degree <= D) in the Sigma basis:
// f = sum c_mu Sigma_mu over |mu| <= D.  Throws if f is not an observable of
// degree <= D (nonzero residual on partitions of size D+1, D+2).
std::map<Partition, Rat> expand_in_sigma_basis(
    const std::function<Rat(const Partition&)>& f, int degree_bound);

// Set partitions of {0,...,r-1}, each block sorted, blocks by smallest element.
std::vector<std::vector<std::vector<int>>> set_partitions(int r);

// Joint cumulant from mixed moments: moments[S] = E[prod_{j in S} X_j] for
// every nonempty subset S of {0,...,r-1}, encoded as a bitmask.
template <class T>
T joint_cumulant_from_moments(const std::vector<T>& moments_by_mask, int r) {
    if (r < 1 || r > 8) throw std::invalid_argument("joint_cumulant: r in [1,8]");
    if ((int)moments_by_mask.size() < (1 << r))
        throw std::invalid_argument("joint_cumulant: missing moments");
    T total{};
    for (const auto& pi : set_partitions(r)) {
        T prod(1);
        for (const auto& block : pi) {
            unsigned mask = 0;
            for (int j : block) mask |= 1u << j;
            prod = prod * moments_by_mask[mask];
        }
        long long sign = (pi.size() % 2 == 1) ? 1 : -1;
        long long fact = 1;
        for (size_t i = 1; i + 1 <= pi.size(); ++i) fact *= (long long)i;
        prod = prod * T(sign * fact);
        total = total + prod;
    }
    return total;
}

}  // namespace thoma
