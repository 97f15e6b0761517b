// Specializations of symmetric functions at Thoma parameters.
//
// An alphabet is either a finite list of nonnegative rationals or a geometric
// sequence a, aq, aq^2, ...  A Thoma parameter is a pair of alphabets (alpha,
// beta) with gamma = 1 - |alpha| - |beta| >= 0 derived, never input.  All
// evaluation here is exact rational; callers convert to double when needed.
#pragma once

#include "thoma/partition.hpp"
#include "thoma/rational.hpp"

#include <vector>

namespace thoma {

struct Alphabet {
    enum Kind { Finite, Geometric } kind = Finite;
    std::vector<Rat> values;  // Finite: weakly decreasing, >= 0
    Rat scale = 0, ratio = 0; // Geometric: a >= 0, 0 <= q < 1

    static Alphabet finite(std::vector<Rat> v);
    static Alphabet geometric(Rat a, Rat q);
    static Alphabet empty() { return finite({}); }

    Rat total() const;            // sum of all letters
    Rat power_sum(int k) const;   // sum of k-th powers of the letters
    bool is_empty() const;
};

struct Thoma {
    Alphabet alpha, beta;
    Rat gamma;  // derived

    Thoma() : alpha(Alphabet::empty()), beta(Alphabet::empty()), gamma(1) {}
    Thoma(Alphabet a, Alphabet b);

    static Thoma zero() { return Thoma(); }  // alpha = beta = 0, gamma = 1
};

// p_k of the formal alphabet A - B + gamma*E.  p_1 = 1 always.
Rat p_k(const Thoma& omega, int k);
Rat p_mu(const Thoma& omega, const Partition& mu);  // product over parts

// Newton recurrence: h_0..h_n from p_1..p_n (k*h_k = sum p_i h_{k-i}).
std::vector<Rat> h_from_p(const std::vector<Rat>& p, int n);

// Schur value from power sums via Jacobi-Trudi, s_lambda = det(h_{lambda_i - i + j}).
// `p` must supply p_1..p_{|lambda|} (p[k] is p_k, p[0] unused).
Rat schur_from_p(const Partition& lambda, const std::vector<Rat>& p);

// s_lambda(A - B + gamma*E).
Rat schur(const Partition& lambda, const Thoma& omega);

// Principal specialization s_lambda(1, q, q^2, ...) = q^{n(lambda)} / prod (1 - q^{h}).
Rat schur_hook_q(const Partition& lambda, const Rat& q);

// Fundamental quasi-symmetric function L_c at an alphabet.  Finite alphabets
// use a DP over positions x last-letter index; geometric alphabets use the
// closed form a^n q^{comaj(c)} / prod_{i=1..n} (1 - q^i).
Rat L_c(const Composition& c, const Alphabet& X);

}  // namespace thoma
