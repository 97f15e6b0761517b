// Monte Carlo experiments verifying the limit laws at desk scale, plus the
// exact self-test battery.  Every experiment is deterministic given
// (config, seed): work is partitioned into fixed chunks with per-chunk RNG
// substreams, so results do not depend on the worker count.
#pragma once

#include "thoma/shuffle.hpp"
#include "thoma/stats.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace thoma {

struct ReportRow {
    std::string name;
    double target = 0;
    double estimate = 0;
    double se = 0;  // standard error of the estimate (batch means), 0 if exact
    bool pass = true;
    std::string provenance;  // "closed-form", "quadrature", "exact", ...
};

struct Report {
    std::string title;
    std::string config;  // full config, echoed as a CSV header comment
    std::vector<ReportRow> rows;
    std::vector<std::string> extra_csv;  // e.g. histogram rows

    bool ok() const;
    std::string csv() const;
    std::string text() const;
};

// Observables of a shape given as row lengths (zeros allowed at the end).
double p_obs_shape(int k, const std::vector<long long>& rows);
double sigma_obs_shape(int l, const std::vector<long long>& rows);  // l <= 4

// Moments of the Vandermonde-squared Gaussian density on the trace-zero
// ordered chamber, by composite-Simpson quadrature (d = 2 or 3).  Returns
// {E[y_1..y_d], E[y_1^2..y_d^2]}.
std::vector<double> gue_chamber_moments(int d);

// chi^lambda(2-cycle) law of large numbers over an n-grid.
Report lln_experiment(const Thoma& omega, const std::vector<int>& n_grid, long long samples,
                      uint64_t seed, int workers);

// Character CLT: covariance of sqrt(n)(Sigma_l/n^l - p_l) for cycles l, m <= 4.
Report clt_char_experiment(const Thoma& omega, int n, long long samples, int l, int m,
                           uint64_t seed, int workers);

// Row CLT: covariance of sqrt(n)(lambda_i/n - alpha_i).
Report clt_rows_experiment(const Thoma& omega, int n, long long samples, uint64_t seed,
                           int workers);

// Longest-row fluctuations of balanced 2-shuffles against the Bessel-3 law.
Report bessel_experiment(int n, long long samples, uint64_t seed, int workers);

// d-letter uniform shuffles against the GUE-chamber law (d = 2 or 3 targets).
Report gue_experiment(int d, int n, long long samples, uint64_t seed, int workers);

// Mixed alphabets p_1^{d_1} ... p_r^{d_r}: block sums against the multinomial
// CLT, within-block spread against the chamber oracle (blocks of size <= 3).
struct MixedBlock {
    Rat p;
    int d = 1;
};
Report mixed_experiment(const std::vector<MixedBlock>& blocks, int n, long long samples,
                        uint64_t seed, int workers);

// Young-graph growth chain sampled at double precision, chi^2 against the
// exact n-step law.
Report markov_chain_experiment(const Thoma& omega, int n, long long samples, uint64_t seed);

// Path-transform identities on random words and integer paths.
Report pitman_verify(int d, int n, long long trials, uint64_t seed);

// Runs every exact invariant suite; prints one line per suite; returns the
// number of failures.
int selftest(std::ostream& out);

}  // namespace thoma
