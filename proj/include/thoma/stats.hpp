// Statistics for the Monte Carlo harness: goodness-of-fit tests, empirical
// moments/cumulants, and the closed-form limit densities used as targets.
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace thoma {

struct KsResult {
    double statistic = 0;  // sup |F_emp - F|
    double p_value = 0;    // asymptotic Kolmogorov distribution
};

// One-sample KS test; `cdf` is the target distribution function.  Requires at
// least 100 samples.
KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf);

struct Chi2Result {
    double statistic = 0;
    int dof = 0;
    double p_value = 0;  // upper tail of chi^2 with bins-1 dof
};

// counts[i] observed, probs[i] expected cell probabilities (must sum to 1).
Chi2Result chi2_gof(const std::vector<long long>& counts, const std::vector<double>& probs);

// Plug-in cumulants k_1..k_order (order <= 4) from a sample; bias O(1/N).
std::vector<double> empirical_cumulants(const std::vector<double>& samples, int order);

// Regularized upper incomplete gamma Q(a, x); used by chi2_gof.
double gamma_q(double a, double x);

// Survival function of the Kolmogorov distribution, Q(x) = 2 sum (-1)^{k-1} e^{-2k^2x^2}.
double kolmogorov_survival(double x);

// CDF of the density 1_{y>=0} sqrt(2/pi) y^2 e^{-y^2/2}:
// F(y) = erf(y/sqrt(2)) - sqrt(2/pi) y e^{-y^2/2}.
double bessel3_cdf(double y);

// Streaming accumulator for central moments up to order 6 of one variable.
class MomentAccumulator {
  public:
    void add(double x) {
        ++n_;
        for (int k = 1; k <= 6; ++k) raw_[k] += pow_i(x, k);
    }
    void merge(const MomentAccumulator& o) {
        n_ += o.n_;
        for (int k = 1; k <= 6; ++k) raw_[k] += o.raw_[k];
    }
    long long count() const { return n_; }
    double mean() const { return raw_[1] / (double)n_; }
    // central moment of order k (2 <= k <= 6)
    double central(int k) const;

  private:
    static double pow_i(double x, int k) {
        double r = 1;
        while (k--) r *= x;
        return r;
    }
    long long n_ = 0;
    double raw_[7] = {0, 0, 0, 0, 0, 0, 0};
};

}  // namespace thoma
