#include "thoma/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thoma {

KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf) {
    size_t n = samples.size();
    if (n < 100) throw std::invalid_argument("ks_test: need >= 100 samples");
    std::sort(samples.begin(), samples.end());
    double d = 0;
    for (size_t i = 0; i < n; ++i) {
        double f = cdf(samples[i]);
        d = std::max(d, std::abs(f - (double)i / n));
        d = std::max(d, std::abs((double)(i + 1) / n - f));
    }
    KsResult r;
    r.statistic = d;
    r.p_value = kolmogorov_survival(std::sqrt((double)n) * d);
    return r;
}

Chi2Result chi2_gof(const std::vector<long long>& counts, const std::vector<double>& probs) {
    if (counts.size() != probs.size() || counts.size() < 2)
        throw std::invalid_argument("chi2_gof: bad bins");
    long long total = 0;
    for (long long c : counts) total += c;
    if (total < 100) throw std::invalid_argument("chi2_gof: need >= 100 samples");
    double stat = 0;
    for (size_t i = 0; i < counts.size(); ++i) {
        double e = probs[i] * (double)total;
        if (e <= 0) throw std::invalid_argument("chi2_gof: zero expected cell");
        double diff = (double)counts[i] - e;
        stat += diff * diff / e;
    }
    Chi2Result r;
    r.statistic = stat;
    r.dof = (int)counts.size() - 1;
    r.p_value = gamma_q(r.dof / 2.0, stat / 2.0);
    return r;
}

std::vector<double> empirical_cumulants(const std::vector<double>& samples, int order) {
    if (order < 1 || order > 4) throw std::invalid_argument("empirical_cumulants: order <= 4");
    if (samples.size() < 100) throw std::invalid_argument("empirical_cumulants: need samples");
    MomentAccumulator acc;
    for (double x : samples) acc.add(x);
    std::vector<double> k;
    k.push_back(acc.mean());
    if (order >= 2) k.push_back(acc.central(2));
    if (order >= 3) k.push_back(acc.central(3));
    if (order >= 4) k.push_back(acc.central(4) - 3 * acc.central(2) * acc.central(2));
    return k;
}

namespace {

double gamma_p_series(double a, double x) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_contfrac(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1 - a, c = 1 / tiny, d = 1 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -i * (i - a);
        b += 2;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_q(double a, double x) {
    if (x < 0 || a <= 0) throw std::invalid_argument("gamma_q: bad args");
    if (x == 0) return 1;
    if (x < a + 1) return 1 - gamma_p_series(a, x);
    return gamma_q_contfrac(a, x);
}

double kolmogorov_survival(double x) {
    if (x <= 0) return 1;
    double s = 0;
    for (int k = 1; k <= 100; ++k) {
        double term = 2 * std::exp(-2.0 * k * k * x * x);
        s += (k % 2 == 1) ? term : -term;
        if (term < 1e-16) break;
    }
    return std::min(1.0, std::max(0.0, s));
}

double bessel3_cdf(double y) {
    if (y <= 0) return 0;
    return std::erf(y / std::sqrt(2.0)) - std::sqrt(2.0 / M_PI) * y * std::exp(-y * y / 2);
}

double MomentAccumulator::central(int k) const {
    if (k < 2 || k > 6) throw std::invalid_argument("central: order in [2,6]");
    double mu = mean();
    // binomial expansion of E[(x - mu)^k] in raw moments
    static const double binom[7][7] = {
        {1, 0, 0, 0, 0, 0, 0},      {1, 1, 0, 0, 0, 0, 0},     {1, 2, 1, 0, 0, 0, 0},
        {1, 3, 3, 1, 0, 0, 0},      {1, 4, 6, 4, 1, 0, 0},     {1, 5, 10, 10, 5, 1, 0},
        {1, 6, 15, 20, 15, 6, 1}};
    double m = 0;
    for (int j = 0; j <= k; ++j) {
        double raw = (j == 0) ? 1.0 : raw_[j] / (double)n_;
        double sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
        m += binom[k][j] * sign * std::pow(mu, k - j) * raw;
    }
    return m;
}

}  // namespace thoma
