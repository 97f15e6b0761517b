#include "thoma/experiments.hpp"

#include "thoma/hecke.hpp"
#include "thoma/measures.hpp"
#include "thoma/pitman.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace thoma {

namespace {

constexpr int kChunks = 128;  // fixed chunk grid: results independent of workers

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

template <class Acc>
std::vector<Acc> run_chunks(long long samples, int workers, uint64_t seed,
                            const std::function<void(long long, long long, Rng&, Acc&)>& work) {
    long long per = (samples + kChunks - 1) / kChunks;
    std::vector<Acc> accs(kChunks);
    std::atomic<int> next{0};
    auto body = [&]() {
        for (;;) {
            int c = next.fetch_add(1);
            if (c >= kChunks) return;
            long long lo = (long long)c * per;
            if (lo >= samples) continue;
            long long cnt = std::min(per, samples - lo);
            Rng rng = Rng::substream(seed, (uint64_t)c);
            work(lo, cnt, rng, accs[c]);
        }
    };
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    return accs;
}

// standard error of a statistic from its per-batch values
double batch_se(const std::vector<double>& vals) {
    size_t b = vals.size();
    if (b < 2) return 0;
    double mean = 0;
    for (double v : vals) mean += v;
    mean /= (double)b;
    double s2 = 0;
    for (double v : vals) s2 += (v - mean) * (v - mean);
    s2 /= (double)(b - 1);
    return std::sqrt(s2 / (double)b);
}

// Shape sampler: row lengths of the RSK shape of an n-letter omega-word.
std::function<std::vector<long long>(Rng&)> make_shape_sampler(const Thoma& omega, int n) {
    if (omega.alpha.kind == Alphabet::Finite && omega.beta.is_empty() && omega.gamma == 0) {
        std::vector<double> probs;
        for (const Rat& v : omega.alpha.values) probs.push_back(to_double(v));
        if (probs.size() == 2) {
            TwoRowShapeSampler s(probs[0]);
            return [s, n](Rng& rng) {
                auto r = s.sample(n, rng);
                return std::vector<long long>{r[0], r[1]};
            };
        }
        DLetterShapeSampler s(probs);
        return [s, n](Rng& rng) { return s.sample(n, rng); };
    }
    // general route: full shuffle + insertion
    OmegaShuffler sh(n, omega);
    return [sh](Rng& rng) {
        Partition shape = rsk(sh.sample(rng)).shape;
        std::vector<long long> rows;
        for (int p : shape.parts()) rows.push_back(p);
        return rows;
    };
}

std::string omega_str(const Thoma& omega) {
    auto alph = [](const Alphabet& a) {
        if (a.kind == Alphabet::Geometric)
            return "geom(" + to_string(a.scale) + "," + to_string(a.ratio) + ")";
        std::string s = "[";
        for (size_t i = 0; i < a.values.size(); ++i)
            s += (i ? "," : "") + to_string(a.values[i]);
        return s + "]";
    };
    return "alpha=" + alph(omega.alpha) + " beta=" + alph(omega.beta) +
           " gamma=" + to_string(omega.gamma);
}

std::vector<std::string> histogram_csv(const std::vector<double>& samples,
                                       const std::string& var) {
    MomentAccumulator acc;
    for (double x : samples) acc.add(x);
    double mu = acc.mean(), sd = std::sqrt(acc.central(2));
    double lo = mu - 5 * sd, hi = mu + 5 * sd, w = (hi - lo) / 64;
    std::vector<long long> counts(64, 0);
    for (double x : samples) {
        int b = (int)std::floor((x - lo) / w);
        if (b >= 0 && b < 64) ++counts[b];
    }
    std::vector<std::string> lines;
    lines.push_back("histogram_var,bin_left,bin_right,count,density");
    for (int b = 0; b < 64; ++b) {
        double density = (double)counts[b] / ((double)samples.size() * w);
        lines.push_back(var + "," + fmt(lo + b * w) + "," + fmt(lo + (b + 1) * w) + "," +
                        std::to_string(counts[b]) + "," + fmt(density));
    }
    return lines;
}

}  // namespace

bool Report::ok() const {
    for (auto& r : rows)
        if (!r.pass) return false;
    return true;
}

std::string Report::csv() const {
    std::ostringstream out;
    out << "# " << config << "\n";
    out << "name,target,estimate,stderr,verdict,provenance\n";
    for (auto& r : rows)
        out << r.name << "," << fmt(r.target) << "," << fmt(r.estimate) << "," << fmt(r.se)
            << "," << (r.pass ? "pass" : "FAIL") << "," << r.provenance << "\n";
    for (auto& l : extra_csv) out << l << "\n";
    return out.str();
}

std::string Report::text() const {
    std::ostringstream out;
    out << title << "  [" << config << "]\n";
    for (auto& r : rows) {
        char line[256];
        std::snprintf(line, sizeof line, "  %-34s target=%-14.8g est=%-14.8g se=%-12.6g %s\n",
                      r.name.c_str(), r.target, r.estimate, r.se,
                      r.pass ? "pass" : "FAIL");
        out << line;
    }
    return out.str();
}

double p_obs_shape(int k, const std::vector<long long>& rows) {
    int d = 0;
    while (d < (int)rows.size() && rows[d] >= d + 1) ++d;
    double s = 0;
    for (int i = 1; i <= d; ++i) {
        double a = (double)rows[i - 1] - i + 0.5;
        long long col = 0;  // lambda'_i
        for (long long r : rows)
            if (r >= i) ++col;
        double b = (double)col - i + 0.5;
        double ak = 1, bk = 1;
        for (int j = 0; j < k; ++j) {
            ak *= a;
            bk *= b;
        }
        s += (k % 2 == 1) ? ak + bk : ak - bk;
    }
    return s;
}

double sigma_obs_shape(int l, const std::vector<long long>& rows) {
    double p1 = 0;
    for (long long r : rows) p1 += (double)r;
    switch (l) {
        case 1:
            return p1;
        case 2:
            return p_obs_shape(2, rows);
        case 3:
            return p_obs_shape(3, rows) - 1.5 * p1 * p1 + 1.25 * p1;
        case 4:
            return p_obs_shape(4, rows) - 4 * p_obs_shape(2, rows) * p1 +
                   5.5 * p_obs_shape(2, rows);
        default:
            throw std::invalid_argument("sigma_obs_shape: l <= 4");
    }
}

std::vector<double> gue_chamber_moments(int d) {
    if (d != 2 && d != 3) throw std::invalid_argument("gue_chamber_moments: d in {2,3}");
    if (d == 2) {
        // chamber y1 = -y2 = s >= 0, weight (2s)^2 e^{-s^2}; one-dimensional Simpson
        int n = 40000;
        double hi = 10.0, h = hi / n;
        double w0 = 0, m1 = 0, m2 = 0;
        for (int i = 0; i <= n; ++i) {
            double s = i * h;
            double coef = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
            double w = 4 * s * s * std::exp(-s * s);
            w0 += coef * w;
            m1 += coef * w * s;
            m2 += coef * w * s * s;
        }
        double ey1 = m1 / w0, ey2 = m2 / w0;
        return {ey1, -ey1, ey2, ey2};
    }
    // d = 3: plane y1+y2+y3 = 0 parametrized by (y1, y2); the constant surface
    // Jacobian cancels in the moment ratios
    int nx = 1600, ny = 2400;
    double x1 = 8.0, ylo = -4.0, yhi = 8.0;
    double hx = x1 / nx, hy = (yhi - ylo) / ny;
    double w0 = 0;
    double m[3] = {0, 0, 0}, m2[3] = {0, 0, 0};
    for (int i = 0; i <= nx; ++i) {
        double a = i * hx;
        double ci = (i == 0 || i == nx) ? 1 : (i % 2 ? 4 : 2);
        for (int j = 0; j <= ny; ++j) {
            double b = ylo + j * hy;
            if (b > a || a + 2 * b < 0) continue;  // outside the ordered chamber
            double c = -a - b;
            double van = (a - b) * (a - c) * (b - c);
            double cj = (j == 0 || j == ny) ? 1 : (j % 2 ? 4 : 2);
            double w = ci * cj * van * van * std::exp(-(a * a + b * b + c * c) / 2);
            w0 += w;
            m[0] += w * a;
            m[1] += w * b;
            m[2] += w * c;
            m2[0] += w * a * a;
            m2[1] += w * b * b;
            m2[2] += w * c * c;
        }
    }
    return {m[0] / w0, m[1] / w0, m[2] / w0, m2[0] / w0, m2[1] / w0, m2[2] / w0};
}

// ---------------------------------------------------------------------------
// LLN

Report lln_experiment(const Thoma& omega, const std::vector<int>& n_grid, long long samples,
                      uint64_t seed, int workers) {
    Report rep;
    rep.title = "law of large numbers";
    rep.config = "experiment=lln " + omega_str(omega) + " samples=" + std::to_string(samples) +
                 " seed=" + std::to_string(seed) + " workers=" + std::to_string(workers);
    double p2 = to_double(p_k(omega, 2));
    double a1 = omega.alpha.kind == Alphabet::Finite && !omega.alpha.values.empty()
                    ? to_double(omega.alpha.values[0])
                    : to_double(omega.alpha.scale);
    struct Acc {
        MomentAccumulator chi, row1;
    };
    std::vector<double> errs;
    for (int n : n_grid) {
        auto sampler = make_shape_sampler(omega, n);
        auto chunks = run_chunks<Acc>(
            samples, workers, seed ^ (uint64_t)n,
            [&](long long, long long cnt, Rng& rng, Acc& acc) {
                for (long long i = 0; i < cnt; ++i) {
                    auto rows = sampler(rng);
                    acc.chi.add(p_obs_shape(2, rows) / ((double)n * (n - 1)));
                    acc.row1.add((double)rows[0] / n);
                }
            });
        Acc all;
        std::vector<double> bchi, brow;
        for (auto& c : chunks) {
            if (c.chi.count() == 0) continue;
            all.chi.merge(c.chi);
            all.row1.merge(c.row1);
            bchi.push_back(c.chi.mean());
            brow.push_back(c.row1.mean());
        }
        double err = std::abs(all.chi.mean() - p2);
        errs.push_back(err);
        rep.rows.push_back({"chi_2cycle_mean_n" + std::to_string(n), p2, all.chi.mean(),
                            batch_se(bchi), err < 0.01, "closed-form p_2"});
        if (a1 > 0)
            rep.rows.push_back({"row1_over_n_mean_n" + std::to_string(n), a1, all.row1.mean(),
                                batch_se(brow), std::abs(all.row1.mean() - a1) < 0.01,
                                "closed-form alpha_1"});
    }
    bool mono = true;
    for (size_t i = 0; i + 1 < errs.size(); ++i) mono = mono && errs[i] > errs[i + 1];
    if (errs.size() > 1)
        rep.rows.push_back({"chi_abs_error_decreasing", 1, mono ? 1.0 : 0.0, 0, mono,
                            "derived from rows above"});
    return rep;
}

// ---------------------------------------------------------------------------
// Character CLT

Report clt_char_experiment(const Thoma& omega, int n, long long samples, int l, int m,
                           uint64_t seed, int workers) {
    if (l < 2 || l > 4 || m < 2 || m > 4)
        throw std::invalid_argument("clt_char: cycle lengths in [2,4]");
    Report rep;
    rep.title = "character central limit theorem";
    rep.config = "experiment=clt-char " + omega_str(omega) + " n=" + std::to_string(n) +
                 " samples=" + std::to_string(samples) + " l=" + std::to_string(l) +
                 " m=" + std::to_string(m) + " seed=" + std::to_string(seed) +
                 " workers=" + std::to_string(workers);
    auto pk = [&](int k) { return to_double(p_k(omega, k)); };
    double sqn = std::sqrt((double)n);
    double nl = std::pow((double)n, l), nm = std::pow((double)n, m);
    struct Acc {
        MomentAccumulator xl, xm;
        double sxy = 0;
        long long cnt = 0;
    };
    auto sampler = make_shape_sampler(omega, n);
    auto chunks = run_chunks<Acc>(samples, workers, seed,
                                  [&](long long, long long cnt, Rng& rng, Acc& acc) {
                                      for (long long i = 0; i < cnt; ++i) {
                                          auto rows = sampler(rng);
                                          double xl = sqn * (sigma_obs_shape(l, rows) / nl - pk(l));
                                          double xm = sqn * (sigma_obs_shape(m, rows) / nm - pk(m));
                                          acc.xl.add(xl);
                                          acc.xm.add(xm);
                                          acc.sxy += xl * xm;
                                          ++acc.cnt;
                                      }
                                  });
    Acc all;
    std::vector<double> bvarl, bvarm, bcov, bk3;
    for (auto& c : chunks) {
        if (c.cnt == 0) continue;
        all.xl.merge(c.xl);
        all.xm.merge(c.xm);
        all.sxy += c.sxy;
        all.cnt += c.cnt;
        bvarl.push_back(c.xl.central(2));
        bvarm.push_back(c.xm.central(2));
        bcov.push_back(c.sxy / (double)c.cnt - c.xl.mean() * c.xm.mean());
        bk3.push_back(c.xl.central(3));
    }
    auto cov_target = [&](int a, int b) { return a * b * (pk(a + b - 1) - pk(a) * pk(b)); };
    double varl = all.xl.central(2);
    double se = batch_se(bvarl);
    rep.rows.push_back({"var_X" + std::to_string(l), cov_target(l, l), varl, se,
                        std::abs(varl - cov_target(l, l)) <= 4 * se, "closed-form covariance"});
    if (m != l) {
        double varm = all.xm.central(2);
        se = batch_se(bvarm);
        rep.rows.push_back({"var_X" + std::to_string(m), cov_target(m, m), varm, se,
                            std::abs(varm - cov_target(m, m)) <= 4 * se,
                            "closed-form covariance"});
        double cov = all.sxy / (double)all.cnt - all.xl.mean() * all.xm.mean();
        se = batch_se(bcov);
        rep.rows.push_back({"cov_X" + std::to_string(l) + "_X" + std::to_string(m),
                            cov_target(l, m), cov, se,
                            std::abs(cov - cov_target(l, m)) <= 4 * se,
                            "closed-form covariance"});
    }
    double k3 = all.xl.central(3);
    se = batch_se(bk3);
    rep.rows.push_back({"third_cumulant_X" + std::to_string(l), 0, k3, se,
                        std::abs(k3) <= 4 * se, "gaussian limit"});
    return rep;
}

// ---------------------------------------------------------------------------
// Row CLT

Report clt_rows_experiment(const Thoma& omega, int n, long long samples, uint64_t seed,
                           int workers) {
    if (omega.alpha.kind != Alphabet::Finite || omega.alpha.values.empty())
        throw std::invalid_argument("clt_rows: finite nonempty alpha required");
    Report rep;
    rep.title = "row central limit theorem";
    rep.config = "experiment=clt-rows " + omega_str(omega) + " n=" + std::to_string(n) +
                 " samples=" + std::to_string(samples) + " seed=" + std::to_string(seed) +
                 " workers=" + std::to_string(workers);
    int d = (int)omega.alpha.values.size();
    if (d > 8) throw std::length_error("clt_rows: at most 8 alpha coordinates");
    std::vector<double> alpha;
    for (const Rat& v : omega.alpha.values) alpha.push_back(to_double(v));
    for (int i = 0; i + 1 < d; ++i)
        if (alpha[i] == alpha[i + 1])
            rep.rows.push_back({"warning_coincident_alpha_" + std::to_string(i + 1), 0, 0, 0,
                                true, "theorem hypothesis violated; see gue experiment"});
    double sqn = std::sqrt((double)n);
    struct Acc {
        long long cnt = 0;
        double s[8] = {0};
        double sp[64] = {0};
    };
    auto sampler = make_shape_sampler(omega, n);
    auto chunks = run_chunks<Acc>(samples, workers, seed,
                                  [&](long long, long long cnt, Rng& rng, Acc& acc) {
                                      double y[8];
                                      for (long long k = 0; k < cnt; ++k) {
                                          auto rows = sampler(rng);
                                          for (int i = 0; i < d; ++i) {
                                              long long li = i < (int)rows.size() ? rows[i] : 0;
                                              y[i] = sqn * ((double)li / n - alpha[i]);
                                              acc.s[i] += y[i];
                                          }
                                          for (int i = 0; i < d; ++i)
                                              for (int j = i; j < d; ++j)
                                                  acc.sp[i * 8 + j] += y[i] * y[j];
                                          ++acc.cnt;
                                      }
                                  });
    Acc all;
    std::vector<std::vector<double>> bcov(d * d);
    for (auto& c : chunks) {
        if (c.cnt == 0) continue;
        all.cnt += c.cnt;
        for (int i = 0; i < 8; ++i) all.s[i] += c.s[i];
        for (int i = 0; i < 64; ++i) all.sp[i] += c.sp[i];
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j)
                bcov[i * d + j].push_back(c.sp[i * 8 + j] / (double)c.cnt -
                                          c.s[i] / (double)c.cnt * (c.s[j] / (double)c.cnt));
    }
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            double cov = all.sp[i * 8 + j] / (double)all.cnt -
                         (all.s[i] / (double)all.cnt) * (all.s[j] / (double)all.cnt);
            double target = (i == j ? alpha[i] : 0) - alpha[i] * alpha[j];
            double se = batch_se(bcov[i * d + j]);
            rep.rows.push_back({"cov_row" + std::to_string(i + 1) + "_row" + std::to_string(j + 1),
                                target, cov, se, std::abs(cov - target) <= 4 * se,
                                "closed-form covariance"});
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Bessel-3

Report bessel_experiment(int n, long long samples, uint64_t seed, int workers) {
    Report rep;
    rep.title = "longest-row fluctuations of balanced 2-shuffles";
    rep.config = "experiment=bessel n=" + std::to_string(n) +
                 " samples=" + std::to_string(samples) + " seed=" + std::to_string(seed) +
                 " workers=" + std::to_string(workers);
    struct Acc {
        std::vector<double> ys;
        MomentAccumulator acc;
        bool bound_ok = true;
    };
    TwoRowShapeSampler sampler(0.5);
    double sqn = std::sqrt((double)n);
    auto chunks = run_chunks<Acc>(samples, workers, seed,
                                  [&](long long, long long cnt, Rng& rng, Acc& acc) {
                                      acc.ys.reserve(cnt);
                                      for (long long i = 0; i < cnt; ++i) {
                                          auto r = sampler.sample(n, rng);
                                          // Greene bound: the longest row is at
                                          // least each letter count
                                          if (r[0] < r[1]) acc.bound_ok = false;
                                          double y = 2.0 * ((double)r[0] - n / 2.0) / sqn;
                                          acc.ys.push_back(y);
                                          acc.acc.add(y);
                                      }
                                  });
    std::vector<double> all;
    all.reserve(samples);
    MomentAccumulator acc;
    std::vector<double> bmean;
    bool bound_ok = true;
    for (auto& c : chunks) {
        if (c.acc.count() == 0) continue;
        all.insert(all.end(), c.ys.begin(), c.ys.end());
        acc.merge(c.acc);
        bmean.push_back(c.acc.mean());
        bound_ok = bound_ok && c.bound_ok;
    }
    KsResult ks = ks_test(all, bessel3_cdf);
    rep.rows.push_back({"ks_pvalue", 1e-3, ks.p_value, 0, ks.p_value > 1e-3,
                        "asymptotic Kolmogorov distribution"});
    double target = 2 * std::sqrt(2 / M_PI);
    double se = batch_se(bmean);
    rep.rows.push_back({"mean_Y", target, acc.mean(), se,
                        std::abs(acc.mean() - target) <= 4 * se, "closed-form moment"});
    rep.rows.push_back({"greene_lower_bound", 1, bound_ok ? 1.0 : 0.0, 0, bound_ok, "exact"});
    rep.extra_csv = histogram_csv(all, "Y");
    return rep;
}

// ---------------------------------------------------------------------------
// GUE chamber

Report gue_experiment(int d, int n, long long samples, uint64_t seed, int workers) {
    if (d < 2 || d > 3) throw std::invalid_argument("gue_experiment: d in {2,3}");
    Report rep;
    rep.title = "uniform d-shuffle row fluctuations (trace-zero chamber)";
    rep.config = "experiment=gue d=" + std::to_string(d) + " n=" + std::to_string(n) +
                 " samples=" + std::to_string(samples) + " seed=" + std::to_string(seed) +
                 " workers=" + std::to_string(workers);
    std::vector<double> probs(d, 1.0 / d);
    DLetterShapeSampler sampler(probs);
    double scale = std::sqrt((double)n / d);
    struct Acc {
        long long cnt = 0;
        double s[4] = {0}, s2[4] = {0};
        std::vector<double> y1;
        bool trace_ok = true;
    };
    auto chunks = run_chunks<Acc>(samples, workers, seed,
                                  [&](long long, long long cnt, Rng& rng, Acc& acc) {
                                      acc.y1.reserve(cnt);
                                      for (long long k = 0; k < cnt; ++k) {
                                          auto rows = sampler.sample(n, rng);
                                          long long tot = 0;
                                          for (long long r : rows) tot += r;
                                          if (tot != n) acc.trace_ok = false;
                                          for (int i = 0; i < d; ++i) {
                                              double y = ((double)rows[i] - (double)n / d) / scale;
                                              acc.s[i] += y;
                                              acc.s2[i] += y * y;
                                              if (i == 0) acc.y1.push_back(y);
                                          }
                                          ++acc.cnt;
                                      }
                                  });
    Acc all;
    std::vector<std::vector<double>> bm(d), bm2(d);
    std::vector<double> y1;
    y1.reserve(samples);
    for (auto& c : chunks) {
        if (c.cnt == 0) continue;
        all.cnt += c.cnt;
        all.trace_ok = all.trace_ok && c.trace_ok;
        for (int i = 0; i < d; ++i) {
            all.s[i] += c.s[i];
            all.s2[i] += c.s2[i];
            bm[i].push_back(c.s[i] / (double)c.cnt);
            bm2[i].push_back(c.s2[i] / (double)c.cnt);
        }
        y1.insert(y1.end(), c.y1.begin(), c.y1.end());
    }
    rep.rows.push_back({"trace_zero_exact", 1, all.trace_ok ? 1.0 : 0.0, 0, all.trace_ok,
                        "exact per sample"});
    std::vector<double> oracle = gue_chamber_moments(d);
    for (int i = 0; i < d; ++i) {
        double est = all.s[i] / (double)all.cnt;
        double se = batch_se(bm[i]);
        rep.rows.push_back({"mean_Y" + std::to_string(i + 1), oracle[i], est, se,
                            std::abs(est - oracle[i]) <= 4 * se, "quadrature oracle"});
    }
    for (int i = 0; i < d; ++i) {
        double est = all.s2[i] / (double)all.cnt;
        double se = batch_se(bm2[i]);
        rep.rows.push_back({"second_moment_Y" + std::to_string(i + 1), oracle[d + i], est, se,
                            std::abs(est - oracle[d + i]) <= 4 * se, "quadrature oracle"});
    }
    rep.extra_csv = histogram_csv(y1, "Y1");
    return rep;
}

// ---------------------------------------------------------------------------
// Mixed alphabets

Report mixed_experiment(const std::vector<MixedBlock>& blocks, int n, long long samples,
                        uint64_t seed, int workers) {
    Report rep;
    rep.title = "mixed-alphabet block fluctuations";
    std::string spec;
    std::vector<double> probs;
    std::vector<int> block_of;
    Rat total = 0;
    for (size_t j = 0; j < blocks.size(); ++j) {
        spec += (j ? " " : "") + to_string(blocks[j].p) + "^" + std::to_string(blocks[j].d);
        for (int i = 0; i < blocks[j].d; ++i) {
            probs.push_back(to_double(blocks[j].p));
            block_of.push_back((int)j);
            total += blocks[j].p;
        }
    }
    if (total != 1) throw std::invalid_argument("mixed_experiment: probabilities must sum to 1");
    for (size_t i = 0; i + 1 < probs.size(); ++i)
        if (probs[i] < probs[i + 1])
            throw std::invalid_argument("mixed_experiment: blocks must be sorted decreasing");
    rep.config = "experiment=mixed blocks=" + spec + " n=" + std::to_string(n) +
                 " samples=" + std::to_string(samples) + " seed=" + std::to_string(seed) +
                 " workers=" + std::to_string(workers);
    int d = (int)probs.size(), r = (int)blocks.size();
    DLetterShapeSampler sampler(probs);
    double sqn = std::sqrt((double)n);
    struct Acc {
        long long cnt = 0;
        double bs[8] = {0}, bs2[8] = {0};    // per block: sum statistic and its square
        double res2[8] = {0};                // per block: within-block residual second moment
    };
    auto chunks = run_chunks<Acc>(
        samples, workers, seed, [&](long long, long long cnt, Rng& rng, Acc& acc) {
            for (long long k = 0; k < cnt; ++k) {
                auto rows = sampler.sample(n, rng);
                int row = 0;
                for (int j = 0; j < r; ++j) {
                    int dj = blocks[j].d;
                    double pj = probs[row];
                    double sum = 0;
                    double ys[8];
                    for (int i = 0; i < dj; ++i, ++row) {
                        ys[i] = ((double)rows[row] - n * pj);
                        sum += ys[i];
                    }
                    double s = sum / sqn;  // block sum, sqrt(n) scale
                    acc.bs[j] += s;
                    acc.bs2[j] += s * s;
                    // within-block residuals at the sqrt(n p_j) scale
                    double scale = std::sqrt(n * pj);
                    for (int i = 0; i < dj; ++i) {
                        double resid = ys[i] / scale - sum / (dj * scale);
                        acc.res2[j] += resid * resid / dj;
                    }
                }
                ++acc.cnt;
            }
        });
    Acc all;
    std::vector<std::vector<double>> bvar(r), bres(r);
    for (auto& c : chunks) {
        if (c.cnt == 0) continue;
        all.cnt += c.cnt;
        for (int j = 0; j < r; ++j) {
            all.bs[j] += c.bs[j];
            all.bs2[j] += c.bs2[j];
            all.res2[j] += c.res2[j];
            double mean = c.bs[j] / (double)c.cnt;
            bvar[j].push_back(c.bs2[j] / (double)c.cnt - mean * mean);
            bres[j].push_back(c.res2[j] / (double)c.cnt);
        }
    }
    for (int j = 0; j < r; ++j) {
        double dj = blocks[j].d, pj = to_double(blocks[j].p);
        double mean = all.bs[j] / (double)all.cnt;
        double var = all.bs2[j] / (double)all.cnt - mean * mean;
        double target = dj * pj * (1 - dj * pj);
        double se = batch_se(bvar[j]);
        rep.rows.push_back({"blocksum_var_block" + std::to_string(j + 1), target, var, se,
                            std::abs(var - target) <= 4 * se, "multinomial covariance"});
        if (blocks[j].d >= 2 && blocks[j].d <= 3) {
            std::vector<double> oracle = gue_chamber_moments(blocks[j].d);
            double otarget = 0;
            for (int i = 0; i < blocks[j].d; ++i) otarget += oracle[blocks[j].d + i];
            otarget /= blocks[j].d;
            double est = all.res2[j] / (double)all.cnt;
            se = batch_se(bres[j]);
            rep.rows.push_back({"withinblock_spread_block" + std::to_string(j + 1), otarget, est,
                                se, std::abs(est - otarget) <= 4 * se, "quadrature oracle"});
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Young-graph growth chain (sampled) against the exact marginal

Report markov_chain_experiment(const Thoma& omega, int n, long long samples, uint64_t seed) {
    if (n > 8) throw std::length_error("markov_chain_experiment: n <= 8");
    Report rep;
    rep.title = "young-graph growth chain";
    rep.config = "experiment=markov-chain " + omega_str(omega) + " n=" + std::to_string(n) +
                 " samples=" + std::to_string(samples) + " seed=" + std::to_string(seed);
    // transition tables in double precision, per level
    struct Node {
        std::vector<int> nexts;
        std::vector<double> cum;
    };
    std::vector<std::vector<Partition>> levels(n + 1);
    std::vector<std::map<Partition, int>> index(n + 1);
    for (int k = 0; k <= n; ++k) {
        levels[k] = partitions_of(k);
        for (size_t i = 0; i < levels[k].size(); ++i) index[k][levels[k][i]] = (int)i;
    }
    std::vector<std::vector<Node>> table(n);
    for (int k = 0; k < n; ++k) {
        table[k].resize(levels[k].size());
        for (size_t i = 0; i < levels[k].size(); ++i) {
            Rat slam = schur(levels[k][i], omega);
            if (slam == 0) continue;
            double acc = 0;
            for (auto& [big, p] : growth_chain_weights(levels[k][i], omega)) {
                acc += to_double(p);
                table[k][i].nexts.push_back(index[k + 1][big]);
                table[k][i].cum.push_back(acc);
            }
        }
    }
    std::vector<long long> counts(levels[n].size(), 0);
    Rng rng = Rng::substream(seed, 0);
    for (long long s = 0; s < samples; ++s) {
        int cur = 0;
        for (int k = 0; k < n; ++k) {
            const Node& node = table[k][cur];
            double u = rng.uniform() * node.cum.back();
            size_t pick = std::lower_bound(node.cum.begin(), node.cum.end(), u) -
                          node.cum.begin();
            if (pick >= node.nexts.size()) pick = node.nexts.size() - 1;
            cur = node.nexts[pick];
        }
        ++counts[cur];
    }
    PartitionMeasure exact = p_measure(n, omega);
    std::vector<double> expected;
    std::vector<long long> observed;
    for (size_t i = 0; i < levels[n].size(); ++i) {
        double p = to_double(exact.weights.at(levels[n][i]));
        if (p * (double)samples < 5) continue;  // merge tiny cells out
        expected.push_back(p);
        observed.push_back(counts[i]);
    }
    // leftover mass cell
    double rest = 1;
    long long restc = samples;
    for (double p : expected) rest -= p;
    for (long long c : observed) restc -= c;
    if (rest > 1e-12) {
        expected.push_back(rest);
        observed.push_back(restc);
    }
    Chi2Result c2 = chi2_gof(observed, expected);
    rep.rows.push_back({"chi2_pvalue", 1e-3, c2.p_value, 0, c2.p_value > 1e-3,
                        "exact n-step marginal"});
    return rep;
}

// ---------------------------------------------------------------------------
// Pitman identities on random inputs

Report pitman_verify(int d, int n, long long trials, uint64_t seed) {
    if (d < 2 || d > 5) throw std::invalid_argument("pitman_verify: d in [2,5]");
    Report rep;
    rep.title = "path-transform identities";
    rep.config = "experiment=pitman-verify d=" + std::to_string(d) + " n=" + std::to_string(n) +
                 " trials=" + std::to_string(trials) + " seed=" + std::to_string(seed);
    Rng rng = Rng::substream(seed, 0);
    long long g_ok = 0, m_ok = 0, braid_ok = 0, idem_ok = 0, shift_ok = 0, sum_ok = 0;
    long long m_trials = std::min<long long>(trials, 1000);
    for (long long t = 0; t < trials; ++t) {
        // random word and its lattice path
        Word w(n);
        for (auto& a : w) a = 1 + (int)rng.below(d);
        auto gshapes = g_shape_process(w, d);
        auto shapes = shape_process(w);
        if (gshapes == shapes) ++g_ok;
        Path<long long> wp = word_path(w, d);
        Path<long long> g = g_transform(wp);
        bool sums = true;
        for (size_t k = 0; k <= w.size(); ++k) {
            long long a = 0, b = 0;
            for (int c = 0; c < d; ++c) {
                a += wp[c][k];
                b += g[c][k];
            }
            if (a != b) sums = false;
        }
        if (sums) ++sum_ok;
        if (t < m_trials) {
            auto m = letter_row_counts(wp);
            auto p = rsk(w).p;
            bool ok = true;
            for (int i = 1; i <= d; ++i)
                for (int j = 1; j <= d; ++j) {
                    long long cnt = 0;
                    if (i <= (int)p.rows().size())
                        for (int x : p.rows()[i - 1])
                            if (x == j) ++cnt;
                    if ((j >= i ? m[i - 1][j - 1] : 0) != cnt) ok = false;
                }
            if (ok) ++m_ok;
        }
        // braid relations on the word path (unit-step counting paths are the
        // discrete sampling on which the continuous-operator identity survives)
        bool braid = true, idem = true;
        for (int i = 1; i + 1 < d; ++i) {
            auto lhs = pitman_op(i, pitman_op(i + 1, pitman_op(i, wp)));
            auto rhs = pitman_op(i + 1, pitman_op(i, pitman_op(i + 1, wp)));
            if (lhs != rhs) braid = false;
        }
        // commutation and idempotence hold for arbitrary integer walks
        Path<long long> x(d, Series<long long>(n + 1, 0));
        for (int c = 0; c < d; ++c)
            for (int k = 1; k <= n; ++k)
                x[c][k] = x[c][k - 1] + (long long)rng.below(5) - 2;
        if (d >= 4) {
            auto lhs = pitman_op(1, pitman_op(3, x));
            auto rhs = pitman_op(3, pitman_op(1, x));
            if (lhs != rhs) braid = false;
        }
        for (int i = 1; i < d; ++i) {
            auto once = pitman_op(i, x);
            if (pitman_op(i, once) != once) idem = false;
        }
        if (braid) ++braid_ok;
        if (idem) ++idem_ok;
        // shift equivariance with a rational scalar series
        if (t < 50) {
            Path<Rat> xr(d, Series<Rat>(n + 1));
            Series<Rat> f(n + 1);
            for (int k = 0; k <= n; ++k) f[k] = Rat((long long)rng.below(9) - 4, 3);
            f[0] = 0;
            for (int c = 0; c < d; ++c)
                for (int k = 0; k <= n; ++k) xr[c][k] = Rat(x[c][k]);
            Path<Rat> shifted = xr;
            for (int c = 0; c < d; ++c)
                for (int k = 0; k <= n; ++k) shifted[c][k] += f[k];
            Path<Rat> g1 = g_transform(xr);
            Path<Rat> g2 = g_transform(shifted);
            bool ok = true;
            for (int c = 0; c < d; ++c)
                for (int k = 0; k <= n; ++k)
                    if (g2[c][k] != g1[c][k] + f[k]) ok = false;
            if (ok) ++shift_ok;
        }
    }
    // 2-letter bookkeeping versus direct insertion
    long long two_ok = 0, two_trials = std::min<long long>(trials, 500);
    for (long long t = 0; t < two_trials; ++t) {
        Word w(n);
        for (auto& a : w) a = 1 + (int)rng.below(2);
        auto series = two_shuffle_decomposition(w);
        auto shapes = shape_process(w);
        bool ok = true;
        for (size_t k = 0; k <= w.size(); ++k) {
            long long l1 = shapes[k].row(1);
            if (series.m11[k] + series.m12[k] != l1) ok = false;
        }
        if (ok) ++two_ok;
    }
    auto row = [&](const std::string& name, long long got, long long want) {
        rep.rows.push_back({name, (double)want, (double)got, 0, got == want, "exact"});
    };
    row("g_equals_insertion_shapes", g_ok, trials);
    row("coordinate_sums_preserved", sum_ok, trials);
    row("letter_row_counts_match_P", m_ok, m_trials);
    row("braid_and_commutation", braid_ok, trials);
    row("idempotence", idem_ok, trials);
    row("shift_equivariance", shift_ok, std::min<long long>(trials, 50));
    row("two_shuffle_bookkeeping", two_ok, two_trials);
    return rep;
}

// ---------------------------------------------------------------------------
// Self test

namespace {

std::vector<std::pair<std::string, Thoma>> selftest_omegas() {
    std::vector<std::pair<std::string, Thoma>> v;
    v.emplace_back("omega=0", Thoma::zero());
    v.emplace_back("alpha=[1/2,1/2]",
                   Thoma(Alphabet::finite({Rat(1, 2), Rat(1, 2)}), Alphabet::empty()));
    v.emplace_back("alpha=[2/3,1/3]",
                   Thoma(Alphabet::finite({Rat(2, 3), Rat(1, 3)}), Alphabet::empty()));
    v.emplace_back("alpha=[1/2] beta=[1/4]",
                   Thoma(Alphabet::finite({Rat(1, 2)}), Alphabet::finite({Rat(1, 4)})));
    v.emplace_back("omega_{q=1/2,t=2/3}", QtParams{Rat(1, 2), Rat(2, 3)}.omega());
    return v;
}

}  // namespace

int selftest(std::ostream& out) {
    int fails = 0;
    auto suite = [&](const std::string& name, bool ok) {
        out << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++fails;
    };

    {
        bool ok = true;
        for (int n = 0; n <= 8 && ok; ++n)
            for (auto& lam : partitions_of(n)) {
                if (lam.conjugate().conjugate() != lam) ok = false;
                if (n <= 7 && lam.dim_hook() != (Int)enumerate_syt(lam).size()) ok = false;
            }
        suite("partitions: conjugation involution, hook dimension = SYT count", ok);
    }
    {
        bool ok = true;
        for (auto& [name, omega] : selftest_omegas())
            for (int n = 0; n <= 6; ++n)
                if (p_measure(n, omega).total() != 1) ok = false;
        suite("measures: exact normalization, n <= 6", ok);
    }
    {
        bool ok = true;
        for (auto& [name, omega] : selftest_omegas())
            for (int n = 1; n <= 4; ++n)
                if (!pushforward_check(n, omega).ok) ok = false;
        suite("measures: RSK push-forward, n <= 4", ok);
    }
    {
        bool ok = true;
        for (auto& [name, omega] : selftest_omegas())
            if (!harmonicity_check(omega, 7).ok) ok = false;
        suite("measures: harmonicity, n < 7", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 6 && ok; ++n) {
            auto ps = partitions_of(n);
            for (size_t a = 0; a < ps.size(); ++a)
                for (size_t b = 0; b < ps.size(); ++b) {
                    Int s = 0;
                    for (auto& lam : ps) s += mn_character(lam, ps[a]) * mn_character(lam, ps[b]);
                    if (s != (a == b ? z_order(ps[a]) : Int(0))) ok = false;
                }
        }
        suite("characters: column orthogonality, n <= 6", ok);
    }
    {
        bool ok = true;
        for (int n = 0; n <= 6; ++n)
            for (auto& lam : partitions_of(n)) {
                if (sigma(Partition({2}), lam) != p_obs(2, lam)) ok = false;
                Rat s3 = p_obs(3, lam) - Rat(3, 2) * p_obs(1, lam) * p_obs(1, lam) +
                         Rat(5, 4) * p_obs(1, lam);
                if (sigma(Partition({3}), lam) != s3) ok = false;
            }
        suite("characters: Wassermann identities, |lambda| <= 6", ok);
    }
    {
        bool ok = true;
        for (auto& [name, omega] : selftest_omegas())
            for (int n = 1; n <= 6; ++n)
                for (auto& mu : {Partition({2}), Partition({2, 1}), Partition({3})}) {
                    auto e = expect_sigma(n, omega, mu);
                    if (e.by_enumeration != e.closed_form) ok = false;
                }
        suite("measures: expectation of Sigma_mu, n <= 6", ok);
    }
    {
        bool ok = true;
        for (auto& [name, omega] : selftest_omegas())
            for (int n = 1; n <= 6; ++n) {
                auto gm = growth_chain_marginal(n, omega);
                auto pm = p_measure(n, omega);
                // compare with zero defaults: either side may omit
                // partitions the parameter point gives no mass to
                for (auto& lam : partitions_of(n)) {
                    Rat a = gm.weights.count(lam) ? gm.weights.at(lam) : Rat(0);
                    Rat b = pm.weights.count(lam) ? pm.weights.at(lam) : Rat(0);
                    if (a != b) ok = false;
                }
            }
        suite("measures: growth-chain marginal, n <= 6", ok);
    }
    {
        bool ok = true;
        for (int d = 2; d <= 3 && ok; ++d) {
            int len = 6;
            std::vector<int> w(len, 1);
            for (long long mask = 0; mask < (long long)std::pow(d, len); ++mask) {
                long long m = mask;
                for (int i = 0; i < len; ++i) {
                    w[i] = 1 + (int)(m % d);
                    m /= d;
                }
                if (g_shape_process(w, d) != shape_process(w)) {
                    ok = false;
                    break;
                }
            }
        }
        suite("pitman: G_d equals insertion shapes, exhaustive d <= 3, len 6", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 4; ++n) {
            Rat q(3, 5), z(-2, 7);
            for (auto& mu : partitions_of(n)) {
                Rat s = 0;
                for (auto& lam : partitions_of(n))
                    s += markov_trace_weight(lam, q, z).jacobi_trudi * q_character(lam, mu, q);
                if (s != pow_rat(z, mu.size() - mu.length())) ok = false;
            }
        }
        suite("hecke: markov trace values, n <= 4", ok);
    }
    {
        bool ok = true;
        Rat q(3, 5), z(-2, 7);
        for (int n = 0; n <= 6; ++n)
            for (auto& lam : partitions_of(n))
                if (markov_trace_weight(lam, q, z).diff() != 0) ok = false;
        suite("hecke: trace-weight routes agree, |lambda| <= 6", ok);
    }
    {
        bool ok = true;
        QtParams qt{Rat(1, 2), Rat(2, 3)};
        for (int n = 1; n <= 5; ++n) {
            PartitionMeasure m = qt_plancherel(n, qt);
            if (m.total() != 1) ok = false;
            PartitionMeasure mc = qt_plancherel(n, QtParams{Rat(2, 1), Rat(2, 3)});
            for (auto& [lam, w] : m.weights)
                if (mc.weights.at(lam.conjugate()) != w) ok = false;
        }
        suite("hecke: (q,t)-Plancherel normalization and 1/q conjugation, n <= 5", ok);
    }
    {
        bool ok = true;
        QtParams qt{Rat(1, 2), Rat(2, 3)};
        for (int n = 1; n <= 4; ++n) {
            auto interp = qt_permutation_measure(n, qt);
            auto direct = q_measure(n, qt.omega());
            for (auto& [sigma, w] : interp.weights)
                if (direct.weights.at(sigma.inverse()) != w) ok = false;
        }
        suite("hecke: permutation-level interpolation, n <= 4", ok);
    }
    return fails;
}

}  // namespace thoma
