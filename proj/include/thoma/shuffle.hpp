// Random permutations with law Q_{n,omega} and fast shape-only samplers used
// by the Monte Carlo harness.
#pragma once

#include "thoma/rng.hpp"
#include "thoma/rsk.hpp"
#include "thoma/specialization.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace thoma {

// Samples sigma ~ Q_{n,omega}.  Default path is the i.i.d.-letter word model:
// each position independently draws a label (class A_i with prob alpha_i,
// B_j with beta_j, C with gamma); A-classes receive increasing values,
// B-classes decreasing values, the C-class a uniform random order, with value
// blocks ordered A_1, A_2, ..., B_1, B_2, ..., C.  sample_deck() instead
// performs the literal deck construction (multinomial block split, reversal
// of B-blocks, randomization of the C-block, uniform riffle interleaving) and
// exists for differential testing; both have the same law.
class OmegaShuffler {
  public:
    OmegaShuffler(int n, const Thoma& omega);

    Permutation sample(Rng& rng) const;       // word model
    Permutation sample_deck(Rng& rng) const;  // literal deck simulation

  private:
    struct Label {
        int cls;  // 0 = A, 1 = B, 2 = C
        int idx;  // 1-based letter index within the class (0 for C)
        bool operator<(const Label& o) const {
            return cls != o.cls ? cls < o.cls : idx < o.idx;
        }
        bool operator==(const Label& o) const { return cls == o.cls && idx == o.idx; }
    };
    Label draw_label(Rng& rng) const;
    Permutation assemble(const std::vector<Label>& labels, Rng& rng) const;

    int n_;
    // finite classes resolved to cumulative probabilities; geometric classes
    // inverted exactly from the geometric CDF
    bool alpha_geom_ = false, beta_geom_ = false;
    std::vector<double> alpha_cum_, beta_cum_;  // finite case, cumulative
    double alpha_total_ = 0, beta_total_ = 0, gamma_ = 0;
    double alpha_log_q_ = 0, beta_log_q_ = 0;
};

// Shape sampler for 2-letter words (P[letter 1] = p1): lambda_1 of the
// inserted word via the running-maximum bookkeeping of the walk
// X_k = #1s - #2s, lambda_1(k) = (k + 2 max_j X_j - X_k) / 2.
struct TwoRowShapeSampler {
    double p1;
    explicit TwoRowShapeSampler(double p1_) : p1(p1_) {}

    // returns (lambda_1, lambda_2)
    std::array<long long, 2> sample(int n, Rng& rng) const {
        long long x = 0, s = 0;
        for (int k = 0; k < n; ++k) {
            x += rng.uniform() < p1 ? 1 : -1;
            if (x > s) s = x;
        }
        long long l1 = (n + 2 * s - x) / 2;
        return {l1, n - l1};
    }
};

// Shape sampler for words over d letters (d small) drawn i.i.d. from `probs`:
// count-based Schensted row insertion, O(d^2) per letter, at most d rows.
class DLetterShapeSampler {
  public:
    explicit DLetterShapeSampler(std::vector<double> probs);

    // row lengths lambda_1 >= ... >= lambda_d (zeros included)
    std::vector<long long> sample(int n, Rng& rng) const;

  private:
    int d_;
    std::vector<double> cum_;
};

inline DLetterShapeSampler::DLetterShapeSampler(std::vector<double> probs)
    : d_((int)probs.size()), cum_(probs) {
    if (d_ < 1 || d_ > 8) throw std::length_error("DLetterShapeSampler: 1 <= d <= 8");
    for (int i = 1; i < d_; ++i) cum_[i] += cum_[i - 1];
}

inline std::vector<long long> DLetterShapeSampler::sample(int n, Rng& rng) const {
    // counts[r][a] = number of letters a+1 in row r of the insertion tableau
    std::vector<std::array<long long, 8>> counts(d_);
    for (auto& row : counts) row.fill(0);
    std::vector<long long> rowlen(d_, 0);
    for (int k = 0; k < n; ++k) {
        double u = rng.uniform();
        int a = 0;
        while (a + 1 < d_ && u >= cum_[a]) ++a;
        int r = 0;
        for (;;) {
            int b = -1;
            for (int c = a + 1; c < d_; ++c)
                if (counts[r][c] > 0) {
                    b = c;
                    break;
                }
            if (b < 0) {
                ++counts[r][a];
                ++rowlen[r];
                break;
            }
            --counts[r][b];
            ++counts[r][a];
            a = b;
            ++r;
        }
    }
    return rowlen;
}

}  // namespace thoma
