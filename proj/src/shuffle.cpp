#include "thoma/shuffle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace thoma {

OmegaShuffler::OmegaShuffler(int n, const Thoma& omega) : n_(n) {
    auto load = [](const Alphabet& al, bool& geom, std::vector<double>& cum, double& total,
                   double& log_q) {
        total = to_double(al.total());
        if (al.kind == Alphabet::Geometric) {
            geom = true;
            log_q = std::log(to_double(al.ratio));
        } else {
            double acc = 0;
            for (const Rat& v : al.values) {
                acc += to_double(v);
                cum.push_back(acc);
            }
        }
    };
    load(omega.alpha, alpha_geom_, alpha_cum_, alpha_total_, alpha_log_q_);
    load(omega.beta, beta_geom_, beta_cum_, beta_total_, beta_log_q_);
    gamma_ = to_double(omega.gamma);
}

OmegaShuffler::Label OmegaShuffler::draw_label(Rng& rng) const {
    double u = rng.uniform() * (alpha_total_ + beta_total_ + gamma_);
    auto pick = [&](double u2, bool geom, const std::vector<double>& cum, double total,
                    double log_q, int cls) -> Label {
        if (geom) {
            // index ~ geometric: P[i] = (1-q) q^{i-1}, by exact CDF inversion
            double v = u2 / total;  // uniform in (0,1)
            if (v <= 0) v = 1e-300;
            int idx = 1 + (int)std::floor(std::log(v) / log_q);
            if (idx < 1) idx = 1;
            return {cls, idx};
        }
        int idx = 1 + (int)(std::lower_bound(cum.begin(), cum.end(), u2) - cum.begin());
        if (idx > (int)cum.size()) idx = (int)cum.size();
        return {cls, idx};
    };
    if (u < alpha_total_) return pick(u, alpha_geom_, alpha_cum_, alpha_total_, alpha_log_q_, 0);
    u -= alpha_total_;
    if (u < beta_total_) return pick(u, beta_geom_, beta_cum_, beta_total_, beta_log_q_, 1);
    return {2, 0};
}

Permutation OmegaShuffler::assemble(const std::vector<Label>& labels, Rng& rng) const {
    // group positions per label, labels ordered A_1 < A_2 < ... < B_1 < ... < C
    std::map<Label, std::vector<int>> groups;
    for (int pos = 0; pos < n_; ++pos) groups[labels[pos]].push_back(pos);
    std::vector<int> sigma(n_);
    int val = 1;
    for (auto& [label, positions] : groups) {
        int cnt = (int)positions.size();
        if (label.cls == 0) {
            for (int r = 0; r < cnt; ++r) sigma[positions[r]] = val + r;
        } else if (label.cls == 1) {
            for (int r = 0; r < cnt; ++r) sigma[positions[r]] = val + cnt - 1 - r;
        } else {
            std::vector<int> block(cnt);
            for (int r = 0; r < cnt; ++r) block[r] = val + r;
            for (int r = cnt - 1; r > 0; --r)
                std::swap(block[r], block[rng.below((uint64_t)r + 1)]);
            for (int r = 0; r < cnt; ++r) sigma[positions[r]] = block[r];
        }
        val += cnt;
    }
    return Permutation(sigma);
}

Permutation OmegaShuffler::sample(Rng& rng) const {
    std::vector<Label> labels(n_);
    for (auto& l : labels) l = draw_label(rng);
    return assemble(labels, rng);
}

Permutation OmegaShuffler::sample_deck(Rng& rng) const {
    // (1) multinomial block split: n i.i.d. label draws counted per block
    std::map<Label, int> counts;
    for (int i = 0; i < n_; ++i) ++counts[draw_label(rng)];
    // (2) lay out blocks of consecutive cards; keep A-blocks increasing,
    //     reverse B-blocks, randomize the C-block
    std::vector<std::vector<int>> blocks;
    int val = 1;
    for (auto& [label, cnt] : counts) {
        std::vector<int> block(cnt);
        for (int r = 0; r < cnt; ++r) block[r] = val + r;
        if (label.cls == 1) std::reverse(block.begin(), block.end());
        if (label.cls == 2)
            for (int r = cnt - 1; r > 0; --r)
                std::swap(block[r], block[rng.below((uint64_t)r + 1)]);
        blocks.push_back(std::move(block));
        val += cnt;
    }
    // (3) uniform riffle: all interleavings of the blocks equiprobable; drop
    //     the next card from block b with probability (cards left in b)/(cards left)
    std::vector<size_t> next(blocks.size(), 0);
    std::vector<int> sigma;
    sigma.reserve(n_);
    int remaining = n_;
    while (remaining > 0) {
        uint64_t pick = rng.below((uint64_t)remaining);
        for (size_t b = 0; b < blocks.size(); ++b) {
            uint64_t left = blocks[b].size() - next[b];
            if (pick < left) {
                sigma.push_back(blocks[b][next[b]++]);
                break;
            }
            pick -= left;
        }
        --remaining;
    }
    return Permutation(sigma);
}

}  // namespace thoma
