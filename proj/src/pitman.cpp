#include "thoma/pitman.hpp"

namespace thoma {

Path<long long> word_path(const Word& w, int d) {
    Path<long long> path(d, Series<long long>(w.size() + 1, 0));
    std::vector<long long> pos(d, 0);
    for (size_t k = 0; k < w.size(); ++k) {
        int a = w[k];
        if (a < 1 || a > d) throw std::invalid_argument("word_path: letter out of range");
        ++pos[a - 1];
        for (int c = 0; c < d; ++c) path[c][k + 1] = pos[c];
    }
    return path;
}

std::vector<Partition> g_shape_process(const Word& w, int d) {
    Path<long long> g = g_transform(word_path(w, d));
    std::vector<Partition> shapes;
    for (size_t k = 0; k <= w.size(); ++k) {
        std::vector<int> parts;
        for (int c = 0; c < d; ++c)
            if (g[c][k] > 0) parts.push_back((int)g[c][k]);
        shapes.push_back(Partition(parts));
    }
    return shapes;
}

TwoShuffleSeries two_shuffle_decomposition(const Word& w) {
    TwoShuffleSeries out;
    long long x = 0, s = 0;
    out.m11.push_back(0);
    out.m12.push_back(0);
    for (int b : w) {
        if (b != 1 && b != 2) throw std::invalid_argument("two_shuffle: letters in {1,2}");
        x += (b == 1) ? 1 : -1;
        if (x > s) s = x;
        long long k = (long long)out.m11.size();  // current time index
        out.m11.push_back((k + x) / 2);
        out.m12.push_back(s - x);
    }
    return out;
}

}  // namespace thoma
