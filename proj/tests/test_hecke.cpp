#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "thoma/hecke.hpp"
#include "thoma/rsk.hpp"

#include <cmath>

using namespace thoma;

TEST_CASE("complete homogeneous in power sums") {
    auto h2 = h_to_p(Partition({2}));
    CHECK(h2.at(Partition({2})) == Rat(1, 2));
    CHECK(h2.at(Partition({1, 1})) == Rat(1, 2));
    auto h3 = h_to_p(Partition({3}));
    CHECK(h3.at(Partition({3})) == Rat(1, 3));
    CHECK(h3.at(Partition({2, 1})) == Rat(1, 2));
    CHECK(h3.at(Partition({1, 1, 1})) == Rat(1, 6));
    // evaluation cross-check on a concrete alphabet
    Alphabet x = Alphabet::finite({Rat(1, 2), Rat(2, 7), Rat(1, 5)});
    std::vector<Rat> p(7);
    for (int k = 1; k <= 6; ++k) p[k] = x.power_sum(k);
    auto h = h_from_p(p, 6);
    for (int n = 1; n <= 6; ++n)
        for (auto& mu : partitions_of(n)) {
            Rat want = 1;
            for (int part : mu.parts()) want *= h[part];
            Rat got = 0;
            for (auto& [nu, c] : h_to_p(mu)) {
                Rat pv = 1;
                for (int part : nu.parts()) pv *= p[part];
                got += c * pv;
            }
            CHECK(got == want);
        }
}

TEST_CASE("deformed characters") {
    // q = 1 recovers the classical table
    for (int n = 1; n <= 6; ++n)
        for (auto& lam : partitions_of(n))
            for (auto& mu : partitions_of(n))
                CHECK(q_character(lam, mu, Rat(1)) == Rat(mn_character(lam, mu)));
    // trivial row: q^{|mu| - l(mu)}
    Rat q(3, 7);
    for (int n = 1; n <= 6; ++n)
        for (auto& mu : partitions_of(n))
            CHECK(q_character(Partition({n}), mu, q) == pow_rat(q, n - mu.length()));
    // column orthogonality deforms continuously: at q near 1 the values are
    // near the classical ones
    for (auto& lam : partitions_of(4))
        for (auto& mu : partitions_of(4)) {
            double ref = to_double(Rat(mn_character(lam, mu)));
            double def = to_double(q_character(lam, mu, Rat(999, 1000)));
            CHECK(std::abs(def - ref) < 0.05);
        }
}

TEST_CASE("markov trace") {
    // both weight routes agree
    for (const auto& [q, z] : std::vector<std::pair<Rat, Rat>>{
             {Rat(3, 5), Rat(-2, 7)}, {Rat(2, 1), Rat(1, 3)}, {Rat(1, 7), Rat(5, 2)}})
        for (int n = 0; n <= 8; ++n)
            for (auto& lam : partitions_of(n)) CHECK(markov_trace_weight(lam, q, z).diff() == 0);
    // trace identity: sum_lambda W_lambda zeta^lambda(q, T_mu) = z^{|mu|-l(mu)}
    Rat q(3, 5), z(-2, 7);
    for (int n = 1; n <= 5; ++n)
        for (auto& mu : partitions_of(n)) {
            Rat s = 0;
            for (auto& lam : partitions_of(n))
                s += markov_trace_weight(lam, q, z).jacobi_trudi * q_character(lam, mu, q);
            CHECK(s == pow_rat(z, n - mu.length()));
        }
    // the dual alphabet with p_k = (q^k - 1) p_k(X_{q,z}) has
    // h_k = (q - 1) z^{k-1}
    std::vector<Rat> p(9);
    for (int k = 1; k <= 8; ++k) p[k] = pow_rat(z, k) - pow_rat(1 - q + z, k);
    auto h = h_from_p(p, 8);
    for (int k = 1; k <= 8; ++k) CHECK(h[k] == (q - 1) * pow_rat(z, k - 1));
}

TEST_CASE("two-parameter power sums and the trace alphabet") {
    QtParams params{Rat(1, 2), Rat(2, 3)};
    Thoma omega = params.omega();
    CHECK(omega.gamma == 0);
    for (int k = 1; k <= 8; ++k) CHECK(qt_p_k(params.q, params.t, k) == p_k(omega, k));
    // the Markov-trace alphabet at z = -(1-q)(1-t) carries the same weights
    for (int n = 0; n <= 6; ++n)
        for (auto& lam : partitions_of(n))
            CHECK(markov_trace_weight(lam, params.q, params.z()).jacobi_trudi ==
                  schur(lam, omega));
}

TEST_CASE("two-parameter plancherel measures") {
    QtParams params{Rat(1, 2), Rat(2, 3)};
    for (int n = 0; n <= 6; ++n) {
        PartitionMeasure m = qt_plancherel(n, params);
        CHECK(m.total() == 1);
        // agrees with the generic coherent measure at omega_{q,t}
        PartitionMeasure pm = p_measure(n, params.omega());
        CHECK(m.weights == pm.weights);
        // conjugation symmetry exchanges q and 1/q
        PartitionMeasure mc = qt_plancherel(n, QtParams{Rat(2, 1), params.t});
        for (auto& [lam, w] : m.weights) CHECK(mc.weights.at(lam.conjugate()) == w);
    }
    // t = 1: pure-alpha q-Plancherel
    QtParams t1{Rat(1, 3), Rat(1)};
    for (int n = 0; n <= 6; ++n) {
        PartitionMeasure m = qt_plancherel(n, t1);
        PartitionMeasure pm =
            p_measure(n, Thoma(Alphabet::geometric(Rat(2, 3), Rat(1, 3)), Alphabet::empty()));
        CHECK(m.weights == pm.weights);
    }
    // q -> 1 continuity towards Plancherel
    QtParams near1{Rat(999999, 1000000), Rat(2, 3)};
    for (int n = 1; n <= 5; ++n) {
        PartitionMeasure m = qt_plancherel(n, near1);
        for (auto& [lam, w] : m.weights) {
            double plancherel =
                to_double(Rat(lam.dim_hook() * lam.dim_hook(), factorial(n)));
            CHECK(std::abs(to_double(w) - plancherel) < 1e-3);
        }
    }
}

TEST_CASE("permutation-level interpolation") {
    QtParams params{Rat(1, 2), Rat(2, 3)};
    for (int n = 1; n <= 5; ++n) {
        PermutationMeasure m = qt_permutation_measure(n, params);
        CHECK(m.total() == 1);
        // equals the omega-shuffle law composed with inversion
        PermutationMeasure direct = q_measure(n, params.omega());
        for (auto& [sig, w] : m.weights) CHECK(direct.weights.at(sig.inverse()) == w);
        // insertion push-forward lands on the (q,t)-Plancherel measure
        std::map<Partition, Rat> push;
        for (auto& [sig, w] : m.weights) push[rsk(sig).shape] += w;
        PartitionMeasure pm = qt_plancherel(n, params);
        for (auto& [lam, w] : pm.weights) {
            Rat got = push.count(lam) ? push.at(lam) : Rat(0);
            CHECK(got == w);
        }
    }
    // q-word weights: identity word has comaj 0; reversed word is maximal
    Rat q(1, 3);
    CHECK(q_word_weight({1, 2, 3}, q) * (1 + q) * (1 + q + q * q) == 1);
    CHECK(q_word_weight({3, 2, 1}, q) == pow_rat(q, 3) * q_word_weight({1, 2, 3}, q));
}
