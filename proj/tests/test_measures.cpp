#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "thoma/measures.hpp"

using namespace thoma;

namespace {
Thoma half_half() {
    return Thoma(Alphabet::finite({Rat(1, 2), Rat(1, 2)}), Alphabet::empty());
}
Thoma two_thirds() {
    return Thoma(Alphabet::finite({Rat(2, 3), Rat(1, 3)}), Alphabet::empty());
}
Thoma with_beta() {
    return Thoma(Alphabet::finite({Rat(1, 2)}), Alphabet::finite({Rat(1, 4)}));
}
Thoma geom_unit(Rat q) {
    return Thoma(Alphabet::geometric(1 - q, q), Alphabet::empty());
}
std::vector<Thoma> standard_omegas() {
    return {Thoma::zero(), half_half(), two_thirds(), with_beta(), geom_unit(Rat(1, 3))};
}
}  // namespace

TEST_CASE("partition measure basics") {
    // gamma = 1: Plancherel, dim^2 / n!
    for (int n = 0; n <= 8; ++n) {
        auto m = p_measure(n, Thoma::zero());
        CHECK(m.total() == 1);
        for (auto& [lam, w] : m.weights)
            CHECK(w == Rat(lam.dim_hook() * lam.dim_hook(), factorial(n)));
    }
    auto m2 = p_measure(2, half_half());
    CHECK(m2.weights.at(Partition({2})) == Rat(3, 4));
    CHECK(m2.weights.at(Partition({1, 1})) == Rat(1, 4));
    CHECK(m2.csv().find("3/4") != std::string::npos);
    for (const Thoma& omega : standard_omegas())
        for (int n = 0; n <= 7; ++n) CHECK(p_measure(n, omega).total() == 1);
}

TEST_CASE("permutation measure closed forms") {
    // uniform d letters: weight depends only on the recoil count
    for (int d = 2; d <= 3; ++d) {
        Thoma u(Alphabet::finite(std::vector<Rat>(d, Rat(1, d))), Alphabet::empty());
        for (int n = 1; n <= 4; ++n) {
            auto m = q_measure(n, u);
            CHECK(m.total() == 1);
            for (auto& [sig, w] : m.weights) {
                int recoils = (int)sig.recoils().size();
                Rat want = Rat(binomial(Int(n - 1 + d - recoils), n)) / pow_rat(Rat(d), n);
                CHECK(w == want);
            }
        }
    }
    // unit-mass geometric alphabet: q^{comaj(sigma^{-1})} / {n!}_q
    Rat q(1, 3);
    for (int n = 1; n <= 5; ++n) {
        auto m = q_measure(n, geom_unit(q));
        CHECK(m.total() == 1);
        Rat qfact = 1;
        for (int i = 1; i <= n; ++i) {
            Rat t = 0;
            for (int j = 0; j < i; ++j) t += pow_rat(q, j);
            qfact *= t;
        }
        for (auto& [sig, w] : m.weights)
            CHECK(w == pow_rat(q, sig.recoil_composition().comaj()) / qfact);
    }
    // gamma = 1: uniform on permutations
    for (int n = 1; n <= 5; ++n) {
        auto m = q_measure(n, Thoma::zero());
        for (auto& [sig, w] : m.weights) CHECK(w == Rat(1, factorial(n)));
    }
    // single-letter alphabet: identity almost surely
    Thoma one(Alphabet::finite({Rat(1)}), Alphabet::empty());
    auto m = q_measure(4, one);
    CHECK(m.weights.at(Permutation::identity(4)) == 1);
}

TEST_CASE("single weights agree with full enumeration") {
    for (const Thoma& omega : standard_omegas()) {
        auto m = q_measure(4, omega);
        for (auto& [sig, w] : m.weights) CHECK(q_weight(sig, omega) == w);
    }
}

TEST_CASE("insertion push-forward matches the partition measure") {
    for (const Thoma& omega : standard_omegas())
        for (int n = 1; n <= 6; ++n) {
            auto rep = pushforward_check(n, omega);
            INFO(rep.detail);
            CHECK(rep.ok);
        }
}

TEST_CASE("harmonicity") {
    for (const Thoma& omega : standard_omegas()) {
        auto rep = harmonicity_check(omega, 9);
        INFO(rep.detail);
        CHECK(rep.ok);
    }
}

TEST_CASE("expectations of cycle observables") {
    // E[Sigma_2] = n(n-1) p_2
    ExpectSigma e = expect_sigma(4, two_thirds(), Partition({2}));
    CHECK(e.closed_form == Rat(20, 3));
    CHECK(e.by_enumeration == Rat(20, 3));
    for (const Thoma& omega : standard_omegas())
        for (int n = 1; n <= 7; ++n)
            for (auto& mu : {Partition({1}), Partition({2}), Partition({3}), Partition({2, 2}),
                             Partition({2, 1})}) {
                ExpectSigma r = expect_sigma(n, omega, mu);
                CHECK(r.by_enumeration == r.closed_form);
            }
}

TEST_CASE("conjugation symmetry swaps the alphabets") {
    Thoma ab = with_beta();
    Thoma ba(Alphabet::finite({Rat(1, 4)}), Alphabet::finite({Rat(1, 2)}));
    for (int n = 0; n <= 7; ++n) {
        auto m1 = p_measure(n, ab);
        auto m2 = p_measure(n, ba);
        for (auto& [lam, w] : m1.weights) CHECK(m2.weights.at(lam.conjugate()) == w);
    }
}

TEST_CASE("growth chain") {
    for (const Thoma& omega : standard_omegas()) {
        for (int n = 0; n <= 7; ++n) {
            auto gm = growth_chain_marginal(n, omega);
            auto pm = p_measure(n, omega);
            for (auto& lam : partitions_of(n)) {
                Rat a = gm.weights.count(lam) ? gm.weights.at(lam) : Rat(0);
                Rat b = pm.weights.count(lam) ? pm.weights.at(lam) : Rat(0);
                CHECK(a == b);
            }
        }
        // one-step weights are a probability vector
        for (auto& lam : partitions_of(4)) {
            if (schur(lam, omega) == 0) continue;
            Rat s = 0;
            for (auto& [big, p] : growth_chain_weights(lam, omega)) {
                CHECK(p >= 0);
                s += p;
            }
            CHECK(s == 1);
        }
    }
}
