// Permutations, words, standardization, Schensted row insertion, descent and
// recoil statistics, Greene invariants.
#pragma once

#include "thoma/partition.hpp"

#include <vector>

namespace thoma {

using Word = std::vector<int>;  // positive letters

class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int n);
    static Permutation reversal(int n);  // omega_0: i -> n+1-i

    int size() const { return (int)p_.size(); }
    int operator()(int i) const { return p_[i - 1]; }  // 1-based
    const std::vector<int>& one_line() const { return p_; }

    Permutation inverse() const;
    Permutation compose(const Permutation& other) const;  // this o other

    std::vector<int> descents() const;  // { i : p(i) > p(i+1) }
    std::vector<int> recoils() const;   // descents of the inverse
    Composition descent_composition() const;  // c(sigma) from D(sigma)
    Composition recoil_composition() const;   // c(sigma^{-1})

    bool operator==(const Permutation& o) const { return p_ == o.p_; }
    bool operator<(const Permutation& o) const { return p_ < o.p_; }

  private:
    std::vector<int> p_;
};

std::vector<Permutation> all_permutations(int n);  // n <= 8, lexicographic

Permutation standardize(const Word& w);

struct RskOutput {
    Tableau p;        // insertion tableau (semistandard; standard for permutations)
    Tableau q;        // recording tableau (standard)
    Partition shape;
};

RskOutput rsk(const Word& w);
RskOutput rsk(const Permutation& sigma);

// Shapes of P after inserting each prefix: Lambda_0 = (), ..., Lambda_n.
std::vector<Partition> shape_process(const Word& w);

// lambda_1 + ... + lambda_r of the RSK shape.
long long greene_invariant(const Word& w, int r);
// Exhaustive oracle: max total length of r disjoint increasing subwords.
long long greene_invariant_oracle(const Word& w, int r);

}  // namespace thoma
