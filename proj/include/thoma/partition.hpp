// Integer partitions, compositions and Young tableaux.
//
// Cells are addressed 1-based as (row, column).  Partitions of n are
// enumerated in reverse lexicographic order, so (n) comes first and
// (1,1,...,1) last.
#pragma once

#include "thoma/rational.hpp"

#include <cstdint>
#include <vector>

namespace thoma {

inline constexpr int kEnumerationCap = 12;

class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }                       // |lambda|
    int length() const { return (int)parts_.size(); }     // number of rows
    int row(int i) const {                                // lambda_i, 1-based, 0 past the end
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool contains_cell(int i, int j) const { return i >= 1 && j >= 1 && j <= row(i); }
    int hook_length(int i, int j) const;       // lambda_i + lambda'_j - i - j + 1
    int content(int i, int j) const;           // i - j  (row minus column)
    Int dim_hook() const;                      // number of standard tableaux, hook formula
    Int n_stat() const;                        // n(lambda) = sum (i-1) lambda_i

    std::vector<Partition> covers() const;     // all Lambda with lambda -> Lambda (add a box)
    std::vector<Partition> covered_by() const; // all mu with mu -> lambda (remove a box)

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const;  // reverse-lex within equal size, then by size

    std::string str() const;  // "(3,1,1)" or "()" for the empty partition

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

// All partitions of n in reverse lexicographic order; p(0) = { () }.
std::vector<Partition> partitions_of(int n);

// z_mu = prod_i i^{m_i} m_i!  (order of the centralizer of a permutation of type mu)
Int z_order(const Partition& mu);

// Multiset union of parts, re-sorted.
Partition union_parts(const Partition& a, const Partition& b);

class Composition {
  public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return (int)parts_.size(); }

    std::vector<int> descent_set() const;              // subset of [1, n-1]
    static Composition from_descent_set(const std::vector<int>& descents, int n);
    Composition conjugate() const;                     // D(conj) = [1,n-1] \ reverse-complement
    Composition restrict(int lo, int hi) const;        // window [lo, hi], 1-based inclusive
    int comaj() const;                                 // sum over descents d of (n - d)

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator<(const Composition& o) const {
        return n_ != o.n_ ? n_ < o.n_ : parts_ < o.parts_;
    }

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

class Tableau {
  public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    int size() const;
    bool is_semistandard() const;
    bool is_standard() const;
    // Descent composition of a standard tableau: i is a descent when i+1
    // sits in a strictly lower row than i.
    Composition descent_composition() const;

    bool operator==(const Tableau& o) const { return rows_ == o.rows_; }

  private:
    std::vector<std::vector<int>> rows_;
};

// All standard Young tableaux of the given shape; |lambda| <= kEnumerationCap.
std::vector<Tableau> enumerate_syt(const Partition& shape);

}  // namespace thoma
