#pragma once

#include <string>
#include <vector>

namespace delorder {

/// Coxeter matrix over generators s_1..s_rank: symmetric, m(i,i) = 1,
/// off-diagonal entries >= 2, with 0 standing for infinity.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  explicit CoxeterMatrix(int rank);  // all off-diagonal entries start at 2

  int rank() const { return rank_; }
  int m(int i, int j) const;           // 1-based
  void set_m(int i, int j, int value);  // keeps the matrix symmetric
  void validate() const;                // throws InputError on a violation

  /// Matrix restricted to the given generators (1-based, kept in the given
  /// order, so entry (k, l) of the result is m(gens[k-1], gens[l-1])).
  CoxeterMatrix submatrix(const std::vector<int>& gens) const;

  /// Relabelled matrix: new generator k is old generator new_to_old[k-1].
  /// new_to_old must be a permutation of 1..rank.
  CoxeterMatrix permuted(const std::vector<int>& new_to_old) const;

  /// JSON form {"rank": n, "m": [[...]]} with 0 encoding infinity.
  static CoxeterMatrix parse_json(const std::string& text);
  std::string to_json() const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  int rank_ = 0;
  std::vector<int> entries_;  // row-major rank x rank
};

}  // namespace delorder
