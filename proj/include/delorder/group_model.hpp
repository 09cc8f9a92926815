#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "delorder/coxeter_matrix.hpp"

namespace delorder {

/// Opaque group element. The payload layout belongs to the model that made
/// it; elements from different models must never be mixed.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<int> key) : key_(std::move(key)) {}
  const std::vector<int>& key() const { return key_; }
  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

 private:
  std::vector<int> key_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

/// Arithmetic engine for one Coxeter system: identity, right multiplication
/// by a generator, and the length function. Implementations are pure values
/// with no mutable state, so concurrent use is safe.
class GroupModel {
 public:
  virtual ~GroupModel() = default;
  virtual Element identity() const = 0;
  virtual Element apply(const Element& g, int s) const = 0;  // g * s_s
  virtual int length(const Element& g) const = 0;
  virtual const char* name() const = 0;
  /// One-line permutation image for table output (signed entries for the
  /// hyperoctahedral models); nullopt when the model has no such form.
  virtual std::optional<std::vector<int>> one_line(const Element& g) const {
    (void)g;
    return std::nullopt;
  }
};

/// Picks the arithmetic for a matrix: classified single-component systems of
/// type A/B/D/I2 get the standard (signed-)permutation or dihedral models;
/// everything else runs on Tits-style rewriting over reduced words.
std::shared_ptr<const GroupModel> make_model(const CoxeterMatrix& matrix);

/// path_order[k] acts as the transposition (k+1, k+2) of 1..rank+1.
std::shared_ptr<const GroupModel> make_permutation_model(int rank,
                                                         const std::vector<int>& path_order);
/// path_order[0] flips the sign of value 1; path_order[k] (k >= 1) swaps the
/// values k and k+1 preserving sign.
std::shared_ptr<const GroupModel> make_signed_permutation_model(
    int rank, const std::vector<int>& path_order);
/// standard_order[0] maps 1 -> -2 (swap with double flip), standard_order[1]
/// swaps values 1 and 2, standard_order[k] (k >= 2) swaps values k and k+1.
std::shared_ptr<const GroupModel> make_even_signed_model(int rank,
                                                         const std::vector<int>& standard_order);
std::shared_ptr<const GroupModel> make_dihedral_model(int m);  // 0 = infinity
std::shared_ptr<const GroupModel> make_tits_model(CoxeterMatrix matrix, int word_cap = 20);

/// Checks (s_i s_j)^m(i,j) = identity with no smaller power doing so.
/// Throws InvariantError when the model disagrees with the presentation.
void verify_model_relations(const GroupModel& model, const CoxeterMatrix& matrix);

}  // namespace delorder
