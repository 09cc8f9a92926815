#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "delorder/coxeter_matrix.hpp"
#include "delorder/group_model.hpp"
#include "delorder/word.hpp"

namespace delorder {

inline constexpr std::size_t kDefaultEnumerationCap = 200000;
inline constexpr int kDefaultReducedWordCap = 16;

/// A Coxeter system (W, S) with S totally ordered by generator index
/// (s_1 < s_2 < ...), carrying the arithmetic model picked at construction.
/// All element handles come from this system's model.
class CoxeterSystem {
 public:
  static CoxeterSystem from_matrix(CoxeterMatrix matrix, std::string label = {});
  /// Built-in systems: A1..A5, B2..B4, D4, D5, I2(m) for m >= 3, I2inf
  /// (also spelled I2(inf)), Atilde2 (the all-threes triangle) and U3 (the
  /// rank-3 system with every bond infinite).
  static CoxeterSystem preset(const std::string& name);
  /// A preset name, or a path to a JSON matrix file {"rank":n,"m":[[..]]}.
  static CoxeterSystem from_spec(const std::string& name_or_path);

  int rank() const { return matrix_.rank(); }
  const CoxeterMatrix& matrix() const { return matrix_; }
  const GroupModel& model() const { return *model_; }
  const std::string& label() const { return label_; }
  bool is_finite() const { return finite_; }

  Element identity() const { return model_->identity(); }
  Element apply(const Element& g, int s) const { return model_->apply(g, s); }
  int length(const Element& g) const { return model_->length(g); }
  Element from_word(const Word& w) const;
  Element multiply(const Element& g, const Element& h) const;
  Element inverse(const Element& g) const;

  std::vector<int> right_descents(const Element& g) const;
  /// Some reduced word for g (first-descent greedy); no canonical meaning.
  Word any_reduced_word(const Element& g) const;

  bool parabolic_finite(const std::vector<int>& gens) const;

  /// Every element, breadth-first from the identity with generators taken
  /// in ascending order. Throws ResourceError beyond cap or when infinite.
  std::vector<Element> enumerate(std::size_t cap = kDefaultEnumerationCap) const;

  /// All reduced words of g, deterministic order (last letter ascending).
  /// Guarded by a length cap since counts grow fast.
  std::vector<Word> reduced_words(const Element& g, int length_cap = kDefaultReducedWordCap) const;

 private:
  CoxeterSystem(CoxeterMatrix matrix, std::shared_ptr<const GroupModel> model, bool finite,
                std::string label);

  CoxeterMatrix matrix_;
  std::shared_ptr<const GroupModel> model_;
  bool finite_ = false;
  std::string label_;
};

std::vector<std::string> preset_names();

}  // namespace delorder
