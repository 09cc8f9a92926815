#pragma once

#include <string>
#include <vector>

#include "delorder/coxeter_matrix.hpp"

namespace delorder {

/// Connected-diagram families with finite Coxeter group, plus Unclassified
/// for every other shape (taken to be infinite). Recognition is up to
/// relabelling: paths are matched from both ends, fork shapes by arm length.
enum class Family { A, B, D, E6, E7, E8, F4, H3, H4, I2, Unclassified };

struct DiagramComponent {
  Family family = Family::Unclassified;
  /// Generators in the order a standard model consumes them: path order for
  /// A (transposition (k, k+1) for the k-th entry) and B (sign flip first,
  /// at the 4-edge end), fork ends first for D. For other families the
  /// order is just a deterministic traversal.
  std::vector<int> gens;
  int i2_m = 0;  // rank-2 edge label; 0 = infinity
  bool finite() const;
  std::string name() const;  // "A3", "B2", "I2(7)", "rank-4 unclassified", ...
};

/// Connected components of the diagram (edges where m(i,j) != 2), each
/// sorted ascending. Components are ordered by smallest member.
std::vector<std::vector<int>> diagram_components(const CoxeterMatrix& m);
std::vector<std::vector<int>> diagram_components(const CoxeterMatrix& m,
                                                 const std::vector<int>& subset);

DiagramComponent classify_component(const CoxeterMatrix& m, std::vector<int> component);

/// True iff every connected component matches a finite family.
bool matrix_finite(const CoxeterMatrix& m);
bool matrix_finite(const CoxeterMatrix& m, const std::vector<int>& subset);

/// Human-readable type, e.g. "A3", "B2 x A1", "rank-3 unclassified".
std::string matrix_type_name(const CoxeterMatrix& m);

}  // namespace delorder
