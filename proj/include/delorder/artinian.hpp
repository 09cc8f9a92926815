#pragma once

#include <string>
#include <vector>

#include "delorder/coxeter_system.hpp"

namespace delorder {

/// Whether the deletion order on W (for the system's own generator order,
/// top generator s_rank) is Artinian: every element has finitely many
/// predecessors. Holds iff the parabolic on s_1..s_{rank-1} is finite.
bool is_artinian(const CoxeterSystem& sys);

/// Per-top-generator verdicts: a generator order makes the deletion order
/// Artinian iff the parabolic omitting its top generator is finite, so the
/// n verdicts cover all n! orders.
struct ArtinianReport {
  struct PerTop {
    int top_generator = 0;
    bool parabolic_finite = false;
  };
  std::vector<PerTop> per_top;
  bool all_orders = false;
  bool irreducible = false;
  bool finite = false;
  /// "finite" when W is finite; "affine-or-compact-hyperbolic-candidate"
  /// when W is infinite, irreducible and every maximal standard parabolic
  /// omitting one generator is finite; "other" otherwise.
  std::string classification;
};

ArtinianReport artinian_all_orders(const CoxeterSystem& sys);

/// Both sides of the label decomposition L_0(w) = sum_i L_0(w_i) over the
/// coset factors w = w_n ... w_1, where L_0(g) = L(g) - 1 is the number of
/// elements strictly below g. in_order must list all of W in deletion
/// order. literal_sum is the same sum with every summand replaced by the
/// top factor's L_0 (n * L_0(w_n)), kept so callers can record that the
/// per-index reading, not this one, is the identity that holds.
struct L0Check {
  long lhs = 0;
  long factor_sum = 0;
  long literal_sum = 0;
};

L0Check l0_decomposition_check(const CoxeterSystem& sys, const std::vector<Element>& in_order,
                               const Element& g);

}  // namespace delorder
