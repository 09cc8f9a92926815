#pragma once

#include <vector>

#include "delorder/coxeter_system.hpp"
#include "delorder/ordering.hpp"
#include "delorder/word.hpp"

namespace delorder {

/// Normal form of g built greedily from the right: repeatedly peel off the
/// least right descent. The result is the right-to-left lexicographically
/// least reduced word of g, and coincides with the deletion-least reduced
/// word (see nf_delta_oracle).
Word nf_rlex(const CoxeterSystem& sys, const Element& g);

/// Deletion-least reduced word of g, found the slow way: enumerate all
/// reduced words and take the minimum under compare_deletion. Exists as an
/// independent cross-check for nf_rlex.
Word nf_delta_oracle(const CoxeterSystem& sys, const Element& g,
                     int length_cap = kDefaultReducedWordCap);

/// The deletion order transported to group elements via normal forms.
Ordering compare_elements(const CoxeterSystem& sys, const Element& g, const Element& h);

/// Factors w = w_n ... w_1 with w_i a minimal-length representative of its
/// coset over the parabolic generated by s_1..s_{i-1}: factors[0] = w_n down
/// to factors[n-1] = w_1. The normal form of w is the concatenation of the
/// factors' normal forms.
struct CosetDecomposition {
  std::vector<Element> factors;
};

CosetDecomposition coset_decompose(const CoxeterSystem& sys, const Element& g);

}  // namespace delorder
