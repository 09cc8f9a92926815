#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "delorder/cayley.hpp"
#include "delorder/coxeter_system.hpp"

namespace delorder {

/// Longest element of a finite system: greedy ascent, verified to be a
/// length-reversing involution before returning.
Element longest_element(const CoxeterSystem& sys, std::size_t cap = kDefaultEnumerationCap);

/// Minimal-length representatives of the left cosets c X for the standard
/// parabolic X generated by the given subset, in deletion order. A
/// representative is the unique coset member with no right descent inside
/// the subset.
std::vector<Element> minimal_coset_reps(const CoxeterSystem& sys, const std::vector<int>& subset,
                                        std::size_t cap = kDefaultEnumerationCap);

/// Full check of the pairing L(w) + L(w0 w) = |W| + 1 over a finite group,
/// with the labels of the minimal coset representatives over the parabolic
/// on s_1..s_{n-1} reported alongside (their labels satisfy
/// L(c) = l(c) |X| + 1 exactly when cosets are labelled consecutively).
struct DualityReport {
  std::string group;
  std::size_t size = 0;
  Word longest_nf;
  bool holds = false;
  struct Defect {
    Word w_nf;
    long l_w = 0;
    long l_w0w = 0;
    long sum = 0;
  };
  std::vector<Defect> defects;  // every w with L(w) + L(w0 w) != |W| + 1
  struct CosetRep {
    Word nf;
    int length = 0;
    long label = 0;
  };
  std::vector<CosetRep> coset_reps;
};

/// jobs > 1 splits the per-element defect scan across threads; results are
/// identical to the sequential run.
DualityReport duality_report(const CoxeterSystem& sys,
                             LabelStrategy strategy = LabelStrategy::Auto, int jobs = 1);

}  // namespace delorder
