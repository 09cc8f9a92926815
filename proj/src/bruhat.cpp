#include "delorder/bruhat.hpp"

#include "delorder/normal_form.hpp"

namespace delorder {

bool bruhat_leq(const CoxeterSystem& sys, const Element& u, const Element& v) {
  if (u == v) return true;
  int lu = sys.length(u);
  if (lu >= sys.length(v)) return false;
  Word w = nf_rlex(sys, v);
  Element x = u;
  for (int j = w.size() - 1; j >= 0; --j) {
    if (lu == 0) return true;
    Element moved = sys.apply(x, w[j]);
    if (sys.length(moved) < lu) {
      x = std::move(moved);
      --lu;
    }
  }
  return lu == 0;
}

BruhatRelation bruhat_compare(const CoxeterSystem& sys, const Element& u, const Element& v) {
  if (u == v) return BruhatRelation::Equal;
  if (bruhat_leq(sys, u, v)) return BruhatRelation::Less;
  if (bruhat_leq(sys, v, u)) return BruhatRelation::Greater;
  return BruhatRelation::Incomparable;
}

const char* to_string(BruhatRelation r) {
  switch (r) {
    case BruhatRelation::Less:
      return "less";
    case BruhatRelation::Greater:
      return "greater";
    case BruhatRelation::Equal:
      return "equal";
    default:
      return "incomparable";
  }
}

}  // namespace delorder
