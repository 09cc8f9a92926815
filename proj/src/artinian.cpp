#include "delorder/artinian.hpp"

#include <unordered_map>

#include "delorder/classify.hpp"
#include "delorder/errors.hpp"
#include "delorder/normal_form.hpp"

namespace delorder {

bool is_artinian(const CoxeterSystem& sys) {
  std::vector<int> lower;
  for (int s = 1; s < sys.rank(); ++s) lower.push_back(s);
  return sys.parabolic_finite(lower);
}

ArtinianReport artinian_all_orders(const CoxeterSystem& sys) {
  ArtinianReport out;
  out.finite = sys.is_finite();
  out.irreducible = diagram_components(sys.matrix()).size() == 1;
  out.all_orders = true;
  for (int top = 1; top <= sys.rank(); ++top) {
    std::vector<int> rest;
    for (int s = 1; s <= sys.rank(); ++s) {
      if (s != top) rest.push_back(s);
    }
    bool finite = sys.parabolic_finite(rest);
    out.per_top.push_back({top, finite});
    if (!finite) out.all_orders = false;
  }
  if (out.finite) {
    out.classification = "finite";
  } else if (out.irreducible && out.all_orders) {
    out.classification = "affine-or-compact-hyperbolic-candidate";
  } else {
    out.classification = "other";
  }
  return out;
}

L0Check l0_decomposition_check(const CoxeterSystem& sys, const std::vector<Element>& in_order,
                               const Element& g) {
  std::unordered_map<Element, long, ElementHash> rank_of;
  rank_of.reserve(in_order.size());
  long next = 0;
  for (const Element& e : in_order) rank_of.emplace(e, next++);
  auto l0 = [&](const Element& e) {
    auto it = rank_of.find(e);
    if (it == rank_of.end()) throw InputError("element missing from the supplied order");
    return it->second;
  };
  L0Check out;
  out.lhs = l0(g);
  CosetDecomposition dec = coset_decompose(sys, g);
  for (const Element& f : dec.factors) out.factor_sum += l0(f);
  out.literal_sum = static_cast<long>(dec.factors.size()) * l0(dec.factors.front());
  return out;
}

}  // namespace delorder
