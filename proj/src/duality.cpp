#include "delorder/duality.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "delorder/errors.hpp"
#include "delorder/normal_form.hpp"

namespace delorder {

Element longest_element(const CoxeterSystem& sys, std::size_t cap) {
  if (!sys.is_finite()) throw ResourceError("infinite group has no longest element");
  Element cur = sys.identity();
  std::size_t steps = 0;
  for (;;) {
    int len = sys.length(cur);
    bool ascended = false;
    for (int s = 1; s <= sys.rank(); ++s) {
      Element next = sys.apply(cur, s);
      if (sys.length(next) > len) {
        cur = std::move(next);
        ascended = true;
        break;
      }
    }
    if (!ascended) break;
    if (++steps > cap) throw ResourceError("longest-element ascent exceeded cap");
  }
  // sanity: w0 is an involution and reverses lengths
  if (sys.multiply(cur, cur) != sys.identity()) {
    throw InvariantError("longest element is not an involution");
  }
  return cur;
}

std::vector<Element> minimal_coset_reps(const CoxeterSystem& sys, const std::vector<int>& subset,
                                        std::size_t cap) {
  for (int s : subset) {
    if (s < 1 || s > sys.rank()) {
      throw InputError("parabolic subset contains generator outside 1.." +
                       std::to_string(sys.rank()));
    }
  }
  std::vector<Element> all = sys.enumerate(cap);
  std::unordered_set<Element, ElementHash> reps;
  std::vector<Element> out;
  for (const Element& g : all) {
    // strip right descents inside the subset to reach the coset's minimum
    Element cur = g;
    for (;;) {
      int len = sys.length(cur);
      bool moved = false;
      for (int s : subset) {
        Element next = sys.apply(cur, s);
        if (sys.length(next) < len) {
          cur = std::move(next);
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    if (reps.insert(cur).second) out.push_back(std::move(cur));
  }
  std::sort(out.begin(), out.end(), [&](const Element& a, const Element& b) {
    return compare_elements(sys, a, b) == Ordering::Less;
  });
  return out;
}

DualityReport duality_report(const CoxeterSystem& sys, LabelStrategy strategy, int jobs) {
  DualityReport out;
  out.group = sys.label();
  std::vector<Element> order = elements_in_deletion_order(sys, strategy);
  out.size = order.size();
  std::unordered_map<Element, long, ElementHash> label_of;
  label_of.reserve(order.size());
  long next = 1;
  for (const Element& g : order) label_of.emplace(g, next++);

  Element w0 = longest_element(sys);
  out.longest_nf = nf_rlex(sys, w0);

  const long expected = static_cast<long>(out.size) + 1;
  std::vector<std::vector<DualityReport::Defect>> found(
      static_cast<std::size_t>(std::max(jobs, 1)));
  auto scan = [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Element& w = order[i];
      long l_w = static_cast<long>(i) + 1;
      long l_w0w = label_of.at(sys.multiply(w0, w));
      if (l_w + l_w0w != expected) {
        found[chunk].push_back(
            {nf_rlex(sys, w), l_w, l_w0w, l_w + l_w0w});
      }
    }
  };
  if (jobs > 1 && order.size() > 256) {
    std::size_t parts = static_cast<std::size_t>(jobs);
    std::vector<std::thread> threads;
    std::size_t step = (order.size() + parts - 1) / parts;
    for (std::size_t p = 0; p < parts; ++p) {
      std::size_t begin = p * step;
      std::size_t end = std::min(order.size(), begin + step);
      if (begin >= end) break;
      threads.emplace_back(scan, p, begin, end);
    }
    for (auto& t : threads) t.join();
  } else {
    scan(0, 0, order.size());
  }
  for (auto& chunk : found) {
    for (auto& d : chunk) out.defects.push_back(std::move(d));
  }
  out.holds = out.defects.empty();

  std::vector<int> lower;
  for (int s = 1; s < sys.rank(); ++s) lower.push_back(s);
  for (const Element& c : minimal_coset_reps(sys, lower)) {
    out.coset_reps.push_back({nf_rlex(sys, c), sys.length(c), label_of.at(c)});
  }
  return out;
}

}  // namespace delorder
