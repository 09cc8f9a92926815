#include "delorder/classify.hpp"

#include <algorithm>
#include <map>

#include "delorder/errors.hpp"

namespace delorder {

namespace {

bool has_edge(const CoxeterMatrix& m, int i, int j) { return i != j && m.m(i, j) != 2; }

std::vector<int> all_generators(const CoxeterMatrix& m) {
  std::vector<int> gens(static_cast<std::size_t>(m.rank()));
  for (int i = 0; i < m.rank(); ++i) gens[static_cast<std::size_t>(i)] = i + 1;
  return gens;
}

}  // namespace

bool DiagramComponent::finite() const {
  if (family == Family::Unclassified) return false;
  if (family == Family::I2) return i2_m != 0;
  return true;
}

std::string DiagramComponent::name() const {
  int n = static_cast<int>(gens.size());
  switch (family) {
    case Family::A:
      return "A" + std::to_string(n);
    case Family::B:
      return "B" + std::to_string(n);
    case Family::D:
      return "D" + std::to_string(n);
    case Family::E6:
      return "E6";
    case Family::E7:
      return "E7";
    case Family::E8:
      return "E8";
    case Family::F4:
      return "F4";
    case Family::H3:
      return "H3";
    case Family::H4:
      return "H4";
    case Family::I2:
      return i2_m == 0 ? "I2(inf)" : "I2(" + std::to_string(i2_m) + ")";
    default:
      return "rank-" + std::to_string(n) + " unclassified";
  }
}

std::vector<std::vector<int>> diagram_components(const CoxeterMatrix& m,
                                                 const std::vector<int>& subset) {
  std::vector<std::vector<int>> out;
  std::map<int, bool> seen;
  for (int g : subset) seen[g] = false;
  for (int start : subset) {
    if (seen.at(start)) continue;
    std::vector<int> comp;
    std::vector<int> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      comp.push_back(v);
      for (int w : subset) {
        if (!seen.at(w) && has_edge(m, v, w)) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<std::vector<int>> diagram_components(const CoxeterMatrix& m) {
  return diagram_components(m, all_generators(m));
}

namespace {

// Path traversal from `start` along component edges; returns vertices in
// order. Assumes degrees <= 2 and no cycle.
std::vector<int> walk_path(const CoxeterMatrix& m, const std::vector<int>& comp, int start) {
  std::vector<int> order{start};
  int prev = 0;
  int cur = start;
  for (;;) {
    int next = 0;
    for (int w : comp) {
      if (w != prev && w != cur && has_edge(m, cur, w)) {
        next = w;
        break;
      }
    }
    if (next == 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

std::vector<int> path_labels(const CoxeterMatrix& m, const std::vector<int>& order) {
  std::vector<int> labels;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    labels.push_back(m.m(order[i], order[i + 1]));
  }
  return labels;
}

bool all_threes(const std::vector<int>& labels) {
  return std::all_of(labels.begin(), labels.end(), [](int v) { return v == 3; });
}

DiagramComponent classify_path(const CoxeterMatrix& m, const std::vector<int>& comp,
                               const std::vector<int>& ends) {
  DiagramComponent out;
  out.gens = comp;
  int n = static_cast<int>(comp.size());
  for (int end : ends) {
    std::vector<int> order = walk_path(m, comp, end);
    std::vector<int> labels = path_labels(m, order);
    if (all_threes(labels)) {
      out.family = Family::A;
      // canonical orientation: start from the smaller end
      out.gens = end == std::min(ends[0], ends[1]) ? order : walk_path(m, comp, std::min(ends[0], ends[1]));
      return out;
    }
    if (labels.front() == 4 && all_threes(std::vector<int>(labels.begin() + 1, labels.end()))) {
      out.family = Family::B;
      out.gens = order;  // sign-flip generator sits at the 4-edge end
      return out;
    }
    if (n == 4 && labels == std::vector<int>{3, 4, 3}) {
      out.family = Family::F4;
      out.gens = order;
      return out;
    }
    if (n == 3 && labels == std::vector<int>{5, 3}) {
      out.family = Family::H3;
      out.gens = order;
      return out;
    }
    if (n == 4 && labels == std::vector<int>{5, 3, 3}) {
      out.family = Family::H4;
      out.gens = order;
      return out;
    }
  }
  return out;  // Unclassified
}

DiagramComponent classify_fork(const CoxeterMatrix& m, const std::vector<int>& comp, int fork) {
  DiagramComponent out;
  out.gens = comp;
  // all edges of the catalogued fork shapes carry label 3
  for (int a : comp) {
    for (int b : comp) {
      if (a < b && has_edge(m, a, b) && m.m(a, b) != 3) return out;
    }
  }
  std::vector<std::vector<int>> arms;
  for (int w : comp) {
    if (has_edge(m, fork, w)) {
      std::vector<int> arm{w};
      int prev = fork;
      int cur = w;
      for (;;) {
        int next = 0;
        for (int x : comp) {
          if (x != prev && x != cur && has_edge(m, cur, x)) {
            next = x;
            break;
          }
        }
        if (next == 0) break;
        arm.push_back(next);
        prev = cur;
        cur = next;
      }
      arms.push_back(std::move(arm));
    }
  }
  if (arms.size() != 3) return out;
  std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  std::size_t l1 = arms[0].size();
  std::size_t l2 = arms[1].size();
  std::size_t l3 = arms[2].size();
  int n = static_cast<int>(comp.size());
  if (l1 == 1 && l2 == 1) {
    out.family = Family::D;
    out.gens = {arms[0][0], arms[1][0], fork};
    out.gens.insert(out.gens.end(), arms[2].begin(), arms[2].end());
    return out;
  }
  if (l1 == 1 && l2 == 2 && l3 == 2 && n == 6) out.family = Family::E6;
  if (l1 == 1 && l2 == 2 && l3 == 3 && n == 7) out.family = Family::E7;
  if (l1 == 1 && l2 == 2 && l3 == 4 && n == 8) out.family = Family::E8;
  return out;
}

}  // namespace

DiagramComponent classify_component(const CoxeterMatrix& m, std::vector<int> component) {
  std::sort(component.begin(), component.end());
  DiagramComponent out;
  out.gens = component;
  int n = static_cast<int>(component.size());
  if (n == 0) throw InputError("empty diagram component");
  if (n == 1) {
    out.family = Family::A;
    return out;
  }
  if (n == 2) {
    int label = m.m(component[0], component[1]);
    if (label == 3) {
      out.family = Family::A;
    } else if (label == 4) {
      out.family = Family::B;
    } else {
      out.family = Family::I2;
      out.i2_m = label;
    }
    return out;
  }
  int edge_count = 0;
  for (int a : component) {
    for (int b : component) {
      if (a < b && has_edge(m, a, b)) {
        if (m.m(a, b) == 0) return out;  // infinite bond
        ++edge_count;
      }
    }
  }
  if (edge_count != n - 1) return out;  // contains a cycle
  std::vector<int> ends;
  int fork = 0;
  for (int v : component) {
    int deg = 0;
    for (int w : component) {
      if (has_edge(m, v, w)) ++deg;
    }
    if (deg == 1) ends.push_back(v);
    if (deg == 3) {
      if (fork != 0) return out;  // two forks: not catalogued
      fork = v;
    }
    if (deg > 3) return out;
  }
  if (fork != 0) return classify_fork(m, component, fork);
  if (ends.size() != 2) return out;
  return classify_path(m, component, ends);
}

bool matrix_finite(const CoxeterMatrix& m, const std::vector<int>& subset) {
  for (const auto& comp : diagram_components(m, subset)) {
    if (!classify_component(m, comp).finite()) return false;
  }
  return true;
}

bool matrix_finite(const CoxeterMatrix& m) { return matrix_finite(m, all_generators(m)); }

std::string matrix_type_name(const CoxeterMatrix& m) {
  std::string out;
  for (const auto& comp : diagram_components(m)) {
    if (!out.empty()) out += " x ";
    out += classify_component(m, comp).name();
  }
  return out;
}

}  // namespace delorder
