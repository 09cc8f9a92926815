#include "delorder/cayley.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include <json.hpp>

#include "delorder/deletion.hpp"
#include "delorder/errors.hpp"
#include "delorder/normal_form.hpp"

namespace delorder {

CayleyGraph build_cayley(const CoxeterSystem& sys, std::size_t cap) {
  if (!sys.is_finite()) throw ResourceError("cannot build the Cayley graph of an infinite group");
  CayleyGraph g;
  g.rank = sys.rank();
  std::deque<int> queue;
  Element e = sys.identity();
  g.index.emplace(e, 0);
  g.vertices.push_back(e);
  queue.push_back(0);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int s = 1; s <= sys.rank(); ++s) {
      Element h = sys.apply(g.vertices[static_cast<std::size_t>(v)], s);
      auto [it, inserted] = g.index.emplace(h, static_cast<int>(g.vertices.size()));
      if (inserted) {
        g.vertices.push_back(std::move(h));
        queue.push_back(it->second);
        if (g.vertices.size() > cap) {
          throw ResourceError("Cayley graph cap (" + std::to_string(cap) + ") exceeded");
        }
      }
    }
  }
  g.adj.assign(g.size(), std::vector<int>(static_cast<std::size_t>(g.rank), 0));
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (int s = 1; s <= g.rank; ++s) {
      g.adj[v][static_cast<std::size_t>(s - 1)] =
          g.index.at(sys.apply(g.vertices[v], s));
    }
  }
  return g;
}

long Labeling::tree_weight() const {
  long total = 0;
  for (const TreeEdge& e : tree) total += e.gen;
  return total;
}

Labeling successor_label(const CayleyGraph& graph) {
  const int n = static_cast<int>(graph.size());
  Labeling out;
  out.label.assign(static_cast<std::size_t>(n), 0);
  out.order.reserve(static_cast<std::size_t>(n));
  out.tree.reserve(static_cast<std::size_t>(n == 0 ? 0 : n - 1));
  if (n == 0) return out;
  out.label[0] = 1;
  out.order.push_back(0);
  for (int k = 2; k <= n; ++k) {
    // least generator with an edge out of the labelled set
    int y = 0;
    for (int s = 1; s <= graph.rank && y == 0; ++s) {
      for (int v : out.order) {
        if (out.label[static_cast<std::size_t>(
                graph.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(s - 1)])] == 0) {
          y = s;
          break;
        }
      }
    }
    if (y == 0) throw InvariantError("labelled set has no outgoing edge but graph is larger");
    // least-labelled vertex that y moves out of the labelled set
    int x = -1;
    for (int v : out.order) {
      if (out.label[static_cast<std::size_t>(
              graph.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(y - 1)])] == 0) {
        x = v;
        break;
      }
    }
    if (x < 0) throw InvariantError("no labelled source for chosen generator");
    int w = graph.adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y - 1)];
    out.label[static_cast<std::size_t>(w)] = k;
    out.order.push_back(w);
    out.tree.push_back(TreeEdge{x, w, y});
  }
  return out;
}

namespace {

std::vector<Element> sorted_by_normal_form(const CoxeterSystem& sys,
                                           std::vector<Element> elements) {
  std::vector<std::pair<Word, Element>> keyed;
  keyed.reserve(elements.size());
  for (Element& g : elements) {
    keyed.emplace_back(nf_rlex(sys, g), std::move(g));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return compare_deletion(a.first, b.first) == Ordering::Less;
  });
  std::vector<Element> out;
  out.reserve(keyed.size());
  for (auto& [w, g] : keyed) out.push_back(std::move(g));
  return out;
}

constexpr std::size_t kSortStrategyThreshold = 5000;

}  // namespace

std::vector<Element> elements_in_deletion_order(const CoxeterSystem& sys, LabelStrategy strategy,
                                                std::size_t cap) {
  if (strategy == LabelStrategy::Auto || strategy == LabelStrategy::Sort) {
    std::vector<Element> all = sys.enumerate(cap);
    if (strategy == LabelStrategy::Sort || all.size() > kSortStrategyThreshold) {
      return sorted_by_normal_form(sys, std::move(all));
    }
  }
  CayleyGraph graph = build_cayley(sys, cap);
  Labeling labeling = successor_label(graph);
  std::vector<Element> out;
  out.reserve(graph.size());
  for (int v : labeling.order) out.push_back(graph.vertices[static_cast<std::size_t>(v)]);
  return out;
}

std::vector<Element> stream_in_deletion_order(const CoxeterSystem& sys, std::size_t count,
                                              std::size_t frontier_cap) {
  std::vector<Element> out;
  if (count == 0) return out;
  auto frontier_less = [](const std::pair<Word, Element>& a, const std::pair<Word, Element>& b) {
    Ordering r = compare_deletion(a.first, b.first);
    if (r != Ordering::Equal) return r == Ordering::Less;
    return a.second < b.second;
  };
  std::set<std::pair<Word, Element>, decltype(frontier_less)> frontier(frontier_less);
  std::unordered_set<Element, ElementHash> emitted;
  auto emit = [&](const Element& g) {
    out.push_back(g);
    emitted.insert(g);
    for (int s = 1; s <= sys.rank(); ++s) {
      Element h = sys.apply(g, s);
      if (!emitted.contains(h)) {
        Word nf = nf_rlex(sys, h);
        frontier.emplace(std::move(nf), std::move(h));
        if (frontier.size() > frontier_cap) {
          throw ResourceError("stream frontier cap (" + std::to_string(frontier_cap) +
                              ") exceeded");
        }
      }
    }
  };
  emit(sys.identity());
  while (out.size() < count && !frontier.empty()) {
    auto it = frontier.begin();
    Element g = it->second;
    frontier.erase(it);
    if (emitted.contains(g)) continue;
    emit(g);
  }
  return out;
}

std::vector<int> cayley_embedding_image(const CoxeterSystem& sys, const CayleyGraph& graph,
                                        const Labeling& labeling, const Element& w) {
  Element w_inv = sys.inverse(w);
  std::vector<int> image(graph.size(), 0);
  for (std::size_t v = 0; v < graph.size(); ++v) {
    Element moved = sys.multiply(graph.vertices[v], w_inv);
    image[static_cast<std::size_t>(labeling.label[v] - 1)] =
        labeling.label[static_cast<std::size_t>(graph.index.at(moved))];
  }
  return image;
}

namespace {

std::string one_line_text(const std::vector<int>& img) {
  std::string out;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(img[i]);
  }
  return out;
}

}  // namespace

std::string table_csv(const CoxeterSystem& sys, const std::vector<Element>& in_order,
                      std::ostream* notice) {
  bool with_perm = sys.model().one_line(sys.identity()).has_value();
  if (!with_perm && notice != nullptr) {
    *notice << "note: model \"" << sys.model().name()
            << "\" has no permutation form; perm column omitted\n";
  }
  std::string out = with_perm ? "L,perm,nf\n" : "L,nf\n";
  long l = 0;
  for (const Element& g : in_order) {
    ++l;
    out += std::to_string(l);
    if (with_perm) {
      out += ',';
      out += one_line_text(*sys.model().one_line(g));
    }
    out += ',';
    out += nf_rlex(sys, g).str('s');
    out += '\n';
  }
  return out;
}

namespace {

// shared edge styling: generator 1 solid black, 2 solid grey, 3 dashed,
// further generators dotted with a rotating colour
std::string edge_style(int gen, bool tree_edge) {
  std::string style;
  if (gen == 1) {
    style = "style=solid color=black";
  } else if (gen == 2) {
    style = "style=solid color=grey60";
  } else if (gen == 3) {
    style = "style=dashed color=black";
  } else {
    static const char* colours[] = {"red3", "blue3", "forestgreen", "darkorange2"};
    style = std::string("style=dotted color=") + colours[(gen - 4) % 4];
  }
  style += tree_edge ? " penwidth=2.4" : " penwidth=1.0";
  return style;
}

}  // namespace

std::string export_dot(const CoxeterSystem& sys, const CayleyGraph& graph,
                       const Labeling& labeling) {
  std::set<std::tuple<int, int, int>> tree_edges;  // (min vertex, max vertex, gen)
  for (const TreeEdge& e : labeling.tree) {
    tree_edges.emplace(std::min(e.from, e.to), std::max(e.from, e.to), e.gen);
  }
  std::ostringstream os;
  os << "graph cayley {\n";
  os << "  node [shape=box fontsize=10];\n";
  for (int v : labeling.order) {
    os << "  " << labeling.label[static_cast<std::size_t>(v)] << " [label=\""
       << labeling.label[static_cast<std::size_t>(v)] << " | "
       << nf_rlex(sys, graph.vertices[static_cast<std::size_t>(v)]).str('s') << "\"];\n";
  }
  for (int v : labeling.order) {
    for (int s = 1; s <= graph.rank; ++s) {
      int w = graph.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(s - 1)];
      if (labeling.label[static_cast<std::size_t>(v)] >=
          labeling.label[static_cast<std::size_t>(w)]) {
        continue;  // draw each undirected edge once, from the smaller label
      }
      bool in_tree = tree_edges.contains({std::min(v, w), std::max(v, w), s});
      os << "  " << labeling.label[static_cast<std::size_t>(v)] << " -- "
         << labeling.label[static_cast<std::size_t>(w)] << " [label=\"s" << s << "\" "
         << edge_style(s, in_tree) << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const CoxeterSystem& sys, const CayleyGraph& graph,
                        const Labeling& labeling) {
  nlohmann::json doc;
  doc["group"] = sys.label();
  doc["rank"] = sys.rank();
  doc["size"] = graph.size();
  nlohmann::json rows = nlohmann::json::array();
  for (int v : labeling.order) {
    nlohmann::json row;
    row["L"] = labeling.label[static_cast<std::size_t>(v)];
    row["nf"] = nf_rlex(sys, graph.vertices[static_cast<std::size_t>(v)]).str('s');
    if (auto img = sys.model().one_line(graph.vertices[static_cast<std::size_t>(v)])) {
      row["perm"] = *img;
    }
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  nlohmann::json edges = nlohmann::json::array();
  for (int v : labeling.order) {
    for (int s = 1; s <= graph.rank; ++s) {
      int w = graph.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(s - 1)];
      if (labeling.label[static_cast<std::size_t>(v)] >=
          labeling.label[static_cast<std::size_t>(w)]) {
        continue;
      }
      nlohmann::json edge;
      edge["a"] = labeling.label[static_cast<std::size_t>(v)];
      edge["b"] = labeling.label[static_cast<std::size_t>(w)];
      edge["s"] = s;
      edges.push_back(std::move(edge));
    }
  }
  doc["edges"] = std::move(edges);
  nlohmann::json tree = nlohmann::json::array();
  for (const TreeEdge& e : labeling.tree) {
    nlohmann::json edge;
    edge["from"] = labeling.label[static_cast<std::size_t>(e.from)];
    edge["to"] = labeling.label[static_cast<std::size_t>(e.to)];
    edge["s"] = e.gen;
    tree.push_back(std::move(edge));
  }
  doc["tree"] = std::move(tree);
  return doc.dump(2) + "\n";
}

}  // namespace delorder
