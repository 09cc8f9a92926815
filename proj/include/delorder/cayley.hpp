#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "delorder/coxeter_system.hpp"

namespace delorder {

/// Right Cayley graph of a finite system: vertex g joins g*s for every
/// generator s. Vertices are stored in breadth-first order from the
/// identity (vertex 0).
struct CayleyGraph {
  std::vector<Element> vertices;
  std::vector<std::vector<int>> adj;  // adj[v][s-1] = neighbour vertex id
  std::unordered_map<Element, int, ElementHash> index;
  int rank = 0;
  std::size_t size() const { return vertices.size(); }
};

CayleyGraph build_cayley(const CoxeterSystem& sys, std::size_t cap = kDefaultEnumerationCap);

struct TreeEdge {
  int from = 0;  // vertex ids
  int to = 0;
  int gen = 0;
};

/// L labels 1..|W| plus the spanning tree the labelling walk traces out.
struct Labeling {
  std::vector<int> label;     // label[v] = L(v)
  std::vector<int> order;     // order[k] = vertex with label k+1
  std::vector<TreeEdge> tree;

  long tree_weight() const;  // sum of generator indices over tree edges
};

/// Greedy successor labelling of the Cayley graph: L(identity) = 1, then
/// repeatedly pick the least generator y crossing the labelled boundary and
/// the least-labelled vertex x with x*y unlabelled, and give x*y the next
/// label. Inherently sequential; runs single-threaded.
Labeling successor_label(const CayleyGraph& graph);

enum class LabelStrategy { Auto, Graph, Sort };

/// Every element in deletion order. Graph builds the Cayley graph and runs
/// successor_label (authoritative); Sort enumerates and sorts by normal
/// form, which needs no adjacency and less memory, and is the default for
/// groups past a few thousand elements.
std::vector<Element> elements_in_deletion_order(const CoxeterSystem& sys,
                                                LabelStrategy strategy = LabelStrategy::Auto,
                                                std::size_t cap = kDefaultEnumerationCap);

/// First `count` elements of W in deletion order, finite or not: best-first
/// expansion of the Cayley graph from the identity, keyed by normal form.
/// Works on infinite systems because every element's parent under the order
/// is its normal-form prefix. Stops early if W itself has fewer elements.
std::vector<Element> stream_in_deletion_order(const CoxeterSystem& sys, std::size_t count,
                                              std::size_t frontier_cap = kDefaultEnumerationCap);

/// The permutation of 1..|W| induced by right translation by w under the
/// labelling: position L(u) maps to L(u * w^-1). This makes L a Cayley
/// embedding of W into the symmetric group on |W| letters.
std::vector<int> cayley_embedding_image(const CoxeterSystem& sys, const CayleyGraph& graph,
                                        const Labeling& labeling, const Element& w);

/// CSV table "L,perm,nf" of elements in the given order. When the model has
/// no permutation form the perm column is dropped (header "L,nf") and a
/// notice goes to *notice if given.
std::string table_csv(const CoxeterSystem& sys, const std::vector<Element>& in_order,
                      std::ostream* notice = nullptr);

/// Graphviz rendering: vertices annotated "L | nf", one edge per generator
/// pair with per-generator styling, labelling-tree edges drawn thick.
std::string export_dot(const CoxeterSystem& sys, const CayleyGraph& graph,
                       const Labeling& labeling);

/// JSON document with the table rows, every edge, and the labelling tree.
std::string export_json(const CoxeterSystem& sys, const CayleyGraph& graph,
                        const Labeling& labeling);

}  // namespace delorder
