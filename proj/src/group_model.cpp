#include "delorder/group_model.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "delorder/classify.hpp"
#include "delorder/errors.hpp"

namespace delorder {

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int b = 0; b < 4; ++b) {
      h ^= (x >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  for (int v : e.key()) mix(static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)));
  mix(static_cast<std::uint64_t>(e.key().size()));
  return static_cast<std::size_t>(h);
}

namespace {

void check_generator(int rank, int s) {
  if (s < 1 || s > rank) {
    throw InputError("generator index " + std::to_string(s) + " outside 1.." +
                     std::to_string(rank));
  }
}

std::vector<int> role_table(int rank, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != rank) {
    throw InputError("model generator order must cover all generators");
  }
  std::vector<int> role(static_cast<std::size_t>(rank) + 1, -1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    check_generator(rank, order[k]);
    if (role[static_cast<std::size_t>(order[k])] != -1) {
      throw InputError("model generator order repeats a generator");
    }
    role[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
  }
  return role;
}

int count_inversions(const std::vector<int>& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) ++inv;
    }
  }
  return inv;
}

int count_negative_sum_pairs(const std::vector<int>& w) {
  int nsp = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] + w[j] < 0) ++nsp;
    }
  }
  return nsp;
}

/// Symmetric group on 1..rank+1; right action, so the stored one-line image
/// img[i-1] = (i)w picks up a value transposition on right multiplication.
class PermutationModel final : public GroupModel {
 public:
  PermutationModel(int rank, const std::vector<int>& path_order)
      : rank_(rank), role_(role_table(rank, path_order)) {}

  Element identity() const override {
    std::vector<int> img(static_cast<std::size_t>(rank_) + 1);
    for (int i = 0; i <= rank_; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    return Element(std::move(img));
  }

  Element apply(const Element& g, int s) const override {
    check_generator(rank_, s);
    int t = role_[static_cast<std::size_t>(s)] + 1;  // transposition (t, t+1)
    std::vector<int> img = g.key();
    for (int& v : img) {
      if (v == t) {
        v = t + 1;
      } else if (v == t + 1) {
        v = t;
      }
    }
    return Element(std::move(img));
  }

  int length(const Element& g) const override { return count_inversions(g.key()); }

  const char* name() const override { return "permutation"; }

  std::optional<std::vector<int>> one_line(const Element& g) const override { return g.key(); }

 private:
  int rank_;
  std::vector<int> role_;
};

/// Signed permutations of 1..rank (hyperoctahedral group). The window
/// img[i-1] = (i)w holds signed values; length is inv + neg + nsp.
class SignedPermutationModel final : public GroupModel {
 public:
  SignedPermutationModel(int rank, const std::vector<int>& path_order)
      : rank_(rank), role_(role_table(rank, path_order)) {}

  Element identity() const override {
    std::vector<int> img(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    return Element(std::move(img));
  }

  Element apply(const Element& g, int s) const override {
    check_generator(rank_, s);
    int r = role_[static_cast<std::size_t>(s)];
    std::vector<int> img = g.key();
    if (r == 0) {
      for (int& v : img) {
        if (v == 1) {
          v = -1;
        } else if (v == -1) {
          v = 1;
        }
      }
    } else {
      for (int& v : img) {
        if (v == r) {
          v = r + 1;
        } else if (v == r + 1) {
          v = r;
        } else if (v == -r) {
          v = -(r + 1);
        } else if (v == -(r + 1)) {
          v = -r;
        }
      }
    }
    return Element(std::move(img));
  }

  int length(const Element& g) const override {
    const auto& w = g.key();
    int neg = 0;
    for (int v : w) {
      if (v < 0) ++neg;
    }
    return count_inversions(w) + neg + count_negative_sum_pairs(w);
  }

  const char* name() const override { return "signed-permutation"; }

  std::optional<std::vector<int>> one_line(const Element& g) const override { return g.key(); }

 private:
  int rank_;
  std::vector<int> role_;
};

/// Even-signed permutations of 1..rank; length is inv + nsp.
class EvenSignedModel final : public GroupModel {
 public:
  EvenSignedModel(int rank, const std::vector<int>& standard_order)
      : rank_(rank), role_(role_table(rank, standard_order)) {}

  Element identity() const override {
    std::vector<int> img(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    return Element(std::move(img));
  }

  Element apply(const Element& g, int s) const override {
    check_generator(rank_, s);
    int r = role_[static_cast<std::size_t>(s)];
    std::vector<int> img = g.key();
    if (r == 0) {
      // swap values 1 and 2 with both signs flipped
      for (int& v : img) {
        if (v == 1) {
          v = -2;
        } else if (v == 2) {
          v = -1;
        } else if (v == -1) {
          v = 2;
        } else if (v == -2) {
          v = 1;
        }
      }
    } else {
      for (int& v : img) {
        if (v == r) {
          v = r + 1;
        } else if (v == r + 1) {
          v = r;
        } else if (v == -r) {
          v = -(r + 1);
        } else if (v == -(r + 1)) {
          v = -r;
        }
      }
    }
    return Element(std::move(img));
  }

  int length(const Element& g) const override {
    const auto& w = g.key();
    return count_inversions(w) + count_negative_sum_pairs(w);
  }

  const char* name() const override { return "even-signed-permutation"; }

  std::optional<std::vector<int>> one_line(const Element& g) const override { return g.key(); }

 private:
  int rank_;
  std::vector<int> role_;
};

/// Dihedral group I2(m), m = 0 meaning infinity. An element is its length
/// together with the first letter of its reduced word; the longest element
/// of a finite group (whose two reduced words coincide as an element) is
/// canonicalized as starting with s_1.
class DihedralModel final : public GroupModel {
 public:
  explicit DihedralModel(int m) : m_(m) {
    if (m != 0 && m < 3) throw InputError("dihedral parameter must be >= 3 or 0 for infinity");
  }

  Element identity() const override { return Element({0, 0}); }

  Element apply(const Element& g, int s) const override {
    check_generator(2, s);
    int len = g.key()[0];
    int first = g.key()[1];
    if (len == 0) return Element({1, s});
    if (m_ != 0 && len == m_) {
      // both generators are descents of the longest element
      int f = (m_ % 2 == 1) ? s : other(s);
      return Element({m_ - 1, f});
    }
    int last = (len % 2 == 1) ? first : other(first);
    if (s == last) {
      return len == 1 ? identity() : Element({len - 1, first});
    }
    if (m_ != 0 && len + 1 == m_) return Element({m_, 1});
    return Element({len + 1, first});
  }

  int length(const Element& g) const override { return g.key()[0]; }

  const char* name() const override { return "dihedral"; }

 private:
  static int other(int s) { return s == 1 ? 2 : 1; }
  int m_;
};

bool rlex_word_less(const std::vector<int>& a, const std::vector<int>& b) {
  // callers compare equal-length words; read right to left
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int x = a[a.size() - 1 - i];
    int y = b[b.size() - 1 - i];
    if (x != y) return x < y;
  }
  return a.size() < b.size();
}

/// Generic arithmetic for any Coxeter matrix over reduced words. An element
/// is its canonical reduced word: the right-to-left lexicographically least
/// member of the braid-move closure. Correctness rests on the word property:
/// braid moves connect all reduced words of an element, and a non-reduced
/// word's closure contains a word with two equal adjacent letters.
class TitsModel final : public GroupModel {
 public:
  TitsModel(CoxeterMatrix matrix, int word_cap)
      : matrix_(std::move(matrix)), word_cap_(word_cap) {}

  Element identity() const override { return Element(std::vector<int>{}); }

  Element apply(const Element& g, int s) const override {
    check_generator(matrix_.rank(), s);
    std::vector<int> w = g.key();
    w.push_back(s);
    return Element(normalize(std::move(w)));
  }

  int length(const Element& g) const override { return static_cast<int>(g.key().size()); }

  const char* name() const override { return "tits-rewriting"; }

 private:
  std::vector<int> normalize(std::vector<int> w) const {
    for (;;) {
      if (static_cast<int>(w.size()) > word_cap_) {
        throw ResourceError("word length cap (" + std::to_string(word_cap_) +
                            ") exceeded in rewriting model");
      }
      std::set<std::vector<int>> seen{w};
      std::vector<std::vector<int>> stack{w};
      std::optional<std::vector<int>> shrunk;
      while (!stack.empty()) {
        std::vector<int> x = std::move(stack.back());
        stack.pop_back();
        for (std::size_t p = 0; p + 1 < x.size(); ++p) {
          if (x[p] == x[p + 1]) {
            std::vector<int> y;
            y.reserve(x.size() - 2);
            y.insert(y.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p));
            y.insert(y.end(), x.begin() + static_cast<std::ptrdiff_t>(p) + 2, x.end());
            shrunk = std::move(y);
            break;
          }
        }
        if (shrunk) break;
        for (std::size_t p = 0; p + 1 < x.size(); ++p) {
          int s = x[p];
          int t = x[p + 1];
          int mm = matrix_.m(s, t);
          if (mm == 0 || p + static_cast<std::size_t>(mm) > x.size()) continue;
          bool alternating = true;
          for (int q = 0; q < mm; ++q) {
            if (x[p + static_cast<std::size_t>(q)] != ((q % 2 == 0) ? s : t)) {
              alternating = false;
              break;
            }
          }
          if (!alternating) continue;
          std::vector<int> y = x;
          for (int q = 0; q < mm; ++q) {
            y[p + static_cast<std::size_t>(q)] = (q % 2 == 0) ? t : s;
          }
          if (seen.insert(y).second) {
            if (seen.size() > kClosureCap) {
              throw ResourceError("braid closure exceeded cap in rewriting model");
            }
            stack.push_back(std::move(y));
          }
        }
      }
      if (shrunk) {
        w = std::move(*shrunk);
        continue;
      }
      return *std::min_element(seen.begin(), seen.end(), rlex_word_less);
    }
  }

  static constexpr std::size_t kClosureCap = 200000;
  CoxeterMatrix matrix_;
  int word_cap_;
};

}  // namespace

std::shared_ptr<const GroupModel> make_permutation_model(int rank,
                                                         const std::vector<int>& path_order) {
  return std::make_shared<PermutationModel>(rank, path_order);
}

std::shared_ptr<const GroupModel> make_signed_permutation_model(
    int rank, const std::vector<int>& path_order) {
  return std::make_shared<SignedPermutationModel>(rank, path_order);
}

std::shared_ptr<const GroupModel> make_even_signed_model(int rank,
                                                         const std::vector<int>& standard_order) {
  return std::make_shared<EvenSignedModel>(rank, standard_order);
}

std::shared_ptr<const GroupModel> make_dihedral_model(int m) {
  return std::make_shared<DihedralModel>(m);
}

std::shared_ptr<const GroupModel> make_tits_model(CoxeterMatrix matrix, int word_cap) {
  matrix.validate();
  return std::make_shared<TitsModel>(std::move(matrix), word_cap);
}

std::shared_ptr<const GroupModel> make_model(const CoxeterMatrix& matrix) {
  matrix.validate();
  auto comps = diagram_components(matrix);
  std::shared_ptr<const GroupModel> model;
  if (comps.size() == 1) {
    DiagramComponent c = classify_component(matrix, comps.front());
    switch (c.family) {
      case Family::A:
        model = make_permutation_model(matrix.rank(), c.gens);
        break;
      case Family::B:
        model = make_signed_permutation_model(matrix.rank(), c.gens);
        break;
      case Family::D:
        model = make_even_signed_model(matrix.rank(), c.gens);
        break;
      case Family::I2:
        model = make_dihedral_model(c.i2_m);
        break;
      default:
        model = make_tits_model(matrix);
        break;
    }
  } else {
    model = make_tits_model(matrix);
  }
  if (matrix.rank() <= 6) verify_model_relations(*model, matrix);
  return model;
}

void verify_model_relations(const GroupModel& model, const CoxeterMatrix& matrix) {
  const Element e = model.identity();
  for (int i = 1; i <= matrix.rank(); ++i) {
    if (model.apply(model.apply(e, i), i) != e) {
      throw InvariantError("model violates s" + std::to_string(i) + "^2 = e");
    }
    for (int j = i + 1; j <= matrix.rank(); ++j) {
      int m = matrix.m(i, j);
      if (m == 0) continue;
      Element x = e;
      for (int k = 1; k <= m; ++k) {
        x = model.apply(model.apply(x, i), j);
        if (k < m && x == e) {
          throw InvariantError("model gives (s" + std::to_string(i) + " s" + std::to_string(j) +
                               ") order below m = " + std::to_string(m));
        }
      }
      if (x != e) {
        throw InvariantError("model violates (s" + std::to_string(i) + " s" + std::to_string(j) +
                             ")^" + std::to_string(m) + " = e");
      }
    }
  }
}

}  // namespace delorder
