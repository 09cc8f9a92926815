#include "delorder/coxeter_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "delorder/classify.hpp"
#include "delorder/errors.hpp"

namespace delorder {

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, std::shared_ptr<const GroupModel> model,
                             bool finite, std::string label)
    : matrix_(std::move(matrix)), model_(std::move(model)), finite_(finite),
      label_(std::move(label)) {}

CoxeterSystem CoxeterSystem::from_matrix(CoxeterMatrix matrix, std::string label) {
  matrix.validate();
  auto model = make_model(matrix);
  bool finite = matrix_finite(matrix);
  if (label.empty()) label = matrix_type_name(matrix);
  return CoxeterSystem(std::move(matrix), std::move(model), finite, std::move(label));
}

namespace {

CoxeterMatrix path_matrix(int rank, int first_edge) {
  CoxeterMatrix m(rank);
  for (int i = 1; i < rank; ++i) m.set_m(i, i + 1, i == 1 ? first_edge : 3);
  return m;
}

CoxeterMatrix fork_matrix(int rank) {
  // s_1 and s_3 hang off s_2; the chain continues s_2 - s_4 - ... - s_rank
  CoxeterMatrix m(rank);
  m.set_m(1, 2, 3);
  m.set_m(3, 2, 3);
  for (int i = 4; i <= rank; ++i) m.set_m(i == 4 ? 2 : i - 1, i, 3);
  return m;
}

}  // namespace

CoxeterSystem CoxeterSystem::preset(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'B' || name[0] == 'D')) {
    bool digits = std::all_of(name.begin() + 1, name.end(),
                              [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (digits) {
      int n = std::stoi(name.substr(1));
      if (name[0] == 'A' && n >= 1 && n <= 5) {
        return from_matrix(path_matrix(n, 3), name);
      }
      if (name[0] == 'B' && n >= 2 && n <= 4) {
        return from_matrix(path_matrix(n, 4), name);
      }
      if (name[0] == 'D' && (n == 4 || n == 5)) {
        return from_matrix(fork_matrix(n), name);
      }
    }
  }
  if (name == "I2inf" || name == "I2(inf)") {
    CoxeterMatrix m(2);
    m.set_m(1, 2, 0);
    return from_matrix(std::move(m), "I2(inf)");
  }
  if (name.rfind("I2(", 0) == 0 && name.back() == ')') {
    std::string inner = name.substr(3, name.size() - 4);
    bool digits = !inner.empty() && std::all_of(inner.begin(), inner.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
    if (digits) {
      int mm = std::stoi(inner);
      if (mm >= 3) {
        CoxeterMatrix m(2);
        m.set_m(1, 2, mm);
        return from_matrix(std::move(m), name);
      }
    }
  }
  if (name == "Atilde2") {
    CoxeterMatrix m(3);
    m.set_m(1, 2, 3);
    m.set_m(2, 3, 3);
    m.set_m(1, 3, 3);
    return from_matrix(std::move(m), name);
  }
  if (name == "U3") {
    CoxeterMatrix m(3);
    m.set_m(1, 2, 0);
    m.set_m(2, 3, 0);
    m.set_m(1, 3, 0);
    return from_matrix(std::move(m), name);
  }
  std::string known;
  for (const auto& p : preset_names()) {
    if (!known.empty()) known += ", ";
    known += p;
  }
  throw InputError("unknown preset \"" + name + "\" (known: " + known + ")");
}

CoxeterSystem CoxeterSystem::from_spec(const std::string& name_or_path) {
  std::ifstream in(name_or_path);
  if (in.good()) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_matrix(CoxeterMatrix::parse_json(buf.str()));
  }
  return preset(name_or_path);
}

Element CoxeterSystem::from_word(const Word& w) const {
  Element g = identity();
  for (int s : w.letters()) {
    if (s > rank()) {
      throw InputError("word uses generator s" + std::to_string(s) + " outside rank " +
                       std::to_string(rank()));
    }
    g = apply(g, s);
  }
  return g;
}

Element CoxeterSystem::multiply(const Element& g, const Element& h) const {
  Element out = g;
  Word w = any_reduced_word(h);
  for (int s : w.letters()) out = apply(out, s);
  return out;
}

Element CoxeterSystem::inverse(const Element& g) const {
  return from_word(any_reduced_word(g).reversed());
}

std::vector<int> CoxeterSystem::right_descents(const Element& g) const {
  std::vector<int> out;
  int len = length(g);
  for (int s = 1; s <= rank(); ++s) {
    if (length(apply(g, s)) < len) out.push_back(s);
  }
  return out;
}

Word CoxeterSystem::any_reduced_word(const Element& g) const {
  std::vector<int> letters;
  Element cur = g;
  int len = length(cur);
  while (len > 0) {
    bool stepped = false;
    for (int s = 1; s <= rank(); ++s) {
      Element next = apply(cur, s);
      if (length(next) < len) {
        letters.push_back(s);
        cur = std::move(next);
        --len;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw InvariantError("element of positive length has no right descent");
  }
  std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters));
}

bool CoxeterSystem::parabolic_finite(const std::vector<int>& gens) const {
  for (int g : gens) {
    if (g < 1 || g > rank()) {
      throw InputError("parabolic subset contains generator outside 1.." + std::to_string(rank()));
    }
  }
  if (gens.empty()) return true;
  return matrix_finite(matrix_, gens);
}

std::vector<Element> CoxeterSystem::enumerate(std::size_t cap) const {
  if (!finite_) throw ResourceError("cannot enumerate an infinite group");
  std::vector<Element> out;
  std::unordered_map<Element, bool, ElementHash> seen;
  std::deque<Element> queue;
  Element e = identity();
  seen.emplace(e, true);
  queue.push_back(e);
  while (!queue.empty()) {
    Element g = std::move(queue.front());
    queue.pop_front();
    out.push_back(g);
    for (int s = 1; s <= rank(); ++s) {
      Element h = apply(g, s);
      if (seen.emplace(h, true).second) {
        queue.push_back(std::move(h));
        if (seen.size() > cap) {
          throw ResourceError("enumeration cap (" + std::to_string(cap) + ") exceeded");
        }
      }
    }
  }
  return out;
}

namespace {

void collect_reduced_words(const CoxeterSystem& sys, const Element& g,
                           std::map<Element, std::vector<Word>>& memo) {
  if (memo.contains(g)) return;
  if (sys.length(g) == 0) {
    memo.emplace(g, std::vector<Word>{Word{}});
    return;
  }
  std::vector<Word> words;
  for (int s : sys.right_descents(g)) {
    Element h = sys.apply(g, s);
    collect_reduced_words(sys, h, memo);
    for (const Word& w : memo.at(h)) {
      Word extended = w;
      extended.push_back(s);
      words.push_back(std::move(extended));
    }
  }
  memo.emplace(g, std::move(words));
}

}  // namespace

std::vector<Word> CoxeterSystem::reduced_words(const Element& g, int length_cap) const {
  if (length(g) > length_cap) {
    throw ResourceError("reduced word enumeration capped at length " +
                        std::to_string(length_cap));
  }
  std::map<Element, std::vector<Word>> memo;
  collect_reduced_words(*this, g, memo);
  return memo.at(g);
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (int n = 1; n <= 5; ++n) out.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 4; ++n) out.push_back("B" + std::to_string(n));
  out.push_back("D4");
  out.push_back("D5");
  for (int m = 3; m <= 12; ++m) out.push_back("I2(" + std::to_string(m) + ")");
  out.push_back("I2inf");
  out.push_back("Atilde2");
  out.push_back("U3");
  return out;
}

}  // namespace delorder
