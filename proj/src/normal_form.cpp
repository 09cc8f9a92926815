#include "delorder/normal_form.hpp"

#include <algorithm>

#include "delorder/deletion.hpp"
#include "delorder/errors.hpp"

namespace delorder {

Word nf_rlex(const CoxeterSystem& sys, const Element& g) {
  std::vector<int> letters;
  Element cur = g;
  int len = sys.length(cur);
  while (len > 0) {
    bool stepped = false;
    for (int s = 1; s <= sys.rank(); ++s) {
      Element next = sys.apply(cur, s);
      if (sys.length(next) < len) {
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

Word nf_delta_oracle(const CoxeterSystem& sys, const Element& g, int length_cap) {
  std::vector<Word> words = sys.reduced_words(g, length_cap);
  const Word* best = &words.front();
  for (const Word& w : words) {
    if (compare_deletion(w, *best) == Ordering::Less) best = &w;
  }
  return *best;
}

Ordering compare_elements(const CoxeterSystem& sys, const Element& g, const Element& h) {
  return compare_deletion(nf_rlex(sys, g), nf_rlex(sys, h));
}

CosetDecomposition coset_decompose(const CoxeterSystem& sys, const Element& g) {
  Word nf = nf_rlex(sys, g);
  CosetDecomposition out;
  out.factors.reserve(static_cast<std::size_t>(sys.rank()));
  std::span<const int> rest = nf.span();
  for (int i = sys.rank(); i >= 1; --i) {
    std::size_t cut = 0;
    for (std::size_t p = rest.size(); p > 0; --p) {
      if (rest[p - 1] == i) {
        cut = p;
        break;
      }
    }
    out.factors.push_back(
        sys.from_word(Word(std::vector<int>(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(cut)))));
    rest = rest.subspan(cut);
  }
  if (!rest.empty()) throw InvariantError("coset decomposition left letters unconsumed");
  return out;
}

}  // namespace delorder
