#include "delorder/deletion.hpp"

#include <algorithm>
#include <span>

#include "delorder/errors.hpp"

namespace delorder {

namespace {

using Span = std::span<const int>;

int count_in(Span w, int letter) {
  return static_cast<int>(std::count(w.begin(), w.end(), letter));
}

// Index just past the last occurrence of `letter`, or 0 if absent.
std::size_t after_last(Span w, int letter) {
  for (std::size_t i = w.size(); i > 0; --i) {
    if (w[i - 1] == letter) return i;
  }
  return 0;
}

Ordering compare_sizes(std::size_t a, std::size_t b) {
  if (a < b) return Ordering::Less;
  if (a > b) return Ordering::Greater;
  return Ordering::Equal;
}

// Deletion comparison restricted to the alphabet a_1..a_top. Walks the
// a_top blocks of both words in lockstep so nothing is materialized.
Ordering compare_span(Span u, Span v, int top) {
  while (top > 1) {
    int cu = count_in(u, top);
    int cv = count_in(v, top);
    if (cu != cv) return cu < cv ? Ordering::Less : Ordering::Greater;
    if (cu == 0) {
      --top;
      continue;
    }
    std::size_t ui = 0;
    std::size_t vi = 0;
    for (int block = 0; block <= cu; ++block) {
      std::size_t ue = ui;
      while (ue < u.size() && u[ue] != top) ++ue;
      std::size_t ve = vi;
      while (ve < v.size() && v[ve] != top) ++ve;
      Ordering r = compare_span(u.subspan(ui, ue - ui), v.subspan(vi, ve - vi), top - 1);
      if (r != Ordering::Equal) return r;
      ui = ue + 1;
      vi = ve + 1;
    }
    return Ordering::Equal;
  }
  // one-letter alphabet: order by length
  return compare_sizes(u.size(), v.size());
}

void check_pivot(int pivot) {
  if (pivot < 1) throw InputError("letter index must be >= 1, got " + std::to_string(pivot));
}

}  // namespace

DeletionSequence deletion_sequence(const Word& w, int pivot) {
  check_pivot(pivot);
  DeletionSequence seq;
  seq.pivot = pivot;
  std::vector<int> block;
  for (int a : w.letters()) {
    if (a == pivot) {
      seq.blocks.emplace_back(std::move(block));
      block.clear();
    } else {
      block.push_back(a);
    }
  }
  seq.blocks.emplace_back(std::move(block));
  return seq;
}

Word interleave(const DeletionSequence& seq) {
  check_pivot(seq.pivot);
  if (seq.blocks.empty()) throw InputError("deletion sequence must have at least one block");
  std::vector<int> letters;
  for (std::size_t i = 0; i < seq.blocks.size(); ++i) {
    if (i > 0) letters.push_back(seq.pivot);
    const auto& b = seq.blocks[i].letters();
    letters.insert(letters.end(), b.begin(), b.end());
  }
  return Word(std::move(letters));
}

int lambda(const Word& w, int letter) {
  check_pivot(letter);
  return w.count(letter) + 1;
}

Ordering compare_deletion(const Word& u, const Word& v) {
  int top = std::max(u.max_letter(), v.max_letter());
  if (top == 0) return Ordering::Equal;
  return compare_span(u.span(), v.span(), top);
}

Word tau_top(const Word& w, int n) {
  check_pivot(n);
  Span s = w.span();
  std::size_t start = after_last(s, n);
  return Word(std::vector<int>(s.begin() + static_cast<std::ptrdiff_t>(start), s.end()));
}

Word delta(const Word& w, int k, int n) {
  check_pivot(k);
  if (k > n) throw InputError("delta: letter exceeds alphabet size");
  Span rest = w.span();
  for (int i = n; i > k; --i) {
    rest = rest.subspan(after_last(rest, i));
  }
  std::size_t cut = after_last(rest, k);
  return Word(std::vector<int>(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(cut)));
}

std::vector<int> alpha(const Word& w, int n) {
  if (n < 0) throw InputError("alpha: alphabet size must be >= 0");
  if (w.max_letter() > n) throw InputError("alpha: word uses letters outside a_1..a_n");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  std::vector<int> reversed(w.letters().rbegin(), w.letters().rend());
  Span r{reversed};
  for (int k = n; k >= 1; --k) {
    out.push_back(count_in(r, k));
    r = r.subspan(after_last(r, k));
  }
  return out;
}

bool is_subword(const Word& u, const Word& v) {
  std::size_t i = 0;
  const auto& a = u.letters();
  for (int b : v.letters()) {
    if (i < a.size() && a[i] == b) ++i;
  }
  return i == a.size();
}

Ordering compare_lex(const Word& u, const Word& v, LexDirection direction) {
  const auto& a = u.letters();
  const auto& b = v.letters();
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int x = direction == LexDirection::LeftToRight ? a[i] : a[a.size() - 1 - i];
    int y = direction == LexDirection::LeftToRight ? b[i] : b[b.size() - 1 - i];
    if (x != y) return x < y ? Ordering::Less : Ordering::Greater;
  }
  return compare_sizes(a.size(), b.size());
}

}  // namespace delorder
