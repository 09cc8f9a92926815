#pragma once

#include <vector>

#include "delorder/ordering.hpp"
#include "delorder/word.hpp"

namespace delorder {

/// The a_j deletion sequence of w: the maximal a_j-free blocks b_0,...,b_l
/// left by cutting w at every occurrence of a_j, so that
/// w = b_0 a_j b_1 a_j ... a_j b_l. The empty word has the single block e.
struct DeletionSequence {
  int pivot = 1;
  std::vector<Word> blocks;
};

DeletionSequence deletion_sequence(const Word& w, int pivot);

/// Inverse of deletion_sequence: blocks rejoined with the pivot letter.
Word interleave(const DeletionSequence& seq);

/// Block count of the a_j deletion sequence: occurrences of a_j plus one.
int lambda(const Word& w, int letter);

/// The deletion order on words, also known as the basic wreath order.
/// Comparing at the top letter a_n: fewer occurrences of a_n wins; on equal
/// counts the deletion-sequence blocks are compared pairwise left to right
/// one alphabet level down; over a one-letter alphabet words compare by
/// length. Total order: Equal comes back only for identical words.
Ordering compare_deletion(const Word& u, const Word& v);

/// delta(w, n, n) is the prefix of w through its last a_n (empty when a_n is
/// absent); tau_top(w, n) is the suffix after the last a_n, so that
/// w == delta(w, n, n).concat(tau_top(w, n)). For k < n, delta(w, k, n)
/// applies the same cut to the residue left after stripping
/// delta(w, n, n), ..., delta(w, k+1, n) off the front.
Word delta(const Word& w, int k, int n);
Word tau_top(const Word& w, int n);

/// alpha(w) over the alphabet a_1..a_n: n entries; entry 1 counts the
/// occurrences of a_n in w, entry 2 the occurrences of a_{n-1} before the
/// first a_n, entry 3 the occurrences of a_{n-2} before the first a_{n-1}
/// that precedes the first a_n, and so on. Compared lexicographically.
std::vector<int> alpha(const Word& w, int n);

/// True iff u embeds in v as a (not necessarily contiguous) subsequence.
bool is_subword(const Word& u, const Word& v);

enum class LexDirection { LeftToRight, RightToLeft };

/// Plain lexicographic comparison by letter index, read in the given
/// direction; when one word is a prefix (suffix, for right-to-left) of the
/// other, the shorter word is smaller.
Ordering compare_lex(const Word& u, const Word& v, LexDirection direction);

}  // namespace delorder
