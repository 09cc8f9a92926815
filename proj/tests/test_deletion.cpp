#include <doctest.h>

#include <vector>

#include "delorder/deletion.hpp"
#include "delorder/ordering.hpp"
#include "delorder/word.hpp"
#include "support/generators.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using delorder::compare_deletion;
using delorder::compare_lex;
using delorder::delta;
using delorder::deletion_sequence;
using delorder::DeletionSequence;
using delorder::interleave;
using delorder::lambda;
using delorder::LexDirection;
using delorder::Ordering;
using delorder::tau_top;
using delorder::Word;

TEST_CASE("deletion sequences of the worked example reproduce the published blocks") {
  for (const auto& row : testsupport::kBlockTable) {
    CAPTURE(row.word);
    CAPTURE(row.pivot);
    DeletionSequence seq = deletion_sequence(Word::parse(row.word), row.pivot);
    REQUIRE(seq.blocks.size() == row.blocks.size());
    for (std::size_t i = 0; i < row.blocks.size(); ++i) {
      CHECK(seq.blocks[i] == Word::parse(row.blocks[i]));
    }
    CHECK(lambda(Word::parse(row.word), row.pivot) == static_cast<int>(row.blocks.size()));
    CHECK(interleave(seq) == Word::parse(row.word));
  }
}

TEST_CASE("deletion sequence edge cases") {
  DeletionSequence empty = deletion_sequence(Word(), 2);
  REQUIRE(empty.blocks.size() == 1);
  CHECK(empty.blocks[0].empty());
  CHECK(interleave(empty) == Word());
  CHECK(lambda(Word(), 3) == 1);

  DeletionSequence all = deletion_sequence(Word({2, 2, 2}), 2);
  CHECK(all.blocks.size() == 4);
}

TEST_CASE("interleave inverts deletion_sequence on random words") {
  testsupport::WordGen gen(42, 4, 16);
  for (int i = 0; i < 2000; ++i) {
    Word w = gen.next();
    for (int pivot = 1; pivot <= 4; ++pivot) {
      CHECK(interleave(deletion_sequence(w, pivot)) == w);
    }
  }
}

TEST_CASE("delta table of the worked example") {
  for (const auto& row : testsupport::kDeltaTable) {
    CAPTURE(row.word);
    CAPTURE(row.k);
    CHECK(delta(Word::parse(row.word), row.k, 3) == Word::parse(row.value));
  }
}

TEST_CASE("delta and tau split the word at the top letter") {
  testsupport::WordGen gen(43, 4, 16);
  for (int i = 0; i < 2000; ++i) {
    Word w = gen.next();
    CHECK(delta(w, 4, 4).concat(tau_top(w, 4)) == w);
    CHECK(tau_top(w, 4).count(4) == 0);
    Word head = delta(w, 4, 4);
    if (!head.empty()) CHECK(head[head.size() - 1] == 4);
    // stripping delta_4..delta_1 consumes the whole word
    Word rest = w;
    int consumed = 0;
    for (int k = 4; k >= 1; --k) consumed += delta(w, k, 4).size();
    CHECK(consumed == w.size());
  }
}

TEST_CASE("comparison verdicts of the worked example") {
  Word u = Word::parse(testsupport::kExampleU);
  Word v = Word::parse(testsupport::kExampleV);
  Word w = Word::parse(testsupport::kExampleW);
  CHECK(compare_deletion(v, u) == Ordering::Less);
  CHECK(compare_deletion(u, w) == Ordering::Less);
  CHECK(compare_deletion(v, w) == Ordering::Less);
  CHECK(compare_deletion(u, v) == Ordering::Greater);
  CHECK(compare_deletion(u, u) == Ordering::Equal);
  CHECK(testsupport::reference_compare(v, u, 3) == Ordering::Less);
  CHECK(testsupport::reference_compare(u, w, 3) == Ordering::Less);
}

TEST_CASE("published alpha examples") {
  std::vector<int> au = delorder::alpha(Word::parse(testsupport::kAlphaU), 3);
  std::vector<int> av = delorder::alpha(Word::parse(testsupport::kAlphaV), 3);
  CHECK(au == std::vector<int>(testsupport::kAlphaUValue.begin(), testsupport::kAlphaUValue.end()));
  CHECK(av == std::vector<int>(testsupport::kAlphaVValue.begin(), testsupport::kAlphaVValue.end()));
  CHECK(delorder::alpha(Word(), 3) == std::vector<int>{0, 0, 0});
}

TEST_CASE("one-letter alphabet compares by length") {
  CHECK(compare_deletion(Word(), Word({1})) == Ordering::Less);
  CHECK(compare_deletion(Word({1, 1, 1}), Word({1, 1})) == Ordering::Greater);
  CHECK(compare_deletion(Word({1, 1}), Word({1, 1})) == Ordering::Equal);
}

TEST_CASE("fewer top letters always wins") {
  // a3a3 has three blocks at level 3; any word with fewer a3s is below it
  CHECK(compare_deletion(Word::parse("a1a1a1a1a1a3"), Word::parse("a3a3")) == Ordering::Less);
  CHECK(compare_deletion(Word::parse("a2a2a2"), Word::parse("a3")) == Ordering::Less);
}

TEST_CASE("is_subword") {
  using delorder::is_subword;
  CHECK(is_subword(Word(), Word({1, 2})));
  CHECK(is_subword(Word({1, 2}), Word({1, 3, 2})));
  CHECK(is_subword(Word({1, 2}), Word({1, 2})));
  CHECK_FALSE(is_subword(Word({2, 1}), Word({1, 3, 2})));
  CHECK_FALSE(is_subword(Word({1, 1}), Word({1})));
}

TEST_CASE("plain lexicographic comparison in both directions") {
  Word a = Word::parse("a1a2");
  Word b = Word::parse("a2a1");
  CHECK(compare_lex(a, b, LexDirection::LeftToRight) == Ordering::Less);
  CHECK(compare_lex(a, b, LexDirection::RightToLeft) == Ordering::Greater);
  CHECK(compare_lex(a, a, LexDirection::LeftToRight) == Ordering::Equal);
  CHECK(compare_lex(Word::parse("a1"), Word::parse("a1a1"), LexDirection::LeftToRight) ==
        Ordering::Less);
  CHECK(compare_lex(Word::parse("a1"), Word::parse("a1a1"), LexDirection::RightToLeft) ==
        Ordering::Less);
}
