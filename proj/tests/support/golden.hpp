#pragma once

#include <array>
#include <string>
#include <vector>

namespace testsupport {

// Published <_Delta ordering of Sym3: L, one-line image, normal form.
inline const std::string kSym3Csv =
    "L,perm,nf\n"
    "1,1 2 3,e\n"
    "2,2 1 3,s1\n"
    "3,1 3 2,s2\n"
    "4,2 3 1,s2s1\n"
    "5,3 1 2,s1s2\n"
    "6,3 2 1,s1s2s1\n";

// Published <_Delta ordering of Sym4.
inline const std::string kSym4Csv =
    "L,perm,nf\n"
    "1,1 2 3 4,e\n"
    "2,2 1 3 4,s1\n"
    "3,1 3 2 4,s2\n"
    "4,2 3 1 4,s2s1\n"
    "5,3 1 2 4,s1s2\n"
    "6,3 2 1 4,s1s2s1\n"
    "7,1 2 4 3,s3\n"
    "8,2 1 4 3,s3s1\n"
    "9,1 3 4 2,s3s2\n"
    "10,2 3 4 1,s3s2s1\n"
    "11,3 1 4 2,s3s1s2\n"
    "12,3 2 4 1,s3s1s2s1\n"
    "13,1 4 2 3,s2s3\n"
    "14,2 4 1 3,s2s3s1\n"
    "15,1 4 3 2,s2s3s2\n"
    "16,2 4 3 1,s2s3s2s1\n"
    "17,3 4 1 2,s2s3s1s2\n"
    "18,3 4 2 1,s2s3s1s2s1\n"
    "19,4 1 2 3,s1s2s3\n"
    "20,4 2 1 3,s1s2s3s1\n"
    "21,4 1 3 2,s1s2s3s2\n"
    "22,4 2 3 1,s1s2s3s2s1\n"
    "23,4 3 1 2,s1s2s3s1s2\n"
    "24,4 3 2 1,s1s2s3s1s2s1\n";

// The worked three-letter comparison example: v < u < w.
inline const std::string kExampleU = "a1a2a3a1a2a2";
inline const std::string kExampleV = "a1a2a3a2a1";
inline const std::string kExampleW = "a3a3";

// Deletion sequences of u, v, w at pivots 3, 2, 1 (blocks as printed).
struct BlockRow {
  const char* word;
  int pivot;
  std::vector<const char*> blocks;
};
inline const std::vector<BlockRow> kBlockTable = {
    {"a1a2a3a1a2a2", 3, {"a1a2", "a1a2a2"}},
    {"a1a2a3a1a2a2", 2, {"a1", "a3a1", "e", "e"}},
    {"a1a2a3a1a2a2", 1, {"e", "a2a3", "a2a2"}},
    {"a1a2a3a2a1", 3, {"a1a2", "a2a1"}},
    {"a1a2a3a2a1", 2, {"a1", "a3", "a1"}},
    {"a1a2a3a2a1", 1, {"e", "a2a3a2", "e"}},
    {"a3a3", 3, {"e", "e", "e"}},
    {"a3a3", 2, {"a3a3"}},
    {"a3a3", 1, {"a3a3"}},
};

// delta_k values for the same three words over a_1..a_3.
struct DeltaRow {
  const char* word;
  int k;
  const char* value;
};
inline const std::vector<DeltaRow> kDeltaTable = {
    {"a1a2a3a1a2a2", 3, "a1a2a3"}, {"a1a2a3a1a2a2", 2, "a1a2a2"}, {"a1a2a3a1a2a2", 1, "e"},
    {"a1a2a3a2a1", 3, "a1a2a3"},  {"a1a2a3a2a1", 2, "a2"},       {"a1a2a3a2a1", 1, "a1"},
    {"a3a3", 3, "a3a3"},          {"a3a3", 2, "e"},              {"a3a3", 1, "e"},
};

// Published alpha examples over a_1..a_3.
inline const std::string kAlphaU = "a1a2a1a3a3a1a2";
inline const std::array<int, 3> kAlphaUValue = {2, 1, 1};
inline const std::string kAlphaV = "a1a1a3a3a1a2";
inline const std::array<int, 3> kAlphaVValue = {2, 0, 2};

// Minimal coset representatives of D5 over X = <s1..s4>, in deletion order.
inline const std::vector<std::string> kD5CosetReps = {
    "e",
    "s5",
    "s4s5",
    "s2s4s5",
    "s1s2s4s5",
    "s3s2s4s5",
    "s1s3s2s4s5",
    "s2s1s3s2s4s5",
    "s4s2s1s3s2s4s5",
    "s5s4s2s1s3s2s4s5",
};

// The duality defect exhibited in D5 and its frozen numbers (|X| = 192).
inline const std::string kD5DefectWord = "s1s2s4s5";
inline constexpr long kD5DefectL = 769;      // 4|X| + 1
inline constexpr long kD5DefectLW0W = 960;   // 5|X|
inline constexpr long kD5DefectSum = 1729;   // 9|X| + 1
inline constexpr long kD5ExpectedSum = 1921; // |W| + 1 = 10|X| + 1

// Coset representative labels over <s1,...,s_{n-1}>: L(c) = l(c)|X| + 1.
inline const std::vector<long> kA3CosetLabels = {1, 7, 13, 19};
inline const std::vector<long> kB3CosetLabels = {1, 9, 17, 25, 33, 41};

}  // namespace testsupport
