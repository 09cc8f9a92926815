#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "delorder/classify.hpp"
#include "delorder/coxeter_matrix.hpp"
#include "delorder/coxeter_system.hpp"
#include "delorder/errors.hpp"
#include "delorder/normal_form.hpp"
#include "support/oracles.hpp"

using delorder::classify_component;
using delorder::CoxeterMatrix;
using delorder::CoxeterSystem;
using delorder::DiagramComponent;
using delorder::diagram_components;
using delorder::Element;
using delorder::Family;
using delorder::InputError;
using delorder::InvariantError;
using delorder::matrix_finite;
using delorder::matrix_type_name;
using delorder::ResourceError;
using delorder::Word;

namespace {

CoxeterMatrix path(const std::vector<int>& labels) {
  CoxeterMatrix m(static_cast<int>(labels.size()) + 1);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    m.set_m(static_cast<int>(i) + 1, static_cast<int>(i) + 2, labels[i]);
  }
  return m;
}

CoxeterMatrix e_series(int rank) {
  // path 1-3-4-5-...-rank with 2 hanging off 4
  CoxeterMatrix m(rank);
  m.set_m(1, 3, 3);
  m.set_m(3, 4, 3);
  for (int v = 4; v < rank; ++v) m.set_m(v, v + 1, 3);
  m.set_m(2, 4, 3);
  return m;
}

}  // namespace

TEST_CASE("coxeter matrix basics") {
  CoxeterMatrix m(3);
  CHECK(m.rank() == 3);
  CHECK(m.m(1, 2) == 2);
  CHECK(m.m(2, 2) == 1);
  m.set_m(1, 2, 4);
  CHECK(m.m(2, 1) == 4);
  CHECK_NOTHROW(m.validate());

  CoxeterMatrix bad(2);
  bad.set_m(1, 2, 1);
  CHECK_THROWS_AS(bad.validate(), InputError);
  CHECK_THROWS_AS(m.m(0, 1), InputError);
  CHECK_THROWS_AS(m.m(1, 4), InputError);
}

TEST_CASE("coxeter matrix json round trip") {
  CoxeterMatrix m(3);
  m.set_m(1, 2, 3);
  m.set_m(2, 3, 0);
  CoxeterMatrix back = CoxeterMatrix::parse_json(m.to_json());
  CHECK(back == m);
  CHECK_THROWS_AS(CoxeterMatrix::parse_json("{\"rank\": 2}"), InputError);
  CHECK_THROWS_AS(CoxeterMatrix::parse_json("not json"), InputError);
  CoxeterMatrix parsed =
      CoxeterMatrix::parse_json("{\"rank\": 2, \"m\": [[1, 5], [5, 1]]}");
  CHECK(parsed.m(1, 2) == 5);
}

TEST_CASE("matrix permutation validates its argument") {
  CoxeterMatrix m(3);
  m.set_m(1, 2, 4);
  CoxeterMatrix p = m.permuted({3, 2, 1});
  CHECK(p.m(3, 2) == 4);
  CHECK(p.m(1, 2) == 2);
  CHECK_THROWS_AS(m.permuted({1, 1, 2}), InputError);
  CHECK_THROWS_AS(m.permuted({1, 2}), InputError);
  CHECK_THROWS_AS(m.permuted({1, 2, 4}), InputError);
}

TEST_CASE("diagram components split at commuting bonds") {
  CoxeterMatrix m(4);
  m.set_m(1, 3, 3);
  m.set_m(2, 4, 5);
  auto comps = diagram_components(m);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{1, 3});
  CHECK(comps[1] == std::vector<int>{2, 4});
  CHECK(matrix_type_name(m) == "A2 x I2(5)");
}

TEST_CASE("path classification from either end") {
  CHECK(classify_component(path({3, 3, 3}), {1, 2, 3, 4}).name() == "A4");
  CHECK(classify_component(path({4, 3, 3}), {1, 2, 3, 4}).name() == "B4");
  CHECK(classify_component(path({3, 3, 4}), {1, 2, 3, 4}).name() == "B4");
  CHECK(classify_component(path({3, 4, 3}), {1, 2, 3, 4}).name() == "F4");
  CHECK(classify_component(path({5, 3}), {1, 2, 3}).name() == "H3");
  CHECK(classify_component(path({3, 5}), {1, 2, 3}).name() == "H3");
  CHECK(classify_component(path({5, 3, 3}), {1, 2, 3, 4}).name() == "H4");
  CHECK(classify_component(path({3, 3, 5}), {1, 2, 3, 4}).name() == "H4");
  CHECK(classify_component(path({6, 3}), {1, 2, 3}).name() == "rank-3 unclassified");
  CHECK(classify_component(path({4, 4}), {1, 2, 3}).name() == "rank-3 unclassified");
}

TEST_CASE("rank one and two classification") {
  CoxeterMatrix one(1);
  CHECK(classify_component(one, {1}).name() == "A1");
  CHECK(classify_component(path({3}), {1, 2}).name() == "A2");
  CHECK(classify_component(path({4}), {1, 2}).name() == "B2");
  CHECK(classify_component(path({7}), {1, 2}).name() == "I2(7)");
  DiagramComponent inf = classify_component(path({0}), {1, 2});
  CHECK(inf.name() == "I2(inf)");
  CHECK_FALSE(inf.finite());
}

TEST_CASE("fork classification") {
  CHECK(matrix_type_name(CoxeterSystem::preset("D4").matrix()) == "D4");
  CHECK(matrix_type_name(CoxeterSystem::preset("D5").matrix()) == "D5");
  CHECK(classify_component(e_series(6), {1, 2, 3, 4, 5, 6}).name() == "E6");
  CHECK(classify_component(e_series(7), {1, 2, 3, 4, 5, 6, 7}).name() == "E7");
  CHECK(classify_component(e_series(8), {1, 2, 3, 4, 5, 6, 7, 8}).name() == "E8");
  CHECK(matrix_finite(e_series(8)));

  DiagramComponent d5 = classify_component(CoxeterSystem::preset("D5").matrix(), {1, 2, 3, 4, 5});
  CHECK(d5.family == Family::D);
  CHECK(d5.gens == std::vector<int>{1, 3, 2, 4, 5});

  // star with three arms of length 2 and a 4th vertex on one arm: not catalogued
  CoxeterMatrix star(7);
  star.set_m(1, 7, 3);
  star.set_m(2, 7, 3);
  star.set_m(3, 7, 3);
  star.set_m(1, 4, 3);
  star.set_m(2, 5, 3);
  star.set_m(3, 6, 3);
  CHECK(classify_component(star, {1, 2, 3, 4, 5, 6, 7}).name() == "rank-7 unclassified");
}

TEST_CASE("classification is stable under relabelling") {
  std::vector<std::vector<int>> perms = {
      {1, 2, 3, 4, 5, 6}, {6, 5, 4, 3, 2, 1}, {2, 4, 6, 1, 3, 5}, {3, 1, 4, 6, 2, 5}};
  for (const auto& perm : perms) {
    CHECK(matrix_type_name(e_series(6).permuted(perm)) == "E6");
  }
  CHECK(matrix_type_name(path({4, 3, 3}).permuted({4, 2, 3, 1})) == "B4");
  CHECK(matrix_type_name(CoxeterSystem::preset("D5").matrix().permuted({5, 4, 3, 2, 1})) == "D5");
}

TEST_CASE("cycles and infinite bonds are unclassified") {
  CHECK(matrix_type_name(CoxeterSystem::preset("Atilde2").matrix()) == "rank-3 unclassified");
  CHECK(matrix_type_name(CoxeterSystem::preset("U3").matrix()) == "rank-3 unclassified");
  CHECK_FALSE(CoxeterSystem::preset("Atilde2").is_finite());
  CHECK_FALSE(CoxeterSystem::preset("U3").is_finite());
}

TEST_CASE("preset systems enumerate to the published group orders") {
  const std::vector<std::pair<const char*, std::size_t>> sizes = {
      {"A1", 2},     {"A2", 6},     {"A3", 24},  {"A4", 120},  {"B2", 8},
      {"B3", 48},    {"D4", 192},   {"I2(7)", 14}, {"I2(3)", 6}, {"I2(12)", 24},
  };
  for (const auto& [name, size] : sizes) {
    CAPTURE(name);
    CHECK(CoxeterSystem::preset(name).enumerate().size() == size);
  }
  CHECK_THROWS_AS(CoxeterSystem::preset("I2inf").enumerate(), ResourceError);
  CHECK_THROWS_AS(CoxeterSystem::preset("A4").enumerate(50), ResourceError);
  CHECK_THROWS_AS(CoxeterSystem::preset("nosuch"), InputError);
  CHECK_THROWS_AS(CoxeterSystem::preset("I2(2)"), InputError);
}

TEST_CASE("model lengths agree with breadth-first distance") {
  for (const char* name : {"A3", "B2", "B3", "D4", "I2(7)", "Atilde2"}) {
    CAPTURE(name);
    CoxeterSystem sys = CoxeterSystem::preset(name);
    auto dist = testsupport::bfs_lengths_capped(sys, 300);
    for (const auto& [g, d] : dist) {
      CHECK(sys.length(g) == d);
    }
  }
}

TEST_CASE("from_word and arithmetic") {
  CoxeterSystem a3 = CoxeterSystem::preset("A3");
  Element g = a3.from_word(Word::parse("s1s2s3"));
  CHECK(a3.length(g) == 3);
  CHECK_THROWS_AS(a3.from_word(Word::parse("s4")), InputError);
  CHECK(a3.multiply(g, a3.inverse(g)) == a3.identity());
  CHECK(a3.inverse(a3.identity()) == a3.identity());

  for (const char* wu : {"e", "s1", "s2s3", "s1s2s1", "s3s2s1s2"}) {
    for (const char* wv : {"e", "s3", "s1s3", "s2s1s2"}) {
      Element u = a3.from_word(Word::parse(wu));
      Element v = a3.from_word(Word::parse(wv));
      // (uv)^-1 = v^-1 u^-1
      CHECK(a3.inverse(a3.multiply(u, v)) ==
            a3.multiply(a3.inverse(v), a3.inverse(u)));
    }
  }
}

TEST_CASE("right descents match the length drop") {
  CoxeterSystem a2 = CoxeterSystem::preset("A2");
  CHECK(a2.right_descents(a2.from_word(Word::parse("s1s2"))) == std::vector<int>{2});
  CHECK(a2.right_descents(a2.from_word(Word::parse("s1s2s1"))) == std::vector<int>{1, 2});
  CHECK(a2.right_descents(a2.identity()).empty());
}

TEST_CASE("reduced word enumeration cross-checked against brute force") {
  CoxeterSystem a3 = CoxeterSystem::preset("A3");
  Element w0 = a3.from_word(Word::parse("s1s2s3s1s2s1"));
  auto words = a3.reduced_words(w0);
  CHECK(words.size() == 16);
  auto brute = testsupport::brute_reduced_words(a3, w0);
  std::set<Word> lhs(words.begin(), words.end());
  std::set<Word> rhs(brute.begin(), brute.end());
  CHECK(lhs == rhs);

  CoxeterSystem a2 = CoxeterSystem::preset("A2");
  Element rot = a2.from_word(Word::parse("s1s2s1"));
  auto two = a2.reduced_words(rot);
  REQUIRE(two.size() == 2);
  std::set<Word> both(two.begin(), two.end());
  CHECK(both == std::set<Word>{Word::parse("a1a2a1"), Word::parse("a2a1a2")});

  CHECK_THROWS_AS(a3.reduced_words(w0, 5), ResourceError);
}

TEST_CASE("parabolic finiteness") {
  CoxeterSystem at2 = CoxeterSystem::preset("Atilde2");
  CHECK(at2.parabolic_finite({1, 2}));
  CHECK(at2.parabolic_finite({1}));
  CHECK(at2.parabolic_finite({}));
  CHECK_FALSE(at2.parabolic_finite({1, 2, 3}));
  CHECK_THROWS_AS(at2.parabolic_finite({0}), InputError);
  CHECK_THROWS_AS(at2.parabolic_finite({4}), InputError);

  CoxeterSystem u3 = CoxeterSystem::preset("U3");
  CHECK_FALSE(u3.parabolic_finite({1, 2}));
  CHECK(u3.parabolic_finite({3}));
}

TEST_CASE("from_spec loads matrix files and falls back to presets") {
  std::string json = CoxeterSystem::preset("B2").matrix().to_json();
  std::string file = "test_matrix_b2.json";
  {
    std::ofstream f(file);
    f << json;
  }
  CoxeterSystem sys = CoxeterSystem::from_spec(file);
  CHECK(sys.rank() == 2);
  CHECK(sys.label() == "B2");
  CHECK(sys.enumerate().size() == 8);
  std::remove(file.c_str());

  CHECK(CoxeterSystem::from_spec("A2").label() == "A2");
  CHECK_THROWS_AS(CoxeterSystem::from_spec("no_such_file.json"), InputError);
}

TEST_CASE("preset list is wired into the error message") {
  auto names = delorder::preset_names();
  CHECK(std::find(names.begin(), names.end(), "Atilde2") != names.end());
  CHECK(std::find(names.begin(), names.end(), "I2(12)") != names.end());
}

TEST_CASE("generic rewriting model drives unclassified systems") {
  CoxeterSystem at2 = CoxeterSystem::preset("Atilde2");
  CHECK(std::string(at2.model().name()) == "tits-rewriting");
  Element g = at2.from_word(Word::parse("s1s2s3s1"));
  CHECK(at2.length(g) == 4);
  CHECK(at2.multiply(g, at2.inverse(g)) == at2.identity());

  // E6 is finite but runs on the generic model too
  CoxeterSystem e6 = CoxeterSystem::from_matrix(e_series(6));
  CHECK(std::string(e6.model().name()) == "tits-rewriting");
  CHECK(e6.label() == "E6");
  Element h = e6.from_word(Word::parse("s1s3s4s2"));
  CHECK(e6.length(h) == 4);
  CHECK(e6.inverse(h) == e6.from_word(Word::parse("s2s4s3s1")));
}
