#include <doctest.h>

#include <vector>

#include "delorder/coxeter_system.hpp"
#include "delorder/duality.hpp"
#include "delorder/errors.hpp"
#include "delorder/normal_form.hpp"
#include "support/golden.hpp"

using delorder::CoxeterSystem;
using delorder::duality_report;
using delorder::DualityReport;
using delorder::Element;
using delorder::LabelStrategy;
using delorder::longest_element;
using delorder::minimal_coset_reps;
using delorder::nf_rlex;
using delorder::ResourceError;
using delorder::Word;

TEST_CASE("longest elements") {
  CoxeterSystem a2 = CoxeterSystem::preset("A2");
  CHECK(nf_rlex(a2, longest_element(a2)).str('s') == "s1s2s1");

  CoxeterSystem a1 = CoxeterSystem::preset("A1");
  CHECK(nf_rlex(a1, longest_element(a1)).str('s') == "s1");

  CoxeterSystem b2 = CoxeterSystem::preset("B2");
  Element w0 = longest_element(b2);
  CHECK(b2.length(w0) == 4);
  CHECK(b2.multiply(w0, w0) == b2.identity());

  CHECK_THROWS_AS(longest_element(CoxeterSystem::preset("I2inf")), ResourceError);
}

TEST_CASE("minimal coset representatives of Sym4") {
  CoxeterSystem sys = CoxeterSystem::preset("A3");
  auto reps = minimal_coset_reps(sys, {1, 2});
  REQUIRE(reps.size() == 4);
  std::vector<std::string> names;
  for (const Element& c : reps) names.push_back(nf_rlex(sys, c).str('s'));
  CHECK(names == std::vector<std::string>{"e", "s3", "s2s3", "s1s2s3"});
  for (std::size_t i = 0; i < reps.size(); ++i) {
    CHECK(sys.length(reps[i]) == static_cast<int>(i));
  }
}

TEST_CASE("minimal coset representatives in rank one") {
  CoxeterSystem a1 = CoxeterSystem::preset("A1");
  auto reps = minimal_coset_reps(a1, {});
  REQUIRE(reps.size() == 2);
  CHECK(nf_rlex(a1, reps[0]).str('s') == "e");
  CHECK(nf_rlex(a1, reps[1]).str('s') == "s1");
}

TEST_CASE("duality holds for the published families") {
  for (const char* name : {"A2", "A3", "B2", "B3", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)",
                           "I2(8)", "I2(9)", "I2(10)"}) {
    CAPTURE(name);
    DualityReport rep = duality_report(CoxeterSystem::preset(name));
    CHECK(rep.holds);
    CHECK(rep.defects.empty());
  }
}

TEST_CASE("Sym3 duality arithmetic") {
  CoxeterSystem sys = CoxeterSystem::preset("A2");
  auto order = delorder::elements_in_deletion_order(sys);
  Element w0 = longest_element(sys);
  auto label = [&](const Element& g) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (order[i] == g) return static_cast<long>(i) + 1;
    }
    return -1L;
  };
  Element s1 = sys.from_word(Word::parse("s1"));
  CHECK(label(s1) == 2);
  CHECK(label(sys.multiply(w0, s1)) == 5);
}

TEST_CASE("graph and sort strategies give identical duality reports") {
  for (const char* name : {"A3", "B2"}) {
    CAPTURE(name);
    CoxeterSystem sys = CoxeterSystem::preset(name);
    DualityReport a = duality_report(sys, LabelStrategy::Graph);
    DualityReport b = duality_report(sys, LabelStrategy::Sort);
    CHECK(a.holds == b.holds);
    CHECK(a.size == b.size);
    CHECK(a.longest_nf == b.longest_nf);
    REQUIRE(a.coset_reps.size() == b.coset_reps.size());
    for (std::size_t i = 0; i < a.coset_reps.size(); ++i) {
      CHECK(a.coset_reps[i].nf == b.coset_reps[i].nf);
      CHECK(a.coset_reps[i].label == b.coset_reps[i].label);
    }
  }
}

TEST_CASE("parallel defect scan matches the sequential one") {
  CoxeterSystem sys = CoxeterSystem::preset("B3");
  DualityReport seq = duality_report(sys, LabelStrategy::Graph, 1);
  DualityReport par = duality_report(sys, LabelStrategy::Graph, 4);
  CHECK(seq.holds == par.holds);
  CHECK(seq.defects.size() == par.defects.size());
}

TEST_CASE("coset representative labels follow the arithmetic progression") {
  DualityReport a3 = duality_report(CoxeterSystem::preset("A3"));
  std::vector<long> a3_labels;
  for (const auto& c : a3.coset_reps) a3_labels.push_back(c.label);
  CHECK(a3_labels == testsupport::kA3CosetLabels);

  DualityReport b3 = duality_report(CoxeterSystem::preset("B3"));
  std::vector<long> b3_labels;
  for (const auto& c : b3.coset_reps) b3_labels.push_back(c.label);
  CHECK(b3_labels == testsupport::kB3CosetLabels);

  // L(c) = l(c) |X| + 1 with |X| = |W| / #cosets
  for (const DualityReport* rep : {&a3, &b3}) {
    long x = static_cast<long>(rep->size) / static_cast<long>(rep->coset_reps.size());
    for (const auto& c : rep->coset_reps) {
      CHECK(c.label == c.length * x + 1);
    }
  }
}

TEST_CASE("duality fails in D5 exactly as published") {
  CoxeterSystem sys = CoxeterSystem::preset("D5");
  DualityReport rep = duality_report(sys);
  CHECK(rep.size == 1920);
  CHECK_FALSE(rep.holds);

  REQUIRE(rep.coset_reps.size() == 10);
  for (std::size_t i = 0; i < testsupport::kD5CosetReps.size(); ++i) {
    Element expected = sys.from_word(Word::parse(testsupport::kD5CosetReps[i]));
    CHECK(sys.from_word(rep.coset_reps[i].nf) == expected);
    // blocks stay consecutive even though two representatives share length 4
    CHECK(rep.coset_reps[i].label == static_cast<long>(i) * 192 + 1);
  }

  bool found = false;
  Element defect_elem = sys.from_word(Word::parse(testsupport::kD5DefectWord));
  for (const auto& d : rep.defects) {
    if (sys.from_word(d.w_nf) == defect_elem) {
      found = true;
      CHECK(d.l_w == testsupport::kD5DefectL);
      CHECK(d.l_w0w == testsupport::kD5DefectLW0W);
      CHECK(d.sum == testsupport::kD5DefectSum);
    }
  }
  CHECK(found);
  CHECK(testsupport::kD5ExpectedSum == static_cast<long>(rep.size) + 1);
}
