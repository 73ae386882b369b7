#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "multispinal/analysis.hpp"
#include "multispinal/io.hpp"
#include "multispinal/random_instances.hpp"

using namespace multispinal;
using test_util::error_kind;

TEST_SUITE("random") {
  TEST_CASE("generator honors count, bounds, and the standing assumptions") {
    std::vector<MultispinalInstance> batch = random_instances(200, 20260818);
    REQUIRE(batch.size() == 200);
    bool saw_nontransitive = false;
    bool saw_multiple_hom_letters = false;
    for (const MultispinalInstance& inst : batch) {
      CHECK(inst.A()->order() <= 16);
      CHECK(inst.B()->order() <= 4);
      CHECK(inst.alphabet_size() <= 4);
      CHECK(inst.alphabet_size() % inst.B()->order() == 0);  // regular orbits
      CHECK_FALSE(inst.y_letters().empty());
      CHECK_FALSE(inst.aut_letters().empty());
      if (!inst.action().transitive()) saw_nontransitive = true;
      if (inst.y_letters().size() > 1) saw_multiple_hom_letters = true;
    }
    CHECK(saw_nontransitive);
    CHECK(saw_multiple_hom_letters);
  }

  TEST_CASE("same seed reproduces the same instances") {
    std::vector<MultispinalInstance> a = random_instances(10, 7);
    std::vector<MultispinalInstance> b = random_instances(10, 7);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i)
      CHECK(instance_to_json(a[i]) == instance_to_json(b[i]));
    // different seeds diverge somewhere in a batch this size
    std::vector<MultispinalInstance> c = random_instances(10, 8);
    bool all_equal = true;
    for (size_t i = 0; i < a.size(); ++i)
      if (instance_to_json(a[i]) != instance_to_json(c[i])) all_equal = false;
    CHECK_FALSE(all_equal);
  }

  TEST_CASE("criteria agree across a seeded campaign") {
    // frozen tallies double as a determinism regression for the generator
    std::vector<MultispinalInstance> batch = random_instances(200, 20260818);
    AnalyzeOptions options;
    options.truncation_depth = 0;
    options.witness_search = false;
    int simple = 0, not_simple = 0, conditional = 0;
    for (const MultispinalInstance& inst : batch) {
      AnalysisReport report = analyze(inst, options);
      CHECK(report.criteria_agree);
      CHECK(report.gram.is_symmetric());
      for (int i = 0; i < report.gram.rows(); ++i) {
        CHECK(report.gram.at(i, i) == 1);
        for (int j = 0; j < report.gram.cols(); ++j) {
          CHECK(report.gram.at(i, j) >= 0);
          CHECK(report.gram.at(i, j) <= 1);
        }
      }
      switch (report.verdict) {
        case Verdict::Simple: ++simple; break;
        case Verdict::NotSimple: ++not_simple; break;
        default: ++conditional; break;
      }
    }
    CHECK(simple == 69);
    CHECK(not_simple == 41);
    CHECK(conditional == 90);
  }

  TEST_CASE("positive semidefiniteness on a sample") {
    std::vector<MultispinalInstance> batch = random_instances(25, 99);
    AnalyzeOptions options;
    options.truncation_depth = 0;
    options.witness_search = false;
    for (const MultispinalInstance& inst : batch) {
      AnalysisReport report = analyze(inst, options);
      CHECK(is_psd(report.gram));
      CHECK(report.kirchberg == (report.verdict == Verdict::Simple));
    }
  }

  TEST_CASE("catalog diversity in a large batch") {
    std::vector<MultispinalInstance> batch = random_instances(300, 5);
    std::set<std::pair<int, int>> shapes;
    for (const MultispinalInstance& inst : batch)
      shapes.insert({inst.A()->order(), inst.B()->order()});
    CHECK(shapes.size() >= 8);  // many (|A|, |B|) combos show up
  }

  TEST_CASE("edge counts") {
    CHECK(random_instances(0, 1).empty());
    CHECK(error_kind([] { random_instances(-1, 1); }) == "BadDimension");
  }
}
