#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "multispinal/action.hpp"
#include "multispinal/fixtures.hpp"

using namespace multispinal;
using test_util::error_kind;

namespace {

// Exhaustive word enumeration, the oracle for the dynamic-programming count.
BigInt brute_fixed(const MultispinalInstance& inst, Agent g, int depth) {
  Word u(static_cast<size_t>(depth), 0);
  const int x = inst.alphabet_size();
  BigInt count = 0;
  while (true) {
    if (apply_word(inst, g, u).image == u) ++count;
    int i = depth - 1;
    for (; i >= 0; --i) {
      if (++u[static_cast<size_t>(i)] < x) break;
      u[static_cast<size_t>(i)] = 0;
    }
    if (i < 0) break;
  }
  return count;
}

// Validates the certificate semantics of a witness: the agent fixes the
// periodic word, its restriction cycle never trivializes, the reported
// phases are exactly the kernel positions of the escape map, and the agent
// itself anchors the cycle at a kernel member.
void validate_witness(const MultispinalInstance& inst, const NonHausdorffWitness& w) {
  REQUIRE(w.agent.side == Side::Aut);
  REQUIRE(!w.period.empty());
  const int period_len = static_cast<int>(w.period.size());
  REQUIRE(inst.in_y(w.escape_letter));
  const Homomorphism& lambda = inst.psi_at(w.escape_letter).map;
  for (int letter : w.period) CHECK_FALSE(inst.in_y(letter));

  std::map<std::pair<int, int>, int> seen;
  std::vector<Agent> trail;
  Agent cur = w.agent;
  int pos = 0;
  while (true) {
    REQUIRE(cur.side == Side::Aut);  // never trivializes along the period
    const auto key = std::make_pair(cur.element, pos % period_len);
    const auto it = seen.find(key);
    if (it != seen.end()) {
      REQUIRE(it->second == 0);  // normalized: the agent sits on its own cycle
      const int cycle_len = pos;
      CHECK(cycle_len % period_len == 0);
      std::vector<int> expected;
      for (int i = 0; i < cycle_len; ++i)
        if (lambda(trail[static_cast<size_t>(i)].element) == inst.B()->identity())
          expected.push_back(i);
      CHECK(w.phases == expected);
      REQUIRE(!expected.empty());
      CHECK(expected[0] == 0);  // anchored at the first kernel member
      return;
    }
    seen.emplace(key, pos);
    trail.push_back(cur);
    StepResult s = step(inst, cur, w.period[static_cast<size_t>(pos % period_len)]);
    CHECK(s.letter == w.period[static_cast<size_t>(pos % period_len)]);  // fixes the word
    cur = s.next;
    ++pos;
    REQUIRE(pos < 10000);
  }
}

}  // namespace

TEST_SUITE("action") {
  TEST_CASE("single transducer steps") {
    MultispinalInstance inst = fixture_instance("grigorchuk");
    const Agent b = inst.a_agent(1), c = inst.a_agent(2), d = inst.a_agent(3);
    const Agent a = inst.b_agent(1);

    CHECK(step(inst, b, 0) == StepResult{0, a});              // hom letter: lands in B
    CHECK(step(inst, b, 1) == StepResult{1, c});              // aut letter: rotates in A
    CHECK(step(inst, c, 1) == StepResult{1, d});
    CHECK(step(inst, d, 1) == StepResult{1, b});
    CHECK(step(inst, d, 0) == StepResult{0, Agent::identity()});  // d in ker psi_0
    CHECK(step(inst, a, 0) == StepResult{1, Agent::identity()});  // perm: moves, trivializes
    CHECK(step(inst, a, 1) == StepResult{0, Agent::identity()});
    CHECK(step(inst, Agent::identity(), 1) == StepResult{1, Agent::identity()});
    CHECK(error_kind([&] { step(inst, b, 5); }) == "BadWord");
  }

  TEST_CASE("word application and the published restriction facts") {
    MultispinalInstance inst = fixture_instance("grigorchuk");
    const Agent d = inst.a_agent(3), c = inst.a_agent(2);

    WordResult r = apply_word(inst, d, Word{1, 1, 1, 0});
    CHECK(r.image == Word{1, 1, 1, 0});
    CHECK(r.restriction == Agent::identity());

    WordResult r2 = apply_word(inst, d, Word{1, 1});
    CHECK(r2.image == Word{1, 1});
    CHECK(r2.restriction == c);  // d|_11 = c, not trivial

    WordResult r3 = apply_word(inst, inst.b_agent(1), Word{0, 1});
    CHECK(r3.image == Word{1, 1});
    CHECK(r3.restriction == Agent::identity());

    CHECK(apply_word(inst, d, Word{}).restriction == d);
  }

  TEST_CASE("cocycle laws on random words") {
    std::mt19937_64 rng(13);
    for (const char* name : {"grigorchuk", "nonsimple-variant", "z3z3"}) {
      MultispinalInstance inst = fixture_instance(name);
      const int x = inst.alphabet_size();
      for (const Agent& g : inst.agent_universe()) {
        for (int trial = 0; trial < 8; ++trial) {
          Word u(rng() % 4), v(rng() % 4);
          for (int& l : u) l = static_cast<int>(rng() % static_cast<unsigned>(x));
          for (int& l : v) l = static_cast<int>(rng() % static_cast<unsigned>(x));
          Word uv = u;
          uv.insert(uv.end(), v.begin(), v.end());
          WordResult whole = apply_word(inst, g, uv);
          WordResult first = apply_word(inst, g, u);
          WordResult second = apply_word(inst, first.restriction, v);
          Word expected = first.image;
          expected.insert(expected.end(), second.image.begin(), second.image.end());
          CHECK(whole.image == expected);
          CHECK(whole.restriction == second.restriction);
        }
      }
    }
  }

  TEST_CASE("products apply rightmost first") {
    MultispinalInstance inst = fixture_instance("grigorchuk");
    const Agent d = inst.a_agent(3), c = inst.a_agent(2), a = inst.b_agent(1);
    ProductResult pr = apply_product(inst, {d, a}, Word{0, 1});
    CHECK(pr.image == Word{1, 1});
    REQUIRE(pr.restrictions.size() == 2);
    CHECK(pr.restrictions[0] == c);                  // d restricted at a(01) = 11
    CHECK(pr.restrictions[1] == Agent::identity());  // a trivializes immediately
    CHECK(apply_product(inst, {}, Word{0, 1}).image == Word{0, 1});
  }

  TEST_CASE("fixed counts: published table for the first instance") {
    MultispinalInstance inst = fixture_instance("grigorchuk");
    const std::vector<long> b_counts = {2, 2, 2, 4, 6, 10, 20, 38, 74, 148, 294, 586, 1172, 2342};
    const std::vector<long> c_counts = {2, 2, 4, 6, 10, 20, 38, 74, 148, 294, 586, 1172, 2342, 4682};
    const std::vector<long> d_counts = {2, 4, 6, 10, 20, 38, 74, 148, 294, 586, 1172, 2342, 4682, 9364};
    for (int n = 1; n <= 14; ++n) {
      CHECK(fixed_count(inst, inst.a_agent(1), n) == BigInt(b_counts[static_cast<size_t>(n - 1)]));
      CHECK(fixed_count(inst, inst.a_agent(2), n) == BigInt(c_counts[static_cast<size_t>(n - 1)]));
      CHECK(fixed_count(inst, inst.a_agent(3), n) == BigInt(d_counts[static_cast<size_t>(n - 1)]));
    }
    CHECK(fixed_count(inst, Agent::identity(), 10) == BigInt(1024));
    CHECK(fixed_count(inst, inst.b_agent(1), 7) == BigInt(0));  // free action
    CHECK(fixed_count(inst, inst.b_agent(1), 0) == BigInt(1));
    CHECK(fixed_count(inst, inst.a_agent(3), 0) == BigInt(1));
    CHECK(error_kind([&] { fixed_count(inst, inst.a_agent(3), -1); }) == "BadDepth");
    CHECK(error_kind([&] { fixed_count(inst, Agent{Side::Aut, 0}, 3); }) == "UnknownAgent");
  }

  TEST_CASE("fixed counts match exhaustive enumeration") {
    for (const char* name : {"grigorchuk", "nonsimple-variant", "z3z3"}) {
      MultispinalInstance inst = fixture_instance(name);
      const int max_depth = inst.alphabet_size() == 2 ? 8 : 6;
      for (const Agent& g : inst.agent_universe())
        for (int n = 0; n <= max_depth; ++n)
          CHECK(fixed_count(inst, g, n) == brute_fixed(inst, g, n));
    }
    // deeper spot value for the 9-element instance
    MultispinalInstance z = fixture_instance("z3z3");
    CHECK(fixed_count(z, z.a_agent(z.A()->index_of("a1")), 8) == BigInt(4035));
  }

  TEST_CASE("agent inverse and product") {
    MultispinalInstance inst = fixture_instance("grigorchuk");
    const Agent b = inst.a_agent(1), c = inst.a_agent(2), d = inst.a_agent(3);
    CHECK(agent_inverse(inst, b) == b);  // involutions
    CHECK(agent_inverse(inst, Agent::identity()) == Agent::identity());
    CHECK(agent_product(inst, b, c) == d);
    CHECK(agent_product(inst, b, b) == Agent::identity());
    CHECK(agent_product(inst, Agent::identity(), d) == d);
    CHECK(agent_product(inst, inst.b_agent(1), inst.b_agent(1)) == Agent::identity());
    CHECK(error_kind([&] { agent_product(inst, b, inst.b_agent(1)); }) == "SideMismatch");

    MultispinalInstance z = fixture_instance("z3z3");
    const int a1 = z.A()->index_of("a1"), a5 = z.A()->index_of("a5");
    CHECK(agent_inverse(z, z.a_agent(a1)) == z.a_agent(a5));
    CHECK(agent_inverse(z, z.b_agent(1)) == z.b_agent(2));
  }

  TEST_CASE("germ decisions on the published examples") {
    MultispinalInstance inst = fixture_instance("grigorchuk");
    const Agent b = inst.a_agent(1), c = inst.a_agent(2), d = inst.a_agent(3);

    GermVerdict g1 = decide_germ(inst, d, Agent::identity(), {{}, {1}});
    CHECK(g1.kind == GermVerdict::Kind::DifferentGerm);

    GermVerdict g2 = decide_germ(inst, d, Agent::identity(), {{1, 1, 1, 0}, {0}});
    CHECK(g2 == GermVerdict{GermVerdict::Kind::Equal, 4});

    GermVerdict g3 = decide_germ(inst, b, Agent::identity(), {{}, {0}});
    CHECK(g3 == GermVerdict{GermVerdict::Kind::DifferentImage, 1});

    CHECK(decide_germ(inst, d, d, {{}, {1}}) == GermVerdict{GermVerdict::Kind::Equal, 0});
    // b vs c: the quotient is d, so the same germ facts apply
    CHECK(decide_germ(inst, b, c, {{}, {1}}).kind == GermVerdict::Kind::DifferentGerm);
    CHECK(error_kind([&] { decide_germ(inst, d, Agent::identity(), {{1}, {}}); }) == "BadWord");
  }

  TEST_CASE("every nontrivial A element has a distinct germ at every aut fixed point") {
    for (const char* name : {"grigorchuk", "nonsimple-variant", "z3z3"}) {
      MultispinalInstance inst = fixture_instance(name);
      for (int e = 0; e < inst.A()->order(); ++e) {
        if (e == inst.A()->identity()) continue;
        for (int x : inst.aut_letters()) {
          GermVerdict verdict = decide_germ(inst, inst.a_agent(e), Agent::identity(), {{}, {x}});
          CHECK(verdict.kind == GermVerdict::Kind::DifferentGerm);
        }
      }
    }
  }

  TEST_CASE("cylinder agreement") {
    MultispinalInstance inst = fixture_instance("grigorchuk");
    const Agent b = inst.a_agent(1), c = inst.a_agent(2), d = inst.a_agent(3);
    CHECK(agrees_on_cylinder(inst, d, Agent::identity(), Word{1, 1, 1, 0}));
    CHECK_FALSE(agrees_on_cylinder(inst, d, Agent::identity(), Word{1, 1}));
    CHECK(agrees_on_cylinder(inst, b, c, Word{1, 1, 1, 0}));  // b and c differ by d
    for (const Agent& g : inst.agent_universe()) {
      CHECK(agrees_on_cylinder(inst, g, g, Word{}));
      CHECK(agrees_on_cylinder(inst, g, g, Word{0, 1, 1}));
    }
    CHECK_FALSE(agrees_on_cylinder(inst, inst.b_agent(1), Agent::identity(), Word{0, 1}));
  }

  TEST_CASE("witness search: published certificates") {
    MultispinalInstance grig = fixture_instance("grigorchuk");
    std::optional<NonHausdorffWitness> w = find_nonhausdorff_witness(grig);
    REQUIRE(w.has_value());
    CHECK(*w == NonHausdorffWitness{grig.a_agent(3), Word{1}, 0, {0}});
    validate_witness(grig, *w);

    MultispinalInstance ns = fixture_instance("nonsimple-variant");
    std::optional<NonHausdorffWitness> w2 = find_nonhausdorff_witness(ns);
    REQUIRE(w2.has_value());
    CHECK(*w2 == NonHausdorffWitness{ns.a_agent(3), Word{1}, 0, {0}});
    validate_witness(ns, *w2);

    MultispinalInstance z = fixture_instance("z3z3");
    std::optional<NonHausdorffWitness> w3 = find_nonhausdorff_witness(z);
    REQUIRE(w3.has_value());
    CHECK(*w3 == NonHausdorffWitness{z.a_agent(z.A()->index_of("a1")), Word{0}, 2, {0}});
    validate_witness(z, *w3);

    // deterministic across calls
    CHECK(find_nonhausdorff_witness(grig) == w);
    // zero period bound exhausts immediately
    CHECK_FALSE(find_nonhausdorff_witness(grig, {0, 4}).has_value());
  }

  TEST_CASE("an instance whose kernels avoid every cycle has no witness") {
    GroupPtr a = FiniteGroup::validate({"e", "t"}, {{0, 1}, {1, 0}});
    GroupPtr b = FiniteGroup::validate({"e", "s"}, {{0, 1}, {1, 0}});
    std::vector<PsiEntry> psi;
    psi.push_back({PsiKind::Hom, Homomorphism(a, b, {0, 1})});  // injective: trivial kernel
    psi.push_back({PsiKind::Aut, identity_hom(a)});
    MultispinalInstance inst = MultispinalInstance::build(
        a, b, FiniteAction(b, {"0", "1"}, {{0, 1}, {1, 0}}), std::move(psi));
    CHECK_FALSE(find_nonhausdorff_witness(inst).has_value());
    CHECK_FALSE(find_nonhausdorff_witness(inst, {6, 8}).has_value());
  }

  TEST_CASE("restriction fixpoint equals the nucleus") {
    for (const char* name : {"grigorchuk", "nonsimple-variant", "z3z3"}) {
      MultispinalInstance inst = fixture_instance(name);
      CHECK(nucleus_fixpoint(inst) == inst.nucleus());
    }
  }
}
