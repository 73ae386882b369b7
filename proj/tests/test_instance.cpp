#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "multispinal/fixtures.hpp"
#include "multispinal/instance.hpp"
#include "multispinal/io.hpp"

using namespace multispinal;
using test_util::error_kind;

namespace {

GroupPtr klein() {
  return FiniteGroup::validate(
      {"e", "b", "c", "d"},
      {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

GroupPtr z2() { return FiniteGroup::validate({"e", "a"}, {{0, 1}, {1, 0}}); }

FiniteAction swap_action(const GroupPtr& b) {
  return FiniteAction(b, {"0", "1"}, {{0, 1}, {1, 0}});
}

// The first bundled instance, assembled by hand.
MultispinalInstance hand_built() {
  GroupPtr a = klein();
  GroupPtr b = z2();
  std::vector<PsiEntry> psi;
  psi.push_back({PsiKind::Hom, Homomorphism(a, b, {0, 1, 1, 0})});
  psi.push_back({PsiKind::Aut, Homomorphism(a, a, {0, 2, 3, 1})});
  return MultispinalInstance::build(a, b, swap_action(b), std::move(psi));
}

}  // namespace

TEST_SUITE("instance") {
  TEST_CASE("hand-built instance matches the bundled document") {
    MultispinalInstance built = hand_built();
    MultispinalInstance bundled = fixture_instance("grigorchuk");
    CHECK(instance_to_json(built) == instance_to_json(bundled));
    CHECK(built.y_letters() == std::vector<int>{0});
    CHECK(built.aut_letters() == std::vector<int>{1});
    CHECK(built.in_y(0));
    CHECK_FALSE(built.in_y(1));
  }

  TEST_CASE("closure of the hom part") {
    MultispinalInstance inst = fixture_instance("grigorchuk");
    REQUIRE(inst.closure().size() == 3);
    CHECK(inst.closure()[0].map() == std::vector<int>{0, 0, 1, 1});
    CHECK(inst.closure()[1].map() == std::vector<int>{0, 1, 0, 1});
    CHECK(inst.closure()[2].map() == std::vector<int>{0, 1, 1, 0});
    CHECK(fixture_instance("nonsimple-variant").closure().size() == 2);
    CHECK(fixture_instance("z3z3").closure().size() == 8);
  }

  TEST_CASE("closure against the aut-subgroup orbit") {
    // The aut letters of the third instance generate a subgroup of Aut(A)
    // of order 24; the single hom composed with it collapses to 8 maps.
    MultispinalInstance inst = fixture_instance("z3z3");
    std::vector<Homomorphism> generators;
    for (int x : inst.aut_letters()) generators.push_back(inst.psi_at(x).map);
    std::vector<Homomorphism> subgroup = {identity_hom(inst.A())};
    for (bool grew = true; grew;) {
      grew = false;
      for (size_t i = 0; i < subgroup.size(); ++i)
        for (const Homomorphism& g : generators) {
          Homomorphism next = compose(subgroup[i], g);
          bool known = false;
          for (const Homomorphism& h : subgroup) known = known || h == next;
          if (!known) {
            subgroup.push_back(next);
            grew = true;
          }
        }
    }
    CHECK(subgroup.size() == 24);
    CHECK(inst.closure().size() == 8);
  }

  TEST_CASE("agents: normalization, labels, universe") {
    MultispinalInstance inst = fixture_instance("grigorchuk");
    CHECK(inst.a_agent(0) == Agent::identity());
    CHECK(inst.b_agent(0) == Agent::identity());
    CHECK(inst.a_agent(2) == Agent{Side::Aut, 2});
    CHECK(inst.agent_label(Agent::identity()) == "1");
    CHECK(inst.agent_label(inst.a_agent(3)) == "A:d");
    CHECK(inst.agent_label(inst.b_agent(1)) == "B:a");

    CHECK(inst.agent_count() == 5);
    std::vector<Agent> universe = inst.agent_universe();
    REQUIRE(universe.size() == 5);
    CHECK(universe[0] == Agent::identity());
    for (size_t i = 0; i < universe.size(); ++i)
      CHECK(inst.index_of_agent(universe[i]) == static_cast<int>(i));
    // denormalized and out-of-range agents are rejected
    CHECK(inst.index_of_agent(Agent{Side::Aut, 0}) == -1);
    CHECK(inst.index_of_agent(Agent{Side::Aut, 9}) == -1);
    CHECK(inst.index_of_agent(Agent{Side::Perm, 0}) == -1);
  }

  TEST_CASE("nucleus formula equals the fixpoint and is frozen for the bundles") {
    MultispinalInstance grig = fixture_instance("grigorchuk");
    std::vector<std::string> labels;
    for (const Agent& g : grig.nucleus()) labels.push_back(grig.agent_label(g));
    CHECK(labels == std::vector<std::string>{"1", "A:b", "A:c", "A:d", "B:a"});
    CHECK(nucleus_formula(grig) == grig.nucleus());
    CHECK(fixture_instance("nonsimple-variant").nucleus().size() == 5);
    CHECK(fixture_instance("z3z3").nucleus().size() == 11);
  }

  TEST_CASE("amenability flag") {
    CHECK(fixture_instance("grigorchuk").amenability() == Amenability::Established);
    CHECK(fixture_instance("nonsimple-variant").amenability() == Amenability::Established);
    CHECK(fixture_instance("z3z3").amenability() == Amenability::Established);

    // two orbits: the sufficient condition cannot fire
    GroupPtr a = klein();
    GroupPtr b = z2();
    FiniteAction orbits(b, {"0", "1", "2", "3"}, {{0, 1, 2, 3}, {1, 0, 3, 2}});
    std::vector<PsiEntry> psi;
    psi.push_back({PsiKind::Hom, Homomorphism(a, b, {0, 1, 1, 0})});
    psi.push_back({PsiKind::Aut, Homomorphism(a, a, {0, 2, 3, 1})});
    psi.push_back({PsiKind::Hom, Homomorphism(a, b, {0, 1, 0, 1})});
    psi.push_back({PsiKind::Aut, Homomorphism(a, a, {0, 2, 3, 1})});
    MultispinalInstance inst = MultispinalInstance::build(a, b, std::move(orbits), std::move(psi));
    CHECK(inst.amenability() == Amenability::Unknown);

    // transitive but the hom images stay inside a proper subgroup
    GroupPtr z4 = cyclic_product({4});
    GroupPtr ztwo = FiniteGroup::validate({"e", "t"}, {{0, 1}, {1, 0}});
    FiniteAction regular(z4, {"0", "1", "2", "3"},
                         {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
    std::vector<PsiEntry> psi2;
    psi2.push_back({PsiKind::Hom, Homomorphism(ztwo, z4, {0, 2})});  // image {0,2}
    psi2.push_back({PsiKind::Aut, identity_hom(ztwo)});
    psi2.push_back({PsiKind::Aut, identity_hom(ztwo)});
    psi2.push_back({PsiKind::Aut, identity_hom(ztwo)});
    MultispinalInstance narrow =
        MultispinalInstance::build(ztwo, z4, std::move(regular), std::move(psi2));
    CHECK(narrow.amenability() == Amenability::Unknown);
  }

  TEST_CASE("build rejections") {
    GroupPtr a = klein();
    GroupPtr b = z2();
    auto entry_aut = [&] { return PsiEntry{PsiKind::Aut, Homomorphism(a, a, {0, 2, 3, 1})}; };
    auto entry_hom = [&] { return PsiEntry{PsiKind::Hom, Homomorphism(a, b, {0, 1, 1, 0})}; };

    // every letter an automorphism
    {
      std::vector<PsiEntry> psi;
      psi.push_back(entry_aut());
      psi.push_back(entry_aut());
      CHECK(error_kind([&] {
              MultispinalInstance::build(a, b, swap_action(b), std::move(psi));
            }) == "EmptyHomPart");
    }
    // every letter a homomorphism
    {
      std::vector<PsiEntry> psi;
      psi.push_back(entry_hom());
      psi.push_back(entry_hom());
      CHECK(error_kind([&] {
              MultispinalInstance::build(a, b, swap_action(b), std::move(psi));
            }) == "EmptyAutPart");
    }
    // trivial hom part: common kernel is all of A
    {
      std::vector<PsiEntry> psi;
      psi.push_back({PsiKind::Hom, Homomorphism(a, b, {0, 0, 0, 0})});
      psi.push_back(entry_aut());
      try {
        MultispinalInstance::build(a, b, swap_action(b), std::move(psi));
        FAIL("unfaithful instance accepted");
      } catch (const Error& e) {
        CHECK(e.kind() == "NotFaithful");
        CHECK(std::string(e.what()).find("b") != std::string::npos);
      }
    }
    // |A| = 1
    {
      GroupPtr one = FiniteGroup::validate({"e"}, {{0}});
      std::vector<PsiEntry> psi;
      psi.push_back({PsiKind::Hom, Homomorphism(one, b, {0})});
      psi.push_back({PsiKind::Aut, identity_hom(one)});
      CHECK(error_kind([&] {
              MultispinalInstance::build(one, b, swap_action(b), std::move(psi));
            }) == "TrivialGroup");
    }
    // action group is not the declared B
    {
      GroupPtr other = FiniteGroup::validate({"x", "y"}, {{0, 1}, {1, 0}});
      std::vector<PsiEntry> psi;
      psi.push_back(entry_hom());
      psi.push_back(entry_aut());
      CHECK(error_kind([&] {
              MultispinalInstance::build(a, b, swap_action(other), std::move(psi));
            }) == "NotAnAction");
    }
    // wrong number of letters
    {
      std::vector<PsiEntry> psi;
      psi.push_back(entry_hom());
      CHECK(error_kind([&] {
              MultispinalInstance::build(a, b, swap_action(b), std::move(psi));
            }) == "BadPsi");
    }
    // aut entry that is not bijective
    {
      std::vector<PsiEntry> psi;
      psi.push_back(entry_hom());
      psi.push_back({PsiKind::Aut, Homomorphism(a, a, {0, 0, 0, 0})});
      CHECK(error_kind([&] {
              MultispinalInstance::build(a, b, swap_action(b), std::move(psi));
            }) == "BadPsi");
    }
    // hom entry with the wrong target
    {
      std::vector<PsiEntry> psi;
      psi.push_back({PsiKind::Hom, Homomorphism(a, a, {0, 2, 3, 1})});
      psi.push_back(entry_aut());
      CHECK(error_kind([&] {
              MultispinalInstance::build(a, b, swap_action(b), std::move(psi));
            }) == "BadPsi");
    }
  }

  TEST_CASE("closure_ba on raw map lists") {
    GroupPtr a = klein();
    GroupPtr b = z2();
    Homomorphism proj(a, b, {0, 1, 1, 0});
    Homomorphism rot(a, a, {0, 2, 3, 1});
    std::vector<Homomorphism> closure = closure_ba({proj}, {rot});
    REQUIRE(closure.size() == 3);
    // sorted by map, deduplicated
    CHECK(closure[0].map() <= closure[1].map());
    CHECK(closure[1].map() <= closure[2].map());
    // closed: composing any member with the aut again stays inside
    for (const Homomorphism& h : closure) {
      Homomorphism next = compose(h, rot);
      bool member = false;
      for (const Homomorphism& k : closure) member = member || k == next;
      CHECK(member);
    }
  }
}
