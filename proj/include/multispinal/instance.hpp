#pragma once

#include <string>
#include <vector>

#include "multispinal/agent.hpp"
#include "multispinal/group.hpp"

namespace multispinal {

enum class PsiKind { Aut, Hom };

// Per-letter restriction map: an automorphism of A (letters outside Y) or a
// homomorphism A -> B (letters of Y).
struct PsiEntry {
  PsiKind kind;
  Homomorphism map;
};

enum class Amenability { Established, Unknown };

// The closure of the hom part under right composition with the aut part:
// homs, then homs-after-one-aut, ... until stable. Deduplicated by the full
// element map and returned sorted by map for reproducibility.
std::vector<Homomorphism> closure_ba(const std::vector<Homomorphism>& homs,
                                     const std::vector<Homomorphism>& auts);

// A validated self-similar instance: groups A and B, the free B-action on
// the alphabet, the per-letter restriction maps, and everything derived from
// them (Y, the hom-closure, the nucleus, the amenability flag), computed and
// verified once at build time. Immutable afterwards.
class MultispinalInstance {
 public:
  // Verifies: one psi entry per letter; aut entries are automorphisms of A,
  // hom entries map A to the action's group; Y and its complement nonempty
  // (Error("EmptyHomPart") / Error("EmptyAutPart")); the hom-closure kernels
  // intersect trivially (Error("NotFaithful") listing the common kernel).
  // The nucleus formula A union psi_y(A) is checked against the reachability
  // greatest fixpoint (a Defect if they ever differ).
  static MultispinalInstance build(GroupPtr A, GroupPtr B, FiniteAction action,
                                   std::vector<PsiEntry> psi);

  const GroupPtr& A() const { return a_; }
  const GroupPtr& B() const { return b_; }
  const FiniteAction& action() const { return action_; }
  const std::vector<std::string>& alphabet() const { return action_.alphabet(); }
  int alphabet_size() const { return action_.alphabet_size(); }

  const std::vector<PsiEntry>& psi() const { return psi_; }
  const PsiEntry& psi_at(int letter) const { return psi_[static_cast<size_t>(letter)]; }
  bool in_y(int letter) const { return psi_[static_cast<size_t>(letter)].kind == PsiKind::Hom; }

  const std::vector<int>& y_letters() const { return y_letters_; }
  const std::vector<int>& aut_letters() const { return aut_letters_; }

  const std::vector<Homomorphism>& closure() const { return closure_; }
  const std::vector<Agent>& nucleus() const { return nucleus_; }
  Amenability amenability() const { return amenability_; }

  // Agents, normalized: the group identities map to the Identity agent.
  Agent a_agent(int element) const;
  Agent b_agent(int element) const;
  std::string agent_label(const Agent& g) const;

  // Identity first, then nontrivial A elements, then nontrivial B elements,
  // each in declared group order. index_of_agent inverts it.
  std::vector<Agent> agent_universe() const;
  int index_of_agent(const Agent& g) const;
  int agent_count() const { return a_->order() + b_->order() - 1; }

 private:
  MultispinalInstance(GroupPtr A, GroupPtr B, FiniteAction action,
                      std::vector<PsiEntry> psi);

  GroupPtr a_;
  GroupPtr b_;
  FiniteAction action_;
  std::vector<PsiEntry> psi_;
  std::vector<int> y_letters_;
  std::vector<int> aut_letters_;
  std::vector<Homomorphism> closure_;
  std::vector<Agent> nucleus_;
  Amenability amenability_ = Amenability::Unknown;
};

// The nucleus by the closed formula: identity, all of A, and the images
// psi_y(A) for y in Y (as Perm agents), sorted canonically.
std::vector<Agent> nucleus_formula(const MultispinalInstance& instance);

// Established iff the B-action is transitive and the psi_y images cover B.
// A sufficient condition only: never "refuted".
Amenability amenability_sufficient(const MultispinalInstance& instance);

}  // namespace multispinal
