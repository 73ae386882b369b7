#include "multispinal/instance.hpp"

#include <algorithm>
#include <numeric>

#include "multispinal/action.hpp"

namespace multispinal {

std::vector<Homomorphism> closure_ba(const std::vector<Homomorphism>& homs,
                                     const std::vector<Homomorphism>& auts) {
  std::vector<Homomorphism> result;
  auto has = [&result](const std::vector<int>& map) {
    return std::any_of(result.begin(), result.end(),
                       [&map](const Homomorphism& h) { return h.map() == map; });
  };
  for (const auto& h : homs) {
    if (!has(h.map())) result.push_back(h);
  }
  size_t frontier_begin = 0;
  while (frontier_begin < result.size()) {
    size_t frontier_end = result.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& alpha : auts) {
        Homomorphism next = compose(result[i], alpha);
        if (!has(next.map())) result.push_back(std::move(next));
      }
    }
    frontier_begin = frontier_end;
  }
  std::sort(result.begin(), result.end(),
            [](const Homomorphism& x, const Homomorphism& y) { return x.map() < y.map(); });
  return result;
}

MultispinalInstance::MultispinalInstance(GroupPtr A, GroupPtr B, FiniteAction action,
                                         std::vector<PsiEntry> psi)
    : a_(std::move(A)), b_(std::move(B)), action_(std::move(action)), psi_(std::move(psi)) {}

MultispinalInstance MultispinalInstance::build(GroupPtr A, GroupPtr B, FiniteAction action,
                                               std::vector<PsiEntry> psi) {
  if (!A || !B) throw Error("BadPsi", "null group");
  if (A->order() < 2)
    throw Error("TrivialGroup", "A must have at least two elements");
  if (!(*action.group() == *B))
    throw Error("NotAnAction", "the action is not by the declared group B");
  const int x = action.alphabet_size();
  if (static_cast<int>(psi.size()) != x)
    throw Error("BadPsi", "need one restriction map per letter, got " +
                              std::to_string(psi.size()) + " for alphabet size " +
                              std::to_string(x));
  for (int letter = 0; letter < x; ++letter) {
    const auto& entry = psi[static_cast<size_t>(letter)];
    const std::string where = "letter \"" + action.alphabet()[static_cast<size_t>(letter)] + "\"";
    if (!(*entry.map.source() == *A))
      throw Error("BadPsi", where + ": map source is not A");
    if (entry.kind == PsiKind::Aut) {
      if (!(*entry.map.target() == *A))
        throw Error("BadPsi", where + ": aut entry must map A to A");
      if (!is_automorphism(entry.map))
        throw Error("BadPsi", where + ": aut entry is not bijective");
    } else {
      if (!(*entry.map.target() == *B))
        throw Error("BadPsi", where + ": hom entry must map A to B");
    }
  }

  MultispinalInstance instance(std::move(A), std::move(B), std::move(action), std::move(psi));
  for (int letter = 0; letter < x; ++letter) {
    if (instance.in_y(letter))
      instance.y_letters_.push_back(letter);
    else
      instance.aut_letters_.push_back(letter);
  }
  if (instance.y_letters_.empty())
    throw Error("EmptyHomPart", "no letter carries a homomorphism into B");
  if (instance.aut_letters_.empty())
    throw Error("EmptyAutPart", "no letter carries an automorphism of A");

  std::vector<Homomorphism> homs, auts;
  for (int letter : instance.y_letters_) homs.push_back(instance.psi_at(letter).map);
  for (int letter : instance.aut_letters_) auts.push_back(instance.psi_at(letter).map);
  instance.closure_ = closure_ba(homs, auts);

  std::vector<int> common(static_cast<size_t>(instance.a_->order()));
  std::iota(common.begin(), common.end(), 0);
  for (const auto& lambda : instance.closure_) {
    std::vector<int> ker = kernel(lambda);
    std::vector<int> next;
    std::set_intersection(common.begin(), common.end(), ker.begin(), ker.end(),
                          std::back_inserter(next));
    common = std::move(next);
  }
  if (common.size() != 1) {
    std::string labels;
    for (int g : common) {
      if (!labels.empty()) labels += ", ";
      labels += "\"" + instance.a_->label(g) + "\"";
    }
    throw Error("NotFaithful", "common kernel of the hom-closure is {" + labels + "}");
  }

  instance.nucleus_ = nucleus_formula(instance);
  std::vector<Agent> fixpoint = nucleus_fixpoint(instance);
  if (instance.nucleus_ != fixpoint)
    throw Defect("NucleusMismatch",
                 "closed-form nucleus (" + std::to_string(instance.nucleus_.size()) +
                     " agents) differs from the restriction fixpoint (" +
                     std::to_string(fixpoint.size()) + " agents)");

  instance.amenability_ = amenability_sufficient(instance);
  return instance;
}

Agent MultispinalInstance::a_agent(int element) const {
  if (element == a_->identity()) return Agent::identity();
  return Agent{Side::Aut, element};
}

Agent MultispinalInstance::b_agent(int element) const {
  if (element == b_->identity()) return Agent::identity();
  return Agent{Side::Perm, element};
}

std::string MultispinalInstance::agent_label(const Agent& g) const {
  switch (g.side) {
    case Side::Identity:
      return "1";
    case Side::Aut:
      return "A:" + a_->label(g.element);
    case Side::Perm:
      return "B:" + b_->label(g.element);
  }
  return "?";
}

std::vector<Agent> MultispinalInstance::agent_universe() const {
  std::vector<Agent> universe;
  universe.reserve(static_cast<size_t>(agent_count()));
  universe.push_back(Agent::identity());
  for (int e = 0; e < a_->order(); ++e) {
    if (e != a_->identity()) universe.push_back(Agent{Side::Aut, e});
  }
  for (int e = 0; e < b_->order(); ++e) {
    if (e != b_->identity()) universe.push_back(Agent{Side::Perm, e});
  }
  return universe;
}

int MultispinalInstance::index_of_agent(const Agent& g) const {
  switch (g.side) {
    case Side::Identity:
      return 0;
    case Side::Aut: {
      const int id = a_->identity();
      if (g.element == id || g.element < 0 || g.element >= a_->order()) return -1;
      return 1 + (g.element > id ? g.element - 1 : g.element);
    }
    case Side::Perm: {
      const int id = b_->identity();
      if (g.element == id || g.element < 0 || g.element >= b_->order()) return -1;
      return a_->order() + (g.element > id ? g.element - 1 : g.element);
    }
  }
  return -1;
}

std::vector<Agent> nucleus_formula(const MultispinalInstance& instance) {
  std::vector<Agent> result;
  result.push_back(Agent::identity());
  for (int e = 0; e < instance.A()->order(); ++e) {
    if (e != instance.A()->identity()) result.push_back(Agent{Side::Aut, e});
  }
  std::vector<bool> image(static_cast<size_t>(instance.B()->order()), false);
  for (int y : instance.y_letters()) {
    const auto& lambda = instance.psi_at(y).map;
    for (int a = 0; a < instance.A()->order(); ++a) image[static_cast<size_t>(lambda(a))] = true;
  }
  for (int e = 0; e < instance.B()->order(); ++e) {
    if (e != instance.B()->identity() && image[static_cast<size_t>(e)])
      result.push_back(Agent{Side::Perm, e});
  }
  std::sort(result.begin(), result.end());
  return result;
}

Amenability amenability_sufficient(const MultispinalInstance& instance) {
  if (!instance.action().transitive()) return Amenability::Unknown;
  std::vector<bool> image(static_cast<size_t>(instance.B()->order()), false);
  for (int y : instance.y_letters()) {
    const auto& lambda = instance.psi_at(y).map;
    for (int a = 0; a < instance.A()->order(); ++a) image[static_cast<size_t>(lambda(a))] = true;
  }
  bool covers = std::all_of(image.begin(), image.end(), [](bool b) { return b; });
  return covers ? Amenability::Established : Amenability::Unknown;
}

}  // namespace multispinal
