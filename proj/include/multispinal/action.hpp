#pragma once

#include <optional>
#include <vector>

#include "multispinal/instance.hpp"
#include "multispinal/rational.hpp"

namespace multispinal {

// Words are letter-index sequences over the instance alphabet.
using Word = std::vector<int>;

struct StepResult {
  int letter;
  Agent next;

  bool operator==(const StepResult&) const = default;
};

// One transducer step: image of the first letter plus the restriction agent.
// Aut agent a at letter x: image x, restriction psi_x(a) (an A element when
// x is outside Y, a B element when x is in Y). Perm agent b: image b(x),
// restriction Identity. Identity: (x, Identity).
StepResult step(const MultispinalInstance& instance, Agent g, int letter);

struct WordResult {
  Word image;
  Agent restriction;

  bool operator==(const WordResult&) const = default;
};

// Iterated step: returns (g(u), g|_u). Satisfies the cocycle laws
// g(uv) = g(u) . (g|_u)(v) and g|_{uv} = (g|_u)|_v.
WordResult apply_word(const MultispinalInstance& instance, Agent g, const Word& u);

struct ProductResult {
  Word image;
  std::vector<Agent> restrictions;  // one per factor, aligned with the input
};

// Applies the composite g_1 g_2 ... g_n (rightmost acts first) to u.
// restrictions[i] is the restriction of gs[i] at the word it received.
ProductResult apply_product(const MultispinalInstance& instance,
                            const std::vector<Agent>& gs, const Word& u);

// |{u in X^depth : g(u) = u}|, exact, by dynamic programming over the agent
// universe (O(depth * agents * |X|)), never by enumerating X^depth.
BigInt fixed_count(const MultispinalInstance& instance, Agent g, int depth);

// preperiod . period^infinity
struct EventuallyPeriodicWord {
  Word preperiod;
  Word period;  // nonempty
};

struct GermVerdict {
  enum class Kind { Equal, DifferentImage, DifferentGerm };

  Kind kind;
  // Equal: depth m of a cylinder on which the two maps coincide pointwise.
  // DifferentImage: first position where the images differ.
  int depth = 0;

  bool operator==(const GermVerdict&) const = default;
};

// Same-side inverse/product in the underlying group, normalized to agents.
// Mixed nontrivial sides throw Error("SideMismatch").
Agent agent_inverse(const MultispinalInstance& instance, Agent g);
Agent agent_product(const MultispinalInstance& instance, Agent g, Agent h);

// Walks k = h^-1 g along w. k moving a letter decides DifferentImage; the
// restriction trivializing at depth m decides Equal(m); a repeated
// (restriction, period-phase) state without trivializing decides
// DifferentGerm. The DifferentGerm case leans on faithfulness (a nontrivial
// agent moves a point in every neighborhood); that obligation is spot-checked
// by finding a word the looping restriction actually moves.
GermVerdict decide_germ(const MultispinalInstance& instance, Agent g, Agent h,
                        const EventuallyPeriodicWord& w);

// g = h on the cylinder uX^inf, i.e. (h^-1 g)(u) = u with trivial restriction.
bool agrees_on_cylinder(const MultispinalInstance& instance, Agent g, Agent h,
                        const Word& u);

struct WitnessBounds {
  int max_period = 3;
  int max_preperiod = 4;
};

// A non-Hausdorffness certificate: agent fixes period^inf with restrictions
// that never trivialize (so its germ there differs from the identity's), yet
// lies in ker(psi_{escape}) at the listed phases of its restriction cycle,
// so it acts trivially on cylinders accumulating at the fixed word.
struct NonHausdorffWitness {
  Agent agent;            // Aut side
  Word period;            // over the aut letters
  int escape_letter;      // in Y
  std::vector<int> phases;

  bool operator==(const NonHausdorffWitness&) const = default;
};

// Bounded deterministic search (periods and preperiods over the aut letters,
// shortest first; agents in declared order). Hits are normalized to start at
// the first kernel member of the detected restriction cycle. Returns nothing
// when the bounded search is exhausted; that is no claim of Hausdorffness.
std::optional<NonHausdorffWitness> find_nonhausdorff_witness(
    const MultispinalInstance& instance, const WitnessBounds& bounds = {});

// Greatest fixpoint of one-step restriction reachability, iterated downward
// from the full agent universe. Equals the nucleus formula (asserted at
// instance build).
std::vector<Agent> nucleus_fixpoint(const MultispinalInstance& instance);

}  // namespace multispinal
