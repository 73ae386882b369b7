#pragma once

#include <compare>

namespace multispinal {

enum class Side { Identity = 0, Aut = 1, Perm = 2 };

// One generator-or-identity acting on the infinite word space. The identity
// elements of A and B both act trivially, so they collapse into the single
// Identity agent; constructors normalize, which keeps agent equality plain
// field equality. A nontrivial Aut agent fixes the first letter of every
// word, a nontrivial Perm agent fixes none (freeness), so distinct sides are
// genuinely distinct homeomorphisms.
struct Agent {
  Side side = Side::Identity;
  int element = 0;  // index into A (Aut) or B (Perm); 0 for Identity

  static Agent identity() { return Agent{}; }

  bool is_identity() const { return side == Side::Identity; }

  bool operator==(const Agent&) const = default;
  auto operator<=>(const Agent&) const = default;
};

}  // namespace multispinal
