#pragma once

#include <vector>

#include "multispinal/action.hpp"
#include "multispinal/instance.hpp"
#include "multispinal/matrix.hpp"
#include "multispinal/rational.hpp"

namespace multispinal {

// Fixed-point measures psi(a) = mu(Fix a) for the A elements, plus the
// defining linear system kept for reporting. psi(identity) = 1; nontrivial
// Perm agents have psi = 0 by freeness.
struct PsiTable {
  std::vector<Rational> values;  // indexed by A element, identity included
  RationalMatrix system{1, 1};   // (|A|-1) square, strictly diagonally dominant
  std::vector<Rational> rhs;
  int a_order = 0;
  int b_order = 0;
  int alphabet_size = 0;
};

// Sets up mu(Fix a) = (1/|X|) [ sum over aut letters of psi(psi_x(a)) +
// #{y in Y : psi_y(a) = 1_B} ] for a != e and solves it exactly. The
// coefficient matrix |X| I - T has T-row sums |X| - |Y| < |X|, so strict
// diagonal dominance guarantees a unique solution; a singular system is a
// Defect("InternalSingular"), not a user error.
PsiTable solve_psi(const MultispinalInstance& instance);

// Identity -> 1, nontrivial Perm -> 0, Aut -> table lookup.
// Throws Error("UnknownAgent") for indices outside the instance.
Rational psi_value(const PsiTable& table, Agent g);

// The state value on the triple (u, g, v): 0 unless u = v, else
// |X|^{-|u|} psi(g).
Rational kms_value(const PsiTable& table, const Word& u, Agent g, const Word& v);

struct TruncationRow {
  BigInt count;    // fixed words at the given depth
  Rational ratio;  // count / |X|^depth
  Rational psi;
  Rational gap;    // ratio - psi, exact
};

// Convergence oracle: the depth-n fixed ratio, which is always >= psi(g) and
// nonincreasing in n (each asserted here against depth+1).
TruncationRow truncation_check(const MultispinalInstance& instance,
                               const PsiTable& table, Agent g, int depth);

}  // namespace multispinal
