#include "multispinal/psi.hpp"

#include <vector>

namespace multispinal {

PsiTable solve_psi(const MultispinalInstance& instance) {
  const auto& a = *instance.A();
  const int n = a.order();
  const int x = instance.alphabet_size();
  const int id = a.identity();

  // unknown index for each nontrivial element, in declared order
  std::vector<int> unknown_of(static_cast<size_t>(n), -1);
  std::vector<int> element_of;
  for (int e = 0; e < n; ++e) {
    if (e == id) continue;
    unknown_of[static_cast<size_t>(e)] = static_cast<int>(element_of.size());
    element_of.push_back(e);
  }
  const int k = static_cast<int>(element_of.size());

  // |X| psi(a) - sum over aut letters of psi(psi_letter(a)) = #{y : psi_y(a) = 1_B}
  RationalMatrix system(k, k);
  std::vector<Rational> rhs(static_cast<size_t>(k), Rational(0));
  const int b_id = instance.B()->identity();
  for (int row = 0; row < k; ++row) {
    const int e = element_of[static_cast<size_t>(row)];
    system.at(row, row) += Rational(x);
    for (int letter : instance.aut_letters()) {
      int image = instance.psi_at(letter).map(e);
      // automorphisms send nontrivial elements to nontrivial elements
      system.at(row, unknown_of[static_cast<size_t>(image)]) -= 1;
    }
    for (int letter : instance.y_letters()) {
      if (instance.psi_at(letter).map(e) == b_id) rhs[static_cast<size_t>(row)] += 1;
    }
  }

  std::vector<Rational> solution;
  try {
    solution = solve(system, rhs);
  } catch (const Error& e) {
    // |X| I - T is strictly diagonally dominant (T rows sum to |X| - |Y|),
    // so a singular system can only mean an implementation fault.
    throw Defect("InternalSingular", std::string("psi system: ") + e.what());
  }

  PsiTable table;
  table.a_order = n;
  table.b_order = instance.B()->order();
  table.alphabet_size = x;
  table.system = std::move(system);
  table.rhs = std::move(rhs);
  table.values.assign(static_cast<size_t>(n), Rational(0));
  table.values[static_cast<size_t>(id)] = 1;
  for (int i = 0; i < k; ++i) {
    const Rational& v = solution[static_cast<size_t>(i)];
    if (v < 0 || v > 1)
      throw Defect("PsiOutOfRange", "psi(" + a.label(element_of[static_cast<size_t>(i)]) +
                                        ") = " + to_string(v) + " outside [0, 1]");
    table.values[static_cast<size_t>(element_of[static_cast<size_t>(i)])] = v;
  }
  return table;
}

Rational psi_value(const PsiTable& table, Agent g) {
  switch (g.side) {
    case Side::Identity:
      return Rational(1);
    case Side::Aut:
      if (g.element < 0 || g.element >= table.a_order)
        throw Error("UnknownAgent", "A index " + std::to_string(g.element) + " out of range");
      return table.values[static_cast<size_t>(g.element)];
    case Side::Perm:
      if (g.element < 0 || g.element >= table.b_order)
        throw Error("UnknownAgent", "B index " + std::to_string(g.element) + " out of range");
      return Rational(0);  // freeness: a nontrivial letter permutation fixes nothing
  }
  throw Error("UnknownAgent", "unrecognized agent side");
}

Rational kms_value(const PsiTable& table, const Word& u, Agent g, const Word& v) {
  for (int letter : u) {
    if (letter < 0 || letter >= table.alphabet_size)
      throw Error("BadWord", "letter index " + std::to_string(letter) + " outside alphabet");
  }
  for (int letter : v) {
    if (letter < 0 || letter >= table.alphabet_size)
      throw Error("BadWord", "letter index " + std::to_string(letter) + " outside alphabet");
  }
  if (u != v) return Rational(0);
  Rational weight(1);
  for (size_t i = 0; i < u.size(); ++i) weight /= table.alphabet_size;
  return weight * psi_value(table, g);
}

TruncationRow truncation_check(const MultispinalInstance& instance, const PsiTable& table,
                               Agent g, int depth) {
  if (depth < 0) throw Error("BadDepth", "depth must be nonnegative");

  BigInt total = 1;  // |X|^depth
  for (int i = 0; i < depth; ++i) total *= instance.alphabet_size();

  TruncationRow row;
  row.count = fixed_count(instance, g, depth);
  row.ratio = make_rational(row.count, total);
  row.psi = psi_value(table, g);
  row.gap = row.ratio - row.psi;
  if (row.gap < 0)
    throw Defect("TruncationViolated", "fixed ratio at depth " + std::to_string(depth) +
                                           " fell below psi for " + instance.agent_label(g));

  BigInt next_count = fixed_count(instance, g, depth + 1);
  Rational next_ratio = make_rational(next_count, total * instance.alphabet_size());
  if (next_ratio - row.psi > row.gap)
    throw Defect("TruncationViolated", "fixed ratio increased from depth " +
                                           std::to_string(depth) + " to " +
                                           std::to_string(depth + 1) + " for " +
                                           instance.agent_label(g));
  return row;
}

}  // namespace multispinal
