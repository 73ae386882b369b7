#include "multispinal/analysis.hpp"

#include <chrono>

namespace multispinal {

std::string verdict_string(Verdict v) {
  switch (v) {
    case Verdict::Simple:
      return "Simple";
    case Verdict::NotSimple:
      return "NotSimple";
    case Verdict::ConditionalSimple:
      return "ConditionalOnAmenability-Simple";
    case Verdict::ConditionalNotSimple:
      return "ConditionalOnAmenability-NotSimple";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "Simple") return Verdict::Simple;
  if (s == "NotSimple") return Verdict::NotSimple;
  if (s == "ConditionalOnAmenability-Simple") return Verdict::ConditionalSimple;
  if (s == "ConditionalOnAmenability-NotSimple") return Verdict::ConditionalNotSimple;
  throw Error("ParseError", "unknown verdict \"" + s + "\"");
}

std::string amenability_string(Amenability a) {
  return a == Amenability::Established ? "Established" : "Unknown";
}

Amenability amenability_from_string(const std::string& s) {
  if (s == "Established") return Amenability::Established;
  if (s == "Unknown") return Amenability::Unknown;
  throw Error("ParseError", "unknown amenability flag \"" + s + "\"");
}

RationalMatrix gram_matrix(const MultispinalInstance& instance, const PsiTable& table) {
  const auto& a = *instance.A();
  const int n = a.order();
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      m.at(i, j) = table.values[static_cast<size_t>(a.mul(a.inv(i), j))];
  }
  for (int i = 0; i < n; ++i) {
    if (m.at(i, i) != 1)
      throw Defect("GramInvariantViolated", "diagonal entry is not 1 at " + a.label(i));
    for (int j = i + 1; j < n; ++j) {
      if (m.at(i, j) != m.at(j, i))
        throw Defect("GramInvariantViolated", "psi(a^-1 b) != psi(b^-1 a) at (" + a.label(i) +
                                                  ", " + a.label(j) + ")");
    }
  }
  return m;
}

std::pair<BigInt, IntMatrix> scaled_integer_form(const RationalMatrix& M) {
  return integer_form(M);
}

bool matrix_criterion(const MultispinalInstance& instance, const PsiTable& table) {
  RationalMatrix m = gram_matrix(instance, table);
  auto [scale, scaled] = integer_form(m);
  (void)scale;
  return determinant(scaled) != 0;
}

bool kernel_criterion(const MultispinalInstance& instance) {
  const int a_order = instance.A()->order();
  const int b_order = instance.B()->order();
  const auto& closure = instance.closure();
  RationalMatrix stacked(static_cast<int>(closure.size()) * b_order, a_order);
  int block = 0;
  for (const auto& lambda : closure) {
    for (int col = 0; col < a_order; ++col) stacked.at(block + lambda(col), col) = 1;
    block += b_order;
  }
  return rank(stacked) == a_order;
}

AnalysisReport analyze(const MultispinalInstance& instance, const AnalyzeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport report;

  const auto& a = *instance.A();
  report.a_order = a.order();
  report.b_order = instance.B()->order();
  report.alphabet_size = instance.alphabet_size();
  report.alphabet = instance.alphabet();
  for (int y : instance.y_letters())
    report.y_letters.push_back(instance.alphabet()[static_cast<size_t>(y)]);
  report.a_elements = a.labels();
  report.closure_size = static_cast<int>(instance.closure().size());
  report.nucleus_size = static_cast<int>(instance.nucleus().size());
  for (const Agent& g : instance.nucleus()) report.nucleus.push_back(instance.agent_label(g));

  PsiTable table = solve_psi(instance);
  report.psi_system = table.system;
  report.psi_rhs = table.rhs;
  report.psi_values = table.values;

  report.gram = gram_matrix(instance, table);
  auto [scale, scaled] = integer_form(report.gram);
  report.scale = scale;
  report.scaled = std::move(scaled);
  report.scaled_determinant = determinant(report.scaled);

  report.matrix_criterion = (report.scaled_determinant != 0);
  report.kernel_criterion = kernel_criterion(instance);
  report.criteria_agree = (report.matrix_criterion == report.kernel_criterion);
  if (!report.criteria_agree)
    throw Defect("CriteriaDisagreement",
                 std::string("matrix criterion says ") +
                     (report.matrix_criterion ? "invertible" : "singular") +
                     " but kernel criterion says " +
                     (report.kernel_criterion ? "trivial intersection" : "joint kernel"));

  report.amenability = instance.amenability();
  if (report.amenability == Amenability::Established)
    report.verdict = report.matrix_criterion ? Verdict::Simple : Verdict::NotSimple;
  else
    report.verdict =
        report.matrix_criterion ? Verdict::ConditionalSimple : Verdict::ConditionalNotSimple;
  report.kirchberg = (report.verdict == Verdict::Simple);

  if (options.witness_search)
    report.witness = find_nonhausdorff_witness(instance, options.witness);

  report.truncation_depth = options.truncation_depth;
  if (options.truncation_depth > 0) {
    for (int e = 0; e < a.order(); ++e) {
      if (e == a.identity()) continue;
      Agent g = instance.a_agent(e);
      TruncationRow row = truncation_check(instance, table, g, options.truncation_depth);
      report.truncation.push_back(TruncationReportRow{instance.agent_label(g),
                                                      options.truncation_depth, row.count,
                                                      row.ratio, row.psi, row.gap});
    }
  }

  report.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace multispinal
