#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multispinal/action.hpp"
#include "multispinal/instance.hpp"
#include "multispinal/matrix.hpp"
#include "multispinal/psi.hpp"

namespace multispinal {

enum class Verdict { Simple, NotSimple, ConditionalSimple, ConditionalNotSimple };

// "Simple", "NotSimple", "ConditionalOnAmenability-Simple",
// "ConditionalOnAmenability-NotSimple" (the report strings).
std::string verdict_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

std::string amenability_string(Amenability a);
Amenability amenability_from_string(const std::string& s);

struct AnalyzeOptions {
  int truncation_depth = 12;  // 0 disables the truncation block
  WitnessBounds witness;
  bool witness_search = true;
};

struct TruncationReportRow {
  std::string agent;
  int depth = 0;
  BigInt count;
  Rational ratio;
  Rational psi;
  Rational gap;
};

struct AnalysisReport {
  // instance summary
  int a_order = 0;
  int b_order = 0;
  int alphabet_size = 0;
  std::vector<std::string> alphabet;
  std::vector<std::string> y_letters;
  std::vector<std::string> a_elements;
  int closure_size = 0;
  int nucleus_size = 0;
  std::vector<std::string> nucleus;

  // psi
  RationalMatrix psi_system{1, 1};
  std::vector<Rational> psi_rhs;
  std::vector<Rational> psi_values;  // by A element, declared order

  // gram
  RationalMatrix gram{1, 1};
  BigInt scale;
  IntMatrix scaled;
  BigInt scaled_determinant;

  // criteria and verdict
  bool matrix_criterion = false;
  bool kernel_criterion = false;
  bool criteria_agree = false;
  Amenability amenability = Amenability::Unknown;
  Verdict verdict = Verdict::ConditionalNotSimple;
  bool kirchberg = false;

  std::optional<NonHausdorffWitness> witness;
  std::vector<TruncationReportRow> truncation;
  int truncation_depth = 0;

  // Wall-clock diagnostics only; excluded from canonical serialization so
  // identical inputs produce byte-identical reports.
  long long elapsed_us = 0;
};

// M[i][j] = psi(a_i^-1 a_j) in the declared order of A. Symmetric with unit
// diagonal (asserted).
RationalMatrix gram_matrix(const MultispinalInstance& instance, const PsiTable& table);

// Least common denominator and the cleared integer matrix (= scale * M).
std::pair<BigInt, IntMatrix> scaled_integer_form(const RationalMatrix& M);

// det [psi(a_i^-1 a_j)] != 0.
bool matrix_criterion(const MultispinalInstance& instance, const PsiTable& table);

// Independent check: stack, over every map lambda in the hom-closure, the
// |B| x |A| zero-one matrix with a single 1 per column at row lambda(a); the
// kernels of the linearized maps intersect trivially iff the stack has full
// column rank |A|.
bool kernel_criterion(const MultispinalInstance& instance);

// Full pipeline. The two criteria must agree (they are provably equivalent);
// disagreement throws Defect("CriteriaDisagreement"). The verdict asserts
// Simple/NotSimple only under an Established amenability flag and reports
// conditionally otherwise; kirchberg accompanies an unconditional Simple.
AnalysisReport analyze(const MultispinalInstance& instance,
                       const AnalyzeOptions& options = {});

}  // namespace multispinal
