#include "multispinal/selftest.hpp"

#include <optional>
#include <string>
#include <vector>

#include "multispinal/action.hpp"
#include "multispinal/analysis.hpp"
#include "multispinal/fixtures.hpp"
#include "multispinal/psi.hpp"

namespace multispinal {

namespace {

std::string join_rationals(const std::vector<Rational>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s;
}

std::string join_strings(const std::vector<std::string>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i];
  }
  return s;
}

std::string matrix_str(const RationalMatrix& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) s += ",";
    s += "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += to_string(m.at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

std::string matrix_str(const IntMatrix& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows; ++i) {
    if (i) s += ",";
    s += "[";
    for (int j = 0; j < m.cols; ++j) {
      if (j) s += ",";
      s += to_string(m.at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

std::string witness_str(const MultispinalInstance& inst,
                        const std::optional<NonHausdorffWitness>& w) {
  if (!w) return "none";
  std::string s = inst.agent_label(w->agent) + " period=";
  for (int l : w->period) s += inst.alphabet()[static_cast<size_t>(l)];
  s += " escape=" + inst.alphabet()[static_cast<size_t>(w->escape_letter)] + " phases=";
  for (size_t i = 0; i < w->phases.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w->phases[i]);
  }
  return s;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::vector<SelftestLine> run_selftest() {
  std::vector<SelftestLine> lines;
  auto check = [&lines](const std::string& name, const std::string& expected,
                        const std::string& actual) {
    lines.push_back({name, expected == actual, "expected " + expected + ", got " + actual});
  };

  struct Frozen {
    std::string name;
    std::string psi;
    std::string system;
    std::string rhs;
    std::string scale;
    std::string scaled;
    std::string det;
    bool invertible;
    std::string verdict;
    bool kirchberg;
    int closure_size;
    std::string nucleus;
    std::string witness;
  };

  // Published values of the bundled instances; any drift here is a defect in
  // the pipeline, never in the input.
  const std::vector<Frozen> frozen = {
      {"grigorchuk",
       "1,1/7,2/7,4/7",
       "[[2,-1,0],[0,2,-1],[-1,0,2]]",
       "0,0,1",
       "7",
       "[[7,1,2,4],[1,7,4,2],[2,4,7,1],[4,2,1,7]]",
       "896",
       true,
       "Simple",
       true,
       3,
       "1,A:b,A:c,A:d,B:a",
       "A:d period=1 escape=0 phases=0"},
      {"nonsimple-variant",
       "1,1/3,0,2/3",
       "[[2,0,-1],[0,1,0],[-1,0,2]]",
       "0,0,1",
       "3",
       "[[3,1,0,2],[1,3,2,0],[0,2,3,1],[2,0,1,3]]",
       "0",
       false,
       "NotSimple",
       false,
       2,
       "1,A:b,A:c,A:d,B:a",
       "A:d period=1 escape=0 phases=0"},
      {"z3z3",
       "1,1/14,4/7,1/7,3/14,1/14,4/7,1/7,3/14",
       "[[2,0,-1,0,0,0,0,0],[0,2,-1,0,0,0,0,0],[0,0,3,-1,0,0,0,-1],[0,-1,0,3,-1,0,0,0],"
       "[0,0,0,0,2,0,-1,0],[0,0,0,0,0,2,-1,0],[0,0,0,-1,0,0,3,-1],[-1,0,0,0,0,-1,0,3]]",
       "0,1,0,0,0,1,0,0",
       "14",
       "[[14,1,8,2,3,1,8,2,3],[1,14,3,8,2,1,2,3,8],[8,3,14,1,1,2,8,3,2],"
       "[2,8,1,14,1,3,3,2,8],[3,2,1,1,14,8,2,8,3],[1,1,2,3,8,14,3,8,2],"
       "[8,2,8,3,2,3,14,1,1],[2,3,3,2,8,8,1,14,1],[3,8,2,8,3,2,1,1,14]]",
       "634894848",
       true,
       "Simple",
       true,
       8,
       "1,A:a2,A:a1,A:a3,A:a4,A:a6,A:a5,A:a7,A:a8,B:1,B:2",
       "A:a1 period=0 escape=2 phases=0"},
  };

  for (const Frozen& f : frozen) {
    MultispinalInstance inst = fixture_instance(f.name);
    AnalysisReport report = analyze(inst);
    check(f.name + ".psi", f.psi, join_rationals(report.psi_values));
    check(f.name + ".system", f.system, matrix_str(report.psi_system));
    check(f.name + ".rhs", f.rhs, join_rationals(report.psi_rhs));
    check(f.name + ".scale", f.scale, to_string(report.scale));
    check(f.name + ".scaled-matrix", f.scaled, matrix_str(report.scaled));
    check(f.name + ".determinant", f.det, to_string(report.scaled_determinant));
    check(f.name + ".matrix-criterion", bool_str(f.invertible), bool_str(report.matrix_criterion));
    check(f.name + ".kernel-criterion", bool_str(f.invertible), bool_str(report.kernel_criterion));
    check(f.name + ".amenability", "Established", amenability_string(report.amenability));
    check(f.name + ".verdict", f.verdict, verdict_string(report.verdict));
    check(f.name + ".kirchberg", bool_str(f.kirchberg), bool_str(report.kirchberg));
    check(f.name + ".closure-size", std::to_string(f.closure_size),
          std::to_string(report.closure_size));
    check(f.name + ".nucleus", f.nucleus, join_strings(report.nucleus));
    check(f.name + ".witness", f.witness, witness_str(inst, report.witness));
  }

  // Germ facts: d differs from the identity as a germ at 1^inf, yet agrees
  // with it on the cylinder 1110 (and not on 11); the depth-12 fixed ratio
  // of b overshoots psi(b) by exactly 3/14336.
  {
    MultispinalInstance inst = fixture_instance("grigorchuk");
    const Agent d = inst.a_agent(inst.A()->index_of("d"));
    const Agent b = inst.a_agent(inst.A()->index_of("b"));
    GermVerdict germ = decide_germ(inst, d, Agent::identity(), {{}, {1}});
    check("grigorchuk.germ-d-vs-identity-on-1^inf", "DifferentGerm",
          germ.kind == GermVerdict::Kind::DifferentGerm
              ? "DifferentGerm"
              : (germ.kind == GermVerdict::Kind::Equal ? "Equal" : "DifferentImage"));
    check("grigorchuk.cylinder-1110", "true",
          bool_str(agrees_on_cylinder(inst, d, Agent::identity(), Word{1, 1, 1, 0})));
    check("grigorchuk.cylinder-11", "false",
          bool_str(agrees_on_cylinder(inst, d, Agent::identity(), Word{1, 1})));
    PsiTable table = solve_psi(inst);
    TruncationRow row = truncation_check(inst, table, b, 12);
    check("grigorchuk.truncation-b-depth-12", "count=586 ratio=293/2048 gap=3/14336",
          "count=" + to_string(row.count) + " ratio=" + to_string(row.ratio) +
              " gap=" + to_string(row.gap));
  }

  return lines;
}

}  // namespace multispinal
