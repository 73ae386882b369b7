#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "multispinal/analysis.hpp"
#include "multispinal/errors.hpp"
#include "multispinal/fixtures.hpp"
#include "multispinal/io.hpp"
#include "multispinal/matrix.hpp"
#include "multispinal/random_instances.hpp"
#include "multispinal/selftest.hpp"

namespace {

using namespace multispinal;

bool is_fixture_name(const std::string& arg) {
  if (arg == "gupta-variant") return true;
  for (const std::string& name : fixture_names())
    if (name == arg) return true;
  return false;
}

// A path wins over a bundled name; a bundled name needs no file on disk.
MultispinalInstance resolve_instance(const std::string& arg) {
  if (!std::filesystem::exists(arg) && is_fixture_name(arg)) return fixture_instance(arg);
  return load_instance(arg);
}

WitnessBounds parse_witness_bound(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw Error("ParseError", "--witness-bound expects P,Q (period,preperiod)");
  WitnessBounds bounds;
  try {
    bounds.max_period = std::stoi(text.substr(0, comma));
    bounds.max_preperiod = std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw Error("ParseError", "--witness-bound expects two integers P,Q");
  }
  if (bounds.max_period < 0 || bounds.max_preperiod < 0)
    throw Error("ParseError", "--witness-bound values must be nonnegative");
  return bounds;
}

void emit_error(bool json_mode, const Error& e) {
  if (json_mode) {
    Json payload;
    payload["error"]["kind"] = e.kind();
    payload["error"]["message"] = e.what();
    std::cout << payload.dump(2) << "\n";
  }
  std::cerr << "error: " << e.what() << "\n";
}

int run_analyze(const std::string& file, bool json_mode, int truncation_depth,
                const std::string& witness_bound, bool emit_matrix) {
  AnalyzeOptions options;
  options.truncation_depth = truncation_depth;
  options.witness = parse_witness_bound(witness_bound);
  options.witness_search = options.witness.max_period > 0;
  MultispinalInstance instance = resolve_instance(file);
  AnalysisReport report = analyze(instance, options);
  std::cout << (json_mode ? render_report_json(report) : render_report_text(report, emit_matrix));
  return 0;
}

int run_check(const std::string& file) {
  MultispinalInstance instance = resolve_instance(file);
  std::cout << "valid: |A|=" << instance.A()->order() << " |B|=" << instance.B()->order()
            << " |X|=" << instance.alphabet_size()
            << " hom-letters=" << instance.y_letters().size()
            << " closure=" << instance.closure().size() << "\n";
  return 0;
}

int run_selftest_cmd() {
  const std::vector<SelftestLine> lines = run_selftest();
  int failures = 0;
  for (const SelftestLine& line : lines) {
    if (line.pass) {
      std::cout << "ok " << line.name << "\n";
    } else {
      std::cout << "FAIL " << line.name << " (" << line.detail << ")\n";
      ++failures;
    }
  }
  std::cout << lines.size() << " checks, " << failures << " failures\n";
  return failures == 0 ? 0 : 2;
}

int run_property(int count, std::uint64_t seed) {
  const std::vector<MultispinalInstance> instances = random_instances(count, seed);
  AnalyzeOptions options;
  options.truncation_depth = 0;
  options.witness_search = false;
  int simple = 0, notsimple = 0, conditional = 0;
  for (const MultispinalInstance& instance : instances) {
    const AnalysisReport report = analyze(instance, options);  // asserts criteria agreement
    if (!report.gram.is_symmetric())
      throw Defect("GramInvariantViolated", "gram matrix not symmetric");
    for (int i = 0; i < report.gram.rows(); ++i)
      for (int j = 0; j < report.gram.cols(); ++j) {
        const Rational& v = report.gram.at(i, j);
        if (v < 0 || v > 1)
          throw Defect("GramInvariantViolated", "gram entry outside [0,1]: " + to_string(v));
      }
    if (!is_psd(report.gram))
      throw Defect("GramInvariantViolated", "gram matrix not positive semidefinite");
    if (report.kirchberg != (report.verdict == Verdict::Simple))
      throw Defect("GramInvariantViolated", "kirchberg flag out of step with the verdict");
    switch (report.verdict) {
      case Verdict::Simple: ++simple; break;
      case Verdict::NotSimple: ++notsimple; break;
      default: ++conditional; break;
    }
  }
  std::cout << "ok: " << instances.size()
            << " instances, both criteria agreed on every one (simple=" << simple
            << " not-simple=" << notsimple << " conditional=" << conditional << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decides simplicity of the Cuntz-Pimsner algebra of a multispinal instance"};
  app.require_subcommand(1);

  std::string analyze_file;
  std::string format = "text";
  std::string witness_bound = "3,4";
  int truncation_depth = 12;
  bool emit_matrix = false;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "analyze an instance and print the report");
  analyze_cmd->add_option("file", analyze_file, "instance JSON file (or bundled fixture name)")
      ->required();
  analyze_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--truncation-depth", truncation_depth,
                          "fixed-ratio convergence depth, 0 disables");
  analyze_cmd->add_option("--witness-bound", witness_bound,
                          "witness search bounds as period,preperiod (0,0 disables)");
  analyze_cmd->add_flag("--emit-matrix", emit_matrix,
                        "include the gram and scaled matrices in text output");

  std::string check_file;
  CLI::App* check_cmd = app.add_subcommand("check", "validate an instance file and exit");
  check_cmd->add_option("file", check_file, "instance JSON file (or bundled fixture name)")
      ->required();

  CLI::App* selftest_cmd = app.add_subcommand(
      "selftest", "re-derive the published values of the bundled instances");

  std::uint64_t seed = 42;
  int count = 200;
  CLI::App* property_cmd = app.add_subcommand(
      "property", "randomized campaign: the two simplicity criteria must agree");
  property_cmd->add_option("--seed", seed, "generator seed");
  property_cmd->add_option("--count", count, "number of instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const bool json_mode = analyze_cmd->parsed() && format == "json";
  try {
    if (analyze_cmd->parsed())
      return run_analyze(analyze_file, json_mode, truncation_depth, witness_bound, emit_matrix);
    if (check_cmd->parsed()) return run_check(check_file);
    if (selftest_cmd->parsed()) return run_selftest_cmd();
    if (property_cmd->parsed()) return run_property(count, seed);
  } catch (const Defect& d) {
    emit_error(json_mode, d);
    return 2;
  } catch (const Error& e) {
    emit_error(json_mode, e);
    return 1;
  }
  return 0;
}
