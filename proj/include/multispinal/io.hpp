#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "multispinal/analysis.hpp"
#include "multispinal/instance.hpp"

namespace multispinal {

using Json = nlohmann::ordered_json;

// Instance documents are JSON: group specs for A and B (either
// {"kind":"cyclic_product","orders":[...]} or
// {"kind":"table","elements":[...],"table":[[...]]}), the ordered alphabet,
// the action as B-label -> alphabet permutation, and psi as letter ->
// {"kind":"aut"|"hom","map":{label:label}}. Malformed documents throw
// Error("ParseError"); well-formed documents that fail validation throw
// Error("ValidationError") wrapping the module error.
MultispinalInstance instance_from_json(const std::string& text);
MultispinalInstance load_instance(const std::string& path);

// Canonical table-kind document for a validated instance; feeding it back to
// instance_from_json reproduces the same instance.
std::string instance_to_json(const MultispinalInstance& instance);

// Report serialization. Canonical bytes are deterministic: stable key order,
// rationals as canonical "p/q" strings, big integers as decimal strings, no
// floats, trailing newline. Timing is emitted only on request and never in
// the canonical form.
Json report_to_json(const AnalysisReport& report, bool include_timing = false);
std::string render_report_json(const AnalysisReport& report);
AnalysisReport report_from_json(const Json& j);
std::string render_report_text(const AnalysisReport& report, bool emit_matrix);

// Equality on the canonical serialization (timing excluded).
bool reports_equal(const AnalysisReport& lhs, const AnalysisReport& rhs);

}  // namespace multispinal
