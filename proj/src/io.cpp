#include "multispinal/io.hpp"

#include <fstream>
#include <sstream>

namespace multispinal {

namespace {

const Json& require_key(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw Error("ParseError", where + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) throw Error("ParseError", where + " is missing key \"" + key + "\"");
  return *it;
}

std::string require_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw Error("ParseError", where + " must be a string");
  return j.get<std::string>();
}

int require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw Error("ParseError", where + " must be an integer");
  return j.get<int>();
}

bool require_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean()) throw Error("ParseError", where + " must be a boolean");
  return j.get<bool>();
}

const Json& require_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw Error("ParseError", where + " must be an array");
  return j;
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  require_array(j, where);
  std::vector<std::string> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(require_string(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

GroupPtr parse_group(const Json& j, const std::string& where) {
  std::string kind = require_string(require_key(j, "kind", where), where + ".kind");
  if (kind == "cyclic_product") {
    const Json& orders_json = require_array(require_key(j, "orders", where), where + ".orders");
    std::vector<int> orders;
    for (size_t i = 0; i < orders_json.size(); ++i)
      orders.push_back(require_int(orders_json[i], where + ".orders[" + std::to_string(i) + "]"));
    return cyclic_product(orders);
  }
  if (kind == "table") {
    std::vector<std::string> elements =
        string_list(require_key(j, "elements", where), where + ".elements");
    const Json& table_json = require_array(require_key(j, "table", where), where + ".table");
    std::vector<std::vector<int>> table;
    for (size_t i = 0; i < table_json.size(); ++i) {
      const std::string row_where = where + ".table[" + std::to_string(i) + "]";
      const Json& row_json = require_array(table_json[i], row_where);
      std::vector<int> row;
      for (size_t k = 0; k < row_json.size(); ++k)
        row.push_back(require_int(row_json[k], row_where + "[" + std::to_string(k) + "]"));
      table.push_back(std::move(row));
    }
    return FiniteGroup::validate(std::move(elements), std::move(table));
  }
  throw Error("ParseError", where + ".kind must be \"cyclic_product\" or \"table\"");
}

int letter_index(const std::vector<std::string>& alphabet, const std::string& letter,
                 const std::string& where) {
  for (size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet[i] == letter) return static_cast<int>(i);
  }
  throw Error("ValidationError", where + ": \"" + letter + "\" is not an alphabet letter");
}

int element_index(const FiniteGroup& g, const std::string& label, const std::string& where) {
  int idx = g.index_of(label);
  if (idx < 0)
    throw Error("ValidationError", where + ": \"" + label + "\" is not a declared element");
  return idx;
}

Json rational_rows(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json integer_rows(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix rational_rows_back(const Json& j, const std::string& where) {
  require_array(j, where);
  int rows = static_cast<int>(j.size());
  if (rows == 0) throw Error("ParseError", where + " must be nonempty");
  int cols = static_cast<int>(require_array(j[0], where + "[0]").size());
  RationalMatrix m(rows, cols > 0 ? cols : 1);
  if (cols == 0) throw Error("ParseError", where + " rows must be nonempty");
  for (int i = 0; i < rows; ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    const Json& row = require_array(j[static_cast<size_t>(i)], row_where);
    if (static_cast<int>(row.size()) != cols)
      throw Error("ParseError", row_where + " has inconsistent length");
    for (int k = 0; k < cols; ++k)
      m.at(i, k) = rational_from_string(
          require_string(row[static_cast<size_t>(k)], row_where + "[" + std::to_string(k) + "]"));
  }
  return m;
}

IntMatrix integer_rows_back(const Json& j, const std::string& where) {
  require_array(j, where);
  int rows = static_cast<int>(j.size());
  if (rows == 0) throw Error("ParseError", where + " must be nonempty");
  int cols = static_cast<int>(require_array(j[0], where + "[0]").size());
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    const Json& row = require_array(j[static_cast<size_t>(i)], row_where);
    if (static_cast<int>(row.size()) != cols)
      throw Error("ParseError", row_where + " has inconsistent length");
    for (int k = 0; k < cols; ++k)
      m.at(i, k) = bigint_from_string(
          require_string(row[static_cast<size_t>(k)], row_where + "[" + std::to_string(k) + "]"));
  }
  return m;
}

}  // namespace

MultispinalInstance instance_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("ParseError", e.what());
  }
  if (!doc.is_object()) throw Error("ParseError", "document must be an object");

  const Json& a_spec = require_key(doc, "A", "document");
  const Json& b_spec = require_key(doc, "B", "document");
  std::vector<std::string> alphabet =
      string_list(require_key(doc, "alphabet", "document"), "alphabet");
  const Json& action_json = require_key(doc, "action", "document");
  if (!action_json.is_object()) throw Error("ParseError", "action must be an object");
  const Json& psi_json = require_key(doc, "psi", "document");
  if (!psi_json.is_object()) throw Error("ParseError", "psi must be an object");

  // shape of psi entries checked before any semantic resolution
  for (const auto& [letter, entry] : psi_json.items()) {
    std::string kind = require_string(require_key(entry, "kind", "psi[\"" + letter + "\"]"),
                                      "psi[\"" + letter + "\"].kind");
    if (kind != "aut" && kind != "hom")
      throw Error("ParseError", "psi[\"" + letter + "\"].kind must be \"aut\" or \"hom\"");
    const Json& map = require_key(entry, "map", "psi[\"" + letter + "\"]");
    if (!map.is_object())
      throw Error("ParseError", "psi[\"" + letter + "\"].map must be an object");
    for (const auto& [from, to] : map.items())
      require_string(to, "psi[\"" + letter + "\"].map[\"" + from + "\"]");
  }
  for (const auto& [label, perm] : action_json.items())
    string_list(perm, "action[\"" + label + "\"]");

  try {
    GroupPtr A = parse_group(a_spec, "A");
    GroupPtr B = parse_group(b_spec, "B");

    for (const auto& [label, perm] : action_json.items()) {
      (void)perm;
      element_index(*B, label, "action");
    }
    std::vector<std::vector<int>> perms;
    for (int b = 0; b < B->order(); ++b) {
      const std::string& label = B->label(b);
      auto it = action_json.find(label);
      if (it == action_json.end())
        throw Error("ValidationError", "action is missing element \"" + label + "\"");
      std::vector<std::string> images = string_list(*it, "action[\"" + label + "\"]");
      if (images.size() != alphabet.size())
        throw Error("ValidationError",
                    "action[\"" + label + "\"] must list an image for every letter");
      std::vector<int> perm;
      for (const std::string& image : images)
        perm.push_back(letter_index(alphabet, image, "action[\"" + label + "\"]"));
      perms.push_back(std::move(perm));
    }
    FiniteAction action(B, alphabet, std::move(perms));

    for (const auto& [letter, entry] : psi_json.items()) {
      (void)entry;
      letter_index(alphabet, letter, "psi");
    }
    std::vector<PsiEntry> psi;
    for (const std::string& letter : alphabet) {
      auto it = psi_json.find(letter);
      if (it == psi_json.end())
        throw Error("ValidationError", "psi is missing letter \"" + letter + "\"");
      const std::string where = "psi[\"" + letter + "\"]";
      bool is_aut = require_string((*it)["kind"], where + ".kind") == "aut";
      const Json& map_json = (*it)["map"];
      const GroupPtr& target = is_aut ? A : B;
      std::vector<int> map(static_cast<size_t>(A->order()), -1);
      for (const auto& [from, to] : map_json.items()) {
        int src = element_index(*A, from, where + ".map");
        map[static_cast<size_t>(src)] =
            element_index(*target, require_string(to, where + ".map value"), where + ".map");
      }
      for (int e = 0; e < A->order(); ++e) {
        if (map[static_cast<size_t>(e)] < 0)
          throw Error("ValidationError",
                      where + ".map is missing element \"" + A->label(e) + "\"");
      }
      psi.push_back(PsiEntry{is_aut ? PsiKind::Aut : PsiKind::Hom,
                             Homomorphism(A, target, std::move(map))});
    }

    return MultispinalInstance::build(A, B, std::move(action), std::move(psi));
  } catch (const Defect&) {
    throw;
  } catch (const Error& e) {
    // shape problems keep their ParseError kind; module errors become
    // ValidationError with the original kind in the detail
    if (e.kind() == "ValidationError" || e.kind() == "ParseError") throw;
    throw Error("ValidationError", e.what());
  }
}

MultispinalInstance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("ParseError", "cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return instance_from_json(buffer.str());
}

std::string instance_to_json(const MultispinalInstance& instance) {
  Json doc;
  const auto& a = *instance.A();
  const auto& b = *instance.B();
  doc["A"] = Json{{"kind", "table"}, {"elements", a.labels()}, {"table", a.table()}};
  doc["B"] = Json{{"kind", "table"}, {"elements", b.labels()}, {"table", b.table()}};
  doc["alphabet"] = instance.alphabet();

  Json action = Json::object();
  for (int e = 0; e < b.order(); ++e) {
    Json images = Json::array();
    for (int letter = 0; letter < instance.alphabet_size(); ++letter)
      images.push_back(
          instance.alphabet()[static_cast<size_t>(instance.action().apply(e, letter))]);
    action[b.label(e)] = std::move(images);
  }
  doc["action"] = std::move(action);

  Json psi = Json::object();
  for (int letter = 0; letter < instance.alphabet_size(); ++letter) {
    const PsiEntry& entry = instance.psi_at(letter);
    const FiniteGroup& target = entry.kind == PsiKind::Aut ? a : b;
    Json map = Json::object();
    for (int e = 0; e < a.order(); ++e) map[a.label(e)] = target.label(entry.map(e));
    psi[instance.alphabet()[static_cast<size_t>(letter)]] =
        Json{{"kind", entry.kind == PsiKind::Aut ? "aut" : "hom"}, {"map", std::move(map)}};
  }
  doc["psi"] = std::move(psi);
  return doc.dump(2) + "\n";
}

Json report_to_json(const AnalysisReport& report, bool include_timing) {
  Json j;
  j["format"] = "multispinal-report/1";

  Json inst;
  inst["a_order"] = report.a_order;
  inst["b_order"] = report.b_order;
  inst["alphabet_size"] = report.alphabet_size;
  inst["alphabet"] = report.alphabet;
  inst["y_letters"] = report.y_letters;
  inst["a_elements"] = report.a_elements;
  inst["closure_size"] = report.closure_size;
  inst["nucleus_size"] = report.nucleus_size;
  inst["nucleus"] = report.nucleus;
  j["instance"] = std::move(inst);

  Json psi;
  Json values = Json::object();
  for (size_t i = 0; i < report.a_elements.size(); ++i)
    values[report.a_elements[i]] = to_string(report.psi_values[i]);
  psi["values"] = std::move(values);
  Json rhs = Json::array();
  for (const Rational& q : report.psi_rhs) rhs.push_back(to_string(q));
  psi["system"] = Json{{"matrix", rational_rows(report.psi_system)}, {"rhs", std::move(rhs)}};
  j["psi"] = std::move(psi);

  j["gram"] = Json{{"matrix", rational_rows(report.gram)},
                   {"scale", to_string(report.scale)},
                   {"scaled_matrix", integer_rows(report.scaled)},
                   {"scaled_determinant", to_string(report.scaled_determinant)}};

  j["criteria"] = Json{{"matrix_criterion", report.matrix_criterion},
                       {"kernel_criterion", report.kernel_criterion},
                       {"criteria_agree", report.criteria_agree}};
  j["amenability"] = amenability_string(report.amenability);
  j["verdict"] = verdict_string(report.verdict);
  j["kirchberg"] = report.kirchberg;

  if (report.witness.has_value()) {
    const NonHausdorffWitness& w = *report.witness;
    Json period = Json::array();
    for (int letter : w.period)
      period.push_back(report.alphabet[static_cast<size_t>(letter)]);
    j["witness"] = Json{
        {"agent", "A:" + report.a_elements[static_cast<size_t>(w.agent.element)]},
        {"period", std::move(period)},
        {"escape_letter", report.alphabet[static_cast<size_t>(w.escape_letter)]},
        {"phases", w.phases}};
  } else {
    j["witness"] = nullptr;
  }

  Json truncation = Json::array();
  for (const TruncationReportRow& row : report.truncation) {
    truncation.push_back(Json{{"agent", row.agent},
                              {"depth", row.depth},
                              {"count", to_string(row.count)},
                              {"ratio", to_string(row.ratio)},
                              {"psi", to_string(row.psi)},
                              {"gap", to_string(row.gap)}});
  }
  j["truncation"] = std::move(truncation);
  j["truncation_depth"] = report.truncation_depth;

  if (include_timing) j["timing"] = Json{{"elapsed_us", report.elapsed_us}};
  return j;
}

std::string render_report_json(const AnalysisReport& report) {
  return report_to_json(report, false).dump(2) + "\n";
}

AnalysisReport report_from_json(const Json& j) {
  AnalysisReport report;
  std::string format = require_string(require_key(j, "format", "report"), "report.format");
  if (format != "multispinal-report/1")
    throw Error("ParseError", "unsupported report format \"" + format + "\"");

  const Json& inst = require_key(j, "instance", "report");
  report.a_order = require_int(require_key(inst, "a_order", "instance"), "a_order");
  report.b_order = require_int(require_key(inst, "b_order", "instance"), "b_order");
  report.alphabet_size =
      require_int(require_key(inst, "alphabet_size", "instance"), "alphabet_size");
  report.alphabet = string_list(require_key(inst, "alphabet", "instance"), "alphabet");
  report.y_letters = string_list(require_key(inst, "y_letters", "instance"), "y_letters");
  report.a_elements = string_list(require_key(inst, "a_elements", "instance"), "a_elements");
  report.closure_size = require_int(require_key(inst, "closure_size", "instance"), "closure_size");
  report.nucleus_size = require_int(require_key(inst, "nucleus_size", "instance"), "nucleus_size");
  report.nucleus = string_list(require_key(inst, "nucleus", "instance"), "nucleus");

  const Json& psi = require_key(j, "psi", "report");
  const Json& values = require_key(psi, "values", "psi");
  if (!values.is_object()) throw Error("ParseError", "psi.values must be an object");
  report.psi_values.clear();
  for (const std::string& label : report.a_elements) {
    auto it = values.find(label);
    if (it == values.end())
      throw Error("ParseError", "psi.values is missing element \"" + label + "\"");
    report.psi_values.push_back(rational_from_string(require_string(*it, "psi value")));
  }
  const Json& system = require_key(psi, "system", "psi");
  report.psi_system = rational_rows_back(require_key(system, "matrix", "psi.system"),
                                         "psi.system.matrix");
  report.psi_rhs.clear();
  for (const Json& q : require_array(require_key(system, "rhs", "psi.system"), "psi.system.rhs"))
    report.psi_rhs.push_back(rational_from_string(require_string(q, "psi.system.rhs entry")));

  const Json& gram = require_key(j, "gram", "report");
  report.gram = rational_rows_back(require_key(gram, "matrix", "gram"), "gram.matrix");
  report.scale = bigint_from_string(require_string(require_key(gram, "scale", "gram"), "scale"));
  report.scaled = integer_rows_back(require_key(gram, "scaled_matrix", "gram"),
                                    "gram.scaled_matrix");
  report.scaled_determinant = bigint_from_string(
      require_string(require_key(gram, "scaled_determinant", "gram"), "scaled_determinant"));

  const Json& criteria = require_key(j, "criteria", "report");
  report.matrix_criterion =
      require_bool(require_key(criteria, "matrix_criterion", "criteria"), "matrix_criterion");
  report.kernel_criterion =
      require_bool(require_key(criteria, "kernel_criterion", "criteria"), "kernel_criterion");
  report.criteria_agree =
      require_bool(require_key(criteria, "criteria_agree", "criteria"), "criteria_agree");
  report.amenability = amenability_from_string(
      require_string(require_key(j, "amenability", "report"), "amenability"));
  report.verdict =
      verdict_from_string(require_string(require_key(j, "verdict", "report"), "verdict"));
  report.kirchberg = require_bool(require_key(j, "kirchberg", "report"), "kirchberg");

  const Json& witness = require_key(j, "witness", "report");
  if (!witness.is_null()) {
    NonHausdorffWitness w;
    std::string agent = require_string(require_key(witness, "agent", "witness"), "witness.agent");
    if (agent.rfind("A:", 0) != 0)
      throw Error("ParseError", "witness.agent must name an A element");
    std::string label = agent.substr(2);
    int element = -1;
    for (size_t i = 0; i < report.a_elements.size(); ++i) {
      if (report.a_elements[i] == label) element = static_cast<int>(i);
    }
    if (element < 0) throw Error("ParseError", "witness.agent names an unknown element");
    w.agent = Agent{Side::Aut, element};
    for (const std::string& letter :
         string_list(require_key(witness, "period", "witness"), "witness.period")) {
      int idx = -1;
      for (size_t i = 0; i < report.alphabet.size(); ++i) {
        if (report.alphabet[i] == letter) idx = static_cast<int>(i);
      }
      if (idx < 0) throw Error("ParseError", "witness.period uses an unknown letter");
      w.period.push_back(idx);
    }
    std::string escape =
        require_string(require_key(witness, "escape_letter", "witness"), "witness.escape_letter");
    w.escape_letter = -1;
    for (size_t i = 0; i < report.alphabet.size(); ++i) {
      if (report.alphabet[i] == escape) w.escape_letter = static_cast<int>(i);
    }
    if (w.escape_letter < 0) throw Error("ParseError", "witness.escape_letter is unknown");
    for (const Json& phase :
         require_array(require_key(witness, "phases", "witness"), "witness.phases"))
      w.phases.push_back(require_int(phase, "witness.phases entry"));
    report.witness = std::move(w);
  }

  for (const Json& row :
       require_array(require_key(j, "truncation", "report"), "report.truncation")) {
    TruncationReportRow r;
    r.agent = require_string(require_key(row, "agent", "truncation row"), "agent");
    r.depth = require_int(require_key(row, "depth", "truncation row"), "depth");
    r.count = bigint_from_string(require_string(require_key(row, "count", "truncation row"), "count"));
    r.ratio =
        rational_from_string(require_string(require_key(row, "ratio", "truncation row"), "ratio"));
    r.psi = rational_from_string(require_string(require_key(row, "psi", "truncation row"), "psi"));
    r.gap = rational_from_string(require_string(require_key(row, "gap", "truncation row"), "gap"));
    report.truncation.push_back(std::move(r));
  }
  report.truncation_depth =
      require_int(require_key(j, "truncation_depth", "report"), "truncation_depth");

  if (j.contains("timing")) {
    const Json& timing = j["timing"];
    if (timing.is_object() && timing.contains("elapsed_us") &&
        timing["elapsed_us"].is_number_integer())
      report.elapsed_us = timing["elapsed_us"].get<long long>();
  }
  return report;
}

std::string render_report_text(const AnalysisReport& report, bool emit_matrix) {
  std::ostringstream out;
  out << "verdict: " << verdict_string(report.verdict) << "\n";
  out << "kirchberg: " << (report.kirchberg ? "yes" : "no") << "\n";
  out << "amenability: " << amenability_string(report.amenability) << "\n";
  out << "criteria: matrix=" << (report.matrix_criterion ? "invertible" : "singular")
      << " kernel=" << (report.kernel_criterion ? "trivial-intersection" : "joint-kernel")
      << " agree=" << (report.criteria_agree ? "yes" : "no") << "\n";
  out << "instance: |A|=" << report.a_order << " |B|=" << report.b_order
      << " |X|=" << report.alphabet_size << " hom-letters={";
  for (size_t i = 0; i < report.y_letters.size(); ++i)
    out << (i ? " " : "") << report.y_letters[i];
  out << "}\n";
  out << "a-elements:";
  for (const std::string& label : report.a_elements) out << " " << label;
  out << "\n";
  out << "closure size: " << report.closure_size << "\n";
  out << "nucleus (" << report.nucleus_size << "):";
  for (const std::string& label : report.nucleus) out << " " << label;
  out << "\n";
  out << "psi:";
  for (size_t i = 0; i < report.a_elements.size(); ++i)
    out << " " << report.a_elements[i] << "=" << to_string(report.psi_values[i]);
  out << "\n";
  out << "scale: " << to_string(report.scale) << "\n";
  out << "scaled determinant: " << to_string(report.scaled_determinant) << "\n";
  if (report.witness.has_value()) {
    const NonHausdorffWitness& w = *report.witness;
    out << "witness: agent=A:" << report.a_elements[static_cast<size_t>(w.agent.element)]
        << " period=";
    for (int letter : w.period) out << report.alphabet[static_cast<size_t>(letter)];
    out << " escape=" << report.alphabet[static_cast<size_t>(w.escape_letter)] << " phases=";
    for (size_t i = 0; i < w.phases.size(); ++i) out << (i ? "," : "") << w.phases[i];
    out << "\n";
  } else {
    out << "witness: none within bounds\n";
  }
  if (!report.truncation.empty()) {
    out << "truncation depth " << report.truncation_depth << ":\n";
    for (const TruncationReportRow& row : report.truncation) {
      out << "  " << row.agent << " count=" << to_string(row.count)
          << " ratio=" << to_string(row.ratio) << " psi=" << to_string(row.psi)
          << " gap=" << to_string(row.gap) << "\n";
    }
  }
  if (emit_matrix) {
    out << "gram:\n";
    for (int i = 0; i < report.gram.rows(); ++i) {
      out << " ";
      for (int k = 0; k < report.gram.cols(); ++k) out << " " << to_string(report.gram.at(i, k));
      out << "\n";
    }
    out << "scaled (x " << to_string(report.scale) << "):\n";
    for (int i = 0; i < report.scaled.rows; ++i) {
      out << " ";
      for (int k = 0; k < report.scaled.cols; ++k) out << " " << to_string(report.scaled.at(i, k));
      out << "\n";
    }
  }
  return out.str();
}

bool reports_equal(const AnalysisReport& lhs, const AnalysisReport& rhs) {
  return render_report_json(lhs) == render_report_json(rhs);
}

}  // namespace multispinal
