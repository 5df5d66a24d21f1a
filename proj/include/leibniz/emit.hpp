#pragma once

// Report emission: a schema-versioned machine format (JSON) and a compact
// human table (markdown).  Timings are opt-in so consecutive runs produce
// byte-identical machine reports.

#include <leibniz/catalog.hpp>

#include <sstream>

namespace leibniz {

inline nlohmann::ordered_json report_json(const SequenceReport& rep,
                                          bool timings) {
  nlohmann::ordered_json j;
  j["name"] = rep.name;
  j["verdict"] = rep.verdict ? "pass" : "fail";
  if (!rep.nodes.empty()) {
    j["nodes"] = nlohmann::ordered_json::array();
    for (const auto& n : rep.nodes)
      j["nodes"].push_back({{"label", n.label},
                            {"dim_image_in", n.dim_image_in},
                            {"dim_kernel_out", n.dim_kernel_out},
                            {"composite_zero", n.composite_zero},
                            {"exact", n.exact}});
  }
  if (!rep.isos.empty()) {
    j["flags"] = nlohmann::ordered_json::array();
    for (const auto& w : rep.isos)
      j["flags"].push_back({{"label", w.label}, {"ok", w.bijective}});
  }
  if (!rep.facts.empty()) {
    nlohmann::ordered_json facts;
    for (const auto& [k, v] : rep.facts) facts[k] = v;
    j["facts"] = facts;
  }
  if (timings) j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

inline nlohmann::ordered_json suite_json(const SuiteResult& res,
                                         bool timings = false) {
  nlohmann::ordered_json root;
  root["schema"] = "leibniz-report/1";
  root["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : res.entries) {
    nlohmann::ordered_json je;
    je["name"] = e.entry;
    je["field"] = e.field;
    je["dim"] = e.dim;
    if (!e.loaded) {
      je["error"] = e.load_error;
      root["entries"].push_back(je);
      continue;
    }
    nlohmann::ordered_json dims;
    for (const auto& [k, v] : e.dims) dims[k] = v;
    je["dims"] = dims;
    je["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : e.checks) {
      nlohmann::ordered_json jc;
      jc["check"] = c.check;
      jc["status"] = c.status;
      if (!c.message.empty()) jc["message"] = c.message;
      if (c.status == "pass" || c.status == "fail")
        jc["report"] = report_json(c.report, timings);
      je["checks"].push_back(jc);
    }
    root["entries"].push_back(je);
  }
  root["verdict"] = res.exit_code() == 0 ? "pass" : "fail";
  return root;
}

inline std::string suite_markdown(const SuiteResult& res) {
  std::ostringstream out;
  out << "| entry | field | dim | HL1 | HL2 | HL3 | dim * | dim /\\ | "
         "Gamma(g^ab) | checks | verdict |\n";
  out << "|---|---|---|---|---|---|---|---|---|---|---|\n";
  auto dim_of = [](const EntryResult& e, const std::string& key) {
    for (const auto& [k, v] : e.dims)
      if (k == key) return std::to_string(v);
    return std::string("-");
  };
  for (const auto& e : res.entries) {
    if (!e.loaded) {
      out << "| " << e.entry << " | " << e.field << " | " << e.dim
          << " | - | - | - | - | - | - | - | error |\n";
      continue;
    }
    int pass = 0, total = 0;
    bool ok = true;
    for (const auto& c : e.checks) {
      ++total;
      if (c.status == "pass") ++pass;
      if (c.status != "pass") ok = false;
    }
    out << "| " << e.entry << " | " << e.field << " | " << e.dim << " | "
        << dim_of(e, "HL1") << " | " << dim_of(e, "HL2") << " | "
        << dim_of(e, "HL3") << " | " << dim_of(e, "star") << " | "
        << dim_of(e, "wedge") << " | " << dim_of(e, "gamma_ab") << " | "
        << pass << "/" << total << " | " << (ok ? "pass" : "FAIL") << " |\n";
  }
  return out.str();
}

// detailed per-check lines, used by the CLI `check` verb
inline std::string suite_text(const SuiteResult& res) {
  std::ostringstream out;
  for (const auto& e : res.entries) {
    out << e.entry << " (" << e.field << ", dim " << e.dim << ")\n";
    if (!e.loaded) {
      out << "  load error: " << e.load_error << "\n";
      continue;
    }
    for (const auto& c : e.checks) {
      out << "  [" << (c.status == "pass"  ? "PASS"
                       : c.status == "fail" ? "FAIL"
                                            : "ERR ")
          << "] " << c.check;
      if (!c.message.empty()) out << "  (" << c.message << ")";
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace leibniz
