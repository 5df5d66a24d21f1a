#pragma once

// Algebra definition files (JSON), the built-in catalog of small algebras
// and extensions, and the batch suite runner.
//
// File format: a JSON object with
//   name     string
//   field    {"kind": "rationals"} or {"kind": "prime-field", "p": <prime>}
//   dim      integer >= 0
//   basis    optional list of labels (defaults to e1..en)
//   brackets sparse list of {"i": i, "j": j, "coeffs": [[k, "scalar"], ...]}
//            with 1-based indices into the basis; omitted pairs are zero
//   ideals   optional {"name": [[vector], ...]} spanning sets
//   extension optional {"ideal": "name", "sigma": [[row], ...]} where sigma
//            is a dim(g) x dim(h) matrix splitting the quotient
//   expected optional {"key": [value, "source"], ...} regression dimensions
// Scalars are strings like "3", "-1" or "3/4" so nothing is ever rounded.

#include <leibniz/theorems.hpp>

#include <json.hpp>

#include <atomic>
#include <functional>
#include <thread>

namespace leibniz {

struct BracketEntry {
  int i = 0, j = 0;  // 1-based
  std::vector<std::pair<int, std::string>> coeffs;
};

struct ExpectedValue {
  std::string key;
  long value = 0;
  std::string source;
};

struct AlgebraFile {
  std::string name;
  FieldSpec field;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<BracketEntry> brackets;
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>>
      ideals;
  struct ExtensionBlock {
    std::string ideal;
    std::vector<std::vector<std::string>> sigma;  // empty: no splitting
  };
  std::optional<ExtensionBlock> extension;
  std::vector<ExpectedValue> expected;
};

namespace detail {

inline std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

inline AlgebraFile parse_algebra(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::line_col(text, e.byte ? e.byte - 1 : 0);
    throw parse_failure(std::string("syntax error: ") + e.what(), line, col);
  }
  try {
    AlgebraFile f;
    f.name = doc.at("name").get<std::string>();
    const auto& fld = doc.at("field");
    std::string kind = fld.at("kind").get<std::string>();
    if (kind == "rationals")
      f.field = FieldSpec::rationals();
    else if (kind == "prime-field")
      f.field = FieldSpec::prime(fld.at("p").get<std::uint32_t>());
    else
      throw error("unknown field kind '" + kind + "'");
    f.dim = doc.at("dim").get<int>();
    if (f.dim < 0) throw error("dim must be nonnegative");
    if (doc.contains("basis"))
      f.basis = doc.at("basis").get<std::vector<std::string>>();
    else
      for (int i = 1; i <= f.dim; ++i) f.basis.push_back("e" + std::to_string(i));
    if (static_cast<int>(f.basis.size()) != f.dim)
      throw error("basis label count differs from dim");
    if (doc.contains("brackets"))
      for (const auto& b : doc.at("brackets")) {
        BracketEntry e;
        e.i = b.at("i").get<int>();
        e.j = b.at("j").get<int>();
        if (e.i < 1 || e.i > f.dim || e.j < 1 || e.j > f.dim)
          throw error("bracket index out of range");
        for (const auto& c : b.at("coeffs")) {
          int k = c.at(0).get<int>();
          if (k < 1 || k > f.dim) throw error("bracket target out of range");
          e.coeffs.emplace_back(k, c.at(1).get<std::string>());
        }
        for (const auto& prev : f.brackets)
          if (prev.i == e.i && prev.j == e.j)
            throw error("duplicate bracket entry for (" + std::to_string(e.i) +
                        "," + std::to_string(e.j) + ")");
        f.brackets.push_back(std::move(e));
      }
    if (doc.contains("ideals"))
      for (const auto& [name, rows] : doc.at("ideals").items())
        f.ideals.emplace_back(
            name, rows.get<std::vector<std::vector<std::string>>>());
    if (doc.contains("extension")) {
      AlgebraFile::ExtensionBlock blk;
      blk.ideal = doc.at("extension").at("ideal").get<std::string>();
      if (doc.at("extension").contains("sigma"))
        blk.sigma = doc.at("extension")
                        .at("sigma")
                        .get<std::vector<std::vector<std::string>>>();
      f.extension = std::move(blk);
    }
    if (doc.contains("expected"))
      for (const auto& [key, val] : doc.at("expected").items())
        f.expected.push_back(
            {key, val.at(0).get<long>(), val.at(1).get<std::string>()});
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw parse_failure(std::string("document error: ") + e.what(), 1, 1);
  }
}

inline std::string serialize_algebra(const AlgebraFile& f) {
  nlohmann::ordered_json doc;
  doc["name"] = f.name;
  if (f.field.kind == FieldSpec::Kind::rationals)
    doc["field"] = {{"kind", "rationals"}};
  else
    doc["field"] = {{"kind", "prime-field"}, {"p", f.field.p}};
  doc["dim"] = f.dim;
  doc["basis"] = f.basis;
  doc["brackets"] = nlohmann::ordered_json::array();
  for (const auto& b : f.brackets) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& [k, s] : b.coeffs) coeffs.push_back({k, s});
    doc["brackets"].push_back({{"i", b.i}, {"j", b.j}, {"coeffs", coeffs}});
  }
  if (!f.ideals.empty()) {
    nlohmann::ordered_json ideals;
    for (const auto& [name, rows] : f.ideals) ideals[name] = rows;
    doc["ideals"] = ideals;
  }
  if (f.extension) {
    doc["extension"] = {{"ideal", f.extension->ideal}};
    if (!f.extension->sigma.empty())
      doc["extension"]["sigma"] = f.extension->sigma;
  }
  if (!f.expected.empty()) {
    nlohmann::ordered_json exp;
    for (const auto& e : f.expected)
      exp[e.key] = nlohmann::ordered_json::array({e.value, e.source});
    doc["expected"] = exp;
  }
  return doc.dump(2) + "\n";
}

template <ScalarType K>
LeibnizAlgebra<K> realize(const AlgebraFile& f) {
  std::vector<K> c(static_cast<std::size_t>(f.dim) * f.dim * f.dim);
  for (const auto& b : f.brackets)
    for (const auto& [k, s] : b.coeffs)
      c[(static_cast<std::size_t>(b.i - 1) * f.dim + (b.j - 1)) * f.dim +
        (k - 1)] = parse_scalar<K>(f.field, s);
  return LeibnizAlgebra<K>(f.field, f.dim, std::move(c), f.basis);
}

template <ScalarType K>
Ideal<K> realize_ideal(const AlgebraFile& f, const LeibnizAlgebra<K>& g,
                       const std::string& name) {
  for (const auto& [nm, rows] : f.ideals)
    if (nm == name) {
      Mat<K> m(static_cast<int>(rows.size()), g.dim, g.field);
      for (int r = 0; r < m.rows; ++r) {
        if (static_cast<int>(rows[r].size()) != g.dim)
          throw error("ideal vector length differs from dim");
        for (int j = 0; j < g.dim; ++j)
          m.at(r, j) = parse_scalar<K>(f.field, rows[r][j]);
      }
      return Ideal<K>(g, Subspace<K>::span_rows(m));
    }
  throw error("no ideal named '" + name + "' in entry " + f.name);
}

// --- built-in catalog ---------------------------------------------------------

std::vector<AlgebraFile> builtin_catalog();

// --- suite runner ---------------------------------------------------------------

struct CheckOutcome {
  std::string check;
  std::string status;  // "pass" | "fail" | "error"
  std::string message;
  SequenceReport report;
};

struct EntryResult {
  std::string entry;
  std::string field;
  int dim = 0;
  std::vector<std::pair<std::string, long>> dims;
  std::vector<CheckOutcome> checks;
  bool loaded = false;
  std::string load_error;
};

struct SuiteResult {
  std::vector<EntryResult> entries;
  int exit_code() const {
    int code = 0;
    for (const auto& e : entries) {
      if (!e.loaded) return 2;
      for (const auto& c : e.checks) {
        if (c.status == "error") return 2;
        if (c.status == "fail") code = std::max(code, 1);
      }
    }
    return code;
  }
};

struct SuiteOptions {
  std::vector<std::string> checks;  // empty: every applicable check
  int max_degree = 3;
  int jobs = 1;
};

namespace detail {

inline bool selected(const SuiteOptions& o, const std::string& name) {
  if (o.checks.empty()) return true;
  for (const auto& c : o.checks)
    if (c == name) return true;
  return false;
}

template <ScalarType K>
void run_entry(const AlgebraFile& file, const SuiteOptions& opts,
               EntryResult& out) {
  HomologyOptions hopts;
  hopts.max_degree = opts.max_degree;

  auto guarded = [&](const std::string& name,
                     const std::function<SequenceReport()>& body) {
    if (!selected(opts, name)) return;
    CheckOutcome oc;
    oc.check = name;
    try {
      oc.report = body();
      oc.status = oc.report.verdict ? "pass" : "fail";
    } catch (const std::exception& e) {
      oc.status = "error";
      oc.message = e.what();
    }
    out.checks.push_back(std::move(oc));
  };

  LeibnizAlgebra<K> g;
  try {
    g = realize<K>(file);
  } catch (const std::exception& e) {
    out.load_error = e.what();
    return;
  }
  out.loaded = true;

  // dimension table
  try {
    // reject oversized degree requests before grinding lower degrees
    if (g.dim > 1 && ipow(g.dim, opts.max_degree + 1) > hopts.max_chain_dim)
      throw capacity_exceeded(
          "degree " + std::to_string(opts.max_degree) + " needs chain spaces of dimension " +
          std::to_string(ipow(g.dim, opts.max_degree + 1)) +
          ", beyond the configured cap");
    for (int n = 1; n <= opts.max_degree; ++n)
      out.dims.emplace_back("HL" + std::to_string(n),
                            leibniz_homology(g, n, hopts).dim());
    auto id = identity_crossed_module(g);
    auto E = exterior_product(id, id);
    out.dims.emplace_back("star", E.parent->space.dim);
    out.dims.emplace_back("wedge", E.space.dim);
    const int na = abelianization(g).first.dim;
    out.dims.emplace_back("gamma_ab", gamma_of_dim<K>(na, g.field).dim());
    if (is_lie(g))
      out.dims.emplace_back("H2",
                            chevalley_eilenberg_homology(g, 2).dim());
  } catch (const std::exception& e) {
    CheckOutcome oc;
    oc.check = "dims";
    oc.status = "error";
    oc.message = e.what();
    out.checks.push_back(std::move(oc));
    return;
  }

  // regression against the expected block; keys outside the computed table
  // (e.g. HL3 when --max-degree is lowered) are skipped, not failed
  if (!file.expected.empty() && selected(opts, "expected")) {
    CheckOutcome oc;
    oc.check = "expected";
    oc.status = "pass";
    for (const auto& e : file.expected) {
      bool found = false;
      for (const auto& [k, v] : out.dims)
        if (k == e.key) {
          found = true;
          if (v != e.value) {
            oc.status = "fail";
            oc.message += e.key + ": got " + std::to_string(v) +
                          ", expected " + std::to_string(e.value) + "; ";
          }
        }
      if (!found) oc.message += e.key + ": skipped; ";
    }
    out.checks.push_back(std::move(oc));
  }

  guarded("hl2-kernel-iso", [&] { return check_hl2_theorem(g, hopts); });
  guarded("delta-iso", [&] {
    auto d = delta_iso(g, hopts);
    SequenceReport rep;
    rep.name = "delta-iso";
    rep.require("delta bijective", true);  // construction throws otherwise
    rep.fact("dim bullet", d.bullet.space.dim);
    rep.fact("dim wedge", d.wedge.space.dim);
    return rep;
  });
  guarded("split-sequence", [&] { return check_split_sequence(g); });
  guarded("gamma-injectivity", [&] { return check_gamma_injectivity(g); });
  if (is_lie(g))
    guarded("lie-comparison", [&] { return lie_comparison_check(g, hopts); });
  if (is_perfect(g)) {
    guarded("uce-perfect", [&] { return check_uce_perfect(g, hopts); });
    if (is_lie(g))
      guarded("perfect-lie-sequence",
              [&] { return perfect_lie_sequence(g, hopts); });
  }

  if (file.extension) {
    ExtensionInput<K> ext;
    try {
      ext = make_extension(g, realize_ideal(file, g, file.extension->ideal),
                           file.name + "/" + file.extension->ideal);
      if (!file.extension->sigma.empty()) {
        Mat<K> sigma(g.dim, ext.quot.dim, g.field);
        if (static_cast<int>(file.extension->sigma.size()) != g.dim)
          throw error("sigma row count differs from dim");
        for (int r = 0; r < g.dim; ++r)
          for (int c = 0; c < ext.quot.dim; ++c)
            sigma.at(r, c) =
                parse_scalar<K>(file.field, file.extension->sigma[r][c]);
        attach_splitting(ext, sigma);
      }
    } catch (const std::exception& e) {
      CheckOutcome oc;
      oc.check = "extension";
      oc.status = "error";
      oc.message = e.what();
      out.checks.push_back(std::move(oc));
      return;
    }
    guarded("right-exactness", [&] { return check_right_exactness(ext); });
    guarded("six-term", [&] { return six_term_sequence(ext).report; });
    guarded("eight-term-audit", [&] { return eight_term_audit(ext, hopts); });
    if (ext.sigma)
      guarded("split-injectivity",
              [&] { return check_split_injectivity(ext); });
    if (center(g).space.contains(ext.ideal.space))
      guarded("central-extension",
              [&] { return central_extension_corollary(ext); });
  }
}

}  // namespace detail

inline EntryResult run_entry_dispatch(const AlgebraFile& file,
                                      const SuiteOptions& opts) {
  EntryResult out;
  out.entry = file.name;
  out.field = file.field.str();
  out.dim = file.dim;
  if (file.field.kind == FieldSpec::Kind::rationals)
    detail::run_entry<Rational>(file, opts, out);
  else
    detail::run_entry<Fp>(file, opts, out);
  return out;
}

// Entries run independently (possibly in parallel); results are merged in
// catalog order so the output is deterministic regardless of scheduling.
inline SuiteResult run_suite(const std::vector<AlgebraFile>& entries,
                             const SuiteOptions& opts = {}) {
  SuiteResult res;
  res.entries.resize(entries.size());
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || entries.size() <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i)
      res.entries[i] = run_entry_dispatch(entries[i], opts);
    return res;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= entries.size()) break;
        res.entries[i] = run_entry_dispatch(entries[i], opts);
      }
    });
  for (auto& th : pool) th.join();
  return res;
}

}  // namespace leibniz
