// Command-line front end: validate and explore algebra files, run the
// homology / tensor-square pipelines, and execute the verification suite on
// the built-in catalog.  Exit codes: 0 pass, 1 verdict failure, 2 input
// error.

#include <leibniz/leibniz.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace leibniz;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw error("cannot write '" + out_path + "'");
  out << text;
}

FieldSpec parse_field_flag(const std::string& s) {
  if (s == "q" || s == "Q" || s == "rationals") return FieldSpec::rationals();
  return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(s)));
}

AlgebraFile load(const std::string& path, const std::string& field_override) {
  auto f = parse_algebra(read_file(path));
  if (!field_override.empty()) f.field = parse_field_flag(field_override);
  return f;
}

template <ScalarType K>
int do_validate(const AlgebraFile& f) {
  std::vector<K> c(static_cast<std::size_t>(f.dim) * f.dim * f.dim);
  for (const auto& b : f.brackets)
    for (const auto& [k, s] : b.coeffs)
      c[(static_cast<std::size_t>(b.i - 1) * f.dim + (b.j - 1)) * f.dim +
        (k - 1)] = parse_scalar<K>(f.field, s);
  auto bad = validate_leibniz<K>(f.field, f.dim, c);
  if (bad.empty()) {
    std::cout << f.name << ": valid Leibniz algebra over " << f.field.str()
              << ", dim " << f.dim << "\n";
    return 0;
  }
  std::cout << f.name << ": Leibniz identity fails on " << bad.size()
            << " basis triple(s):\n";
  for (const auto& t : bad)
    std::cout << "  (" << f.basis[t[0] - 1] << ", " << f.basis[t[1] - 1]
              << ", " << f.basis[t[2] - 1] << ")\n";
  return 2;
}

template <ScalarType K>
int do_invariants(const AlgebraFile& f) {
  auto g = realize<K>(f);
  std::cout << f.name << " over " << f.field.str() << ", dim " << g.dim
            << "\n";
  std::cout << "  commutator ideal: dim " << commutator_ideal(g).dim() << "\n";
  std::cout << "  center:           dim " << center(g).dim() << "\n";
  std::cout << "  abelianization:   dim " << abelianization(g).first.dim
            << "\n";
  std::cout << "  liezation:        dim " << liezation(g).first.dim << "\n";
  std::cout << "  lie: " << (is_lie(g) ? "yes" : "no")
            << ", perfect: " << (is_perfect(g) ? "yes" : "no") << "\n";
  return 0;
}

template <ScalarType K>
int do_homology(const AlgebraFile& f, int max_degree) {
  auto g = realize<K>(f);
  HomologyOptions opts;
  opts.max_degree = max_degree;
  std::cout << f.name << ": HL_n over " << f.field.str() << "\n";
  for (int n = 0; n <= max_degree; ++n)
    std::cout << "  HL" << n << " = " << leibniz_homology(g, n, opts).dim()
              << "\n";
  if (is_lie(g))
    std::cout << "  H2 (Chevalley-Eilenberg) = "
              << chevalley_eilenberg_homology(g, 2).dim() << "\n";
  return 0;
}

template <ScalarType K>
void print_quotient_basis(const NonAbelianProduct<K>& P) {
  for (int t = 0; t < P.space.dim; ++t) {
    std::vector<K> e(P.space.dim);
    e[t] = scalar_of<K>(P.space.field, 1);
    auto amb = P.space.section(e);
    std::cout << "  ";
    bool first = true;
    for (int i = 0; i < P.ambient_dim(); ++i) {
      if (amb[i].is_zero()) continue;
      if (!first) std::cout << " + ";
      if (amb[i].str() != "1") std::cout << amb[i].str() << "*";
      std::cout << P.symbol_name(i);
      first = false;
    }
    if (first) std::cout << "0";
    std::cout << "\n";
  }
}

template <ScalarType K>
int do_tensor_square(const AlgebraFile& f, bool exterior) {
  auto g = realize<K>(f);
  auto id = identity_crossed_module(g);
  if (exterior) {
    auto E = exterior_product(id, id);
    auto sq = square_subspace(*E.parent);
    std::cout << f.name << ": dim(g /\\ g) = " << E.space.dim
              << ", dim(g [] g) = " << sq.in_quotient.dim() << "\n";
    std::cout << "coset representatives:\n";
    print_quotient_basis(E);
  } else {
    auto T = tensor_product(id, id);
    std::cout << f.name << ": dim(g * g) = " << T.space.dim << "\n";
    std::cout << "  tau_m rank " << image(T.tau_m).dim() << ", tau_n rank "
              << image(T.tau_n).dim() << "\n";
    std::cout << "coset representatives:\n";
    print_quotient_basis(T);
  }
  return 0;
}

template <ScalarType K>
int do_gamma(const AlgebraFile& f) {
  auto g = realize<K>(f);
  const int na = abelianization(g).first.dim;
  auto G = gamma_of_dim<K>(na, g.field);
  std::cout << f.name << ": g^ab has dim " << na << ", Gamma(g^ab) has dim "
            << G.dim() << " = " << na << "*(" << na << "+1)/2\n";
  std::cout << "  witness basis independent: yes (checked at construction)\n";
  return 0;
}

template <class Fn>
int dispatch(const AlgebraFile& f, Fn&& fn) {
  try {
    if (f.field.kind == FieldSpec::Kind::rationals)
      return fn.template operator()<Rational>(f);
    return fn.template operator()<Fp>(f);
  } catch (const invalid_algebra& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& t : e.violations)
      std::cerr << "  violated at basis triple (" << t[0] << ", " << t[1]
                << ", " << t[2] << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact homology of Leibniz algebras and non-abelian squares"};
  app.require_subcommand(1);

  std::string field_override;
  int max_degree = 3;
  int jobs = 1;
  app.add_option("--field", field_override,
                 "override the coefficient field: 'q' or a prime p");
  app.add_option("--max-degree", max_degree, "top homology degree (default 3)");
  app.add_option("--jobs", jobs, "parallel workers for the suite");

  std::string path;
  auto* validate = app.add_subcommand("validate", "check the Leibniz identity");
  validate->add_option("file", path)->required();
  auto* invariants =
      app.add_subcommand("invariants", "center, commutator, Liezation");
  invariants->add_option("file", path)->required();
  auto* homology = app.add_subcommand("homology", "HL_n dimension table");
  homology->add_option("file", path)->required();
  auto* tensor = app.add_subcommand("tensor-square", "the square g * g");
  tensor->add_option("file", path)->required();
  auto* exterior = app.add_subcommand("exterior-square", "the square g /\\ g");
  exterior->add_option("file", path)->required();
  auto* gammac = app.add_subcommand("gamma", "Gamma of the abelianization");
  gammac->add_option("file", path)->required();

  std::vector<std::string> entry_filter, suite_checks, extra_files;
  std::string format = "text", out_path;
  bool timings = false;
  auto* check = app.add_subcommand("check", "run the verification suite");
  check->add_option("files", extra_files, "additional algebra files");
  check->add_option("--entry", entry_filter, "restrict to catalog entries");
  check->add_option("--suite", suite_checks,
                    "restrict to named checks (e.g. six-term)");
  check->add_option("--format", format, "text|json|md");
  check->add_option("--out", out_path, "write the report to a file");
  check->add_flag("--timings", timings, "include elapsed times");

  std::string rformat = "md", rout;
  auto* report = app.add_subcommand("report", "dimension tables and verdicts");
  report->add_option("--format", rformat, "md|json");
  report->add_option("--out", rout, "write the report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed() || invariants->parsed() || homology->parsed() ||
        tensor->parsed() || exterior->parsed() || gammac->parsed()) {
      auto f = load(path, field_override);
      if (validate->parsed())
        return dispatch(f, [&]<ScalarType K>(const AlgebraFile& a) {
          return do_validate<K>(a);
        });
      if (invariants->parsed())
        return dispatch(f, [&]<ScalarType K>(const AlgebraFile& a) {
          return do_invariants<K>(a);
        });
      if (homology->parsed())
        return dispatch(f, [&]<ScalarType K>(const AlgebraFile& a) {
          return do_homology<K>(a, max_degree);
        });
      if (tensor->parsed())
        return dispatch(f, [&]<ScalarType K>(const AlgebraFile& a) {
          return do_tensor_square<K>(a, false);
        });
      if (exterior->parsed())
        return dispatch(f, [&]<ScalarType K>(const AlgebraFile& a) {
          return do_tensor_square<K>(a, true);
        });
      return dispatch(f, [&]<ScalarType K>(const AlgebraFile& a) {
        return do_gamma<K>(a);
      });
    }

    // suite-backed verbs
    std::vector<AlgebraFile> entries = builtin_catalog();
    for (const auto& p : extra_files)
      entries.push_back(load(p, field_override));
    if (!entry_filter.empty()) {
      std::vector<AlgebraFile> kept;
      for (const auto& e : entries)
        for (const auto& want : entry_filter)
          if (e.name == want) kept.push_back(e);
      entries = std::move(kept);
    }
    SuiteOptions opts;
    opts.checks = suite_checks;
    opts.max_degree = max_degree;
    opts.jobs = jobs;

    if (check->parsed()) {
      auto res = run_suite(entries, opts);
      if (format == "json")
        write_out(suite_json(res, timings).dump(2) + "\n", out_path);
      else if (format == "md")
        write_out(suite_markdown(res), out_path);
      else
        write_out(suite_text(res), out_path);
      return res.exit_code();
    }
    if (report->parsed()) {
      auto res = run_suite(entries, opts);
      if (rformat == "json")
        write_out(suite_json(res).dump(2) + "\n", rout);
      else
        write_out(suite_markdown(res), rout);
      return res.exit_code();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
