#include <metriclie/library.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace metriclie;
namespace fs = std::filesystem;

namespace {

enum Exit { ok = 0, failed = 1, bad_input = 2 };

struct Inputs {
  LieAlgebra algebra;
  OrthogonalModule module;
  QuadraticCocycle cocycle;
};

void emit(const json& j, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << canonical(j);
  else
    write_file(out, canonical(j));
}

/// Either a single cocycle path carrying algebra and module references, or
/// algebra, module and cocycle paths.
Inputs load_inputs(const std::vector<std::string>& paths) {
  if (paths.size() != 1 && paths.size() != 3)
    throw SchemaError("arguments", "expected COCYCLE or ALGEBRA MODULE COCYCLE");
  fs::path cpath = paths.back();
  json cj = load_json(cpath);
  CocycleDocument doc = cocycle_from_json(cj);
  fs::path base = cpath.parent_path();
  json aj, mj;
  if (paths.size() == 3) {
    aj = load_json(paths[0]);
    mj = load_json(paths[1]);
  } else {
    if (!doc.algebra || !doc.module)
      throw SchemaError("$", "cocycle has no algebra/module reference; pass ALGEBRA MODULE COCYCLE");
    aj = load_reference(*doc.algebra, base, "$.algebra");
    mj = load_reference(*doc.module, base, "$.module");
  }
  LieAlgebra l = lie_algebra_from_json(aj);
  OrthogonalModule a = module_from_json(mj).bind(l);
  return {l, a, doc.resolve(l, a)};
}

int cmd_verify(const std::string& path, const std::string& algebra_path, const std::string& module_path) {
  json j = load_json(path);
  std::string kind = document_kind(j);
  if (kind == "lie_algebra") {
    LieAlgebra l = lie_algebra_from_json(j);
    std::cout << "ok: lie_algebra of dimension " << l.dim() << ", Jacobi identity holds\n";
  } else if (kind == "module") {
    ModuleSpec m = module_from_json(j);
    if (m.action) {
      if (algebra_path.empty()) throw SchemaError("$.action", "a module with an action needs --algebra");
      m.bind(load_lie_algebra(algebra_path));
    }
    std::cout << "ok: module of dimension " << m.dim() << ", signature " << signature_of(m.gram) << "\n";
  } else if (kind == "cocycle") {
    std::vector<std::string> paths{path};
    if (!algebra_path.empty() || !module_path.empty()) {
      if (algebra_path.empty() || module_path.empty())
        throw SchemaError("arguments", "--algebra and --module go together");
      paths = {algebra_path, module_path, path};
    }
    Inputs in = load_inputs(paths);
    std::cout << "ok: quadratic cocycle on an algebra of dimension " << in.algebra.dim() << " with module of dimension "
              << in.module.dim() << "\n";
  } else if (kind == "metric_lie_algebra") {
    MetricLieAlgebra g = metric_from_json(j);
    auto rep = verify_metric(g);
    for (const auto& c : rep.checks)
      std::cout << (c.pass ? "pass " : "FAIL ") << c.axiom << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    if (!rep.ok()) return failed;
    if (g.provenance) {
      const auto& p = *g.provenance;
      OrthogonalModule a = OrthogonalModule::trivial(p.module_gram);
      auto rebuilt = build_double(p.algebra, a, QuadraticCocycle::make(p.algebra, a, p.alpha, p.gamma));
      if (rebuilt.algebra != g.algebra || rebuilt.gram != g.gram) {
        std::cout << "FAIL provenance: rebuilding from the stored data gives a different algebra\n";
        return failed;
      }
      std::cout << "pass provenance\n";
    }
  } else {
    std::cout << "ok: report document\n";
  }
  return ok;
}

int cmd_admissible(const std::vector<std::string>& paths, const std::string& out) {
  Inputs in = load_inputs(paths);
  auto rep = check_admissible(in.algebra, in.module, in.cocycle);
  json j = to_json(rep, in.algebra);
  emit(j, out);
  for (std::size_t t = 0; t < rep.a.size(); ++t) {
    if (!rep.a[t].pass)
      std::cerr << "(A_" << rep.a[t].k << ") fails, witness L0 = "
                << j["conditions"][t]["A"]["witness"]["L0_label"].get<std::string>() << "\n";
    if (!rep.b[t].pass)
      std::cerr << "(B_" << rep.b[t].k << ") fails, alpha image has dimension " << rep.b[t].image.size() << " < "
                << rep.m << "\n";
  }
  return rep.overall ? ok : failed;
}

int cmd_double(const std::vector<std::string>& paths, const std::string& out) {
  Inputs in = load_inputs(paths);
  MetricLieAlgebra g = build_double(in.algebra, in.module, in.cocycle);
  emit(to_json(g), out);
  std::cerr << "fingerprint " << to_string(fingerprint(g)) << "\n";
  return ok;
}

std::vector<Scalar> parse_samples(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      out.push_back(parse_scalar(item));
    } catch (const Error& e) {
      throw SchemaError("--samples", e.what());
    }
  }
  if (out.empty()) throw SchemaError("--samples", "no samples given");
  return out;
}

int cmd_catalog(const std::string& samples, const std::string& out, unsigned threads, bool list) {
  if (list) {
    for (const auto& e : list_entries())
      std::cout << e.id << "\t" << e.base_algebra << "\t" << e.module_name << "\t" << e.alpha_spec << "\t"
                << e.gamma_spec << (e.param.empty() ? "" : "\t" + e.param) << "\n";
    return ok;
  }
  std::vector<Scalar> s = samples.empty() ? default_samples() : parse_samples(samples);
  CatalogReport rep;
  try {
    rep = run_catalog(s, threads);
  } catch (const CatalogError& e) {
    throw SchemaError("--samples", e.what());
  }
  std::string table = catalog_table(rep);
  if (out.empty()) {
    std::cout << table;
  } else {
    write_file(fs::path(out) / "catalog_report.json", canonical(to_json(rep)));
    write_file(fs::path(out) / "catalog_table.tsv", table);
  }
  std::size_t passed = 0;
  for (const auto& r : rep.rows) passed += r.passed();
  std::cerr << rep.entry_count << " entries, " << passed << "/" << rep.rows.size() << " instantiations pass, "
            << rep.collisions.size() << " fingerprint collisions, " << rep.family_flags.size()
            << " family flags\n";
  return rep.all_passed() ? ok : failed;
}

int cmd_cohomology(const std::string& algebra_path, const std::string& module_path, std::size_t degree) {
  LieAlgebra l = load_lie_algebra(algebra_path);
  OrthogonalModule a = load_module(module_path).bind(l);
  std::cout << cohomology_dim(l, a, degree) << "\n";
  return ok;
}

int cmd_fixtures(const std::string& out) {
  for (const auto& [name, doc] : fixture_library()) write_file(fs::path(out) / name, canonical(doc));
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of quadratic cohomology and nilpotent metric Lie algebras"};
  app.require_subcommand(1);

  std::string path, algebra_path, module_path, out, samples;
  std::vector<std::string> inputs;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::size_t degree = 0;
  bool list = false;

  auto* verify = app.add_subcommand("verify", "validate a document (Jacobi, cocycle conditions, metric axioms)");
  verify->add_option("path", path, "document")->required();
  verify->add_option("--algebra", algebra_path, "algebra for cocycles or modules with an action");
  verify->add_option("--module", module_path, "module for cocycles");

  auto* admissible = app.add_subcommand("admissible", "check admissibility of a quadratic cocycle");
  admissible->add_option("inputs", inputs, "COCYCLE or ALGEBRA MODULE COCYCLE")->required()->expected(1, 3);
  admissible->add_option("--out", out, "report file (default stdout)");

  auto* dbl = app.add_subcommand("double", "build the metric Lie algebra of a quadratic cocycle");
  dbl->add_option("inputs", inputs, "COCYCLE or ALGEBRA MODULE COCYCLE")->required()->expected(1, 3);
  dbl->add_option("--out", out, "output file (default stdout)");

  auto* catalog = app.add_subcommand("catalog", "verify every classification entry");
  catalog->add_option("--samples", samples, "comma-separated p/q parameter samples");
  catalog->add_option("--out", out, "directory for catalog_report.json and catalog_table.tsv");
  catalog->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  catalog->add_flag("--list", list, "list entries and exit");

  auto* coh = app.add_subcommand("cohomology", "dimension of H^p(l, a)");
  coh->add_option("algebra", algebra_path)->required();
  coh->add_option("module", module_path)->required();
  coh->add_option("--degree", degree, "p")->required();

  auto* fixtures = app.add_subcommand("fixtures", "write the fixture library");
  fixtures->add_option("--out", out, "directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }

  try {
    if (*verify) return cmd_verify(path, algebra_path, module_path);
    if (*admissible) return cmd_admissible(inputs, out);
    if (*dbl) return cmd_double(inputs, out);
    if (*catalog) return cmd_catalog(samples, out, threads, list);
    if (*coh) return cmd_cohomology(algebra_path, module_path, degree);
    if (*fixtures) return cmd_fixtures(out);
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return bad_input;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return failed;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return failed;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return bad_input;
  }
  return bad_input;
}
