#pragma once

// JSON document schema. Indices are 1-based, scalars are "p/q" strings,
// canonical text is dump(2) with sorted keys plus a trailing newline.

#include <metriclie/catalog.hpp>

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef METRICLIE_FIXTURE_DIR
#define METRICLIE_FIXTURE_DIR "data"
#endif

namespace metriclie {

using json = nlohmann::json;

struct SchemaError : Error {
  std::string path;
  SchemaError(std::string p, const std::string& msg) : Error(p + ": " + msg), path(std::move(p)) {}
};

namespace io_detail {

inline const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path, "missing field '" + key + "'");
  return *it;
}

inline const json* optional_field(const json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

inline void expect_fields(const json& j, std::initializer_list<const char*> allowed, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok |= k == a;
    if (!ok) throw SchemaError(path + "." + k, "unknown field");
  }
}

inline std::size_t count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw SchemaError(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

/// 1-based index in [1, bound], returned 0-based.
inline std::size_t index(const json& j, std::size_t bound, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer index");
  long long v = j.get<long long>();
  if (v < 1 || static_cast<unsigned long long>(v) > bound)
    throw SchemaError(path, "index " + std::to_string(v) + " out of range 1.." + std::to_string(bound));
  return static_cast<std::size_t>(v - 1);
}

inline Scalar scalar(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "scalars must be \"p/q\" strings");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

inline Vector vector(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  if (j.size() != n)
    throw SchemaError(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = scalar(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

inline Matrix matrix(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of rows");
  if (j.size() != n) throw SchemaError(path, "expected " + std::to_string(n) + " rows, got " + std::to_string(j.size()));
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    Vector row = vector(j[r], n, path + "[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
  }
  return m;
}

inline json emit(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(format_scalar(x));
  return a;
}

inline json emit(const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_scalar(m(r, c)));
    a.push_back(row);
  }
  return a;
}

inline void expect_kind(const json& j, const std::string& kind, const std::string& path) {
  const json& k = field(j, "kind", path);
  if (!k.is_string() || k.get<std::string>() != kind)
    throw SchemaError(path + ".kind", "expected \"" + kind + "\"");
}

}  // namespace io_detail

inline std::string canonical(const json& j) { return j.dump(2) + "\n"; }

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", e.what());
  }
}

inline std::string document_kind(const json& j) {
  const json& k = io_detail::field(j, "kind", "$");
  if (!k.is_string()) throw SchemaError("$.kind", "expected a string");
  std::string s = k.get<std::string>();
  for (const char* known : {"lie_algebra", "module", "cocycle", "metric_lie_algebra", "report"})
    if (s == known) return s;
  throw SchemaError("$.kind", "unknown document kind '" + s + "'");
}

// lie_algebra = {kind, dim, labels, brackets: [{i, j, value}]}

inline json to_json(const LieAlgebra& l) {
  json brackets = json::array();
  for (const auto& b : l.brackets())
    brackets.push_back({{"i", b.i + 1}, {"j", b.j + 1}, {"value", io_detail::emit(b.value)}});
  return {{"kind", "lie_algebra"}, {"dim", l.dim()}, {"labels", l.labels()}, {"brackets", brackets}};
}

inline LieAlgebra lie_algebra_from_json(const json& j, const std::string& path = "$") {
  using namespace io_detail;
  expect_kind(j, "lie_algebra", path);
  expect_fields(j, {"kind", "dim", "labels", "brackets"}, path);
  std::size_t n = count(field(j, "dim", path), path + ".dim");
  const json& labels = field(j, "labels", path);
  if (!labels.is_array() || labels.size() != n)
    throw SchemaError(path + ".labels", "expected " + std::to_string(n) + " labels");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (!labels[i].is_string()) throw SchemaError(path + ".labels[" + std::to_string(i) + "]", "expected a string");
    names.push_back(labels[i].get<std::string>());
    for (std::size_t k = 0; k < i; ++k)
      if (names[k] == names[i]) throw SchemaError(path + ".labels[" + std::to_string(i) + "]", "duplicate label");
  }
  const json& br = field(j, "brackets", path);
  if (!br.is_array()) throw SchemaError(path + ".brackets", "expected an array");
  std::vector<LieAlgebra::Bracket> out;
  std::vector<bool> seen(n * n, false);
  for (std::size_t t = 0; t < br.size(); ++t) {
    std::string p = path + ".brackets[" + std::to_string(t) + "]";
    expect_fields(br[t], {"i", "j", "value"}, p);
    std::size_t i = index(field(br[t], "i", p), n, p + ".i");
    std::size_t jj = index(field(br[t], "j", p), n, p + ".j");
    if (i >= jj) throw SchemaError(p, "bracket keys must satisfy i < j");
    if (seen[i * n + jj]) throw SchemaError(p, "duplicate bracket [" + names[i] + "," + names[jj] + "]");
    seen[i * n + jj] = true;
    out.push_back({i, jj, vector(field(br[t], "value", p), n, p + ".value")});
  }
  LieAlgebra l = LieAlgebra::unchecked(names, out);
  auto rep = l.validate_jacobi();
  if (!rep.ok)
    throw ValidationError("Jacobi identity fails",
                          "(" + names[rep.triple[0]] + "," + names[rep.triple[1]] + "," + names[rep.triple[2]] + ")");
  return l;
}

// module = {kind, dim, gram, action?}; the action is bound to an algebra later.

struct ModuleSpec {
  Matrix gram;
  std::optional<std::vector<Matrix>> action;

  std::size_t dim() const { return gram.rows(); }

  OrthogonalModule bind(const LieAlgebra& l) const {
    try {
      if (!action) return OrthogonalModule::trivial(gram);
      if (action->size() != l.dim())
        throw SchemaError("$.action", "expected one matrix per basis vector (" + std::to_string(l.dim()) + ")");
      return OrthogonalModule::with_action(l, gram, *action);
    } catch (const SchemaError&) {
      throw;
    } catch (const Error& e) {
      throw ValidationError("invalid module", e.what());
    }
  }

  /// Gram checks only, for modules read without an algebra.
  void validate_gram() const {
    try {
      OrthogonalModule::trivial(gram);
    } catch (const Error& e) {
      throw ValidationError("invalid module", e.what());
    }
  }
};

inline json to_json(const ModuleSpec& m) {
  json j{{"kind", "module"}, {"dim", m.dim()}, {"gram", io_detail::emit(m.gram)}};
  if (m.action) {
    json a = json::array();
    for (const auto& r : *m.action) a.push_back(io_detail::emit(r));
    j["action"] = a;
  }
  return j;
}

inline json to_json(const OrthogonalModule& m) {
  ModuleSpec s{m.gram(), std::nullopt};
  if (!m.is_trivial()) s.action = m.action();
  return to_json(s);
}

inline ModuleSpec module_from_json(const json& j, const std::string& path = "$") {
  using namespace io_detail;
  expect_kind(j, "module", path);
  expect_fields(j, {"kind", "dim", "gram", "action"}, path);
  std::size_t m = count(field(j, "dim", path), path + ".dim");
  ModuleSpec s{matrix(field(j, "gram", path), m, path + ".gram"), std::nullopt};
  if (const json* a = optional_field(j, "action")) {
    if (!a->is_array()) throw SchemaError(path + ".action", "expected an array of matrices");
    std::vector<Matrix> rs;
    for (std::size_t i = 0; i < a->size(); ++i)
      rs.push_back(matrix((*a)[i], m, path + ".action[" + std::to_string(i) + "]"));
    s.action = rs;
  }
  s.validate_gram();
  return s;
}

// cocycle = {kind, algebra?, module?, alpha: [{i, j, value}], gamma: [{i, j, k, value}]}
// algebra and module are inline documents or path strings ("@name" for the
// fixture library).

struct CocycleDocument {
  std::optional<json> algebra;
  std::optional<json> module;
  std::vector<std::pair<Cochain::Key, json>> alpha;
  std::vector<std::pair<Cochain::Key, json>> gamma;
  json source;

  /// Builds and validates (α, γ) on (l, a).
  QuadraticCocycle resolve(const LieAlgebra& l, const OrthogonalModule& a) const {
    using namespace io_detail;
    const std::size_t n = l.dim(), m = a.dim();
    Cochain al = Cochain::module_valued(n, 2, m), ga = Cochain::scalar(n, 3);
    auto check_key = [&](const Cochain::Key& k, const std::string& p) {
      for (std::size_t x : k)
        if (x >= n) throw SchemaError(p, "index " + std::to_string(x + 1) + " out of range 1.." + std::to_string(n));
    };
    for (std::size_t t = 0; t < alpha.size(); ++t) {
      std::string p = "$.alpha[" + std::to_string(t) + "]";
      check_key(alpha[t].first, p);
      if (al.at(alpha[t].first) != zero_vector(m)) throw SchemaError(p, "duplicate key");
      al.add(alpha[t].first, vector(alpha[t].second, m, p + ".value"));
    }
    for (std::size_t t = 0; t < gamma.size(); ++t) {
      std::string p = "$.gamma[" + std::to_string(t) + "]";
      check_key(gamma[t].first, p);
      if (sgn(ga.scalar_at(gamma[t].first)) != 0) throw SchemaError(p, "duplicate key");
      ga.add(gamma[t].first, scalar(gamma[t].second, p + ".value"));
    }
    return QuadraticCocycle::make(l, a, al, ga);
  }
};

inline CocycleDocument cocycle_from_json(const json& j, const std::string& path = "$") {
  using namespace io_detail;
  expect_kind(j, "cocycle", path);
  expect_fields(j, {"kind", "algebra", "module", "alpha", "gamma"}, path);
  CocycleDocument d;
  d.source = j;
  if (const json* a = optional_field(j, "algebra")) d.algebra = *a;
  if (const json* m = optional_field(j, "module")) d.module = *m;
  auto read = [&](const char* name, std::vector<const char*> keys, auto& out) {
    const json& arr = field(j, name, path);
    if (!arr.is_array()) throw SchemaError(path + "." + name, "expected an array");
    for (std::size_t t = 0; t < arr.size(); ++t) {
      std::string p = path + "." + name + "[" + std::to_string(t) + "]";
      const json& rec = arr[t];
      if (!rec.is_object()) throw SchemaError(p, "expected an object");
      for (const auto& [k, v] : rec.items()) {
        bool ok = k == "value";
        for (const char* key : keys) ok |= k == key;
        if (!ok) throw SchemaError(p + "." + k, "unknown field");
      }
      Cochain::Key key;
      for (const char* k : keys) {
        const json& x = field(rec, k, p);
        if (!x.is_number_integer() || x.get<long long>() < 1) throw SchemaError(p + "." + k, "expected an index >= 1");
        key.push_back(static_cast<std::size_t>(x.get<long long>() - 1));
      }
      for (std::size_t q = 1; q < key.size(); ++q)
        if (key[q - 1] >= key[q]) throw SchemaError(p, "indices must be strictly increasing");
      out.push_back({key, field(rec, "value", p)});
    }
  };
  read("alpha", {"i", "j"}, d.alpha);
  read("gamma", {"i", "j", "k"}, d.gamma);
  return d;
}

/// Sparse cocycle document; references are stored as given.
inline json to_json(const QuadraticCocycle& z, std::optional<json> algebra = std::nullopt,
                    std::optional<json> module = std::nullopt) {
  json alpha = json::array(), gamma = json::array();
  for (const auto& [key, v] : z.alpha().values())
    if (!is_zero(v)) alpha.push_back({{"i", key[0] + 1}, {"j", key[1] + 1}, {"value", io_detail::emit(v)}});
  for (const auto& [key, v] : z.gamma().values())
    if (!is_zero(v))
      gamma.push_back({{"i", key[0] + 1}, {"j", key[1] + 1}, {"k", key[2] + 1}, {"value", format_scalar(v[0])}});
  json j{{"kind", "cocycle"}, {"alpha", alpha}, {"gamma", gamma}};
  if (algebra) j["algebra"] = *algebra;
  if (module) j["module"] = *module;
  return j;
}

// metric_lie_algebra = {kind, algebra, gram, provenance?: {algebra, module, cocycle}}

inline json to_json(const MetricLieAlgebra& g) {
  json j{{"kind", "metric_lie_algebra"}, {"algebra", to_json(g.algebra)}, {"gram", io_detail::emit(g.gram)}};
  if (g.provenance) {
    const auto& p = *g.provenance;
    OrthogonalModule a = OrthogonalModule::trivial(p.module_gram);
    // sparse storage keeps only nonzero keys, so the cocycle shape comes from p
    QuadraticCocycle z = QuadraticCocycle::make(p.algebra, a, p.alpha, p.gamma);
    j["provenance"] = {{"algebra", to_json(p.algebra)}, {"module", to_json(a)}, {"cocycle", to_json(z)}};
  }
  return j;
}

inline MetricLieAlgebra metric_from_json(const json& j, const std::string& path = "$") {
  using namespace io_detail;
  expect_kind(j, "metric_lie_algebra", path);
  expect_fields(j, {"kind", "algebra", "gram", "provenance"}, path);
  MetricLieAlgebra g;
  g.algebra = lie_algebra_from_json(field(j, "algebra", path), path + ".algebra");
  g.gram = matrix(field(j, "gram", path), g.algebra.dim(), path + ".gram");
  if (const json* p = optional_field(j, "provenance")) {
    std::string pp = path + ".provenance";
    expect_fields(*p, {"algebra", "module", "cocycle"}, pp);
    LieAlgebra l = lie_algebra_from_json(field(*p, "algebra", pp), pp + ".algebra");
    ModuleSpec ms = module_from_json(field(*p, "module", pp), pp + ".module");
    if (ms.action) throw SchemaError(pp + ".module.action", "provenance modules are trivial");
    OrthogonalModule a = ms.bind(l);
    QuadraticCocycle z = cocycle_from_json(field(*p, "cocycle", pp), pp + ".cocycle").resolve(l, a);
    g.provenance = Provenance{l, a.gram(), z.alpha(), z.gamma()};
  }
  return g;
}

// Reports

inline json to_json(const AdmissibilityReport& r, const LieAlgebra& l) {
  auto labels_of = [&](const Vector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) {
        std::string c = pretty_scalar(v[i]);
        if (!s.empty() && c[0] != '-') s += "+";
        s += (c == "1" ? "" : c == "-1" ? "-" : c + "*") + l.labels()[i];
      }
    return s.empty() ? std::string("0") : s;
  };
  json conds = json::array();
  for (std::size_t t = 0; t < r.a.size(); ++t) {
    const auto& a = r.a[t];
    const auto& b = r.b[t];
    json ja{{"pass", a.pass}, {"filtration_dim", a.filtration.dim()}};
    if (!a.pass)
      ja["witness"] = {{"L0", io_detail::emit(a.l0)},
                       {"L0_label", labels_of(a.l0)},
                       {"A0", io_detail::emit(a.a0)},
                       {"Z0", io_detail::emit(a.z0)}};
    json img = json::array();
    for (const auto& v : b.image) img.push_back(io_detail::emit(v));
    json jb{{"pass", b.pass}, {"kernel_dim", b.kernel.size()}, {"image", img}};
    conds.push_back({{"k", a.k}, {"A", ja}, {"B", jb}});
  }
  return {{"kind", "report"}, {"report", "admissibility"}, {"m", r.m}, {"overall", r.overall}, {"conditions", conds}};
}

inline json to_json(const Signature& s) { return json::array({s.neg, s.pos, s.null}); }

inline json to_json(const Fingerprint& f) {
  return {{"dim", f.dim},
          {"signature", to_json(f.signature)},
          {"series", f.series},
          {"center_dim", f.center_dim},
          {"center_signature", to_json(f.center_signature)},
          {"derived_signature", to_json(f.derived_signature)}};
}

inline json to_json(const CatalogReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = format_scalar(v);
    json row{{"entry", r.entry_id},
             {"params", params},
             {"cocycle_valid", r.cocycle_valid},
             {"admissible", r.admissible},
             {"proxy_indecomposable", r.proxy_indecomposable},
             {"double_built", r.double_built},
             {"fingerprint", r.fingerprint ? to_json(*r.fingerprint) : json(nullptr)}};
    if (!r.failure.empty()) row["failure"] = r.failure;
    rows.push_back(row);
  }
  json collisions = json::array();
  for (const auto& c : rep.collisions) collisions.push_back({{"fingerprint", to_json(c.fingerprint)}, {"entries", c.entries}});
  return {{"kind", "report"},
          {"report", "catalog"},
          {"entries", rep.entry_count},
          {"rows", rows},
          {"all_passed", rep.all_passed()},
          {"collisions", collisions},
          {"family_flags", rep.family_flags}};
}

inline std::string catalog_table(const CatalogReport& rep) {
  auto yn = [](bool b) { return b ? "yes" : "NO"; };
  std::ostringstream os;
  os << "entry\tparams\tcocycle\tadmissible\tproxy\tdouble\tfingerprint\n";
  for (const auto& r : rep.rows) {
    std::string params;
    for (const auto& [k, v] : r.params) params += k + "=" + pretty_scalar(v);
    os << r.entry_id << "\t" << (params.empty() ? "-" : params) << "\t" << yn(r.cocycle_valid) << "\t"
       << yn(r.admissible) << "\t" << yn(r.proxy_indecomposable) << "\t" << yn(r.double_built) << "\t"
       << (r.fingerprint ? to_string(*r.fingerprint) : "-") << "\n";
  }
  return os.str();
}

// Files and references

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw SchemaError(p.string(), "cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw SchemaError(p.string(), "cannot write file");
  out << text;
}

inline std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("METRICLIE_FIXTURES"); env && *env) return env;
  return METRICLIE_FIXTURE_DIR;
}

/// "@name" -> <fixture dir>/name.json; relative paths resolve against base.
inline std::filesystem::path resolve_reference(const std::string& ref, const std::filesystem::path& base) {
  if (!ref.empty() && ref[0] == '@') return fixture_dir() / (ref.substr(1) + ".json");
  std::filesystem::path p(ref);
  return p.is_absolute() ? p : base / p;
}

inline json load_json(const std::filesystem::path& p) {
  try {
    return parse_json(read_file(p));
  } catch (const SchemaError& e) {
    if (e.path == p.string()) throw;
    throw SchemaError(p.string() + " " + e.path, e.what());
  }
}

/// A reference field is an inline document or a path string.
inline json load_reference(const json& ref, const std::filesystem::path& base, const std::string& path) {
  if (ref.is_object()) return ref;
  if (ref.is_string()) return load_json(resolve_reference(ref.get<std::string>(), base));
  throw SchemaError(path, "expected an inline document or a path string");
}

inline LieAlgebra load_lie_algebra(const std::filesystem::path& p) { return lie_algebra_from_json(load_json(p)); }
inline ModuleSpec load_module(const std::filesystem::path& p) { return module_from_json(load_json(p)); }

}  // namespace metriclie
