#pragma once

// The classification list of nilpotent metric Lie algebras of dimension <= 10
// as data, plus batch verification.

#include <metriclie/double.hpp>
#include <metriclie/fixtures.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

namespace metriclie {

enum class BasisKind { none, orthonormal, witt, unit_vector };

inline std::string to_string(BasisKind k) {
  switch (k) {
    case BasisKind::none: return "none";
    case BasisKind::orthonormal: return "orthonormal";
    case BasisKind::witt: return "witt";
    case BasisKind::unit_vector: return "unit-vector";
  }
  return "?";
}

enum class ParamDomain { none, rational, positive };

struct CatalogEntry {
  std::string id;
  std::string item;
  std::string base_algebra;
  std::string module_name;
  // names in the fixture library
  std::string algebra_fixture;
  std::string module_fixture;
  Signature module_signature;
  BasisKind basis_kind = BasisKind::none;
  std::string alpha_spec;
  std::string gamma_spec;
  std::string param;  // empty when the entry has no parameter
  ParamDomain domain = ParamDomain::none;

  std::function<LieAlgebra()> algebra;
  std::function<OrthogonalModule()> module;
  // (l, m, params) -> (α, γ)
  std::function<std::pair<Cochain, Cochain>(const LieAlgebra&, std::size_t, const std::map<std::string, Scalar>&)>
      data;
};

struct CatalogError : Error {
  using Error::Error;
};

struct Instantiation {
  LieAlgebra algebra;
  OrthogonalModule module;
  QuadraticCocycle cocycle;
};

namespace catalog_detail {

using fixtures::module_form;
using fixtures::scalar_form;
using fixtures::Term;
using Params = std::map<std::string, Scalar>;

struct ModuleChoice {
  std::string tag;
  std::string name;
  BasisKind kind;
  std::function<OrthogonalModule()> make;
  std::string fixture;
};

inline OrthogonalModule diag(std::initializer_list<int> d) {
  Vector v;
  for (int x : d) v.push_back(x);
  return OrthogonalModule::trivial(Matrix::diagonal(v));
}

// ℝ^k is positive definite; ℝ^{p,q} lists the p negative vectors first.
inline ModuleChoice euclid(std::size_t k, BasisKind kind = BasisKind::orthonormal) {
  return {"R" + std::to_string(k), "R^" + std::to_string(k), kind,
          [k] { return fixtures::orthonormal(0, k); }, "mod_r" + std::to_string(k)};
}

inline ModuleChoice pseudo(std::size_t p, std::size_t q, BasisKind kind = BasisKind::orthonormal) {
  return {"R" + std::to_string(p) + std::to_string(q),
          "R^{" + std::to_string(p) + "," + std::to_string(q) + "}", kind,
          [p, q] { return fixtures::orthonormal(p, q); },
          "mod_r" + std::to_string(p) + std::to_string(q)};
}

inline ModuleChoice witt() {
  return {"R11w", "R^{1,1} (Witt A1,A2)", BasisKind::witt, [] { return fixtures::witt_plane(); }, "mod_witt"};
}

inline ModuleChoice zero_module() {
  return {"0", "0", BasisKind::none, [] { return OrthogonalModule::zero(); }, "mod_zero"};
}

struct Builder {
  std::vector<CatalogEntry> entries;

  void add(std::string item, std::string base, std::function<LieAlgebra()> algebra, const ModuleChoice& mc,
           std::string row, std::string alpha_spec, std::string gamma_spec,
           std::function<std::pair<Cochain, Cochain>(const LieAlgebra&, std::size_t, const Params&)> data,
           std::string param = "", ParamDomain domain = ParamDomain::none) {
    CatalogEntry e;
    e.id = "T1." + item + "." + mc.tag + "." + row;
    e.item = item;
    e.base_algebra = std::move(base);
    e.module_name = mc.name;
    static const std::map<std::string, std::string> algebra_files{
        {"R^5", "r5"}, {"g52", "g52"}, {"g41", "g41"}, {"h1+R", "h1r"},
        {"R^4", "r4"}, {"h1", "h1"},   {"R^3", "r3"},  {"R^2", "r2"}};
    e.algebra_fixture = algebra_files.at(e.base_algebra);
    e.module_fixture = mc.fixture;
    e.module_signature = signature_of(mc.make().gram());
    e.basis_kind = mc.kind;
    e.alpha_spec = std::move(alpha_spec);
    e.gamma_spec = std::move(gamma_spec);
    e.param = std::move(param);
    e.domain = domain;
    e.algebra = std::move(algebra);
    e.module = mc.make;
    e.data = std::move(data);
    entries.push_back(std::move(e));
  }
};

inline Cochain no_alpha(const LieAlgebra& l, std::size_t m) { return Cochain::module_valued(l.dim(), 2, m); }
inline Cochain no_gamma(const LieAlgebra& l) { return Cochain::scalar(l.dim(), 3); }

inline std::vector<CatalogEntry> build_entries() {
  Builder b;
  auto R = [](std::size_t k) { return [k] { return fixtures::abelian(k); }; };

  // 1
  b.add("1", "R^5", R(5), zero_module(), "1", "0", "(s12+s34)^s5", [](const LieAlgebra& l, std::size_t m, const Params&) {
    return std::pair{no_alpha(l, m), scalar_form(l, 3, {{1, {"X1", "X2", "X5"}}, {1, {"X3", "X4", "X5"}}})};
  });

  // 2
  b.add("2", "g52", fixtures::g52, zero_module(), "1", "0", "s1YZ", [](const LieAlgebra& l, std::size_t m, const Params&) {
    return std::pair{no_alpha(l, m), scalar_form(l, 3, {{1, {"X1", "Y", "Z"}}})};
  });
  b.add("2", "g52", fixtures::g52, zero_module(), "2", "0", "s1YZ+s23Z", [](const LieAlgebra& l, std::size_t m, const Params&) {
    return std::pair{no_alpha(l, m), scalar_form(l, 3, {{1, {"X1", "Y", "Z"}}, {1, {"X2", "X3", "Z"}}})};
  });

  // 3(a)
  for (const auto& mc : {euclid(1, BasisKind::unit_vector), pseudo(1, 0, BasisKind::unit_vector)}) {
    struct G {
      std::string row, spec;
      std::vector<Term> terms;
    };
    for (const auto& g : std::vector<G>{{"1", "0", {}},
                                        {"2", "s2YZ", {{1, {"X2", "Y", "Z"}}}},
                                        {"3", "s1YZ", {{1, {"X1", "Y", "Z"}}}},
                                        {"4", "-s1YZ", {{-1, {"X1", "Y", "Z"}}}}}) {
      auto terms = g.terms;
      b.add("3a", "g41", fixtures::g41, mc, g.row, "s1Y(x)A", g.spec,
            [terms](const LieAlgebra& l, std::size_t m, const Params&) {
              return std::pair{module_form(l, 2, m, {{1, {"X1", "Y"}, 0}}), scalar_form(l, 3, terms)};
            });
    }
  }

  // 3(b), 3(c)
  auto alpha3 = [](bool swapped) {
    return [swapped](const LieAlgebra& l, std::size_t m) {
      return swapped ? module_form(l, 2, m, {{1, {"X2", "Z"}, 0}, {1, {"X1", "Y"}, 1}})
                     : module_form(l, 2, m, {{1, {"X1", "Y"}, 0}, {1, {"X2", "Z"}, 1}});
    };
  };
  auto family_s = [](std::function<Cochain(const LieAlgebra&, std::size_t)> alpha) {
    return [alpha](const LieAlgebra& l, std::size_t m, const Params& p) {
      return std::pair{alpha(l, m), scalar_form(l, 3, {{p.at("s"), {"X1", "Y", "Z"}}})};
    };
  };
  auto family_r = [](std::function<Cochain(const LieAlgebra&, std::size_t)> alpha) {
    return [alpha](const LieAlgebra& l, std::size_t m, const Params& p) {
      return std::pair{alpha(l, m), scalar_form(l, 3, {{p.at("r"), {"X2", "Y", "Z"}}})};
    };
  };
  for (const auto& mc : {euclid(2), pseudo(2, 0)}) {
    b.add("3b", "g41", fixtures::g41, mc, "s", "s1Y(x)A1+s2Z(x)A2", "s*s1YZ", family_s(alpha3(false)), "s",
          ParamDomain::rational);
    b.add("3b", "g41", fixtures::g41, mc, "r", "s1Y(x)A1+s2Z(x)A2", "r*s2YZ", family_r(alpha3(false)), "r",
          ParamDomain::positive);
  }
  // both orderings of the orthonormal basis of ℝ^{1,1}
  std::vector<ModuleChoice> r11_orders{
      {"R11a", "R^{1,1} (A1,A2 orthonormal)", BasisKind::orthonormal, [] { return diag({-1, 1}); }, "mod_r11"},
      {"R11b", "R^{1,1} (A2,A1 orthonormal)", BasisKind::orthonormal, [] { return diag({1, -1}); }, "mod_r11b"}};
  for (const auto& mc : r11_orders)
    for (bool swapped : {false, true}) {
      std::string a = swapped ? "s2Z(x)A1+s1Y(x)A2" : "s1Y(x)A1+s2Z(x)A2";
      std::string k = swapped ? "2" : "1";
      b.add("3c", "g41", fixtures::g41, mc, k + "s", a, "s*s1YZ", family_s(alpha3(swapped)), "s",
            ParamDomain::rational);
      b.add("3c", "g41", fixtures::g41, mc, k + "r", a, "r*s2YZ", family_r(alpha3(swapped)), "r",
            ParamDomain::positive);
    }

  // 4: h(1) ⊕ ℝ
  struct Named {
    std::string row;
    int which;
    bool prime;
    bool with_gamma;
  };
  auto named = [](Named n) {
    return [n](const LieAlgebra& l, std::size_t m, const Params&) {
      return std::pair{fixtures::named_alpha(l, n.which, n.prime, m), n.with_gamma ? fixtures::gamma0(l) : no_gamma(l)};
    };
  };
  auto label = [](const Named& n) {
    return "alpha" + std::to_string(n.which) + (n.prime ? "'" : "");
  };
  auto add_named = [&](const std::string& item, const std::string& base, std::function<LieAlgebra()> alg,
                       const ModuleChoice& mc, const Named& n) {
    b.add(item, base, alg, mc, n.row, label(n), n.with_gamma ? "gamma0" : "0", named(n));
  };
  const std::vector<Named> four_a{{"a1", 1, false, false},
                                  {"a5", 5, false, false},
                                  {"a5g0", 5, false, true},
                                  {"a6", 6, false, false},
                                  {"a6g0", 6, false, true}};
  for (const auto& mc : {euclid(2), pseudo(2, 0)})
    for (const auto& n : four_a) add_named("4a", "h1+R", fixtures::h1_plus_r, mc, n);
  for (const auto& n : std::vector<Named>{{"a1", 1, false, false}, {"a2", 2, false, false}, {"a3", 3, false, false}})
    add_named("4b", "h1+R", fixtures::h1_plus_r, witt(), n);
  ModuleChoice r11_reversed{"R11b", "R^{1,1} (A2,A1 orthonormal)", BasisKind::orthonormal,
                            [] { return diag({1, -1}); }, "mod_r11b"};
  for (const auto& n : std::vector<Named>{{"a5", 5, false, false},
                                          {"a5g0", 5, false, true},
                                          {"a6", 6, false, false},
                                          {"a6g0", 6, false, true},
                                          {"a5p", 5, true, false},
                                          {"a5pg0", 5, true, true},
                                          {"a6p", 6, true, false},
                                          {"a6pg0", 6, true, true}})
    add_named("4b", "h1+R", fixtures::h1_plus_r, r11_reversed, n);
  for (const auto& mc : {euclid(1, BasisKind::unit_vector), pseudo(1, 0, BasisKind::unit_vector)})
    add_named("4c", "h1+R", fixtures::h1_plus_r, mc, {"a7g0", 7, false, true});

  // 5: ℝ^4
  auto alpha4_data = [](const LieAlgebra& l, std::size_t m, const Params&) {
    return std::pair{fixtures::named_alpha(l, 4, false, m), scalar_form(l, 3, {{1, {"X1", "X2", "X4"}}})};
  };
  for (const auto& mc : {euclid(2), pseudo(2, 0)}) {
    add_named("5a", "R^4", R(4), mc, {"a1", 1, false, false});
    b.add("5a", "R^4", R(4), mc, "a4", "alpha4", "s124", alpha4_data);
  }
  for (const auto& n : std::vector<Named>{{"a1", 1, false, false}, {"a2", 2, false, false}, {"a3", 3, false, false}})
    add_named("5b", "R^4", R(4), witt(), n);
  b.add("5b", "R^4", R(4), witt(), "a4", "alpha4", "s124", alpha4_data);
  for (const auto& mc : {euclid(1, BasisKind::unit_vector), pseudo(1, 0, BasisKind::unit_vector)})
    add_named("5c", "R^4", R(4), mc, {"a7g0", 7, false, true});

  // 6: h(1)
  for (const auto& mc : {euclid(1, BasisKind::unit_vector), pseudo(1, 0, BasisKind::unit_vector)})
    b.add("6a", "h1", fixtures::h1, mc, "1", "s1Y(x)A", "0", [](const LieAlgebra& l, std::size_t m, const Params&) {
      return std::pair{module_form(l, 2, m, {{1, {"X1", "Y"}, 0}}), no_gamma(l)};
    });
  for (const auto& mc : {euclid(2), pseudo(2, 0), pseudo(1, 1)})
    b.add("6b", "h1", fixtures::h1, mc, "1", "s1Y(x)A1+s2Y(x)A2", "0", [](const LieAlgebra& l, std::size_t m, const Params&) {
      return std::pair{module_form(l, 2, m, {{1, {"X1", "Y"}, 0}, {1, {"X2", "Y"}, 1}}), no_gamma(l)};
    });

  // 7: ℝ^3
  b.add("7a", "R^3", R(3), zero_module(), "1", "0", "s123", [](const LieAlgebra& l, std::size_t m, const Params&) {
    return std::pair{no_alpha(l, m), scalar_form(l, 3, {{1, {"X1", "X2", "X3"}}})};
  });
  for (const auto& mc : {euclid(2), pseudo(2, 0), pseudo(1, 1)})
    b.add("7b", "R^3", R(3), mc, "1", "s12(x)A1+s13(x)A2", "0", [](const LieAlgebra& l, std::size_t m, const Params&) {
      return std::pair{module_form(l, 2, m, {{1, {"X1", "X2"}, 0}, {1, {"X1", "X3"}, 1}}), no_gamma(l)};
    });
  for (const auto& mc : {euclid(3), pseudo(2, 1), pseudo(1, 2), pseudo(3, 0)})
    b.add("7c", "R^3", R(3), mc, "1", "s12(x)A1+s13(x)A2+s23(x)A3", "0",
          [](const LieAlgebra& l, std::size_t m, const Params&) {
            return std::pair{
                module_form(l, 2, m, {{1, {"X1", "X2"}, 0}, {1, {"X1", "X3"}, 1}, {1, {"X2", "X3"}, 2}}),
                no_gamma(l)};
          });

  // 8: ℝ^2
  for (const auto& mc : {euclid(1, BasisKind::unit_vector), pseudo(1, 0, BasisKind::unit_vector)})
    b.add("8", "R^2", R(2), mc, "1", "s12(x)A", "0", [](const LieAlgebra& l, std::size_t m, const Params&) {
      return std::pair{module_form(l, 2, m, {{1, {"X1", "X2"}, 0}}), no_gamma(l)};
    });

  return b.entries;
}

}  // namespace catalog_detail

inline const std::vector<CatalogEntry>& list_entries() {
  static const std::vector<CatalogEntry> entries = catalog_detail::build_entries();
  return entries;
}

inline const CatalogEntry& find_entry(const std::string& id) {
  for (const auto& e : list_entries())
    if (e.id == id) return e;
  throw CatalogError("unknown catalog entry: " + id);
}

inline bool in_domain(ParamDomain d, const Scalar& v) {
  return d != ParamDomain::positive || sgn(v) > 0;
}

inline Instantiation instantiate(const CatalogEntry& e, const std::map<std::string, Scalar>& params) {
  for (const auto& [name, v] : params)
    if (name != e.param) throw CatalogError(e.id + ": unknown parameter '" + name + "'");
  if (!e.param.empty()) {
    auto it = params.find(e.param);
    if (it == params.end()) throw CatalogError(e.id + ": missing parameter '" + e.param + "'");
    if (!in_domain(e.domain, it->second))
      throw CatalogError(e.id + ": parameter " + e.param + " = " + pretty_scalar(it->second) +
                         " is outside the domain " + e.param + " > 0");
  }
  LieAlgebra l = e.algebra();
  OrthogonalModule a = e.module();
  auto [alpha, gamma] = e.data(l, a.dim(), params);
  return {l, a, QuadraticCocycle::make(l, a, alpha, gamma)};
}

inline std::vector<Scalar> default_samples() {
  return {-2, -1, ratio(-1, 2), ratio(1, 2), 1, 2};
}

struct CatalogRow {
  std::string entry_id;
  std::map<std::string, Scalar> params;
  bool cocycle_valid = false;
  bool admissible = false;
  bool proxy_indecomposable = false;
  bool double_built = false;
  std::optional<Fingerprint> fingerprint;
  std::string failure;
  bool passed() const { return cocycle_valid && admissible && proxy_indecomposable && double_built; }
};

struct Collision {
  Fingerprint fingerprint;
  std::vector<std::string> entries;
};

struct CatalogReport {
  std::vector<CatalogRow> rows;
  std::vector<Collision> collisions;
  // entries whose fingerprint changes across parameter samples
  std::vector<std::string> family_flags;
  std::size_t entry_count = 0;
  bool all_passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const CatalogRow& r) { return r.passed(); });
  }
};

/// Runs every verdict on one instantiation. Failures are recorded, not thrown.
inline CatalogRow run_row(const CatalogEntry& e, const std::map<std::string, Scalar>& params) {
  CatalogRow row;
  row.entry_id = e.id;
  row.params = params;
  try {
    auto inst = instantiate(e, params);
    row.cocycle_valid = true;
    auto adm = check_admissible(inst.algebra, inst.module, inst.cocycle);
    row.admissible = adm.overall;
    if (!adm.overall) row.failure = "not admissible";
    row.proxy_indecomposable = indecomposability_proxy(inst.module, inst.cocycle.alpha());
    if (!row.proxy_indecomposable && row.failure.empty()) row.failure = "alpha does not span the module";
    auto g = build_double(inst.algebra, inst.module, inst.cocycle);
    auto f = fingerprint(g);
    auto sa = signature_of(inst.module.gram());
    const std::size_t n = inst.algebra.dim();
    Signature expected{sa.neg + n, sa.pos + n, 0};
    if (f.dim > 10) {
      row.failure = "double has dimension " + std::to_string(f.dim);
    } else if (g.algebra.is_abelian()) {
      row.failure = "double is abelian";
    } else if (f.signature != expected) {
      row.failure = "signature " + to_string(f.signature) + " != " + to_string(expected);
    } else {
      row.double_built = true;
    }
    row.fingerprint = f;
  } catch (const std::exception& ex) {
    if (row.failure.empty()) row.failure = ex.what();
  }
  return row;
}

/// Work items in id order: one per entry for parameter-free rows, one per
/// in-domain sample otherwise.
inline std::vector<std::pair<const CatalogEntry*, std::map<std::string, Scalar>>> catalog_jobs(
    const std::vector<Scalar>& samples) {
  std::vector<std::pair<const CatalogEntry*, std::map<std::string, Scalar>>> jobs;
  for (const auto& e : list_entries()) {
    if (e.param.empty()) {
      jobs.push_back({&e, {}});
      continue;
    }
    std::size_t used = 0;
    for (const auto& s : samples)
      if (in_domain(e.domain, s)) {
        jobs.push_back({&e, {{e.param, s}}});
        ++used;
      }
    if (used < 3)
      throw CatalogError("samples give only " + std::to_string(used) + " in-domain values for " + e.id +
                         ", need at least 3");
  }
  return jobs;
}

inline CatalogReport run_catalog(const std::vector<Scalar>& samples = default_samples(),
                                 unsigned threads = 1) {
  auto jobs = catalog_jobs(samples);
  std::vector<CatalogRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) rows[i] = run_row(*jobs[i].first, jobs[i].second);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CatalogReport rep;
  rep.rows = std::move(rows);
  rep.entry_count = list_entries().size();

  std::map<std::string, std::set<Fingerprint>> per_entry;
  for (const auto& r : rep.rows)
    if (r.fingerprint) per_entry[r.entry_id].insert(*r.fingerprint);
  std::map<Fingerprint, std::vector<std::string>> by_fp;
  for (const auto& e : list_entries()) {
    auto it = per_entry.find(e.id);
    if (it == per_entry.end()) continue;
    if (it->second.size() > 1) rep.family_flags.push_back(e.id);
    for (const auto& f : it->second) by_fp[f].push_back(e.id);
  }
  for (auto& [f, ids] : by_fp)
    if (ids.size() > 1) rep.collisions.push_back({f, ids});
  return rep;
}

}  // namespace metriclie
