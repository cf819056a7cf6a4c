#pragma once

// The metric Lie algebra d_{α,γ}(l, a) on l* ⊕ a ⊕ l, axiom checks and an
// isomorphism-invariant fingerprint.

#include <metriclie/quadratic.hpp>

#include <optional>
#include <string>
#include <vector>

namespace metriclie {

/// The inputs a double was built from.
struct Provenance {
  LieAlgebra algebra;
  Matrix module_gram;
  Cochain alpha;
  Cochain gamma;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct MetricLieAlgebra {
  LieAlgebra algebra;
  Matrix gram;
  std::optional<Provenance> provenance;
  friend bool operator==(const MetricLieAlgebra&, const MetricLieAlgebra&) = default;
};

/// Matrix of ad*(e_i) on l* in the dual basis: (ad*(L)Z)(L') = -Z([L,L']).
inline Matrix coadjoint_matrix(const LieAlgebra& l, std::size_t i) {
  require_dims(i < l.dim(), "coadjoint_matrix: index out of range");
  const std::size_t n = l.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(j, k) = -l.structure(i, j)[k];
  return m;
}

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::string detail;
};

struct MetricReport {
  std::vector<AxiomCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const AxiomCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
};

/// Checks Jacobi, symmetry, nondegeneracy, invariance and nilpotency
/// independently; each entry names the first failure found.
inline MetricReport verify_metric(const MetricLieAlgebra& g) {
  MetricReport rep;
  const LieAlgebra& l = g.algebra;
  const std::size_t n = l.dim();
  const auto& labels = l.labels();

  AxiomCheck jac{"jacobi", true, ""};
  auto j = l.validate_jacobi();
  if (!j.ok) {
    jac.pass = false;
    jac.detail = "Jacobi identity fails on (" + labels[j.triple[0]] + "," + labels[j.triple[1]] +
                 "," + labels[j.triple[2]] + ")";
  }
  rep.checks.push_back(jac);

  AxiomCheck shape{"gram_shape", true, ""};
  if (g.gram.rows() != n || g.gram.cols() != n) {
    shape.pass = false;
    shape.detail = "gram is " + std::to_string(g.gram.rows()) + "x" + std::to_string(g.gram.cols()) +
                   ", algebra has dimension " + std::to_string(n);
    rep.checks.push_back(shape);
    return rep;
  }
  rep.checks.push_back(shape);

  AxiomCheck sym{"symmetry", true, ""};
  for (std::size_t a = 0; a < n && sym.pass; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (g.gram(a, b) != g.gram(b, a)) {
        sym.pass = false;
        sym.detail = "<" + labels[a] + "," + labels[b] + "> != <" + labels[b] + "," + labels[a] + ">";
        break;
      }
  rep.checks.push_back(sym);

  AxiomCheck nondeg{"nondegeneracy", true, ""};
  auto radical = kernel_basis(g.gram);
  if (!radical.empty()) {
    nondeg.pass = false;
    nondeg.detail = "gram has rank " + std::to_string(n - radical.size()) + " < " + std::to_string(n);
  }
  rep.checks.push_back(nondeg);

  AxiomCheck inv{"invariance", true, ""};
  for (std::size_t x = 0; x < n && inv.pass; ++x)
    for (std::size_t y = 0; y < n && inv.pass; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Scalar s = dot(l.structure(x, y), g.gram.column(z)) + dot(g.gram.column(y), l.structure(x, z));
        if (sgn(s) != 0) {
          inv.pass = false;
          inv.detail = "<[" + labels[x] + "," + labels[y] + "]," + labels[z] + "> + <" + labels[y] +
                       ",[" + labels[x] + "," + labels[z] + "]> = " + pretty_scalar(s);
          break;
        }
      }
  rep.checks.push_back(inv);

  AxiomCheck nil{"nilpotency", true, ""};
  if (!is_nilpotent(l)) {
    nil.pass = false;
    auto dims = lower_central_series(l).profile.dims;
    nil.detail = "lower central series stabilizes at dimension " + std::to_string(dims.back());
  }
  rep.checks.push_back(nil);
  return rep;
}

namespace detail {

/// Sign switches used only to check that the axiom checks notice a wrong
/// sign convention.
struct DoubleSigns {
  int alpha = 1;
  int coadjoint = 1;
};

inline std::vector<std::string> double_labels(const LieAlgebra& l, std::size_t m) {
  std::vector<std::string> out;
  for (const auto& s : l.labels()) out.push_back("sigma^" + s);
  for (std::size_t a = 0; a < m; ++a) out.push_back("A" + std::to_string(a + 1));
  for (const auto& s : l.labels()) out.push_back(s);
  return out;
}

inline MetricLieAlgebra assemble_double(const LieAlgebra& l, const OrthogonalModule& mod,
                                        const QuadraticCocycle& z, DoubleSigns signs) {
  const std::size_t n = l.dim(), m = mod.dim(), N = 2 * n + m;
  auto sig = [](std::size_t k) { return k; };
  auto amod = [n](std::size_t a) { return n + a; };
  auto x = [n, m](std::size_t i) { return n + m + i; };

  std::vector<Vector> table(N * N, zero_vector(N));
  auto set = [&](std::size_t p, std::size_t q, const Vector& v) {
    table[p * N + q] = v;
    table[q * N + p] = -v;
  };

  for (std::size_t i = 0; i < n; ++i) {
    // [X_i, σ^k] = ad*(X_i) σ^k
    Matrix co = coadjoint_matrix(l, i);
    for (std::size_t k = 0; k < n; ++k) {
      Vector v = zero_vector(N);
      for (std::size_t j = 0; j < n; ++j) v[sig(j)] = signs.coadjoint * co(j, k);
      set(x(i), sig(k), v);
    }
    // [A_a, X_i] = <A_a, α(X_i, .)>
    for (std::size_t a = 0; a < m; ++a) {
      Vector ga = mod.gram().column(a);
      Vector v = zero_vector(N);
      for (std::size_t j = 0; j < n; ++j) v[sig(j)] = dot(ga, z.alpha().at({i, j}));
      set(amod(a), x(i), v);
    }
  }
  // [X_i, X_j] = γ(X_i, X_j, .) + α(X_i, X_j) + [X_i, X_j]_l
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = zero_vector(N);
      for (std::size_t k = 0; k < n; ++k) v[sig(k)] = z.gamma().scalar_at({i, j, k});
      Vector al = z.alpha().at({i, j});
      for (std::size_t a = 0; a < m; ++a) v[amod(a)] = signs.alpha * al[a];
      const Vector& br = l.structure(i, j);
      for (std::size_t k = 0; k < n; ++k) v[x(k)] = br[k];
      set(x(i), x(j), v);
    }

  std::vector<LieAlgebra::Bracket> brackets;
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = p + 1; q < N; ++q)
      if (!is_zero(table[p * N + q])) brackets.push_back({p, q, table[p * N + q]});

  Matrix gram(N, N);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) gram(amod(a), amod(b)) = mod.gram()(a, b);
  for (std::size_t i = 0; i < n; ++i) gram(sig(i), x(i)) = gram(x(i), sig(i)) = 1;

  MetricLieAlgebra out{LieAlgebra::unchecked(double_labels(l, m), brackets), gram,
                       Provenance{l, mod.gram(), z.alpha(), z.gamma()}};
  return out;
}

}  // namespace detail

/// Builds d_{α,γ}(l, a) with basis (σ^1..σ^n, A_1..A_m, X_1..X_n) and
/// verifies every axiom before returning.
inline MetricLieAlgebra build_double(const LieAlgebra& l, const OrthogonalModule& mod,
                                     const QuadraticCocycle& z) {
  if (!mod.is_trivial()) throw PreconditionError("build_double: the module must be trivial");
  check_cocycle_shapes(l, mod, z.alpha(), z.gamma());
  auto check = check_quadratic_cocycle(l, mod, z.alpha(), z.gamma());
  if (!check.ok) throw ValidationError("build_double: input is not a quadratic cocycle", check.message);
  MetricLieAlgebra g = detail::assemble_double(l, mod, z, {});
  auto rep = verify_metric(g);
  if (const auto* f = rep.first_failure())
    throw ValidationError("build_double: " + f->axiom + " fails", f->detail);
  return g;
}

struct Fingerprint {
  std::size_t dim = 0;
  Signature signature;
  std::vector<std::size_t> series;
  std::size_t center_dim = 0;
  Signature center_signature;
  Signature derived_signature;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const MetricLieAlgebra& g) {
  Fingerprint f;
  f.dim = g.algebra.dim();
  f.signature = signature_of(g.gram);
  f.series = lower_central_series(g.algebra).profile.dims;
  Subspace z = center(g.algebra);
  f.center_dim = z.dim();
  f.center_signature = restricted_signature(g.gram, z.basis());
  f.derived_signature = restricted_signature(g.gram, derived_algebra(g.algebra).basis());
  return f;
}

inline std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.neg) + "," + std::to_string(s.pos) + "," + std::to_string(s.null) + ")";
}

inline std::string to_string(const Fingerprint& f) {
  std::string series;
  for (std::size_t i = 0; i < f.series.size(); ++i) series += (i ? "," : "") + std::to_string(f.series[i]);
  return "(" + std::to_string(f.dim) + "," + to_string(f.signature) + ",[" + series + "]," +
         std::to_string(f.center_dim) + "," + to_string(f.center_signature) + "," +
         to_string(f.derived_signature) + ")";
}

}  // namespace metriclie
