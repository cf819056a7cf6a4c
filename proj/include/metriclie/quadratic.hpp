#pragma once

// Quadratic cochains and cocycles in degree 2, the group action and the
// admissibility conditions (A_k), (B_k) for nilpotent Lie algebras.

#include <metriclie/cochain.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace metriclie {

/// A mathematical check failed; `witness` names the offending data.
struct ValidationError : Error {
  ValidationError(const std::string& what, std::string witness)
      : Error(what + (witness.empty() ? "" : ": " + witness)), witness(std::move(witness)) {}
  std::string witness;
};

/// Input violates a documented precondition.
struct PreconditionError : Error {
  using Error::Error;
};

inline std::string tuple_label(const LieAlgebra& l, const Cochain::Key& key) {
  std::string s = "(";
  for (std::size_t i = 0; i < key.size(); ++i)
    s += (i ? "," : "") + l.labels().at(key[i]);
  return s + ")";
}

/// An element (τ, σ) of C^1(l,a) ⊕ C^2(l).
struct QuadraticCochain {
  Cochain tau;
  Cochain sigma;

  static QuadraticCochain identity(std::size_t algebra_dim, std::size_t module_dim) {
    return {Cochain::module_valued(algebra_dim, 1, module_dim), Cochain::scalar(algebra_dim, 2)};
  }
  friend bool operator==(const QuadraticCochain&, const QuadraticCochain&) = default;
};

struct CocycleCheck {
  bool ok = true;
  std::string condition;  // "dα = 0" or "dγ = ½<α∧α>"
  Cochain::Key tuple;
  std::string message;
};

inline void check_cocycle_shapes(const LieAlgebra& l, const OrthogonalModule& mod,
                                 const Cochain& alpha, const Cochain& gamma) {
  require_dims(!alpha.is_scalar() && alpha.degree() == 2 && alpha.algebra_dim() == l.dim() &&
                   alpha.value_dim() == mod.dim(),
               "α must be a module-valued 2-cochain on l");
  require_dims(gamma.is_scalar() && gamma.degree() == 3 && gamma.algebra_dim() == l.dim(),
               "γ must be a scalar 3-cochain on l");
}

/// Checks dα = 0 and dγ = ½<α∧α>; reports the first failing basis tuple.
inline CocycleCheck check_quadratic_cocycle(const LieAlgebra& l, const OrthogonalModule& mod,
                                            const Cochain& alpha, const Cochain& gamma) {
  check_cocycle_shapes(l, mod, alpha, gamma);
  Cochain da = differential(l, mod, alpha);
  if (!da.is_zero()) {
    auto key = da.values().begin()->first;
    return {false, "dα = 0", key, "dα" + tuple_label(l, key) + " != 0"};
  }
  Cochain defect = differential(l, gamma) - Scalar(1, 2) * wedge_pair(mod, alpha, alpha);
  if (!defect.is_zero()) {
    auto key = defect.values().begin()->first;
    return {false, "dγ = ½<α∧α>", key,
            "dγ - ½<α∧α> is " + pretty_scalar(defect.values().begin()->second.front()) +
                " on " + tuple_label(l, key)};
  }
  return {};
}

/// A pair (α, γ) with dα = 0 and dγ = ½<α∧α>, checked on construction.
class QuadraticCocycle {
 public:
  QuadraticCocycle() = default;

  static QuadraticCocycle make(const LieAlgebra& l, const OrthogonalModule& mod, Cochain alpha,
                               Cochain gamma) {
    auto check = check_quadratic_cocycle(l, mod, alpha, gamma);
    if (!check.ok)
      throw ValidationError("not a quadratic cocycle (" + check.condition + ")", check.message);
    QuadraticCocycle z;
    z.alpha_ = std::move(alpha);
    z.gamma_ = std::move(gamma);
    return z;
  }

  /// (0, 0) over (l, a).
  static QuadraticCocycle zero(std::size_t algebra_dim, std::size_t module_dim) {
    QuadraticCocycle z;
    z.alpha_ = Cochain::module_valued(algebra_dim, 2, module_dim);
    z.gamma_ = Cochain::scalar(algebra_dim, 3);
    return z;
  }

  const Cochain& alpha() const { return alpha_; }
  const Cochain& gamma() const { return gamma_; }

  friend bool operator==(const QuadraticCocycle&, const QuadraticCocycle&) = default;

 private:
  Cochain alpha_;
  Cochain gamma_;
};

/// (τ1,σ1)*(τ2,σ2) = (τ1+τ2, σ1+σ2+½<τ1∧τ2>).
inline QuadraticCochain cq_compose(const OrthogonalModule& mod, const QuadraticCochain& c1,
                                   const QuadraticCochain& c2) {
  return {c1.tau + c2.tau,
          c1.sigma + c2.sigma + Scalar(1, 2) * wedge_pair(mod, c1.tau, c2.tau)};
}

/// (τ,σ)^{-1} = (-τ, -σ + ½<τ∧τ>).
inline QuadraticCochain cq_inverse(const OrthogonalModule& mod, const QuadraticCochain& c) {
  return {-c.tau, -c.sigma + Scalar(1, 2) * wedge_pair(mod, c.tau, c.tau)};
}

/// (α,γ)(τ,σ) = (α + dτ, γ + dσ + <(α + ½dτ)∧τ>). The result is re-validated;
/// a failure there means the sign conventions are inconsistent.
inline QuadraticCocycle act(const LieAlgebra& l, const OrthogonalModule& mod,
                            const QuadraticCocycle& z, const QuadraticCochain& c) {
  require_dims(c.tau.same_shape(Cochain::module_valued(l.dim(), 1, mod.dim())),
               "act: τ must be a module-valued 1-cochain");
  require_dims(c.sigma.same_shape(Cochain::scalar(l.dim(), 2)), "act: σ must be a scalar 2-cochain");
  Cochain dtau = differential(l, mod, c.tau);
  Cochain alpha = z.alpha() + dtau;
  Cochain gamma = z.gamma() + differential(l, c.sigma) +
                  wedge_pair(mod, z.alpha() + Scalar(1, 2) * dtau, c.tau);
  try {
    return QuadraticCocycle::make(l, mod, std::move(alpha), std::move(gamma));
  } catch (const ValidationError& e) {
    throw std::logic_error(std::string("act produced an invalid cocycle: ") + e.what());
  }
}

/// True iff act(z1, c) equals z2 exactly.
inline bool verify_equivalence_witness(const LieAlgebra& l, const OrthogonalModule& mod,
                                       const QuadraticCocycle& z1, const QuadraticCocycle& z2,
                                       const QuadraticCochain& c) {
  return act(l, mod, z1, c) == z2;
}

/// True iff every α(e_i, e_j) lies in a^l.
inline bool check_invariant_valued(const LieAlgebra& l, const OrthogonalModule& mod,
                                   const Cochain& alpha) {
  require_dims(alpha.algebra_dim() == l.dim() && alpha.value_dim() == mod.dim(),
               "check_invariant_valued: shape mismatch");
  if (mod.is_trivial()) return true;
  Subspace inv = mod.invariants();
  for (const auto& [key, v] : alpha.values())
    if (!inv.contains(v)) return false;
  return true;
}

/// True iff α(l, l) spans a. Necessary for indecomposability, not sufficient.
inline bool indecomposability_proxy(const OrthogonalModule& mod, const Cochain& alpha) {
  std::vector<Vector> image;
  for (const auto& [key, v] : alpha.values()) image.push_back(v);
  return Subspace::span(mod.dim(), image).dim() == mod.dim();
}

struct ConditionA {
  std::size_t k = 0;
  bool pass = true;
  Subspace filtration;  // l_(k)
  /// Failure witness: a nonzero L0 in l_(k) with A0 in a and Z0 in
  /// (l^{k+1})^*, the latter in coordinates of the echelon basis of l^{k+1}.
  Vector l0, a0, z0;
};

struct ConditionB {
  std::size_t k = 0;
  bool pass = true;
  /// Kernel of [.,.] : l ⊗ l^{k+1} -> l, coordinates indexed i * dim l^{k+1} + r.
  std::vector<Vector> kernel;
  /// Echelon basis of α(kernel) in a.
  std::vector<Vector> image;
};

struct AdmissibilityReport {
  std::size_t m = 0;
  std::vector<ConditionA> a;
  std::vector<ConditionB> b;
  bool overall = true;
};

namespace detail {

/// (A_k) as one homogeneous linear system in (L0 coefficients, A0, Z0). The
/// condition holds iff the solution space projects to zero on the L0 block.
inline ConditionA check_condition_a(const LieAlgebra& l, const OrthogonalModule& mod,
                                    const QuadraticCocycle& z, std::size_t k,
                                    const Subspace& filtration, const Subspace& term) {
  ConditionA out;
  out.k = k;
  out.filtration = filtration;
  const std::size_t n = l.dim(), ma = mod.dim();
  const std::size_t d0 = filtration.dim(), e = term.dim();
  if (d0 == 0) return out;
  const auto& L0 = filtration.basis();
  const auto& W = term.basis();
  const std::size_t unknowns = d0 + ma + e;
  std::vector<Vector> rows;
  auto alpha_at = [&](const Vector& x, const Vector& y) {
    return z.alpha().evaluate({x, y});
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = unit_vector(n, i);
    // (i) α(e_i, L0) = 0
    std::vector<Vector> alpha_cols;
    for (const auto& b : L0) alpha_cols.push_back(alpha_at(ei, b));
    for (std::size_t a = 0; a < ma; ++a) {
      Vector row = zero_vector(unknowns);
      for (std::size_t r = 0; r < d0; ++r) row[r] = alpha_cols[r][a];
      rows.push_back(std::move(row));
    }
    // (ii) γ(e_i, L0, w) + <A0, α(e_i, w)> - Z0([e_i, w]) = 0 for w in l^{k+1}
    for (const auto& w : W) {
      Vector row = zero_vector(unknowns);
      for (std::size_t r = 0; r < d0; ++r) row[r] = z.gamma().evaluate({ei, L0[r], w}).front();
      Vector ga = mod.gram() * alpha_at(ei, w);
      for (std::size_t a = 0; a < ma; ++a) row[d0 + a] = ga[a];
      auto coords = term.coordinates(l.bracket(ei, w));
      if (!coords) throw std::logic_error("[l, l^{k+1}] is not inside l^{k+1}");
      for (std::size_t t = 0; t < e; ++t) row[d0 + ma + t] = -(*coords)[t];
      rows.push_back(std::move(row));
    }
  }
  Matrix system = Matrix::from_rows(rows, unknowns);
  for (const auto& sol : kernel_basis(system)) {
    Vector c(sol.begin(), sol.begin() + d0);
    if (is_zero(c)) continue;
    Scalar lead = 0;
    Vector l0 = filtration.from_coordinates(c);
    for (const auto& x : l0)
      if (sgn(x) != 0) {
        lead = x;
        break;
      }
    Vector scaled = (1 / lead) * sol;
    out.pass = false;
    out.l0 = filtration.from_coordinates(Vector(scaled.begin(), scaled.begin() + d0));
    out.a0 = Vector(scaled.begin() + d0, scaled.begin() + d0 + ma);
    out.z0 = Vector(scaled.begin() + d0 + ma, scaled.end());
    return out;
  }
  return out;
}

/// (B_k): α(ker [.,.]|_{l ⊗ l^{k+1}}) must be nondegenerate.
inline ConditionB check_condition_b(const LieAlgebra& l, const OrthogonalModule& mod,
                                    const QuadraticCocycle& z, std::size_t k,
                                    const Subspace& term) {
  ConditionB out;
  out.k = k;
  const std::size_t n = l.dim(), e = term.dim();
  if (e == 0) return out;
  const auto& W = term.basis();
  Matrix br(n, n * e);
  std::vector<Vector> alpha_cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < e; ++r) {
      Vector ei = unit_vector(n, i);
      Vector v = l.bracket(ei, W[r]);
      for (std::size_t t = 0; t < n; ++t) br(t, i * e + r) = v[t];
      alpha_cols.push_back(z.alpha().evaluate({ei, W[r]}));
    }
  out.kernel = kernel_basis(br);
  std::vector<Vector> images;
  for (const auto& t : out.kernel) {
    Vector img = zero_vector(mod.dim());
    for (std::size_t c = 0; c < t.size(); ++c)
      if (sgn(t[c]) != 0) axpy(img, t[c], alpha_cols[c]);
    images.push_back(std::move(img));
  }
  out.image = span_basis(images, mod.dim());
  out.pass = is_nondegenerate_on_span(mod.gram(), out.image);
  return out;
}

}  // namespace detail

/// Evaluates (A_k) and (B_k) for k = 0..m, where m is minimal with
/// l^{m+2} = 0 unless overridden (a larger m gives the same verdict).
inline AdmissibilityReport check_admissible(const LieAlgebra& l, const OrthogonalModule& mod,
                                            const QuadraticCocycle& z,
                                            std::optional<std::size_t> m_override = {}) {
  check_cocycle_shapes(l, mod, z.alpha(), z.gamma());
  if (!is_nilpotent(l)) throw PreconditionError("check_admissible: l is not nilpotent");
  if (!check_invariant_valued(l, mod, z.alpha()))
    throw PreconditionError("check_admissible: α does not take values in a^l");
  AdmissibilityReport rep;
  rep.m = m_override.value_or(nilpotency_index(l));
  auto series = lower_central_series(l);
  auto filtration = filtration_spaces(l, mod.rho_kernel(l.dim()), rep.m);
  for (std::size_t k = 0; k <= rep.m; ++k) {
    Subspace term = k < series.terms.size() ? series.terms[k] : Subspace(l.dim());
    rep.a.push_back(detail::check_condition_a(l, mod, z, k, filtration[k], term));
    rep.b.push_back(detail::check_condition_b(l, mod, z, k, term));
    rep.overall = rep.overall && rep.a.back().pass && rep.b.back().pass;
  }
  return rep;
}

}  // namespace metriclie
