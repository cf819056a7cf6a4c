#pragma once

// Named Lie algebras, modules and forms.

#include <metriclie/quadratic.hpp>

#include <string>
#include <vector>

namespace metriclie::fixtures {

/// c · σ^{l1} ∧ ... ∧ σ^{lp} (⊗ A_{a+1} for module-valued forms).
struct Term {
  Scalar coefficient;
  std::vector<std::string> labels;
  std::size_t module_index = 0;
};

inline Cochain::Key key_of(const LieAlgebra& l, const std::vector<std::string>& labels) {
  Cochain::Key key;
  for (const auto& s : labels) key.push_back(l.index_of(s));
  return key;
}

inline Cochain scalar_form(const LieAlgebra& l, std::size_t degree, const std::vector<Term>& terms) {
  Cochain c = Cochain::scalar(l.dim(), degree);
  for (const auto& t : terms) {
    require_dims(t.labels.size() == degree, "scalar_form: term degree mismatch");
    c.add(key_of(l, t.labels), t.coefficient);
  }
  return c;
}

inline Cochain module_form(const LieAlgebra& l, std::size_t degree, std::size_t module_dim,
                           const std::vector<Term>& terms) {
  Cochain c = Cochain::module_valued(l.dim(), degree, module_dim);
  for (const auto& t : terms) {
    require_dims(t.labels.size() == degree, "module_form: term degree mismatch");
    require_dims(t.module_index < module_dim, "module_form: module index out of range");
    c.add(key_of(l, t.labels), t.coefficient * unit_vector(module_dim, t.module_index));
  }
  return c;
}

inline LieAlgebra h1() { return make_lie_algebra({"X1", "X2", "Y"}, {{"X1", "X2", {{1, "Y"}}}}); }

inline LieAlgebra g41() {
  return make_lie_algebra({"X1", "X2", "Z", "Y"},
                          {{"X1", "Z", {{1, "Y"}}}, {"X1", "X2", {{1, "Z"}}}});
}

inline LieAlgebra g52() {
  return make_lie_algebra({"X1", "X2", "X3", "Y", "Z"},
                          {{"X1", "X2", {{1, "Y"}}}, {"X1", "X3", {{1, "Z"}}}});
}

inline LieAlgebra g64() {
  return make_lie_algebra(
      {"X1", "X2", "X3", "X4", "Y", "Z"},
      {{"X1", "X2", {{1, "Y"}}}, {"X1", "X3", {{1, "Z"}}}, {"X3", "X4", {{1, "Y"}}}});
}

inline LieAlgebra g65() {
  return make_lie_algebra({"X1", "X2", "X3", "X4", "Y", "Z"},
                          {{"X1", "X2", {{1, "Y"}}},
                           {"X1", "X3", {{1, "Z"}}},
                           {"X2", "X4", {{1, "Z"}}},
                           {"X3", "X4", {{-1, "Y"}}}});
}

/// h(1) ⊕ ℝ on X1..X4 with [X1,X2] = X3.
inline LieAlgebra h1_plus_r() {
  return make_lie_algebra({"X1", "X2", "X3", "X4"}, {{"X1", "X2", {{1, "X3"}}}});
}

inline LieAlgebra abelian(std::size_t k) { return LieAlgebra::abelian(k, "X"); }

/// [X1,X2] = Z, [X1,Z] = Y, [X2,X3] = Y; not admissible.
inline LieAlgebra n5() {
  return make_lie_algebra(
      {"X1", "X2", "X3", "Z", "Y"},
      {{"X1", "X2", {{1, "Z"}}}, {"X1", "Z", {{1, "Y"}}}, {"X2", "X3", {{1, "Y"}}}});
}

/// ℝ^{p,q}: p negative then q positive unit vectors.
inline OrthogonalModule orthonormal(std::size_t p, std::size_t q) {
  Vector d;
  for (std::size_t i = 0; i < p; ++i) d.push_back(-1);
  for (std::size_t i = 0; i < q; ++i) d.push_back(1);
  return OrthogonalModule::trivial(Matrix::diagonal(d));
}

/// ℝ^{1,1} with <A1,A2> = 1.
inline OrthogonalModule witt_plane() {
  return OrthogonalModule::trivial(Matrix{{0, 1}, {1, 0}});
}

/// ℝ^{2,2} with <A1,A3> = <A2,A4> = 1.
inline OrthogonalModule witt22() {
  Matrix g(4, 4);
  g(0, 2) = g(2, 0) = g(1, 3) = g(3, 1) = 1;
  return OrthogonalModule::trivial(g);
}

struct Instance {
  LieAlgebra algebra;
  OrthogonalModule module;
  QuadraticCocycle cocycle;
};

inline Instance cocycle_g64() {
  LieAlgebra l = g64();
  Cochain alpha = module_form(l, 2, 4,
                              {{1, {"X1", "Y"}, 0},
                               {-1, {"X4", "Z"}, 0},
                               {1, {"X3", "Y"}, 1},
                               {1, {"X2", "Z"}, 1},
                               {1, {"X3", "Z"}, 2},
                               {1, {"X1", "Z"}, 3}});
  OrthogonalModule a = witt22();
  auto z = QuadraticCocycle::make(l, a, alpha, Cochain::scalar(l.dim(), 3));
  return {l, a, z};
}

inline Instance cocycle_g65() {
  LieAlgebra l = g65();
  Cochain alpha = module_form(l, 2, 4,
                              {{1, {"X1", "Y"}, 0},
                               {1, {"X4", "Z"}, 0},
                               {1, {"X3", "Y"}, 1},
                               {1, {"X2", "Z"}, 1},
                               {1, {"X2", "Y"}, 2},
                               {-1, {"X3", "Z"}, 2},
                               {1, {"X4", "Y"}, 3},
                               {-1, {"X1", "Z"}, 3}});
  OrthogonalModule a = witt22();
  auto z = QuadraticCocycle::make(l, a, alpha, Cochain::scalar(l.dim(), 3));
  return {l, a, z};
}

/// α_1 .. α_7 on a 4-dim algebra with basis X1..X4; `prime` selects α_5', α_6'.
inline Cochain named_alpha(const LieAlgebra& l, int which, bool prime, std::size_t module_dim) {
  auto f = [&](std::vector<Term> t) { return module_form(l, 2, module_dim, t); };
  switch (which) {
    case 1:
      return f({{1, {"X1", "X3"}, 0}, {1, {"X2", "X4"}, 0}, {1, {"X2", "X3"}, 1}, {1, {"X1", "X4"}, 1}});
    case 2:
      return f({{1, {"X1", "X3"}, 0}, {-1, {"X2", "X4"}, 0}, {1, {"X2", "X3"}, 1}, {1, {"X1", "X4"}, 1}});
    case 3:
      return f({{1, {"X1", "X3"}, 0}, {1, {"X2", "X3"}, 1}, {1, {"X1", "X4"}, 1}});
    case 4:
      return f({{1, {"X1", "X3"}, 0}, {1, {"X2", "X3"}, 1}});
    case 5:
      return prime ? f({{1, {"X1", "X4"}, 0}, {1, {"X1", "X3"}, 1}})
                   : f({{1, {"X1", "X3"}, 0}, {1, {"X1", "X4"}, 1}});
    case 6:
      return prime ? f({{1, {"X2", "X4"}, 0}, {1, {"X1", "X3"}, 1}})
                   : f({{1, {"X1", "X3"}, 0}, {1, {"X2", "X4"}, 1}});
    case 7:
      return f({{1, {"X1", "X3"}, 0}});
  }
  throw std::invalid_argument("named_alpha: index must be 1..7");
}

/// γ_0 = σ^2 ∧ σ^3 ∧ σ^4.
inline Cochain gamma0(const LieAlgebra& l) { return scalar_form(l, 3, {{1, {"X2", "X3", "X4"}}}); }

}  // namespace metriclie::fixtures
