#pragma once

#include <metriclie/fixtures.hpp>

#include <random>

namespace metriclie::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// Small rationals, zero with probability `zero`.
  Scalar scalar(double zero = 0.3) {
    if (coin(zero)) return 0;
    return ratio(integer(-5, 5), integer(1, 3));
  }

  Vector vector(std::size_t n, double zero = 0.3) {
    Vector v(n);
    for (auto& x : v) x = scalar(zero);
    return v;
  }

  Matrix matrix(std::size_t r, std::size_t c, double zero = 0.3) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = scalar(zero);
    return m;
  }

  Matrix symmetric(std::size_t n, double zero = 0.3) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = scalar(zero);
    return m;
  }

  Matrix invertible(std::size_t n) {
    for (;;) {
      Matrix m = matrix(n, n, 0.2);
      if (rank(m) == n) return m;
    }
  }

  Cochain cochain(const Cochain& shape, double zero = 0.5) {
    Cochain c = shape.zero_like();
    for (const auto& key : increasing_tuples(shape.algebra_dim(), shape.degree()))
      c.add(key, vector(shape.value_dim(), zero));
    return c;
  }

  Cochain scalar_cochain(std::size_t n, std::size_t p, double zero = 0.5) {
    return cochain(Cochain::scalar(n, p), zero);
  }

  Cochain module_cochain(std::size_t n, std::size_t p, std::size_t m, double zero = 0.5) {
    return cochain(Cochain::module_valued(n, p, m), zero);
  }

  QuadraticCochain quadratic_cochain(std::size_t n, std::size_t m) {
    return {module_cochain(n, 1, m), scalar_cochain(n, 2)};
  }

  Vector combination(const std::vector<Vector>& basis, std::size_t ambient) {
    Vector v = zero_vector(ambient);
    for (const auto& b : basis) axpy(v, scalar(0.4), b);
    return v;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// A random nondegenerate diagonal Gram matrix of dimension m.
inline OrthogonalModule random_trivial_module(Gen& g, std::size_t m) {
  Vector d(m);
  for (auto& x : d) x = g.coin() ? 1 : -1;
  return OrthogonalModule::trivial(Matrix::diagonal(d));
}

/// A random (α, γ) in Z_Q^2(l, a): α from ker d_2, γ from solving
/// dγ = ½<α∧α> plus a random 3-cocycle. Returns nullopt when the sampled α
/// admits no γ.
inline std::optional<QuadraticCocycle> random_cocycle(Gen& g, const LieAlgebra& l,
                                                      const OrthogonalModule& a,
                                                      const Cochain* alpha_hint = nullptr) {
  const std::size_t n = l.dim();
  Cochain shape2 = Cochain::module_valued(n, 2, a.dim());
  Cochain alpha = shape2;
  if (alpha_hint) {
    alpha = *alpha_hint;
  } else {
    auto z2 = kernel_basis(differential_matrix(l, a, 2));
    alpha = from_coordinates(shape2, g.combination(z2, to_coordinates(shape2).size()));
  }
  Cochain target = Scalar(1, 2) * wedge_pair(a, alpha, alpha);
  Matrix d3 = differential_matrix(l, a, 3, true);
  Vector rhs = to_coordinates(target);
  auto sol = solve_affine(d3, rhs);
  if (!sol) return std::nullopt;
  Vector gc = sol->particular;
  for (const auto& h : sol->homogeneous) axpy(gc, g.scalar(0.5), h);
  Cochain gamma = from_coordinates(Cochain::scalar(n, 3), gc);
  return QuadraticCocycle::make(l, a, alpha, gamma);
}

}  // namespace metriclie::testing
