#pragma once

// Chevalley-Eilenberg cochains C^p(l, a) and C^p(l), the differential, the
// pairing <. ∧ .>, cohomology dimensions and pullbacks.

#include <metriclie/lie_algebra.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace metriclie {

/// Pseudo-Euclidean space with a representation by skew maps. An empty action
/// list means the trivial module.
class OrthogonalModule {
 public:
  OrthogonalModule() = default;

  static OrthogonalModule trivial(Matrix gram) {
    OrthogonalModule m;
    m.gram_ = std::move(gram);
    m.check_gram();
    return m;
  }

  /// One-dimensional trivial module with <1,1> = 1; C^p(l) is C^p(l, scalar()).
  static OrthogonalModule scalar() { return trivial(Matrix{{1}}); }

  static OrthogonalModule zero() { return trivial(Matrix(0, 0)); }

  /// action[i] is rho(e_i). Checks skewness and the representation property.
  static OrthogonalModule with_action(const LieAlgebra& l, Matrix gram,
                                      std::vector<Matrix> action) {
    OrthogonalModule m;
    m.gram_ = std::move(gram);
    m.check_gram();
    require_dims(action.size() == l.dim(), "module action: one matrix per basis vector");
    const std::size_t d = m.dim();
    for (const auto& r : action) {
      require_dims(r.rows() == d && r.cols() == d, "module action: matrix shape");
      if (!(m.gram_ * r + r.transpose() * m.gram_).is_zero())
        throw Error("module action is not skew for the inner product");
    }
    for (std::size_t i = 0; i < l.dim(); ++i)
      for (std::size_t j = i + 1; j < l.dim(); ++j) {
        Matrix lhs(d, d);
        const auto& v = l.structure(i, j);
        for (std::size_t k = 0; k < l.dim(); ++k)
          if (sgn(v[k]) != 0) lhs = lhs + v[k] * action[k];
        if (lhs != action[i] * action[j] - action[j] * action[i])
          throw Error("module action does not respect brackets");
      }
    bool all_zero = true;
    for (const auto& r : action) all_zero = all_zero && r.is_zero();
    if (!all_zero) m.action_ = std::move(action);
    return m;
  }

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  bool is_trivial() const { return action_.empty(); }
  const std::vector<Matrix>& action() const { return action_; }

  Scalar pair(const Vector& a, const Vector& b) const { return dot(a, gram_ * b); }

  /// rho(e_i) v, zero for trivial modules.
  Vector act(std::size_t i, const Vector& v) const {
    if (action_.empty()) return zero_vector(dim());
    return action_.at(i) * v;
  }

  /// a^l, the common kernel of all rho(e_i).
  Subspace invariants() const {
    const std::size_t d = dim();
    if (action_.empty()) return Subspace::whole(d);
    Matrix stacked(action_.size() * d, d);
    for (std::size_t i = 0; i < action_.size(); ++i)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) stacked(i * d + r, c) = action_[i](r, c);
    return Subspace::span(d, kernel_basis(stacked));
  }

  /// ker rho as a subspace of l (dimension algebra_dim).
  Subspace rho_kernel(std::size_t algebra_dim) const {
    if (action_.empty()) return Subspace::whole(algebra_dim);
    require_dims(action_.size() == algebra_dim, "rho_kernel: algebra dimension");
    const std::size_t d = dim();
    Matrix m(d * d, algebra_dim);
    for (std::size_t i = 0; i < algebra_dim; ++i)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m(r * d + c, i) = action_[i](r, c);
    return Subspace::span(algebra_dim, kernel_basis(m));
  }

  friend bool operator==(const OrthogonalModule&, const OrthogonalModule&) = default;

 private:
  void check_gram() const {
    if (!gram_.is_symmetric()) throw Error("module Gram matrix is not symmetric");
    if (!is_nondegenerate(gram_)) throw Error("module Gram matrix is degenerate");
  }

  Matrix gram_;
  std::vector<Matrix> action_;
};

/// Strictly increasing index tuples of length p from {0..n-1}, lexicographic.
inline std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n,
                                                               std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  if (p > n) return out;
  std::vector<std::size_t> t(p);
  for (std::size_t i = 0; i < p; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t i = p;
    while (i > 0 && t[i - 1] == n - p + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < p; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

/// Sorts idx in place; returns the permutation sign, or 0 if an index repeats.
inline int sort_with_sign(std::vector<std::size_t>& idx) {
  int s = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      s = -s;
    }
  return s;
}

/// Alternating p-linear map on an n-dimensional Lie algebra with values in a
/// module (vectors of the module dimension) or in scalars (length-1 vectors).
/// Stored sparsely on strictly increasing keys; absent keys are zero.
class Cochain {
 public:
  using Key = std::vector<std::size_t>;

  Cochain() = default;

  static Cochain module_valued(std::size_t algebra_dim, std::size_t degree,
                               std::size_t module_dim) {
    return Cochain(algebra_dim, degree, module_dim, false);
  }
  static Cochain scalar(std::size_t algebra_dim, std::size_t degree) {
    return Cochain(algebra_dim, degree, 1, true);
  }

  /// A zero cochain of the same shape.
  Cochain zero_like() const { return Cochain(n_, degree_, value_dim_, scalar_); }

  std::size_t algebra_dim() const { return n_; }
  std::size_t degree() const { return degree_; }
  std::size_t value_dim() const { return value_dim_; }
  bool is_scalar() const { return scalar_; }
  bool is_zero() const { return values_.empty(); }
  const std::map<Key, Vector>& values() const { return values_; }

  bool same_shape(const Cochain& o) const {
    return n_ == o.n_ && degree_ == o.degree_ && value_dim_ == o.value_dim_ &&
           scalar_ == o.scalar_;
  }

  /// Value on basis vectors given in any order.
  Vector at(Key idx) const {
    check_key(idx);
    int s = sort_with_sign(idx);
    if (s == 0) return zero_vector(value_dim_);
    auto it = values_.find(idx);
    if (it == values_.end()) return zero_vector(value_dim_);
    return s > 0 ? it->second : -it->second;
  }
  Scalar scalar_at(Key idx) const { return at(std::move(idx)).front(); }

  /// Adds v to the value on the given basis tuple (any order, alternating).
  Cochain& add(Key idx, const Vector& v) {
    check_key(idx);
    require_dims(v.size() == value_dim_, "cochain value length mismatch");
    int s = sort_with_sign(idx);
    if (s == 0) {
      if (!metriclie::is_zero(v)) throw Error("cochain key repeats an index");
      return *this;
    }
    if (degree_ > n_) return *this;
    auto& slot = values_.try_emplace(idx, zero_vector(value_dim_)).first->second;
    axpy(slot, s, v);
    if (metriclie::is_zero(slot)) values_.erase(idx);
    return *this;
  }
  Cochain& add(Key idx, const Scalar& s) { return add(std::move(idx), Vector{s}); }

  Cochain& set(Key idx, const Vector& v) {
    Vector cur = at(idx);
    return add(std::move(idx), v - cur);
  }

  /// Multilinear evaluation on arbitrary vectors of the Lie algebra.
  Vector evaluate(const std::vector<Vector>& args) const {
    require_dims(args.size() == degree_, "cochain evaluate: wrong number of arguments");
    for (const auto& a : args) require_dims(a.size() == n_, "cochain evaluate: vector length");
    Vector out = zero_vector(value_dim_);
    for (const auto& [key, val] : values_) {
      Matrix minor(degree_, degree_);
      for (std::size_t r = 0; r < degree_; ++r)
        for (std::size_t c = 0; c < degree_; ++c) minor(r, c) = args[c][key[r]];
      axpy(out, determinant(minor), val);
    }
    return out;
  }

  Cochain& operator+=(const Cochain& o) {
    require_dims(same_shape(o), "cochain sum: shape mismatch");
    for (const auto& [k, v] : o.values_) add(k, v);
    return *this;
  }
  Cochain& operator-=(const Cochain& o) { return *this += Scalar(-1) * o; }
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator-(const Cochain& a) { return Scalar(-1) * a; }
  friend Cochain operator*(const Scalar& s, Cochain c) {
    if (sgn(s) == 0) {
      c.values_.clear();
      return c;
    }
    for (auto& [k, v] : c.values_)
      for (auto& x : v) x *= s;
    return c;
  }
  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  Cochain(std::size_t n, std::size_t degree, std::size_t value_dim, bool scalar)
      : n_(n), degree_(degree), value_dim_(value_dim), scalar_(scalar) {}

  void check_key(const Key& idx) const {
    require_dims(idx.size() == degree_, "cochain key has wrong length");
    for (auto i : idx) require_dims(i < n_, "cochain key index out of range");
  }

  std::size_t n_ = 0;
  std::size_t degree_ = 0;
  std::size_t value_dim_ = 1;
  bool scalar_ = true;
  std::map<Key, Vector> values_;
};

/// sigma^{i1} ∧ ... ∧ sigma^{ip} as a scalar cochain.
inline Cochain basis_form(std::size_t algebra_dim, std::vector<std::size_t> idx) {
  Cochain c = Cochain::scalar(algebra_dim, idx.size());
  c.add(std::move(idx), Scalar(1));
  return c;
}

/// omega ⊗ A for a scalar form omega and a module vector A.
inline Cochain tensor(const Cochain& form, const Vector& a) {
  require_dims(form.is_scalar(), "tensor: first factor must be scalar-valued");
  Cochain c = Cochain::module_valued(form.algebra_dim(), form.degree(), a.size());
  for (const auto& [k, v] : form.values()) c.add(k, v.front() * a);
  return c;
}

namespace detail {

/// Calls f(first_positions, second_positions, sign) for every (p,q)-shuffle.
template <class F>
void for_each_shuffle(std::size_t p, std::size_t q, F&& f) {
  for (const auto& first : increasing_tuples(p + q, p)) {
    std::vector<std::size_t> second;
    std::size_t inversions = 0;
    for (std::size_t pos = 0, k = 0; pos < p + q; ++pos) {
      if (k < p && first[k] == pos) {
        ++k;
      } else {
        second.push_back(pos);
        inversions += p - k;  // first-block entries that come after pos
      }
    }
    f(first, second, inversions % 2 ? -1 : 1);
  }
}

inline std::vector<std::size_t> pick(const std::vector<std::size_t>& x,
                                     const std::vector<std::size_t>& positions) {
  std::vector<std::size_t> out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(x[p]);
  return out;
}

}  // namespace detail

/// Exterior product of scalar forms: plain shuffle sum, no factorial factor.
inline Cochain wedge(const Cochain& a, const Cochain& b) {
  require_dims(a.is_scalar() && b.is_scalar(), "wedge: scalar forms expected");
  require_dims(a.algebra_dim() == b.algebra_dim(), "wedge: algebra dimension mismatch");
  const std::size_t p = a.degree(), q = b.degree(), n = a.algebra_dim();
  Cochain out = Cochain::scalar(n, p + q);
  for (const auto& x : increasing_tuples(n, p + q)) {
    Scalar v = 0;
    detail::for_each_shuffle(p, q, [&](const auto& s1, const auto& s2, int sg) {
      v += sg * a.scalar_at(detail::pick(x, s1)) * b.scalar_at(detail::pick(x, s2));
    });
    if (sgn(v) != 0) out.add(x, v);
  }
  return out;
}

/// <c1 ∧ c2>: the wedge into a ⊗ a followed by the inner product of a.
/// Plain shuffle sum, so for 2-forms
/// <α∧α>(x1,x2,x3,x4) = 2(<α12,α34> - <α13,α24> + <α14,α23>).
inline Cochain wedge_pair(const OrthogonalModule& mod, const Cochain& c1,
                          const Cochain& c2) {
  require_dims(!c1.is_scalar() && !c2.is_scalar(), "wedge_pair: module-valued cochains expected");
  require_dims(c1.value_dim() == mod.dim() && c2.value_dim() == mod.dim(),
               "wedge_pair: module mismatch");
  require_dims(c1.algebra_dim() == c2.algebra_dim(), "wedge_pair: algebra dimension mismatch");
  const std::size_t p = c1.degree(), q = c2.degree(), n = c1.algebra_dim();
  Cochain out = Cochain::scalar(n, p + q);
  if (c1.is_zero() || c2.is_zero()) return out;
  for (const auto& x : increasing_tuples(n, p + q)) {
    Scalar v = 0;
    detail::for_each_shuffle(p, q, [&](const auto& s1, const auto& s2, int sg) {
      Vector u = c1.at(detail::pick(x, s1));
      if (metriclie::is_zero(u)) return;
      Vector w = c2.at(detail::pick(x, s2));
      if (metriclie::is_zero(w)) return;
      v += sg * mod.pair(u, w);
    });
    if (sgn(v) != 0) out.add(x, v);
  }
  return out;
}

/// Chevalley-Eilenberg differential
///   (dω)(x0..xp) = Σ_{i<j} (-1)^{i+j} ω([xi,xj], x0..^i..^j..xp)
///                + Σ_i (-1)^i ρ(xi) ω(x0..^i..xp).
/// Scalar-valued cochains always use the trivial action.
inline Cochain differential(const LieAlgebra& l, const OrthogonalModule& mod,
                            const Cochain& c) {
  require_dims(c.algebra_dim() == l.dim(), "differential: algebra dimension mismatch");
  const bool twisted = !c.is_scalar() && !mod.is_trivial();
  if (!c.is_scalar()) require_dims(c.value_dim() == mod.dim(), "differential: module mismatch");
  const std::size_t p = c.degree(), n = l.dim();
  Cochain out = c.is_scalar() ? Cochain::scalar(n, p + 1)
                              : Cochain::module_valued(n, p + 1, c.value_dim());
  if (c.is_zero()) return out;
  for (const auto& x : increasing_tuples(n, p + 1)) {
    Vector v = zero_vector(c.value_dim());
    for (std::size_t i = 0; i <= p; ++i)
      for (std::size_t j = i + 1; j <= p; ++j) {
        const Vector& br = l.structure(x[i], x[j]);
        Cochain::Key key(p);
        for (std::size_t t = 0, o = 1; t <= p; ++t)
          if (t != i && t != j) key[o++] = x[t];
        const int s = ((i + j) % 2) ? -1 : 1;
        for (std::size_t k = 0; k < n; ++k) {
          if (sgn(br[k]) == 0) continue;
          key[0] = k;
          axpy(v, s * br[k], c.at(key));
        }
      }
    if (twisted)
      for (std::size_t i = 0; i <= p; ++i) {
        Cochain::Key key;
        for (std::size_t t = 0; t <= p; ++t)
          if (t != i) key.push_back(x[t]);
        axpy(v, (i % 2) ? -1 : 1, mod.act(x[i], c.at(key)));
      }
    if (!metriclie::is_zero(v)) out.add(x, v);
  }
  return out;
}

inline Cochain differential(const LieAlgebra& l, const Cochain& c) {
  require_dims(c.is_scalar(), "differential without module: scalar cochain expected");
  return differential(l, OrthogonalModule::scalar(), c);
}

/// Dense coordinates: increasing tuples in lexicographic order, value
/// components innermost.
inline Vector to_coordinates(const Cochain& c) {
  auto tuples = increasing_tuples(c.algebra_dim(), c.degree());
  Vector out = zero_vector(tuples.size() * c.value_dim());
  std::size_t t = 0;
  for (const auto& x : tuples) {
    auto it = c.values().find(x);
    if (it != c.values().end())
      for (std::size_t a = 0; a < c.value_dim(); ++a) out[t * c.value_dim() + a] = it->second[a];
    ++t;
  }
  return out;
}

inline Cochain from_coordinates(const Cochain& shape, const Vector& coords) {
  Cochain c = shape.zero_like();
  auto tuples = increasing_tuples(c.algebra_dim(), c.degree());
  require_dims(coords.size() == tuples.size() * c.value_dim(), "from_coordinates: length");
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    Vector v(coords.begin() + t * c.value_dim(), coords.begin() + (t + 1) * c.value_dim());
    if (!is_zero(v)) c.add(tuples[t], v);
  }
  return c;
}

/// Matrix of d : C^p(l, a) -> C^{p+1}(l, a) in the coordinates above. With
/// scalar_valued set, the domain is C^p(l).
inline Matrix differential_matrix(const LieAlgebra& l, const OrthogonalModule& mod,
                                  std::size_t p, bool scalar_valued = false) {
  const std::size_t n = l.dim();
  Cochain shape = scalar_valued ? Cochain::scalar(n, p)
                                : Cochain::module_valued(n, p, mod.dim());
  const std::size_t vd = shape.value_dim();
  const std::size_t cols = increasing_tuples(n, p).size() * vd;
  const std::size_t rows = increasing_tuples(n, p + 1).size() * vd;
  Matrix m(rows, cols);
  for (std::size_t col = 0; col < cols; ++col) {
    Vector e = unit_vector(cols, col);
    Vector img = to_coordinates(differential(l, mod, from_coordinates(shape, e)));
    for (std::size_t r = 0; r < rows; ++r) m(r, col) = img[r];
  }
  return m;
}

/// dim H^p(l, a) = dim ker d_p - rank d_{p-1}.
inline std::size_t cohomology_dim(const LieAlgebra& l, const OrthogonalModule& mod,
                                  std::size_t p) {
  if (p > l.dim()) return 0;
  const Matrix dp = differential_matrix(l, mod, p);
  const std::size_t kernel = dp.cols() - rank(dp);
  const std::size_t image = p == 0 ? 0 : rank(differential_matrix(l, mod, p - 1));
  return kernel - image;
}

/// A Lie homomorphism s : l1 -> l2 (n2 x n1) with an isometry u : a2 -> a1
/// (m1 x m2).
struct Isomap {
  Matrix s;
  Matrix u;
};

/// Reports the first violated condition, or an empty string.
inline std::string check_isomap(const Isomap& iso, const LieAlgebra& l1,
                                const LieAlgebra& l2, const OrthogonalModule& a1,
                                const OrthogonalModule& a2) {
  if (iso.s.rows() != l2.dim() || iso.s.cols() != l1.dim()) return "S has the wrong shape";
  if (iso.u.rows() != a1.dim() || iso.u.cols() != a2.dim()) return "U has the wrong shape";
  for (std::size_t i = 0; i < l1.dim(); ++i)
    for (std::size_t j = i + 1; j < l1.dim(); ++j) {
      Vector lhs = iso.s * l1.structure(i, j);
      Vector rhs = l2.bracket(iso.s.column(i), iso.s.column(j));
      if (lhs != rhs)
        return "S is not a homomorphism on (" + l1.labels()[i] + "," + l1.labels()[j] + ")";
    }
  if (iso.u.transpose() * a1.gram() * iso.u != a2.gram()) return "U is not an isometry";
  return {};
}

/// ((S,U)^* c)(x1..xp) = U c(S x1, ..., S xp); scalar cochains skip U.
inline Cochain pullback(const Isomap& iso, const Cochain& c) {
  require_dims(iso.s.rows() == c.algebra_dim(), "pullback: S target dimension mismatch");
  const std::size_t n1 = iso.s.cols(), p = c.degree();
  Cochain out = c.is_scalar() ? Cochain::scalar(n1, p)
                              : Cochain::module_valued(n1, p, iso.u.rows());
  if (!c.is_scalar())
    require_dims(iso.u.cols() == c.value_dim(), "pullback: U source dimension mismatch");
  if (c.is_zero()) return out;
  for (const auto& x : increasing_tuples(n1, p)) {
    std::vector<Vector> args;
    for (auto i : x) args.push_back(iso.s.column(i));
    Vector v = c.evaluate(args);
    if (!c.is_scalar()) v = iso.u * v;
    if (!is_zero(v)) out.add(x, v);
  }
  return out;
}

}  // namespace metriclie
