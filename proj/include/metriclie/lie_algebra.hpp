#pragma once

#include <metriclie/linalg.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace metriclie {

/// Subspace of Q^n with a canonical reduced-echelon basis, so equal
/// subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors) {
    Subspace s(ambient);
    s.basis_ = span_basis(vectors, ambient);
    return s;
  }
  static Subspace whole(std::size_t ambient) {
    std::vector<Vector> e;
    for (std::size_t i = 0; i < ambient; ++i) e.push_back(unit_vector(ambient, i));
    return span(ambient, e);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool empty() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const {
    auto c = coordinates(v);
    return c.has_value();
  }

  /// Coordinates of v in the echelon basis, or nothing if v is not in the
  /// subspace. In reduced echelon form the coordinate along basis row r is the
  /// entry of v at the pivot column of r.
  std::optional<Vector> coordinates(const Vector& v) const {
    require_dims(v.size() == ambient_, "Subspace::coordinates: length mismatch");
    Vector c(basis_.size());
    Vector rest = v;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      c[r] = v[pivot(r)];
      axpy(rest, -c[r], basis_[r]);
    }
    if (!is_zero(rest)) return std::nullopt;
    return c;
  }

  Vector from_coordinates(const Vector& c) const {
    require_dims(c.size() == basis_.size(), "Subspace: coordinate length");
    Vector v = zero_vector(ambient_);
    for (std::size_t r = 0; r < basis_.size(); ++r) axpy(v, c[r], basis_[r]);
    return v;
  }

  Subspace sum(const Subspace& other) const {
    require_dims(ambient_ == other.ambient_, "Subspace::sum: ambient mismatch");
    std::vector<Vector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
  }

  Subspace intersect(const Subspace& other) const {
    require_dims(ambient_ == other.ambient_,
                 "Subspace::intersect: ambient mismatch");
    if (empty() || other.empty()) return Subspace(ambient_);
    // a.B1 = b.B2  <=>  [B1^T | -B2^T] (a,b) = 0
    const std::size_t d1 = dim(), d2 = other.dim();
    Matrix m(ambient_, d1 + d2);
    for (std::size_t i = 0; i < ambient_; ++i) {
      for (std::size_t r = 0; r < d1; ++r) m(i, r) = basis_[r][i];
      for (std::size_t r = 0; r < d2; ++r) m(i, d1 + r) = -other.basis_[r][i];
    }
    std::vector<Vector> vecs;
    for (const auto& k : kernel_basis(m))
      vecs.push_back(from_coordinates(Vector(k.begin(), k.begin() + d1)));
    return span(ambient_, vecs);
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t pivot(std::size_t r) const {
    const auto& b = basis_[r];
    for (std::size_t i = 0; i < b.size(); ++i)
      if (sgn(b[i]) != 0) return i;
    return b.size();
  }

  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
};

struct JacobiReport {
  bool ok = true;
  /// 0-based indices i<j<k of the first failing basis triple.
  std::array<std::size_t, 3> triple{};
  Vector defect;
};

/// Finite-dimensional Lie algebra over Q given by structure constants.
/// Antisymmetry is structural; Jacobi is checked on construction unless the
/// unchecked factory is used.
class LieAlgebra {
 public:
  /// Value of [e_i, e_j] for a pair i < j (0-based).
  struct Bracket {
    std::size_t i;
    std::size_t j;
    Vector value;
  };

  LieAlgebra() = default;

  static LieAlgebra create(std::vector<std::string> labels,
                           const std::vector<Bracket>& brackets) {
    LieAlgebra l = unchecked(std::move(labels), brackets);
    auto report = l.validate_jacobi();
    if (!report.ok) {
      const auto& t = report.triple;
      throw Error("Jacobi identity fails on (" + l.labels_[t[0]] + "," +
                  l.labels_[t[1]] + "," + l.labels_[t[2]] + ")");
    }
    return l;
  }

  /// Skips the Jacobi check. Only for constructing negative test inputs and
  /// for re-verifying deserialized data.
  static LieAlgebra unchecked(std::vector<std::string> labels,
                              const std::vector<Bracket>& brackets) {
    LieAlgebra l;
    l.n_ = labels.size();
    l.labels_ = std::move(labels);
    l.table_.assign(l.n_ * l.n_, zero_vector(l.n_));
    std::vector<bool> seen(l.n_ * l.n_, false);
    for (const auto& b : brackets) {
      if (b.i >= b.j || b.j >= l.n_)
        throw Error("bracket keys must satisfy i < j < dim");
      require_dims(b.value.size() == l.n_, "bracket value length");
      if (seen[b.i * l.n_ + b.j]) throw Error("duplicate bracket entry");
      seen[b.i * l.n_ + b.j] = true;
      l.table_[b.i * l.n_ + b.j] = b.value;
      l.table_[b.j * l.n_ + b.i] = -b.value;
    }
    return l;
  }

  static LieAlgebra abelian(std::size_t n, const std::string& prefix = "X") {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
    return unchecked(std::move(labels), {});
  }

  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error("unknown basis label '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  /// [e_i, e_j] for any i, j.
  const Vector& structure(std::size_t i, std::size_t j) const {
    return table_[i * n_ + j];
  }

  /// Nonzero brackets with i < j, in lexicographic order.
  std::vector<Bracket> brackets() const {
    std::vector<Bracket> out;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!is_zero(structure(i, j))) out.push_back({i, j, structure(i, j)});
    return out;
  }

  bool is_abelian() const {
    for (const auto& v : table_)
      if (!is_zero(v)) return false;
    return true;
  }

  Vector bracket(const Vector& x, const Vector& y) const {
    require_dims(x.size() == n_ && y.size() == n_, "bracket: length mismatch");
    Vector out = zero_vector(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j || sgn(y[j]) == 0) continue;
        axpy(out, x[i] * y[j], structure(i, j));
      }
    }
    return out;
  }

  /// Matrix of ad(e_i): column j is [e_i, e_j].
  Matrix ad(std::size_t i) const {
    Matrix m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) m(k, j) = structure(i, j)[k];
    return m;
  }

  /// Checks the cyclic sum [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
  /// on all i<j<k and reports the first nonzero one.
  JacobiReport validate_jacobi() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        for (std::size_t k = j + 1; k < n_; ++k) {
          Vector d = apply_ad(i, structure(j, k));
          d = d + apply_ad(j, structure(k, i));
          d = d + apply_ad(k, structure(i, j));
          if (!is_zero(d)) return {false, {i, j, k}, d};
        }
    return {};
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  Vector apply_ad(std::size_t i, const Vector& v) const {
    Vector out = zero_vector(n_);
    for (std::size_t j = 0; j < n_; ++j)
      if (sgn(v[j]) != 0) axpy(out, v[j], structure(i, j));
    return out;
  }

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Vector> table_;
};

/// Convenience for writing presentations: {"X1", "X2", {{1, "Y"}}} means
/// [X1, X2] = Y. Pairs may be given in either order.
struct Relation {
  std::string left;
  std::string right;
  std::vector<std::pair<Scalar, std::string>> value;
};

inline LieAlgebra make_lie_algebra(std::vector<std::string> labels,
                                   const std::vector<Relation>& relations,
                                   bool check = true) {
  const std::size_t n = labels.size();
  auto idx = [&](const std::string& s) {
    auto it = std::find(labels.begin(), labels.end(), s);
    if (it == labels.end()) throw Error("unknown basis label '" + s + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  std::map<std::pair<std::size_t, std::size_t>, Vector> acc;
  for (const auto& rel : relations) {
    std::size_t i = idx(rel.left), j = idx(rel.right);
    if (i == j) throw Error("relation [" + rel.left + "," + rel.left + "]");
    Scalar s = 1;
    if (i > j) {
      std::swap(i, j);
      s = -1;
    }
    auto& v = acc.try_emplace({i, j}, zero_vector(n)).first->second;
    for (const auto& [c, target] : rel.value) v[idx(target)] += s * c;
  }
  std::vector<LieAlgebra::Bracket> brackets;
  for (auto& [key, v] : acc) brackets.push_back({key.first, key.second, v});
  return check ? LieAlgebra::create(std::move(labels), brackets)
               : LieAlgebra::unchecked(std::move(labels), brackets);
}

/// Dimensions dim l^1, dim l^2, ... ending at 0 (nilpotent) or at the first
/// repeated value (not nilpotent).
struct SeriesProfile {
  std::vector<std::size_t> dims;
  friend bool operator==(const SeriesProfile&, const SeriesProfile&) = default;
};

struct LowerCentralSeries {
  std::vector<Subspace> terms;  // terms[k] = l^{k+1}
  SeriesProfile profile;
};

inline Subspace bracket_with(const LieAlgebra& l, const Subspace& s) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (const auto& w : s.basis())
      gens.push_back(l.bracket(unit_vector(l.dim(), i), w));
  return Subspace::span(l.dim(), gens);
}

inline LowerCentralSeries lower_central_series(const LieAlgebra& l) {
  LowerCentralSeries out;
  Subspace cur = Subspace::whole(l.dim());
  out.terms.push_back(cur);
  out.profile.dims.push_back(cur.dim());
  while (cur.dim() > 0) {
    Subspace next = bracket_with(l, cur);
    if (next.dim() == cur.dim()) break;
    out.terms.push_back(next);
    out.profile.dims.push_back(next.dim());
    cur = std::move(next);
  }
  return out;
}

inline bool is_nilpotent(const LieAlgebra& l) {
  return lower_central_series(l).profile.dims.back() == 0;
}

/// Derived algebra l' = l^2.
inline Subspace derived_algebra(const LieAlgebra& l) {
  return bracket_with(l, Subspace::whole(l.dim()));
}

inline Subspace center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  // x in z(l) iff sum_i x_i [e_i, e_j] = 0 for every j
  Matrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = l.structure(i, j)[k];
  return Subspace::span(n, kernel_basis(m));
}

/// The index m with l^{m+2} = 0 and l^{m+1} != 0. Requires nilpotency.
inline std::size_t nilpotency_index(const LieAlgebra& l) {
  auto dims = lower_central_series(l).profile.dims;
  if (dims.back() != 0) throw Error("Lie algebra is not nilpotent");
  return dims.size() >= 2 ? dims.size() - 2 : 0;
}

/// The spaces l_(0) = z(l) ∩ ker rho and l_(k) = z(l) ∩ l^{k+1} for
/// k = 1..m.
inline std::vector<Subspace> filtration_spaces(const LieAlgebra& l,
                                               const Subspace& rho_kernel,
                                               std::optional<std::size_t> m = {}) {
  require_dims(rho_kernel.ambient_dim() == l.dim(),
               "filtration_spaces: kernel ambient mismatch");
  auto series = lower_central_series(l);
  if (series.profile.dims.back() != 0) throw Error("Lie algebra is not nilpotent");
  const std::size_t top = m.value_or(nilpotency_index(l));
  Subspace z = center(l);
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= top; ++k) {
    if (k == 0) {
      out.push_back(z.intersect(rho_kernel));
    } else if (k < series.terms.size()) {
      out.push_back(z.intersect(series.terms[k]));
    } else {
      out.push_back(Subspace(l.dim()));
    }
  }
  return out;
}

/// Block-diagonal sum. Labels are kept when they do not collide, otherwise
/// prefixed with "a." and "b.".
inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<std::string> labels;
  bool clash = false;
  for (const auto& s : a.labels())
    if (std::find(b.labels().begin(), b.labels().end(), s) != b.labels().end())
      clash = true;
  for (const auto& s : a.labels()) labels.push_back(clash ? "a." + s : s);
  for (const auto& s : b.labels()) labels.push_back(clash ? "b." + s : s);
  std::vector<LieAlgebra::Bracket> br;
  for (const auto& x : a.brackets()) {
    Vector v = zero_vector(n);
    std::copy(x.value.begin(), x.value.end(), v.begin());
    br.push_back({x.i, x.j, v});
  }
  for (const auto& x : b.brackets()) {
    Vector v = zero_vector(n);
    std::copy(x.value.begin(), x.value.end(), v.begin() + a.dim());
    br.push_back({x.i + a.dim(), x.j + a.dim(), v});
  }
  return LieAlgebra::create(std::move(labels), br);
}

}  // namespace metriclie
