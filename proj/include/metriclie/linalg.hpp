#pragma once

// Exact rational linear algebra: rank, kernels, affine solves and the
// signature of symmetric bilinear forms.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace metriclie {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together.
struct DimensionError : Error {
  using Error::Error;
};

inline void require_dims(bool ok, const std::string& what) {
  if (!ok) throw DimensionError(what);
}

/// p/q in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Scalar ratio(long p, long q) {
  if (q == 0) throw Error("zero denominator");
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

/// Parses "p/q" or "p". Decimal notation is rejected.
inline Scalar parse_scalar(const std::string& text) {
  if (text.empty()) throw Error("empty scalar");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false, digit_after = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else {
      throw Error("malformed scalar '" + text + "' (expected p/q)");
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw Error("malformed scalar '" + text + "' (expected p/q)");
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Scalar q;
  if (q.set_str(body, 10) != 0) throw Error("malformed scalar '" + text + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

/// Always "num/den", e.g. "3/1", "-1/2", "0/1".
inline std::string format_scalar(const Scalar& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Short human form: "3", "-1/2".
inline std::string pretty_scalar(const Scalar& q) { return q.get_str(); }

inline int sign(const Scalar& q) { return sgn(q); }

inline Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

inline Vector& axpy(Vector& y, const Scalar& a, std::span<const Scalar> x) {
  require_dims(y.size() == x.size(), "axpy: length mismatch");
  if (sgn(a) == 0) return y;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += a * x[i];
  return y;
}

inline Vector operator+(Vector a, const Vector& b) { return axpy(a, 1, b); }
inline Vector operator-(Vector a, const Vector& b) { return axpy(a, -1, b); }
inline Vector operator*(const Scalar& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}
inline Vector operator-(Vector v) {
  for (auto& x : v) x = -x;
  return v;
}

inline Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  require_dims(a.size() == b.size(), "dot: length mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Dense row-major matrix over a field.
template <class T>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  BasicMatrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      require_dims(row.size() == cols_, "ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static BasicMatrix diagonal(const std::vector<T>& d) {
    BasicMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static BasicMatrix from_rows(const std::vector<std::vector<T>>& rows,
                               std::size_t cols) {
    BasicMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      require_dims(rows[r].size() == cols, "from_rows: length mismatch");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }
  static BasicMatrix from_columns(const std::vector<std::vector<T>>& cols,
                                  std::size_t rows) {
    BasicMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      require_dims(cols[c].size() == rows, "from_columns: length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  BasicMatrix transpose() const {
    BasicMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (sgn(x) != 0) return false;
    return true;
  }

  std::vector<T> operator*(std::span<const T> v) const {
    require_dims(v.size() == cols_, "matrix-vector: length mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0)
          out[r] += (*this)(r, c) * v[c];
    return out;
  }
  std::vector<T> operator*(const std::vector<T>& v) const {
    return (*this) * std::span<const T>(v);
  }

  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
    require_dims(a.cols_ == b.rows_, "matrix product: shape mismatch");
    BasicMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (sgn(a(r, k)) == 0) continue;
        for (std::size_t c = 0; c < b.cols_; ++c)
          if (sgn(b(k, c)) != 0) out(r, c) += a(r, k) * b(k, c);
      }
    return out;
  }
  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) {
    require_dims(a.rows_ == b.rows_ && a.cols_ == b.cols_,
                 "matrix sum: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) {
    require_dims(a.rows_ == b.rows_ && a.cols_ == b.cols_,
                 "matrix difference: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend BasicMatrix operator*(const T& s, BasicMatrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
  }

  friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = BasicMatrix<Scalar>;

template <class T>
std::ostream& operator<<(std::ostream& os, const BasicMatrix<T>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? " [" : "[[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << (r + 1 == m.rows() ? "]]" : "]\n");
  }
  return os;
}

/// Reduced row echelon form plus the pivot column of each nonzero row.
template <class T>
struct Echelon {
  BasicMatrix<T> reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Columns are scanned left to right; the pivot is
/// the first nonzero entry at or below the current row, so results are
/// reproducible.
template <class T>
Echelon<T> rref(BasicMatrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    T inv = T(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      T f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (sgn(m(row, c)) != 0) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const BasicMatrix<T>& m) {
  return rref(m).pivots.size();
}

/// Basis of the right null space, one vector per free column: the free
/// variable set to 1, the other free variables 0.
template <class T>
std::vector<std::vector<T>> kernel_basis(const BasicMatrix<T>& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
struct AffineSolution {
  std::vector<T> particular;
  std::vector<std::vector<T>> homogeneous;
};

/// Solves a x = b. Returns nothing if the system is inconsistent.
template <class T>
std::optional<AffineSolution<T>> solve_affine(const BasicMatrix<T>& a,
                                              std::span<const T> b) {
  require_dims(a.rows() == b.size(), "solve_affine: rhs length mismatch");
  BasicMatrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto [red, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<T> x(a.cols(), T(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, a.cols());
  return AffineSolution<T>{std::move(x), kernel_basis(a)};
}

template <class T>
std::optional<AffineSolution<T>> solve_affine(const BasicMatrix<T>& a,
                                              const std::vector<T>& b) {
  return solve_affine(a, std::span<const T>(b));
}

template <class T>
T determinant(BasicMatrix<T> m) {
  require_dims(m.square(), "determinant: matrix must be square");
  const std::size_t n = m.rows();
  T det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m(p, k)) == 0) ++p;
    if (p == n) return T(0);
    if (p != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(m(p, c), m(k, c));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(m(r, k)) == 0) continue;
      T f = m(r, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return det;
}

/// Counts of negative, positive and null directions of a symmetric form.
/// Negative first, matching the orthonormal-basis convention of the catalog.
struct Signature {
  std::size_t neg = 0;
  std::size_t pos = 0;
  std::size_t null = 0;

  std::size_t dim() const { return neg + pos + null; }
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Signature& s) {
  return os << "(" << s.neg << "," << s.pos << "," << s.null << ")";
}

/// Sylvester inertia by symmetric congruence diagonalization.
template <class T>
Signature signature_of(BasicMatrix<T> g) {
  if (!g.is_symmetric())
    throw std::invalid_argument("signature_of: matrix is not symmetric");
  const std::size_t n = g.rows();
  auto swap_sym = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(g(a, c), g(b, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(g(r, a), g(r, b));
  };
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(g(p, p)) == 0) ++p;
    if (p == n) {
      // zero diagonal: combine with an off-diagonal partner to make a pivot
      std::optional<std::pair<std::size_t, std::size_t>> hit;
      for (std::size_t i = k; i < n && !hit; ++i)
        for (std::size_t j = i + 1; j < n && !hit; ++j)
          if (sgn(g(i, j)) != 0) hit = {i, j};
      if (!hit) {
        sig.null += n - k;
        break;
      }
      auto [i, j] = *hit;
      for (std::size_t c = 0; c < n; ++c) g(i, c) += g(j, c);
      for (std::size_t r = 0; r < n; ++r) g(r, i) += g(r, j);
      p = i;
    }
    swap_sym(k, p);
    const T pivot = g(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(g(r, k)) == 0) continue;
      T f = g(r, k) / pivot;
      for (std::size_t c = k; c < n; ++c) g(r, c) -= f * g(k, c);
      for (std::size_t c = k; c < n; ++c) g(c, r) = g(r, c);
    }
    (sgn(pivot) < 0 ? sig.neg : sig.pos) += 1;
  }
  return sig;
}

/// Gram matrix B g B^T of the given row vectors.
template <class T>
BasicMatrix<T> gram_of(const BasicMatrix<T>& g,
                       const std::vector<std::vector<T>>& vectors) {
  BasicMatrix<T> out(vectors.size(), vectors.size());
  std::vector<std::vector<T>> gv;
  gv.reserve(vectors.size());
  for (const auto& v : vectors) {
    require_dims(v.size() == g.cols(), "gram_of: vector length mismatch");
    gv.push_back(g * v);
  }
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j)
      out(i, j) = dot(vectors[i], gv[j]);
  return out;
}

/// Row basis (reduced echelon) of the span of the given vectors.
template <class T>
std::vector<std::vector<T>> span_basis(const std::vector<std::vector<T>>& vectors,
                                       std::size_t ambient) {
  for (const auto& v : vectors)
    require_dims(v.size() == ambient, "span_basis: vector length mismatch");
  auto [red, pivots] = rref(BasicMatrix<T>::from_rows(vectors, ambient));
  std::vector<std::vector<T>> basis;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    auto r = red.row(i);
    basis.emplace_back(r.begin(), r.end());
  }
  return basis;
}

/// Signature of g restricted to span(vectors).
template <class T>
Signature restricted_signature(const BasicMatrix<T>& g,
                               const std::vector<std::vector<T>>& vectors) {
  return signature_of(gram_of(g, span_basis(vectors, g.rows())));
}

/// True iff g restricted to span(vectors) is nondegenerate. The zero subspace
/// counts as nondegenerate.
template <class T>
bool is_nondegenerate_on_span(const BasicMatrix<T>& g,
                              const std::vector<std::vector<T>>& vectors) {
  require_dims(g.square(), "is_nondegenerate_on_span: gram must be square");
  auto basis = span_basis(vectors, g.rows());
  if (basis.empty()) return true;
  return rank(gram_of(g, basis)) == basis.size();
}

template <class T>
bool is_nondegenerate(const BasicMatrix<T>& g) {
  return g.square() && rank(g) == g.rows();
}

}  // namespace metriclie
