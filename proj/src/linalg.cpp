#include "spflag/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace spflag {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("QMatrix: negative size");
  a_.assign(static_cast<std::size_t>(rows) * cols, mpq_class(0));
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<Vec>& rows, int cols) {
  QMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw std::invalid_argument("QMatrix::from_rows: ragged rows");
    for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec QMatrix::row(int r) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
             a_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
  QMatrix p(x.rows_, y.cols_);
  for (int r = 0; r < x.rows_; ++r)
    for (int k = 0; k < x.cols_; ++k) {
      const mpq_class& xv = x(r, k);
      if (sgn(xv) == 0) continue;
      for (int c = 0; c < y.cols_; ++c)
        if (sgn(y(k, c)) != 0) p(r, c) += xv * y(k, c);
    }
  return p;
}

QMatrix operator+(const QMatrix& x, const QMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
    throw std::invalid_argument("QMatrix: shape mismatch in sum");
  QMatrix s = x;
  for (std::size_t k = 0; k < s.a_.size(); ++k) s.a_[k] += y.a_[k];
  return s;
}

QMatrix operator-(const QMatrix& x, const QMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
    throw std::invalid_argument("QMatrix: shape mismatch in difference");
  QMatrix s = x;
  for (std::size_t k = 0; k < s.a_.size(); ++k) s.a_[k] -= y.a_[k];
  return s;
}

QMatrix operator*(const mpq_class& s, const QMatrix& x) {
  QMatrix p = x;
  for (auto& v : p.a_) v *= s;
  return p;
}

bool operator==(const QMatrix& x, const QMatrix& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
}

std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int k = r; k < m.rows(); ++k)
      if (sgn(m(k, c)) != 0) {
        p = k;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    mpq_class inv = 1 / m(r, c);
    for (int k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (int k = 0; k < m.rows(); ++k) {
      if (k == r || sgn(m(k, c)) == 0) continue;
      mpq_class f = m(k, c);
      for (int t = c; t < m.cols(); ++t) m(k, t) -= f * m(r, t);
    }
    pivots.push_back(c);
    ++r;
  }
  QMatrix trimmed(r, m.cols());
  for (int k = 0; k < r; ++k)
    for (int c = 0; c < m.cols(); ++c) trimmed(k, c) = m(k, c);
  m = std::move(trimmed);
  return pivots;
}

QMatrix null_space(const QMatrix& m) {
  QMatrix e = m;
  std::vector<int> piv = rref(e);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<Vec> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), mpq_class(0));
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -e(static_cast<int>(r), f);
    out.push_back(std::move(v));
  }
  return QMatrix::from_rows(out, m.cols());
}

mpq_class determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  const int n = m.rows();
  mpq_class det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (sgn(m(r, c)) != 0) {
        p = r;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      mpq_class f = m(r, c) / m(c, c);
      for (int k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

mpq_class dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
  mpq_class s = 0;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (sgn(x[k]) != 0 && sgn(y[k]) != 0) s += x[k] * y[k];
  return s;
}

Subspace::Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {
  if (ambient < 0) throw std::invalid_argument("Subspace: negative ambient dimension");
}

void Subspace::canonicalize() { pivots_ = rref(basis_); }

Subspace Subspace::span(const std::vector<Vec>& vectors, int ambient) {
  Subspace s(ambient);
  s.basis_ = QMatrix::from_rows(vectors, ambient);
  s.canonicalize();
  return s;
}

Subspace Subspace::span(const QMatrix& rows) {
  Subspace s(rows.cols());
  s.basis_ = rows;
  s.canonicalize();
  return s;
}

Subspace Subspace::coordinate(const std::vector<int>& indices, int ambient) {
  std::vector<Vec> vs;
  for (int l : indices) {
    if (l < 1 || l > ambient) throw std::out_of_range("Subspace::coordinate: index out of range");
    Vec v(ambient, mpq_class(0));
    v[l - 1] = 1;
    vs.push_back(std::move(v));
  }
  return span(vs, ambient);
}

Subspace Subspace::whole(int ambient) { return span(QMatrix::identity(ambient)); }

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> out;
  for (int r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("Subspace::contains: ambient mismatch");
  // Reduce v against the RREF rows; v lies in the span iff the residue vanishes.
  Vec w = v;
  for (int r = 0; r < dim(); ++r) {
    const mpq_class f = w[pivots_[r]];
    if (sgn(f) == 0) continue;
    for (int c = 0; c < ambient_; ++c)
      if (sgn(basis_(r, c)) != 0) w[c] -= f * basis_(r, c);
  }
  for (const auto& x : w)
    if (sgn(x) != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
  for (int r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace sum: ambient mismatch");
  std::vector<Vec> vs = vectors();
  for (auto& v : other.vectors()) vs.push_back(std::move(v));
  return span(vs, ambient_);
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return whole(ambient_);
  return span(null_space(basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("Subspace intersection: ambient mismatch");
  return (annihilator() + other.annihilator()).annihilator();
}

Subspace Subspace::kill(const std::vector<int>& coords) const {
  QMatrix m = basis_;
  for (int l : coords) {
    if (l < 1 || l > ambient_) throw std::out_of_range("Subspace::kill: index out of range");
    for (int r = 0; r < m.rows(); ++r) m(r, l - 1) = 0;
  }
  Subspace s(ambient_);
  s.basis_ = std::move(m);
  s.canonicalize();
  return s;
}

Subspace Subspace::kill_preimage(const std::vector<int>& coords) const {
  // {v : pi(v) in T} = (T cap im pi) + ker pi for the coordinate projection pi.
  std::vector<int> kept;
  for (int c = 1; c <= ambient_; ++c) {
    bool killed = false;
    for (int l : coords)
      if (l == c) killed = true;
    if (!killed) kept.push_back(c);
  }
  return intersect(coordinate(kept, ambient_)) + coordinate(coords, ambient_);
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << "span{";
  for (int r = 0; r < dim(); ++r) {
    os << (r ? ", " : "") << "(";
    for (int c = 0; c < ambient_; ++c) os << (c ? "," : "") << basis_(r, c).get_str();
    os << ")";
  }
  os << "}";
  return os.str();
}

}  // namespace spflag
