#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace spflag {

using Vec = std::vector<mpq_class>;

// Dense matrix over the rationals, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols);

  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpq_class& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const mpq_class& operator()(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  Vec row(int r) const;
  QMatrix transpose() const;
  bool is_zero() const;

  friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
  friend QMatrix operator+(const QMatrix& x, const QMatrix& y);
  friend QMatrix operator-(const QMatrix& x, const QMatrix& y);
  friend QMatrix operator*(const mpq_class& s, const QMatrix& x);
  friend bool operator==(const QMatrix& x, const QMatrix& y);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> a_;
};

// In-place reduced row echelon form; zero rows are dropped. Returns pivot columns.
std::vector<int> rref(QMatrix& m);

// Rows form a basis of {x : m x = 0}.
QMatrix null_space(const QMatrix& m);

mpq_class determinant(QMatrix m);

mpq_class dot(const Vec& x, const Vec& y);

// Row space of a matrix, kept in canonical RREF so equality is matrix equality.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient);

  static Subspace span(const std::vector<Vec>& vectors, int ambient);
  static Subspace span(const QMatrix& rows);
  // Span of basis vectors w_l for the given 1-based indices.
  static Subspace coordinate(const std::vector<int>& indices, int ambient);
  static Subspace whole(int ambient);

  int dim() const { return basis_.rows(); }
  int ambient() const { return ambient_; }
  const QMatrix& basis() const { return basis_; }
  std::vector<Vec> vectors() const;
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // Vectors orthogonal to the subspace under the standard dot product.
  Subspace annihilator() const;
  // Image under the coordinate projection that zeroes the given 1-based coordinates.
  Subspace kill(const std::vector<int>& coords) const;
  // Preimage of this subspace under the projection killing `coords`.
  Subspace kill_preimage(const std::vector<int>& coords) const;

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.ambient_ == y.ambient_ && x.basis_ == y.basis_;
  }

  std::string to_string() const;

 private:
  void canonicalize();

  int ambient_ = 0;
  QMatrix basis_;
  std::vector<int> pivots_;
};

}  // namespace spflag
