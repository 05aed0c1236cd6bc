#ifndef RBL_MATRIX_HPP
#define RBL_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "rbl/rational.hpp"

namespace rbl {

using Vec = std::vector<Rational>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);
Vec& operator+=(Vec& a, const Vec& b);
bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols);
  /// Diagonal blocks in the order given, zeros elsewhere.
  static Matrix block_diag(const std::vector<Matrix>& blocks);
  static Matrix from_columns(const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  friend Matrix operator*(const Rational& s, const Matrix& m);
  Vec operator*(const Vec& v) const;
  bool operator==(const Matrix& o) const = default;

  Matrix transposed() const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Exact row rank, fraction-free (Bareiss) elimination over the integers.
std::size_t rank(const Matrix& m);

/// Basis of the right null space; M*v = 0 exactly for every returned v.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Some x with M*x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Incremental echelonized span of column vectors, used for image
/// membership and for reducing cocycles modulo coboundaries.
class ColumnSpace {
 public:
  explicit ColumnSpace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  explicit ColumnSpace(const Matrix& columns);

  /// Returns v minus its projection onto the span (zero iff v is a member).
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return rbl::is_zero(reduce(v)); }
  /// Adds v to the span; returns false when v was already a member.
  bool insert(Vec v);
  std::size_t dim() const { return basis_.size(); }

 private:
  std::size_t ambient_;
  std::vector<std::pair<std::size_t, Vec>> basis_;  // (pivot row, vector)
};

}  // namespace rbl

#endif
