#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "exactalg/scalar.hpp"

namespace exactalg {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field f, std::size_t n);
Vector unit_vector(Field f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);

// Dense row-major matrix. A linear map V -> W is stored as a dim W x dim V
// matrix whose column j is the image of the j-th basis vector.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols);
  // Integer literal rows, convenient for tests and builders.
  static Matrix from_ints(Field f, const std::vector<std::vector<long long>>& rows);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);
  void set_column(std::size_t c, const Vector& v);
  // Row-major flattening.
  const std::vector<Scalar>& data() const noexcept { return data_; }
  static Matrix from_flat(Field f, std::size_t rows, std::size_t cols, const Vector& flat);

  Matrix transpose() const;
  bool is_zero() const;
  Vector apply(const Vector& v) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

// Vertical / horizontal concatenation.
Matrix vstack(const std::vector<Matrix>& blocks);
Matrix hstack(const std::vector<Matrix>& blocks);
// Kronecker product; row (i, k) is i * b.rows() + k, column (j, l) is j * b.cols() + l.
Matrix tensor(const Matrix& a, const Matrix& b);
// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

struct RrefResult {
  Matrix matrix;
  std::vector<std::size_t> pivots;
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);
// Some x with m x = b, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

}  // namespace exactalg
