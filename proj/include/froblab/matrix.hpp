#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "froblab/field.hpp"

namespace froblab {

/// Dense matrix over an exact field; row-major storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix from_rows(const FieldSpec& field, const std::vector<Vec>& rows);
  static Matrix row_vector(const FieldSpec& field, const Vec& v);
  static Matrix column_vector(const FieldSpec& field, const Vec& v);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);

  Matrix mul(const Matrix& rhs) const;
  Vec apply(const Vec& v) const;  // this * column vector
  Matrix add(const Matrix& rhs) const;
  Matrix sub(const Matrix& rhs) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transposed() const;
  bool is_zero() const;

  /// Horizontal / vertical concatenation.
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

/// Reduced row echelon form: pivots scaled to 1, cleared above and below.
RrefResult rref(const Matrix& m);

/// Canonical solution of M x = b: free coordinates set to zero.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Canonical basis of the null space, one row per basis vector, in rref form.
Matrix kernel_basis(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Kronecker product: (a ⊗ b)[i*br + k][j*bc + l] = a[i][j] * b[k][l].
/// Matches the flat pair index convention used for tensor coordinates.
Matrix kron(const Matrix& a, const Matrix& b);

/// Flat coordinates of v ⊗ w: index i * w.size() + j carries v[i] * w[j].
Vec kron_vec(const FieldSpec& field, const Vec& v, const Vec& w);

// Small vector helpers shared across modules.
Vec vec_zero(std::size_t n);
Vec unit_vec(const FieldSpec& field, std::size_t n, std::size_t i);
Vec vec_add(const FieldSpec& field, const Vec& a, const Vec& b);
Vec vec_sub(const FieldSpec& field, const Vec& a, const Vec& b);
Vec vec_scale(const FieldSpec& field, const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);
std::string vec_to_string(const FieldSpec& field, const Vec& v);

}  // namespace froblab
