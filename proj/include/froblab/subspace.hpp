#pragma once

#include <vector>

#include "froblab/matrix.hpp"

namespace froblab {

/// A linear subspace of F^n held as a canonical rref basis, so equality of
/// subspaces is plain equality of representations.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(const FieldSpec& field, std::size_t ambient);
  static Subspace full(const FieldSpec& field, std::size_t ambient);
  static Subspace from_span(const Matrix& rows);
  static Subspace from_span(const FieldSpec& field, const std::vector<Vec>& vectors);

  const FieldSpec& field() const { return basis_.field(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Residue of v after eliminating this subspace's pivot coordinates.
  Vec reduce(const Vec& v) const;
  /// Coordinates of v in the rref basis; throws if v lies outside.
  Vec coordinates(const Vec& v) const;

  Subspace meet(const Subspace& other) const;
  Subspace join(const Subspace& other) const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;  // rref, one basis vector per row
  std::vector<std::size_t> pivots_;
};

/// Every subspace of F^ambient, prime fields only. Deterministic order:
/// dimension ascending, pivot sets lexicographic, then free entries counted
/// up in row-major base-p order. Count grows fast; callers cap the ambient
/// dimension before invoking.
std::vector<Subspace> all_subspaces(const FieldSpec& field, std::size_t ambient);

/// Number of subspaces of F_p^n (Galois number), used for cap diagnostics.
BigInt count_subspaces(long p, std::size_t n);

}  // namespace froblab
