#pragma once

#include <memory>
#include <string>
#include <vector>

#include "froblab/matrix.hpp"
#include "froblab/report.hpp"
#include "froblab/subspace.hpp"

namespace froblab {

/// Raised when inputs violate a structural precondition (dimension or field
/// mismatch, map between the wrong objects, and so on).
struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// A finite-dimensional unital associative algebra, given by structure
/// constants on a fixed basis: c(i,j,k) is the coefficient of basis k in
/// the product b_i * b_j. Elements are coefficient vectors (Vec).
struct Algebra {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  std::vector<Scalar> structure;  // dim^3 entries, index (i*dim + j)*dim + k
  Vec unit;

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return structure[(i * dim + j) * dim + k];
  }
  Scalar& c(std::size_t i, std::size_t j, std::size_t k) {
    return structure[(i * dim + j) * dim + k];
  }

  Vec multiply(const Vec& x, const Vec& y) const;
  /// L_x as a matrix: y -> x*y.
  Matrix left_mult(const Vec& x) const;
  /// R_x as a matrix: y -> y*x.
  Matrix right_mult(const Vec& x) const;
  Matrix left_mult_basis(std::size_t i) const;
  Matrix right_mult_basis(std::size_t i) const;

  std::string element_to_string(const Vec& x) const;

  bool operator==(const Algebra& o) const {
    return field == o.field && dim == o.dim && structure == o.structure && unit == o.unit;
  }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_algebra(FieldSpec field, std::vector<std::string> names,
                        std::vector<Scalar> structure, Vec unit);

/// The ground field as a one-dimensional algebra.
AlgebraPtr scalar_algebra(const FieldSpec& field);

/// Associativity, unit laws, and well-formedness of the presentation.
Report check_algebra(const Algebra& a);

/// A linear map between algebras, stored target-dim x source-dim. When
/// constructed through make_algebra_map it is verified multiplicative, and
/// unital unless the flag says otherwise.
struct AlgebraMap {
  AlgebraPtr source;
  AlgebraPtr target;
  Matrix matrix;
  bool unital = true;

  Vec apply(const Vec& x) const { return matrix.apply(x); }
};

AlgebraMap make_algebra_map(AlgebraPtr source, AlgebraPtr target, Matrix m, bool unital = true);
Report check_algebra_map(const AlgebraMap& f);

AlgebraPtr opposite(const Algebra& a);
AlgebraPtr tensor_algebra(const Algebra& a, const Algebra& b);

/// Centralizer of the image of j inside j's target algebra.
Subspace centralizer(const AlgebraMap& j);

enum class IdealSide { Left, Right, TwoSided };

/// Smallest ideal of the given sidedness containing the generators.
Subspace ideal_generated(const Algebra& a, const std::vector<Vec>& gens, IdealSide side);

/// Presentation of a multiplicatively closed, unit-containing subspace as an
/// algebra in its own right, plus the inclusion map back into `a`.
struct SubalgebraResult {
  AlgebraPtr algebra;
  Matrix inclusion;  // a.dim x sub.dim
};
SubalgebraResult subalgebra_presentation(AlgebraPtr a, const Subspace& basis,
                                         const std::string& name_prefix = "s");

/// Quotient by a two-sided ideal, with the projection and a linear section
/// picking the canonical representative of each class.
struct QuotientAlgebraResult {
  AlgebraPtr algebra;
  Matrix projection;  // q x a.dim
  Matrix section;     // a.dim x q
};
QuotientAlgebraResult quotient_algebra(AlgebraPtr a, const Subspace& ideal);

}  // namespace froblab
