#pragma once

#include <optional>

#include "froblab/algebra.hpp"

namespace froblab {

/// Raised when an enumeration would exceed the configured dimension cap.
struct EnumerationLimit : std::runtime_error {
  explicit EnumerationLimit(const std::string& what) : std::runtime_error(what) {}
};

/// Right module over an algebra: one action matrix per algebra basis element,
/// acting on column coordinate vectors. Right-ness shows up as the reversed
/// composition law act(x*y) = act(y) act(x).
struct RightModule {
  AlgebraPtr algebra;
  std::size_t dim = 0;
  std::vector<Matrix> actions;

  Matrix action_of(const Vec& x) const;
  Vec act(const Vec& m, const Vec& x) const { return action_of(x).apply(m); }
};

Report check_module(const RightModule& m);
RightModule regular_right_module(AlgebraPtr a);

/// (L, R)-bimodule: a left action of L and a right action of R that commute.
struct Bimodule {
  AlgebraPtr left_algebra;
  AlgebraPtr right_algebra;
  std::size_t dim = 0;
  std::vector<Matrix> left_actions;
  std::vector<Matrix> right_actions;

  Matrix left_action_of(const Vec& x) const;
  Matrix right_action_of(const Vec& x) const;
};

Report check_bimodule(const Bimodule& m);

/// The algebra as a bimodule over itself.
Bimodule regular_bimodule(AlgebraPtr a);

/// View an (L, R)-bimodule as an (R^op, L^op)-bimodule on the same
/// coordinates (actions swap sides).
Bimodule opposite_bimodule(const Bimodule& m, AlgebraPtr r_op, AlgebraPtr l_op);

/// Forget the left structure.
RightModule right_part(const Bimodule& m);

struct ModuleMap {
  Matrix matrix;  // target.dim x source.dim
};

/// Basis of Hom over the algebra between two right modules, canonically
/// ordered. Each entry is a target.dim x source.dim matrix.
std::vector<Matrix> hom_space(const RightModule& m, const RightModule& n);

/// M (x)_A N for a (L, A)-bimodule and an (A, R)-bimodule, realised as an
/// explicit quotient of the plain tensor product. Quotient coordinates are
/// the non-pivot full coordinates after putting the relation space in rref;
/// `section` picks the canonical representative of each class.
struct TensorOverA {
  Bimodule total;           // the quotient, an (L, R)-bimodule
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  Subspace relations;       // inside the full product space
  std::vector<std::size_t> free_cols;
  Matrix proj;              // q x full
  Matrix section;           // full x q

  std::size_t full_dim() const { return left_dim * right_dim; }
  Vec to_quotient(const Vec& full) const { return proj.apply(full); }
  Vec lift(const Vec& q) const { return section.apply(q); }
  std::size_t flat(std::size_t i, std::size_t j) const { return i * right_dim + j; }
};

TensorOverA tensor_over_A(const Bimodule& m, const Bimodule& n);

/// All submodules of a right module over a finite field, enumerated as
/// invariant subspaces. Throws EnumerationLimit past the dimension cap.
std::vector<Subspace> submodules(const RightModule& m);

/// Cap on ambient dimension for subspace enumeration; tighter for larger
/// fields since the subspace count scales with p. FROBLAB_MAX_ENUM_DIM
/// overrides.
std::size_t enumeration_cap(const FieldSpec& field);

/// Annihilator in the algebra of a set of module elements (all of the module
/// when `elements` is empty).
Subspace annihilator(const RightModule& m, const std::vector<Vec>& elements);

struct QuotientModuleResult {
  RightModule module;
  Matrix projection;
  Matrix section;
};
QuotientModuleResult quotient_module(const RightModule& m, const Subspace& sub);

/// Restriction of a module map check: T intertwines the two actions.
bool is_module_map(const RightModule& m, const RightModule& n, const Matrix& t);

}  // namespace froblab
