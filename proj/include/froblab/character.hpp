#pragma once

#include <optional>

#include "froblab/module.hpp"

namespace froblab {

/// An algebra R containing a designated subalgebra A via the marked unital
/// ring map i.
struct ARing {
  AlgebraPtr A;
  AlgebraPtr R;
  AlgebraMap i;  // A -> R
};

enum class Handedness { Right, Left };

/// An A-ring together with a character chi: R -> A splitting i. Right-handed
/// data means chi is right A-linear and satisfies chi(chi(r)s) = chi(rs);
/// left-handed data is the mirror image and is handled by passing to the
/// opposite algebras, which lives on the same coordinates.
struct ARingWithCharacter {
  ARing ring;
  Matrix chi;  // A.dim x R.dim
  Handedness handed = Handedness::Right;

  Vec chi_of(const Vec& r) const { return chi.apply(r); }
};

ARingWithCharacter make_character_ring(ARing ring, Matrix chi,
                                       Handedness handed = Handedness::Right);

/// The same structure over the opposite algebras with the handedness flipped.
/// Involution: applying it twice returns the original matrices.
ARingWithCharacter opposite_view(const ARingWithCharacter& rc);

/// Checks the character laws (linearity on the marked side, the projection
/// law, unit normalisation, and chi o i = id).
Report verify_character(const ARingWithCharacter& rc);

/// The induced action of r on A: right-handed a*r = chi(i(a) r).
Vec action_on_A(const ARingWithCharacter& rc, const Vec& a, const Vec& r);

/// A as a module over R via the induced action. For left-handed input this
/// is a right module over R^op.
RightModule a_as_module(const ARingWithCharacter& rc);

/// R as an A-bimodule through i.
Bimodule r_as_A_bimodule(const ARingWithCharacter& rc);

struct InvariantsBundle {
  Subspace B;  // inside A: largest subalgebra chi is linear over
  Subspace Q;  // inside R: elements collapsing multiplication through chi
  std::optional<Subspace> MR;  // invariants of the optional extra module
};

/// B, Q and optionally M^R, with the closure laws they must satisfy
/// re-verified (violations mean the input character was invalid).
InvariantsBundle invariants(const ARingWithCharacter& rc, const RightModule* m = nullptr);

struct HomIsoResult {
  std::vector<Matrix> hom_basis;  // Hom_R(A, M), canonical order
  Matrix phi;                     // evaluation at 1: hom coords -> M coords
  Subspace mr;                    // M^R inside M
  Report report;                  // bijectivity onto M^R, inverse agreement
};

/// The evaluation isomorphism Hom_R(A, M) = M^R, checked computationally.
HomIsoResult hom_iso_phi(const ARingWithCharacter& rc, const RightModule& m);

/// A projectivity witness: q in Q with chi(q) = 1, if one exists.
std::optional<Vec> projectivity_witness(const ARingWithCharacter& rc);

struct QuasiProjectivityResult {
  bool quasi_projective = true;
  std::size_t submodules_checked = 0;
  /// First submodule where the invariant count drops below the image count.
  std::optional<Subspace> failing_submodule;
  std::size_t failing_invariant_dim = 0;
  std::size_t failing_image_dim = 0;
};

/// Compares, for every submodule I of A, the invariants of A/I with the
/// image of B in A/I. The canonical comparison map is injective, so equal
/// dimensions mean surjective.
QuasiProjectivityResult is_quasi_projective(const ARingWithCharacter& rc);

}  // namespace froblab
