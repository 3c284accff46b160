#pragma once

#include <vector>

#include "froblab/character.hpp"

namespace froblab {

/// An A-coring: an (A, A)-bimodule C with a comultiplication into the
/// canonical C (x)_A C quotient coordinates and a counit into A, both
/// A-bimodule maps.
struct CoringPresentation {
  AlgebraPtr A;
  Bimodule C;
  Matrix comul;   // (C (x)_A C quotient dim) x dim C
  Matrix counit;  // A.dim x dim C
};

/// Shape checks only; the axioms live in verify_coring.
CoringPresentation make_coring(AlgebraPtr a, Bimodule c, Matrix comul, Matrix counit);

/// The canonical C (x)_A C quotient a coring computes in.
TensorOverA coring_square(const CoringPresentation& c);

/// Bimodule linearity of both structure maps, coassociativity and the two
/// counit laws, as exact identities in quotient coordinates.
Report verify_coring(const CoringPresentation& c);

/// Delta(x) = x (x) x and eps(x) = 1.
bool is_grouplike(const CoringPresentation& c, const Vec& x);

/// The left dual ring of a coring with a grouplike element: left A-linear
/// maps C -> A under (f # g)(c) = g(c_(1) f(c_(2))), with i(a)(c) = eps(c) a
/// and the right-handed character chi(f) = f(x). hom_basis realises each
/// ring basis element as a concrete functional.
struct DualRingResult {
  ARingWithCharacter rc;
  std::vector<Matrix> hom_basis;  // each A.dim x dim C
  Vec x;
};

/// Throws InvalidInput when x is not grouplike.
DualRingResult dual_ring(const CoringPresentation& c, const Vec& x);

/// {a in A : a x = x a}, the coinvariants of the grouplike element. Always
/// a subring of the dual ring's invariant subalgebra B; equal to it when C
/// is finitely generated projective over A.
Subspace coinvariants(const CoringPresentation& c, const Vec& x);

/// A Frobenius structure on a coring: a bimodule map theta on the square
/// (quotient coordinates) and a central element z, normalised against the
/// counit.
struct FrobeniusCoringSystem {
  Matrix theta;  // A.dim x (C (x)_A C quotient dim)
  Vec z;
};

/// Bimodule linearity of theta, centrality of z, the sliding law
/// c_(1) theta(c_(2) (x) d) = theta(c (x) d_(1)) d_(2) and the
/// normalisation theta(z (x) c) = eps(c) = theta(c (x) z).
Report verify_frobenius_coring(const CoringPresentation& c, const FrobeniusCoringSystem& sys);

/// alpha(a)(c) = theta(c a (x) x) as a map from A into the dual ring, its
/// inverse q -> q(z), and the trace tr(a) = theta(x a (x) x). The report
/// pins alpha as a bijection onto Q, the printed description of Q, the
/// trace landing in B and the transported module action.
struct CoringTraceData {
  Matrix alpha;      // dual dim x A.dim
  Matrix alpha_inv;  // A.dim x dual dim
  Matrix trace;      // A.dim x A.dim
  Report report;
};

CoringTraceData coring_alpha_trace(const CoringPresentation& c, const FrobeniusCoringSystem& sys,
                                   const DualRingResult& dual);

}  // namespace froblab
