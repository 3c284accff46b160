#pragma once

#include <optional>

#include "froblab/frobenius.hpp"

namespace froblab {

/// A Frobenius algebra over its ground field, presented by a spread element
/// e in S (x) S and a functional nu with the classical contraction
/// identities: s e = e s, nu(e1) e2 = 1 and e1 nu(e2) = 1.
struct FrobeniusAlgebraData {
  AlgebraPtr S;
  Vec e;      // full S (x) S coordinates
  Matrix nu;  // 1 x S.dim
};

FrobeniusAlgebraData make_frobenius_algebra(AlgebraPtr s, Vec e, Matrix nu);

/// The classical identities, checked through the generic system machinery
/// with the ground field as base.
Report verify_frobenius_algebra(const FrobeniusAlgebraData& fd);

/// The scalar extension R = S^op (x) A along an algebra map j: S -> A, with
/// i(a) = 1 (x) a and chi(s (x) a) = j(s) a. Throws on a non-unital or
/// non-multiplicative j.
ARingWithCharacter sop_tensor_ring(const FrobeniusAlgebraData& fd, const AlgebraMap& j);

/// The lifted system on S^op (x) A over the identity context:
/// E = (e2 (x) 1) (x)_A (e1 (x) 1) and N(s (x) a) = nu(s) a.
FrobeniusSystem lift_frobenius(const FrobeniusAlgebraData& fd, const AlgebraMap& j);

/// tr(a) = j(e1) a j(e2); lands in the centralizer of j's image.
Vec trace_s(const FrobeniusAlgebraData& fd, const AlgebraMap& j, const Vec& a);

/// Canonical solution of trace_s(a) = 1, if any.
std::optional<Vec> trace_s_witness(const FrobeniusAlgebraData& fd, const AlgebraMap& j);

/// An (S, A)-bimodule as a right module over S^op (x) A: m.(s (x) a) = s m a.
RightModule bimodule_to_right_module(const Bimodule& m, AlgebraPtr sop_tensor_a);

/// Inverse conversion, splitting the action through the two tensor legs.
Bimodule right_module_to_bimodule(const RightModule& m, AlgebraPtr s, AlgebraPtr a);

}  // namespace froblab
