#pragma once

#include "froblab/frobenius.hpp"
#include "helpers_character.hpp"

namespace froblab::testing {

/// The order-2 group algebra over its ground field.
inline ARing kc2_aring(const FieldSpec& f) {
  AlgebraPtr k = field_algebra(f);
  AlgebraPtr r = group_algebra_c2(f);
  return ARing{k, r, AlgebraMap{k, r, imat(f, {{1}, {0}}), true}};
}

/// Classical system on the order-2 group algebra: e = 1 (x) 1 + g (x) g,
/// nu = coefficient of 1, chi = the augmentation.
inline FrobeniusSystem kc2_system(const FieldSpec& f) {
  return classical_system(kc2_aring(f), ivec(f, {1, 0, 0, 1}), imat(f, {{1, 0}}),
                          imat(f, {{1, 1}}));
}

/// Classical system on 2x2 matrices over the ground field: e is the sum of
/// e_ij (x) e_ji, nu is the matrix trace. No character exists here.
inline FrobeniusSystem m2_system(const FieldSpec& f) {
  AlgebraPtr k = field_algebra(f);
  AlgebraPtr r = mat2(f);
  ARing ring{k, r, AlgebraMap{k, r, imat(f, {{1}, {0}, {0}, {1}}), true}};
  Vec e = vec_zero(16);
  for (std::size_t idx : {std::size_t{0}, std::size_t{6}, std::size_t{9}, std::size_t{15}})
    e[idx] = f.one();
  return classical_system(std::move(ring), e, imat(f, {{1, 0, 0, 1}}), std::nullopt);
}

/// R = A with everything the identity.
inline FrobeniusSystem trivial_system(AlgebraPtr a) {
  const FieldSpec& f = a->field;
  Matrix id = Matrix::identity(f, a->dim);
  ARing ring{a, a, AlgebraMap{a, a, id, true}};
  return classical_system(std::move(ring), kron_vec(f, a->unit, a->unit), id, id);
}

/// A non-identity strict context on the product field: both bimodules carry
/// the regular left action and the swap-twisted right action, paired by
/// multiply-after-swap.
inline MoritaContext swap_context(const FieldSpec& f) {
  AlgebraPtr a = product_field(f);
  Matrix tau = imat(f, {{0, 1}, {1, 0}});
  Bimodule twisted;
  twisted.left_algebra = a;
  twisted.right_algebra = a;
  twisted.dim = 2;
  for (std::size_t i = 0; i < 2; ++i) {
    twisted.left_actions.push_back(a->left_mult_basis(i));
    twisted.right_actions.push_back(a->right_mult(tau.apply(unit_vec(f, 2, i))));
  }
  Matrix pair(f, 2, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Vec p = a->multiply(unit_vec(f, 2, i), tau.apply(unit_vec(f, 2, j)));
      for (std::size_t k = 0; k < 2; ++k) pair.at(k, i * 2 + j) = p[k];
    }
  return make_morita_context(a, twisted, twisted, pair, pair, ivec(f, {0, 1, 1, 0}));
}

}  // namespace froblab::testing
