#pragma once

#include "froblab/character.hpp"
#include "helpers.hpp"

namespace froblab::testing {

/// R = A with i = chi = id.
inline ARingWithCharacter trivial_rc(AlgebraPtr a) {
  AlgebraMap id{a, a, Matrix::identity(a->field, a->dim), true};
  return make_character_ring(ARing{a, a, id}, Matrix::identity(a->field, a->dim));
}

/// A = the ground field inside the order-2 group algebra, chi = augmentation.
inline ARingWithCharacter augmentation_rc(const FieldSpec& f) {
  AlgebraPtr k = field_algebra(f);
  AlgebraPtr r = group_algebra_c2(f);
  AlgebraMap i{k, r, imat(f, {{1}, {0}}), true};
  return make_character_ring(ARing{k, r, i}, imat(f, {{1, 1}}));
}

/// A = diagonal pair inside upper triangular 2x2, chi drops the strict part.
inline ARingWithCharacter ut2_diag_rc(const FieldSpec& f) {
  AlgebraPtr a = product_field(f);
  AlgebraPtr r = upper_triangular2(f);
  AlgebraMap i{a, r, imat(f, {{1, 0}, {0, 0}, {0, 1}}), true};
  return make_character_ring(ARing{a, r, i}, imat(f, {{1, 0, 0}, {0, 0, 1}}));
}

/// Same inclusion, but chi projects along the right ideal span{e12 + e22}.
inline ARingWithCharacter ut2_diag_rc_skew(const FieldSpec& f) {
  AlgebraPtr a = product_field(f);
  AlgebraPtr r = upper_triangular2(f);
  AlgebraMap i{a, r, imat(f, {{1, 0}, {0, 0}, {0, 1}}), true};
  return make_character_ring(ARing{a, r, i}, imat(f, {{1, 0, 0}, {0, -1, 1}}));
}

/// A = span{1, e12} (dual numbers) inside upper triangular 2x2, projecting
/// along the right ideal span{e22}.
inline ARingWithCharacter ut2_dual_rc(const FieldSpec& f) {
  AlgebraPtr a = dual_numbers(f);
  AlgebraPtr r = upper_triangular2(f);
  AlgebraMap i{a, r, imat(f, {{1, 0}, {0, 1}, {1, 0}}), true};
  return make_character_ring(ARing{a, r, i}, imat(f, {{1, 0, 0}, {0, 1, 0}}));
}

/// A = ground field inside upper triangular 2x2 via the top corner.
inline ARingWithCharacter ut2_corner_rc(const FieldSpec& f, Handedness handed) {
  AlgebraPtr k = field_algebra(f);
  AlgebraPtr r = upper_triangular2(f);
  AlgebraMap i{k, r, imat(f, {{1}, {0}, {1}}), true};
  return make_character_ring(ARing{k, r, i}, imat(f, {{1, 0, 0}}), handed);
}

}  // namespace froblab::testing
