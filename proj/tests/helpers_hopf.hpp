#pragma once

#include "froblab/hopf.hpp"
#include "helpers.hpp"

namespace froblab::testing {

/// Group Hopf structure on the order-2 group algebra: both basis elements
/// grouplike, identity antipode.
inline HopfPresentation group_hopf_c2(const FieldSpec& f) {
  AlgebraPtr h = group_algebra_c2(f);
  Matrix comul(f, 4, 2);
  comul.at(0, 0) = f.one();  // Delta(1) = 1 (x) 1
  comul.at(3, 1) = f.one();  // Delta(g) = g (x) g
  Matrix counit = imat(f, {{1, 1}});
  return make_hopf(h, comul, counit, Matrix::identity(f, 2));
}

/// Sweedler's four-dimensional Hopf algebra on basis {1, g, x, gx}:
/// g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x (x) 1 + g (x) x, S(x) = -gx.
/// Its antipode has order four, so Sbar differs from S.
inline HopfPresentation sweedler_hopf(const FieldSpec& f) {
  AlgebraPtr h = algebra_from_table(
      f, {"1", "g", "x", "gx"},
      {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
       {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}},
       {{0, 0, 1, 0}, {0, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 0}},
       {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}},
      {1, 0, 0, 0});
  Matrix comul(f, 16, 4);
  comul.at(0, 0) = f.one();                                   // 1 (x) 1
  comul.at(5, 1) = f.one();                                   // g (x) g
  comul.at(8, 2) = f.one();                                   // x (x) 1
  comul.at(6, 2) = f.one();                                   // g (x) x
  comul.at(13, 3) = f.one();                                  // gx (x) g
  comul.at(3, 3) = f.one();                                   // 1 (x) gx
  Matrix counit = imat(f, {{1, 1, 0, 0}});
  Matrix antipode = imat(f, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  return make_hopf(h, comul, counit, antipode);
}

/// h . a = eps(h) a on any algebra over the same field.
inline ModuleAlgebraAction trivial_action(const HopfPresentation& hopf, AlgebraPtr a) {
  const FieldSpec& f = a->field;
  std::vector<Matrix> action;
  for (std::size_t s = 0; s < hopf.H->dim; ++s)
    action.push_back(Matrix::identity(f, a->dim).scaled(hopf.counit.at(0, s)));
  return make_module_algebra(hopf, std::move(a), std::move(action));
}

/// The order-2 group swapping the two factors of F x F.
inline ModuleAlgebraAction swap_action(const FieldSpec& f) {
  std::vector<Matrix> action{Matrix::identity(f, 2), imat(f, {{0, 1}, {1, 0}})};
  return make_module_algebra(group_hopf_c2(f), product_field(f), std::move(action));
}

}  // namespace froblab::testing
