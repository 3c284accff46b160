#pragma once

#include <random>

#include "froblab/algebra.hpp"
#include "froblab/matrix.hpp"

namespace froblab::testing {

inline Scalar random_scalar(const FieldSpec& f, std::mt19937& rng) {
  if (f.kind == FieldKind::Prime) {
    std::uniform_int_distribution<long> d(0, f.p - 1);
    return f.from_int(d(rng));
  }
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 12);
  return f.canonical(BigInt(num(rng)), BigInt(den(rng)));
}

inline Vec random_vec(const FieldSpec& f, std::size_t n, std::mt19937& rng) {
  Vec v(n);
  for (auto& s : v) s = random_scalar(f, rng);
  return v;
}

inline Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_scalar(f, rng);
  return m;
}

// ---- shared fixture algebras ------------------------------------------------

/// Build an algebra from an explicit basis product table; table[i][j] lists
/// integer coefficients of b_i * b_j.
inline AlgebraPtr algebra_from_table(const FieldSpec& f, std::vector<std::string> names,
                                     const std::vector<std::vector<std::vector<long>>>& table,
                                     const std::vector<long>& unit) {
  std::size_t d = names.size();
  std::vector<Scalar> structure(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        structure[(i * d + j) * d + k] = f.from_int(table[i][j][k]);
  Vec u;
  for (long x : unit) u.push_back(f.from_int(x));
  return make_algebra(f, std::move(names), std::move(structure), u);
}

/// The coefficient field itself as a one-dimensional algebra.
inline AlgebraPtr field_algebra(const FieldSpec& f) {
  return algebra_from_table(f, {"1"}, {{{1}}}, {1});
}

/// Group algebra of the order-2 group, basis {1, g}.
inline AlgebraPtr group_algebra_c2(const FieldSpec& f) {
  return algebra_from_table(f, {"1", "g"},
                            {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}, {1, 0});
}

/// F[x]/(x^2), basis {1, x}.
inline AlgebraPtr dual_numbers(const FieldSpec& f) {
  return algebra_from_table(f, {"1", "x"},
                            {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, {1, 0});
}

/// F x F with the idempotent basis {e1, e2}.
inline AlgebraPtr product_field(const FieldSpec& f) {
  return algebra_from_table(f, {"e1", "e2"},
                            {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}}, {1, 1});
}

/// 2x2 matrices, basis {e11, e12, e21, e22}; e_ab e_cd = [b=c] e_ad.
inline AlgebraPtr mat2(const FieldSpec& f) {
  std::vector<std::string> names = {"e11", "e12", "e21", "e22"};
  std::vector<Scalar> structure(64);
  auto a = [&](std::size_t r, std::size_t c) { return r * 2 + c; };
  for (std::size_t r1 = 0; r1 < 2; ++r1)
    for (std::size_t c1 = 0; c1 < 2; ++c1)
      for (std::size_t r2 = 0; r2 < 2; ++r2)
        for (std::size_t c2 = 0; c2 < 2; ++c2)
          if (c1 == r2)
            structure[(a(r1, c1) * 4 + a(r2, c2)) * 4 + a(r1, c2)] = f.one();
  Vec unit(4);
  unit[0] = f.one();
  unit[3] = f.one();
  return make_algebra(f, names, structure, unit);
}

/// Upper triangular 2x2 matrices, basis {e11, e12, e22}.
inline AlgebraPtr upper_triangular2(const FieldSpec& f) {
  return algebra_from_table(
      f, {"e11", "e12", "e22"},
      {{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}},
       {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}},
       {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}},
      {1, 0, 1});
}

inline Vec ivec(const FieldSpec& f, const std::vector<long>& entries) {
  Vec v;
  for (long x : entries) v.push_back(f.from_int(x));
  return v;
}

inline Matrix imat(const FieldSpec& f, const std::vector<std::vector<long>>& rows) {
  std::vector<Vec> vr;
  for (const auto& r : rows) vr.push_back(ivec(f, r));
  return Matrix::from_rows(f, vr);
}

}  // namespace froblab::testing
