#include "froblab/frobext.hpp"

namespace froblab {

namespace {

void check_j(const FrobeniusAlgebraData& fd, const AlgebraMap& j) {
  if (!j.source || !j.target) throw InvalidInput("j must connect S to A");
  if (!(*j.source == *fd.S)) throw InvalidInput("j must start at S");
  if (!check_algebra_map(j).ok()) throw InvalidInput("j must be a unital algebra map");
}

}  // namespace

FrobeniusAlgebraData make_frobenius_algebra(AlgebraPtr s, Vec e, Matrix nu) {
  if (!s) throw InvalidInput("Frobenius algebra needs an algebra");
  if (e.size() != s->dim * s->dim) throw InvalidInput("e must live in S (x) S");
  if (nu.rows() != 1 || nu.cols() != s->dim) throw InvalidInput("nu must be a functional on S");
  return FrobeniusAlgebraData{std::move(s), std::move(e), std::move(nu)};
}

Report verify_frobenius_algebra(const FrobeniusAlgebraData& fd) {
  AlgebraPtr k = scalar_algebra(fd.S->field);
  ARing ring{k, fd.S, AlgebraMap{k, fd.S, Matrix::column_vector(fd.S->field, fd.S->unit), true}};
  FrobeniusSystem sys = classical_system(std::move(ring), fd.e, fd.nu, std::nullopt);
  return verify_frobenius(sys);
}

ARingWithCharacter sop_tensor_ring(const FrobeniusAlgebraData& fd, const AlgebraMap& j) {
  check_j(fd, j);
  const Algebra& S = *fd.S;
  const Algebra& A = *j.target;
  const FieldSpec& f = S.field;
  if (A.field != f) throw InvalidInput("S and A must share a field");

  AlgebraPtr r = tensor_algebra(*opposite(S), A);
  Matrix im(f, r->dim, A.dim);
  for (std::size_t a = 0; a < A.dim; ++a) {
    Vec col = kron_vec(f, S.unit, unit_vec(f, A.dim, a));
    for (std::size_t t = 0; t < r->dim; ++t) im.at(t, a) = col[t];
  }
  Matrix chi(f, A.dim, r->dim);
  for (std::size_t s = 0; s < S.dim; ++s) {
    Vec js = j.apply(unit_vec(f, S.dim, s));
    for (std::size_t a = 0; a < A.dim; ++a) {
      Vec val = A.multiply(js, unit_vec(f, A.dim, a));
      for (std::size_t t = 0; t < A.dim; ++t) chi.at(t, s * A.dim + a) = val[t];
    }
  }
  ARing ring{j.target, r, AlgebraMap{j.target, r, std::move(im), true}};
  return make_character_ring(std::move(ring), std::move(chi), Handedness::Right);
}

FrobeniusSystem lift_frobenius(const FrobeniusAlgebraData& fd, const AlgebraMap& j) {
  ARingWithCharacter rc = sop_tensor_ring(fd, j);
  const Algebra& S = *fd.S;
  const Algebra& A = *j.target;
  const FieldSpec& f = S.field;
  std::size_t rdim = rc.ring.R->dim;

  Vec e_rr(rdim * rdim);
  for (std::size_t s1 = 0; s1 < S.dim; ++s1)
    for (std::size_t s2 = 0; s2 < S.dim; ++s2) {
      const Scalar& c = fd.e[s1 * S.dim + s2];
      if (f.is_zero(c)) continue;
      Vec r2 = kron_vec(f, unit_vec(f, S.dim, s2), A.unit);
      Vec r1 = kron_vec(f, unit_vec(f, S.dim, s1), A.unit);
      e_rr = vec_add(f, e_rr, vec_scale(f, c, kron_vec(f, r2, r1)));
    }

  Matrix nu_r(f, A.dim, rdim);
  for (std::size_t s = 0; s < S.dim; ++s) {
    Scalar ns = fd.nu.apply(unit_vec(f, S.dim, s))[0];
    for (std::size_t a = 0; a < A.dim; ++a)
      nu_r.at(a, s * A.dim + a) = ns;
  }

  return classical_system(rc.ring, e_rr, nu_r, rc.chi);
}

Vec trace_s(const FrobeniusAlgebraData& fd, const AlgebraMap& j, const Vec& a) {
  check_j(fd, j);
  const Algebra& S = *fd.S;
  const Algebra& A = *j.target;
  const FieldSpec& f = S.field;
  Vec out = vec_zero(A.dim);
  for (std::size_t s1 = 0; s1 < S.dim; ++s1)
    for (std::size_t s2 = 0; s2 < S.dim; ++s2) {
      const Scalar& c = fd.e[s1 * S.dim + s2];
      if (f.is_zero(c)) continue;
      Vec j1 = j.apply(unit_vec(f, S.dim, s1));
      Vec j2 = j.apply(unit_vec(f, S.dim, s2));
      out = vec_add(f, out, vec_scale(f, c, A.multiply(A.multiply(j1, a), j2)));
    }
  return out;
}

std::optional<Vec> trace_s_witness(const FrobeniusAlgebraData& fd, const AlgebraMap& j) {
  const Algebra& A = *j.target;
  const FieldSpec& f = A.field;
  Matrix tm(f, A.dim, A.dim);
  for (std::size_t a = 0; a < A.dim; ++a) {
    Vec col = trace_s(fd, j, unit_vec(f, A.dim, a));
    for (std::size_t t = 0; t < A.dim; ++t) tm.at(t, a) = col[t];
  }
  return solve(tm, A.unit);
}

RightModule bimodule_to_right_module(const Bimodule& m, AlgebraPtr sop_tensor_a) {
  const Algebra& S = *m.left_algebra;
  const Algebra& A = *m.right_algebra;
  if (!sop_tensor_a || sop_tensor_a->dim != S.dim * A.dim)
    throw InvalidInput("the target algebra must be S^op (x) A");
  RightModule out;
  out.algebra = sop_tensor_a;
  out.dim = m.dim;
  for (std::size_t s = 0; s < S.dim; ++s)
    for (std::size_t a = 0; a < A.dim; ++a)
      out.actions.push_back(m.right_actions[a].mul(m.left_actions[s]));
  return out;
}

Bimodule right_module_to_bimodule(const RightModule& m, AlgebraPtr s, AlgebraPtr a) {
  const FieldSpec& f = m.algebra->field;
  if (m.algebra->dim != s->dim * a->dim)
    throw InvalidInput("the module's algebra must be S^op (x) A");
  Bimodule out;
  out.left_algebra = s;
  out.right_algebra = a;
  out.dim = m.dim;
  for (std::size_t t = 0; t < s->dim; ++t)
    out.left_actions.push_back(m.action_of(kron_vec(f, unit_vec(f, s->dim, t), a->unit)));
  for (std::size_t t = 0; t < a->dim; ++t)
    out.right_actions.push_back(m.action_of(kron_vec(f, s->unit, unit_vec(f, a->dim, t))));
  return out;
}

}  // namespace froblab
