#include "froblab/character.hpp"

namespace froblab {

ARingWithCharacter make_character_ring(ARing ring, Matrix chi, Handedness handed) {
  if (!ring.A || !ring.R) throw InvalidInput("character ring needs both algebras");
  if (ring.i.matrix.rows() != ring.R->dim || ring.i.matrix.cols() != ring.A->dim)
    throw InvalidInput("i must be an R.dim x A.dim matrix");
  if (chi.rows() != ring.A->dim || chi.cols() != ring.R->dim)
    throw InvalidInput("chi must be an A.dim x R.dim matrix");
  if (ring.A->field != ring.R->field) throw InvalidInput("field mismatch between A and R");
  return ARingWithCharacter{std::move(ring), std::move(chi), handed};
}

ARingWithCharacter opposite_view(const ARingWithCharacter& rc) {
  AlgebraPtr aop = opposite(*rc.ring.A);
  AlgebraPtr rop = opposite(*rc.ring.R);
  // i stays multiplicative against the reversed products; reuse the matrix.
  AlgebraMap iop{aop, rop, rc.ring.i.matrix, rc.ring.i.unital};
  ARing ring{aop, rop, iop};
  Handedness flipped = rc.handed == Handedness::Right ? Handedness::Left : Handedness::Right;
  return ARingWithCharacter{std::move(ring), rc.chi, flipped};
}

namespace {

/// All verification and computation below is written for right-handed data;
/// left-handed input is routed through the opposite algebras first. The
/// coordinates of A and R never change under that passage, so subspaces and
/// witnesses computed on the opposite view are returned as-is.
const ARingWithCharacter& right_view(const ARingWithCharacter& rc,
                                     std::optional<ARingWithCharacter>& storage) {
  if (rc.handed == Handedness::Right) return rc;
  storage = opposite_view(rc);
  return *storage;
}

}  // namespace

Report verify_character(const ARingWithCharacter& rc_in) {
  std::optional<ARingWithCharacter> storage;
  const ARingWithCharacter& rc = right_view(rc_in, storage);
  bool left = rc_in.handed == Handedness::Left;

  Report rep;
  rep.append_prefixed(check_algebra(*rc_in.ring.A), "A");
  rep.append_prefixed(check_algebra(*rc_in.ring.R), "R");
  {
    // Validate i against the algebras as given (not the opposite view) so
    // counterexample names match the input presentation.
    AlgebraMap i_raw{rc_in.ring.A, rc_in.ring.R, rc_in.ring.i.matrix, true};
    rep.append_prefixed(check_algebra_map(i_raw), "i");
  }
  if (!rep.ok()) return rep;

  const Algebra& A = *rc.ring.A;
  const Algebra& R = *rc.ring.R;
  const FieldSpec& f = A.field;
  const Matrix& chi = rc.chi;
  const Matrix& im = rc.ring.i.matrix;

  auto& lin = rep.start("chi-linear",
                        left ? "chi(i(a)*r) = a*chi(r)" : "chi(r*i(a)) = chi(r)*a");
  for (std::size_t a = 0; a < A.dim; ++a) {
    Vec ia = im.apply(unit_vec(f, A.dim, a));
    Matrix lhs = chi.mul(R.right_mult(ia));
    Matrix rhs = A.right_mult(unit_vec(f, A.dim, a)).mul(chi);
    record(lin, lhs == rhs, "a=" + A.basis_names[a]);
  }

  auto& proj = rep.start("chi-project",
                         left ? "chi(r*i(chi(s))) = chi(r*s)" : "chi(i(chi(r))*s) = chi(r*s)");
  for (std::size_t r = 0; r < R.dim; ++r) {
    Vec lifted = im.apply(chi.apply(unit_vec(f, R.dim, r)));
    for (std::size_t s = 0; s < R.dim; ++s) {
      Vec lhs = chi.apply(R.multiply(lifted, unit_vec(f, R.dim, s)));
      Vec rhs = chi.apply(R.multiply(unit_vec(f, R.dim, r), unit_vec(f, R.dim, s)));
      record(proj, lhs == rhs, "(r=" + R.basis_names[r] + ", s=" + R.basis_names[s] + ")");
    }
  }

  auto& unit = rep.start("chi-unit", "chi(1) = 1");
  record(unit, chi.apply(R.unit) == A.unit, "1");

  auto& sect = rep.start("chi-section", "chi(i(a)) = a");
  record(sect, chi.mul(im) == Matrix::identity(f, A.dim), "id");

  return rep;
}

Vec action_on_A(const ARingWithCharacter& rc_in, const Vec& a, const Vec& r) {
  std::optional<ARingWithCharacter> storage;
  const ARingWithCharacter& rc = right_view(rc_in, storage);
  Vec ia = rc.ring.i.matrix.apply(a);
  return rc.chi.apply(rc.ring.R->multiply(ia, r));
}

RightModule a_as_module(const ARingWithCharacter& rc_in) {
  std::optional<ARingWithCharacter> storage;
  const ARingWithCharacter& rc = right_view(rc_in, storage);
  const Algebra& R = *rc.ring.R;
  RightModule m;
  m.algebra = rc.ring.R;
  m.dim = rc.ring.A->dim;
  for (std::size_t j = 0; j < R.dim; ++j)
    m.actions.push_back(rc.chi.mul(R.right_mult_basis(j)).mul(rc.ring.i.matrix));
  return m;
}

Bimodule r_as_A_bimodule(const ARingWithCharacter& rc) {
  const Algebra& R = *rc.ring.R;
  const FieldSpec& f = R.field;
  Bimodule b;
  b.left_algebra = rc.ring.A;
  b.right_algebra = rc.ring.A;
  b.dim = R.dim;
  for (std::size_t a = 0; a < rc.ring.A->dim; ++a) {
    Vec ia = rc.ring.i.matrix.apply(unit_vec(f, rc.ring.A->dim, a));
    b.left_actions.push_back(R.left_mult(ia));
    b.right_actions.push_back(R.right_mult(ia));
  }
  return b;
}

InvariantsBundle invariants(const ARingWithCharacter& rc_in, const RightModule* m) {
  std::optional<ARingWithCharacter> storage;
  const ARingWithCharacter& rc = right_view(rc_in, storage);
  const Algebra& A = *rc.ring.A;
  const Algebra& R = *rc.ring.R;
  const FieldSpec& f = A.field;
  const Matrix& chi = rc.chi;
  const Matrix& im = rc.ring.i.matrix;

  InvariantsBundle out;

  // B: b * chi(r) = chi(i(b) r) for all r.
  {
    Matrix sys(f, 0, A.dim);
    bool first = true;
    for (std::size_t j = 0; j < R.dim; ++j) {
      Vec chij = chi.apply(unit_vec(f, R.dim, j));
      Matrix cond = A.right_mult(chij).sub(chi.mul(R.right_mult_basis(j)).mul(im));
      sys = first ? cond : Matrix::vstack(sys, cond);
      first = false;
    }
    out.B = Subspace::from_span(kernel_basis(sys));
  }

  // Q: q r = q i(chi(r)) for all r.
  {
    Matrix sys(f, 0, R.dim);
    bool first = true;
    for (std::size_t j = 0; j < R.dim; ++j) {
      Vec lifted = im.apply(chi.apply(unit_vec(f, R.dim, j)));
      Matrix cond = R.right_mult_basis(j).sub(R.right_mult(lifted));
      sys = first ? cond : Matrix::vstack(sys, cond);
      first = false;
    }
    out.Q = Subspace::from_span(kernel_basis(sys));
  }

  if (m) {
    if (!(*m->algebra == R))
      throw InvalidInput("module invariants need a module over R (over R^op for left input)");
    Matrix sys(f, 0, m->dim);
    bool first = true;
    for (std::size_t j = 0; j < R.dim; ++j) {
      Vec lifted = im.apply(chi.apply(unit_vec(f, R.dim, j)));
      Matrix cond = m->actions[j].sub(m->action_of(lifted));
      sys = first ? cond : Matrix::vstack(sys, cond);
      first = false;
    }
    out.MR = Subspace::from_span(kernel_basis(sys));
  }

  // Closure laws. These cannot fail for a character that verifies; a failure
  // here means the caller skipped verify_character on bad data.
  for (std::size_t t = 0; t < out.B.dim(); ++t) {
    Vec b1 = out.B.basis_vector(t);
    for (std::size_t u = 0; u < out.B.dim(); ++u)
      if (!out.B.contains(A.multiply(b1, out.B.basis_vector(u))))
        throw InvalidInput("B is not multiplicatively closed; run verify_character");
  }
  if (!out.B.contains(A.unit)) throw InvalidInput("B misses the unit; run verify_character");
  for (std::size_t t = 0; t < out.Q.dim(); ++t) {
    Vec q = out.Q.basis_vector(t);
    if (!out.B.contains(chi.apply(q)))
      throw InvalidInput("chi(Q) escapes B; run verify_character");
    for (std::size_t j = 0; j < R.dim; ++j)
      if (!out.Q.contains(R.multiply(unit_vec(f, R.dim, j), q)))
        throw InvalidInput("Q is not stable under left multiplication; run verify_character");
    for (std::size_t u = 0; u < out.B.dim(); ++u)
      if (!out.Q.contains(R.multiply(q, im.apply(out.B.basis_vector(u)))))
        throw InvalidInput("Q is not stable under B; run verify_character");
  }
  return out;
}

HomIsoResult hom_iso_phi(const ARingWithCharacter& rc, const RightModule& m) {
  HomIsoResult res;
  RightModule amod = a_as_module(rc);
  if (!(*m.algebra == *amod.algebra))
    throw InvalidInput("hom_iso_phi: module is over the wrong algebra");
  res.hom_basis = hom_space(amod, m);
  const FieldSpec& f = m.algebra->field;
  std::size_t hd = res.hom_basis.size();

  res.phi = Matrix(f, m.dim, hd);
  Vec one_a = rc.ring.A->unit;
  for (std::size_t t = 0; t < hd; ++t) {
    Vec img = res.hom_basis[t].apply(one_a);
    for (std::size_t r = 0; r < m.dim; ++r) res.phi.at(r, t) = img[r];
  }

  InvariantsBundle inv = invariants(rc, &m);
  res.mr = *inv.MR;

  auto& injective = res.report.start("phi-injective", "f(1) = 0 implies f = 0");
  record(injective, rank(res.phi) == hd, "rank");

  auto& image = res.report.start("phi-image", "phi lands onto the invariants");
  Subspace img = hd == 0 ? Subspace::zero(f, m.dim)
                         : Subspace::from_span(res.phi.transposed());
  record(image, img == res.mr, "image");

  auto& inverse_ok = res.report.start("phi-inverse", "m -> (a -> m*a) inverts phi");
  std::optional<ARingWithCharacter> storage;
  const ARingWithCharacter& rcr = right_view(rc, storage);
  for (std::size_t t = 0; t < res.mr.dim(); ++t) {
    Vec mv = res.mr.basis_vector(t);
    Matrix pm(f, m.dim, rc.ring.A->dim);
    for (std::size_t a = 0; a < rc.ring.A->dim; ++a) {
      Vec ia = rcr.ring.i.matrix.apply(unit_vec(f, rc.ring.A->dim, a));
      Vec col = m.action_of(ia).apply(mv);
      for (std::size_t r = 0; r < m.dim; ++r) pm.at(r, a) = col[r];
    }
    bool is_map = is_module_map(amod, m, pm);
    bool evaluates_back = pm.apply(one_a) == mv;
    record(inverse_ok, is_map && evaluates_back, "basis vector " + std::to_string(t));
  }
  return res;
}

std::optional<Vec> projectivity_witness(const ARingWithCharacter& rc) {
  InvariantsBundle inv = invariants(rc);
  const FieldSpec& f = rc.ring.A->field;
  std::size_t qd = inv.Q.dim();
  Matrix sys(f, rc.ring.A->dim, qd);
  for (std::size_t t = 0; t < qd; ++t) {
    Vec img = rc.chi.apply(inv.Q.basis_vector(t));
    for (std::size_t r = 0; r < rc.ring.A->dim; ++r) sys.at(r, t) = img[r];
  }
  auto coeffs = solve(sys, rc.ring.A->unit);
  if (!coeffs) return std::nullopt;
  Vec witness(rc.ring.R->dim);
  for (std::size_t t = 0; t < qd; ++t)
    witness = vec_add(f, witness, vec_scale(f, (*coeffs)[t], inv.Q.basis_vector(t)));
  return witness;
}

QuasiProjectivityResult is_quasi_projective(const ARingWithCharacter& rc) {
  QuasiProjectivityResult res;
  RightModule amod = a_as_module(rc);
  InvariantsBundle inv = invariants(rc);
  std::optional<ARingWithCharacter> storage;
  const ARingWithCharacter& rcr = right_view(rc, storage);
  const Algebra& R = *rcr.ring.R;
  const FieldSpec& f = R.field;
  const Matrix& im = rcr.ring.i.matrix;

  for (const Subspace& ideal : submodules(amod)) {
    ++res.submodules_checked;
    QuotientModuleResult q = quotient_module(amod, ideal);
    // invariants of A/I
    Matrix sys(f, 0, q.module.dim);
    bool first = true;
    for (std::size_t j = 0; j < R.dim; ++j) {
      Vec lifted = im.apply(rcr.chi.apply(unit_vec(f, R.dim, j)));
      Matrix cond = q.module.actions[j].sub(q.module.action_of(lifted));
      sys = first ? cond : Matrix::vstack(sys, cond);
      first = false;
    }
    std::size_t inv_dim = q.module.dim - rank(sys);
    std::size_t img_dim = inv.B.join(ideal).dim() - ideal.dim();
    if (inv_dim != img_dim) {
      res.quasi_projective = false;
      if (!res.failing_submodule) {
        res.failing_submodule = ideal;
        res.failing_invariant_dim = inv_dim;
        res.failing_image_dim = img_dim;
      }
    }
  }
  return res;
}

}  // namespace froblab
