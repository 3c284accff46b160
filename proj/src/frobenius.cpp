#include "froblab/frobenius.hpp"

namespace froblab {

namespace {

bool bimodule_equal(const Bimodule& a, const Bimodule& b) {
  return a.dim == b.dim && *a.left_algebra == *b.left_algebra &&
         *a.right_algebra == *b.right_algebra && a.left_actions == b.left_actions &&
         a.right_actions == b.right_actions;
}

void check_context_shapes(const MoritaContext& ctx) {
  if (!ctx.A) throw InvalidInput("context needs an algebra");
  const Algebra& A = *ctx.A;
  for (const Bimodule* m : {&ctx.I, &ctx.J}) {
    if (!m->left_algebra || !m->right_algebra) throw InvalidInput("context bimodule unset");
    if (!(*m->left_algebra == A) || !(*m->right_algebra == A))
      throw InvalidInput("context bimodules must be two-sided over the context algebra");
  }
  if (ctx.f.rows() != A.dim || ctx.f.cols() != ctx.I.dim * ctx.J.dim)
    throw InvalidInput("f must map I (x) J to A");
  if (ctx.g.rows() != A.dim || ctx.g.cols() != ctx.J.dim * ctx.I.dim)
    throw InvalidInput("g must map J (x) I to A");
  if (ctx.f_inv_one.size() != ctx.I.dim * ctx.J.dim)
    throw InvalidInput("f_inv_one must live in I (x) J");
}

/// R as an (R, A)-bimodule: regular left action, right action through i.
Bimodule r_left_regular(const ARing& ring) {
  const Algebra& R = *ring.R;
  Bimodule b;
  b.left_algebra = ring.R;
  b.right_algebra = ring.A;
  b.dim = R.dim;
  for (std::size_t j = 0; j < R.dim; ++j) b.left_actions.push_back(R.left_mult_basis(j));
  for (std::size_t a = 0; a < ring.A->dim; ++a) {
    Vec ia = ring.i.matrix.apply(unit_vec(R.field, ring.A->dim, a));
    b.right_actions.push_back(R.right_mult(ia));
  }
  return b;
}

/// R as an (A, R)-bimodule: left action through i, regular right action.
Bimodule r_right_regular(const ARing& ring) {
  const Algebra& R = *ring.R;
  Bimodule b;
  b.left_algebra = ring.A;
  b.right_algebra = ring.R;
  b.dim = R.dim;
  for (std::size_t a = 0; a < ring.A->dim; ++a) {
    Vec ia = ring.i.matrix.apply(unit_vec(R.field, ring.A->dim, a));
    b.left_actions.push_back(R.left_mult(ia));
  }
  for (std::size_t j = 0; j < R.dim; ++j) b.right_actions.push_back(R.right_mult_basis(j));
  return b;
}

}  // namespace

Vec lift_triple(const FrobeniusWorkspace& ws, const Vec& eq) {
  const FieldSpec& f = ws.rir.total.left_algebra->field;
  std::size_t rdim = ws.rir.right_dim;
  std::size_t idim = ws.ri.right_dim;
  Vec mid = ws.rir.lift(eq);  // (ri quotient) x R
  Vec full(ws.ri.full_dim() * rdim);
  for (std::size_t qi = 0; qi < ws.ri.total.dim; ++qi) {
    Vec rep = ws.ri.lift(unit_vec(f, ws.ri.total.dim, qi));  // full R (x) I
    for (std::size_t n2 = 0; n2 < rdim; ++n2) {
      const Scalar& c = mid[qi * rdim + n2];
      if (f.is_zero(c)) continue;
      for (std::size_t t = 0; t < rep.size(); ++t) {
        if (f.is_zero(rep[t])) continue;
        std::size_t n = t / idim, u = t % idim;
        std::size_t idx = (n * idim + u) * rdim + n2;
        full[idx] = f.add(full[idx], f.mul(c, rep[t]));
      }
    }
  }
  return full;
}

namespace {

/// chi(e1) u1 (x) e2 collapsed into full I (x) R coordinates.
Vec collapse_first_leg(const FrobeniusSystem& sys, const FrobeniusWorkspace& ws) {
  const FieldSpec& f = sys.ring.A->field;
  std::size_t rdim = sys.ring.R->dim;
  std::size_t idim = sys.ctx.I.dim;
  Vec full = lift_triple(ws, sys.e);
  Vec k(idim * rdim);
  for (std::size_t n = 0; n < rdim; ++n) {
    Vec a1 = sys.chi->apply(unit_vec(f, rdim, n));
    Matrix act = sys.ctx.I.left_action_of(a1);
    for (std::size_t u = 0; u < idim; ++u) {
      Vec w = act.apply(unit_vec(f, idim, u));
      for (std::size_t n2 = 0; n2 < rdim; ++n2) {
        const Scalar& c = full[(n * idim + u) * rdim + n2];
        if (f.is_zero(c)) continue;
        for (std::size_t m = 0; m < idim; ++m)
          k[m * rdim + n2] = f.add(k[m * rdim + n2], f.mul(c, w[m]));
      }
    }
  }
  return k;
}

void require_chi(const FrobeniusSystem& sys) {
  if (!sys.chi) throw InvalidInput("this operation needs a character on the ring");
}

Matrix alpha_matrix(const FrobeniusSystem& sys, const FrobeniusWorkspace& ws) {
  const Algebra& A = *sys.ring.A;
  const Algebra& R = *sys.ring.R;
  const FieldSpec& f = A.field;
  std::size_t idim = sys.ctx.I.dim;
  std::size_t jdim = sys.ctx.J.dim;
  Vec k = collapse_first_leg(sys, ws);
  Matrix alpha(f, R.dim, jdim);
  for (std::size_t j = 0; j < jdim; ++j) {
    Vec col = vec_zero(R.dim);
    for (std::size_t m = 0; m < idim; ++m)
      for (std::size_t n2 = 0; n2 < R.dim; ++n2) {
        const Scalar& c = k[m * R.dim + n2];
        if (f.is_zero(c)) continue;
        Vec ga = sys.ctx.g.apply(kron_vec(f, unit_vec(f, jdim, j), unit_vec(f, idim, m)));
        Vec term = R.multiply(sys.ring.i.matrix.apply(ga), unit_vec(f, R.dim, n2));
        col = vec_add(f, col, vec_scale(f, c, term));
      }
    for (std::size_t r = 0; r < R.dim; ++r) alpha.at(r, j) = col[r];
  }
  return alpha;
}

Matrix beta_matrix(const FrobeniusSystem& sys) {
  const FieldSpec& f = sys.ring.A->field;
  const Algebra& R = *sys.ring.R;
  std::size_t idim = sys.ctx.I.dim;
  std::size_t jdim = sys.ctx.J.dim;
  Matrix beta(f, jdim, R.dim);
  for (std::size_t n = 0; n < R.dim; ++n) {
    Vec col = vec_zero(jdim);
    for (std::size_t m = 0; m < idim; ++m)
      for (std::size_t l = 0; l < jdim; ++l) {
        const Scalar& c = sys.ctx.f_inv_one[m * jdim + l];
        if (f.is_zero(c)) continue;
        Vec a = sys.nu.apply(kron_vec(f, unit_vec(f, R.dim, n), unit_vec(f, idim, m)));
        Vec term = sys.ctx.J.left_action_of(a).apply(unit_vec(f, jdim, l));
        col = vec_add(f, col, vec_scale(f, c, term));
      }
    for (std::size_t r = 0; r < jdim; ++r) beta.at(r, n) = col[r];
  }
  return beta;
}

}  // namespace

MoritaContext make_morita_context(AlgebraPtr a, Bimodule i_mod, Bimodule j_mod,
                                  Matrix f, Matrix g, Vec f_inv_one) {
  MoritaContext ctx{std::move(a), std::move(i_mod), std::move(j_mod),
                    std::move(f), std::move(g), std::move(f_inv_one)};
  check_context_shapes(ctx);
  return ctx;
}

MoritaContext identity_context(AlgebraPtr a) {
  const Algebra& A = *a;
  const FieldSpec& f = A.field;
  Matrix mult(f, A.dim, A.dim * A.dim);
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t j = 0; j < A.dim; ++j) {
      Vec p = A.multiply(unit_vec(f, A.dim, i), unit_vec(f, A.dim, j));
      for (std::size_t k = 0; k < A.dim; ++k) mult.at(k, i * A.dim + j) = p[k];
    }
  Bimodule reg = regular_bimodule(a);
  Vec one_one = kron_vec(f, A.unit, A.unit);
  return make_morita_context(a, reg, reg, mult, mult, one_one);
}

bool is_identity_context(const MoritaContext& ctx) {
  MoritaContext id = identity_context(ctx.A);
  return bimodule_equal(ctx.I, id.I) && bimodule_equal(ctx.J, id.J) && ctx.f == id.f &&
         ctx.g == id.g && ctx.f_inv_one == id.f_inv_one;
}

Report verify_morita_context(const MoritaContext& ctx) {
  Report rep;
  rep.append_prefixed(check_bimodule(ctx.I), "I");
  rep.append_prefixed(check_bimodule(ctx.J), "J");
  if (!rep.ok()) return rep;

  const Algebra& A = *ctx.A;
  const FieldSpec& f = A.field;
  TensorOverA ij = tensor_over_A(ctx.I, ctx.J);
  TensorOverA ji = tensor_over_A(ctx.J, ctx.I);
  Matrix id_i = Matrix::identity(f, ctx.I.dim);
  Matrix id_j = Matrix::identity(f, ctx.J.dim);

  auto& bal = rep.start("pairings-balanced", "f and g vanish on the balancing relations");
  for (std::size_t t = 0; t < ij.relations.dim(); ++t)
    record(bal, vec_is_zero(ctx.f.apply(ij.relations.basis_vector(t))),
           "f relation " + std::to_string(t));
  for (std::size_t t = 0; t < ji.relations.dim(); ++t)
    record(bal, vec_is_zero(ctx.g.apply(ji.relations.basis_vector(t))),
           "g relation " + std::to_string(t));

  auto& fbi = rep.start("pairings-bimodule", "f(a.x.a') = a f(x) a', same for g");
  for (std::size_t a = 0; a < A.dim; ++a) {
    bool f_left = ctx.f.mul(kron(ctx.I.left_actions[a], id_j)) == A.left_mult_basis(a).mul(ctx.f);
    bool f_right = ctx.f.mul(kron(id_i, ctx.J.right_actions[a])) == A.right_mult_basis(a).mul(ctx.f);
    bool g_left = ctx.g.mul(kron(ctx.J.left_actions[a], id_i)) == A.left_mult_basis(a).mul(ctx.g);
    bool g_right = ctx.g.mul(kron(id_j, ctx.I.right_actions[a])) == A.right_mult_basis(a).mul(ctx.g);
    record(fbi, f_left && f_right && g_left && g_right, A.basis_names[a]);
  }

  auto& iso = rep.start("pairings-bijective", "f and g identify the tensor quotients with A");
  record(iso, ij.total.dim == A.dim && rank(ctx.f.mul(ij.section)) == A.dim, "f");
  record(iso, ji.total.dim == A.dim && rank(ctx.g.mul(ji.section)) == A.dim, "g");

  auto& afg = rep.start("assoc-fg", "f(u (x) v) u' = u g(v (x) u')");
  for (std::size_t u = 0; u < ctx.I.dim; ++u)
    for (std::size_t v = 0; v < ctx.J.dim; ++v)
      for (std::size_t u2 = 0; u2 < ctx.I.dim; ++u2) {
        Vec fa = ctx.f.apply(kron_vec(f, unit_vec(f, ctx.I.dim, u), unit_vec(f, ctx.J.dim, v)));
        Vec lhs = ctx.I.left_action_of(fa).apply(unit_vec(f, ctx.I.dim, u2));
        Vec ga = ctx.g.apply(kron_vec(f, unit_vec(f, ctx.J.dim, v), unit_vec(f, ctx.I.dim, u2)));
        Vec rhs = ctx.I.right_action_of(ga).apply(unit_vec(f, ctx.I.dim, u));
        record(afg, lhs == rhs,
               "(u=" + std::to_string(u) + ", v=" + std::to_string(v) +
                   ", u'=" + std::to_string(u2) + ")");
      }

  auto& agf = rep.start("assoc-gf", "g(v (x) u) v' = v f(u (x) v')");
  for (std::size_t v = 0; v < ctx.J.dim; ++v)
    for (std::size_t u = 0; u < ctx.I.dim; ++u)
      for (std::size_t v2 = 0; v2 < ctx.J.dim; ++v2) {
        Vec ga = ctx.g.apply(kron_vec(f, unit_vec(f, ctx.J.dim, v), unit_vec(f, ctx.I.dim, u)));
        Vec lhs = ctx.J.left_action_of(ga).apply(unit_vec(f, ctx.J.dim, v2));
        Vec fa = ctx.f.apply(kron_vec(f, unit_vec(f, ctx.I.dim, u), unit_vec(f, ctx.J.dim, v2)));
        Vec rhs = ctx.J.right_action_of(fa).apply(unit_vec(f, ctx.J.dim, v));
        record(agf, lhs == rhs,
               "(v=" + std::to_string(v) + ", u=" + std::to_string(u) +
                   ", v'=" + std::to_string(v2) + ")");
      }

  auto& unit = rep.start("finv-unit", "f(f_inv_one) = 1");
  record(unit, ctx.f.apply(ctx.f_inv_one) == A.unit, "1");

  auto& cent = rep.start("finv-central", "a . f_inv_one = f_inv_one . a in I (x)_A J");
  for (std::size_t a = 0; a < A.dim; ++a) {
    Vec lhs = ij.to_quotient(kron(ctx.I.left_actions[a], id_j).apply(ctx.f_inv_one));
    Vec rhs = ij.to_quotient(kron(id_i, ctx.J.right_actions[a]).apply(ctx.f_inv_one));
    record(cent, lhs == rhs, A.basis_names[a]);
  }

  return rep;
}

ARingWithCharacter FrobeniusSystem::character_ring() const {
  if (!chi) throw InvalidInput("this system has no character");
  return make_character_ring(ring, *chi, Handedness::Right);
}

FrobeniusWorkspace frobenius_workspace(const ARing& ring, const MoritaContext& ctx,
                                       const Matrix& nu) {
  FrobeniusWorkspace ws;
  ws.ri = tensor_over_A(r_left_regular(ring), ctx.I);
  ws.rir = tensor_over_A(ws.ri.total, r_right_regular(ring));
  ws.nu_q = nu.mul(ws.ri.section);
  return ws;
}

Vec descend_triple(const FrobeniusWorkspace& ws, const Vec& full) {
  const FieldSpec& f = ws.rir.total.left_algebra->field;
  std::size_t rdim = ws.rir.right_dim;
  if (full.size() != ws.ri.full_dim() * rdim)
    throw InvalidInput("triple element has the wrong length");
  Vec mid(ws.ri.total.dim * rdim);
  for (std::size_t t = 0; t < full.size(); ++t) {
    if (f.is_zero(full[t])) continue;
    std::size_t n2 = t % rdim;
    std::size_t pair_idx = t / rdim;  // flat (n, u)
    Vec cls = ws.ri.to_quotient(unit_vec(f, ws.ri.full_dim(), pair_idx));
    for (std::size_t qi = 0; qi < ws.ri.total.dim; ++qi)
      mid[qi * rdim + n2] = f.add(mid[qi * rdim + n2], f.mul(full[t], cls[qi]));
  }
  return ws.rir.to_quotient(mid);
}

FrobeniusSystem make_frobenius_system(ARing ring, MoritaContext ctx, Vec e, Matrix nu,
                                      std::optional<Matrix> chi) {
  if (!ring.A || !ring.R) throw InvalidInput("system needs both algebras");
  check_context_shapes(ctx);
  if (!(*ring.A == *ctx.A)) throw InvalidInput("context algebra differs from the base algebra");
  if (ring.A->field != ring.R->field) throw InvalidInput("field mismatch between A and R");
  if (ring.i.matrix.rows() != ring.R->dim || ring.i.matrix.cols() != ring.A->dim)
    throw InvalidInput("i must be an R.dim x A.dim matrix");
  if (nu.rows() != ring.A->dim || nu.cols() != ring.R->dim * ctx.I.dim)
    throw InvalidInput("nu must map R (x) I to A");
  if (chi && (chi->rows() != ring.A->dim || chi->cols() != ring.R->dim))
    throw InvalidInput("chi must be an A.dim x R.dim matrix");
  FrobeniusWorkspace ws = frobenius_workspace(ring, ctx, nu);
  if (e.size() != ws.rir.total.dim)
    throw InvalidInput("e must be given in the R (x)_A I (x)_A R quotient coordinates");
  return FrobeniusSystem{std::move(ring), std::move(ctx), std::move(e), std::move(nu),
                         std::move(chi)};
}

FrobeniusSystem classical_system(ARing ring, const Vec& e_rr, const Matrix& nu_r,
                                 std::optional<Matrix> chi) {
  const Algebra& A = *ring.A;
  const Algebra& R = *ring.R;
  const FieldSpec& f = A.field;
  if (e_rr.size() != R.dim * R.dim) throw InvalidInput("e must live in R (x) R");
  if (nu_r.rows() != A.dim || nu_r.cols() != R.dim) throw InvalidInput("nu must map R to A");
  MoritaContext ctx = identity_context(ring.A);

  Vec full(R.dim * A.dim * R.dim);
  for (std::size_t n = 0; n < R.dim; ++n)
    for (std::size_t n2 = 0; n2 < R.dim; ++n2) {
      const Scalar& c = e_rr[n * R.dim + n2];
      if (f.is_zero(c)) continue;
      for (std::size_t a = 0; a < A.dim; ++a)
        full[(n * A.dim + a) * R.dim + n2] = f.mul(c, A.unit[a]);
    }

  Matrix nu(f, A.dim, R.dim * A.dim);
  for (std::size_t n = 0; n < R.dim; ++n) {
    Vec base = nu_r.apply(unit_vec(f, R.dim, n));
    for (std::size_t a = 0; a < A.dim; ++a) {
      Vec p = A.multiply(base, unit_vec(f, A.dim, a));
      for (std::size_t k = 0; k < A.dim; ++k) nu.at(k, n * A.dim + a) = p[k];
    }
  }

  FrobeniusWorkspace ws = frobenius_workspace(ring, ctx, nu);
  Vec e = descend_triple(ws, full);
  return make_frobenius_system(std::move(ring), std::move(ctx), std::move(e), std::move(nu),
                               std::move(chi));
}

Report verify_frobenius(const FrobeniusSystem& sys) {
  Report rep;
  rep.append_prefixed(verify_morita_context(sys.ctx), "ctx");
  if (sys.chi) {
    rep.append_prefixed(verify_character(sys.character_ring()), "rc");
  } else {
    rep.append_prefixed(check_algebra(*sys.ring.A), "A");
    rep.append_prefixed(check_algebra(*sys.ring.R), "R");
    AlgebraMap i_raw{sys.ring.A, sys.ring.R, sys.ring.i.matrix, true};
    rep.append_prefixed(check_algebra_map(i_raw), "i");
  }
  if (!rep.ok()) return rep;

  const Algebra& A = *sys.ring.A;
  const Algebra& R = *sys.ring.R;
  const FieldSpec& f = A.field;
  std::size_t idim = sys.ctx.I.dim;
  FrobeniusWorkspace ws = frobenius_workspace(sys.ring, sys.ctx, sys.nu);

  auto& bal = rep.start("nu-balanced", "nu vanishes on the balancing relations");
  for (std::size_t t = 0; t < ws.ri.relations.dim(); ++t)
    record(bal, vec_is_zero(sys.nu.apply(ws.ri.relations.basis_vector(t))),
           "relation " + std::to_string(t));

  auto& nbi = rep.start("nu-bimodule", "nu(a.x.a') = a nu(x) a'");
  Matrix id_r = Matrix::identity(f, R.dim);
  Matrix id_i = Matrix::identity(f, idim);
  for (std::size_t a = 0; a < A.dim; ++a) {
    Vec ia = sys.ring.i.matrix.apply(unit_vec(f, A.dim, a));
    bool left = sys.nu.mul(kron(R.left_mult(ia), id_i)) == A.left_mult_basis(a).mul(sys.nu);
    bool right =
        sys.nu.mul(kron(id_r, sys.ctx.I.right_actions[a])) == A.right_mult_basis(a).mul(sys.nu);
    record(nbi, left && right, A.basis_names[a]);
  }

  auto& cent = rep.start("e-central", "r e = e r");
  for (std::size_t n = 0; n < R.dim; ++n) {
    Vec lhs = ws.rir.total.left_actions[n].apply(sys.e);
    Vec rhs = ws.rir.total.right_actions[n].apply(sys.e);
    record(cent, lhs == rhs, R.basis_names[n]);
  }

  Vec mid = ws.rir.lift(sys.e);  // (ri quotient) x R

  auto& cu = rep.start("contract-unit", "nu(e1 (x) u1) e2 = 1");
  {
    Vec got = vec_zero(R.dim);
    for (std::size_t qi = 0; qi < ws.ri.total.dim; ++qi) {
      Vec a = ws.nu_q.apply(unit_vec(f, ws.ri.total.dim, qi));
      Vec ia = sys.ring.i.matrix.apply(a);
      for (std::size_t n2 = 0; n2 < R.dim; ++n2) {
        const Scalar& c = mid[qi * R.dim + n2];
        if (f.is_zero(c)) continue;
        got = vec_add(f, got, vec_scale(f, c, R.multiply(ia, unit_vec(f, R.dim, n2))));
      }
    }
    record(cu, got == R.unit, "1");
  }

  auto& cd = rep.start("contract-dual", "e1 (x) u1 nu(e2 (x) u) = 1 (x) u");
  for (std::size_t m = 0; m < idim; ++m) {
    Vec got = vec_zero(ws.ri.total.dim);
    for (std::size_t qi = 0; qi < ws.ri.total.dim; ++qi)
      for (std::size_t n2 = 0; n2 < R.dim; ++n2) {
        const Scalar& c = mid[qi * R.dim + n2];
        if (f.is_zero(c)) continue;
        Vec a = sys.nu.apply(kron_vec(f, unit_vec(f, R.dim, n2), unit_vec(f, idim, m)));
        Vec term = ws.ri.total.right_action_of(a).apply(unit_vec(f, ws.ri.total.dim, qi));
        got = vec_add(f, got, vec_scale(f, c, term));
      }
    Vec want = ws.ri.to_quotient(kron_vec(f, R.unit, unit_vec(f, idim, m)));
    record(cd, got == want, "u=" + std::to_string(m));
  }

  return rep;
}

TraceData make_trace_data(const FrobeniusSystem& sys) {
  require_chi(sys);
  const Algebra& A = *sys.ring.A;
  const FieldSpec& f = A.field;
  std::size_t jdim = sys.ctx.J.dim;
  FrobeniusWorkspace ws = frobenius_workspace(sys.ring, sys.ctx, sys.nu);

  TraceData td;
  td.alpha = alpha_matrix(sys, ws);
  td.beta = beta_matrix(sys);
  td.trace = sys.chi->mul(td.alpha);

  InvariantsBundle inv = invariants(sys.character_ring());

  auto& img = td.report.start("alpha-image", "alpha identifies J with Q");
  Subspace alpha_span = Subspace::from_span(td.alpha.transposed());
  record(img, alpha_span == inv.Q, "image");

  auto& ba = td.report.start("beta-alpha", "beta(alpha(v)) = v");
  record(ba, td.beta.mul(td.alpha) == Matrix::identity(f, jdim), "id");

  auto& ab = td.report.start("alpha-beta", "alpha(beta(q)) = q on Q");
  for (std::size_t t = 0; t < inv.Q.dim(); ++t) {
    Vec q = inv.Q.basis_vector(t);
    record(ab, td.alpha.apply(td.beta.apply(q)) == q, "basis vector " + std::to_string(t));
  }

  auto& tb = td.report.start("trace-in-B", "trace lands in B");
  for (std::size_t j = 0; j < jdim; ++j)
    record(tb, inv.B.contains(td.trace.apply(unit_vec(f, jdim, j))), "v=" + std::to_string(j));

  auto& bim = td.report.start("trace-bimodule", "trace(b.v.b') = b trace(v) b'");
  for (std::size_t t = 0; t < inv.B.dim(); ++t) {
    Vec b = inv.B.basis_vector(t);
    bool left = td.trace.mul(sys.ctx.J.left_action_of(b)) == A.left_mult(b).mul(td.trace);
    bool right = td.trace.mul(sys.ctx.J.right_action_of(b)) == A.right_mult(b).mul(td.trace);
    record(bim, left && right, "b=" + A.element_to_string(b));
  }

  return td;
}

Vec frobenius_alpha(const FrobeniusSystem& sys, const Vec& v) {
  require_chi(sys);
  FrobeniusWorkspace ws = frobenius_workspace(sys.ring, sys.ctx, sys.nu);
  return alpha_matrix(sys, ws).apply(v);
}

Vec frobenius_beta(const FrobeniusSystem& sys, const Vec& q) {
  require_chi(sys);
  InvariantsBundle inv = invariants(sys.character_ring());
  if (!inv.Q.contains(q)) throw InvalidInput("beta is only defined on Q");
  return beta_matrix(sys).apply(q);
}

Vec frobenius_trace(const FrobeniusSystem& sys, const Vec& v) {
  require_chi(sys);
  FrobeniusWorkspace ws = frobenius_workspace(sys.ring, sys.ctx, sys.nu);
  return sys.chi->apply(alpha_matrix(sys, ws).apply(v));
}

std::optional<Vec> trace_one_witness(const FrobeniusSystem& sys) {
  require_chi(sys);
  FrobeniusWorkspace ws = frobenius_workspace(sys.ring, sys.ctx, sys.nu);
  Matrix trace = sys.chi->mul(alpha_matrix(sys, ws));
  return solve(trace, sys.ring.A->unit);
}

Vec j_left_action(const FrobeniusSystem& sys, const Vec& r, const Vec& v) {
  require_chi(sys);
  FrobeniusWorkspace ws = frobenius_workspace(sys.ring, sys.ctx, sys.nu);
  Matrix alpha = alpha_matrix(sys, ws);
  return beta_matrix(sys).apply(sys.ring.R->multiply(r, alpha.apply(v)));
}

Vec j_left_action_printed(const FrobeniusSystem& sys, const Vec& r, const Vec& v) {
  require_chi(sys);
  const Algebra& R = *sys.ring.R;
  const FieldSpec& f = R.field;
  std::size_t idim = sys.ctx.I.dim;
  std::size_t jdim = sys.ctx.J.dim;
  FrobeniusWorkspace ws = frobenius_workspace(sys.ring, sys.ctx, sys.nu);
  Vec k = collapse_first_leg(sys, ws);

  // w = r g(v (x) chi(e1) u1) e2, summed over the spread of e.
  Vec w = vec_zero(R.dim);
  for (std::size_t m = 0; m < idim; ++m)
    for (std::size_t n2 = 0; n2 < R.dim; ++n2) {
      const Scalar& c = k[m * R.dim + n2];
      if (f.is_zero(c)) continue;
      Vec ga = sys.ctx.g.apply(kron_vec(f, v, unit_vec(f, idim, m)));
      Vec term = R.multiply(R.multiply(r, sys.ring.i.matrix.apply(ga)), unit_vec(f, R.dim, n2));
      w = vec_add(f, w, vec_scale(f, c, term));
    }

  // out = sum nu(w (x) u_i) v_i over f_inv_one.
  Vec out = vec_zero(jdim);
  for (std::size_t m = 0; m < idim; ++m)
    for (std::size_t l = 0; l < jdim; ++l) {
      const Scalar& c = sys.ctx.f_inv_one[m * jdim + l];
      if (f.is_zero(c)) continue;
      Vec a = sys.nu.apply(kron_vec(f, w, unit_vec(f, idim, m)));
      Vec term = sys.ctx.J.left_action_of(a).apply(unit_vec(f, jdim, l));
      out = vec_add(f, out, vec_scale(f, c, term));
    }
  return out;
}

Vec classical_trace(const FrobeniusSystem& sys, const Vec& a) {
  require_chi(sys);
  if (!is_identity_context(sys.ctx))
    throw InvalidInput("the classical trace shortcut needs the identity context");
  const Algebra& A = *sys.ring.A;
  const Algebra& R = *sys.ring.R;
  const FieldSpec& f = A.field;
  FrobeniusWorkspace ws = frobenius_workspace(sys.ring, sys.ctx, sys.nu);
  Vec full = lift_triple(ws, sys.e);

  // ce = chi(e1) e2, with the middle leg folded into A.
  Vec ce = vec_zero(R.dim);
  for (std::size_t n = 0; n < R.dim; ++n)
    for (std::size_t ai = 0; ai < A.dim; ++ai)
      for (std::size_t n2 = 0; n2 < R.dim; ++n2) {
        const Scalar& c = full[(n * A.dim + ai) * R.dim + n2];
        if (f.is_zero(c)) continue;
        Vec mid = A.multiply(sys.chi->apply(unit_vec(f, R.dim, n)), unit_vec(f, A.dim, ai));
        Vec term = R.multiply(sys.ring.i.matrix.apply(mid), unit_vec(f, R.dim, n2));
        ce = vec_add(f, ce, vec_scale(f, c, term));
      }

  return sys.chi->apply(R.multiply(sys.ring.i.matrix.apply(a), ce));
}

}  // namespace froblab
