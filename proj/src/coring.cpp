#include "froblab/coring.hpp"

namespace froblab {
namespace {

struct TensorTerm {
  std::size_t first = 0;
  std::size_t second = 0;
  Scalar coeff;
};

/// Nonzero entries of the canonical full-coordinate representative of a
/// C (x)_A C class. Every consumer below feeds the terms into an A-balanced
/// expression, so the choice of representative does not matter.
std::vector<TensorTerm> lifted_pairs(const TensorOverA& cc, const Vec& q) {
  const FieldSpec& f = cc.total.left_algebra->field;
  Vec full = cc.lift(q);
  std::vector<TensorTerm> terms;
  for (std::size_t idx = 0; idx < full.size(); ++idx) {
    if (f.is_zero(full[idx])) continue;
    terms.push_back(TensorTerm{idx / cc.right_dim, idx % cc.right_dim, full[idx]});
  }
  return terms;
}

/// Basis of the left A-linear maps C -> A, each realised as an
/// A.dim x C.dim matrix. Canonical order from the kernel rref.
std::vector<Matrix> left_linear_maps(const CoringPresentation& c) {
  const FieldSpec& f = c.A->field;
  const std::size_t na = c.A->dim;
  const std::size_t nc = c.C.dim;
  Matrix constraints(f, 0, na * nc);
  for (std::size_t a = 0; a < na; ++a) {
    Matrix lhs = kron(Matrix::identity(f, na), c.C.left_actions[a].transposed());
    Matrix rhs = kron(c.A->left_mult_basis(a), Matrix::identity(f, nc));
    constraints = Matrix::vstack(constraints, lhs.sub(rhs));
  }
  Matrix null_rows = kernel_basis(constraints);
  std::vector<Matrix> basis;
  for (std::size_t k = 0; k < null_rows.rows(); ++k) {
    Matrix m(f, na, nc);
    for (std::size_t r = 0; r < na; ++r)
      for (std::size_t col = 0; col < nc; ++col) m.at(r, col) = null_rows.at(k, r * nc + col);
    basis.push_back(m);
  }
  return basis;
}

Vec vectorize(const Matrix& m) {
  Vec v(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m.at(r, c);
  return v;
}

/// Coordinates of a functional in the hom basis; throws when it falls
/// outside the span, which on verified input means the caller produced a
/// map that is not left A-linear.
Vec hom_coordinates(const std::vector<Matrix>& basis, const Matrix& functional,
                    const std::string& what) {
  const FieldSpec& f = functional.field();
  Matrix cols(f, functional.rows() * functional.cols(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Vec v = vectorize(basis[k]);
    for (std::size_t r = 0; r < v.size(); ++r) cols.at(r, k) = v[r];
  }
  auto coords = solve(cols, vectorize(functional));
  if (!coords) throw InvalidInput(what + " is not a left-linear functional on the coring");
  return *coords;
}

}  // namespace

CoringPresentation make_coring(AlgebraPtr a, Bimodule c, Matrix comul, Matrix counit) {
  if (!a) throw InvalidInput("coring needs a base algebra");
  if (c.left_algebra != a || c.right_algebra != a)
    throw InvalidInput("a coring must be a bimodule over its base algebra on both sides");
  TensorOverA cc = tensor_over_A(c, c);
  if (comul.rows() != cc.total.dim || comul.cols() != c.dim)
    throw InvalidInput("comultiplication shape does not match the C (x)_A C quotient");
  if (counit.rows() != a->dim || counit.cols() != c.dim)
    throw InvalidInput("counit shape does not match the base algebra");
  return CoringPresentation{std::move(a), std::move(c), std::move(comul), std::move(counit)};
}

TensorOverA coring_square(const CoringPresentation& c) { return tensor_over_A(c.C, c.C); }

Report verify_coring(const CoringPresentation& c) {
  Report rep;
  rep.append_prefixed(check_bimodule(c.C), "bimodule");
  if (!rep.ok()) return rep;

  const FieldSpec& f = c.A->field;
  const std::size_t na = c.A->dim;
  const std::size_t nc = c.C.dim;
  TensorOverA cc = tensor_over_A(c.C, c.C);

  auto& comul_bi = rep.start("comul-bimodule", "Delta(a c b) = a Delta(c) b");
  for (std::size_t a = 0; a < na; ++a) {
    bool left = c.comul.mul(c.C.left_actions[a]) == cc.total.left_actions[a].mul(c.comul);
    bool right = c.comul.mul(c.C.right_actions[a]) == cc.total.right_actions[a].mul(c.comul);
    record(comul_bi, left && right, c.A->basis_names[a]);
  }

  auto& counit_bi = rep.start("counit-bimodule", "eps(a c b) = a eps(c) b");
  for (std::size_t a = 0; a < na; ++a) {
    bool left = c.counit.mul(c.C.left_actions[a]) == c.A->left_mult_basis(a).mul(c.counit);
    bool right = c.counit.mul(c.C.right_actions[a]) == c.A->right_mult_basis(a).mul(c.counit);
    record(counit_bi, left && right, c.A->basis_names[a]);
  }
  if (!rep.ok()) return rep;

  // Both branches of coassociativity are compared inside the left-associated
  // triple quotient (C (x)_A C) (x)_A C; the second branch is re-associated
  // term by term.
  TensorOverA ccc = tensor_over_A(cc.total, c.C);
  auto& coassoc = rep.start("coassoc", "(Delta (x) id) Delta = (id (x) Delta) Delta");
  for (std::size_t cb = 0; cb < nc; ++cb) {
    auto pairs = lifted_pairs(cc, c.comul.col(cb));
    Vec lhs_full = vec_zero(ccc.full_dim());
    Vec rhs_full = vec_zero(ccc.full_dim());
    for (const auto& t : pairs) {
      Vec first_split = c.comul.col(t.first);
      for (std::size_t k = 0; k < first_split.size(); ++k) {
        Scalar contrib = f.mul(t.coeff, first_split[k]);
        lhs_full[ccc.flat(k, t.second)] = f.add(lhs_full[ccc.flat(k, t.second)], contrib);
      }
      for (const auto& u : lifted_pairs(cc, c.comul.col(t.second))) {
        Vec front = cc.to_quotient(kron_vec(f, unit_vec(f, nc, t.first), unit_vec(f, nc, u.first)));
        Scalar w = f.mul(t.coeff, u.coeff);
        for (std::size_t k = 0; k < front.size(); ++k) {
          Scalar contrib = f.mul(w, front[k]);
          rhs_full[ccc.flat(k, u.second)] = f.add(rhs_full[ccc.flat(k, u.second)], contrib);
        }
      }
    }
    record(coassoc, ccc.to_quotient(lhs_full) == ccc.to_quotient(rhs_full),
           "c" + std::to_string(cb));
  }

  auto& counit_law = rep.start("counit-law", "eps(c_(1)) c_(2) = c = c_(1) eps(c_(2))");
  for (std::size_t cb = 0; cb < nc; ++cb) {
    Vec left = vec_zero(nc);
    Vec right = vec_zero(nc);
    for (const auto& t : lifted_pairs(cc, c.comul.col(cb))) {
      Vec l = c.C.left_action_of(c.counit.col(t.first)).apply(unit_vec(f, nc, t.second));
      Vec r = c.C.right_action_of(c.counit.col(t.second)).apply(unit_vec(f, nc, t.first));
      left = vec_add(f, left, vec_scale(f, t.coeff, l));
      right = vec_add(f, right, vec_scale(f, t.coeff, r));
    }
    Vec e = unit_vec(f, nc, cb);
    record(counit_law, left == e && right == e, "c" + std::to_string(cb));
  }
  return rep;
}

bool is_grouplike(const CoringPresentation& c, const Vec& x) {
  if (x.size() != c.C.dim) throw InvalidInput("grouplike candidate has the wrong dimension");
  const FieldSpec& f = c.A->field;
  TensorOverA cc = tensor_over_A(c.C, c.C);
  bool split = cc.to_quotient(kron_vec(f, x, x)) == c.comul.apply(x);
  bool normal = c.counit.apply(x) == c.A->unit;
  return split && normal;
}

DualRingResult dual_ring(const CoringPresentation& c, const Vec& x) {
  if (!is_grouplike(c, x)) throw InvalidInput("dual_ring needs a grouplike element");
  const FieldSpec& f = c.A->field;
  const std::size_t na = c.A->dim;
  const std::size_t nc = c.C.dim;
  TensorOverA cc = tensor_over_A(c.C, c.C);
  std::vector<Matrix> basis = left_linear_maps(c);
  const std::size_t nd = basis.size();
  if (nd == 0) throw InvalidInput("the coring admits no left-linear functionals");

  std::vector<std::string> names;
  for (std::size_t k = 0; k < nd; ++k) names.push_back("f" + std::to_string(k + 1));

  // (f # g)(c) = g(c_(1) f(c_(2))), evaluated pairwise on the hom basis and
  // expanded back into hom coordinates.
  std::vector<Scalar> structure(nd * nd * nd);
  for (std::size_t p = 0; p < nd; ++p) {
    for (std::size_t q = 0; q < nd; ++q) {
      Matrix product(f, na, nc);
      for (std::size_t cb = 0; cb < nc; ++cb) {
        Vec val = vec_zero(na);
        for (const auto& t : lifted_pairs(cc, c.comul.col(cb))) {
          Vec moved = c.C.right_action_of(basis[p].col(t.second)).apply(unit_vec(f, nc, t.first));
          val = vec_add(f, val, vec_scale(f, t.coeff, basis[q].apply(moved)));
        }
        for (std::size_t r = 0; r < na; ++r) product.at(r, cb) = val[r];
      }
      Vec coords = hom_coordinates(basis, product, "product of dual-ring basis elements");
      for (std::size_t k = 0; k < nd; ++k) structure[(p * nd + q) * nd + k] = coords[k];
    }
  }
  Vec unit = hom_coordinates(basis, c.counit, "the counit");
  AlgebraPtr dual = make_algebra(f, names, std::move(structure), unit);

  Matrix i_matrix(f, nd, na);
  for (std::size_t a = 0; a < na; ++a) {
    Matrix functional(f, na, nc);
    for (std::size_t cb = 0; cb < nc; ++cb) {
      Vec val = c.A->multiply(c.counit.col(cb), unit_vec(f, na, a));
      for (std::size_t r = 0; r < na; ++r) functional.at(r, cb) = val[r];
    }
    Vec coords = hom_coordinates(basis, functional, "the base-ring embedding");
    for (std::size_t k = 0; k < nd; ++k) i_matrix.at(k, a) = coords[k];
  }
  AlgebraMap i = make_algebra_map(c.A, dual, std::move(i_matrix));

  Matrix chi(f, na, nd);
  for (std::size_t k = 0; k < nd; ++k) {
    Vec val = basis[k].apply(x);
    for (std::size_t r = 0; r < na; ++r) chi.at(r, k) = val[r];
  }
  ARingWithCharacter rc =
      make_character_ring(ARing{c.A, dual, std::move(i)}, std::move(chi), Handedness::Right);
  return DualRingResult{std::move(rc), std::move(basis), x};
}

Subspace coinvariants(const CoringPresentation& c, const Vec& x) {
  if (!is_grouplike(c, x)) throw InvalidInput("coinvariants need a grouplike element");
  const FieldSpec& f = c.A->field;
  const std::size_t na = c.A->dim;
  Matrix m(f, c.C.dim, na);
  for (std::size_t a = 0; a < na; ++a) {
    Vec diff = vec_sub(f, c.C.left_actions[a].apply(x), c.C.right_actions[a].apply(x));
    for (std::size_t r = 0; r < diff.size(); ++r) m.at(r, a) = diff[r];
  }
  return Subspace::from_span(kernel_basis(m));
}

Report verify_frobenius_coring(const CoringPresentation& c, const FrobeniusCoringSystem& sys) {
  const FieldSpec& f = c.A->field;
  const std::size_t na = c.A->dim;
  const std::size_t nc = c.C.dim;
  TensorOverA cc = tensor_over_A(c.C, c.C);
  if (sys.theta.rows() != na || sys.theta.cols() != cc.total.dim || sys.z.size() != nc)
    throw InvalidInput("Frobenius coring data has the wrong shape");

  Report rep;
  rep.append_prefixed(verify_coring(c), "coring");
  if (!rep.ok()) return rep;

  auto& theta_bi = rep.start("theta-bimodule", "theta(a m b) = a theta(m) b");
  for (std::size_t a = 0; a < na; ++a) {
    bool left = sys.theta.mul(cc.total.left_actions[a]) == c.A->left_mult_basis(a).mul(sys.theta);
    bool right =
        sys.theta.mul(cc.total.right_actions[a]) == c.A->right_mult_basis(a).mul(sys.theta);
    record(theta_bi, left && right, c.A->basis_names[a]);
  }

  auto& central = rep.start("z-central", "a z = z a");
  for (std::size_t a = 0; a < na; ++a)
    record(central, c.C.left_actions[a].apply(sys.z) == c.C.right_actions[a].apply(sys.z),
           c.A->basis_names[a]);

  auto theta_of = [&](const Vec& left, const Vec& right) {
    return sys.theta.apply(cc.to_quotient(kron_vec(f, left, right)));
  };

  auto& slide = rep.start("frobenius", "c_(1) theta(c_(2) (x) d) = theta(c (x) d_(1)) d_(2)");
  for (std::size_t cb = 0; cb < nc; ++cb) {
    Vec ec = unit_vec(f, nc, cb);
    for (std::size_t db = 0; db < nc; ++db) {
      Vec ed = unit_vec(f, nc, db);
      Vec lhs = vec_zero(nc);
      for (const auto& t : lifted_pairs(cc, c.comul.col(cb))) {
        Vec val = theta_of(unit_vec(f, nc, t.second), ed);
        Vec moved = c.C.right_action_of(val).apply(unit_vec(f, nc, t.first));
        lhs = vec_add(f, lhs, vec_scale(f, t.coeff, moved));
      }
      Vec rhs = vec_zero(nc);
      for (const auto& t : lifted_pairs(cc, c.comul.col(db))) {
        Vec val = theta_of(ec, unit_vec(f, nc, t.first));
        Vec moved = c.C.left_action_of(val).apply(unit_vec(f, nc, t.second));
        rhs = vec_add(f, rhs, vec_scale(f, t.coeff, moved));
      }
      record(slide, lhs == rhs, "c" + std::to_string(cb) + ",c" + std::to_string(db));
    }
  }

  auto& norm = rep.start("normalisation", "theta(z (x) c) = eps(c) = theta(c (x) z)");
  for (std::size_t cb = 0; cb < nc; ++cb) {
    Vec ec = unit_vec(f, nc, cb);
    bool ok = theta_of(sys.z, ec) == c.counit.col(cb) && theta_of(ec, sys.z) == c.counit.col(cb);
    record(norm, ok, "c" + std::to_string(cb));
  }
  return rep;
}

CoringTraceData coring_alpha_trace(const CoringPresentation& c, const FrobeniusCoringSystem& sys,
                                   const DualRingResult& dual) {
  const FieldSpec& f = c.A->field;
  const std::size_t na = c.A->dim;
  const std::size_t nc = c.C.dim;
  const std::size_t nd = dual.hom_basis.size();
  TensorOverA cc = tensor_over_A(c.C, c.C);
  const Algebra& dual_alg = *dual.rc.ring.R;

  auto theta_of = [&](const Vec& left, const Vec& right) {
    return sys.theta.apply(cc.to_quotient(kron_vec(f, left, right)));
  };

  CoringTraceData out{Matrix(f, nd, na), Matrix(f, na, nd), Matrix(f, na, na), Report{}};
  for (std::size_t a = 0; a < na; ++a) {
    Matrix functional(f, na, nc);
    for (std::size_t cb = 0; cb < nc; ++cb) {
      Vec moved = c.C.right_actions[a].apply(unit_vec(f, nc, cb));
      Vec val = theta_of(moved, dual.x);
      for (std::size_t r = 0; r < na; ++r) functional.at(r, cb) = val[r];
    }
    Vec coords = hom_coordinates(dual.hom_basis, functional, "the alpha image");
    for (std::size_t k = 0; k < nd; ++k) out.alpha.at(k, a) = coords[k];

    Vec tr = theta_of(c.C.right_actions[a].apply(dual.x), dual.x);
    for (std::size_t r = 0; r < na; ++r) out.trace.at(r, a) = tr[r];
  }
  for (std::size_t k = 0; k < nd; ++k) {
    Vec val = dual.hom_basis[k].apply(sys.z);
    for (std::size_t r = 0; r < na; ++r) out.alpha_inv.at(r, k) = val[r];
  }

  InvariantsBundle inv = invariants(dual.rc);

  std::vector<Vec> alpha_cols;
  for (std::size_t a = 0; a < na; ++a) alpha_cols.push_back(out.alpha.col(a));
  auto& into_q = out.report.start("alpha-into-Q", "image(alpha) = Q");
  record(into_q, Subspace::from_span(f, alpha_cols) == inv.Q, "image");

  auto& inverse = out.report.start("alpha-inverse", "alpha_inv alpha = id, alpha alpha_inv = id on Q");
  record(inverse, out.alpha_inv.mul(out.alpha) == Matrix::identity(f, na), "alpha_inv . alpha");
  for (std::size_t i = 0; i < inv.Q.dim(); ++i) {
    Vec q = inv.Q.basis_vector(i);
    record(inverse, out.alpha.apply(out.alpha_inv.apply(q)) == q, "alpha . alpha_inv");
  }

  // The printed description of Q: q with c_(1) q(c_(2)) = q(c) x for every c.
  Matrix description(f, 0, nd);
  for (std::size_t cb = 0; cb < nc; ++cb) {
    Matrix block(f, nc, nd);
    for (std::size_t k = 0; k < nd; ++k) {
      Vec lhs = vec_zero(nc);
      for (const auto& t : lifted_pairs(cc, c.comul.col(cb))) {
        Vec moved =
            c.C.right_action_of(dual.hom_basis[k].col(t.second)).apply(unit_vec(f, nc, t.first));
        lhs = vec_add(f, lhs, vec_scale(f, t.coeff, moved));
      }
      Vec rhs = c.C.left_action_of(dual.hom_basis[k].col(cb)).apply(dual.x);
      Vec diff = vec_sub(f, lhs, rhs);
      for (std::size_t r = 0; r < nc; ++r) block.at(r, k) = diff[r];
    }
    description = Matrix::vstack(description, block);
  }
  auto& qdesc = out.report.start("q-description", "Q = {q : c_(1) q(c_(2)) = q(c) x}");
  record(qdesc, Subspace::from_span(kernel_basis(description)) == inv.Q, "kernel");

  auto& into_b = out.report.start("trace-into-B", "tr(a) lies in B");
  for (std::size_t a = 0; a < na; ++a)
    record(into_b, inv.B.contains(out.trace.col(a)), c.A->basis_names[a]);

  auto& factor = out.report.start("trace-chi-alpha", "tr = chi o alpha");
  record(factor, out.trace == dual.rc.chi.mul(out.alpha), "matrix");

  auto& action = out.report.start("module-action", "f . a = theta(z_(1) f(z_(2)) a (x) x)");
  for (std::size_t k = 0; k < nd; ++k) {
    for (std::size_t a = 0; a < na; ++a) {
      Vec via_alpha = out.alpha_inv.apply(
          dual_alg.multiply(unit_vec(f, nd, k), out.alpha.col(a)));
      Vec direct = vec_zero(na);
      for (const auto& t : lifted_pairs(cc, c.comul.apply(sys.z))) {
        Vec coeff_a =
            c.A->multiply(dual.hom_basis[k].col(t.second), unit_vec(f, na, a));
        Vec moved = c.C.right_action_of(coeff_a).apply(unit_vec(f, nc, t.first));
        direct = vec_add(f, direct, vec_scale(f, t.coeff, theta_of(moved, dual.x)));
      }
      record(action, via_alpha == direct,
             dual_alg.basis_names[k] + "," + c.A->basis_names[a]);
    }
  }
  return out;
}

}  // namespace froblab
