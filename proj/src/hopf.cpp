#include "froblab/hopf.hpp"

#include <utility>

namespace froblab {

namespace {

Scalar dot(const FieldSpec& f, const Vec& a, const Vec& b) {
  Scalar s = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

/// Pairs (p, q, coefficient) of the comultiplication of one basis element.
struct SweedlerTerm {
  std::size_t first;
  std::size_t second;
  Scalar coeff;
};

std::vector<SweedlerTerm> comul_terms(const HopfPresentation& h, std::size_t s) {
  const FieldSpec& f = h.H->field;
  std::size_t n = h.H->dim;
  std::vector<SweedlerTerm> out;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Scalar& c = h.comul.at(p * n + q, s);
      if (!f.is_zero(c)) out.push_back({p, q, c});
    }
  return out;
}

Scalar eps_of(const HopfPresentation& h, std::size_t s) { return h.counit.at(0, s); }

/// Left integrals in an algebra whose augmentation assigns aug[s] to basis
/// element s: the kernel of all maps x -> e_s x - aug[s] x.
Subspace left_integral_space(const Algebra& alg, const Vec& aug) {
  const FieldSpec& f = alg.field;
  Matrix stack(f, 0, alg.dim);
  for (std::size_t s = 0; s < alg.dim; ++s) {
    Matrix m = alg.left_mult_basis(s);
    for (std::size_t r = 0; r < alg.dim; ++r) m.at(r, r) = f.sub(m.at(r, r), aug[s]);
    stack = Matrix::vstack(stack, m);
  }
  return Subspace::from_span(kernel_basis(stack));
}

}  // namespace

HopfPresentation make_hopf(AlgebraPtr h, Matrix comul, Matrix counit, Matrix antipode) {
  if (!h) throw InvalidInput("hopf data needs an algebra");
  std::size_t n = h->dim;
  if (comul.rows() != n * n || comul.cols() != n)
    throw InvalidInput("comultiplication must be dim^2 x dim");
  if (counit.rows() != 1 || counit.cols() != n) throw InvalidInput("counit must be a row");
  if (antipode.rows() != n || antipode.cols() != n)
    throw InvalidInput("antipode must be dim x dim");
  return HopfPresentation{std::move(h), std::move(comul), std::move(counit),
                          std::move(antipode)};
}

Report verify_hopf(const HopfPresentation& h) {
  const Algebra& H = *h.H;
  const FieldSpec& f = H.field;
  std::size_t n = H.dim;
  Report rep;
  rep.append_prefixed(check_algebra(H), "algebra");
  if (!rep.ok()) return rep;

  AlgebraPtr hh = tensor_algebra(H, H);

  auto& coassoc = rep.start("coassoc", "(Delta (x) id) Delta = (id (x) Delta) Delta");
  for (std::size_t s = 0; s < n; ++s) {
    Vec lhs(n * n * n), rhs(n * n * n);
    for (const auto& term : comul_terms(h, s)) {
      Vec da = h.comul.col(term.first);
      Vec db = h.comul.col(term.second);
      for (std::size_t pq = 0; pq < n * n; ++pq) {
        std::size_t li = pq * n + term.second;
        lhs[li] = f.add(lhs[li], f.mul(term.coeff, da[pq]));
        std::size_t ri = term.first * n * n + pq;
        rhs[ri] = f.add(rhs[ri], f.mul(term.coeff, db[pq]));
      }
    }
    record(coassoc, lhs == rhs, H.basis_names[s]);
  }

  auto& counit_law = rep.start("counit", "(eps (x) id) Delta = id = (id (x) eps) Delta");
  for (std::size_t s = 0; s < n; ++s) {
    Vec left(n), right(n);
    for (const auto& term : comul_terms(h, s)) {
      left[term.second] =
          f.add(left[term.second], f.mul(term.coeff, eps_of(h, term.first)));
      right[term.first] =
          f.add(right[term.first], f.mul(term.coeff, eps_of(h, term.second)));
    }
    Vec e_s = unit_vec(f, n, s);
    record(counit_law, left == e_s && right == e_s, H.basis_names[s]);
  }

  auto& dmult = rep.start("delta-mult", "Delta(h k) = Delta(h) Delta(k)");
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t u = 0; u < n; ++u) {
      Vec lhs = h.comul.apply(H.multiply(unit_vec(f, n, s), unit_vec(f, n, u)));
      Vec rhs = hh->multiply(h.comul.col(s), h.comul.col(u));
      record(dmult, lhs == rhs, "(" + H.basis_names[s] + ", " + H.basis_names[u] + ")");
    }
  auto& dunit = rep.start("delta-unit", "Delta(1) = 1 (x) 1");
  record(dunit, h.comul.apply(H.unit) == hh->unit, "1");

  auto& emult = rep.start("eps-mult", "eps(h k) = eps(h) eps(k)");
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t u = 0; u < n; ++u) {
      Scalar lhs = dot(f, h.counit.row(0), H.multiply(unit_vec(f, n, s), unit_vec(f, n, u)));
      record(emult, lhs == f.mul(eps_of(h, s), eps_of(h, u)),
             "(" + H.basis_names[s] + ", " + H.basis_names[u] + ")");
    }
  auto& eunit = rep.start("eps-unit", "eps(1) = 1");
  record(eunit, dot(f, h.counit.row(0), H.unit) == f.one(), "1");

  auto& anti = rep.start("antipode", "S(h_(1)) h_(2) = eps(h) 1 = h_(1) S(h_(2))");
  for (std::size_t s = 0; s < n; ++s) {
    Vec lhs(n), rhs(n);
    for (const auto& term : comul_terms(h, s)) {
      lhs = vec_add(f, lhs,
                    vec_scale(f, term.coeff,
                              H.multiply(h.antipode.col(term.first),
                                         unit_vec(f, n, term.second))));
      rhs = vec_add(f, rhs,
                    vec_scale(f, term.coeff,
                              H.multiply(unit_vec(f, n, term.first),
                                         h.antipode.col(term.second))));
    }
    Vec want = vec_scale(f, eps_of(h, s), H.unit);
    record(anti, lhs == want && rhs == want, H.basis_names[s]);
  }

  auto& inv = rep.start("antipode-invertible", "S has a two-sided inverse");
  record(inv, rank(h.antipode) == n, "S");
  return rep;
}

Matrix antipode_inverse(const HopfPresentation& h) {
  std::optional<Matrix> inv = inverse(h.antipode);
  if (!inv) throw InvalidInput("antipode is not invertible");
  return *inv;
}

AlgebraPtr dual_algebra(const HopfPresentation& h) {
  const Algebra& H = *h.H;
  std::size_t n = H.dim;
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& name : H.basis_names) names.push_back(name + "*");
  std::vector<Scalar> structure;
  structure.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) structure.push_back(h.comul.at(i * n + j, k));
  return make_algebra(H.field, std::move(names), std::move(structure), h.counit.row(0));
}

IntegralData integrals(const HopfPresentation& h) {
  const Algebra& H = *h.H;
  const FieldSpec& f = H.field;
  Vec eps = h.counit.row(0);
  Subspace j_space = left_integral_space(H, eps);
  AlgebraPtr dual = dual_algebra(h);
  // The augmentation of the convolution algebra is evaluation at 1.
  Subspace i_space = left_integral_space(*dual, H.unit);
  if (j_space.dim() == 0 || i_space.dim() == 0)
    throw InvalidInput("degenerate integral pairing: an integral space vanishes");
  Vec t = j_space.basis_vector(0);
  Vec phi0 = i_space.basis_vector(0);
  Scalar p = dot(f, phi0, t);
  if (f.is_zero(p))
    throw InvalidInput("degenerate integral pairing: <phi, t> = 0");
  Vec phi = vec_scale(f, f.inv(p), phi0);
  return IntegralData{std::move(j_space), std::move(i_space), std::move(t), std::move(phi)};
}

HopfFrobenius hopf_frobenius_system(const HopfPresentation& h) {
  const Algebra& H = *h.H;
  const FieldSpec& f = H.field;
  std::size_t n = H.dim;
  IntegralData ints = integrals(h);
  Matrix sbar = antipode_inverse(h);

  Scalar twisted = dot(f, ints.phi, sbar.apply(ints.t));
  if (twisted != f.one())
    throw InvalidInput("integral pairing is not antipode-stable: <phi, Sbar(t)> != 1");

  // e = sum t_(2) (x) Sbar(t_(1)), with the normalised phi carried by nu.
  Vec e_rr(n * n);
  Vec dt = h.comul.apply(ints.t);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Scalar& c = dt[p * n + q];
      if (f.is_zero(c)) continue;
      for (std::size_t m = 0; m < n; ++m) {
        const Scalar& s = sbar.at(m, p);
        if (f.is_zero(s)) continue;
        e_rr[q * n + m] = f.add(e_rr[q * n + m], f.mul(c, s));
      }
    }
  Matrix nu_r = Matrix::row_vector(f, ints.phi);

  AlgebraPtr k = scalar_algebra(f);
  ARing ring{k, h.H, AlgebraMap{k, h.H, Matrix::column_vector(f, H.unit), true}};
  FrobeniusSystem sys = classical_system(std::move(ring), e_rr, nu_r, h.counit);
  return HopfFrobenius{h, std::move(ints), std::move(sys)};
}

ModuleAlgebraAction make_module_algebra(HopfPresentation hopf, AlgebraPtr a,
                                        std::vector<Matrix> action) {
  if (!a) throw InvalidInput("module algebra needs an algebra");
  if (a->field != hopf.H->field) throw InvalidInput("field mismatch between H and A");
  if (action.size() != hopf.H->dim)
    throw InvalidInput("need one action matrix per H basis element");
  for (const Matrix& m : action)
    if (m.rows() != a->dim || m.cols() != a->dim)
      throw InvalidInput("action matrices must be dim(A) x dim(A)");
  return ModuleAlgebraAction{std::move(hopf), std::move(a), std::move(action)};
}

Matrix action_matrix(const ModuleAlgebraAction& act, const Vec& h) {
  const FieldSpec& f = act.A->field;
  Matrix out(f, act.A->dim, act.A->dim);
  for (std::size_t s = 0; s < act.action.size(); ++s)
    if (!f.is_zero(h[s])) out = out.add(act.action[s].scaled(h[s]));
  return out;
}

Report check_module_algebra(const ModuleAlgebraAction& act) {
  const Algebra& H = *act.hopf.H;
  const Algebra& A = *act.A;
  const FieldSpec& f = A.field;
  std::size_t nh = H.dim, na = A.dim;
  Report rep;
  rep.append_prefixed(verify_hopf(act.hopf), "hopf");
  rep.append_prefixed(check_algebra(A), "algebra");
  if (!rep.ok()) return rep;

  auto& unital = rep.start("action-unital", "1_H . a = a");
  record(unital, action_matrix(act, H.unit) == Matrix::identity(f, na), "1");

  auto& mult = rep.start("action-mult", "(h k) . a = h . (k . a)");
  for (std::size_t s = 0; s < nh; ++s)
    for (std::size_t u = 0; u < nh; ++u) {
      Matrix lhs = action_matrix(act, H.multiply(unit_vec(f, nh, s), unit_vec(f, nh, u)));
      record(mult, lhs == act.action[s].mul(act.action[u]),
             "(" + H.basis_names[s] + ", " + H.basis_names[u] + ")");
    }

  auto& measure = rep.start("measure-mult", "h . (a b) = (h_(1) . a)(h_(2) . b)");
  for (std::size_t s = 0; s < nh; ++s) {
    auto terms = comul_terms(act.hopf, s);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j) {
        Vec lhs = act.action[s].apply(A.multiply(unit_vec(f, na, i), unit_vec(f, na, j)));
        Vec rhs(na);
        for (const auto& term : terms)
          rhs = vec_add(f, rhs,
                        vec_scale(f, term.coeff,
                                  A.multiply(act.action[term.first].col(i),
                                             act.action[term.second].col(j))));
        record(measure, lhs == rhs,
               "(" + H.basis_names[s] + ", " + A.basis_names[i] + ", " + A.basis_names[j] +
                   ")");
      }
  }

  auto& munit = rep.start("measure-unit", "h . 1 = eps(h) 1");
  for (std::size_t s = 0; s < nh; ++s)
    record(munit,
           act.action[s].apply(A.unit) == vec_scale(f, eps_of(act.hopf, s), A.unit),
           H.basis_names[s]);
  return rep;
}

Subspace invariant_subalgebra(const ModuleAlgebraAction& act) {
  const FieldSpec& f = act.A->field;
  std::size_t na = act.A->dim;
  Matrix stack(f, 0, na);
  for (std::size_t s = 0; s < act.action.size(); ++s) {
    Matrix m = act.action[s];
    Scalar e = eps_of(act.hopf, s);
    for (std::size_t r = 0; r < na; ++r) m.at(r, r) = f.sub(m.at(r, r), e);
    stack = Matrix::vstack(stack, m);
  }
  return Subspace::from_span(kernel_basis(stack));
}

SmashProduct smash(const ModuleAlgebraAction& act) {
  const Algebra& H = *act.hopf.H;
  const Algebra& A = *act.A;
  const FieldSpec& f = A.field;
  std::size_t nh = H.dim, na = A.dim, n = na * nh;

  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t s = 0; s < nh; ++s)
      names.push_back(A.basis_names[i] + "#" + H.basis_names[s]);

  std::vector<Scalar> structure(n * n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t s = 0; s < nh; ++s) {
      auto terms = comul_terms(act.hopf, s);
      for (std::size_t j = 0; j < na; ++j)
        for (std::size_t u = 0; u < nh; ++u) {
          Vec prod(n);
          for (const auto& term : terms) {
            Vec a_part = A.multiply(unit_vec(f, na, i), act.action[term.first].col(j));
            Vec h_part = H.multiply(unit_vec(f, nh, term.second), unit_vec(f, nh, u));
            prod = vec_add(f, prod, vec_scale(f, term.coeff, kron_vec(f, a_part, h_part)));
          }
          std::size_t x = i * nh + s, y = j * nh + u;
          for (std::size_t z = 0; z < n; ++z) structure[(x * n + y) * n + z] = prod[z];
        }
    }
  AlgebraPtr r = make_algebra(f, std::move(names), std::move(structure),
                              kron_vec(f, A.unit, H.unit));

  Matrix i_map(f, n, na);
  for (std::size_t i = 0; i < na; ++i) {
    Vec col = kron_vec(f, unit_vec(f, na, i), H.unit);
    for (std::size_t rr = 0; rr < n; ++rr) i_map.at(rr, i) = col[rr];
  }
  Matrix chi(f, na, n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t s = 0; s < nh; ++s) chi.at(i, i * nh + s) = eps_of(act.hopf, s);

  ARing ring{act.A, r, AlgebraMap{act.A, r, std::move(i_map), true}};
  ARingWithCharacter rc =
      make_character_ring(std::move(ring), std::move(chi), Handedness::Left);

  Subspace fixed = invariant_subalgebra(act);
  if (invariants(rc).B != fixed)
    throw InvalidInput("smash invariants disagree with the classical fixed ring");
  return SmashProduct{act, std::move(rc), std::move(fixed)};
}

SmashFrobenius smash_frobenius(const ModuleAlgebraAction& act) {
  SmashProduct sp = smash(act);
  const Algebra& H = *act.hopf.H;
  const Algebra& A = *act.A;
  const FieldSpec& f = A.field;
  std::size_t nh = H.dim, na = A.dim, n = na * nh;
  IntegralData ints = integrals(act.hopf);
  Matrix sbar = antipode_inverse(act.hopf);

  // E = sum (1 # t_(2)) (x) (1 (x) phi) (x) (1 # Sbar(t_(1))); the middle
  // leg is the unit of A once the integral line is normalised away.
  Vec e_rr(n * n);
  Vec dt = act.hopf.comul.apply(ints.t);
  for (std::size_t p = 0; p < nh; ++p)
    for (std::size_t q = 0; q < nh; ++q) {
      const Scalar& c = dt[p * nh + q];
      if (f.is_zero(c)) continue;
      Vec first = kron_vec(f, A.unit, unit_vec(f, nh, q));
      Vec second = kron_vec(f, A.unit, sbar.col(p));
      for (std::size_t x = 0; x < n; ++x) {
        if (f.is_zero(first[x])) continue;
        for (std::size_t y = 0; y < n; ++y) {
          if (f.is_zero(second[y])) continue;
          e_rr[x * n + y] = f.add(e_rr[x * n + y], f.mul(c, f.mul(first[x], second[y])));
        }
      }
    }

  // nu(a # h (x) phi) = a <phi, h>.
  Matrix nu_r(f, na, n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t s = 0; s < nh; ++s) nu_r.at(i, i * nh + s) = ints.phi[s];

  FrobeniusSystem sys = classical_system(sp.rc.ring, e_rr, nu_r, std::nullopt);
  return SmashFrobenius{std::move(sp), std::move(ints), std::move(sys)};
}

Vec hopf_trace(const ModuleAlgebraAction& act, const Vec& a, const Vec& t) {
  if (t.size() != act.hopf.H->dim || a.size() != act.A->dim)
    throw InvalidInput("trace arguments have the wrong shape");
  IntegralData ints = integrals(act.hopf);
  if (!ints.J.contains(t)) throw InvalidInput("t is not a left integral");
  return action_matrix(act, t).apply(a);
}

Vec smash_trace_generic(const SmashFrobenius& sf, const Vec& a, const Vec& t) {
  const FrobeniusSystem& sys = sf.system;
  const Algebra& A = *sys.ring.A;
  const Algebra& R = *sys.ring.R;
  const FieldSpec& f = A.field;
  std::size_t na = A.dim, n = R.dim;
  if (!sf.ints.J.contains(t)) throw InvalidInput("t is not a left integral");
  // t = c t0 for the chosen generator t0; the leg A (x) J carries a (x) t
  // as c a.
  Vec coords = sf.ints.J.coordinates(t);
  Vec v = vec_scale(f, coords[0], a);

  const Matrix& chi = sf.product.rc.chi;
  FrobeniusWorkspace ws = frobenius_workspace(sys.ring, sys.ctx, sys.nu);
  Vec full = lift_triple(ws, sys.e);

  Vec out(na);
  for (std::size_t idx = 0; idx < full.size(); ++idx) {
    const Scalar& c = full[idx];
    if (f.is_zero(c)) continue;
    std::size_t r2 = idx % n;
    std::size_t x = (idx / n) % na;
    std::size_t r1 = idx / (n * na);
    // chi(E1 . (pairing of U1 chi(E2) against a (x) t)).
    Vec inner = A.multiply(A.multiply(unit_vec(f, na, x), chi.col(r2)), v);
    Vec r_val = R.multiply(unit_vec(f, n, r1), sys.ring.i.apply(inner));
    out = vec_add(f, out, vec_scale(f, c, chi.apply(r_val)));
  }
  return out;
}

std::optional<ActionTraceWitness> trace_one_witness(const ModuleAlgebraAction& act) {
  IntegralData ints = integrals(act.hopf);
  Matrix m = action_matrix(act, ints.t);
  std::optional<Vec> a = solve(m, act.A->unit);
  if (!a) return std::nullopt;
  return ActionTraceWitness{std::move(*a), ints.t};
}

}  // namespace froblab
