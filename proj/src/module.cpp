#include "froblab/module.hpp"

#include <cstdlib>
#include <string>

namespace froblab {

Matrix RightModule::action_of(const Vec& x) const {
  if (x.size() != algebra->dim) throw InvalidInput("algebra element length mismatch in action");
  const FieldSpec& f = algebra->field;
  Matrix out(f, dim, dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (f.is_zero(x[i])) continue;
    out = out.add(actions[i].scaled(x[i]));
  }
  return out;
}

Report check_module(const RightModule& m) {
  Report rep;
  const Algebra& a = *m.algebra;
  const FieldSpec& f = a.field;
  auto& shape = rep.start("action-shape", "one dim x dim action matrix per algebra basis element");
  record(shape, m.actions.size() == a.dim, "count");
  for (const auto& mat : m.actions)
    record(shape, mat.rows() == m.dim && mat.cols() == m.dim, "shape");
  if (!shape.pass) return rep;

  auto& unit = rep.start("action-unit", "m*1 = m");
  record(unit, m.action_of(a.unit) == Matrix::identity(f, m.dim), "1");

  auto& law = rep.start("action-assoc", "m*(x*y) = (m*x)*y");
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec prod = a.multiply(unit_vec(f, a.dim, i), unit_vec(f, a.dim, j));
      Matrix lhs = m.action_of(prod);
      Matrix rhs = m.actions[j].mul(m.actions[i]);
      record(law, lhs == rhs, "(" + a.basis_names[i] + "," + a.basis_names[j] + ")");
    }
  return rep;
}

RightModule regular_right_module(AlgebraPtr a) {
  RightModule m;
  m.algebra = a;
  m.dim = a->dim;
  for (std::size_t i = 0; i < a->dim; ++i) m.actions.push_back(a->right_mult_basis(i));
  return m;
}

Matrix Bimodule::left_action_of(const Vec& x) const {
  const FieldSpec& f = left_algebra->field;
  Matrix out(f, dim, dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (f.is_zero(x[i])) continue;
    out = out.add(left_actions[i].scaled(x[i]));
  }
  return out;
}

Matrix Bimodule::right_action_of(const Vec& x) const {
  const FieldSpec& f = right_algebra->field;
  Matrix out(f, dim, dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (f.is_zero(x[i])) continue;
    out = out.add(right_actions[i].scaled(x[i]));
  }
  return out;
}

Report check_bimodule(const Bimodule& m) {
  Report rep;
  const Algebra& l = *m.left_algebra;
  const Algebra& r = *m.right_algebra;
  const FieldSpec& f = l.field;

  auto& shape = rep.start("bimodule-shape", "action matrix counts and sizes match the algebras");
  record(shape, m.left_actions.size() == l.dim && m.right_actions.size() == r.dim, "count");
  for (const auto& mat : m.left_actions)
    record(shape, mat.rows() == m.dim && mat.cols() == m.dim, "left shape");
  for (const auto& mat : m.right_actions)
    record(shape, mat.rows() == m.dim && mat.cols() == m.dim, "right shape");
  if (!shape.pass) return rep;

  auto& units = rep.start("bimodule-units", "1*m = m = m*1");
  record(units, m.left_action_of(l.unit) == Matrix::identity(f, m.dim), "left 1");
  record(units, m.right_action_of(r.unit) == Matrix::identity(f, m.dim), "right 1");

  auto& ll = rep.start("left-assoc", "(x*y)*m = x*(y*m)");
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = 0; j < l.dim; ++j) {
      Vec prod = l.multiply(unit_vec(f, l.dim, i), unit_vec(f, l.dim, j));
      record(ll, m.left_action_of(prod) == m.left_actions[i].mul(m.left_actions[j]),
             "(" + l.basis_names[i] + "," + l.basis_names[j] + ")");
    }
  auto& rr = rep.start("right-assoc", "m*(x*y) = (m*x)*y");
  for (std::size_t i = 0; i < r.dim; ++i)
    for (std::size_t j = 0; j < r.dim; ++j) {
      Vec prod = r.multiply(unit_vec(f, r.dim, i), unit_vec(f, r.dim, j));
      record(rr, m.right_action_of(prod) == m.right_actions[j].mul(m.right_actions[i]),
             "(" + r.basis_names[i] + "," + r.basis_names[j] + ")");
    }
  auto& comm = rep.start("acts-commute", "(x*m)*y = x*(m*y)");
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = 0; j < r.dim; ++j)
      record(comm, m.left_actions[i].mul(m.right_actions[j]) == m.right_actions[j].mul(m.left_actions[i]),
             "(" + l.basis_names[i] + "," + r.basis_names[j] + ")");
  return rep;
}

Bimodule regular_bimodule(AlgebraPtr a) {
  Bimodule m;
  m.left_algebra = a;
  m.right_algebra = a;
  m.dim = a->dim;
  for (std::size_t i = 0; i < a->dim; ++i) {
    m.left_actions.push_back(a->left_mult_basis(i));
    m.right_actions.push_back(a->right_mult_basis(i));
  }
  return m;
}

Bimodule opposite_bimodule(const Bimodule& m, AlgebraPtr r_op, AlgebraPtr l_op) {
  if (r_op->dim != m.right_algebra->dim || l_op->dim != m.left_algebra->dim)
    throw InvalidInput("opposite algebra dimensions do not match the bimodule");
  Bimodule out;
  out.left_algebra = r_op;
  out.right_algebra = l_op;
  out.dim = m.dim;
  out.left_actions = m.right_actions;
  out.right_actions = m.left_actions;
  return out;
}

RightModule right_part(const Bimodule& m) {
  RightModule r;
  r.algebra = m.right_algebra;
  r.dim = m.dim;
  r.actions = m.right_actions;
  return r;
}

std::vector<Matrix> hom_space(const RightModule& m, const RightModule& n) {
  if (!(*m.algebra == *n.algebra)) throw InvalidInput("hom_space requires modules over the same algebra");
  const FieldSpec& f = m.algebra->field;
  std::size_t nm = m.dim, nn = n.dim, vars = nn * nm;
  // Unknown T is nn x nm, flattened row-major. Conditions: T a_i = b_i T.
  Matrix sys(f, 0, vars);
  bool first = true;
  for (std::size_t actIdx = 0; actIdx < m.algebra->dim; ++actIdx) {
    const Matrix& am = m.actions[actIdx];
    const Matrix& bn = n.actions[actIdx];
    Matrix block(f, nn * nm, vars);
    for (std::size_t r = 0; r < nn; ++r)
      for (std::size_t c = 0; c < nm; ++c) {
        std::size_t eq = r * nm + c;
        // (T * am)[r][c] = sum_s T[r][s] am[s][c]
        for (std::size_t s = 0; s < nm; ++s)
          block.at(eq, r * nm + s) = f.add(block.at(eq, r * nm + s), am.at(s, c));
        // -(bn * T)[r][c] = -sum_s bn[r][s] T[s][c]
        for (std::size_t s = 0; s < nn; ++s)
          block.at(eq, s * nm + c) = f.sub(block.at(eq, s * nm + c), bn.at(r, s));
      }
    sys = first ? block : Matrix::vstack(sys, block);
    first = false;
  }
  Matrix kb = kernel_basis(sys);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < kb.rows(); ++k) {
    Matrix t(f, nn, nm);
    for (std::size_t r = 0; r < nn; ++r)
      for (std::size_t c = 0; c < nm; ++c) t.at(r, c) = kb.at(k, r * nm + c);
    out.push_back(std::move(t));
  }
  return out;
}

TensorOverA tensor_over_A(const Bimodule& m, const Bimodule& n) {
  if (!(*m.right_algebra == *n.left_algebra))
    throw InvalidInput("tensor_over_A: inner algebras disagree");
  const Algebra& a = *m.right_algebra;
  const FieldSpec& f = a.field;
  TensorOverA t;
  t.left_dim = m.dim;
  t.right_dim = n.dim;
  std::size_t full = t.full_dim();

  // Relations (m*a) (x) n - m (x) (a*n) over all basis triples.
  std::vector<Vec> rel;
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t p = 0; p < a.dim; ++p) {
      Vec ma = m.right_actions[p].apply(unit_vec(f, m.dim, i));
      for (std::size_t j = 0; j < n.dim; ++j) {
        Vec an = n.left_actions[p].apply(unit_vec(f, n.dim, j));
        Vec v(full);
        for (std::size_t s = 0; s < m.dim; ++s)
          if (!f.is_zero(ma[s])) v[s * n.dim + j] = f.add(v[s * n.dim + j], ma[s]);
        for (std::size_t u = 0; u < n.dim; ++u)
          if (!f.is_zero(an[u])) v[i * n.dim + u] = f.sub(v[i * n.dim + u], an[u]);
        if (!vec_is_zero(v)) rel.push_back(std::move(v));
      }
    }
  t.relations = rel.empty() ? Subspace::zero(f, full) : Subspace::from_span(f, rel);

  std::vector<bool> is_pivot(full, false);
  for (std::size_t p : t.relations.pivots()) is_pivot[p] = true;
  for (std::size_t c = 0; c < full; ++c)
    if (!is_pivot[c]) t.free_cols.push_back(c);
  std::size_t q = t.free_cols.size();

  t.proj = Matrix(f, q, full);
  for (std::size_t c = 0; c < full; ++c) {
    Vec reduced = t.relations.reduce(unit_vec(f, full, c));
    for (std::size_t r = 0; r < q; ++r) t.proj.at(r, c) = reduced[t.free_cols[r]];
  }
  t.section = Matrix(f, full, q);
  for (std::size_t r = 0; r < q; ++r) t.section.at(t.free_cols[r], r) = f.one();

  // Outer actions descend; confirm invariance of the relation space first.
  auto descend = [&](const Matrix& full_op) {
    for (std::size_t i = 0; i < t.relations.dim(); ++i)
      if (!t.relations.contains(full_op.apply(t.relations.basis_vector(i))))
        throw InvalidInput("outer action does not preserve the balancing relations");
    return t.proj.mul(full_op).mul(t.section);
  };
  t.total.left_algebra = m.left_algebra;
  t.total.right_algebra = n.right_algebra;
  t.total.dim = q;
  Matrix idn = Matrix::identity(f, n.dim);
  Matrix idm = Matrix::identity(f, m.dim);
  for (std::size_t i = 0; i < m.left_algebra->dim; ++i)
    t.total.left_actions.push_back(descend(kron(m.left_actions[i], idn)));
  for (std::size_t j = 0; j < n.right_algebra->dim; ++j)
    t.total.right_actions.push_back(descend(kron(idm, n.right_actions[j])));
  return t;
}

std::size_t enumeration_cap(const FieldSpec& field) {
  if (const char* env = std::getenv("FROBLAB_MAX_ENUM_DIM")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  if (field.kind != FieldKind::Prime) return 0;
  if (field.p == 2) return 8;
  if (field.p == 3) return 5;
  return 3;
}

std::vector<Subspace> submodules(const RightModule& m) {
  const FieldSpec& f = m.algebra->field;
  if (f.kind != FieldKind::Prime)
    throw EnumerationLimit("submodule enumeration needs a finite field; " + f.describe() +
                           " is infinite");
  std::size_t cap = enumeration_cap(f);
  if (m.dim > cap)
    throw EnumerationLimit("submodule enumeration over " + f.describe() + " capped at dimension " +
                           std::to_string(cap) + ", module has dimension " + std::to_string(m.dim) +
                           " (override with FROBLAB_MAX_ENUM_DIM)");
  std::vector<Subspace> out;
  for (auto& s : all_subspaces(f, m.dim)) {
    bool invariant = true;
    for (std::size_t b = 0; b < m.algebra->dim && invariant; ++b)
      for (std::size_t i = 0; i < s.dim() && invariant; ++i)
        if (!s.contains(m.actions[b].apply(s.basis_vector(i)))) invariant = false;
    if (invariant) out.push_back(std::move(s));
  }
  return out;
}

Subspace annihilator(const RightModule& m, const std::vector<Vec>& elements) {
  const FieldSpec& f = m.algebra->field;
  std::vector<Vec> xs = elements;
  if (xs.empty())
    for (std::size_t i = 0; i < m.dim; ++i) xs.push_back(unit_vec(f, m.dim, i));
  Matrix sys(f, 0, m.algebra->dim);
  bool first = true;
  for (const Vec& x : xs) {
    Matrix block(f, m.dim, m.algebra->dim);
    for (std::size_t b = 0; b < m.algebra->dim; ++b) {
      Vec xb = m.actions[b].apply(x);
      for (std::size_t r = 0; r < m.dim; ++r) block.at(r, b) = xb[r];
    }
    sys = first ? block : Matrix::vstack(sys, block);
    first = false;
  }
  return Subspace::from_span(kernel_basis(sys));
}

QuotientModuleResult quotient_module(const RightModule& m, const Subspace& sub) {
  const FieldSpec& f = m.algebra->field;
  for (std::size_t b = 0; b < m.algebra->dim; ++b)
    for (std::size_t i = 0; i < sub.dim(); ++i)
      if (!sub.contains(m.actions[b].apply(sub.basis_vector(i))))
        throw InvalidInput("subspace is not a submodule");
  std::vector<bool> is_pivot(m.dim, false);
  for (std::size_t p : sub.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.dim; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  std::size_t q = free_cols.size();
  Matrix proj(f, q, m.dim);
  for (std::size_t c = 0; c < m.dim; ++c) {
    Vec reduced = sub.reduce(unit_vec(f, m.dim, c));
    for (std::size_t r = 0; r < q; ++r) proj.at(r, c) = reduced[free_cols[r]];
  }
  Matrix section(f, m.dim, q);
  for (std::size_t r = 0; r < q; ++r) section.at(free_cols[r], r) = f.one();
  QuotientModuleResult res;
  res.module.algebra = m.algebra;
  res.module.dim = q;
  for (std::size_t b = 0; b < m.algebra->dim; ++b)
    res.module.actions.push_back(proj.mul(m.actions[b]).mul(section));
  res.projection = proj;
  res.section = section;
  return res;
}

bool is_module_map(const RightModule& m, const RightModule& n, const Matrix& t) {
  for (std::size_t b = 0; b < m.algebra->dim; ++b)
    if (!(t.mul(m.actions[b]) == n.actions[b].mul(t))) return false;
  return true;
}

}  // namespace froblab
