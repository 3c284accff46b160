#include "froblab/algebra.hpp"

#include <sstream>

namespace froblab {

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dim || y.size() != dim) throw InvalidInput("element length mismatch in multiply");
  Vec out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (field.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (field.is_zero(y[j])) continue;
      Scalar xy = field.mul(x[i], y[j]);
      for (std::size_t k = 0; k < dim; ++k) {
        const Scalar& s = c(i, j, k);
        if (field.is_zero(s)) continue;
        out[k] = field.add(out[k], field.mul(xy, s));
      }
    }
  }
  return out;
}

Matrix Algebra::left_mult(const Vec& x) const {
  Matrix m(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Vec col = multiply(x, unit_vec(field, dim, j));
    for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Matrix Algebra::right_mult(const Vec& x) const {
  Matrix m(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Vec col = multiply(unit_vec(field, dim, j), x);
    for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Matrix Algebra::left_mult_basis(std::size_t i) const { return left_mult(unit_vec(field, dim, i)); }
Matrix Algebra::right_mult_basis(std::size_t i) const { return right_mult(unit_vec(field, dim, i)); }

std::string Algebra::element_to_string(const Vec& x) const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t k = 0; k < dim; ++k) {
    if (field.is_zero(x[k])) continue;
    if (any) os << " + ";
    if (!field.is_one(x[k])) os << field.to_string(x[k]) << "*";
    os << (k < basis_names.size() ? basis_names[k] : "b" + std::to_string(k));
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

AlgebraPtr make_algebra(FieldSpec field, std::vector<std::string> names,
                        std::vector<Scalar> structure, Vec unit) {
  auto a = std::make_shared<Algebra>();
  a->field = field;
  a->dim = names.size();
  a->basis_names = std::move(names);
  if (structure.size() != a->dim * a->dim * a->dim)
    throw InvalidInput("structure constant table has wrong size");
  if (unit.size() != a->dim) throw InvalidInput("unit vector has wrong length");
  a->structure = std::move(structure);
  a->unit = std::move(unit);
  return a;
}

AlgebraPtr scalar_algebra(const FieldSpec& field) {
  return make_algebra(field, {"1"}, {field.one()}, Vec{field.one()});
}

Report check_algebra(const Algebra& a) {
  Report rep;
  const FieldSpec& f = a.field;
  auto& assoc = rep.start("assoc", "(x*y)*z = x*(y*z)");
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec ij = a.multiply(unit_vec(f, a.dim, i), unit_vec(f, a.dim, j));
      for (std::size_t k = 0; k < a.dim; ++k) {
        Vec lhs = a.multiply(ij, unit_vec(f, a.dim, k));
        Vec rhs = a.multiply(unit_vec(f, a.dim, i),
                             a.multiply(unit_vec(f, a.dim, j), unit_vec(f, a.dim, k)));
        record(assoc, lhs == rhs,
               "(" + a.basis_names[i] + "," + a.basis_names[j] + "," + a.basis_names[k] + ")");
      }
    }
  auto& unit_l = rep.start("unit-left", "1*x = x");
  auto& unit_r = rep.start("unit-right", "x*1 = x");
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vec e = unit_vec(f, a.dim, i);
    record(unit_l, a.multiply(a.unit, e) == e, a.basis_names[i]);
    record(unit_r, a.multiply(e, a.unit) == e, a.basis_names[i]);
  }
  return rep;
}

AlgebraMap make_algebra_map(AlgebraPtr source, AlgebraPtr target, Matrix m, bool unital) {
  if (source->field != target->field) throw InvalidInput("field mismatch in algebra map");
  if (m.rows() != target->dim || m.cols() != source->dim)
    throw InvalidInput("algebra map matrix must be target-dim x source-dim");
  AlgebraMap am{std::move(source), std::move(target), std::move(m), unital};
  Report rep = check_algebra_map(am);
  if (!rep.ok()) throw InvalidInput("algebra map fails validation:\n" + rep.summary());
  return am;
}

Report check_algebra_map(const AlgebraMap& fm) {
  Report rep;
  const Algebra& s = *fm.source;
  const Algebra& t = *fm.target;
  auto& multc = rep.start("map-mult", "f(x*y) = f(x)*f(y)");
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = 0; j < s.dim; ++j) {
      Vec lhs = fm.apply(s.multiply(unit_vec(s.field, s.dim, i), unit_vec(s.field, s.dim, j)));
      Vec rhs = t.multiply(fm.apply(unit_vec(s.field, s.dim, i)),
                           fm.apply(unit_vec(s.field, s.dim, j)));
      record(multc, lhs == rhs, "(" + s.basis_names[i] + "," + s.basis_names[j] + ")");
    }
  if (fm.unital) {
    auto& unitc = rep.start("map-unit", "f(1) = 1");
    record(unitc, fm.apply(s.unit) == t.unit, "1");
  }
  return rep;
}

AlgebraPtr opposite(const Algebra& a) {
  std::vector<Scalar> structure(a.structure.size());
  auto op = std::make_shared<Algebra>();
  op->field = a.field;
  op->dim = a.dim;
  op->basis_names = a.basis_names;
  op->structure = std::move(structure);
  op->unit = a.unit;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) op->c(i, j, k) = a.c(j, i, k);
  return op;
}

AlgebraPtr tensor_algebra(const Algebra& a, const Algebra& b) {
  if (a.field != b.field) throw InvalidInput("field mismatch in tensor algebra");
  auto t = std::make_shared<Algebra>();
  t->field = a.field;
  t->dim = a.dim * b.dim;
  t->basis_names.reserve(t->dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      t->basis_names.push_back(a.basis_names[i] + "(x)" + b.basis_names[j]);
  t->structure.assign(t->dim * t->dim * t->dim, Scalar());
  // (x1(x)y1)(x2(x)y2) = x1x2 (x) y1y2, expanded on basis pairs.
  for (std::size_t i1 = 0; i1 < a.dim; ++i1)
    for (std::size_t j1 = 0; j1 < b.dim; ++j1)
      for (std::size_t i2 = 0; i2 < a.dim; ++i2)
        for (std::size_t j2 = 0; j2 < b.dim; ++j2) {
          std::size_t u = i1 * b.dim + j1, v = i2 * b.dim + j2;
          for (std::size_t k1 = 0; k1 < a.dim; ++k1) {
            if (a.field.is_zero(a.c(i1, i2, k1))) continue;
            for (std::size_t k2 = 0; k2 < b.dim; ++k2) {
              const Scalar& s2 = b.c(j1, j2, k2);
              if (b.field.is_zero(s2)) continue;
              t->c(u, v, k1 * b.dim + k2) = a.field.mul(a.c(i1, i2, k1), s2);
            }
          }
        }
  t->unit = kron_vec(a.field, a.unit, b.unit);
  return t;
}

Subspace centralizer(const AlgebraMap& j) {
  const Algebra& t = *j.target;
  const Algebra& s = *j.source;
  // a commutes with j(x) for every basis x of the source.
  Matrix stacked(t.field, 0, t.dim);
  bool first = true;
  for (std::size_t i = 0; i < s.dim; ++i) {
    Vec js = j.apply(unit_vec(s.field, s.dim, i));
    Matrix cond = t.left_mult(js).sub(t.right_mult(js));
    stacked = first ? cond : Matrix::vstack(stacked, cond);
    first = false;
  }
  return Subspace::from_span(kernel_basis(stacked));
}

Subspace ideal_generated(const Algebra& a, const std::vector<Vec>& gens, IdealSide side) {
  Subspace span = gens.empty() ? Subspace::zero(a.field, a.dim)
                               : Subspace::from_span(a.field, gens);
  // Close under basis multiplication until the dimension stabilises.
  while (true) {
    Subspace next = span;
    for (std::size_t i = 0; i < span.dim(); ++i) {
      Vec v = span.basis_vector(i);
      for (std::size_t b = 0; b < a.dim; ++b) {
        if (side != IdealSide::Left)
          next = next.join(Subspace::from_span(a.field, {a.multiply(v, unit_vec(a.field, a.dim, b))}));
        if (side != IdealSide::Right)
          next = next.join(Subspace::from_span(a.field, {a.multiply(unit_vec(a.field, a.dim, b), v)}));
      }
    }
    if (next.dim() == span.dim()) return next;
    span = next;
  }
}

SubalgebraResult subalgebra_presentation(AlgebraPtr a, const Subspace& basis,
                                         const std::string& name_prefix) {
  const FieldSpec& f = a->field;
  std::size_t d = basis.dim();
  if (!basis.contains(a->unit)) throw InvalidInput("subspace does not contain the unit");
  std::vector<Scalar> structure(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec prod = a->multiply(basis.basis_vector(i), basis.basis_vector(j));
      if (!basis.contains(prod))
        throw InvalidInput("subspace is not closed under multiplication");
      Vec coords = basis.coordinates(prod);
      for (std::size_t k = 0; k < d; ++k) structure[(i * d + j) * d + k] = coords[k];
    }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) names.push_back(name_prefix + std::to_string(i));
  AlgebraPtr sub = make_algebra(f, std::move(names), std::move(structure),
                                basis.coordinates(a->unit));
  Matrix incl(f, a->dim, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec bv = basis.basis_vector(i);
    for (std::size_t r = 0; r < a->dim; ++r) incl.at(r, i) = bv[r];
  }
  return SubalgebraResult{sub, incl};
}

QuotientAlgebraResult quotient_algebra(AlgebraPtr a, const Subspace& ideal) {
  const FieldSpec& f = a->field;
  // Sanity: two-sided invariance.
  for (std::size_t i = 0; i < ideal.dim(); ++i) {
    Vec v = ideal.basis_vector(i);
    for (std::size_t b = 0; b < a->dim; ++b) {
      if (!ideal.contains(a->multiply(v, unit_vec(f, a->dim, b))) ||
          !ideal.contains(a->multiply(unit_vec(f, a->dim, b), v)))
        throw InvalidInput("subspace is not a two-sided ideal");
    }
  }
  std::vector<bool> is_pivot(a->dim, false);
  for (std::size_t p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t cidx = 0; cidx < a->dim; ++cidx)
    if (!is_pivot[cidx]) free_cols.push_back(cidx);
  std::size_t q = free_cols.size();

  // proj(v) = free coordinates of v reduced modulo the ideal.
  Matrix proj(f, q, a->dim);
  for (std::size_t cidx = 0; cidx < a->dim; ++cidx) {
    Vec reduced = ideal.reduce(unit_vec(f, a->dim, cidx));
    for (std::size_t r = 0; r < q; ++r) proj.at(r, cidx) = reduced[free_cols[r]];
  }
  Matrix section(f, a->dim, q);
  for (std::size_t r = 0; r < q; ++r) section.at(free_cols[r], r) = f.one();

  std::vector<Scalar> structure(q * q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      Vec prod = proj.apply(a->multiply(section.col(i), section.col(j)));
      for (std::size_t k = 0; k < q; ++k) structure[(i * q + j) * q + k] = prod[k];
    }
  std::vector<std::string> names;
  for (std::size_t r = 0; r < q; ++r) names.push_back(a->basis_names[free_cols[r]] + "~");
  AlgebraPtr quot = make_algebra(f, std::move(names), std::move(structure), proj.apply(a->unit));
  return QuotientAlgebraResult{quot, proj, section};
}

}  // namespace froblab
