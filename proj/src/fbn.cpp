#include "froblab/fbn.hpp"

#include <cstdlib>

#include "froblab/character.hpp"

namespace froblab {
namespace {

/// Span of all pairwise products; for two-sided ideals this is the product
/// ideal IJ.
Subspace ideal_product(const Algebra& a, const Subspace& i, const Subspace& j) {
  std::vector<Vec> products;
  for (std::size_t r = 0; r < i.dim(); ++r)
    for (std::size_t c = 0; c < j.dim(); ++c)
      products.push_back(a.multiply(i.basis_vector(r), j.basis_vector(c)));
  if (products.empty()) return Subspace::zero(a.field, a.dim);
  return Subspace::from_span(a.field, products);
}

bool right_invariant(const Algebra& a, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t b = 0; b < a.dim; ++b)
      if (!s.contains(a.multiply(s.basis_vector(i), unit_vec(a.field, a.dim, b)))) return false;
  return true;
}

bool left_invariant(const Algebra& a, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t b = 0; b < a.dim; ++b)
      if (!s.contains(a.multiply(unit_vec(a.field, a.dim, b), s.basis_vector(i)))) return false;
  return true;
}

/// First nonzero submodule of m admitting no nonzero map from p, if any.
std::optional<Subspace> first_unfaithful(const RightModule& p, const RightModule& m) {
  const FieldSpec& f = m.algebra->field;
  std::vector<Matrix> homs = hom_space(p, m);
  for (const Subspace& s : submodules(m)) {
    if (s.dim() == 0) continue;
    // Hom(P, M') is the space of hom-coordinate vectors whose combined map
    // sends every generator of P into M'.
    Matrix constraints(f, 0, homs.size());
    for (std::size_t j = 0; j < p.dim; ++j) {
      Matrix block(f, m.dim, homs.size());
      for (std::size_t k = 0; k < homs.size(); ++k) {
        Vec residue = s.reduce(homs[k].col(j));
        for (std::size_t r = 0; r < m.dim; ++r) block.at(r, k) = residue[r];
      }
      constraints = Matrix::vstack(constraints, block);
    }
    if (kernel_basis(constraints).rows() == 0) return s;
  }
  return std::nullopt;
}

}  // namespace

std::size_t ideal_lattice_cap(const FieldSpec& field) {
  if (const char* env = std::getenv("FROBLAB_MAX_ENUM_DIM")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  if (field.kind != FieldKind::Prime) return 0;
  if (field.p == 2) return 6;
  if (field.p == 3) return 4;
  return 3;
}

FiniteRingView finite_ring_view(AlgebraPtr a) {
  if (!a) throw InvalidInput("finite ring view needs an algebra");
  if (a->field.kind != FieldKind::Prime)
    throw InvalidInput("ideal-lattice enumeration needs a finite field; " + a->field.describe() +
                       " is infinite");
  std::size_t cap = ideal_lattice_cap(a->field);
  if (a->dim > cap)
    throw EnumerationLimit("ideal-lattice enumeration over " + a->field.describe() +
                           " capped at dimension " + std::to_string(cap) +
                           ", algebra has dimension " + std::to_string(a->dim) +
                           " (override with FROBLAB_MAX_ENUM_DIM)");
  return FiniteRingView{std::move(a)};
}

std::vector<Subspace> right_ideals(const FiniteRingView& r) {
  return submodules(regular_right_module(r.algebra));
}

std::vector<Subspace> two_sided_ideals(const FiniteRingView& r) {
  std::vector<Subspace> out;
  for (auto& s : right_ideals(r))
    if (left_invariant(*r.algebra, s)) out.push_back(std::move(s));
  return out;
}

std::vector<Subspace> prime_ideals(const FiniteRingView& r) {
  std::vector<Subspace> ideals = two_sided_ideals(r);
  std::vector<Subspace> out;
  for (const Subspace& p : ideals) {
    if (p.dim() == r.algebra->dim) continue;
    bool prime = true;
    for (const Subspace& i : ideals) {
      if (!prime) break;
      for (const Subspace& j : ideals) {
        if (!p.contains(ideal_product(*r.algebra, i, j))) continue;
        if (!p.contains(i) && !p.contains(j)) {
          prime = false;
          break;
        }
      }
    }
    if (prime) out.push_back(p);
  }
  return out;
}

bool is_essential(const FiniteRingView& r, const Subspace& ideal) {
  if (ideal.ambient() != r.algebra->dim || !right_invariant(*r.algebra, ideal))
    throw InvalidInput("essentiality is only defined for right ideals");
  for (const Subspace& k : right_ideals(r)) {
    if (k.dim() == 0) continue;
    if (ideal.meet(k).dim() == 0) return false;
  }
  return true;
}

FbnReport is_right_fbn(const FiniteRingView& r) {
  FbnReport rep;
  for (const Subspace& p : prime_ideals(r)) {
    PrimeVerdict verdict{p, true, std::nullopt};
    QuotientAlgebraResult q = quotient_algebra(r.algebra, p);
    FiniteRingView qview = finite_ring_view(q.algebra);
    std::vector<Subspace> rights = right_ideals(qview);
    std::vector<Subspace> two_sided = two_sided_ideals(qview);
    for (const Subspace& e : rights) {
      bool essential = true;
      for (const Subspace& k : rights) {
        if (k.dim() == 0) continue;
        if (e.meet(k).dim() == 0) {
          essential = false;
          break;
        }
      }
      if (!essential) continue;
      bool contains_two_sided = false;
      for (const Subspace& t : two_sided) {
        if (t.dim() > 0 && e.contains(t)) {
          contains_two_sided = true;
          break;
        }
      }
      if (!contains_two_sided) {
        verdict.bounded = false;
        verdict.failing_essential = e;
        rep.fully_bounded = false;
        break;
      }
    }
    rep.verdicts.push_back(std::move(verdict));
  }
  return rep;
}

std::vector<Vec> annihilator_witness(const RightModule& m) {
  const FieldSpec& f = m.algebra->field;
  Subspace target = annihilator(m, {});
  Subspace current = Subspace::full(f, m.algebra->dim);
  std::vector<Vec> witness;
  for (std::size_t i = 0; i < m.dim && current != target; ++i) {
    Vec v = unit_vec(f, m.dim, i);
    Subspace next = current.meet(annihilator(m, {v}));
    if (next != current) {
      witness.push_back(v);
      current = std::move(next);
    }
  }
  return witness;
}

Subspace hom_annihilator(const RightModule& p, const std::vector<Matrix>& maps) {
  const FieldSpec& f = p.algebra->field;
  if (maps.empty()) return Subspace::full(f, p.dim);
  Matrix stacked = maps.front();
  for (std::size_t k = 1; k < maps.size(); ++k) stacked = Matrix::vstack(stacked, maps[k]);
  return Subspace::from_span(kernel_basis(stacked));
}

std::vector<Matrix> hom_witness(const RightModule& p, const RightModule& m) {
  std::vector<Matrix> homs = hom_space(p, m);
  Subspace target = hom_annihilator(p, homs);
  Subspace current = Subspace::full(p.algebra->field, p.dim);
  std::vector<Matrix> witness;
  for (std::size_t k = 0; k < homs.size() && current != target; ++k) {
    Subspace next = current.meet(hom_annihilator(p, {homs[k]}));
    if (next != current) {
      witness.push_back(homs[k]);
      current = std::move(next);
    }
  }
  return witness;
}

bool is_module_faithful(const RightModule& p, const RightModule& m) {
  return !first_unfaithful(p, m).has_value();
}

bool is_finitely_generated_by(const RightModule& p, const RightModule& m) {
  const FieldSpec& f = m.algebra->field;
  Subspace image = Subspace::zero(f, m.dim);
  for (const Matrix& t : hom_space(p, m)) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < t.cols(); ++j) cols.push_back(t.col(j));
    image = image.join(Subspace::from_span(f, cols));
  }
  return image.dim() == m.dim;
}

Report faithfulness_predicates(const RightModule& p, const RightModule& m, const RightModule& q) {
  Report rep;
  auto& faithful = rep.start("p-faithful", "Hom(P, M') != 0 for every nonzero submodule M' of M");
  if (auto bad = first_unfaithful(p, m)) record(faithful, false, bad->to_string());

  auto& generated = rep.start("q-generated", "images of Hom(Q, M) span M");
  record(generated, is_finitely_generated_by(q, m), "image span");
  return rep;
}

TransferConditions fbn_transfer_report(const ARingWithCharacter& rc, const FrobeniusSystem* sys) {
  TransferConditions out;
  out.a_fbn = is_right_fbn(finite_ring_view(rc.ring.A));
  out.r_fbn = is_right_fbn(finite_ring_view(rc.ring.R));

  InvariantsBundle inv = invariants(rc);
  SubalgebraResult sub = subalgebra_presentation(rc.ring.A, inv.B, "b");
  out.b = sub.algebra;
  out.b_fbn = is_right_fbn(finite_ring_view(sub.algebra));

  out.quasi_projective = is_quasi_projective(rc).quasi_projective;
  if (sys != nullptr) {
    out.frobenius_hypothesis = verify_frobenius(*sys).ok();
    if (out.frobenius_hypothesis && sys->chi.has_value())
      out.projective_witness = trace_one_witness(*sys);
    else
      out.projective_witness = projectivity_witness(rc);
  } else {
    out.projective_witness = projectivity_witness(rc);
  }

  auto& a_check = out.report.start("a-fbn", "A is right fully bounded");
  record(a_check, out.a_fbn.fbn(), "A");
  auto& r_check = out.report.start("r-fbn", "R is right fully bounded");
  record(r_check, out.r_fbn.fbn(), "R");
  auto& b_check = out.report.start("b-fbn", "B is right fully bounded");
  record(b_check, out.b_fbn.fbn(), "B");

  auto& equiv = out.report.start("equivalence", "all three transfer conditions hold together");
  record(equiv, out.condition1(), "condition 1");
  record(equiv, out.condition2(), "condition 2");
  record(equiv, out.condition3(), "condition 3");
  return out;
}

}  // namespace froblab
