#include "froblab/subspace.hpp"

#include <sstream>

namespace froblab {

Subspace Subspace::zero(const FieldSpec& field, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(field, 0, ambient);
  return s;
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient) {
  return from_span(Matrix::identity(field, ambient));
}

Subspace Subspace::from_span(const Matrix& rows) {
  Subspace s;
  s.ambient_ = rows.cols();
  RrefResult r = rref(rows);
  s.basis_ = Matrix(rows.field(), r.rank, rows.cols());
  for (std::size_t i = 0; i < r.rank; ++i) s.basis_.set_row(i, r.reduced.row(i));
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::from_span(const FieldSpec& field, const std::vector<Vec>& vectors) {
  if (vectors.empty()) throw FieldError("from_span with no vectors needs an explicit ambient; use zero()");
  return from_span(Matrix::from_rows(field, vectors));
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw FieldError("ambient mismatch in subspace reduce");
  const FieldSpec& f = basis_.field();
  Vec w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const Scalar& c = w[pivots_[i]];
    if (f.is_zero(c)) continue;
    Scalar factor = c;
    for (std::size_t j = 0; j < ambient_; ++j) w[j] = f.sub(w[j], f.mul(factor, basis_.at(i, j)));
  }
  return w;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw FieldError("vector outside subspace in coordinates()");
  Vec coords(dim());
  for (std::size_t i = 0; i < dim(); ++i) coords[i] = v[pivots_[i]];
  return coords;
}

Subspace Subspace::meet(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw FieldError("ambient mismatch in meet");
  const FieldSpec& f = basis_.field();
  // Solve U^T a = V^T b: kernel of [U^T |-V^T] gives all common vectors.
  std::size_t du = dim(), dv = other.dim();
  if (du == 0 || dv == 0) return Subspace::zero(f, ambient_);
  Matrix m(f, ambient_, du + dv);
  for (std::size_t r = 0; r < ambient_; ++r) {
    for (std::size_t i = 0; i < du; ++i) m.at(r, i) = basis_.at(i, r);
    for (std::size_t j = 0; j < dv; ++j) m.at(r, du + j) = f.neg(other.basis_.at(j, r));
  }
  Matrix kb = kernel_basis(m);
  std::vector<Vec> gens;
  for (std::size_t k = 0; k < kb.rows(); ++k) {
    Vec combo(ambient_);
    for (std::size_t i = 0; i < du; ++i) {
      const Scalar& c = kb.at(k, i);
      if (f.is_zero(c)) continue;
      for (std::size_t r = 0; r < ambient_; ++r)
        combo[r] = f.add(combo[r], f.mul(c, basis_.at(i, r)));
    }
    gens.push_back(std::move(combo));
  }
  if (gens.empty()) return Subspace::zero(f, ambient_);
  return from_span(f, gens);
}

Subspace Subspace::join(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw FieldError("ambient mismatch in join");
  if (dim() == 0) return other;
  if (other.dim() == 0) return *this;
  return from_span(Matrix::vstack(basis_, other.basis_));
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) os << ", ";
    os << vec_to_string(basis_.field(), basis_vector(i));
  }
  os << "}";
  return os.str();
}

namespace {

// Emit all rref matrices with the given pivot columns by running an odometer
// over the free entries (row-major positions, last position fastest).
void emit_for_pivots(const FieldSpec& f, std::size_t n, const std::vector<std::size_t>& pivots,
                     std::vector<Subspace>& out) {
  std::size_t k = pivots.size();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::pair<std::size_t, std::size_t>> free_pos;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = pivots[i] + 1; c < n; ++c)
      if (!is_pivot[c]) free_pos.emplace_back(i, c);

  std::vector<Scalar> elems = all_field_elements(f);
  std::vector<std::size_t> odo(free_pos.size(), 0);
  while (true) {
    Matrix m(f, k, n);
    for (std::size_t i = 0; i < k; ++i) m.at(i, pivots[i]) = f.one();
    for (std::size_t t = 0; t < free_pos.size(); ++t)
      m.at(free_pos[t].first, free_pos[t].second) = elems[odo[t]];
    Subspace s;
    s = Subspace::from_span(m);  // already rref; from_span just recomputes pivots
    out.push_back(std::move(s));
    // Advance.
    std::size_t t = free_pos.size();
    while (t > 0) {
      --t;
      if (++odo[t] < elems.size()) break;
      odo[t] = 0;
      if (t == 0) return;
    }
    if (free_pos.empty()) return;
  }
}

void pivot_combinations(std::size_t n, std::size_t k, std::size_t start,
                        std::vector<std::size_t>& current,
                        std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (std::size_t c = start; c < n; ++c) {
    current.push_back(c);
    pivot_combinations(n, k, c + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Subspace> all_subspaces(const FieldSpec& field, std::size_t ambient) {
  if (field.kind != FieldKind::Prime) throw FieldError("subspace enumeration requires a finite field");
  std::vector<Subspace> out;
  out.push_back(Subspace::zero(field, ambient));
  for (std::size_t k = 1; k <= ambient; ++k) {
    std::vector<std::vector<std::size_t>> combos;
    std::vector<std::size_t> cur;
    pivot_combinations(ambient, k, 0, cur, combos);
    for (const auto& pv : combos) emit_for_pivots(field, ambient, pv, out);
  }
  return out;
}

BigInt count_subspaces(long p, std::size_t n) {
  BigInt total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < k; ++i) {
      BigInt pn = 1, pk = 1, pi = 1;
      for (std::size_t t = 0; t < n; ++t) pn *= p;
      for (std::size_t t = 0; t < k; ++t) pk *= p;
      for (std::size_t t = 0; t < i; ++t) pi *= p;
      num *= (pn - pi);
      den *= (pk - pi);
    }
    total += num / den;
  }
  return total;
}

}  // namespace froblab
