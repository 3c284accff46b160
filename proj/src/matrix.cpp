#include "froblab/matrix.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

namespace froblab {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, const std::vector<Vec>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw FieldError("ragged rows in matrix literal");
    for (std::size_t c = 0; c < nc; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::row_vector(const FieldSpec& field, const Vec& v) {
  return from_rows(field, {v});
}

Matrix Matrix::column_vector(const FieldSpec& field, const Vec& v) {
  Matrix m(field, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw FieldError("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Matrix Matrix::mul(const Matrix& rhs) const {
  if (field_ != rhs.field_) throw FieldError("field mismatch in matrix product");
  if (cols_ != rhs.rows_) throw FieldError("shape mismatch in matrix product");
  Matrix out(field_, rows_, rhs.cols_);
  // Nonzero columns per rhs row, so sparse factors skip their zero blocks.
  std::vector<std::vector<std::size_t>> nz(cols_);
  for (std::size_t k = 0; k < cols_; ++k)
    for (std::size_t j = 0; j < rhs.cols_; ++j)
      if (!field_.is_zero(rhs.at(k, j))) nz[k].push_back(j);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (field_.is_zero(a)) continue;
      for (std::size_t j : nz[k])
        out.at(i, j) = field_.add(out.at(i, j), field_.mul(a, rhs.at(k, j)));
    }
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw FieldError("shape mismatch in matrix apply");
  std::vector<std::size_t> nzv;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!field_.is_zero(v[j])) nzv.push_back(j);
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc;
    for (std::size_t j : nzv) {
      if (field_.is_zero(at(i, j))) continue;
      acc = field_.add(acc, field_.mul(at(i, j), v[j]));
    }
    out[i] = acc;
  }
  return out;
}

Matrix Matrix::add(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw FieldError("shape mismatch in matrix sum");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::sub(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw FieldError("shape mismatch in matrix difference");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(data_[i], c);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (s.num != 0) return false;
  return true;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw FieldError("row mismatch in hstack");
  Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, a.cols_ + j) = b.at(i, j);
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw FieldError("column mismatch in vstack");
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out.at(a.rows_ + i, j) = b.at(i, j);
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << field_.to_string(at(i, j));
    }
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  return os.str();
}

namespace {

long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return t < 0 ? t + p : t;
}

/// Machine-word elimination over F_p. Mirrors the generic path step for
/// step (same pivot order, same row swaps), so the result is identical;
/// returns nothing when an entry is not a canonical residue.
std::optional<RrefResult> rref_prime(const Matrix& m, long p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<long> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const Scalar& s = m.at(i, j);
      if (s.den != 1 || s.num < 0 || s.num >= p) return std::nullopt;
      a[i * cols + j] = s.num.convert_to<long>();
    }

  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t piv = lead;
    while (piv < rows && a[piv * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != lead)
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols,
                       a.begin() + lead * cols);
    long s = inv_mod(a[lead * cols + col], p);
    for (std::size_t j = 0; j < cols; ++j) a[lead * cols + j] = a[lead * cols + j] * s % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a[r * cols + col] == 0) continue;
      long factor = a[r * cols + col];
      for (std::size_t j = 0; j < cols; ++j) {
        long v = (a[r * cols + j] - factor * a[lead * cols + j]) % p;
        a[r * cols + j] = v < 0 ? v + p : v;
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  rank = pivots.size();

  RrefResult res{Matrix(m.field(), rows, cols), rank, std::move(pivots)};
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (long v = a[i * cols + j]; v != 0) res.reduced.at(i, j) = Scalar(BigInt(v), BigInt(1));
  return res;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  const FieldSpec& f = m.field();
  if (f.kind == FieldKind::Prime && f.p > 0 && f.p <= (1L << 30))
    if (std::optional<RrefResult> fast = rref_prime(m, f.p)) return *std::move(fast);
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    // Find a pivot in this column at or below `lead`.
    std::size_t piv = lead;
    while (piv < a.rows() && f.is_zero(a.at(piv, col))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(lead, j));
    Scalar s = f.inv(a.at(lead, col));
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(lead, j) = f.mul(a.at(lead, j), s);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || f.is_zero(a.at(r, col))) continue;
      Scalar factor = a.at(r, col);
      for (std::size_t j = 0; j < a.cols(); ++j)
        a.at(r, j) = f.sub(a.at(r, j), f.mul(factor, a.at(lead, j)));
    }
    res.pivots.push_back(col);
    ++lead;
  }
  res.rank = res.pivots.size();
  return res;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw FieldError("shape mismatch in solve");
  Matrix aug = Matrix::hstack(m, Matrix::column_vector(m.field(), b));
  RrefResult r = rref(aug);
  // Inconsistent iff some pivot lands in the appended column.
  for (std::size_t piv : r.pivots)
    if (piv == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced.at(i, m.cols());
  return x;
}

Matrix kernel_basis(const Matrix& m) {
  const FieldSpec& f = m.field();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols());
    v[c] = f.one();
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.reduced.at(i, c));
    basis.push_back(std::move(v));
  }
  // Re-reduce for a canonical (rref) basis.
  Matrix kb = Matrix::from_rows(f, basis);
  if (kb.rows() == 0) return Matrix(f, 0, m.cols());
  RrefResult rk = rref(kb);
  Matrix out(f, rk.rank, m.cols());
  for (std::size_t i = 0; i < rk.rank; ++i) out.set_row(i, rk.reduced.row(i));
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  Matrix aug = Matrix::hstack(m, Matrix::identity(m.field(), m.rows()));
  RrefResult r = rref(aug);
  if (r.rank < m.rows()) return std::nullopt;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (r.pivots[i] != i) return std::nullopt;
  Matrix out(m.field(), m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) out.at(i, j) = r.reduced.at(i, m.cols() + j);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldError("field mismatch in kron");
  const FieldSpec& f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& s = a.at(i, j);
      if (f.is_zero(s)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.at(i * b.rows() + k, j * b.cols() + l) = f.mul(s, b.at(k, l));
    }
  return out;
}

Vec kron_vec(const FieldSpec& field, const Vec& v, const Vec& w) {
  Vec out(v.size() * w.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) out[i * w.size() + j] = field.mul(v[i], w[j]);
  return out;
}

Vec vec_zero(std::size_t n) { return Vec(n); }

Vec unit_vec(const FieldSpec& field, std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = field.one();
  return v;
}

Vec vec_add(const FieldSpec& field, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw FieldError("length mismatch in vector sum");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.add(a[i], b[i]);
  return out;
}

Vec vec_sub(const FieldSpec& field, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw FieldError("length mismatch in vector difference");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.sub(a[i], b[i]);
  return out;
}

Vec vec_scale(const FieldSpec& field, const Scalar& c, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = field.mul(c, v[i]);
  return out;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& s : v)
    if (s.num != 0) return false;
  return true;
}

std::string vec_to_string(const FieldSpec& field, const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += field.to_string(v[i]);
  }
  return s + ")";
}

}  // namespace froblab
