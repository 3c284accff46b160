#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace froblab {

using BigInt = boost::multiprecision::cpp_int;

/// Raised on malformed or non-canonical scalar literals ("2/4", "07", "1/-3", ...).
struct ScalarFormatError : std::runtime_error {
  explicit ScalarFormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on operations that are undefined (division by zero, mismatched fields).
struct FieldError : std::runtime_error {
  explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact scalar: a residue (den == 1) or a reduced fraction with den > 0.
/// Values are kept canonical by the FieldSpec operations below; never mutate
/// num/den directly except through those.
struct Scalar {
  BigInt num;
  BigInt den;

  Scalar() : num(0), den(1) {}
  Scalar(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {}

  bool operator==(const Scalar& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
};

using Vec = std::vector<Scalar>;

enum class FieldKind { Prime, Rational };

/// A computable coefficient field: F_p for a prime p, or the rationals.
/// All scalar arithmetic routes through here so that canonical form
/// (residues in [0, p), fractions reduced with positive denominator)
/// is maintained after every operation.
struct FieldSpec {
  FieldKind kind = FieldKind::Rational;
  long p = 0;

  static FieldSpec prime(long p);
  static FieldSpec rationals();

  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return Scalar(BigInt(1), BigInt(1)); }
  Scalar from_int(long v) const;

  bool is_zero(const Scalar& a) const { return a.num == 0; }
  bool is_one(const Scalar& a) const { return a.num == 1 && a.den == 1; }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;

  /// Bring an arbitrary num/den pair into canonical form.
  Scalar canonical(const BigInt& num, const BigInt& den) const;

  /// True iff the value is already in canonical form for this field.
  bool is_canonical(const Scalar& a) const;

  /// Strict parse of the canonical textual form; rejects anything else.
  Scalar parse(const std::string& text) const;
  std::string to_string(const Scalar& a) const;

  std::string describe() const;
};

/// Convenience: all field elements in a fixed order (prime fields only).
std::vector<Scalar> all_field_elements(const FieldSpec& f);

}  // namespace froblab
