#include "froblab/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace froblab {

namespace {

bool is_prime_long(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Digits-only check with no leading zero (except the single digit "0").
bool plain_number(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  if (s.size() > 1 && s[0] == '0') return false;
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(long p) {
  if (!is_prime_long(p)) throw FieldError("field modulus " + std::to_string(p) + " is not prime");
  FieldSpec f;
  f.kind = FieldKind::Prime;
  f.p = p;
  return f;
}

FieldSpec FieldSpec::rationals() { return FieldSpec{}; }

Scalar FieldSpec::canonical(const BigInt& num, const BigInt& den) const {
  if (den == 0) throw FieldError("zero denominator");
  if (kind == FieldKind::Prime) {
    BigInt n = num % p;
    if (n < 0) n += p;
    BigInt d = den % p;
    if (d < 0) d += p;
    if (d == 0) throw FieldError("denominator divisible by the modulus");
    if (d != 1) {
      // Clear the denominator with a modular inverse.
      Scalar dd(d, BigInt(1));
      return mul(Scalar(n, BigInt(1)), inv(dd));
    }
    return Scalar(n, BigInt(1));
  }
  BigInt n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  BigInt g = boost::multiprecision::gcd(n < 0 ? BigInt(-n) : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  return Scalar(std::move(n), std::move(d));
}

bool FieldSpec::is_canonical(const Scalar& a) const {
  if (kind == FieldKind::Prime) return a.den == 1 && a.num >= 0 && a.num < p;
  if (a.den <= 0) return false;
  if (a.num == 0) return a.den == 1;
  BigInt g = boost::multiprecision::gcd(a.num < 0 ? BigInt(-a.num) : a.num, a.den);
  return g == 1;
}

Scalar FieldSpec::from_int(long v) const { return canonical(BigInt(v), BigInt(1)); }

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
  if (kind == FieldKind::Prime) {
    BigInt n = a.num + b.num;
    if (n >= p) n -= p;
    return Scalar(std::move(n), BigInt(1));
  }
  return canonical(a.num * b.den + b.num * a.den, a.den * b.den);
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
  if (kind == FieldKind::Prime) {
    BigInt n = a.num - b.num;
    if (n < 0) n += p;
    return Scalar(std::move(n), BigInt(1));
  }
  return canonical(a.num * b.den - b.num * a.den, a.den * b.den);
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
  if (kind == FieldKind::Prime) return Scalar((a.num * b.num) % p, BigInt(1));
  return canonical(a.num * b.num, a.den * b.den);
}

Scalar FieldSpec::neg(const Scalar& a) const {
  if (kind == FieldKind::Prime) {
    if (a.num == 0) return a;
    return Scalar(p - a.num, BigInt(1));
  }
  return Scalar(-a.num, a.den);
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (is_zero(a)) throw FieldError("inverse of zero");
  if (kind == FieldKind::Prime) {
    // Extended Euclid on (num, p); p is prime so the gcd is 1.
    BigInt r0 = a.num, r1 = BigInt(p), s0 = 1, s1 = 0;
    while (r1 != 0) {
      BigInt q = r0 / r1;
      BigInt r2 = r0 - q * r1;
      r0 = r1;
      r1 = r2;
      BigInt s2 = s0 - q * s1;
      s0 = s1;
      s1 = s2;
    }
    return canonical(s0, BigInt(1));
  }
  return canonical(a.den, a.num);
}

Scalar FieldSpec::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar FieldSpec::parse(const std::string& text) const {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && body[0] == '-') {
    negative = true;
    body = body.substr(1);
  }
  auto slash = body.find('/');
  if (kind == FieldKind::Prime) {
    if (negative || slash != std::string::npos || !plain_number(body))
      throw ScalarFormatError("expected a residue in [0, " + std::to_string(p) + "), got \"" + text + "\"");
    Scalar v(BigInt(body), BigInt(1));
    if (v.num >= p) throw ScalarFormatError("residue " + text + " out of range for p=" + std::to_string(p));
    return v;
  }
  std::string num_part = body.substr(0, slash);
  if (!plain_number(num_part)) throw ScalarFormatError("malformed numerator in \"" + text + "\"");
  BigInt n(num_part);
  BigInt d(1);
  if (slash != std::string::npos) {
    std::string den_part = body.substr(slash + 1);
    if (!plain_number(den_part)) throw ScalarFormatError("malformed denominator in \"" + text + "\"");
    d = BigInt(den_part);
    if (d == 0) throw ScalarFormatError("zero denominator in \"" + text + "\"");
    if (d == 1) throw ScalarFormatError("denominator 1 must be written without the slash: \"" + text + "\"");
  }
  if (negative) n = -n;
  if (negative && n == 0) throw ScalarFormatError("negative zero is not canonical");
  Scalar v(std::move(n), std::move(d));
  if (!is_canonical(v)) throw ScalarFormatError("fraction \"" + text + "\" is not reduced");
  return v;
}

std::string FieldSpec::to_string(const Scalar& a) const {
  std::string s = a.num.str();
  if (a.den != 1) s += "/" + a.den.str();
  return s;
}

std::string FieldSpec::describe() const {
  if (kind == FieldKind::Prime) return "F_" + std::to_string(p);
  return "Q";
}

std::vector<Scalar> all_field_elements(const FieldSpec& f) {
  if (f.kind != FieldKind::Prime) throw FieldError("cannot enumerate an infinite field");
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(f.p));
  for (long v = 0; v < f.p; ++v) out.push_back(f.from_int(v));
  return out;
}

}  // namespace froblab
