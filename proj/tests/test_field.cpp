#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "froblab/field.hpp"
#include "helpers.hpp"

using namespace froblab;
using froblab::testing::random_scalar;

TEST_CASE("prime field construction rejects composites") {
  CHECK_THROWS_AS(FieldSpec::prime(4), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(1), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(0), FieldError);
  CHECK_NOTHROW(FieldSpec::prime(2));
  CHECK_NOTHROW(FieldSpec::prime(7919));
}

TEST_CASE("strict scalar parsing") {
  FieldSpec q = FieldSpec::rationals();
  CHECK(q.parse("3") == q.from_int(3));
  CHECK(q.parse("-2/7") == q.canonical(BigInt(-2), BigInt(7)));
  CHECK(q.parse("0") == q.zero());
  CHECK_THROWS_AS(q.parse("2/4"), ScalarFormatError);   // not reduced
  CHECK_THROWS_AS(q.parse("3/1"), ScalarFormatError);   // canonical form drops /1
  CHECK_THROWS_AS(q.parse("1/-2"), ScalarFormatError);  // sign lives in the numerator
  CHECK_THROWS_AS(q.parse("07"), ScalarFormatError);
  CHECK_THROWS_AS(q.parse("-0"), ScalarFormatError);
  CHECK_THROWS_AS(q.parse("1/0"), ScalarFormatError);
  CHECK_THROWS_AS(q.parse("1.5"), ScalarFormatError);
  CHECK_THROWS_AS(q.parse(""), ScalarFormatError);

  FieldSpec f5 = FieldSpec::prime(5);
  CHECK(f5.parse("4") == f5.from_int(4));
  CHECK_THROWS_AS(f5.parse("5"), ScalarFormatError);   // out of range
  CHECK_THROWS_AS(f5.parse("-1"), ScalarFormatError);  // residues are non-negative
  CHECK_THROWS_AS(f5.parse("1/2"), ScalarFormatError);
}

TEST_CASE("parse/print round trip") {
  FieldSpec q = FieldSpec::rationals();
  for (const char* text : {"0", "1", "-1", "22/7", "-22/7", "123456789123456789"}) {
    CHECK(q.to_string(q.parse(text)) == text);
  }
  FieldSpec f7 = FieldSpec::prime(7);
  for (const char* text : {"0", "3", "6"}) CHECK(f7.to_string(f7.parse(text)) == text);
}

static void check_field_axioms(const FieldSpec& f, const std::vector<Scalar>& sample) {
  for (const Scalar& a : sample)
    for (const Scalar& b : sample) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      for (const Scalar& c : sample) {
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
      CHECK(f.sub(f.add(a, b), b) == a);
      if (!f.is_zero(b)) CHECK(f.mul(f.div(a, b), b) == a);
    }
  for (const Scalar& a : sample) {
    CHECK(f.add(a, f.zero()) == a);
    CHECK(f.mul(a, f.one()) == a);
    CHECK(f.is_zero(f.add(a, f.neg(a))));
    if (!f.is_zero(a)) CHECK(f.is_one(f.mul(a, f.inv(a))));
  }
}

TEST_CASE("field axioms hold exhaustively for small primes") {
  for (long p : {2L, 3L, 5L, 7L}) {
    FieldSpec f = FieldSpec::prime(p);
    check_field_axioms(f, all_field_elements(f));
  }
}

TEST_CASE("field axioms hold on random rationals") {
  FieldSpec q = FieldSpec::rationals();
  std::mt19937 rng(20240811);
  std::vector<Scalar> sample;
  for (int i = 0; i < 12; ++i) sample.push_back(random_scalar(q, rng));
  check_field_axioms(q, sample);
}

TEST_CASE("arithmetic keeps scalars canonical") {
  FieldSpec q = FieldSpec::rationals();
  std::mt19937 rng(91);
  for (int i = 0; i < 200; ++i) {
    Scalar a = random_scalar(q, rng), b = random_scalar(q, rng);
    CHECK(q.is_canonical(q.add(a, b)));
    CHECK(q.is_canonical(q.mul(a, b)));
    CHECK(q.is_canonical(q.sub(a, b)));
    if (!q.is_zero(b)) CHECK(q.is_canonical(q.div(a, b)));
  }
  FieldSpec f3 = FieldSpec::prime(3);
  for (const Scalar& a : all_field_elements(f3))
    for (const Scalar& b : all_field_elements(f3)) {
      CHECK(f3.is_canonical(f3.add(a, b)));
      CHECK(f3.is_canonical(f3.mul(a, b)));
    }
}

TEST_CASE("modular inverse agrees with exhaustive search") {
  FieldSpec f = FieldSpec::prime(11);
  for (long a = 1; a < 11; ++a) {
    Scalar inv = f.inv(f.from_int(a));
    // independent oracle: scan for the inverse
    long found = -1;
    for (long b = 1; b < 11; ++b)
      if ((a * b) % 11 == 1) found = b;
    CHECK(inv == f.from_int(found));
  }
}

TEST_CASE("no silent mixing of denominators into prime fields") {
  FieldSpec f5 = FieldSpec::prime(5);
  // canonical() may clear denominators via modular inverse: 1/2 = 3 mod 5
  CHECK(f5.canonical(BigInt(1), BigInt(2)) == f5.from_int(3));
  CHECK_THROWS_AS(f5.canonical(BigInt(1), BigInt(5)), FieldError);
}
