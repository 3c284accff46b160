#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "froblab/frobenius.hpp"
#include "helpers.hpp"
#include "helpers_frobenius.hpp"

using namespace froblab;
using namespace froblab::testing;

namespace {

const CheckResult* find_check(const Report& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("identity and twisted contexts verify") {
  FieldSpec f2 = FieldSpec::prime(2);
  FieldSpec f3 = FieldSpec::prime(3);
  FieldSpec q = FieldSpec::rationals();

  for (AlgebraPtr a : {product_field(f3), mat2(f2), group_algebra_c2(q)}) {
    MoritaContext ctx = identity_context(a);
    CHECK(is_identity_context(ctx));
    Report rep = verify_morita_context(ctx);
    CAPTURE(rep.summary());
    CHECK(rep.ok());
  }

  MoritaContext twisted = swap_context(f2);
  CHECK_FALSE(is_identity_context(twisted));
  Report rep = verify_morita_context(twisted);
  CAPTURE(rep.summary());
  CHECK(rep.ok());
}

TEST_CASE("a rescaled pairing breaks associativity but not linearity") {
  FieldSpec f3 = FieldSpec::prime(3);
  MoritaContext ctx = identity_context(product_field(f3));
  ctx.f = ctx.f.scaled(f3.from_int(2));
  Report rep = verify_morita_context(ctx);
  CHECK_FALSE(rep.ok());
  const CheckResult* bim = find_check(rep, "pairings-bimodule");
  REQUIRE(bim != nullptr);
  CHECK(bim->pass);
  const CheckResult* bij = find_check(rep, "pairings-bijective");
  REQUIRE(bij != nullptr);
  CHECK(bij->pass);
  const CheckResult* afg = find_check(rep, "assoc-fg");
  REQUIRE(afg != nullptr);
  CHECK_FALSE(afg->pass);
  const CheckResult* unit = find_check(rep, "finv-unit");
  REQUIRE(unit != nullptr);
  CHECK_FALSE(unit->pass);
}

TEST_CASE("a broken bimodule stops context verification early") {
  FieldSpec f2 = FieldSpec::prime(2);
  MoritaContext ctx = identity_context(product_field(f2));
  ctx.I.left_actions[1] = Matrix::identity(f2, 2);  // no longer an action
  Report rep = verify_morita_context(ctx);
  CHECK_FALSE(rep.ok());
  CHECK(find_check(rep, "assoc-fg") == nullptr);
}

TEST_CASE("classical systems verify") {
  FieldSpec f2 = FieldSpec::prime(2);
  FieldSpec f3 = FieldSpec::prime(3);
  FieldSpec q = FieldSpec::rationals();

  for (const FieldSpec& f : {f2, f3, q}) {
    Report rep = verify_frobenius(kc2_system(f));
    CAPTURE(rep.summary());
    CHECK(rep.ok());
  }
  for (const FieldSpec& f : {f2, f3}) {
    Report rep = verify_frobenius(m2_system(f));
    CAPTURE(rep.summary());
    CHECK(rep.ok());
  }
  for (AlgebraPtr a : {group_algebra_c2(q), product_field(f2)}) {
    Report rep = verify_frobenius(trivial_system(a));
    CAPTURE(rep.summary());
    CHECK(rep.ok());
  }
}

TEST_CASE("tampered spreads fail the expected identity") {
  FieldSpec f3 = FieldSpec::prime(3);

  SUBCASE("dropping 1 (x) 1 breaks the unit contraction") {
    ARing ring = kc2_aring(f3);
    FrobeniusSystem sys =
        classical_system(ring, ivec(f3, {0, 0, 0, 1}), imat(f3, {{1, 0}}), imat(f3, {{1, 1}}));
    Report rep = verify_frobenius(sys);
    CHECK_FALSE(rep.ok());
    const CheckResult* cu = find_check(rep, "contract-unit");
    REQUIRE(cu != nullptr);
    CHECK_FALSE(cu->pass);
  }

  SUBCASE("dropping g (x) g keeps the contraction but breaks centrality") {
    ARing ring = kc2_aring(f3);
    FrobeniusSystem sys =
        classical_system(ring, ivec(f3, {1, 0, 0, 0}), imat(f3, {{1, 0}}), imat(f3, {{1, 1}}));
    Report rep = verify_frobenius(sys);
    CHECK_FALSE(rep.ok());
    const CheckResult* cu = find_check(rep, "contract-unit");
    REQUIRE(cu != nullptr);
    CHECK(cu->pass);
    const CheckResult* cent = find_check(rep, "e-central");
    REQUIRE(cent != nullptr);
    CHECK_FALSE(cent->pass);
    CHECK(cent->counterexamples.front() == "g");
  }
}

TEST_CASE("shape violations throw") {
  FieldSpec f3 = FieldSpec::prime(3);
  ARing ring = kc2_aring(f3);
  MoritaContext ctx = identity_context(ring.A);

  CHECK_THROWS_AS(
      make_frobenius_system(ring, ctx, ivec(f3, {1, 0, 0}), imat(f3, {{1, 0}}), std::nullopt),
      InvalidInput);
  MoritaContext wrong = identity_context(product_field(f3));
  CHECK_THROWS_AS(
      make_frobenius_system(ring, wrong, ivec(f3, {1, 0}), imat(f3, {{1, 0}}), std::nullopt),
      InvalidInput);
  CHECK_THROWS_AS(classical_system(ring, ivec(f3, {1, 0}), imat(f3, {{1, 0}}), std::nullopt),
                  InvalidInput);
}

TEST_CASE("tensor workspace dimensions and representative collapse") {
  FieldSpec f3 = FieldSpec::prime(3);
  FieldSpec q = FieldSpec::rationals();

  FrobeniusSystem over_field = kc2_system(f3);
  FrobeniusWorkspace ws = frobenius_workspace(over_field.ring, over_field.ctx, over_field.nu);
  CHECK(ws.ri.total.dim == 2);
  CHECK(ws.rir.total.dim == 4);

  FrobeniusSystem over_self = trivial_system(group_algebra_c2(q));
  FrobeniusWorkspace ws2 = frobenius_workspace(over_self.ring, over_self.ctx, over_self.nu);
  CHECK(ws2.ri.total.dim == 2);
  CHECK(ws2.rir.total.dim == 2);

  // g (x) 1 (x) 1, 1 (x) g (x) 1 and 1 (x) 1 (x) g are the same class.
  Vec a = vec_zero(8), b = vec_zero(8), c = vec_zero(8);
  a[4] = q.one();
  b[2] = q.one();
  c[1] = q.one();
  Vec qa = descend_triple(ws2, a);
  CHECK(qa == descend_triple(ws2, b));
  CHECK(qa == descend_triple(ws2, c));
  CHECK_FALSE(vec_is_zero(qa));
}

TEST_CASE("alpha, beta and the trace on the group algebra") {
  FieldSpec f2 = FieldSpec::prime(2);
  FieldSpec f3 = FieldSpec::prime(3);
  FieldSpec q = FieldSpec::rationals();

  SUBCASE("exact matrices over F_3") {
    FrobeniusSystem sys = kc2_system(f3);
    TraceData td = make_trace_data(sys);
    CAPTURE(td.report.summary());
    CHECK(td.report.ok());
    CHECK(td.alpha == imat(f3, {{1}, {1}}));
    CHECK(td.beta == imat(f3, {{1, 0}}));
    CHECK(td.trace == imat(f3, {{2}}));

    auto w = trace_one_witness(sys);
    REQUIRE(w.has_value());
    CHECK(*w == ivec(f3, {2}));

    InvariantsBundle inv = invariants(sys.character_ring());
    CHECK(inv.Q.contains(frobenius_alpha(sys, ivec(f3, {1}))));
    CHECK(sys.chi->apply(frobenius_alpha(sys, *w)) == sys.ring.A->unit);
    CHECK(projectivity_witness(sys.character_ring()).has_value());
  }

  SUBCASE("the mod-2 trace vanishes") {
    FrobeniusSystem sys = kc2_system(f2);
    TraceData td = make_trace_data(sys);
    CHECK(td.report.ok());
    CHECK(td.trace == Matrix(f2, 1, 1));
    CHECK(trace_one_witness(sys) == std::nullopt);
    CHECK(projectivity_witness(sys.character_ring()) == std::nullopt);
  }

  SUBCASE("over the rationals the witness is one half") {
    FrobeniusSystem sys = kc2_system(q);
    auto w = trace_one_witness(sys);
    REQUIRE(w.has_value());
    CHECK((*w)[0] == q.canonical(BigInt(1), BigInt(2)));
  }

  SUBCASE("beta is restricted to Q") {
    FrobeniusSystem sys = kc2_system(f3);
    CHECK(frobenius_beta(sys, ivec(f3, {1, 1})) == ivec(f3, {1}));
    CHECK(frobenius_beta(sys, ivec(f3, {2, 2})) == ivec(f3, {2}));
    CHECK_THROWS_AS(frobenius_beta(sys, ivec(f3, {1, 0})), InvalidInput);
  }

  SUBCASE("trivial system: everything is the identity") {
    FrobeniusSystem sys = trivial_system(group_algebra_c2(q));
    TraceData td = make_trace_data(sys);
    CHECK(td.report.ok());
    CHECK(td.alpha == Matrix::identity(q, 2));
    CHECK(td.beta == Matrix::identity(q, 2));
    CHECK(td.trace == Matrix::identity(q, 2));
    auto w = trace_one_witness(sys);
    REQUIRE(w.has_value());
    CHECK(*w == sys.ring.A->unit);
  }
}

TEST_CASE("systems without a character refuse trace operations") {
  FieldSpec f2 = FieldSpec::prime(2);
  FrobeniusSystem sys = m2_system(f2);
  CHECK_THROWS_AS(make_trace_data(sys), InvalidInput);
  CHECK_THROWS_AS(frobenius_trace(sys, ivec(f2, {1})), InvalidInput);
  CHECK_THROWS_AS(trace_one_witness(sys), InvalidInput);
  CHECK_THROWS_AS(sys.character_ring(), InvalidInput);
}

TEST_CASE("the transported left action matches the expanded formula") {
  FieldSpec f3 = FieldSpec::prime(3);
  FieldSpec q = FieldSpec::rationals();
  std::mt19937 rng(11);

  SUBCASE("group algebra: r acts through the augmentation") {
    FrobeniusSystem sys = kc2_system(f3);
    for (int trial = 0; trial < 20; ++trial) {
      Vec r = random_vec(f3, 2, rng);
      Vec v = random_vec(f3, 1, rng);
      Vec transported = j_left_action(sys, r, v);
      CHECK(transported == j_left_action_printed(sys, r, v));
      Scalar eps = f3.add(r[0], r[1]);
      CHECK(transported == vec_scale(f3, eps, v));
    }
    // Associativity of the transported action.
    for (int trial = 0; trial < 10; ++trial) {
      Vec r = random_vec(f3, 2, rng);
      Vec s = random_vec(f3, 2, rng);
      Vec v = random_vec(f3, 1, rng);
      Vec lhs = j_left_action(sys, sys.ring.R->multiply(r, s), v);
      Vec rhs = j_left_action(sys, r, j_left_action(sys, s, v));
      CHECK(lhs == rhs);
    }
  }

  SUBCASE("trivial system: the action is plain multiplication") {
    FrobeniusSystem sys = trivial_system(group_algebra_c2(q));
    for (int trial = 0; trial < 10; ++trial) {
      Vec r = random_vec(q, 2, rng);
      Vec v = random_vec(q, 2, rng);
      CHECK(j_left_action(sys, r, v) == sys.ring.R->multiply(r, v));
      CHECK(j_left_action_printed(sys, r, v) == sys.ring.R->multiply(r, v));
    }
  }
}

TEST_CASE("the identity-context shortcut agrees with the general trace") {
  FieldSpec f3 = FieldSpec::prime(3);
  FieldSpec q = FieldSpec::rationals();

  FrobeniusSystem sys = kc2_system(f3);
  TraceData td = make_trace_data(sys);
  CHECK(classical_trace(sys, ivec(f3, {1})) == td.trace.apply(ivec(f3, {1})));

  FrobeniusSystem triv = trivial_system(group_algebra_c2(q));
  TraceData td2 = make_trace_data(triv);
  for (std::size_t j = 0; j < 2; ++j) {
    Vec basis = unit_vec(q, 2, j);
    CHECK(classical_trace(triv, basis) == td2.trace.apply(basis));
  }
}
