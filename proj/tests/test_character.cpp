#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "froblab/character.hpp"
#include "helpers.hpp"
#include "helpers_character.hpp"

using namespace froblab;
using namespace froblab::testing;

namespace {

/// Every coefficient vector of length n, prime fields only. Oracle-side
/// enumeration, deliberately independent of the kernel-based solvers.
std::vector<Vec> all_vectors(const FieldSpec& f, std::size_t n) {
  std::vector<Scalar> elems = all_field_elements(f);
  std::vector<Vec> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = elems[idx[i]];
    out.push_back(v);
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == elems.size()) idx[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

const CheckResult* find_check(const Report& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<ARingWithCharacter> fixture_library() {
  FieldSpec f2 = FieldSpec::prime(2);
  FieldSpec f3 = FieldSpec::prime(3);
  FieldSpec q = FieldSpec::rationals();
  return {
      trivial_rc(mat2(f2)),
      trivial_rc(group_algebra_c2(q)),
      augmentation_rc(f2),
      augmentation_rc(f3),
      augmentation_rc(q),
      ut2_diag_rc(f3),
      ut2_diag_rc_skew(f3),
      ut2_diag_rc_skew(f2),
      ut2_dual_rc(f2),
      ut2_corner_rc(f3, Handedness::Right),
      ut2_corner_rc(f2, Handedness::Left),
  };
}

}  // namespace

TEST_CASE("characters verify across the fixture library, in both orientations") {
  for (const auto& rc : fixture_library()) {
    Report rep = verify_character(rc);
    CAPTURE(rep.summary());
    CHECK(rep.ok());
    Report oprep = verify_character(opposite_view(rc));
    CAPTURE(oprep.summary());
    CHECK(oprep.ok());
  }
}

TEST_CASE("opposite view flips handedness and is an involution") {
  ARingWithCharacter rc = ut2_dual_rc(FieldSpec::prime(2));
  ARingWithCharacter op = opposite_view(rc);
  CHECK(op.handed == Handedness::Left);
  CHECK(op.chi == rc.chi);
  CHECK(op.ring.i.matrix == rc.ring.i.matrix);
  CHECK_FALSE(*op.ring.R == *rc.ring.R);  // genuinely the opposite product

  ARingWithCharacter back = opposite_view(op);
  CHECK(back.handed == Handedness::Right);
  CHECK(*back.ring.A == *rc.ring.A);
  CHECK(*back.ring.R == *rc.ring.R);
  CHECK(back.chi == rc.chi);
}

TEST_CASE("invalid characters are rejected with named counterexamples") {
  FieldSpec f3 = FieldSpec::prime(3);
  AlgebraPtr k = field_algebra(f3);
  AlgebraPtr r = group_algebra_c2(f3);
  AlgebraMap i{k, r, imat(f3, {{1}, {0}}), true};

  SUBCASE("a map that is not a projection onto its section") {
    // chi(g) = 0 respects linearity and the unit but not the projection law.
    auto rc = make_character_ring(ARing{k, r, i}, imat(f3, {{1, 0}}));
    Report rep = verify_character(rc);
    CHECK_FALSE(rep.ok());
    const CheckResult* proj = find_check(rep, "chi-project");
    REQUIRE(proj != nullptr);
    CHECK_FALSE(proj->pass);
    REQUIRE_FALSE(proj->counterexamples.empty());
    CHECK(proj->counterexamples.front() == "(r=g, s=g)");
    for (const char* name : {"chi-linear", "chi-unit", "chi-section"}) {
      const CheckResult* c = find_check(rep, name);
      REQUIRE(c != nullptr);
      CHECK(c->pass);
    }
  }

  SUBCASE("the sign character chi(g) = -1 is fine") {
    auto rc = make_character_ring(ARing{k, r, i}, imat(f3, {{1, -1}}));
    CHECK(verify_character(rc).ok());
  }

  SUBCASE("a non-multiplicative section stops verification early") {
    AlgebraMap bad_i{k, r, imat(f3, {{1}, {1}}), true};  // 1 -> 1 + g
    auto rc = make_character_ring(ARing{k, r, bad_i}, imat(f3, {{1, 0}}));
    Report rep = verify_character(rc);
    CHECK_FALSE(rep.ok());
    const CheckResult* mult = find_check(rep, "i.map-mult");
    REQUIRE(mult != nullptr);
    CHECK_FALSE(mult->pass);
    CHECK(find_check(rep, "chi-project") == nullptr);
  }

  SUBCASE("shape mismatches throw") {
    CHECK_THROWS_AS(make_character_ring(ARing{k, r, i}, imat(f3, {{1, 0, 0}})), InvalidInput);
    AlgebraMap wide{k, r, imat(f3, {{1, 0}, {0, 0}}), true};
    CHECK_THROWS_AS(make_character_ring(ARing{k, r, wide}, imat(f3, {{1, 0}})), InvalidInput);
  }
}

TEST_CASE("invariant subspaces match hand calculations") {
  FieldSpec f2 = FieldSpec::prime(2);
  FieldSpec f3 = FieldSpec::prime(3);

  SUBCASE("R = A: everything is invariant") {
    auto rc = trivial_rc(mat2(f2));
    InvariantsBundle inv = invariants(rc);
    CHECK(inv.B == Subspace::full(f2, 4));
    CHECK(inv.Q == Subspace::full(f2, 4));
    CHECK_FALSE(inv.MR.has_value());
  }

  SUBCASE("order-2 group algebra with the augmentation") {
    auto rc = augmentation_rc(f3);
    InvariantsBundle inv = invariants(rc);
    CHECK(inv.B == Subspace::full(f3, 1));
    CHECK(inv.Q == Subspace::from_span(f3, {ivec(f3, {1, 1})}));

    // Brute-force oracle: scan all 9 elements of R for the defining identity.
    const Algebra& R = *rc.ring.R;
    std::size_t hits = 0;
    for (const Vec& q : all_vectors(f3, 2)) {
      Vec qg = R.multiply(q, ivec(f3, {0, 1}));
      Vec qe = R.multiply(q, rc.ring.i.matrix.apply(rc.chi.apply(ivec(f3, {0, 1}))));
      bool in = qg == qe;
      if (in) ++hits;
      CHECK(in == inv.Q.contains(q));
    }
    CHECK(hits == 3);  // a line in F_3^2
  }

  SUBCASE("diagonal pair inside upper triangular matrices") {
    auto rc = ut2_diag_rc(f2);
    InvariantsBundle inv = invariants(rc);
    CHECK(inv.B == Subspace::full(f2, 2));
    CHECK(inv.Q == Subspace::from_span(f2, {ivec(f2, {0, 1, 0}), ivec(f2, {0, 0, 1})}));

    // Oracle scan over all 8 elements of R, all defining conditions at once.
    const Algebra& R = *rc.ring.R;
    for (const Vec& q : all_vectors(f2, 3)) {
      bool in = true;
      for (std::size_t j = 0; j < 3; ++j) {
        Vec rj = unit_vec(f2, 3, j);
        Vec lifted = rc.ring.i.matrix.apply(rc.chi.apply(rj));
        if (!(R.multiply(q, rj) == R.multiply(q, lifted))) in = false;
      }
      CHECK(in == inv.Q.contains(q));
    }
  }

  SUBCASE("skew projection shrinks B to the diagonal copy of the field") {
    auto rc = ut2_diag_rc_skew(f3);
    InvariantsBundle inv = invariants(rc);
    CHECK(inv.B == Subspace::from_span(f3, {ivec(f3, {1, 1})}));
    CHECK(inv.Q == Subspace::from_span(f3, {ivec(f3, {1, -1, 0})}));
  }

  SUBCASE("dual-number base") {
    auto rc = ut2_dual_rc(f2);
    InvariantsBundle inv = invariants(rc);
    CHECK(inv.B == Subspace::from_span(f2, {ivec(f2, {1, 0})}));
    CHECK(inv.Q == Subspace::from_span(f2, {ivec(f2, {1, 0, 0})}));
  }

  SUBCASE("corner character: the two orientations disagree") {
    auto right = ut2_corner_rc(f3, Handedness::Right);
    InvariantsBundle rinv = invariants(right);
    CHECK(rinv.B == Subspace::full(f3, 1));
    CHECK(rinv.Q.dim() == 0);

    auto left = ut2_corner_rc(f3, Handedness::Left);
    InvariantsBundle linv = invariants(left);
    CHECK(linv.B == Subspace::full(f3, 1));
    CHECK(linv.Q == Subspace::from_span(f3, {ivec(f3, {1, 0, 0}), ivec(f3, {0, 1, 0})}));
  }
}

TEST_CASE("invariants of a supplied module, and consistency across formulations") {
  FieldSpec f3 = FieldSpec::prime(3);
  for (const auto& rc : fixture_library()) {
    // The regular module recovers Q; the induced module on A recovers B.
    RightModule amod = a_as_module(rc);
    RightModule reg = regular_right_module(amod.algebra);
    InvariantsBundle plain = invariants(rc);
    InvariantsBundle with_reg = invariants(rc, &reg);
    InvariantsBundle with_a = invariants(rc, &amod);
    REQUIRE(with_reg.MR.has_value());
    REQUIRE(with_a.MR.has_value());
    CHECK(*with_reg.MR == plain.Q);
    CHECK(*with_a.MR == plain.B);
  }

  RightModule stranger = regular_right_module(mat2(f3));
  CHECK_THROWS_AS(invariants(augmentation_rc(f3), &stranger), InvalidInput);
}

TEST_CASE("A becomes a cyclic module and R an A-bimodule") {
  FieldSpec f3 = FieldSpec::prime(3);
  std::mt19937 rng(2026);

  for (const auto& rc : fixture_library()) {
    RightModule amod = a_as_module(rc);
    Report rep = check_module(amod);
    CAPTURE(rep.summary());
    CHECK(rep.ok());

    // The orbit of 1 alone spans A: the module is cyclic.
    std::vector<Vec> orbit;
    for (std::size_t j = 0; j < rc.ring.R->dim; ++j)
      orbit.push_back(amod.actions[j].apply(rc.ring.A->unit));
    CHECK(Subspace::from_span(rc.ring.A->field, orbit) == Subspace::full(rc.ring.A->field, rc.ring.A->dim));

    Report brep = check_bimodule(r_as_A_bimodule(rc));
    CAPTURE(brep.summary());
    CHECK(brep.ok());
  }

  // Mixed associativity of the action, on random data.
  auto rc = ut2_diag_rc_skew(f3);
  const Algebra& R = *rc.ring.R;
  for (int trial = 0; trial < 25; ++trial) {
    Vec a = random_vec(f3, 2, rng);
    Vec r = random_vec(f3, 3, rng);
    Vec s = random_vec(f3, 3, rng);
    Vec one_step = action_on_A(rc, a, R.multiply(r, s));
    Vec two_step = action_on_A(rc, action_on_A(rc, a, r), s);
    CHECK(one_step == two_step);
  }
  // Acting by i(a') is just multiplication in A.
  for (int trial = 0; trial < 25; ++trial) {
    Vec a = random_vec(f3, 2, rng);
    Vec b = random_vec(f3, 2, rng);
    CHECK(action_on_A(rc, a, rc.ring.i.matrix.apply(b)) == rc.ring.A->multiply(a, b));
  }
}

TEST_CASE("evaluation at the unit identifies homs with invariants") {
  FieldSpec f3 = FieldSpec::prime(3);

  SUBCASE("maps into the regular module") {
    auto rc = augmentation_rc(f3);
    RightModule reg = regular_right_module(rc.ring.R);
    HomIsoResult res = hom_iso_phi(rc, reg);
    CAPTURE(res.report.summary());
    CHECK(res.report.ok());
    CHECK(res.hom_basis.size() == 1);
    CHECK(res.mr == invariants(rc).Q);
  }

  SUBCASE("endomorphisms of A evaluate to B, multiplicatively") {
    auto rc = ut2_diag_rc(f3);
    RightModule amod = a_as_module(rc);
    HomIsoResult res = hom_iso_phi(rc, amod);
    CAPTURE(res.report.summary());
    CHECK(res.report.ok());
    CHECK(res.mr == invariants(rc).B);
    CHECK(res.hom_basis.size() == 2);

    const Algebra& A = *rc.ring.A;
    for (const Matrix& s : res.hom_basis)
      for (const Matrix& t : res.hom_basis) {
        Vec composed = s.apply(t.apply(A.unit));
        Vec product = A.multiply(s.apply(A.unit), t.apply(A.unit));
        CHECK(composed == product);
      }
  }

  SUBCASE("a module with no invariants has no homs") {
    auto rc = ut2_corner_rc(f3, Handedness::Right);
    RightModule reg = regular_right_module(rc.ring.R);
    HomIsoResult res = hom_iso_phi(rc, reg);
    CHECK(res.report.ok());
    CHECK(res.hom_basis.empty());
    CHECK(res.mr.dim() == 0);
  }

  SUBCASE("module over the wrong algebra throws") {
    RightModule stranger = regular_right_module(mat2(f3));
    CHECK_THROWS_AS(hom_iso_phi(augmentation_rc(f3), stranger), InvalidInput);
  }
}

TEST_CASE("projectivity witnesses") {
  FieldSpec f2 = FieldSpec::prime(2);
  FieldSpec f3 = FieldSpec::prime(3);
  FieldSpec q = FieldSpec::rationals();

  SUBCASE("group algebra: witness exists exactly when 2 is invertible") {
    CHECK(projectivity_witness(augmentation_rc(f2)) == std::nullopt);

    auto w3 = projectivity_witness(augmentation_rc(f3));
    REQUIRE(w3.has_value());
    CHECK(*w3 == ivec(f3, {2, 2}));

    auto wq = projectivity_witness(augmentation_rc(q));
    REQUIRE(wq.has_value());
    Vec half_line{q.canonical(BigInt(1), BigInt(2)), q.canonical(BigInt(1), BigInt(2))};
    CHECK(*wq == half_line);
  }

  SUBCASE("upper triangular fixtures") {
    CHECK(projectivity_witness(ut2_diag_rc(f3)) == std::nullopt);

    auto skew = projectivity_witness(ut2_diag_rc_skew(f3));
    REQUIRE(skew.has_value());
    CHECK(*skew == ivec(f3, {1, -1, 0}));

    auto dual = projectivity_witness(ut2_dual_rc(f2));
    REQUIRE(dual.has_value());
    CHECK(*dual == ivec(f2, {1, 0, 0}));

    CHECK(projectivity_witness(ut2_corner_rc(f3, Handedness::Right)) == std::nullopt);
    auto left = projectivity_witness(ut2_corner_rc(f3, Handedness::Left));
    REQUIRE(left.has_value());
    CHECK(*left == ivec(f3, {1, 0, 0}));
  }

  SUBCASE("a witness collapses chi against multiplication") {
    auto rc = ut2_diag_rc_skew(f3);
    auto w = projectivity_witness(rc);
    REQUIRE(w.has_value());
    CHECK(rc.chi.apply(*w) == rc.ring.A->unit);
    CHECK(invariants(rc).Q.contains(*w));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
      Vec r = random_vec(f3, 3, rng);
      CHECK(rc.chi.apply(rc.ring.R->multiply(*w, r)) == rc.chi.apply(r));
    }
  }

  SUBCASE("B always carries an algebra structure of its own") {
    for (const FieldSpec& f : {f2, f3}) {
      auto rc = ut2_diag_rc_skew(f);
      InvariantsBundle inv = invariants(rc);
      SubalgebraResult sub = subalgebra_presentation(rc.ring.A, inv.B);
      CHECK(sub.algebra->dim == inv.B.dim());
      CHECK(check_algebra(*sub.algebra).ok());
    }
  }

  SUBCASE("when the unit of R collapses multiplication, chi inverts i") {
    auto rc = trivial_rc(group_algebra_c2(f3));
    InvariantsBundle inv = invariants(rc);
    REQUIRE(inv.Q.contains(rc.ring.R->unit));
    CHECK(rc.ring.i.matrix.mul(rc.chi) == Matrix::identity(f3, rc.ring.R->dim));
  }
}

TEST_CASE("quasi-projectivity by comparing quotient invariants") {
  FieldSpec f2 = FieldSpec::prime(2);

  struct Case {
    ARingWithCharacter rc;
    std::size_t expected_submodules;
  };
  std::vector<Case> cases;
  cases.push_back({augmentation_rc(f2), 2});
  cases.push_back({ut2_diag_rc(f2), 4});
  cases.push_back({ut2_diag_rc_skew(f2), 3});
  cases.push_back({ut2_dual_rc(f2), 3});

  for (const auto& c : cases) {
    QuasiProjectivityResult qp = is_quasi_projective(c.rc);
    CHECK(qp.quasi_projective);
    CHECK(qp.submodules_checked == c.expected_submodules);
    CHECK_FALSE(qp.failing_submodule.has_value());
  }
}
