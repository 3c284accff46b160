/// Regenerates the bundled example files under data/corpus. Every canonical
/// file is written through store_bundle, then reloaded and re-stored to prove
/// the byte-for-byte round trip, and its checker must come back clean. The
/// tampered/ and invalid/ subdirectories hold deliberately broken inputs for
/// the failure-path tests.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "froblab/frobext.hpp"
#include "froblab/io.hpp"

#include "helpers.hpp"
#include "helpers_character.hpp"
#include "helpers_coring.hpp"
#include "helpers_frobenius.hpp"
#include "helpers_hopf.hpp"

namespace fs = std::filesystem;
using namespace froblab;
using namespace froblab::testing;

namespace {

std::vector<std::string> canonical;

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void put(const fs::path& root, const std::string& rel, const BundleFile& b) {
  save_bundle(b, (root / rel).string());
  canonical.push_back(rel);
}

void put_raw(const fs::path& root, const std::string& rel, const std::string& text) {
  std::ofstream out(root / rel, std::ios::binary);
  out << text;
}

BundleFile algebra_bundle(AlgebraPtr a) {
  return BundleFile{"algebra", a->field, AlgebraBundle{std::move(a)}};
}

BundleFile module_bundle(RightModule m) {
  FieldSpec f = m.algebra->field;
  return BundleFile{"module", f, ModuleBundle{std::move(m)}};
}

BundleFile classical_bundle(FrobeniusAlgebraData d) {
  FieldSpec f = d.S->field;
  return BundleFile{"frobenius", f, FrobeniusAlgebraBundle{std::move(d)}};
}

BundleFile hopf_bundle(HopfPresentation h) {
  FieldSpec f = h.H->field;
  return BundleFile{"hopf", f, HopfBundle{std::move(h)}};
}

BundleFile action_bundle(ModuleAlgebraAction act) {
  FieldSpec f = act.A->field;
  return BundleFile{"action", f, ActionBundle{std::move(act)}};
}

BundleFile coring_bundle(const CoringFixture& cf, bool with_frobenius) {
  CoringBundle b{cf.coring.A, cf.coring.C, cf.coring.comul, cf.coring.counit, cf.x, std::nullopt};
  if (with_frobenius) b.frob = cf.sys;
  return BundleFile{"coring", cf.coring.A->field, std::move(b)};
}

FrobeniusAlgebraData kc2_data(const FieldSpec& f) {
  return make_frobenius_algebra(group_algebra_c2(f), ivec(f, {1, 0, 0, 1}), imat(f, {{1, 0}}));
}

FrobeniusAlgebraData m2_data(const FieldSpec& f) {
  Vec e = vec_zero(16);
  for (std::size_t idx : {0, 6, 9, 15}) e[idx] = f.one();
  return make_frobenius_algebra(mat2(f), e, imat(f, {{1, 0, 0, 1}}));
}

AlgebraMap identity_map(AlgebraPtr a) {
  return make_algebra_map(a, a, Matrix::identity(a->field, a->dim));
}

/// The right module of row vectors over the 2x2 matrix algebra, written in
/// the column-vector convention (the action of x is the matrix of v -> v x).
RightModule row_module(const FieldSpec& f) {
  return RightModule{mat2(f),
                     2,
                     {imat(f, {{1, 0}, {0, 0}}), imat(f, {{0, 0}, {1, 0}}),
                      imat(f, {{0, 1}, {0, 0}}), imat(f, {{0, 0}, {0, 1}})}};
}

void write_canonical(const fs::path& root) {
  FieldSpec f2 = FieldSpec::prime(2);
  FieldSpec f3 = FieldSpec::prime(3);
  FieldSpec q = FieldSpec::rationals();

  // Plain algebra presentations.
  put(root, "f2.algebra.json", algebra_bundle(field_algebra(f2)));
  put(root, "qc2.algebra.json", algebra_bundle(group_algebra_c2(q)));
  put(root, "f2c2.algebra.json", algebra_bundle(group_algebra_c2(f2)));
  put(root, "f3c2.algebra.json", algebra_bundle(group_algebra_c2(f3)));
  put(root, "f2_dual.algebra.json", algebra_bundle(dual_numbers(f2)));
  put(root, "f2xf2.algebra.json", algebra_bundle(product_field(f2)));
  put(root, "m2f2.algebra.json", algebra_bundle(mat2(f2)));
  put(root, "m2f3.algebra.json", algebra_bundle(mat2(f3)));
  put(root, "ut2f2.algebra.json", algebra_bundle(upper_triangular2(f2)));

  // A right module for the invariants command.
  put(root, "m2f2_rows.module.json", module_bundle(row_module(f2)));

  // Rings with a character.
  put(root, "trivial.aring.json", bundle_from_character_ring(trivial_rc(product_field(f2))));
  put(root, "f2c2.aring.json", bundle_from_character_ring(augmentation_rc(f2)));
  put(root, "f3c2.aring.json", bundle_from_character_ring(augmentation_rc(f3)));
  put(root, "qc2.aring.json", bundle_from_character_ring(augmentation_rc(q)));
  put(root, "m2f2_trivial.aring.json", bundle_from_character_ring(trivial_rc(mat2(f2))));
  put(root, "f2c2_lift.aring.json",
      bundle_from_character_ring(
          sop_tensor_ring(kc2_data(f2), identity_map(group_algebra_c2(f2)))));
  put(root, "qc2_lift.aring.json",
      bundle_from_character_ring(sop_tensor_ring(kc2_data(q), identity_map(group_algebra_c2(q)))));
  put(root, "smash.aring.json", bundle_from_character_ring(smash(swap_action(f2)).rc));
  {
    CoringFixture cf = sweedler_coring(f2);
    put(root, "sweedler_dual.aring.json",
        bundle_from_character_ring(dual_ring(cf.coring, cf.x).rc));
  }

  // Frobenius systems and classical Frobenius algebras.
  put(root, "qc2.frobenius.json", bundle_from_system(kc2_system(q)));
  put(root, "f2c2.frobenius.json", bundle_from_system(kc2_system(f2)));
  put(root, "f3c2.frobenius.json", bundle_from_system(kc2_system(f3)));
  put(root, "m2f2.frobenius.json", bundle_from_system(m2_system(f2)));
  put(root, "m2f3.frobenius.json", bundle_from_system(m2_system(f3)));
  put(root, "smash.frobenius.json", bundle_from_system(smash_frobenius(swap_action(f2)).system));
  put(root, "qc2_hopf.frobenius.json",
      bundle_from_system(hopf_frobenius_system(group_hopf_c2(q)).system));
  put(root, "sweedler_hopf.frobenius.json",
      bundle_from_system(hopf_frobenius_system(sweedler_hopf(q)).system));
  put(root, "qc2_classical.frobenius.json", classical_bundle(kc2_data(q)));
  put(root, "f2c2_classical.frobenius.json", classical_bundle(kc2_data(f2)));
  put(root, "m2q_classical.frobenius.json", classical_bundle(m2_data(q)));

  // Hopf presentations and one module-algebra action.
  put(root, "qc2.hopf.json", hopf_bundle(group_hopf_c2(q)));
  put(root, "f2c2.hopf.json", hopf_bundle(group_hopf_c2(f2)));
  put(root, "f3c2.hopf.json", hopf_bundle(group_hopf_c2(f3)));
  put(root, "sweedler.hopf.json", hopf_bundle(sweedler_hopf(q)));
  put(root, "swap.action.json", action_bundle(swap_action(f2)));

  // Corings, with and without the Frobenius pair.
  put(root, "sweedler_f2.coring.json", coring_bundle(sweedler_coring(f2), true));
  put(root, "trivial_f2xf2.coring.json", coring_bundle(trivial_coring(product_field(f2)), true));
}

void write_tampered(const fs::path& root) {
  FieldSpec f2 = FieldSpec::prime(2);

  // e12 e21 rewired to e22: associativity breaks.
  {
    AlgebraPtr good = mat2(f2);
    std::vector<Scalar> st(64);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) st[(i * 4 + j) * 4 + k] = good->c(i, j, k);
    st[(1 * 4 + 2) * 4 + 0] = f2.zero();
    st[(1 * 4 + 2) * 4 + 3] = f2.one();
    save_bundle(algebra_bundle(make_algebra(f2, good->basis_names, st, good->unit)),
                (root / "tampered/algebra.json").string());
  }

  // Row module with a broken action matrix: the anti-homomorphism law fails.
  {
    RightModule m = row_module(f2);
    m.actions[1] = imat(f2, {{0, 0}, {1, 1}});
    save_bundle(module_bundle(std::move(m)), (root / "tampered/module.json").string());
  }

  // Projection onto the identity coefficient is not a character for C2.
  {
    ARingWithCharacter rc = augmentation_rc(f2);
    BundleFile b = bundle_from_character_ring(rc);
    std::get<AringBundle>(b.payload).chi = imat(f2, {{1, 0}});
    save_bundle(b, (root / "tampered/aring.json").string());
  }

  // Dual-bases element missing one leg: the contraction laws fail.
  {
    BundleFile b = bundle_from_system(kc2_system(f2));
    std::get<FrobeniusSystemBundle>(b.payload).e = ivec(f2, {1, 0, 0, 0});
    save_bundle(b, (root / "tampered/frobenius_system.json").string());
  }

  // Augmentation as nu is degenerate on the group algebra in char 2.
  save_bundle(classical_bundle(make_frobenius_algebra(group_algebra_c2(f2), ivec(f2, {1, 0, 0, 1}),
                                                      imat(f2, {{1, 1}}))),
              (root / "tampered/frobenius_classical.json").string());

  // Non-involutive antipode candidate: both antipode identities fail on g.
  {
    HopfPresentation h = group_hopf_c2(f2);
    h.antipode = imat(f2, {{1, 1}, {0, 1}});
    save_bundle(hopf_bundle(std::move(h)), (root / "tampered/hopf.json").string());
  }

  // The action of g stops being unital.
  {
    ModuleAlgebraAction act = swap_action(f2);
    act.action[1] = imat(f2, {{0, 1}, {1, 1}});
    save_bundle(action_bundle(std::move(act)), (root / "tampered/action.json").string());
  }

  // Counit with one flipped entry: the counit law fails.
  {
    CoringFixture cf = sweedler_coring(f2);
    Matrix counit = cf.coring.counit;
    counit.at(0, 0) = f2.add(counit.at(0, 0), f2.one());
    CoringBundle b{cf.coring.A, cf.coring.C, cf.coring.comul, counit, cf.x, std::nullopt};
    save_bundle(BundleFile{"coring", f2, std::move(b)}, (root / "tampered/coring.json").string());
  }
}

void write_invalid(const fs::path& root) {
  put_raw(root, "invalid/truncated.json", "{\"kind\": \"algebra\", \"field\": \"F_2\"");
  put_raw(root, "invalid/unit_length.json",
          "{\n"
          "  \"kind\": \"algebra\",\n"
          "  \"field\": \"F_2\",\n"
          "  \"algebra\": {\n"
          "    \"basis\": [\"1\", \"g\"],\n"
          "    \"table\": [[[\"1\", \"0\"], [\"0\", \"1\"]], [[\"0\", \"1\"], [\"1\", \"0\"]]],\n"
          "    \"unit\": [\"1\", \"0\", \"0\"]\n"
          "  }\n"
          "}\n");
  put_raw(root, "invalid/bad_scalar.json",
          "{\n"
          "  \"kind\": \"algebra\",\n"
          "  \"field\": \"Q\",\n"
          "  \"algebra\": {\n"
          "    \"basis\": [\"1\"],\n"
          "    \"table\": [[[\"2/4\"]]],\n"
          "    \"unit\": [\"1\"]\n"
          "  }\n"
          "}\n");
}

int check_corpus(const fs::path& root) {
  int bad = 0;
  for (const std::string& rel : canonical) {
    fs::path p = root / rel;
    BundleFile b = load_bundle(p.string());
    if (store_bundle(b) != read_file(p)) {
      std::cerr << "round trip changed bytes: " << rel << "\n";
      ++bad;
    }
    Report rep = verify_bundle(b);
    if (!rep.ok()) {
      std::cerr << "checker rejected " << rel << ":\n" << rep.summary();
      ++bad;
    }
  }
  for (const fs::directory_entry& e : fs::directory_iterator(root / "tampered")) {
    BundleFile b = load_bundle(e.path().string());
    if (verify_bundle(b).ok()) {
      std::cerr << "tampered file passes its checker: " << e.path().filename() << "\n";
      ++bad;
    }
  }
  return bad;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: corpus_gen <output-dir>\n";
    return 2;
  }
  fs::path root = argv[1];
  fs::create_directories(root / "tampered");
  fs::create_directories(root / "invalid");

  write_canonical(root);
  write_tampered(root);
  write_invalid(root);

  int bad = check_corpus(root);
  if (bad) {
    std::cerr << bad << " problem(s) found\n";
    return 1;
  }
  std::cout << "wrote " << canonical.size() << " canonical files plus tampered/ and invalid/\n";
  return 0;
}
