#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "froblab/frobext.hpp"
#include "froblab/io.hpp"
#include "helpers.hpp"
#include "helpers_character.hpp"
#include "helpers_frobenius.hpp"

using namespace froblab;
using namespace froblab::testing;
namespace fs = std::filesystem;

namespace {

const fs::path corpus = FROBLAB_CORPUS_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CliRun {
  int code = 0;
  nlohmann::json report;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_command(args, out, err);
  r.err = err.str();
  if (!out.str().empty() && out.str().front() == '{') r.report = nlohmann::json::parse(out.str());
  return r;
}

}  // namespace

TEST_CASE("every canonical corpus file reloads to identical bytes and passes its checker") {
  std::size_t seen = 0;
  for (const fs::directory_entry& e : fs::directory_iterator(corpus)) {
    if (!e.is_regular_file()) continue;
    ++seen;
    INFO(e.path().filename().string());
    BundleFile b = load_bundle(e.path().string());
    CHECK(store_bundle(b) == slurp(e.path()));
    CHECK(verify_bundle(b).ok());
  }
  CHECK(seen >= 30);
}

TEST_CASE("every tampered corpus file loads but fails its checker with a counterexample") {
  std::size_t seen = 0;
  for (const fs::directory_entry& e : fs::directory_iterator(corpus / "tampered")) {
    ++seen;
    INFO(e.path().filename().string());
    Report rep = verify_bundle(load_bundle(e.path().string()));
    CHECK_FALSE(rep.ok());
    bool witnessed = false;
    for (const CheckResult& c : rep.checks)
      if (!c.pass && !c.counterexamples.empty()) witnessed = true;
    CHECK(witnessed);
  }
  CHECK(seen == 8);
}

TEST_CASE("load errors carry the category, the subject and the location") {
  SUBCASE("syntax errors report the parse position") {
    try {
      parse_bundle("{\"kind\": ", "inline");
      FAIL("expected a parse error");
    } catch (const LoadError& e) {
      CHECK(e.kind == LoadErrorKind::Parse);
      CHECK(e.subject == "inline");
      CHECK(std::string(e.what()).find("parse error") != std::string::npos);
    }
  }

  SUBCASE("a wrong-length unit names the offending field") {
    try {
      load_bundle((corpus / "invalid/unit_length.json").string());
      FAIL("expected a schema error");
    } catch (const LoadError& e) {
      CHECK(e.kind == LoadErrorKind::Schema);
      CHECK(e.location == "/algebra/unit");
      CHECK(e.detail == "expected 2 entries, found 3");
    }
  }

  SUBCASE("an unreduced fraction is a scalar error at its exact coordinates") {
    try {
      load_bundle((corpus / "invalid/bad_scalar.json").string());
      FAIL("expected a scalar error");
    } catch (const LoadError& e) {
      CHECK(e.kind == LoadErrorKind::Scalar);
      CHECK(e.location == "/algebra/table/0/0/0");
      CHECK(std::string(e.detail).find("2/4") != std::string::npos);
    }
  }

  SUBCASE("a residue out of range is a scalar error") {
    std::string text =
        "{\"kind\":\"algebra\",\"field\":\"F_2\","
        "\"algebra\":{\"basis\":[\"1\"],\"table\":[[[\"2\"]]],\"unit\":[\"1\"]}}";
    try {
      parse_bundle(text, "t");
      FAIL("expected a scalar error");
    } catch (const LoadError& e) {
      CHECK(e.kind == LoadErrorKind::Scalar);
      CHECK(e.location == "/algebra/table/0/0/0");
    }
  }

  SUBCASE("missing members, bad kinds and bad fields are schema errors") {
    auto kind_of = [](const std::string& text) {
      try {
        parse_bundle(text, "t");
      } catch (const LoadError& e) {
        return e.kind;
      }
      return LoadErrorKind::Parse;
    };
    CHECK(kind_of("{\"field\":\"Q\"}") == LoadErrorKind::Schema);
    CHECK(kind_of("{\"kind\":\"nonsense\",\"field\":\"Q\"}") == LoadErrorKind::Schema);
    CHECK(kind_of("{\"kind\":\"algebra\",\"field\":\"F_4\"}") == LoadErrorKind::Schema);
    CHECK(kind_of("{\"kind\":\"algebra\",\"field\":\"R\"}") == LoadErrorKind::Schema);
    CHECK(kind_of("{\"kind\":\"algebra\",\"field\":\"Q\",\"algebra\":"
                  "{\"basis\":[],\"table\":[],\"unit\":[]}}") == LoadErrorKind::Schema);
  }

  SUBCASE("scalars written as JSON numbers are rejected") {
    std::string text =
        "{\"kind\":\"algebra\",\"field\":\"Q\","
        "\"algebra\":{\"basis\":[\"1\"],\"table\":[[[1]]],\"unit\":[\"1\"]}}";
    try {
      parse_bundle(text, "t");
      FAIL("expected a schema error");
    } catch (const LoadError& e) {
      CHECK(e.kind == LoadErrorKind::Schema);
      CHECK(e.detail == "scalars must be strings");
    }
  }

  SUBCASE("theta and z must travel together") {
    BundleFile b = load_bundle((corpus / "sweedler_f2.coring.json").string());
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(store_bundle(b));
    j["z"] = nullptr;
    try {
      parse_bundle(j.dump(), "t");
      FAIL("expected a schema error");
    } catch (const LoadError& e) {
      CHECK(e.kind == LoadErrorKind::Schema);
      CHECK(e.location == "/theta");
    }
  }
}

TEST_CASE("bundles built from live objects survive the file round trip") {
  FieldSpec f3 = FieldSpec::prime(3);

  SUBCASE("a character ring keeps its handedness and matrices") {
    ARingWithCharacter rc = ut2_corner_rc(FieldSpec::prime(2), Handedness::Left);
    BundleFile b = bundle_from_character_ring(rc);
    BundleFile back = parse_bundle(store_bundle(b), "t");
    const auto& ab = std::get<AringBundle>(back.payload);
    CHECK(ab.handed == Handedness::Left);
    CHECK(ab.chi == rc.chi);
    CHECK(verify_bundle(back).ok());
  }

  SUBCASE("a frobenius system keeps its quotient-coordinate dual-bases element") {
    FrobeniusSystem sys = kc2_system(f3);
    BundleFile b = bundle_from_system(sys);
    BundleFile back = parse_bundle(store_bundle(b), "t");
    const auto& fb = std::get<FrobeniusSystemBundle>(back.payload);
    CHECK(fb.e == sys.e);
    FrobeniusSystem again = fb.system();
    CHECK(verify_frobenius(again).ok());
    CHECK(frobenius_trace(again, ivec(f3, {2})) == ivec(f3, {1}));
  }
}

TEST_CASE("verify stages structural checks before the laws that consume them") {
  // A module over a broken algebra reports the algebra failure and stops.
  AlgebraPtr good = mat2(FieldSpec::prime(2));
  std::vector<Scalar> st(64);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) st[(i * 4 + j) * 4 + k] = good->c(i, j, k);
  st[(1 * 4 + 2) * 4 + 0] = good->field.zero();
  st[(1 * 4 + 2) * 4 + 3] = good->field.one();
  AlgebraPtr bad = make_algebra(good->field, good->basis_names, st, good->unit);

  RightModule m{bad, 1, {Matrix::identity(good->field, 1), Matrix::identity(good->field, 1),
                         Matrix::identity(good->field, 1), Matrix::identity(good->field, 1)}};
  BundleFile b{"module", good->field, ModuleBundle{m}};
  Report rep = verify_bundle(b);
  CHECK_FALSE(rep.ok());
  for (const CheckResult& c : rep.checks) CHECK(c.name.rfind("algebra.", 0) == 0);
}

TEST_CASE("the command driver matches the documented exit codes") {
  SUBCASE("projectivity witnesses") {
    CliRun r = run({"projective", (corpus / "f3c2.aring.json").string()});
    CHECK(r.code == 0);
    CHECK(r.report["ok"] == true);
    CHECK(r.report["computed"]["witness"] == "2,2");

    CliRun none = run({"projective", (corpus / "f2c2.aring.json").string()});
    CHECK(none.code == 0);
    CHECK(none.report["computed"]["witness"].is_null());
  }

  SUBCASE("a failed mathematical check exits 1") {
    CliRun r = run({"verify", (corpus / "tampered/algebra.json").string()});
    CHECK(r.code == 1);
    CHECK(r.report["ok"] == false);
  }

  SUBCASE("malformed input exits 2 with the located message on stderr") {
    CliRun r = run({"verify", (corpus / "invalid/bad_scalar.json").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("scalar error") != std::string::npos);
    CHECK(r.err.find("/algebra/table/0/0/0") != std::string::npos);
  }

  SUBCASE("tracing through a characterless system is an input error") {
    CliRun r = run({"trace", (corpus / "m2f2.frobenius.json").string(), "--element", "1,0,0,1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("no character") != std::string::npos);
  }

  SUBCASE("trace evaluates a single element") {
    CliRun r = run({"trace", (corpus / "f3c2.frobenius.json").string(), "--element", "2"});
    CHECK(r.code == 0);
    CHECK(r.report["computed"]["trace"] == "1");
  }

  SUBCASE("invariants computes the three subspaces") {
    CliRun r = run({"invariants", (corpus / "m2f2_trivial.aring.json").string(), "--module",
                    (corpus / "m2f2_rows.module.json").string()});
    CHECK(r.code == 0);
    CHECK(r.report["computed"]["B"].size() == 4);
    CHECK(r.report["computed"]["MR"].size() == 2);
  }

  SUBCASE("quasiprojective decides without failing") {
    CliRun r = run({"quasiprojective", (corpus / "f2c2.aring.json").string()});
    CHECK(r.code == 0);
    CHECK(r.report["computed"]["quasi_projective"] == true);
  }

  SUBCASE("smash writes a deterministic system file") {
    fs::path out = fs::temp_directory_path() / "froblab_test_smash.json";
    CliRun r = run({"smash", (corpus / "swap.action.json").string(), "-o", out.string()});
    CHECK(r.code == 0);
    CHECK(slurp(out) == slurp(corpus / "smash.frobenius.json"));
    fs::remove(out);
  }

  SUBCASE("coring-dual writes the dual ring with its character") {
    fs::path out = fs::temp_directory_path() / "froblab_test_dual.json";
    CliRun r = run({"coring-dual", (corpus / "sweedler_f2.coring.json").string(), "-o",
                    out.string()});
    CHECK(r.code == 0);
    CHECK(slurp(out) == slurp(corpus / "sweedler_dual.aring.json"));
    fs::remove(out);
  }

  SUBCASE("fbn reports the prime spectrum") {
    CliRun r = run({"fbn", (corpus / "f2xf2.algebra.json").string()});
    CHECK(r.code == 0);
    CHECK(r.report["computed"]["fbn"] == true);
    CHECK(r.report["computed"]["primes"].size() == 2);
  }

  SUBCASE("fbn-transfer cross-checks the supplied system against the ring") {
    CliRun ok = run({"fbn-transfer", (corpus / "f2c2.aring.json").string(), "--frobenius",
                     (corpus / "f2c2.frobenius.json").string()});
    CHECK(ok.code == 0);
    CHECK(ok.report["computed"]["condition3"] == true);
    CHECK(ok.report["computed"]["frobenius_hypothesis"] == true);

    CliRun bad = run({"fbn-transfer", (corpus / "f2c2.aring.json").string(), "--frobenius",
                      (corpus / "m2f2.frobenius.json").string()});
    CHECK(bad.code == 2);
  }

  SUBCASE("usage problems exit 2 and help exits 0") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"verify", (corpus / "does_not_exist.json").string()}).code == 2);
    CHECK(run({"invariants", (corpus / "f2c2.algebra.json").string()}).code == 2);
  }

  SUBCASE("reports are byte-stable across repeated runs") {
    std::ostringstream a, b, sink;
    run_command({"frobenius", (corpus / "qc2_hopf.frobenius.json").string()}, a, sink);
    run_command({"frobenius", (corpus / "qc2_hopf.frobenius.json").string()}, b, sink);
    CHECK(a.str() == b.str());
    CHECK(!a.str().empty());
  }
}
