#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "froblab/coring.hpp"
#include "froblab/frobext.hpp"
#include "froblab/hopf.hpp"

namespace froblab {

enum class LoadErrorKind { Parse, Schema, Scalar };

/// Raised by the loader: parse errors for malformed JSON (the message keeps
/// the parser's line/column), schema errors for wrong shapes or missing
/// fields, scalar errors for entries that are not in canonical form. The
/// location is a /-separated path into the document.
struct LoadError : InvalidInput {
  LoadError(LoadErrorKind kind, const std::string& subject, const std::string& location,
            const std::string& detail);

  LoadErrorKind kind;
  std::string subject;
  std::string location;
  std::string detail;
};

/// Payload alternatives for the seven file kinds. Bundles hold raw
/// presentations; verify_bundle runs the matching checker, so invalid laws
/// become reported counterexamples rather than construction failures.
struct AlgebraBundle {
  AlgebraPtr algebra;
};

struct ModuleBundle {
  RightModule module;
};

struct AringBundle {
  AlgebraPtr A;
  AlgebraPtr R;
  Matrix i;    // R.dim x A.dim
  Matrix chi;  // A.dim x R.dim
  Handedness handed = Handedness::Right;

  ARingWithCharacter character_ring() const;
};

/// A Frobenius system over an explicit Morita context; e is stored in the
/// R (x)_A I (x)_A R quotient coordinates, everything else in full ones.
struct FrobeniusSystemBundle {
  AlgebraPtr A;
  AlgebraPtr R;
  Matrix i;
  std::optional<Matrix> chi;
  MoritaContext context;
  Vec e;
  Matrix nu;

  FrobeniusSystem system() const;
};

/// The classical shape: an algebra S over its ground field with e in full
/// S (x) S coordinates and the Frobenius functional as a row.
struct FrobeniusAlgebraBundle {
  FrobeniusAlgebraData data;
};

struct HopfBundle {
  HopfPresentation hopf;
};

struct ActionBundle {
  ModuleAlgebraAction action;
};

struct CoringBundle {
  AlgebraPtr A;
  Bimodule C;
  Matrix comul;   // quotient coordinates of C (x)_A C, one column per C basis
  Matrix counit;  // A.dim x C.dim
  std::optional<Vec> grouplike;
  std::optional<FrobeniusCoringSystem> frob;

  CoringPresentation coring() const;
};

using BundlePayload = std::variant<AlgebraBundle, ModuleBundle, AringBundle, FrobeniusSystemBundle,
                                   FrobeniusAlgebraBundle, HopfBundle, ActionBundle, CoringBundle>;

/// One structure-constant file: a kind tag, the coefficient field, and the
/// kind-specific presentation. Loading performs schema and dimension checks
/// only; the mathematical laws live in verify_bundle.
struct BundleFile {
  std::string kind;  // algebra | module | aring | frobenius | hopf | action | coring
  FieldSpec field;
  BundlePayload payload;
};

/// Parse text that alleges to be a bundle; subject names the source in error
/// messages. Throws LoadError.
BundleFile parse_bundle(const std::string& text, const std::string& subject);

/// Read and parse a file; throws LoadError (a missing file is a parse error).
BundleFile load_bundle(const std::string& path);

/// Canonical serialization, stable byte-for-byte: fixed key order, two-space
/// indentation, one trailing newline. store(load(f)) == f for canonical files.
std::string store_bundle(const BundleFile& b);

void save_bundle(const BundleFile& b, const std::string& path);

/// Dispatch on the kind and run the full checker for the payload.
Report verify_bundle(const BundleFile& b);

/// Re-wrap computed structures as writable bundles.
BundleFile bundle_from_system(const FrobeniusSystem& sys);
BundleFile bundle_from_character_ring(const ARingWithCharacter& rc);

/// The command-line surface. args excludes the program name. Reports go to
/// out as JSON with a stable key order; failures of mathematical checks
/// return 1, input or usage problems print a message to err and return 2.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace froblab
