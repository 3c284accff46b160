#pragma once

#include <optional>

#include "froblab/character.hpp"

namespace froblab {

/// Strict Morita context connecting A with itself: two (A, A)-bimodules I
/// and J with pairings f: I (x)_A J -> A and g: J (x)_A I -> A that are
/// bijective bimodule maps and associate with each other, plus a chosen
/// representative of f^{-1}(1). The pairing matrices act on full tensor
/// coordinates; balancedness over A is a verified law, not an assumption.
struct MoritaContext {
  AlgebraPtr A;
  Bimodule I;
  Bimodule J;
  Matrix f;       // A.dim x (I.dim * J.dim)
  Matrix g;       // A.dim x (J.dim * I.dim)
  Vec f_inv_one;  // element of I (x) J, full coordinates
};

/// Shape-checks only; the laws live in verify_morita_context.
MoritaContext make_morita_context(AlgebraPtr a, Bimodule i_mod, Bimodule j_mod,
                                  Matrix f, Matrix g, Vec f_inv_one);

/// I = J = A with multiplication as both pairings and 1 (x) 1 as f^{-1}(1).
MoritaContext identity_context(AlgebraPtr a);

bool is_identity_context(const MoritaContext& ctx);

Report verify_morita_context(const MoritaContext& ctx);

/// A Frobenius structure on an A-ring relative to a Morita context: a
/// central element e spread over R (x)_A I (x)_A R together with a bimodule
/// map nu collapsing R (x)_A I back to A, normalised so that the two partial
/// contractions of e through nu give the identity. The character is
/// optional; the defining identities never mention it, but alpha, beta and
/// the trace need it (right-handed convention throughout: left-handed
/// situations are passed in over the opposite ring).
struct FrobeniusSystem {
  ARing ring;
  MoritaContext ctx;
  Vec e;                      // quotient coordinates of (R (x)_A I) (x)_A R
  Matrix nu;                  // A.dim x (R.dim * I.dim), full coordinates
  std::optional<Matrix> chi;  // A.dim x R.dim

  /// The ring with its character; throws InvalidInput when chi is absent.
  ARingWithCharacter character_ring() const;
};

FrobeniusSystem make_frobenius_system(ARing ring, MoritaContext ctx, Vec e, Matrix nu,
                                      std::optional<Matrix> chi);

/// Identity-context systems from classical data: e in full R (x) R
/// coordinates and nu: R -> A.
FrobeniusSystem classical_system(ARing ring, const Vec& e_rr, const Matrix& nu_r,
                                 std::optional<Matrix> chi);

/// The tensor quotients a system computes in: ri = R (x)_A I and
/// rir = (R (x)_A I) (x)_A R, plus nu descended to the ri coordinates.
struct FrobeniusWorkspace {
  TensorOverA ri;
  TensorOverA rir;
  Matrix nu_q;  // A.dim x ri.total.dim
};

FrobeniusWorkspace frobenius_workspace(const ARing& ring, const MoritaContext& ctx,
                                       const Matrix& nu);

/// Descend an element from full R (x) I (x) R coordinates, flat index
/// ((r * I.dim + u) * R.dim + r2), to the rir quotient coordinates.
Vec descend_triple(const FrobeniusWorkspace& ws, const Vec& full);

/// Canonical full-coordinate representative of a quotient element;
/// descend_triple is a left inverse of it.
Vec lift_triple(const FrobeniusWorkspace& ws, const Vec& eq);

/// The three defining identities of the system, after re-checking the
/// context, the ring (with its character when present) and nu itself.
Report verify_frobenius(const FrobeniusSystem& sys);

struct TraceData {
  Matrix alpha;  // R.dim x J.dim, lands in Q
  Matrix beta;   // J.dim x R.dim, inverts alpha on Q
  Matrix trace;  // A.dim x J.dim, lands in B
  Report report;
};

/// Alpha, beta and the trace as matrices, with the isomorphism laws onto Q
/// and the B-bimodule behaviour of the trace checked into the report.
TraceData make_trace_data(const FrobeniusSystem& sys);

Vec frobenius_alpha(const FrobeniusSystem& sys, const Vec& v);
/// Throws InvalidInput unless q lies in Q.
Vec frobenius_beta(const FrobeniusSystem& sys, const Vec& q);
Vec frobenius_trace(const FrobeniusSystem& sys, const Vec& v);
/// Canonical solution of trace(v) = 1, if any.
std::optional<Vec> trace_one_witness(const FrobeniusSystem& sys);

/// Left action of R on J transported through alpha: r.v = beta(r alpha(v)).
Vec j_left_action(const FrobeniusSystem& sys, const Vec& r, const Vec& v);
/// The same action evaluated by expanding the defining sums term by term;
/// tests pin the two evaluations against each other.
Vec j_left_action_printed(const FrobeniusSystem& sys, const Vec& r, const Vec& v);

/// Identity-context shortcut tr(a) = chi(a chi(e1) e2).
Vec classical_trace(const FrobeniusSystem& sys, const Vec& a);

}  // namespace froblab
