#pragma once

#include <optional>
#include <vector>

#include "froblab/frobenius.hpp"

namespace froblab {

/// A finite-dimensional Hopf algebra: an algebra H together with the
/// comultiplication (column s holds the H (x) H coordinates of Delta on
/// basis element s, flat index i * dim + j), the counit as a row and the
/// antipode as a matrix.
struct HopfPresentation {
  AlgebraPtr H;
  Matrix comul;     // dim^2 x dim
  Matrix counit;    // 1 x dim
  Matrix antipode;  // dim x dim
};

/// Shape checks only; the axioms live in verify_hopf.
HopfPresentation make_hopf(AlgebraPtr h, Matrix comul, Matrix counit, Matrix antipode);

/// Coassociativity, the counit laws, multiplicativity and unitality of
/// Delta and eps, both antipode identities and invertibility of the
/// antipode, all checked basis-wise.
Report verify_hopf(const HopfPresentation& h);

/// Inverse of the antipode matrix; throws InvalidInput when singular.
Matrix antipode_inverse(const HopfPresentation& h);

/// The convolution algebra on the dual basis; its unit is the counit.
AlgebraPtr dual_algebra(const HopfPresentation& h);

/// Left integral spaces: J inside H and I inside the convolution algebra
/// (coordinates on the dual basis), together with a pair normalised so
/// that phi evaluates to 1 on t.
struct IntegralData {
  Subspace J;
  Subspace I;
  Vec t;    // canonical generator of J
  Vec phi;  // element of I with <phi, t> = 1
};

/// Kernel solves for both spaces plus the normalised pair; throws
/// InvalidInput when either space vanishes or the pairing between the
/// chosen generators degenerates.
IntegralData integrals(const HopfPresentation& h);

/// The Frobenius structure of H over its ground field, built from the
/// integral pair: e = sum t_(2) (x) phi (x) Sbar(t_(1)) and
/// nu(h (x) phi) = <phi, h>, with the counit as character. The integral
/// legs are normalised lines, so the Morita context collapses to the
/// identity context of the ground field.
struct HopfFrobenius {
  HopfPresentation hopf;
  IntegralData ints;
  FrobeniusSystem system;
};

HopfFrobenius hopf_frobenius_system(const HopfPresentation& h);

/// A left action of H on an algebra A, one dim(A) x dim(A) matrix per
/// H-basis element.
struct ModuleAlgebraAction {
  HopfPresentation hopf;
  AlgebraPtr A;
  std::vector<Matrix> action;
};

ModuleAlgebraAction make_module_algebra(HopfPresentation hopf, AlgebraPtr a,
                                        std::vector<Matrix> action);

/// The matrix by which a general element of H acts.
Matrix action_matrix(const ModuleAlgebraAction& act, const Vec& h);

/// Module law plus the measuring laws h.(ab) = (h_(1).a)(h_(2).b) and
/// h.1 = eps(h)1, on top of the underlying Hopf and algebra checks.
Report check_module_algebra(const ModuleAlgebraAction& act);

/// {a in A : h.a = eps(h) a for every h}, the classical fixed ring.
Subspace invariant_subalgebra(const ModuleAlgebraAction& act);

/// The twisted product on A (x) H, (a#h)(b#k) = a(h_(1).b) # h_(2)k, as an
/// A-ring with the left-handed character a#h -> a eps(h). Basis names are
/// "a#h"; the flat index of a#h is a * dim(H) + h.
struct SmashProduct {
  ModuleAlgebraAction act;
  ARingWithCharacter rc;   // left-handed
  Subspace fixed_ring;     // invariant_subalgebra(act)
};

/// Builds the product table and the character; the character's invariant
/// subalgebra is computed and checked against the classical fixed ring
/// (throws InvalidInput on disagreement, which signals an invalid action).
SmashProduct smash(const ModuleAlgebraAction& act);

/// The Frobenius structure of A#H over A carried by the integral pair:
/// e = sum (1#t_(2)) (x) (1 (x) phi) (x) (1#Sbar(t_(1))) and
/// nu(a#h (x) phi) = a <phi, h>. No character is attached to the system;
/// the smash character is left-handed and the trace has a closed form.
struct SmashFrobenius {
  SmashProduct product;
  IntegralData ints;
  FrobeniusSystem system;
};

SmashFrobenius smash_frobenius(const ModuleAlgebraAction& act);

/// tr(a (x) t) = t.a for t in J; throws InvalidInput when t lies outside
/// J. The value always lands in the fixed ring.
Vec hopf_trace(const ModuleAlgebraAction& act, const Vec& a, const Vec& t);

/// The same trace evaluated through the generic left-handed formula on the
/// canonical representative of e; tests pin the two against each other.
Vec smash_trace_generic(const SmashFrobenius& sf, const Vec& a, const Vec& t);

struct ActionTraceWitness {
  Vec a;
  Vec t;
};

/// Canonical solution of t.a = 1_A with t the chosen integral generator,
/// if one exists.
std::optional<ActionTraceWitness> trace_one_witness(const ModuleAlgebraAction& act);

}  // namespace froblab
