#pragma once

#include "froblab/frobenius.hpp"

namespace froblab {

/// A prime-field algebra small enough for exhaustive ideal-lattice work.
/// The cap is tighter than the submodule cap because primality testing
/// multiplies ideals pairwise across the whole lattice.
struct FiniteRingView {
  AlgebraPtr algebra;
};

/// Validates the field and the cap; throws EnumerationLimit past the cap and
/// InvalidInput over infinite fields.
FiniteRingView finite_ring_view(AlgebraPtr a);

/// Dimension cap for full ideal-lattice enumeration; FROBLAB_MAX_ENUM_DIM
/// overrides.
std::size_t ideal_lattice_cap(const FieldSpec& field);

/// All right ideals (right-multiplication-invariant subspaces), in the
/// deterministic subspace enumeration order.
std::vector<Subspace> right_ideals(const FiniteRingView& r);

/// All two-sided ideals.
std::vector<Subspace> two_sided_ideals(const FiniteRingView& r);

/// Proper two-sided ideals P such that IJ inside P forces I or J inside P,
/// over all pairs of two-sided ideals. Brute force on the lattice.
std::vector<Subspace> prime_ideals(const FiniteRingView& r);

/// Does the right ideal meet every nonzero right ideal nontrivially?
/// Throws InvalidInput when the subspace is not a right ideal.
bool is_essential(const FiniteRingView& r, const Subspace& ideal);

struct PrimeVerdict {
  Subspace prime;  // inside R
  bool bounded = true;
  /// An essential right ideal of R/P containing no nonzero two-sided ideal,
  /// in quotient coordinates, when boundedness fails.
  std::optional<Subspace> failing_essential;
};

/// Fully-bounded verdict: every quotient by a prime ideal is right bounded
/// (each essential right ideal contains a nonzero two-sided ideal).
/// Noetherian-ness is automatic for finite rings and recorded as such rather
/// than tested.
struct FbnReport {
  std::vector<PrimeVerdict> verdicts;
  bool noetherian = true;
  bool fully_bounded = true;

  bool fbn() const { return noetherian && fully_bounded; }
};

FbnReport is_right_fbn(const FiniteRingView& r);

/// Greedy finite subset of module elements whose joint annihilator already
/// equals the annihilator of the whole module. Elements are added only when
/// they strictly shrink the annihilator, so the subset has at most dim M
/// members.
std::vector<Vec> annihilator_witness(const RightModule& m);

/// Intersection of the kernels of a family of module maps out of p, as a
/// subspace of p.
Subspace hom_annihilator(const RightModule& p, const std::vector<Matrix>& maps);

/// Greedy finite subfamily of Hom(P, M) whose kernel intersection equals
/// that of the full hom space.
std::vector<Matrix> hom_witness(const RightModule& p, const RightModule& m);

/// Does every nonzero submodule of m receive a nonzero map from p?
bool is_module_faithful(const RightModule& p, const RightModule& m);

/// Do the images of Hom(P, M) jointly span m? At finite scale this is
/// equivalent to m being a quotient of a finite direct power of p.
bool is_finitely_generated_by(const RightModule& p, const RightModule& m);

/// Report form: m is p-faithful, and m is generated by q.
Report faithfulness_predicates(const RightModule& p, const RightModule& m, const RightModule& q);

/// The three transfer conditions between R, A and the invariant subalgebra B
/// of a character ring, evaluated by the exhaustive oracle, together with
/// the hypothesis flags under which they are provably equivalent.
struct TransferConditions {
  bool r_finitely_generated = true;  // over A; automatic at finite dimension
  bool a_noetherian = true;          // automatic for finite rings
  FbnReport a_fbn;
  FbnReport r_fbn;
  FbnReport b_fbn;
  AlgebraPtr b;  // the invariant subalgebra, presented on its own basis
  bool quasi_projective = false;
  bool frobenius_hypothesis = false;      // a verified system was supplied
  std::optional<Vec> projective_witness;  // q with chi(q) = 1, if any

  bool condition1() const { return r_finitely_generated && a_fbn.fbn(); }
  bool condition2() const { return r_fbn.fbn() && a_noetherian; }
  bool condition3() const { return b_fbn.fbn() && a_noetherian; }

  Report report;
};

/// Runs the FBN oracle on A, R and B and checks that the three conditions
/// agree (at finite scale all must hold). A supplied Frobenius system is
/// verified and its trace-one witness used for the projectivity flag;
/// otherwise the flag falls back to the character-level witness search.
TransferConditions fbn_transfer_report(const ARingWithCharacter& rc,
                                       const FrobeniusSystem* sys = nullptr);

}  // namespace froblab
