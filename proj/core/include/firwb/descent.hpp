#pragma once

#include <map>
#include <vector>

#include "firwb/perm.hpp"

namespace firwb {

/// A finite group of permutations of [n], acting on xi_1..xi_n.
class GroupAction {
 public:
  GroupAction() : GroupAction(0, {}) {}
  GroupAction(std::size_t n, std::vector<Perm> generators);
  /// The full symmetric group S_n, generated by adjacent transpositions.
  static GroupAction symmetric(std::size_t n);

  std::size_t n() const { return n_; }
  const std::vector<Perm>& generators() const { return gens_; }
  /// Enumerated by breadth-first search from the identity.
  const std::vector<Perm>& elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }
  std::size_t index_of(const Perm& p) const;

 private:
  std::size_t n_;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  std::map<Perm, std::size_t> index_;
};

/// A K_n-semilinear representation on K_n^d: sigma . v = M_sigma sigma(v),
/// so the matrices obey M_{st} = M_s s(M_t).
class SemilinearRep {
 public:
  SemilinearRep() : dim_(0) { mats_.emplace_back(0, 0); }
  /// Extends generator matrices to the whole group; throws DescentFailure
  /// if two words for the same element give different matrices.
  static SemilinearRep from_generators(GroupAction action, std::size_t dim, const std::vector<ExactMatrix>& gen_mats);
  /// Matrices for every element, in the order of action.elements().
  static SemilinearRep from_elements(GroupAction action, std::size_t dim, std::vector<ExactMatrix> mats);
  /// M_sigma = B sigma(B)^{-1}; always consistent.
  static SemilinearRep coboundary(GroupAction action, const ExactMatrix& b);

  const GroupAction& action() const { return action_; }
  std::size_t dim() const { return dim_; }
  const ExactMatrix& matrix(std::size_t element) const { return mats_[element]; }
  const ExactMatrix& matrix(const Perm& p) const { return mats_[action_.index_of(p)]; }
  const std::vector<ExactMatrix>& matrices() const { return mats_; }
  ExactMatrix& mutable_matrix(std::size_t element) { return mats_[element]; }

  /// sigma . v
  Vec act_on(std::size_t element, const Vec& v) const;
  /// Checks M_id = 1 and the cocycle rule M_{st} = M_s s(M_t).
  bool is_consistent() const;
  /// Throws DescentFailure if not consistent.
  void validate() const;

 private:
  SemilinearRep(GroupAction action, std::size_t dim) : action_(std::move(action)), dim_(dim) {}
  GroupAction action_;
  std::size_t dim_;
  std::vector<ExactMatrix> mats_;
};

bool is_fixed(const SemilinearRep& rep, const Vec& v);
/// d fixed vectors spanning V over K_n, from twisted trace probes
/// sum_sigma M_sigma sigma(a e_j). Throws DescentFailure when the probe
/// budget d |G| 16 runs out.
std::vector<Vec> invariant_vectors(const SemilinearRep& rep);
/// Each vector fixed, and exact rank equal to dim.
bool verify_descent(const SemilinearRep& rep, const std::vector<Vec>& vectors);

/// Monomials in xi_1..xi_n by increasing degree, grlex within a degree.
std::vector<Monomial> graded_monomials(std::size_t n, std::size_t count);

}  // namespace firwb
