#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "firwb/fir.hpp"

namespace firwb {

/// Cokernel of sum_j P^{a_j} -> sum_i P^{n_i}; entry (j, i) lies in
/// Hom_FIR([a_j], [n_i]) and may be absent.
struct Presentation {
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> rel_degrees;
  std::vector<std::vector<std::optional<FirMorphism>>> rels;

  static Presentation free(std::vector<std::uint32_t> gens);
  /// Fills rel_degrees from the entries where missing and checks shapes,
  /// degrees and a_j <= n_i for nonzero entries.
  void validate();
  std::uint32_t max_degree() const;
  void add_relation(std::uint32_t degree, std::vector<std::optional<FirMorphism>> row);
  Presentation direct_sum(const Presentation& o) const;
};

/// Rows: labels of sum_j J^{a_j}; columns: labels of sum_i J^{n_i}.
ExactMatrix relation_matrix(const Presentation& p, std::uint32_t N);
/// Dimension of the kernel of the realized relation map at level N.
std::size_t dual_level_dim(const Presentation& p, std::uint32_t N);

/// Integer coordinates in the basis of the classes of I^r.
using ClassVector = std::map<std::uint32_t, long long>;

struct ClassFit {
  ClassVector cls;
  std::uint32_t first_level = 0;
  std::vector<std::size_t> dims;  // at first_level, first_level + 1, ...
};

/// Solves dims(N) = sum_r a_r binom(N, r), r <= max_r, on max_r + 1
/// consecutive levels from n0 and checks two further levels. Throws
/// InconsistentFit.
ClassFit fit_class(const std::function<std::size_t(std::uint32_t)>& dims, std::uint32_t n0, std::uint32_t max_r);
/// Fit starting at max degree + number of relations.
ClassFit grothendieck_fit(const Presentation& p);
ClassVector grothendieck_class(const Presentation& p);
long long euler_pairing(std::uint32_t r, const ClassVector& c);
ClassVector operator+(const ClassVector& a, const ClassVector& b);

/// M([n]) for n the top generator degree, as a K_n-semilinear
/// representation of S_n.
struct TopEvaluation {
  std::uint32_t n = 0;
  std::vector<std::size_t> top_gens;  // generator indices of degree n
  std::vector<Label> perms;           // lex order
  /// Relation span in coordinates (generator, perm), reduced echelon form.
  RrefResult relations;
  /// Coordinates kept in the quotient (non-pivot).
  std::vector<std::size_t> kept;
  SemilinearRep rep;
};
TopEvaluation top_degree_evaluate(const Presentation& p);

/// Finite-dimensional k-subspace of k(t), written in t_1, in canonical
/// basis (common denominator, reduced numerators).
struct SubspaceV {
  std::vector<RatFunc> basis;
  std::uint32_t complete_up_to_degree = 0;
  std::uint64_t modulus = 0;

  std::size_t dim() const { return basis.size(); }
  /// Canonicalizes; throws DependentBasis if the functions are dependent.
  static SubspaceV from_functions(const std::vector<RatFunc>& fs, std::uint64_t modulus = 0);
  bool contains(const RatFunc& a) const;
  bool contains(const SubspaceV& o) const;
  friend bool operator==(const SubspaceV& a, const SubspaceV& b) { return a.basis == b.basis; }
};

/// Denominator forced on c by sum_j A_j(t) c(t_j) = 0 with A nonzero
/// somewhere: a pole of c at pi(t_j) must be absorbed by A_j or by a
/// denominator of another A_k. Returns nullopt if all A_j vanish.
std::optional<Poly> forced_denominator(const std::map<std::uint32_t, RatFunc>& a, Family family);

/// {c in k(t) : c[empty] composed with each f_i vanishes}, searched with
/// numerators of degree <= D over the forced denominator.
SubspaceV kernel_from_P1(const std::vector<FirMorphism>& fs, std::uint32_t D);
/// True if c[empty] composed with every f_i is zero.
bool annihilated_by(const RatFunc& c, const std::vector<FirMorphism>& fs);

/// Cofactor expansion along the symbolic first row of the matrix with
/// rows (a_i(xi_1), ..., a_i(xi_{n+1})). Throws DependentBasis.
TruncElement subspace_to_generator(const SubspaceV& v);
/// {a : e_i -> a(xi_i) kills every generator}.
SubspaceV generator_to_subspace(const std::vector<TruncElement>& gens, std::uint32_t D);
/// Sum of g's coefficients times a(xi_i).
RatFunc apply_functional(const RatFunc& a, const TruncElement& g);

/// Codimension of the submodule generated by g at level N, certified from
/// both sides: translates give a lower bound on its dimension and the
/// functionals of V, independent and annihilating, an upper bound.
struct CodimCertificate {
  std::uint32_t level = 0;
  std::size_t span_rank = 0;
  bool annihilated = false;
  bool functionals_independent = false;
  bool holds(std::size_t n) const {
    return annihilated && functionals_independent && span_rank + n == level;
  }
};
CodimCertificate codim_certificate(const SubspaceV& v, const TruncElement& g, std::uint32_t N);

/// sum_i J^{n_i} -> sum_j J^{a_j}, the realized relations.
StdMap relation_map(const Presentation& p);

/// (Q^r)^d summands; the dual object is the sum of the I^r.
struct RefinedProjective {
  std::map<std::uint32_t, std::uint32_t> multiplicity;  // degree -> d

  static RefinedProjective of(const StdObject& dual);
  bool empty() const { return multiplicity.empty(); }
  std::uint32_t max_degree() const;
  std::size_t level_dim(std::uint32_t N) const;
};

/// Checks of a dual complex 0 -> Phi(M) -> E_0 -> E_1 -> ... at one level.
/// Ranks are modular lower bounds; the identities below force them exact.
struct LevelCheck {
  std::uint32_t level = 0;
  std::size_t dual_dim = 0;
  std::vector<std::size_t> dims;   // dim E_i
  std::vector<std::size_t> ranks;  // rank of E_i -> E_{i+1}
  bool injective = false;          // Phi(M) -> E_0
  bool exact = false;
  long long euler = 0;             // sum (-1)^i dim E_i
};

/// Cover of M by (Q^n)^d plus refined lower generators, in dual form: the
/// augmentation sum J^{n_i} -> E_0 restricts to an injection of Phi(M).
struct CoverStep {
  std::uint32_t n = 0;
  StdObject dual;
  RefinedProjective cover;
  StdMap augmentation;
  std::size_t top_multiplicity = 0;
  std::size_t top_dimension = 0;  // dim over K_n of M([n])
  std::size_t invariant_count = 0;
  ClassVector kernel_class;
  std::vector<LevelCheck> checks;
  bool certified() const;
};
CoverStep projective_cover_step(const Presentation& p);

/// 0 -> P_len -> ... -> P_0 -> M -> 0 for max degree <= 2, in dual form:
/// differentials E_i -> E_{i+1} between sums of I^r, the augmentation
/// gamma: sum J^{n_i} -> E_0 and rho: sum J^{a_j} -> E_1 with
/// d_0 gamma = rho R. Redundant relations are removed first.
struct Resolution {
  std::uint32_t n = 0;
  Presentation used;
  std::vector<std::size_t> dropped;  // indices into the input relations
  std::vector<StdObject> duals;
  std::vector<RefinedProjective> terms;
  StdMap augmentation;
  StdMap rho;
  std::vector<StdMap> differentials;
  std::vector<LevelCheck> checks;
  bool composites_zero = false;
  bool degrees_ok = false;
  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
  bool certified() const;
};
/// Throws DegreeBoundExceeded for n > 2 and SyzygySearchExhausted when the
/// degree-bounded syzygy search does not yield an exact complex.
Resolution resolve(const Presentation& p, std::uint32_t D = 6);
/// Levels at which dual dimensions are binomial: from max degree plus the
/// number of relations.
std::uint32_t stable_level(const Presentation& p);

}  // namespace firwb
