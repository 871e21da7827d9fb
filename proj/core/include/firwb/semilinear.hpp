#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "firwb/descent.hpp"

namespace firwb {

enum class Kind : std::uint8_t { I, J };

struct Summand {
  Kind kind;
  std::uint32_t degree;
  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Direct sum of I^r and J^n over k(u_1..u_base)(xi_1, xi_2, ...).
struct StdObject {
  std::vector<Summand> summands;
  std::uint32_t base = 0;

  static StdObject I(std::uint32_t r) { return {{{Kind::I, r}}, 0}; }
  static StdObject J(std::uint32_t n) { return {{{Kind::J, n}}, 0}; }
  StdObject operator+(const StdObject& o) const;
  std::uint32_t max_degree() const;
  std::size_t level_dim(std::uint32_t N) const;
  friend bool operator==(const StdObject&, const StdObject&) = default;
};

/// I labels are increasing tuples (subsets), J labels are ordered tuples of
/// distinct elements.
using Label = std::vector<std::uint32_t>;

/// All labels of a summand at level N in lexicographic order.
std::vector<Label> labels(const Summand& s, std::uint32_t N);
std::size_t label_count(const Summand& s, std::uint32_t N);
bool valid_label(const Summand& s, const Label& l, std::uint32_t N);
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
std::uint64_t falling(std::uint64_t n, std::uint64_t k);

using Coord = std::pair<std::size_t, Label>;

/// Element of the level-N truncation: finitely many (summand, label) -> coefficient.
class TruncElement {
 public:
  TruncElement() = default;
  TruncElement(StdObject object, std::uint32_t level) : obj_(std::move(object)), level_(level) {}
  /// The basis vector e_label in the given summand.
  static TruncElement basis(const StdObject& object, std::uint32_t level, std::size_t summand, Label label);

  const StdObject& object() const { return obj_; }
  std::uint32_t level() const { return level_; }
  const std::map<Coord, RatFunc>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  RatFunc get(std::size_t summand, const Label& label) const;

  /// Adds c to a coordinate; throws InvalidLabel.
  void add(std::size_t summand, Label label, const RatFunc& c);
  TruncElement& operator+=(const TruncElement& o);
  TruncElement& operator-=(const TruncElement& o);
  TruncElement scaled(const RatFunc& c) const;
  /// Same coordinates viewed at a larger level.
  TruncElement at_level(std::uint32_t N) const;
  /// sigma acting on labels and xi variables together.
  TruncElement act(const Perm& sigma) const;
  TruncElement map_coefficients(const std::function<RatFunc(const RatFunc&)>& f) const;

  /// Coordinates in the order of labels(), summand-major.
  Vec to_vector() const;
  static TruncElement from_vector(const StdObject& object, std::uint32_t level, const Vec& v);

  friend bool operator==(const TruncElement& a, const TruncElement& b) {
    return a.obj_ == b.obj_ && a.level_ == b.level_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const TruncElement& a, const TruncElement& b) { return !(a == b); }

 private:
  StdObject obj_;
  std::uint32_t level_ = 0;
  std::map<Coord, RatFunc> coords_;
};

/// Labels inside [r], coefficients in xi_1..xi_r (u variables allowed) and
/// fixed by every adjacent transposition of [r].
bool check_invariance(const TruncElement& e, std::uint32_t r);

/// Map of standard objects given by the image of each source generator:
/// eps_r for an I^r summand, e_(1..n) for a J^n summand, at level = degree.
class StdMap {
 public:
  StdMap() = default;
  /// Validates label and variable support and I-summand invariance;
  /// throws ObjectMismatch or InvalidInput.
  StdMap(StdObject source, StdObject target, std::vector<TruncElement> images);
  static StdMap identity(const StdObject& obj);
  static StdMap zero(const StdObject& source, const StdObject& target);

  const StdObject& source() const { return src_; }
  const StdObject& target() const { return tgt_; }
  const std::vector<TruncElement>& images() const { return images_; }

  friend bool operator==(const StdMap& a, const StdMap& b) {
    return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.images_ == b.images_;
  }
  StdMap operator+(const StdMap& o) const;
  StdMap operator-(const StdMap& o) const;
  bool is_zero() const;

 private:
  StdObject src_;
  StdObject tgt_;
  std::vector<TruncElement> images_;
};

/// Image of e_label (source summand) at level N: the generator image moved by
/// the permutation i -> label[i].
TruncElement apply(const StdMap& f, std::size_t summand, const Label& label, std::uint32_t N);
/// Image of an arbitrary element.
TruncElement apply(const StdMap& f, const TruncElement& x);
/// Columns: source labels; rows: target labels (summand-major, lex).
ExactMatrix level_matrix(const StdMap& f, std::uint32_t N);
/// g after f.
StdMap compose(const StdMap& g, const StdMap& f);
/// Direct sum of maps, block diagonal.
StdMap direct_sum(const StdMap& a, const StdMap& b);

struct HomBasis {
  /// e_S for S in [r], |S| = s: a K_r-basis of the S^r-invariants of I^s.
  std::vector<TruncElement> k_basis;
  /// S_r-invariant spanning set obtained by descent.
  std::vector<TruncElement> invariant;
};
HomBasis hom_basis(std::uint32_t r, std::uint32_t s);

/// Sigma^1(I^r) ~ I^r + I^{r-1} over k(u_1). Elements of the shifted object
/// are I^r elements at level N+1 in the original coordinates.
class ShiftDecomposition {
 public:
  explicit ShiftDecomposition(std::uint32_t r);
  std::uint32_t r() const { return r_; }
  StdObject split_object() const;
  TruncElement forward(const TruncElement& x) const;
  TruncElement backward(const TruncElement& y) const;
  /// Level-N matrices (shifted level N = original level N + 1).
  ExactMatrix forward_matrix(std::uint32_t N) const;
  ExactMatrix backward_matrix(std::uint32_t N) const;
  /// sigma^sharp: 1 fixed, i+1 -> sigma(i)+1.
  static Perm sharp(const Perm& sigma);

 private:
  std::uint32_t r_;
};

/// Matrix of Omega^n(M) -> Sigma^n(M): columns are labels of M at level
/// N - n, rows labels of M at level N, e_L -> e_{L+n}.
ExactMatrix omega_to_sigma(const StdObject& m, std::uint32_t n, std::uint32_t N);

/// The map I^r -> I^r + I^{r-1} (over k(u_1)) obtained from phi_{I^r} and
/// the shift decomposition.
StdMap phi_decomposed(std::uint32_t r);

/// Whether the level-N cokernel of f is spanned by the image of f together
/// with orbits of the target summands generated in degree <= g. Requires
/// N >= g + 2.
bool generated_in_degree(const StdMap& f, std::uint32_t g, std::uint32_t N);

/// J^n ~ (I^n)^{n!} by descent: to_j sends the k-th I^n generator to the
/// k-th invariant vector of J^n at level n; from_j is its inverse.
struct JStructure {
  StdMap to_j;
  StdMap from_j;
};
JStructure j_structure(std::uint32_t n);

}  // namespace firwb
