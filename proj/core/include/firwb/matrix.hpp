#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "firwb/ratfunc.hpp"

namespace firwb {

using Vec = std::vector<RatFunc>;

/// Dense matrix over the rational function field.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static ExactMatrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RatFunc& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const RatFunc& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  ExactMatrix transposed() const;
  ExactMatrix map(const std::function<RatFunc(const RatFunc&)>& f) const;
  /// Horizontal concatenation [this | b].
  ExactMatrix hcat(const ExactMatrix& b) const;
  ExactMatrix vcat(const ExactMatrix& b) const;
  bool is_zero() const;
  std::uint64_t modulus() const;

  Vec apply(const Vec& v) const;
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatFunc> a_;
};

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  ExactMatrix reduced;
};

/// Reduced row echelon form; pivots chosen by smallest representation
/// weight within the column.
RrefResult rref(const ExactMatrix& m);
/// Basis of {v : m v = 0}, one vector per free column.
std::vector<Vec> kernel_basis(const ExactMatrix& m);
/// Exact rank: a modular specialization lower bound is accepted when it
/// equals min(rows, cols); otherwise exact elimination decides.
std::size_t rank(const ExactMatrix& m);
/// Independent fraction-free (Bareiss) elimination on the matrix with
/// row denominators cleared.
std::size_t rank_bareiss(const ExactMatrix& m);
/// Lower bound on the rank from evaluations at pseudo-random points.
std::size_t modular_rank_bound(const ExactMatrix& m, int tries = 2);
RatFunc determinant(const ExactMatrix& m);
/// Some x with a x = b, or nullopt.
std::optional<Vec> solve(const ExactMatrix& a, const Vec& b);
/// Throws DependentBasis if singular.
ExactMatrix inverse(const ExactMatrix& m);

/// Evaluation of rational functions at a deterministic pseudo-random point
/// modulo a prime: 2^61-1 over Q, p itself over F_p.
class Specializer {
 public:
  Specializer(std::uint64_t field_modulus, std::uint64_t seed);
  std::uint64_t prime() const { return P_; }
  std::uint64_t point(std::uint32_t var) const;
  bool eval(const RatFunc& f, std::uint64_t& out) const;

 private:
  std::uint64_t P_;
  std::uint64_t seed_;
};

/// Incremental rank over the function field. A vector independent at the
/// specialization point is certainly independent; a vector that looks
/// dependent there is re-examined exactly when `exact` is set.
class IndependenceTracker {
 public:
  IndependenceTracker(std::size_t dim, std::uint64_t field_modulus, bool exact = true,
                      std::uint64_t seed = 0x5eed);

  bool add(const Vec& v);
  std::size_t rank() const { return accepted_.size(); }
  const std::vector<Vec>& accepted() const { return accepted_; }

 private:
  bool reduce_mod(std::vector<std::uint64_t>& w) const;

  std::size_t dim_;
  Specializer spec_;
  bool exact_;
  std::vector<std::vector<std::uint64_t>> echelon_;
  std::vector<std::size_t> lead_;
  std::vector<Vec> accepted_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace firwb
