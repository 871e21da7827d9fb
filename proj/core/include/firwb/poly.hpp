#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "firwb/scalar.hpp"

namespace firwb {

/// Variable families: xi (printed x<k>) for the symmetric-group variables,
/// u for the shifted base-field variables, t for the FIR coefficient
/// variables.
enum class Family : std::uint8_t { xi = 0, u = 1, t = 2 };

/// A variable packed as family-major, index-minor so that integer order is
/// the variable order.
class Var {
 public:
  constexpr Var() = default;
  constexpr Var(Family family, std::uint32_t index)
      : id_((static_cast<std::uint32_t>(family) << 24) | index) {}
  static constexpr Var from_id(std::uint32_t id) {
    Var v;
    v.id_ = id;
    return v;
  }

  constexpr Family family() const { return static_cast<Family>(id_ >> 24); }
  constexpr std::uint32_t index() const { return id_ & 0xFFFFFFu; }
  constexpr std::uint32_t id() const { return id_; }
  std::string name() const;

  friend constexpr auto operator<=>(Var, Var) = default;

 private:
  std::uint32_t id_ = 0;
};

inline Var xi(std::uint32_t i) { return Var(Family::xi, i); }
inline Var uvar(std::uint32_t i) { return Var(Family::u, i); }
inline Var tvar(std::uint32_t i) { return Var(Family::t, i); }

/// Sparse exponent vector, sorted by variable id, no zero exponents.
class Monomial {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (var id, exponent)

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries);
  static Monomial of(Var v, std::uint32_t e = 1);

  const std::vector<Entry>& entries() const { return e_; }
  bool is_one() const { return e_.empty(); }
  std::uint32_t degree() const { return deg_; }
  std::uint32_t degree_in(std::uint32_t var) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& b) const;
  /// b / a, requires divides.
  Monomial quotient_of(const Monomial& b) const;
  Monomial without(std::uint32_t var) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

 private:
  std::vector<Entry> e_;
  std::uint32_t deg_ = 0;
};

/// Graded lexicographic comparison: -1, 0, 1.
int grlex_cmp(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) < 0; }
};

struct Term {
  Monomial mono;
  Scalar coef;
};

/// Multivariate polynomial over the base field; terms are kept in strictly
/// decreasing graded-lex order with nonzero coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(Scalar c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly variable(Var v);
  static Poly term(Monomial m, Scalar c);
  /// Accepts terms in any order; combines duplicates and drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  Scalar constant_value() const;
  const Term& leading() const { return terms_.front(); }
  const Scalar& lc() const { return terms_.front().coef; }
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::uint32_t var) const;
  std::set<std::uint32_t> variables() const;
  std::uint64_t modulus() const;
  std::size_t size() const { return terms_.size(); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  Poly scaled(const Scalar& c) const;
  Poly times_monomial(const Monomial& m, const Scalar& c) const;
  Poly pow(unsigned e) const;
  Poly monic() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Quotient if b divides a exactly.
  static std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
  /// Monic gcd (gcd(0,0) = 0).
  static Poly gcd(const Poly& a, const Poly& b);

  /// Apply a variable-id map (must be injective on the support to keep the
  /// result meaningful; callers check).
  Poly rename(const std::function<std::uint32_t(std::uint32_t)>& f) const;
  /// Substitute constants for some variables.
  Poly substitute(const std::map<std::uint32_t, Scalar>& values) const;
  /// Substitute polynomials for variables (simultaneously).
  Poly compose(const std::map<std::uint32_t, Poly>& values) const;
  /// Evaluate in F_P at the given point; false if a coefficient is not
  /// representable.
  bool eval_mod(std::uint64_t P, const std::function<std::uint64_t(std::uint32_t)>& point,
                std::uint64_t& out) const;

  /// View as a univariate polynomial in `var`: coefficient of var^i at [i].
  std::vector<Poly> coefficients_in(std::uint32_t var) const;
  static Poly from_coefficients(std::uint32_t var, const std::vector<Poly>& coeffs);

  /// Total order used for hashing-free containers and deterministic output.
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  std::vector<Term> terms_;
};

}  // namespace firwb
