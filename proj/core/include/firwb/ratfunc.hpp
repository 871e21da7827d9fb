#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "firwb/poly.hpp"

namespace firwb {

/// Rational function in canonical form: gcd(num, den) = 1 and den monic
/// under graded-lex order. Zero is 0/1. Equal fractions have identical
/// representations, so equality is structural.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Poly(c)) {}             // NOLINT(google-explicit-constructor)
  RatFunc(Scalar c) : RatFunc(Poly(std::move(c))) {}  // NOLINT(google-explicit-constructor)

  /// Canonical num/den; throws ZeroDenominator.
  static RatFunc normalize(const Poly& num, const Poly& den);
  static RatFunc variable(Var v) { return RatFunc(Poly::variable(v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value().is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Scalar constant_value() const { return num_.constant_value(); }
  std::set<std::uint32_t> variables() const;
  std::uint64_t modulus() const;
  /// num terms + den terms, used as a pivoting heuristic.
  std::size_t weight() const { return num_.size() + den_.size(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }
  RatFunc inverse() const;
  RatFunc pow(int e) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  friend bool operator<(const RatFunc& a, const RatFunc& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  /// Rename variable ids; throws NonInjectiveMap if two variables in the
  /// support collide.
  RatFunc rename(const std::function<std::uint32_t(std::uint32_t)>& f) const;
  /// Rename indices of one family through an index map i -> j(i); indices
  /// absent from the map are left alone.
  RatFunc rename_indices(Family family, const std::map<std::uint32_t, std::uint32_t>& j) const;
  /// Substitute base-field values; throws DenominatorVanishes.
  RatFunc eval_at(const std::map<Var, Scalar>& assignment) const;
  /// Substitute rational functions for variables simultaneously.
  RatFunc compose(const std::map<std::uint32_t, RatFunc>& values) const;
  /// Value in F_P at a point; false if undefined there.
  bool eval_mod(std::uint64_t P, const std::function<std::uint64_t(std::uint32_t)>& point,
                std::uint64_t& out) const;

  /// Move into F_p (no-op for p = 0).
  RatFunc to_field(std::uint64_t p) const;

 private:
  Poly num_;
  Poly den_;
};

/// Parse the text grammar: x<k>, u<k>, t<k>, integers, + - * / ^, parens.
/// Integer literals are placed in F_p when p != 0.
RatFunc parse_ratfunc(const std::string& text, std::uint64_t p = 0);
std::string to_string(const Poly& p);
std::string to_string(const RatFunc& f);

}  // namespace firwb
