#pragma once

#include <cstdint>
#include <vector>

#include "firwb/ratfunc.hpp"

namespace firwb {

/// Linear functional equations in unknown one-variable rational functions
/// and unknown constants. Function k is sought as P_k(s)/Q_k(s) with Q_k
/// fixed and deg P_k <= bound; every equation must vanish identically.
class FunctionalSystem {
 public:
  /// s is the variable in which unknown functions are written.
  FunctionalSystem(Var s, std::uint64_t field_modulus) : s_(s), p_(field_modulus) {}

  std::size_t add_function(const Poly& den, std::uint32_t num_degree);
  std::size_t add_constant();

  struct Term {
    RatFunc coef;
    bool constant = false;
    std::size_t unknown = 0;
    Var arg;  // argument of an unknown function
  };
  void add_equation(std::vector<Term> terms);

  struct Solution {
    std::vector<RatFunc> functions;
    std::vector<Scalar> constants;
  };
  /// A basis of the solution space within the ansatz.
  std::vector<Solution> solve() const;

  std::size_t function_count() const { return funcs_.size(); }
  std::size_t constant_count() const { return nconst_; }

 private:
  struct Func {
    Poly den;
    std::uint32_t deg;
    std::size_t offset;
  };
  Var s_;
  std::uint64_t p_;
  std::vector<Func> funcs_;
  std::size_t nconst_ = 0;
  std::size_t nunknowns_ = 0;
  std::vector<std::size_t> const_offset_;
  std::vector<std::vector<Term>> eqs_;
};

/// Univariate content of f in var: the gcd of its coefficients when f is
/// viewed as a polynomial in the other variables over k[var].
Poly univariate_content(const Poly& f, std::uint32_t var);

/// Canonical basis of the k-span of one-variable functions: common
/// denominator and reduced echelon numerators. Independent input gives a
/// basis of the same size.
std::vector<RatFunc> canonical_span(const std::vector<RatFunc>& fs, Var s);

}  // namespace firwb
