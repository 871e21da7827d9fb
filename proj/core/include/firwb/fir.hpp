#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "firwb/semilinear.hpp"

namespace firwb {

/// All injections [n] -> [m] as image tuples, in lexicographic order.
std::vector<Label> injections(std::uint32_t n, std::uint32_t m);

/// Formal sum of injections [n] -> [m] weighted by rational functions in
/// t_1..t_m.
class FirMorphism {
 public:
  FirMorphism() = default;
  FirMorphism(std::uint32_t source, std::uint32_t target) : src_(source), tgt_(target) {}
  static FirMorphism identity(std::uint32_t n);
  /// c [phi]; validates phi and the variables of c.
  static FirMorphism single(std::uint32_t source, std::uint32_t target, Label phi, const RatFunc& c);

  std::uint32_t source() const { return src_; }
  std::uint32_t target() const { return tgt_; }
  const std::map<Label, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(const Label& phi) const;

  void add_term(Label phi, const RatFunc& c);
  FirMorphism operator+(const FirMorphism& o) const;
  FirMorphism operator-(const FirMorphism& o) const;
  FirMorphism scaled(const RatFunc& c) const;

  friend bool operator==(const FirMorphism& a, const FirMorphism& b) {
    return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const FirMorphism& a, const FirMorphism& b) { return !(a == b); }

 private:
  std::uint32_t src_ = 0;
  std::uint32_t tgt_ = 0;
  std::map<Label, RatFunc> terms_;
};

/// g after f for f: [n] -> [m], g: [m] -> [u]. Throws ObjectMismatch.
FirMorphism compose(const FirMorphism& f, const FirMorphism& g);

/// t_i -> xi_i.
RatFunc t_to_xi(const RatFunc& c);
/// xi_i -> t_i.
RatFunc xi_to_t(const RatFunc& c);

/// The map J^m -> J^n with e_(1..m) -> sum c(phi)(xi) e_(phi(1..n)).
StdMap realize(const FirMorphism& f);

}  // namespace firwb
