#pragma once

#include <cstdint>
#include <vector>

#include "firwb/matrix.hpp"

namespace firwb {

/// Permutation of [n] stored as images: p[i-1] = p(i).
using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::size_t n);
/// (a * b)(i) = a(b(i)).
Perm operator*(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
Perm transposition(std::size_t n, std::uint32_t i, std::uint32_t j);
bool is_permutation(const Perm& p);
/// All permutations of [n] in lexicographic order of image tuples.
std::vector<Perm> all_perms(std::size_t n);

/// xi_i -> xi_{p(i)} for i <= |p|; other variables untouched.
RatFunc act(const Perm& p, const RatFunc& f);
Vec act(const Perm& p, const Vec& v);
ExactMatrix act(const Perm& p, const ExactMatrix& m);

}  // namespace firwb
