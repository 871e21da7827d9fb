#include "firwb/perm.hpp"

#include <algorithm>
#include <numeric>

#include "firwb/error.hpp"

namespace firwb {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1u);
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) fail(ErrorKind::InvalidInput, "permutation sizes differ");
  Perm c(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i] - 1];
  return c;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<std::uint32_t>(i + 1);
  return q;
}

Perm transposition(std::size_t n, std::uint32_t i, std::uint32_t j) {
  Perm p = identity_perm(n);
  std::swap(p[i - 1], p[j - 1]);
  return p;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v < 1 || v > p.size() || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

std::vector<Perm> all_perms(std::size_t n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

RatFunc act(const Perm& p, const RatFunc& f) {
  if (f.is_constant()) return f;
  std::map<std::uint32_t, std::uint32_t> j;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != i + 1) j[static_cast<std::uint32_t>(i + 1)] = p[i];
  }
  if (j.empty()) return f;
  return f.rename_indices(Family::xi, j);
}

Vec act(const Perm& p, const Vec& v) {
  Vec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = act(p, v[i]);
  return w;
}

ExactMatrix act(const Perm& p, const ExactMatrix& m) {
  return m.map([&](const RatFunc& f) { return act(p, f); });
}

}  // namespace firwb
