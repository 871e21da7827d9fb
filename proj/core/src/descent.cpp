#include "firwb/descent.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "firwb/error.hpp"

namespace firwb {

GroupAction::GroupAction(std::size_t n, std::vector<Perm> generators) : n_(n), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (g.size() != n || !is_permutation(g)) fail(ErrorKind::InvalidInput, "generator is not a permutation of [n]");
  }
  Perm id = identity_perm(n);
  elems_.push_back(id);
  index_[id] = 0;
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    for (const auto& g : gens_) {
      Perm h = g * elems_[k];
      if (index_.emplace(h, elems_.size()).second) elems_.push_back(h);
    }
  }
}

GroupAction GroupAction::symmetric(std::size_t n) {
  std::vector<Perm> gens;
  for (std::uint32_t i = 1; i < n; ++i) gens.push_back(transposition(n, i, i + 1));
  return GroupAction(n, gens);
}

std::size_t GroupAction::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) fail(ErrorKind::InvalidInput, "permutation is not in the group");
  return it->second;
}

SemilinearRep SemilinearRep::from_generators(GroupAction action, std::size_t dim,
                                             const std::vector<ExactMatrix>& gen_mats) {
  if (gen_mats.size() != action.generators().size()) fail(ErrorKind::InvalidInput, "one matrix per generator expected");
  for (const auto& m : gen_mats) {
    if (m.rows() != dim || m.cols() != dim) fail(ErrorKind::InvalidInput, "matrix size differs from dim");
  }
  SemilinearRep rep(std::move(action), dim);
  const auto& elems = rep.action_.elements();
  std::vector<std::optional<ExactMatrix>> mats(elems.size());
  mats[0] = ExactMatrix::identity(dim);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < gen_mats.size(); ++g) {
      const Perm& s = rep.action_.generators()[g];
      std::size_t h = rep.action_.index_of(s * elems[k]);
      ExactMatrix m = gen_mats[g] * act(s, *mats[k]);
      if (!mats[h]) {
        mats[h] = std::move(m);
        queue.push_back(h);
      } else if (*mats[h] != m) {
        fail(ErrorKind::DescentFailure, "generator matrices violate the cocycle rule");
      }
    }
  }
  for (auto& m : mats) rep.mats_.push_back(std::move(*m));
  return rep;
}

SemilinearRep SemilinearRep::from_elements(GroupAction action, std::size_t dim, std::vector<ExactMatrix> mats) {
  if (mats.size() != action.order()) fail(ErrorKind::InvalidInput, "one matrix per group element expected");
  for (const auto& m : mats) {
    if (m.rows() != dim || m.cols() != dim) fail(ErrorKind::InvalidInput, "matrix size differs from dim");
  }
  SemilinearRep rep(std::move(action), dim);
  rep.mats_ = std::move(mats);
  return rep;
}

SemilinearRep SemilinearRep::coboundary(GroupAction action, const ExactMatrix& b) {
  SemilinearRep rep(std::move(action), b.rows());
  for (const auto& s : rep.action_.elements()) rep.mats_.push_back(b * inverse(act(s, b)));
  return rep;
}

Vec SemilinearRep::act_on(std::size_t element, const Vec& v) const {
  return mats_[element].apply(act(action_.elements()[element], v));
}

bool SemilinearRep::is_consistent() const {
  // The rule for generator times arbitrary element implies it for all
  // pairs by induction on word length.
  const auto& elems = action_.elements();
  if (mats_[0] != ExactMatrix::identity(dim_)) return false;
  for (const auto& s : action_.generators()) {
    const ExactMatrix& ms = matrix(s);
    for (std::size_t b = 0; b < elems.size(); ++b) {
      std::size_t sb = action_.index_of(s * elems[b]);
      if (mats_[sb] != ms * act(s, mats_[b])) return false;
    }
  }
  return true;
}

void SemilinearRep::validate() const {
  if (!is_consistent()) fail(ErrorKind::DescentFailure, "matrices violate the cocycle rule");
}

bool is_fixed(const SemilinearRep& rep, const Vec& v) {
  for (std::size_t k = 1; k < rep.action().order(); ++k) {
    if (rep.act_on(k, v) != v) return false;
  }
  return true;
}

std::vector<Monomial> graded_monomials(std::size_t n, std::size_t count) {
  std::vector<Monomial> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<Monomial> layer{Monomial()};
  while (out.size() < count) {
    for (const auto& m : layer) {
      if (out.size() == count) break;
      out.push_back(m);
    }
    std::set<std::vector<Monomial::Entry>> seen;
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      for (std::uint32_t i = 1; i <= n; ++i) {
        Monomial x = m * Monomial::of(xi(i));
        if (seen.insert(x.entries()).second) next.push_back(x);
      }
    }
    std::sort(next.begin(), next.end(), [](const Monomial& a, const Monomial& b) { return grlex_cmp(a, b) > 0; });
    layer = std::move(next);
  }
  return out;
}

std::vector<Vec> invariant_vectors(const SemilinearRep& rep) {
  rep.validate();
  const std::size_t d = rep.dim();
  const auto& elems = rep.action().elements();
  const std::size_t budget = d * elems.size() * 16;
  IndependenceTracker tracker(d, rep.matrix(std::size_t{0}).modulus(), false);
  std::size_t probes = 0;
  std::size_t batch = std::max<std::size_t>(1, budget / std::max<std::size_t>(1, d));
  auto monos = graded_monomials(rep.action().n(), batch);
  for (const auto& mono : monos) {
    RatFunc a(Poly::term(mono, Scalar(1)));
    for (std::size_t j = 0; j < d && tracker.rank() < d; ++j) {
      if (++probes > budget) break;
      Vec t(d);
      for (std::size_t k = 0; k < elems.size(); ++k) {
        RatFunc sa = act(elems[k], a);
        const ExactMatrix& m = rep.matrix(k);
        for (std::size_t i = 0; i < d; ++i) {
          if (!m(i, j).is_zero()) t[i] += m(i, j) * sa;
        }
      }
      tracker.add(t);
    }
    if (tracker.rank() == d || probes > budget) break;
  }
  if (tracker.rank() < d) fail(ErrorKind::DescentFailure, "probe budget exhausted before spanning");
  return tracker.accepted();
}

bool verify_descent(const SemilinearRep& rep, const std::vector<Vec>& vectors) {
  if (vectors.size() != rep.dim()) return false;
  for (const auto& v : vectors) {
    if (v.size() != rep.dim() || !is_fixed(rep, v)) return false;
  }
  if (vectors.empty()) return true;
  return rank(ExactMatrix::from_rows(vectors, rep.dim())) == rep.dim();
}

}  // namespace firwb
