#include "firwb/matrix.hpp"

#include <algorithm>

#include "firwb/error.hpp"

namespace firwb {

// ------------------------------------------------------------ ExactMatrix

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc(1);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorKind::InvalidInput, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  ExactMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) fail(ErrorKind::InvalidInput, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec ExactMatrix::row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Vec ExactMatrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

ExactMatrix ExactMatrix::map(const std::function<RatFunc(const RatFunc&)>& f) const {
  ExactMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k].is_zero() ? RatFunc() : f(a_[k]);
  return m;
}

ExactMatrix ExactMatrix::hcat(const ExactMatrix& b) const {
  if (b.rows_ != rows_) fail(ErrorKind::InvalidInput, "hcat row mismatch");
  ExactMatrix m(rows_, cols_ + b.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) m(i, cols_ + j) = b(i, j);
  }
  return m;
}

ExactMatrix ExactMatrix::vcat(const ExactMatrix& b) const {
  if (b.cols_ != cols_) fail(ErrorKind::InvalidInput, "vcat column mismatch");
  ExactMatrix m(rows_ + b.rows_, cols_);
  std::copy(a_.begin(), a_.end(), m.a_.begin());
  std::copy(b.a_.begin(), b.a_.end(), m.a_.begin() + static_cast<std::ptrdiff_t>(a_.size()));
  return m;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const RatFunc& x) { return x.is_zero(); });
}

std::uint64_t ExactMatrix::modulus() const {
  for (const auto& x : a_) {
    if (auto p = x.modulus()) return p;
  }
  return 0;
}

Vec ExactMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) fail(ErrorKind::InvalidInput, "vector length mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    RatFunc acc;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) acc += (*this)(i, j) * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::InvalidInput, "matrix product dimension mismatch");
  ExactMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RatFunc& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
      }
    }
  }
  return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::InvalidInput, "matrix sum dimension mismatch");
  ExactMatrix m(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = a.a_[k] + b.a_[k];
  return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::InvalidInput, "matrix difference dimension mismatch");
  ExactMatrix m(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = a.a_[k] - b.a_[k];
  return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

// ------------------------------------------------------------ elimination

RrefResult rref(const ExactMatrix& m) {
  RrefResult res;
  ExactMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t best = a.rows();
    std::size_t best_w = 0;
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      std::size_t w = a(i, c).weight();
      if (best == a.rows() || w < best_w) {
        best = i;
        best_w = w;
      }
    }
    if (best == a.rows()) continue;
    if (best != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(best, j));
    }
    RatFunc inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) {
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      RatFunc f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.reduced = std::move(a);
  return res;
}

std::vector<Vec> kernel_basis(const ExactMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = RatFunc(1);
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.reduced(k, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Specializer::Specializer(std::uint64_t field_modulus, std::uint64_t seed)
    : P_(field_modulus ? field_modulus : (1ULL << 61) - 1), seed_(seed) {}

std::uint64_t Specializer::point(std::uint32_t var) const {
  return splitmix64(seed_ * 0x100000001b3ULL + var) % P_;
}

bool Specializer::eval(const RatFunc& f, std::uint64_t& out) const {
  return f.eval_mod(P_, [this](std::uint32_t v) { return point(v); }, out);
}

namespace {

std::size_t mod_rank(std::vector<std::vector<std::uint64_t>> a, std::uint64_t P) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c]) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    std::uint64_t inv = invmod(a[r][c], P);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (!a[i][c]) continue;
      std::uint64_t f = mulmod(a[i][c], inv, P);
      for (std::size_t j = c; j < cols; ++j) {
        if (a[r][j]) a[i][j] = (a[i][j] + P - mulmod(f, a[r][j], P)) % P;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t modular_rank_bound(const ExactMatrix& m, int tries) {
  std::size_t best = 0;
  std::size_t full = std::min(m.rows(), m.cols());
  std::uint64_t p = m.modulus();
  for (int t = 0; t < tries + 4 && best < full; ++t) {
    Specializer s(p, 0xa5a5 + 7919ULL * static_cast<std::uint64_t>(t));
    std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
    bool ok = true;
    for (std::size_t i = 0; i < m.rows() && ok; ++i) {
      for (std::size_t j = 0; j < m.cols() && ok; ++j) {
        if (!m(i, j).is_zero()) ok = s.eval(m(i, j), a[i][j]);
      }
    }
    if (!ok) continue;
    best = std::max(best, mod_rank(std::move(a), s.prime()));
    if (t + 1 >= tries && best > 0) break;
  }
  return best;
}

std::size_t rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::size_t lb = modular_rank_bound(m);
  if (lb == std::min(m.rows(), m.cols())) return lb;
  return rref(m).rank;
}

std::size_t rank_bareiss(const ExactMatrix& m) {
  // Clear denominators row by row; rank is unchanged.
  std::vector<std::vector<Poly>> a(m.rows(), std::vector<Poly>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Poly l(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Poly& d = m(i, j).den();
      if (d.is_constant()) continue;
      Poly g = Poly::gcd(l, d);
      l = l * *Poly::divide_exact(d, g);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      a[i][j] = m(i, j).num() * *Poly::divide_exact(l, m(i, j).den());
    }
  }
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> colperm(cols);
  for (std::size_t j = 0; j < cols; ++j) colperm[j] = j;
  Poly prev(1);
  std::size_t k = 0;
  for (; k < std::min(rows, cols); ++k) {
    // find any nonzero pivot in the trailing block
    std::size_t pi = rows, pj = cols;
    for (std::size_t j = k; j < cols && pi == rows; ++j) {
      for (std::size_t i = k; i < rows; ++i) {
        if (!a[i][colperm[j]].is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == rows) break;
    std::swap(a[k], a[pi]);
    std::swap(colperm[k], colperm[pj]);
    const Poly piv = a[k][colperm[k]];
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        Poly num = piv * a[i][colperm[j]] - a[i][colperm[k]] * a[k][colperm[j]];
        auto q = Poly::divide_exact(num, prev);
        if (!q) fail(ErrorKind::InvalidInput, "internal: Bareiss division not exact");
        a[i][colperm[j]] = std::move(*q);
      }
      a[i][colperm[k]] = Poly();
    }
    prev = piv;
  }
  return k;
}

RatFunc determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::InvalidInput, "determinant of a non-square matrix");
  ExactMatrix a = m;
  std::size_t n = a.rows();
  RatFunc det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    for (std::size_t i = c; i < n; ++i) {
      if (!a(i, c).is_zero() && (best == n || a(i, c).weight() < a(best, c).weight())) best = i;
    }
    if (best == n) return RatFunc();
    if (best != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(best, j));
      det = -det;
    }
    det *= a(c, c);
    RatFunc inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      RatFunc f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) {
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
      }
    }
  }
  return det;
}

std::optional<Vec> solve(const ExactMatrix& a, const Vec& b) {
  if (b.size() != a.rows()) fail(ErrorKind::InvalidInput, "right-hand side length mismatch");
  ExactMatrix aug(a.rows(), 1);
  for (std::size_t i = 0; i < a.rows(); ++i) aug(i, 0) = b[i];
  RrefResult rr = rref(a.hcat(aug));
  Vec x(a.cols());
  for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
    if (rr.pivots[k] == a.cols()) return std::nullopt;
    x[rr.pivots[k]] = rr.reduced(k, a.cols());
  }
  return x;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::InvalidInput, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  RrefResult rr = rref(m.hcat(ExactMatrix::identity(n)));
  if (rr.rank < n || rr.pivots[n - 1] >= n) fail(ErrorKind::DependentBasis, "matrix is singular");
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
  }
  return inv;
}

// ---------------------------------------------------- IndependenceTracker

IndependenceTracker::IndependenceTracker(std::size_t dim, std::uint64_t field_modulus, bool exact,
                                         std::uint64_t seed)
    : dim_(dim), spec_(field_modulus, seed), exact_(exact) {}

bool IndependenceTracker::reduce_mod(std::vector<std::uint64_t>& w) const {
  const std::uint64_t P = spec_.prime();
  for (std::size_t k = 0; k < echelon_.size(); ++k) {
    std::size_t c = lead_[k];
    if (!w[c]) continue;
    std::uint64_t f = w[c];  // echelon rows are normalized to lead 1
    for (std::size_t j = c; j < dim_; ++j) {
      if (echelon_[k][j]) w[j] = (w[j] + P - mulmod(f, echelon_[k][j], P)) % P;
    }
  }
  return std::any_of(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
}

bool IndependenceTracker::add(const Vec& v) {
  if (v.size() != dim_) fail(ErrorKind::InvalidInput, "tracker vector length mismatch");
  if (accepted_.size() == dim_) return false;
  const std::uint64_t P = spec_.prime();
  std::vector<std::uint64_t> w(dim_);
  bool defined = true;
  for (std::size_t j = 0; j < dim_ && defined; ++j) {
    if (!v[j].is_zero()) defined = spec_.eval(v[j], w[j]);
  }
  if (defined && reduce_mod(w)) {
    std::size_t c = 0;
    while (!w[c]) ++c;
    std::uint64_t inv = invmod(w[c], P);
    for (auto& x : w) x = mulmod(x, inv, P);
    // keep lower rows reduced against the new row is unnecessary for rank
    echelon_.push_back(std::move(w));
    lead_.push_back(c);
    accepted_.push_back(v);
    return true;
  }
  if (!exact_) return false;
  std::vector<Vec> rows = accepted_;
  rows.push_back(v);
  if (firwb::rank(ExactMatrix::from_rows(rows, dim_)) <= accepted_.size()) return false;
  // Exactly independent but degenerate at the point: rebuild the modular
  // echelon from scratch is not possible at this point, so keep only the
  // exact record.
  accepted_.push_back(v);
  echelon_.push_back(std::vector<std::uint64_t>(dim_, 0));
  lead_.push_back(dim_);
  return true;
}

}  // namespace firwb
