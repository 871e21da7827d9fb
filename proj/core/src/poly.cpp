#include "firwb/poly.hpp"

#include <algorithm>

#include "firwb/error.hpp"

namespace firwb {

std::string Var::name() const {
  static const char* prefix[] = {"x", "u", "t"};
  return prefix[static_cast<int>(family())] + std::to_string(index());
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Entry> entries) : e_(std::move(entries)) {
  std::sort(e_.begin(), e_.end());
  std::vector<Entry> merged;
  for (const auto& [v, x] : e_) {
    if (!merged.empty() && merged.back().first == v) {
      merged.back().second += x;
    } else if (x) {
      merged.emplace_back(v, x);
    }
  }
  e_ = std::move(merged);
  for (const auto& en : e_) deg_ += en.second;
}

Monomial Monomial::of(Var v, std::uint32_t e) {
  Monomial m;
  if (e) {
    m.e_.emplace_back(v.id(), e);
    m.deg_ = e;
  }
  return m;
}

std::uint32_t Monomial::degree_in(std::uint32_t var) const {
  for (const auto& [v, x] : e_) {
    if (v == var) return x;
    if (v > var) break;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.e_.reserve(a.e_.size() + b.e_.size());
  std::size_t i = 0, j = 0;
  while (i < a.e_.size() || j < b.e_.size()) {
    if (j == b.e_.size() || (i < a.e_.size() && a.e_[i].first < b.e_[j].first)) {
      m.e_.push_back(a.e_[i++]);
    } else if (i == a.e_.size() || b.e_[j].first < a.e_[i].first) {
      m.e_.push_back(b.e_[j++]);
    } else {
      m.e_.emplace_back(a.e_[i].first, a.e_[i].second + b.e_[j].second);
      ++i;
      ++j;
    }
  }
  m.deg_ = a.deg_ + b.deg_;
  return m;
}

bool Monomial::divides(const Monomial& b) const {
  if (deg_ > b.deg_) return false;
  std::size_t j = 0;
  for (const auto& [v, x] : e_) {
    while (j < b.e_.size() && b.e_[j].first < v) ++j;
    if (j == b.e_.size() || b.e_[j].first != v || b.e_[j].second < x) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& b) const {
  Monomial m;
  std::size_t i = 0;
  for (const auto& [v, x] : b.e_) {
    std::uint32_t sub = 0;
    if (i < e_.size() && e_[i].first == v) sub = e_[i++].second;
    if (x > sub) m.e_.emplace_back(v, x - sub);
  }
  m.deg_ = b.deg_ - deg_;
  return m;
}

Monomial Monomial::without(std::uint32_t var) const {
  Monomial m;
  for (const auto& en : e_) {
    if (en.first != var) {
      m.e_.push_back(en);
      m.deg_ += en.second;
    }
  }
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  std::size_t j = 0;
  for (const auto& [v, x] : a.e_) {
    while (j < b.e_.size() && b.e_[j].first < v) ++j;
    if (j < b.e_.size() && b.e_[j].first == v) {
      std::uint32_t e = std::min(x, b.e_[j].second);
      m.e_.emplace_back(v, e);
      m.deg_ += e;
    }
  }
  return m;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto& x = a.entries();
  const auto& y = b.entries();
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].first != y[i].first) return x[i].first < y[i].first ? 1 : -1;
    if (x[i].second != y[i].second) return x[i].second > y[i].second ? 1 : -1;
  }
  if (x.size() != y.size()) return x.size() > y.size() ? 1 : -1;
  return 0;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(Scalar c) {
  if (!c.is_zero()) terms_.push_back({Monomial(), std::move(c)});
}

Poly Poly::variable(Var v) { return term(Monomial::of(v), Scalar(1)); }

Poly Poly::term(Monomial m, Scalar c) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_cmp(a.mono, b.mono) > 0; });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Scalar Poly::constant_value() const {
  if (terms_.empty()) return Scalar(0);
  if (!terms_.back().mono.is_one()) return Scalar(0);
  return terms_.back().coef;
}

std::uint32_t Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

std::uint32_t Poly::degree_in(std::uint32_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(var));
  return d;
}

std::set<std::uint32_t> Poly::variables() const {
  std::set<std::uint32_t> vs;
  for (const auto& t : terms_) {
    for (const auto& en : t.mono.entries()) vs.insert(en.first);
  }
  return vs;
}

std::uint64_t Poly::modulus() const {
  for (const auto& t : terms_) {
    if (t.coef.modulus()) return t.coef.modulus();
  }
  return 0;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

namespace {

Poly merge(const Poly& a, const Poly& b, bool subtract) {
  std::vector<Term> out;
  const auto& x = a.terms();
  const auto& y = b.terms();
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    int c = (i == x.size()) ? -1 : (j == y.size()) ? 1 : grlex_cmp(x[i].mono, y[j].mono);
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back({y[j].mono, subtract ? -y[j].coef : y[j].coef});
      ++j;
    } else {
      Scalar s = subtract ? x[i].coef - y[j].coef : x[i].coef + y[j].coef;
      if (!s.is_zero()) out.push_back({x[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return Poly::from_terms(std::move(out));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return merge(a, b, false);
}

Poly operator-(const Poly& a, const Poly& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  return merge(a, b, true);
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.is_constant()) return b.scaled(a.constant_value());
  if (b.is_constant()) return a.scaled(b.constant_value());
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coef * t.coef});
  }
  return Poly::from_terms(std::move(out));
}

Poly Poly::scaled(const Scalar& c) const {
  if (c.is_zero()) return Poly();
  Poly p = *this;
  for (auto& t : p.terms_) t.coef *= c;
  return p;
}

Poly Poly::times_monomial(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Poly();
  Poly p = *this;
  for (auto& t : p.terms_) {
    t.mono = t.mono * m;
    t.coef *= c;
  }
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly r(1);
  Poly b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero() || lc().is_one()) return *this;
  return scaled(lc().inverse());
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

bool operator<(const Poly& a, const Poly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = grlex_cmp(a.terms_[i].mono, b.terms_[i].mono);
    if (c) return c < 0;
    if (a.terms_[i].coef != b.terms_[i].coef) return a.terms_[i].coef.str() < b.terms_[i].coef.str();
  }
  return a.terms_.size() < b.terms_.size();
}

std::optional<Poly> Poly::divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorKind::ZeroDenominator, "polynomial division by zero");
  if (a.is_zero()) return Poly();
  if (b.is_constant()) return a.scaled(b.constant_value().inverse());
  Poly r = a;
  std::vector<Term> q;
  const Term& lb = b.leading();
  Scalar inv = lb.coef.inverse();
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Monomial m = lb.mono.quotient_of(lr.mono);
    Scalar c = lr.coef * inv;
    r -= b.times_monomial(m, c);
    q.push_back({std::move(m), std::move(c)});
  }
  return Poly::from_terms(std::move(q));
}

Poly Poly::rename(const std::function<std::uint32_t(std::uint32_t)>& f) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Monomial::Entry> es;
    es.reserve(t.mono.entries().size());
    for (const auto& [v, x] : t.mono.entries()) es.emplace_back(f(v), x);
    out.push_back({Monomial(std::move(es)), t.coef});
  }
  return from_terms(std::move(out));
}

Poly Poly::substitute(const std::map<std::uint32_t, Scalar>& values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    std::vector<Monomial::Entry> es;
    for (const auto& [v, x] : t.mono.entries()) {
      auto it = values.find(v);
      if (it == values.end()) {
        es.emplace_back(v, x);
      } else {
        Scalar p(1);
        for (std::uint32_t k = 0; k < x; ++k) p *= it->second;
        c *= p;
      }
    }
    out.push_back({Monomial(std::move(es)), std::move(c)});
  }
  return from_terms(std::move(out));
}

Poly Poly::compose(const std::map<std::uint32_t, Poly>& values) const {
  Poly acc;
  for (const auto& t : terms_) {
    Poly term_value(t.coef);
    std::vector<Monomial::Entry> kept;
    for (const auto& [v, x] : t.mono.entries()) {
      auto it = values.find(v);
      if (it == values.end()) {
        kept.emplace_back(v, x);
      } else {
        term_value *= it->second.pow(x);
      }
    }
    acc += term_value.times_monomial(Monomial(std::move(kept)), Scalar(1));
  }
  return acc;
}

bool Poly::eval_mod(std::uint64_t P, const std::function<std::uint64_t(std::uint32_t)>& point,
                    std::uint64_t& out) const {
  std::uint64_t acc = 0;
  for (const auto& t : terms_) {
    std::uint64_t c;
    if (!t.coef.reduce_mod(P, c)) return false;
    for (const auto& [v, x] : t.mono.entries()) c = mulmod(c, powmod(point(v), x, P), P);
    acc = (acc + c) % P;
  }
  out = acc;
  return true;
}

std::vector<Poly> Poly::coefficients_in(std::uint32_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    buckets[t.mono.degree_in(var)].push_back({t.mono.without(var), t.coef});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Poly Poly::from_coefficients(std::uint32_t var, const std::vector<Poly>& coeffs) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m = Monomial::of(Var::from_id(var), static_cast<std::uint32_t>(i));
    for (const auto& t : coeffs[i].terms()) out.push_back({t.mono * m, t.coef});
  }
  return from_terms(std::move(out));
}

}  // namespace firwb
