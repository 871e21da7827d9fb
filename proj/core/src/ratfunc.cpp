#include "firwb/ratfunc.hpp"

#include <cctype>

#include "firwb/error.hpp"

namespace firwb {

RatFunc RatFunc::normalize(const Poly& num, const Poly& den) {
  if (den.is_zero()) fail(ErrorKind::ZeroDenominator, "zero denominator");
  RatFunc r;
  if (num.is_zero()) return r;
  if (den.is_constant()) {
    r.num_ = num.scaled(den.constant_value().inverse());
    return r;
  }
  Poly g = Poly::gcd(num, den);
  Poly n = num, d = den;
  if (!g.is_constant()) {
    n = *Poly::divide_exact(num, g);
    d = *Poly::divide_exact(den, g);
  }
  Scalar s = d.lc().inverse();
  r.num_ = n.scaled(s);
  r.den_ = d.scaled(s);
  return r;
}

std::set<std::uint32_t> RatFunc::variables() const {
  auto v = num_.variables();
  auto w = den_.variables();
  v.insert(w.begin(), w.end());
  return v;
}

std::uint64_t RatFunc::modulus() const {
  auto m = num_.modulus();
  return m ? m : den_.modulus();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_constant()) return RatFunc(a.num_ + b.num_);
    return RatFunc::normalize(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_constant()) return RatFunc::normalize(a.num_ * b.den_ + b.num_, b.den_);
  if (b.den_.is_constant()) return RatFunc::normalize(a.num_ + b.num_ * a.den_, a.den_);
  Poly g = Poly::gcd(a.den_, b.den_);
  Poly da = *Poly::divide_exact(a.den_, g);
  Poly db = *Poly::divide_exact(b.den_, g);
  return RatFunc::normalize(a.num_ * db + b.num_ * da, a.den_ * db);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
  Poly g1 = Poly::gcd(a.num_, b.den_);
  Poly g2 = Poly::gcd(b.num_, a.den_);
  Poly n1 = g1.is_constant() ? a.num_ : *Poly::divide_exact(a.num_, g1);
  Poly d2 = g1.is_constant() ? b.den_ : *Poly::divide_exact(b.den_, g1);
  Poly n2 = g2.is_constant() ? b.num_ : *Poly::divide_exact(b.num_, g2);
  Poly d1 = g2.is_constant() ? a.den_ : *Poly::divide_exact(a.den_, g2);
  Poly d = d1 * d2;
  RatFunc r;
  Scalar s = d.lc().inverse();
  r.num_ = (n1 * n2).scaled(s);
  r.den_ = d.scaled(s);
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) fail(ErrorKind::ZeroDenominator, "inverse of zero rational function");
  RatFunc r;
  Scalar s = num_.lc().inverse();
  r.num_ = den_.scaled(s);
  r.den_ = num_.scaled(s);
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;
}

RatFunc RatFunc::rename(const std::function<std::uint32_t(std::uint32_t)>& f) const {
  std::set<std::uint32_t> seen;
  for (auto v : variables()) {
    if (!seen.insert(f(v)).second) fail(ErrorKind::NonInjectiveMap, "variable renaming is not injective on the support");
  }
  // An injective renaming preserves coprimality; only the normalizing
  // scalar of the denominator can change.
  RatFunc r;
  r.num_ = num_.rename(f);
  r.den_ = den_.rename(f);
  if (!r.den_.lc().is_one()) {
    Scalar s = r.den_.lc().inverse();
    r.num_ = r.num_.scaled(s);
    r.den_ = r.den_.scaled(s);
  }
  return r;
}

RatFunc RatFunc::rename_indices(Family family, const std::map<std::uint32_t, std::uint32_t>& j) const {
  return rename([&](std::uint32_t id) {
    Var v = Var::from_id(id);
    if (v.family() != family) return id;
    auto it = j.find(v.index());
    return it == j.end() ? id : Var(family, it->second).id();
  });
}

RatFunc RatFunc::eval_at(const std::map<Var, Scalar>& assignment) const {
  std::map<std::uint32_t, Scalar> vals;
  for (const auto& [v, s] : assignment) vals.emplace(v.id(), s);
  Poly d = den_.substitute(vals);
  if (d.is_zero()) fail(ErrorKind::DenominatorVanishes, "denominator vanishes under the assignment");
  return normalize(num_.substitute(vals), d);
}

RatFunc RatFunc::compose(const std::map<std::uint32_t, RatFunc>& values) const {
  // Substitute through a common denominator per variable.
  auto eval_poly = [&](const Poly& p) {
    RatFunc acc;
    for (const auto& t : p.terms()) {
      RatFunc term(Poly::term(Monomial(), t.coef));
      std::vector<Monomial::Entry> kept;
      for (const auto& [v, x] : t.mono.entries()) {
        auto it = values.find(v);
        if (it == values.end()) {
          kept.emplace_back(v, x);
        } else {
          term *= it->second.pow(static_cast<int>(x));
        }
      }
      term *= RatFunc(Poly::term(Monomial(std::move(kept)), Scalar(1)));
      acc += term;
    }
    return acc;
  };
  RatFunc d = eval_poly(den_);
  if (d.is_zero()) fail(ErrorKind::DenominatorVanishes, "denominator vanishes under substitution");
  return eval_poly(num_) / d;
}

bool RatFunc::eval_mod(std::uint64_t P, const std::function<std::uint64_t(std::uint32_t)>& point,
                       std::uint64_t& out) const {
  std::uint64_t n, d;
  if (!num_.eval_mod(P, point, n) || !den_.eval_mod(P, point, d) || d == 0) return false;
  out = mulmod(n, invmod(d, P), P);
  return true;
}

RatFunc RatFunc::to_field(std::uint64_t p) const {
  if (p == 0) return *this;
  auto conv = [p](const Poly& x) {
    std::vector<Term> ts;
    for (const auto& t : x.terms()) ts.push_back({t.mono, t.coef.to_field(p)});
    return Poly::from_terms(std::move(ts));
  };
  return normalize(conv(num_), conv(den_));
}

// ------------------------------------------------------------ text grammar

namespace {

class Parser {
 public:
  Parser(const std::string& s, std::uint64_t p) : s_(s), p_(p) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorKind::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc acc;
    bool first = true;
    for (;;) {
      skip();
      bool neg = false;
      if (eat('-')) {
        neg = true;
      } else if (!first && !eat('+')) {
        break;
      } else if (first) {
        eat('+');
      }
      RatFunc t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }

  RatFunc term() {
    RatFunc acc = power();
    for (;;) {
      if (eat('*')) {
        acc *= power();
      } else if (eat('/')) {
        RatFunc d = power();
        if (d.is_zero()) fail(ErrorKind::ZeroDenominator, "division by zero in '" + s_ + "'");
        acc /= d;
      } else {
        break;
      }
    }
    return acc;
  }

  RatFunc power() {
    RatFunc b = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      long e = integer();
      b = b.pow(static_cast<int>(neg ? -e : e));
    }
    return b;
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!eat(')')) error("expected ')'");
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class z(s_.substr(start, pos_ - start));
      Scalar v(mpq_class(z, 1));
      return RatFunc(p_ ? v.to_field(p_) : v);
    }
    Family fam;
    if (c == 'x') {
      fam = Family::xi;
    } else if (c == 'u') {
      fam = Family::u;
    } else if (c == 't') {
      fam = Family::t;
    } else {
      error(std::string("unexpected character '") + c + "'");
    }
    ++pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error("expected variable index");
    long idx = integer();
    if (idx < 1) error("variable index must be positive");
    return RatFunc::variable(Var(fam, static_cast<std::uint32_t>(idx)));
  }

  const std::string& s_;
  std::uint64_t p_;
  std::size_t pos_ = 0;
};

std::string mono_str(const Monomial& m) {
  std::string out;
  for (const auto& [v, x] : m.entries()) {
    if (!out.empty()) out += "*";
    out += Var::from_id(v).name();
    if (x > 1) out += "^" + std::to_string(x);
  }
  return out;
}

bool needs_parens_as_divisor(const Poly& p) {
  if (p.size() != 1) return true;
  const Term& t = p.leading();
  return !t.coef.is_one() || t.mono.entries().size() != 1;
}

}  // namespace

RatFunc parse_ratfunc(const std::string& text, std::uint64_t p) {
  Parser parser(text, p);
  RatFunc f = parser.parse();
  return p ? f.to_field(p) : f;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Scalar c = t.coef;
    bool neg = c.is_negative();
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c.str();
    } else if (c.is_one()) {
      out += mono_str(t.mono);
    } else {
      out += c.str() + "*" + mono_str(t.mono);
    }
  }
  return out;
}

std::string to_string(const RatFunc& f) {
  if (f.den().is_constant()) return to_string(f.num());
  std::string n = to_string(f.num());
  if (f.num().size() > 1) n = "(" + n + ")";
  std::string d = to_string(f.den());
  if (needs_parens_as_divisor(f.den())) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace firwb
