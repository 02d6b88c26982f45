#include "anselberg/qt_rational.hpp"

#include <cctype>
#include <stdexcept>

namespace anselberg {

QtRational::QtRational(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  num_ = BiPoly(c.get_num());
  den_ = BiPoly(c.get_den());
}

QtRational::QtRational(BiPoly n, BiPoly d, bool reduce) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("QtRational: zero denominator");
  if (reduce)
    canonicalize();
  else if (den_.make_leading_positive())
    num_ = -num_;
}

QtRational QtRational::from_polys(BiPoly num, BiPoly den) { return QtRational(std::move(num), std::move(den), true); }

QtRational QtRational::monomial(const Rational& c, int qexp, int texp) {
  Rational cc = c;
  cc.canonicalize();
  if (cc == 0) return QtRational();
  BiPoly n = BiPoly::monomial(cc.get_num(), std::max(qexp, 0), std::max(texp, 0));
  BiPoly d = BiPoly::monomial(cc.get_den(), std::max(-qexp, 0), std::max(-texp, 0));
  return QtRational(std::move(n), std::move(d), false);
}

void QtRational::canonicalize() {
  if (num_.is_zero()) {
    den_ = BiPoly(1);
    return;
  }
  if (!den_.is_one()) {
    BiPoly g = BiPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *BiPoly::exact_div(num_, g);
      den_ = *BiPoly::exact_div(den_, g);
    }
  }
  if (den_.make_leading_positive()) num_ = -num_;
}

QtRational QtRational::operator-() const {
  QtRational r = *this;
  r.num_ = -r.num_;
  return r;
}

QtRational& QtRational::operator+=(const QtRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = BiPoly(1);
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;
  }
  BiPoly g = BiPoly::gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (den_.make_leading_positive()) num_ = -num_;
    return *this;
  }
  BiPoly d1 = *BiPoly::exact_div(den_, g);
  BiPoly d2 = *BiPoly::exact_div(o.den_, g);
  BiPoly n = num_ * d2 + o.num_ * d1;
  if (n.is_zero()) return *this = QtRational();
  BiPoly g2 = BiPoly::gcd(n, g);
  if (!g2.is_one()) {
    n = *BiPoly::exact_div(n, g2);
    g = *BiPoly::exact_div(g, g2);
  }
  num_ = std::move(n);
  den_ = d1 * d2 * g;
  if (den_.make_leading_positive()) num_ = -num_;
  return *this;
}

QtRational& QtRational::operator-=(const QtRational& o) { return *this += -o; }

QtRational& QtRational::operator*=(const QtRational& o) {
  if (is_zero() || o.is_zero()) return *this = QtRational();
  BiPoly a = num_, c = o.num_, b = den_, d = o.den_;
  if (!d.is_one()) {
    BiPoly g = BiPoly::gcd(a, d);
    if (!g.is_one()) {
      a = *BiPoly::exact_div(a, g);
      d = *BiPoly::exact_div(d, g);
    }
  }
  if (!b.is_one()) {
    BiPoly g = BiPoly::gcd(c, b);
    if (!g.is_one()) {
      c = *BiPoly::exact_div(c, g);
      b = *BiPoly::exact_div(b, g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  if (den_.make_leading_positive()) num_ = -num_;
  return *this;
}

QtRational QtRational::inverse() const {
  if (is_zero()) throw std::domain_error("QtRational: division by zero");
  return QtRational(den_, num_, false);
}

QtRational& QtRational::operator/=(const QtRational& o) { return *this *= o.inverse(); }

QtRational QtRational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QtRational r(1), base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

QtRational QtRational::times_monomial(int qexp, int texp) const {
  if (is_zero()) return *this;
  BiPoly n = num_, d = den_;
  if (qexp >= 0) n = n.shifted(qexp, 0); else d = d.shifted(-qexp, 0);
  if (texp >= 0) n = n.shifted(0, texp); else d = d.shifted(0, -texp);
  // Only monomial factors can cancel.
  const auto [nq, nt] = n.low_exponents();
  const auto [dq, dt] = d.low_exponents();
  const int cq = std::min(nq, dq), ct = std::min(nt, dt);
  if (cq > 0 || ct > 0) {
    n = n.unshifted(cq, ct);
    d = d.unshifted(cq, ct);
  }
  return QtRational(std::move(n), std::move(d), false);
}

namespace {

QtRational eval_poly_at(const BiPoly& p, const QtRational& q, const QtRational& t) {
  QtRational acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    QtRational inner;
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt) inner = inner * t + QtRational(*jt);
    acc = acc * q + inner;
  }
  return acc;
}

} // namespace

QtRational QtRational::subs(const QtRational& qval, const QtRational& tval) const {
  return eval_poly_at(num_, qval, tval) / eval_poly_at(den_, qval, tval);
}

std::string QtRational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

namespace {

// expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)* ;
// unary := '-' unary | power ; power := atom ('^' int)? ; atom := int | q | t | '(' expr ')'
class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}
  QtRational run() {
    QtRational v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse Q(q,t) element '" + std::string(s_) + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  QtRational expr() {
    QtRational v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }
  QtRational term() {
    QtRational v = unary();
    for (;;) {
      if (accept('*')) v *= unary();
      else if (accept('/')) v /= unary();
      else return v;
    }
  }
  QtRational unary() {
    if (accept('-')) return -unary();
    return power();
  }
  QtRational power() {
    QtRational base = atom();
    if (accept('^')) {
      skip();
      bool neg = accept('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      return base.pow(neg ? -e : e);
    }
    return base;
  }
  QtRational atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QtRational v = expr();
      if (!accept(')')) fail("')' expected");
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return QtRational::q();
    }
    if (c == 't') {
      ++pos_;
      return QtRational::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return QtRational(Integer(std::string(s_.substr(start, pos_ - start))));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

QtRational QtRational::parse(std::string_view text) { return Parser(text).run(); }

QtRational qpoch_int(const QtRational& b, int N) {
  QtRational r(1);
  if (N >= 0) {
    for (int j = 0; j < N; ++j) r *= QtRational(1) - b.times_monomial(j, 0);
    return r;
  }
  for (int j = 1; j <= -N; ++j) {
    QtRational f = QtRational(1) - b.times_monomial(-j, 0);
    if (f.is_zero()) throw std::domain_error("(b;q)_N with N=" + std::to_string(N) + " has a pole at b=" + b.to_string());
    r *= f;
  }
  return r.inverse();
}

QtRational qpoch_int_reciprocal(const QtRational& b, int N) {
  if (N >= 0) {
    QtRational p = qpoch_int(b, N);
    if (p.is_zero()) throw std::domain_error("1/(b;q)_N: (b;q)_N vanishes at b=" + b.to_string());
    return p.inverse();
  }
  QtRational r(1);
  for (int j = 1; j <= -N; ++j) r *= QtRational(1) - b.times_monomial(-j, 0);
  return r;
}

QtRational qpoch_partition(const QtRational& b, const Partition& lambda) {
  QtRational r(1);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) {
      const ArmLeg s = arm_leg(lambda, i, j);
      r *= QtRational(1) - b.times_monomial(s.arm_co, -s.leg_co);
    }
  return r;
}

QtRational qpoch_partition_rows(const QtRational& b, const Partition& lambda) {
  QtRational r(1);
  for (int i = 1; i <= lambda.length(); ++i) r *= qpoch_int(b.times_monomial(0, 1 - i), lambda.part(i));
  return r;
}

HookPolys hook_polys(const Partition& lambda) {
  QtRational c(1), cp(1);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) {
      const ArmLeg s = arm_leg(lambda, i, j);
      c *= QtRational(1) - QtRational::monomial(1, s.arm, s.leg + 1);
      cp *= QtRational(1) - QtRational::monomial(1, s.arm + 1, s.leg);
    }
  return {c, cp, c / cp};
}

HookPolys c_polys(const Partition& lambda, int n) {
  if (n < lambda.length())
    throw std::invalid_argument("c_polys: n=" + std::to_string(n) + " < l(" + lambda.to_string() + ")");
  HookPolys h = hook_polys(lambda);
  QtRational c = qpoch_partition(QtRational::monomial(1, 0, n), lambda);
  QtRational cp = qpoch_partition(QtRational::monomial(1, 1, n - 1), lambda);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int d = lambda.part(i) - lambda.part(j);
      c *= qpoch_int(QtRational::monomial(1, 0, j - i), d) / qpoch_int(QtRational::monomial(1, 0, j - i + 1), d);
      cp *= qpoch_int(QtRational::monomial(1, 1, j - i - 1), d) / qpoch_int(QtRational::monomial(1, 1, j - i), d);
    }
  if (!(c == h.c) || !(cp == h.c_prime))
    throw std::logic_error("c_polys: hook and Pochhammer forms disagree for " + lambda.to_string());
  return h;
}

} // namespace anselberg
