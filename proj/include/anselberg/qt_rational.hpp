#pragma once

#include "anselberg/bipoly.hpp"
#include "anselberg/partitions.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace anselberg {

using Rational = mpq_class;
using ExtFloat = boost::multiprecision::mpf_float_50;

/// Exact element of Q(q, t), kept as a reduced fraction of polynomials in
/// Z[q, t]. The denominator has positive graded-lex leading coefficient and is
/// coprime to the numerator, so equality is structural.
class QtRational {
public:
  QtRational() : den_(1) {}
  QtRational(long c) : num_(Integer(c)), den_(1) {} // NOLINT(implicit)
  explicit QtRational(const Integer& c) : num_(c), den_(1) {}
  explicit QtRational(const Rational& r);
  /// c q^qexp t^texp; exponents may be negative.
  static QtRational monomial(const Rational& c, int qexp, int texp);
  static QtRational q() { return monomial(1, 1, 0); }
  static QtRational t() { return monomial(1, 0, 1); }
  static QtRational from_polys(BiPoly num, BiPoly den);

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  QtRational operator-() const;
  QtRational& operator+=(const QtRational& o);
  QtRational& operator-=(const QtRational& o);
  QtRational& operator*=(const QtRational& o);
  QtRational& operator/=(const QtRational& o);
  friend QtRational operator+(QtRational a, const QtRational& b) { return a += b; }
  friend QtRational operator-(QtRational a, const QtRational& b) { return a -= b; }
  friend QtRational operator*(QtRational a, const QtRational& b) { return a *= b; }
  friend QtRational operator/(QtRational a, const QtRational& b) { return a /= b; }
  friend bool operator==(const QtRational& a, const QtRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  QtRational inverse() const;
  QtRational pow(int e) const;
  /// Multiply by q^a t^b (any signs).
  QtRational times_monomial(int qexp, int texp) const;
  /// Substitute values for q and t.
  QtRational subs(const QtRational& qval, const QtRational& tval) const;

  template <class T> T eval(const T& q, const T& t) const;
  double eval_double(double q, double t) const { return eval<double>(q, t); }

  /// Canonical text "(num) / (den)": terms in descending graded-lex order on
  /// (q, t) exponents (total degree, then q-degree). Polynomials print without
  /// the denominator.
  std::string to_string() const;
  static QtRational parse(std::string_view text);

private:
  QtRational(BiPoly n, BiPoly d, bool reduce);
  void canonicalize();

  BiPoly num_;
  BiPoly den_;
};

template <class T> T integer_to(const Integer& z);
template <> inline double integer_to<double>(const Integer& z) { return z.get_d(); }
template <> inline ExtFloat integer_to<ExtFloat>(const Integer& z) {
  return ExtFloat(boost::multiprecision::mpz_int(z.get_mpz_t()));
}

template <class T> T eval_bipoly(const BiPoly& p, const T& q, const T& t) {
  T acc = T(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    T inner = T(0);
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt) inner = inner * t + integer_to<T>(*jt);
    acc = acc * q + inner;
  }
  return acc;
}

template <class T> T QtRational::eval(const T& q, const T& t) const {
  const T d = eval_bipoly(den_, q, t);
  if (d == T(0)) throw std::domain_error("evaluation at a pole: denominator " + den_.to_string() + " vanishes");
  return eval_bipoly(num_, q, t) / d;
}

/// (b;q)_N. For N < 0 this is 1/(b q^N; q)_{-N}; a vanishing factor there is a
/// pole and throws std::domain_error.
QtRational qpoch_int(const QtRational& b, int N);
/// 1/(b;q)_N, returning 0 when (b;q)_N has a pole (e.g. 1/(q;q)_{-N} = 0).
/// Throws std::domain_error if (b;q)_N itself vanishes.
QtRational qpoch_int_reciprocal(const QtRational& b, int N);

/// (b;q,t)_λ = Π_{s∈λ} (1 - b q^{a'(s)} t^{-l'(s)}).
QtRational qpoch_partition(const QtRational& b, const Partition& lambda);
/// Row form Π_i (b t^{1-i}; q)_{λ_i}.
QtRational qpoch_partition_rows(const QtRational& b, const Partition& lambda);

struct HookPolys {
  QtRational c;
  QtRational c_prime;
  QtRational b;
};

/// c_λ, c'_λ and b_λ = c_λ/c'_λ from the hook products, cross-checked
/// against the Pochhammer forms in n variables (std::logic_error on
/// disagreement). Throws std::invalid_argument if n < l(λ).
HookPolys c_polys(const Partition& lambda, int n);
HookPolys hook_polys(const Partition& lambda);

} // namespace anselberg
