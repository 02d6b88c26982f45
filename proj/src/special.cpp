#include "anselberg/special.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

namespace anselberg {

namespace {

template <class T> void check_pole(const T& x) {
  using std::floor;
  if (x <= 0 && floor(x) == x)
    throw std::domain_error("gamma function pole at x = " + std::to_string(static_cast<double>(x)));
}

constexpr double tail_eps = 1e-17;

} // namespace

double gamma_fn(double x) {
  check_pole(x);
  return std::tgamma(x);
}

template <class T> void LogProduct<T>::gamma(const T& x, int power) {
  check_pole(x);
  int s = 1;
  const T l = boost::math::lgamma(x, &s);
  logabs += power * l;
  if (s < 0 && power % 2) sign = -sign;
}

template <class T> void LogProduct<T>::mul(const T& v) {
  using std::abs;
  using std::log;
  if (v == 0) throw std::domain_error("LogProduct: zero factor");
  if (v < 0) sign = -sign;
  logabs += log(abs(v));
}

template <class T> void LogProduct<T>::pow(const T& base, const T& e) {
  using std::log;
  if (!(base > 0)) throw std::domain_error("LogProduct: nonpositive base");
  logabs += e * log(base);
}

template <class T> void LogProduct<T>::rising(const T& x, int m, int power) {
  for (int j = 0; j < m; ++j) {
    const T f = x + j;
    if (f == 0) throw std::domain_error("rising factorial vanishes");
    for (int p = 0; p < std::abs(power); ++p) power > 0 ? mul(f) : mul(T(1) / f);
  }
}

template <class T> T LogProduct<T>::value() const {
  using std::exp;
  return sign * exp(logabs);
}

template struct LogProduct<double>;
template struct LogProduct<ExtFloat>;

double qpoch_inf(double a, double q) {
  if (!(q > 0 && q < 1)) throw std::invalid_argument("qpoch_inf: need 0 < q < 1");
  double p = 1, aq = a;
  while (std::abs(aq) / (1 - q) >= tail_eps) {
    p *= 1 - aq;
    aq *= q;
  }
  return p;
}

double qpoch_real(double a, double q, double z) {
  if (!(q > 0 && q < 1)) throw std::invalid_argument("qpoch_real: need 0 < q < 1");
  double num = a, den = a * std::pow(q, z), p = 1;
  while (std::max(std::abs(num), std::abs(den)) / (1 - q) >= tail_eps) {
    const double d = 1 - den;
    if (std::abs(d) < 1e-15) throw std::domain_error("qpoch_real: vanishing denominator factor");
    p *= (1 - num) / d;
    num *= q;
    den *= q;
  }
  return p;
}

double q_gamma(double x, double q) {
  check_pole(x);
  return qpoch_real(q, q, x - 1) * std::pow(1 - q, 1 - x);
}

} // namespace anselberg
