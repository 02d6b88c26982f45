#pragma once

#include "anselberg/qt_rational.hpp"

namespace anselberg {

/// Γ(x); std::domain_error at nonpositive integers.
double gamma_fn(double x);

/// Running product of gamma factors kept as log|·| plus a sign, so long
/// products with large arguments neither overflow nor lose the sign of
/// Γ at negative arguments.
template <class T> struct LogProduct {
  T logabs = 0;
  int sign = 1;
  void gamma(const T& x, int power = 1);
  void mul(const T& v);
  /// base^e for base > 0
  void pow(const T& base, const T& e);
  /// rising factorial (x)_m = x (x+1) ... (x+m-1), m >= 0
  void rising(const T& x, int m, int power = 1);
  T value() const;
};

extern template struct LogProduct<double>;
extern template struct LogProduct<ExtFloat>;

/// (a;q)_∞, truncated once |a| q^N / (1-q) < 1e-17.
double qpoch_inf(double a, double q);
/// (a;q)_z = (a;q)_∞ / (a q^z;q)_∞. Throws std::domain_error on a vanishing
/// denominator factor.
double qpoch_real(double a, double q, double z);
/// Γ_q(x) = (q;q)_∞ / (q^x;q)_∞ · (1-q)^{1-x}.
double q_gamma(double x, double q);

} // namespace anselberg
