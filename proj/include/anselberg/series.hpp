#pragma once

#include "anselberg/qt_rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace anselberg {

/// Named formal variables with integer grading weights and a truncation cap.
/// Weight-0 variables (e.g. a symbolic parameter a) are never truncated and
/// may carry negative exponents.
class SeriesRing {
public:
  SeriesRing(std::vector<std::string> names, std::vector<int> weights, int cap);
  static std::shared_ptr<const SeriesRing> make(std::vector<std::string> names, std::vector<int> weights,
                                                int cap) {
    return std::make_shared<const SeriesRing>(std::move(names), std::move(weights), cap);
  }
  int nvars() const { return static_cast<int>(names_.size()); }
  int cap() const { return cap_; }
  int weight(int i) const { return weights_[i]; }
  const std::string& name(int i) const { return names_[i]; }
  int index(const std::string& name) const;
  int degree(const std::vector<int>& exps) const;

private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
  int cap_;
};

using RingPtr = std::shared_ptr<const SeriesRing>;

/// Truncated formal power series (a polynomial after truncation) in the
/// ring's variables with Q(q,t) coefficients. Products drop every monomial
/// whose weighted degree exceeds the ring's cap.
class Series {
public:
  using Exps = std::vector<int>;

  explicit Series(RingPtr ring) : ring_(std::move(ring)) {}
  static Series constant(RingPtr ring, const QtRational& c);
  static Series var(RingPtr ring, const std::string& name);
  static Series monomial(RingPtr ring, const QtRational& c, Exps exps);

  const RingPtr& ring() const { return ring_; }
  const std::map<Exps, QtRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Smallest weighted degree present (0 for the zero series).
  int min_degree() const;
  QtRational coeff(const Exps& e) const;

  void add_term(const Exps& e, const QtRational& c);
  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  Series scaled(const QtRational& c) const;
  Series pow(int e) const;
  friend bool operator==(const Series& a, const Series& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

private:
  RingPtr ring_;
  std::map<Exps, QtRational> terms_;
};

/// (A X; q)_∞ / (X; q)_∞ = Σ_k (A;q)_k/(q;q)_k X^k through the ring's cap.
/// A must have weighted degree 0; X must be a monomial of positive degree.
Series qpoch_ratio_series(const Series& A, const Series& X);
/// 1/(X; q)_∞ = Σ_k X^k/(q;q)_k.
Series qpoch_inf_inverse_series(const Series& X);
/// (X; q)_∞ = Σ_k (-1)^k q^{k(k-1)/2} X^k/(q;q)_k.
Series qpoch_inf_series(const Series& X);

/// (A;q)_N and (A;q,t)_λ for a series-valued A (N >= 0).
Series qpoch_int_series(const Series& A, int N);
Series qpoch_partition_series(const Series& A, const Partition& lambda);

} // namespace anselberg
