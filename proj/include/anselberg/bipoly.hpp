#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace anselberg {

using Integer = mpz_class;

/// Dense univariate polynomial over Z; index = degree, no trailing zeros.
/// The zero polynomial is the empty vector.
using UPoly = std::vector<Integer>;

namespace upoly {

void trim(UPoly& a);
int degree(const UPoly& a); // -1 for zero
UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Integer& c);
Integer content(const UPoly& a);
Integer max_norm(const UPoly& a);
Integer eval(const UPoly& a, const Integer& x);
std::optional<UPoly> exact_div(const UPoly& a, const UPoly& b);
/// Full gcd over Z[x] (integer content included), leading coefficient > 0.
UPoly gcd(const UPoly& a, const UPoly& b);

} // namespace upoly

/// Polynomial in Z[q, t], stored recursively as Z[t][q]: `coeffs[i]` is the
/// coefficient of q^i, itself a dense polynomial in t. Canonical: no trailing
/// zero q-coefficients.
class BiPoly {
public:
  BiPoly() = default;
  explicit BiPoly(Integer c);
  static BiPoly monomial(Integer c, int qexp, int texp);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  int deg_q() const { return static_cast<int>(coeffs_.size()) - 1; }
  int deg_t() const;
  /// Smallest exponents of q and t occurring (0,0 for the zero polynomial).
  std::pair<int, int> low_exponents() const;
  const std::vector<UPoly>& coeffs() const { return coeffs_; }
  Integer coefficient(int qexp, int texp) const;
  std::size_t term_count() const;

  /// Graded-lex leading term: highest total degree, ties broken by higher
  /// q-degree. Returns (qexp, texp, coeff); zero polynomial -> (0,0,0).
  struct Term {
    int qexp;
    int texp;
    Integer coeff;
  };
  Term leading_term() const;
  /// All nonzero terms in descending graded-lex order.
  std::vector<Term> terms() const;

  Integer content() const;
  Integer max_norm() const;
  UPoly eval_t(const Integer& x) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly scaled(const Integer& c) const;
  /// Multiply by q^a t^b (a, b >= 0).
  BiPoly shifted(int qexp, int texp) const;
  /// Divide by q^a t^b; requires every term to be divisible.
  BiPoly unshifted(int qexp, int texp) const;
  /// Exact division of every coefficient by an integer.
  BiPoly divided(const Integer& c) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const char* qname = "q", const char* tname = "t") const;

  static std::optional<BiPoly> exact_div(const BiPoly& a, const BiPoly& b);
  /// gcd in Z[q,t] with positive graded-lex leading coefficient.
  static BiPoly gcd(const BiPoly& a, const BiPoly& b);

  /// Normalise sign so the graded-lex leading coefficient is positive.
  /// Returns true if the polynomial was negated.
  bool make_leading_positive();

private:
  explicit BiPoly(std::vector<UPoly> c) : coeffs_(std::move(c)) { trim(); }
  void trim();
  static BiPoly gcd_primitive(const BiPoly& a, const BiPoly& b);
  static BiPoly gcd_prs(const BiPoly& a, const BiPoly& b);

  std::vector<UPoly> coeffs_;
};

} // namespace anselberg
