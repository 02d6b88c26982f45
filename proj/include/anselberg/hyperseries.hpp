#pragma once

#include "anselberg/series.hpp"
#include "anselberg/symfunc.hpp"

#include <string>
#include <utility>
#include <vector>

namespace anselberg {

/// Parameters and alphabets of an A_n basic hypergeometric series
/// r+1Φr[a; b; x^(1),...,x^(n)]. Upper parameters are degree-0 series so a
/// symbolic parameter can live in the series ring; each alphabet entry is a
/// monomial series.
struct PhiSpec {
  std::vector<Series> upper;
  std::vector<QtRational> lower;
  std::vector<int> shape; // k_1 <= ... <= k_n
  std::vector<std::vector<Series>> alphabets;
};

struct Truncation {
  int max_weight = 0; // Σ_s |λ^(s)|
};

/// x_1..x_k as symbolic variables named prefix1..prefixk from the ring.
std::vector<Series> symbolic_alphabet(const RingPtr& ring, const std::string& prefix, int k);
/// z (1, t, ..., t^{k-1}).
std::vector<Series> geometric_alphabet(const Series& z, int k);

/// Sum over tuples (λ^(1),...,λ^(n)) with l(λ^(s)) <= k_s and Σ|λ^(s)| <=
/// max_weight. With enforce_order the tuples are restricted to the
/// interlacing constraint λ^(s)_i >= λ^(s+1)_{i-k_s+k_{s+1}}; without it the
/// remaining tuples must have a vanishing ratio factor (std::logic_error
/// otherwise). A vanishing lower-parameter factor (b;q,t)_λ throws
/// std::domain_error naming b and λ.
Series phi_series(const PhiSpec& spec, const Truncation& trunc, bool enforce_order = true);

struct VerifyResult {
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string residual; // "0" on success
  std::vector<std::pair<std::string, bool>> checks;
};

/// Both sides of the Littlewood-Richardson summation identity in Q(q,t).
/// checks holds "vanishing" (does λ_i >= μ_{i+n-m} hold) and "zero_when_vanishing".
VerifyResult verify_lr_identity(int m, int n, const Partition& lambda, const Partition& mu);

/// Σ_λ b_λ P_λ(x) P_λ(y) = Π (t x_i y_j;q)_∞/(x_i y_j;q)_∞ through x-degree maxdeg.
VerifyResult verify_cauchy(int nx, int ny, int maxdeg);

/// 1Φ0[a; x] = Π (a x_i;q)_∞/(x_i;q)_∞ with symbolic a through degree maxdeg.
VerifyResult verify_q_binomial(int nvars, int maxdeg);

/// k_1 = ... = k_n = 1 with parameters (a, q^2 t; q^3 t^2) against the
/// factored 2φ1 times 1φ0 products, through degree maxdeg.
VerifyResult verify_equal_one_shape(int n, int maxdeg);

enum class QBinomialMode { thm2, thm3, cor1 };
QBinomialMode parse_qbinomial_mode(const std::string& s);
std::string to_string(QBinomialMode m);

/// A_n q-binomial identities with x^(1) symbolic (or geometric for cor1) and
/// x^(s) = z_s (1,...,t^{k_s-1}) for s >= 2.
VerifyResult verify_an_qbinomial(const std::vector<int>& shape, QBinomialMode mode, const Truncation& trunc);

/// The three complement identities for λ, ν ⊆ (N^m).
VerifyResult verify_complement_identities(const Partition& lambda, const Partition& omega, const Partition& nu,
                                          int m, int N);

} // namespace anselberg
