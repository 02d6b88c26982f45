#pragma once

#include "anselberg/chains.hpp"
#include "anselberg/partitions.hpp"
#include "anselberg/special.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace anselberg {

enum class Variant { finite, exp1, exp2, jack };
Variant parse_variant(const std::string& s);
std::string to_string(Variant v);

/// α_1 = ... = α_{n-1} = 1 and α_n = alpha. mu is only read by the jack variant.
struct SelbergParams {
  std::vector<int> k;
  double alpha = 1;
  std::vector<double> beta;
  double gamma = 0;
  Variant variant = Variant::finite;
  Partition mu;

  int n() const { return static_cast<int>(k.size()); }
  int K() const;
  /// k_s with k_0 = k_{n+1} = 0
  int ks(int s) const { return s < 1 || s > n() ? 0 : k[s - 1]; }
  double alpha_s(int s) const { return s == n() ? alpha : 1.0; }
  /// β_s + ... + β_r
  double beta_sum(int s, int r) const;
};

struct Validation {
  bool ok = true;
  std::vector<std::string> violations;
  /// conditions the theorem leaves open, reported but not enforced
  std::vector<std::string> flags;
};

/// Hypotheses of the finite theorem, or of the exponential corollaries for
/// those variants. A/0 counts as ±∞ with the sign of A, and the 1/k_n
/// upper bound is dropped when n = 1.
Validation validate_params(const SelbergParams& p);

/// Closed-form right-hand side for p.variant. Throws std::domain_error on
/// a gamma pole and std::invalid_argument on a malformed shape.
double an_selberg_rhs(const SelbergParams& p);
ExtFloat an_selberg_rhs_ext(const SelbergParams& p);
LogProduct<double> an_selberg_rhs_log(const SelbergParams& p);

/// Integrand at a flat point (t^{(1)}, ..., t^{(n)}). Throws
/// std::domain_error at coincident coupled coordinates or outside the domain.
double phase_integrand(const SelbergParams& p, const std::vector<double>& point);

struct MCConfig {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 42;
  int workers = 1;
};

struct Estimate {
  double value = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  /// draws that landed in some region of the chain
  std::uint64_t in_domain = 0;
};

constexpr const char* generator_id = "mt19937_64/splitmix64-streams v1";

/// Chain-weighted Monte Carlo. Draws are split over mc.workers independent
/// streams; the OpenMP and serial drivers give bit-identical results.
Estimate mc_selberg(const SelbergParams& p, const MCConfig& mc);
Estimate mc_selberg_serial(const SelbergParams& p, const MCConfig& mc);

struct QSelbergParams {
  SelbergParams base;
  double q = 0.5;
  int W = 40;
};

struct QSelbergResult {
  double lhs = 0, rhs = 0, rel_err = 0;
  /// |contribution| of the last shell Σ|λ^{(s)}| = W
  double tail = 0;
  std::uint64_t terms = 0;
};

/// Closed form with Γ_q in place of Γ (finite variant only).
double q_selberg_rhs(const SelbergParams& p, double q);
QSelbergResult q_selberg_both(const QSelbergParams& p);
QSelbergResult q_selberg_both_serial(const QSelbergParams& p);

struct JackResult {
  Estimate lhs;
  double rhs = 0;
};
JackResult jack_selberg(const SelbergParams& p, const MCConfig& mc);
/// n = 1 Jack integral over [0,1]^k divided by k!, weight x^{α-1}(1-x)^{β-1}.
double kadell_rhs(int k, double alpha, double beta, double gamma, const Partition& mu);
/// ∫_{[0,1]^k} |Δ|^{2γ} x_1...x_r Π x^{α-1}(1-x)^{β-1}.
double aomoto_rhs(int k, int r, double alpha, double beta, double gamma);

/// e_r(x_1..x_n) expanded from the partition sum with x_0 = 0. Exact.
bool verify_er(int r, int n);
/// Generating function identity in t, x_0, ..., x_n. Exact.
bool verify_x0gen(int n);

struct Gamma0Result {
  bool pass = false;
  Estimate lhs;
  /// γ -> 0 limit of the finite closed form
  double rhs = 0;
  /// the simplified product Π 1/k_s! (Γ(α)Γ(β_s+..+β_n)/Γ(α+β_s+..+β_n))^{k_s-k_{s-1}}
  double simplified_rhs = 0;
  bool er_pass = false, x0gen_pass = false;
};
Gamma0Result gamma0_check(const std::vector<int>& k, double alpha, const std::vector<double>& beta,
                          const MCConfig& mc);
double gamma0_simplified_rhs(const std::vector<int>& k, double alpha, const std::vector<double>& beta);

struct KeenResult {
  double rel_err_closed_form = 0;
  double rel_err_mc = 0;
  Estimate lhs;
  /// reduced integral times Γ(1-γ)Γ(β_1)/Γ(β_1-γ+1)
  double rhs = 0;
  bool mc_pass = false;
};
/// Removes the leading pair of ones: k = (1,1,k_3..k_n) -> (1,k_3..k_n).
SelbergParams keen_reduce(const SelbergParams& p);
double keen_factor(const SelbergParams& p);
KeenResult keen_check(const SelbergParams& p, const MCConfig& mc, bool run_mc = true);

/// Worked example at k = (1,...,1,k) with n-1 ones.
double example_rhs(int n, int k, double alpha, const std::vector<double>& beta, double gamma);
/// The same value after n-2 reduction steps: the A_2 integral at
/// (α; β_1+...+β_{n-1}-(n-2)γ, β_n) times the accumulated factors.
double example_iterated_rhs(int n, int k, double alpha, const std::vector<double>& beta, double gamma);
/// Explicit n = 2 product at k = (1,k).
double example_a2_rhs(int k, double alpha, double beta1, double beta2, double gamma);

/// ζ^E times the finite integral at (α; ζβ; γ), which tends to the exp1
/// value, and ζ^E times the finite integral at (ζ; β; γ), which tends to
/// the exp2 value.
double exp1_scaling(const SelbergParams& p, double zeta);
double exp2_scaling(const SelbergParams& p, double zeta);

/// |lhs - rhs| <= max(nsigma * stderr, rel * |rhs|)
bool within(const Estimate& e, double rhs, double nsigma, double rel);

} // namespace anselberg
