#include "anselberg/selberg.hpp"

#include "doctest.h"

#include <cmath>

using namespace anselberg;

namespace {

SelbergParams P(std::vector<int> k, double a, std::vector<double> b, double g, Variant v = Variant::finite,
                Partition mu = {}) {
  SelbergParams p;
  p.k = std::move(k);
  p.alpha = a;
  p.beta = std::move(b);
  p.gamma = g;
  p.variant = v;
  p.mu = std::move(mu);
  return p;
}

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

// midpoint rule on the k = (1,1) region t1 > t2, after a substitution that
// removes the diagonal singularity
double quad_11(double alpha, double b1, double b2, double g) {
  static const int N = 400;
  double sum = 0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      const double u = (a + 0.5) / N, v = (b + 0.5) / N;
      // t2 = u, t1 = u + (1-u) v^{1/(1-g)}
      const double e = 1 / (1 - g);
      const double w = std::pow(v, e);
      const double t2 = u, t1 = u + (1 - u) * w;
      const double jac = (1 - u) * e * std::pow(v, e - 1);
      sum += jac * std::pow(1 - t1, b1 - 1) * std::pow(t2, alpha - 1) * std::pow(1 - t2, b2 - 1) *
             std::pow(t1 - t2, -g);
    }
  return sum / (N * N);
}

} // namespace

TEST_CASE("special functions") {
  CHECK(gamma_fn(1) == 1);
  CHECK(gamma_fn(5) == doctest::Approx(24).epsilon(1e-15));
  CHECK(std::abs(gamma_fn(0.5) - 1.7724538509055160) <= 1e-15);
  CHECK(rel_close(gamma_fn(-1.5), 4 * std::sqrt(M_PI) / 3, 1e-14));
  CHECK_THROWS_AS(gamma_fn(0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(-3), std::domain_error);
  CHECK(q_gamma(1, 0.3) == doctest::Approx(1).epsilon(1e-15));
  CHECK(q_gamma(2, 0.7) == doctest::Approx(1).epsilon(1e-14));
  CHECK(std::abs(q_gamma(2.5, 0.999) - 1.3293403881791) < 1e-2);
  // Γ_q(x+1) = (1-q^x)/(1-q) Γ_q(x)
  CHECK(rel_close(q_gamma(3.3, 0.6), (1 - std::pow(0.6, 2.3)) / 0.4 * q_gamma(2.3, 0.6), 1e-13));
  CHECK(rel_close(qpoch_real(0.3, 0.5, 2), (1 - 0.3) * (1 - 0.15), 1e-15));
  CHECK_THROWS_AS(q_gamma(-2, 0.5), std::domain_error);
  CHECK_THROWS_AS(qpoch_real(4, 0.5, 2), std::domain_error);
}

TEST_CASE("validate_params") {
  CHECK(validate_params(P({1, 2}, 1.5, {1.3, 1.1}, 0.3)).ok);
  auto v = validate_params(P({1, 2}, 1.5, {1.3, 1.1}, 0.6));
  CHECK_FALSE(v.ok);
  CHECK(v.violations == std::vector<std::string>{"gamma < 1/k_n"});
  v = validate_params(P({1, 2}, 1.5, {-0.1, 1.1}, 0.3));
  CHECK(std::find(v.violations.begin(), v.violations.end(), "Re(beta_1)>0") != v.violations.end());
  // n = 1: no upper bound, classical lower bounds
  CHECK(validate_params(P({3}, 1.5, {1.3}, 0.9)).ok);
  CHECK_FALSE(validate_params(P({3}, 0.5, {1.3}, -0.3)).ok);
  // k_s = k_{s-1} is flagged, not enforced
  v = validate_params(P({2, 2}, 1.5, {1.3, 1.1}, 0.25));
  CHECK(v.ok);
  CHECK(v.flags.size() == 1);
  CHECK_FALSE(validate_params(P({2, 1}, 1, {1, 1}, 0.1)).ok);
  CHECK_FALSE(validate_params(P({1, 1}, 1, {1, 1}, 0.1, Variant::jack, {1, 1})).ok);
}

TEST_CASE("closed forms: classical values") {
  CHECK(rel_close(an_selberg_rhs(P({1}, 2, {3}, 0.4)), 1.0 / 12, 1e-14));
  CHECK(rel_close(an_selberg_rhs(P({2}, 1, {1}, 1)), 1.0 / 12, 1e-14));
  CHECK(rel_close(an_selberg_rhs(P({1}, 1, {2}, 0.3, Variant::exp1)), 0.5, 1e-14));
  CHECK(rel_close(static_cast<double>(an_selberg_rhs_ext(P({2, 3}, 1.5, {1.3, 1.1}, 0.2))),
                  an_selberg_rhs(P({2, 3}, 1.5, {1.3, 1.1}, 0.2)), 1e-13));
  // ordered classical Selberg: Π Γ(α+(i-1)γ)Γ(β+(i-1)γ)Γ(1+iγ) / (Γ(α+β+(k+i-2)γ)Γ(1+γ)) / k!
  for (int k = 1; k <= 4; ++k) {
    double s = 1;
    for (int i = 1; i <= k; ++i)
      s *= std::tgamma(1.5 + (i - 1) * 0.25) * std::tgamma(1.3 + (i - 1) * 0.25) * std::tgamma(1 + i * 0.25) /
           (std::tgamma(2.8 + (k + i - 2) * 0.25) * std::tgamma(1.25) * i);
    CHECK(rel_close(an_selberg_rhs(P({k}, 1.5, {1.3}, 0.25)), s, 1e-13));
  }
  CHECK_THROWS_AS(an_selberg_rhs(P({1, 2}, 1, {1}, 0.1)), std::invalid_argument);
}

TEST_CASE("reduction with leading zeros") {
  for (const auto& l : std::vector<std::vector<int>>{{1, 2}, {2, 3}, {1, 1, 2}, {3}}) {
    std::vector<double> b;
    for (std::size_t i = 0; i < l.size(); ++i) b.push_back(1.1 + 0.1 * i);
    for (int zeros = 1; zeros <= 2; ++zeros) {
      auto k = l;
      auto bb = b;
      k.insert(k.begin(), zeros, 0);
      bb.insert(bb.begin(), zeros, 1.7);
      CHECK(rel_close(an_selberg_rhs(P(k, 1.4, bb, 0.2)), an_selberg_rhs(P(l, 1.4, b, 0.2)), 1e-13));
    }
  }
}

TEST_CASE("phase_integrand") {
  CHECK(phase_integrand(P({1}, 1, {1}, 0.3), {0.4}) == doctest::Approx(1));
  CHECK(phase_integrand(P({2}, 1, {1}, 1), {0.75, 0.25}) == doctest::Approx(0.25));
  CHECK(phase_integrand(P({1, 1}, 1, {1, 1}, 0.5), {0.64, 0.25}) == doctest::Approx(1.60128).epsilon(1e-5));
  CHECK_THROWS_AS(phase_integrand(P({1, 1}, 1, {1, 1}, 0.5), {0.5, 0.5}), std::domain_error);
  CHECK(phase_integrand(P({1}, 1, {2}, 0.3, Variant::exp1), {1.0}) == doctest::Approx(std::exp(-2.0)));
  CHECK(phase_integrand(P({1}, 1, {1}, 0.7, Variant::jack, {1}), {0.3}) == doctest::Approx(0.3));
}

TEST_CASE("Monte Carlo: small cases and reproducibility") {
  const MCConfig mc{400000, 11, 2};
  auto e = mc_selberg(P({1}, 2, {3}, 0.3), mc);
  CHECK(std::abs(e.value - 1.0 / 12) <= 4 * e.std_error);
  e = mc_selberg(P({2}, 1, {1}, 1), mc);
  CHECK(std::abs(e.value - 1.0 / 12) <= 4 * e.std_error);
  const auto p = P({1, 1}, 1.5, {1.3, 1.1}, 0.25);
  e = mc_selberg(p, mc);
  const double rhs = an_selberg_rhs(p);
  CHECK(std::abs(e.value - rhs) <= 4 * e.std_error);
  // independent deterministic quadrature over the single region t1 > t2
  CHECK(rel_close(quad_11(1.5, 1.3, 1.1, 0.25), rhs, 2e-3));
  const auto a = mc_selberg(p, {20000, 5, 3}), b = mc_selberg(p, {20000, 5, 3}), c = mc_selberg_serial(p, {20000, 5, 3});
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
  CHECK(a.value == c.value);
  CHECK(a.std_error == c.std_error);
  CHECK(mc_selberg(p, {20000, 6, 3}).value != a.value);
  CHECK_THROWS_AS(mc_selberg(P({1, 2}, 1.5, {1.3, 1.1}, 0.6), mc), std::invalid_argument);
}

TEST_CASE("q-integral") {
  auto r = q_selberg_both({P({1}, 1, {1}, 0.3), 0.5, 60});
  CHECK(rel_close(r.lhs, 1, 1e-12));
  CHECK(rel_close(r.rhs, 1, 1e-12));
  r = q_selberg_both({P({1}, 2, {3}, 0.3), 0.5, 60});
  const double qbeta = q_gamma(2, 0.5) * q_gamma(3, 0.5) / q_gamma(5, 0.5);
  CHECK(rel_close(r.lhs, qbeta, 1e-12));
  CHECK(r.rel_err <= 1e-12);
  const QSelbergParams q{P({1, 2}, 1.2, {0.8, 1.1}, 0.3), 0.5, 30};
  const auto s = q_selberg_both_serial(q), t = q_selberg_both(q);
  CHECK(s.lhs == t.lhs);
  CHECK(s.tail == t.tail);
  double prev = q_selberg_both({q.base, 0.5, 10}).tail;
  for (int W : {20, 40}) {
    const double cur = q_selberg_both({q.base, 0.5, W}).tail;
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("Jack, Kadell and Aomoto") {
  CHECK(rel_close(an_selberg_rhs(P({1}, 1, {1}, 0.7, Variant::jack, {1})), 0.5, 1e-14));
  CHECK(rel_close(an_selberg_rhs(P({2, 3}, 1.4, {1.2, 1.3}, 0.2, Variant::jack)),
                  an_selberg_rhs(P({2, 3}, 1.4, {1.2, 1.3}, 0.2)), 1e-14));
  for (const auto& mu : {Partition{}, Partition{1}, Partition{2}, Partition{1, 1}, Partition{3, 1}})
    CHECK(rel_close(an_selberg_rhs(P({2}, 1.3, {1.7}, 0.4, Variant::jack, mu)), kadell_rhs(2, 1.7, 1.3, 0.4, mu),
                    1e-13));
  for (int k = 1; k <= 4; ++k)
    for (int r = 0; r <= k; ++r) {
      double binom = 1, fact = 1;
      for (int i = 1; i <= r; ++i) binom = binom * (k - r + i) / i;
      for (int i = 2; i <= k; ++i) fact *= i;
      const Partition mu(std::vector<int>(r, 1));
      CHECK(rel_close(kadell_rhs(k, 1.7, 1.3, 0.4, mu), binom / fact * aomoto_rhs(k, r, 1.7, 1.3, 0.4), 1e-12));
    }
  const auto j = jack_selberg(P({2}, 1, {1}, 1, Variant::jack, {1}), {400000, 3, 2});
  CHECK(std::abs(j.lhs.value - j.rhs) <= 4 * j.lhs.std_error);
  CHECK(j.rhs == doctest::Approx(kadell_rhs(2, 1, 1, 1, {1})));
}

TEST_CASE("gamma = 0 identities") {
  CHECK(verify_er(1, 1));
  for (int n = 0; n <= 4; ++n) {
    for (int r = 0; r <= n; ++r) CHECK(verify_er(r, n));
    CHECK(verify_x0gen(n));
  }
  CHECK(rel_close(an_selberg_rhs(P({2}, 1, {1}, 0)), 0.5, 1e-15));
  CHECK(rel_close(gamma0_simplified_rhs({2}, 1, {1}), 0.5, 1e-15));
  // n >= 2: the simplified product misses 1/(β_s+...+β_r) for r < n
  CHECK(rel_close(gamma0_simplified_rhs({1, 1}, 1.5, {1.3, 1.1}) / 1.3, an_selberg_rhs(P({1, 1}, 1.5, {1.3, 1.1}, 0)),
                  1e-14));
  const auto g = gamma0_check({1, 2}, 1.5, {1.3, 1.1}, {400000, 9, 2});
  CHECK(g.pass);
}

TEST_CASE("reduction of leading ones and the worked example") {
  auto r = keen_check(P({1, 1}, 1.4, {1.2, 1.3}, 0.2), {}, false);
  CHECK(r.rel_err_closed_form <= 1e-12);
  r = keen_check(P({1, 1, 2}, 1.4, {1.2, 1.3, 1.1}, 0.2), {}, false);
  CHECK(r.rel_err_closed_form <= 1e-12);
  // γ = 0: the factor is Γ(β_1)/Γ(β_1+1) = 1/β_1
  CHECK(rel_close(keen_factor(P({1, 1}, 1, {1.6, 1}, 0)), 1 / 1.6, 1e-15));
  CHECK_THROWS_AS(keen_reduce(P({1, 2}, 1, {1, 1}, 0.1)), std::invalid_argument);
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) {
      std::vector<double> b;
      for (int i = 0; i < n; ++i) b.push_back(1.1 + 0.07 * i);
      std::vector<int> kk(n - 1, 1);
      kk.push_back(k);
      const double rhs = an_selberg_rhs(P(kk, 1.4, b, 0.2));
      CHECK(rel_close(example_rhs(n, k, 1.4, b, 0.2), rhs, 1e-13));
      CHECK(rel_close(example_iterated_rhs(n, k, 1.4, b, 0.2), rhs, 1e-12));
      if (n == 2) CHECK(rel_close(example_a2_rhs(k, 1.4, b[0], b[1], 0.2), rhs, 1e-13));
    }
}

TEST_CASE("exponential forms as scaling limits") {
  for (const auto v : {Variant::exp1, Variant::exp2}) {
    const auto p = P({1, 2}, 1.5, {1.3, 1.1}, 0.25, v);
    const double target = an_selberg_rhs(p);
    double prev = 1e300;
    for (double z : {10.0, 100.0, 1000.0}) {
      const double val = v == Variant::exp1 ? exp1_scaling(p, z) : exp2_scaling(p, z);
      const double err = std::abs(val - target);
      CHECK(err < prev);
      prev = err;
    }
    CHECK(prev < 5e-3 * target);
  }
}
