#include "anselberg/selberg.hpp"

#include "anselberg/symfunc.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

namespace anselberg {

Variant parse_variant(const std::string& s) {
  if (s == "finite") return Variant::finite;
  if (s == "exp1") return Variant::exp1;
  if (s == "exp2") return Variant::exp2;
  if (s == "jack") return Variant::jack;
  throw std::invalid_argument("unknown variant: " + s);
}

std::string to_string(Variant v) {
  switch (v) {
  case Variant::finite: return "finite";
  case Variant::exp1: return "exp1";
  case Variant::exp2: return "exp2";
  case Variant::jack: return "jack";
  }
  return "?";
}

int SelbergParams::K() const {
  int s = 0;
  for (int v : k) s += v;
  return s;
}

double SelbergParams::beta_sum(int s, int r) const {
  double b = 0;
  for (int j = s; j <= r; ++j) b += beta[j - 1];
  return b;
}

namespace {

std::string shape_error(const SelbergParams& p) {
  if (p.k.empty()) return "n >= 1";
  for (std::size_t s = 0; s < p.k.size(); ++s)
    if (p.k[s] < 0 || (s && p.k[s] < p.k[s - 1])) return "0 <= k_1 <= ... <= k_n";
  if (p.beta.size() != p.k.size()) return "one beta per group";
  return {};
}

void check_shape(const SelbergParams& p) {
  const auto e = shape_error(p);
  if (!e.empty()) throw std::invalid_argument("malformed parameters: " + e);
}

constexpr double inf = std::numeric_limits<double>::infinity();

// A/0 = ±∞ with the sign of A
double ratio(double A, double d) {
  if (d != 0) return A / d;
  return A >= 0 ? inf : -inf;
}

} // namespace

Validation validate_params(const SelbergParams& p) {
  Validation v;
  auto fail = [&](std::string c) {
    v.ok = false;
    v.violations.push_back(std::move(c));
  };
  if (auto e = shape_error(p); !e.empty()) {
    fail("shape: " + e);
    return v;
  }
  const int n = p.n(), kn = p.k.back();
  const double g = p.gamma;
  if (p.variant != Variant::exp2 && !(p.alpha > 0)) fail("Re(alpha)>0");
  for (int s = 1; s <= n; ++s)
    if (!(p.beta[s - 1] > 0)) fail("Re(beta_" + std::to_string(s) + ")>0");
  if (p.variant == Variant::exp2) {
    if (!(g > -ratio(1, kn))) fail("gamma > -1/k_n");
  } else if (!(g > -std::min(ratio(p.alpha, kn - 1), ratio(1, kn)))) {
    fail("gamma > -min(alpha/(k_n-1), 1/k_n)");
  }
  if (n > 1 && !(g < ratio(1, kn))) fail("gamma < 1/k_n");
  if (p.variant != Variant::exp1)
    for (int s = 1; s <= n; ++s) {
      const int d = p.ks(s) - p.ks(s - 1) - 1;
      if (d < 0)
        v.flags.push_back("unspecified condition regime: k_" + std::to_string(s) + " = k_" +
                          std::to_string(s - 1));
      else if (!(g > -ratio(p.beta[s - 1], d)))
        fail("gamma > -beta_s/(k_s-k_{s-1}-1) [s=" + std::to_string(s) + "]");
      for (int r = s + 1; r <= n; ++r)
        if (!(g < p.beta_sum(s, r) / (r - s)))
          fail("gamma < (beta_s+...+beta_r)/(r-s) [s=" + std::to_string(s) + ",r=" + std::to_string(r) + "]");
    }
  if (p.variant == Variant::jack) {
    if (p.mu.length() > p.k[0]) fail("l(mu) <= k_1");
    if (g == 0) fail("gamma != 0 (Jack parameter 1/gamma)");
  }
  if (!(p.alpha >= 1) || std::any_of(p.beta.begin(), p.beta.end(), [](double b) { return b < 1; }) || g < 0)
    v.flags.push_back("high-variance");
  return v;
}

// ------------------------------------------------------------- closed forms

namespace {

// Γ(iγ)/Γ(γ) written as Γ(1+iγ)/(i Γ(1+γ)) so that γ = 0 is harmless
template <class T> void vandermonde_ratio(LogProduct<T>& P, int i, const T& g) {
  P.gamma(T(1) + T(i) * g);
  P.gamma(T(1) + g, -1);
  P.mul(T(1) / T(i));
}

template <class T> LogProduct<T> rhs_impl(const SelbergParams& p) {
  check_shape(p);
  const int n = p.n();
  const T g(p.gamma);
  auto B = [&](int s, int r) {
    T b(0);
    for (int j = s; j <= r; ++j) b += T(p.beta[j - 1]);
    return b;
  };
  auto as = [&](int s) { return s == n ? T(p.alpha) : T(1); };
  auto k = [&](int s) { return p.ks(s); };
  LogProduct<T> P;
  if (p.variant == Variant::exp2) {
    for (int s = 1; s <= n; ++s)
      for (int r = s; r <= n; ++r)
        for (int i = 1; i <= k(s) - k(s - 1); ++i) {
          P.gamma(T(B(s, r) + T(i + s - r - 1) * g));
          if (r < n) P.gamma(T(T(1) + B(s, r) + T(i + s - r + k(r) - k(r + 1) - 2) * g), -1);
        }
    for (int s = 1; s <= n; ++s)
      for (int i = 1; i <= k(s); ++i) {
        vandermonde_ratio(P, i, g);
        if (s < n) P.gamma(T(T(1) + T(i - k(s + 1) - 1) * g));
      }
    return P;
  }
  for (int s = 1; s <= n; ++s)
    for (int r = s; r <= n; ++r) {
      if (p.variant == Variant::exp1) {
        P.pow(B(s, r), T(-(as(r) + T(k(r) - k(r + 1) - 1) * g) * T(k(s) - k(s - 1))));
        continue;
      }
      for (int i = 1; i <= k(s) - k(s - 1); ++i) {
        P.gamma(T(B(s, r) + T(i + s - r - 1) * g));
        P.gamma(T(as(r) + B(s, r) + T(i + s - r + k(r) - k(r + 1) - 2) * g), -1);
      }
    }
  for (int s = 1; s <= n; ++s)
    for (int i = 1; i <= k(s); ++i) {
      P.gamma(T(as(s) + T(i - k(s + 1) - 1) * g));
      vandermonde_ratio(P, i, g);
    }
  if (p.variant == Variant::jack) {
    const int k1 = k(1);
    if (p.mu.length() > k1) throw std::invalid_argument("Jack partition longer than k_1");
    for (int i = 1; i <= k1; ++i)
      for (int j = i + 1; j <= k1; ++j) {
        const int d = p.mu.part(i) - p.mu.part(j);
        P.rising(T(T(j - i + 1) * g), d, 1);
        P.rising(T(T(j - i) * g), d, -1);
      }
    for (int s = 1; s <= n; ++s)
      for (int i = 1; i <= k1; ++i) {
        const int m = p.mu.part(i);
        P.rising(T(B(1, s) + T(k1 - s - i + 1) * g), m, 1);
        P.rising(T(as(s) + B(1, s) + T(k1 + k(s) - k(s + 1) - s - i) * g), m, -1);
      }
  }
  return P;
}

} // namespace

LogProduct<double> an_selberg_rhs_log(const SelbergParams& p) { return rhs_impl<double>(p); }
double an_selberg_rhs(const SelbergParams& p) { return rhs_impl<double>(p).value(); }
ExtFloat an_selberg_rhs_ext(const SelbergParams& p) { return rhs_impl<ExtFloat>(p).value(); }

// --------------------------------------------------------------- integrand

namespace {

// γ given as a double is treated as rational when a small-denominator
// fraction reproduces it to rounding
bool as_fraction(double x, Rational& out) {
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 40; ++it) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e9) break;
    const long long ai = static_cast<long long>(a);
    const long long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > 1000000) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    if (std::abs(x - static_cast<double>(h1) / k1) <= 4 * std::numeric_limits<double>::epsilon() * std::abs(x)) {
      out = Rational(static_cast<long>(h1), static_cast<long>(k1));
      out.canonicalize();
      return true;
    }
    if (r == a) break;
    r = 1 / (r - a);
  }
  return false;
}

struct Ctx {
  const SelbergParams& p;
  int n = 0;
  std::size_t K = 0;
  std::vector<int> k;
  std::vector<std::size_t> off;
  bool desc = true;
  bool unbounded = false;
  std::vector<double> rate;
  double log_fact = 0;
  SymFunc<double> jack;
  // weight[s][i-1][m-1]
  std::vector<std::vector<std::vector<double>>> weight;

  explicit Ctx(const SelbergParams& sp) : p(sp) {
    check_shape(p);
    n = p.n();
    k = p.k;
    for (int v : k) off.push_back(K), K += v;
    desc = p.variant == Variant::finite || p.variant == Variant::exp1;
    unbounded = p.variant == Variant::exp1 || p.variant == Variant::exp2;
    for (int s = 1; s <= n; ++s) {
      // exp2: rate 1/2 keeps the lower groups, which carry no decay of
      // their own, at finite variance
      rate.push_back(p.variant == Variant::exp1 ? p.beta[s - 1] : 0.5);
      log_fact += std::lgamma(k[s - 1] + 1.0);
    }
    if (p.variant == Variant::jack) {
      if (p.gamma == 0) throw std::domain_error("Jack parameter 1/gamma undefined at gamma = 0");
      Rational g;
      if (as_fraction(p.gamma, g)) {
        const Rational a = 1 / g;
        jack = jack_P_rational(p.mu, a).mapped<double>([](const Rational& c) { return c.get_d(); });
      } else {
        jack = jack_P_double(p.mu, 1 / p.gamma);
      }
    }
    weight.resize(n > 0 ? n - 1 : 0);
    for (int s = 0; s + 1 < n; ++s) {
      weight[s].resize(k[s]);
      for (int i = 1; i <= k[s]; ++i)
        for (int m = 1; m <= k[s + 1] - k[s] + i; ++m)
          weight[s][i - 1].push_back(chain_factor(i, k[s], k[s + 1], m, p.gamma));
    }
  }

  // log|integrand| and the Jack factor; false at a singular point
  bool log_integrand(const double* t, double& logv, double& factor) const {
    logv = 0;
    factor = 1;
    const double g = p.gamma;
    for (int s = 0; s < n; ++s) {
      const double a = p.alpha_s(s + 1) - 1, b = p.beta[s];
      const double* x = t + off[s];
      for (int i = 0; i < k[s]; ++i) {
        const double v = x[i];
        switch (p.variant) {
        case Variant::finite:
          if (!(v > 0 && v < 1)) return false;
          logv += a * std::log(v) + (b - 1) * std::log1p(-v);
          break;
        case Variant::exp1:
          if (!(v > 0)) return false;
          logv += a * std::log(v) - b * v;
          break;
        case Variant::exp2:
          if (!(v > 0)) return false;
          logv += (b - 1) * std::log(v);
          if (s == n - 1) logv -= v;
          break;
        case Variant::jack:
          if (!(v > 0 && v < 1)) return false;
          logv += a * std::log1p(-v) + (b - 1) * std::log(v);
          break;
        }
      }
      if (g == 0) continue;
      for (int i = 0; i < k[s]; ++i)
        for (int j = i + 1; j < k[s]; ++j) {
          const double d = std::abs(x[i] - x[j]);
          if (d == 0) return false;
          logv += 2 * g * std::log(d);
        }
      if (s + 1 < n) {
        const double* y = t + off[s + 1];
        for (int i = 0; i < k[s]; ++i)
          for (int j = 0; j < k[s + 1]; ++j) {
            const double d = std::abs(x[i] - y[j]);
            if (d == 0) return false;
            logv -= g * std::log(d);
          }
      }
    }
    if (p.variant == Variant::jack) {
      const std::vector<double> x1(t, t + k[0]);
      factor = evaluate<double, double>(jack, x1, [](double c) { return c; }, 1.0);
    }
    return true;
  }

  // chain weight of the region holding an ordered point; 0 outside the chain
  double region_weight(const double* t) const {
    double w = 1;
    for (int s = 0; s + 1 < n; ++s) {
      const double* x = t + off[s];
      const double* y = t + off[s + 1];
      for (int i = 1; i <= k[s]; ++i) {
        int cnt = 0;
        for (int j = 0; j < k[s + 1]; ++j)
          if (desc ? y[j] > x[i - 1] : y[j] < x[i - 1]) ++cnt;
        const int m = cnt + 1;
        if (m > k[s + 1] - k[s] + i) return 0;
        w *= weight[s][i - 1][m - 1];
      }
    }
    return w;
  }
};

struct Acc {
  std::uint64_t n = 0, in = 0;
  double mean = 0, m2 = 0;
  void push(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }
  void merge(const Acc& o) {
    if (o.n == 0) return;
    const double na = static_cast<double>(n), nb = static_cast<double>(o.n), N = na + nb;
    const double d = o.mean - mean;
    mean += d * nb / N;
    m2 += o.m2 + d * d * na * nb / N;
    n += o.n;
    in += o.in;
  }
};

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, int worker) {
  std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL * static_cast<std::uint64_t>(worker + 1));
  splitmix64(s);
  return splitmix64(s);
}

Acc run_worker(const Ctx& c, std::uint64_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> t(c.K);
  Acc acc;
  while (acc.n < count) {
    double logdens = c.log_fact;
    for (int s = 0; s < c.n; ++s) {
      double* x = t.data() + c.off[s];
      for (int i = 0; i < c.k[s]; ++i) {
        // uniform on the open interval (0,1)
        const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
        if (c.unbounded) {
          const double r = c.rate[s];
          x[i] = -std::log1p(-u) / r;
          logdens += std::log(r) - r * x[i];
        } else {
          x[i] = u;
        }
      }
      if (c.desc) std::sort(x, x + c.k[s], std::greater<>());
      else std::sort(x, x + c.k[s]);
    }
    const double w = c.region_weight(t.data());
    if (w == 0) {
      acc.push(0);
      continue;
    }
    double logv, factor;
    if (!c.log_integrand(t.data(), logv, factor)) continue; // resample
    ++acc.in;
    acc.push(w * factor * std::exp(logv - logdens));
  }
  return acc;
}

Estimate run_mc(const SelbergParams& p, const MCConfig& mc, bool parallel) {
  const auto v = validate_params(p);
  if (!v.ok) throw std::invalid_argument("parameters outside the validity window: " + v.violations.front());
  if (mc.workers < 1 || mc.samples < 2) throw std::invalid_argument("need workers >= 1 and samples >= 2");
  const Ctx c(p);
  const int W = mc.workers;
  std::vector<Acc> parts(W);
  auto share = [&](int w) { return mc.samples / W + (static_cast<std::uint64_t>(w) < mc.samples % W ? 1 : 0); };
  if (parallel) {
#pragma omp parallel for num_threads(W) schedule(static, 1)
    for (int w = 0; w < W; ++w) parts[w] = run_worker(c, share(w), stream_seed(mc.seed, w));
  } else {
    for (int w = 0; w < W; ++w) parts[w] = run_worker(c, share(w), stream_seed(mc.seed, w));
  }
  Acc total;
  for (const auto& a : parts) total.merge(a);
  if (total.in == 0) throw std::runtime_error("no sample landed in the chain");
  Estimate e;
  e.value = total.mean;
  e.std_error = std::sqrt(total.m2 / static_cast<double>(total.n - 1) / static_cast<double>(total.n));
  e.samples = total.n;
  e.seed = mc.seed;
  e.workers = W;
  e.in_domain = total.in;
  return e;
}

} // namespace

double phase_integrand(const SelbergParams& p, const std::vector<double>& point) {
  const Ctx c(p);
  if (point.size() != c.K) throw std::invalid_argument("phase_integrand: point has wrong dimension");
  double logv, factor;
  if (!c.log_integrand(point.data(), logv, factor))
    throw std::domain_error("phase_integrand: singular point or outside the domain");
  return factor * std::exp(logv);
}

Estimate mc_selberg(const SelbergParams& p, const MCConfig& mc) { return run_mc(p, mc, true); }
Estimate mc_selberg_serial(const SelbergParams& p, const MCConfig& mc) { return run_mc(p, mc, false); }

bool within(const Estimate& e, double rhs, double nsigma, double rel) {
  return std::abs(e.value - rhs) <= std::max(nsigma * e.std_error, rel * std::abs(rhs));
}

// ------------------------------------------------------------- q-integral

double q_selberg_rhs(const SelbergParams& p, double q) {
  check_shape(p);
  if (p.variant != Variant::finite) throw std::invalid_argument("q-integral needs the finite variant");
  const int n = p.n();
  const double g = p.gamma;
  auto k = [&](int s) { return p.ks(s); };
  double r = 1;
  for (int s = 1; s <= n; ++s)
    for (int rr = s; rr <= n; ++rr)
      for (int i = 1; i <= k(s) - k(s - 1); ++i) {
        const double B = p.beta_sum(s, rr);
        r *= q_gamma(B + (i + s - rr - 1) * g, q) /
             q_gamma(p.alpha_s(rr) + B + (i + s - rr + k(rr) - k(rr + 1) - 2) * g, q);
      }
  for (int s = 1; s <= n; ++s)
    for (int i = 1; i <= k(s); ++i) {
      r *= q_gamma(p.alpha_s(s) + (i - k(s + 1) - 1) * g, q);
      // Γ_q(iγ)/Γ_q(γ) through Γ_q(x+1) = (1-q^x)/(1-q) Γ_q(x)
      if (g == 0) r /= i;
      else r *= q_gamma(1 + i * g, q) / q_gamma(1 + g, q) * (1 - std::pow(q, g)) / (1 - std::pow(q, i * g));
    }
  return r;
}

namespace {

struct QCtx {
  const SelbergParams& p;
  double q;
  int W;
  int n;
  std::vector<int> k;

  double term(const std::vector<std::vector<int>>& lam) const {
    const double g = p.gamma;
    auto qp = [&](double e) { return std::pow(q, e); };
    double T = 1;
    const int kn = k[n - 1];
    for (int i = 1; i <= kn; ++i) T *= qpoch_real(qp(1 + (kn - i) * g + lam[n - 1][i - 1]), q, p.alpha - 1);
    for (int s = 0; s < n; ++s)
      for (int i = 0; i < k[s]; ++i) T *= qp(p.beta[s] * lam[s][i]);
    for (int s = 0; s + 1 < n; ++s)
      for (int i = 1; i <= k[s]; ++i)
        for (int j = 1; j <= k[s + 1]; ++j) {
          const int u = i - j - k[s] + k[s + 1];
          const int li = lam[s][i - 1], lj = lam[s + 1][j - 1];
          T *= qp(-g * lj) * qpoch_real(qp(1 - u * g + li - lj), q, -g);
        }
    for (int s = 0; s < n; ++s)
      for (int i = 1; i <= k[s]; ++i)
        for (int j = i + 1; j <= k[s]; ++j) {
          const int li = lam[s][i - 1], lj = lam[s][j - 1];
          T *= qp(2 * g * lj) * (1 - qp((j - i) * g + li - lj)) * qpoch_real(qp(1 + (j - i - 1) * g + li - lj), q, 2 * g - 1);
        }
    return T;
  }

  struct Partial {
    double sum = 0, tail = 0;
    std::uint64_t terms = 0;
  };

  // groups s-1 down to 0 below a fixed top group
  void descend(std::vector<std::vector<int>>& lam, int s, int used, Partial& out) const {
    if (s < 0) {
      const double t = term(lam);
      out.sum += t;
      if (used == W) out.tail += std::abs(t);
      ++out.terms;
      return;
    }
    std::vector<int> lb(k[s]);
    for (int i = 1; i <= k[s]; ++i) lb[i - 1] = lam[s + 1][i - k[s] + k[s + 1] - 1];
    std::vector<int> suffix(k[s] + 1, 0);
    for (int i = k[s] - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + lb[i];
    auto& cur = lam[s];
    cur.assign(k[s], 0);
    std::function<void(int, int, int)> rec = [&](int i, int maxv, int left) {
      if (i == k[s]) {
        descend(lam, s - 1, W - left, out);
        return;
      }
      for (int v = lb[i]; v <= maxv && left - v >= suffix[i + 1]; ++v) {
        cur[i] = v;
        rec(i + 1, v, left - v);
      }
    };
    if (suffix[0] <= W - used) rec(0, W - used, W - used);
  }
};

QSelbergResult q_run(const QSelbergParams& qp, bool parallel) {
  const SelbergParams& p = qp.base;
  check_shape(p);
  if (!(qp.q > 0 && qp.q < 1)) throw std::invalid_argument("need 0 < q < 1");
  if (qp.W < 0) throw std::invalid_argument("need W >= 0");
  const auto v = validate_params(p);
  if (!v.ok) throw std::invalid_argument("parameters outside the validity window: " + v.violations.front());
  const QCtx c{p, qp.q, qp.W, p.n(), p.k};
  // top group choices
  std::vector<std::vector<int>> tops;
  std::vector<int> cur(c.k.back());
  std::function<void(int, int, int)> rec = [&](int i, int maxv, int left) {
    if (i == c.k.back()) {
      tops.push_back(cur);
      return;
    }
    for (int v = 0; v <= std::min(maxv, left); ++v) {
      cur[i] = v;
      rec(i + 1, v, left - v);
    }
  };
  rec(0, qp.W, qp.W);
  std::vector<QCtx::Partial> parts(tops.size());
  auto one = [&](std::size_t a) {
    std::vector<std::vector<int>> lam(c.n);
    lam[c.n - 1] = tops[a];
    int used = 0;
    for (int x : tops[a]) used += x;
    c.descend(lam, c.n - 2, used, parts[a]);
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t a = 0; a < tops.size(); ++a) one(a);
  } else {
    for (std::size_t a = 0; a < tops.size(); ++a) one(a);
  }
  QSelbergResult r;
  double sum = 0, tail = 0;
  for (const auto& pt : parts) sum += pt.sum, tail += pt.tail, r.terms += pt.terms;
  const double scale = std::pow(1 - qp.q, p.K());
  r.lhs = scale * sum;
  r.tail = scale * tail;
  r.rhs = q_selberg_rhs(p, qp.q);
  r.rel_err = std::abs(r.lhs / r.rhs - 1);
  return r;
}

} // namespace

QSelbergResult q_selberg_both(const QSelbergParams& p) { return q_run(p, true); }
QSelbergResult q_selberg_both_serial(const QSelbergParams& p) { return q_run(p, false); }

// ------------------------------------------------------------------- Jack

JackResult jack_selberg(const SelbergParams& p, const MCConfig& mc) {
  if (p.variant != Variant::jack) throw std::invalid_argument("jack_selberg needs the jack variant");
  JackResult r;
  r.lhs = mc_selberg(p, mc);
  r.rhs = an_selberg_rhs(p);
  return r;
}

double kadell_rhs(int k, double alpha, double beta, double gamma, const Partition& mu) {
  if (mu.length() > k) throw std::invalid_argument("kadell_rhs: l(mu) > k");
  LogProduct<double> P;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      const int d = mu.part(i) - mu.part(j);
      P.gamma((j - i + 1) * gamma + d);
      P.gamma((j - i) * gamma + d, -1);
    }
  for (int i = 1; i <= k; ++i) {
    P.gamma(alpha + (k - i) * gamma + mu.part(i));
    P.gamma(beta + (i - 1) * gamma);
    P.gamma(alpha + beta + (2 * k - i - 1) * gamma + mu.part(i), -1);
  }
  return P.value();
}

double aomoto_rhs(int k, int r, double alpha, double beta, double gamma) {
  if (r < 0 || r > k) throw std::invalid_argument("aomoto_rhs: need 0 <= r <= k");
  LogProduct<double> P;
  for (int i = 1; i <= r; ++i) {
    P.mul(alpha + (k - i) * gamma);
    P.mul(1 / (alpha + beta + (2 * k - i - 1) * gamma));
  }
  for (int i = 1; i <= k; ++i) {
    P.gamma(alpha + (i - 1) * gamma);
    P.gamma(beta + (i - 1) * gamma);
    P.gamma(i * gamma + 1);
    P.gamma(alpha + beta + (i + k - 2) * gamma, -1);
    P.gamma(gamma + 1, -1);
  }
  return P.value();
}

// ------------------------------------------------------------ γ = 0 case

namespace {

using Mono = std::vector<int>;
using MPoly = std::map<Mono, Rational>;

void add_to(MPoly& a, const MPoly& b, const Rational& c = 1) {
  for (const auto& [m, v] : b) {
    Rational& x = a[m];
    x += c * v;
    if (x == 0) a.erase(m);
  }
}

MPoly mul(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, va] : a)
    for (const auto& [mb, vb] : b) {
      Mono m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      Rational& x = r[m];
      x += va * vb;
      if (x == 0) r.erase(m);
    }
  return r;
}

MPoly constant(int nv, const Rational& c) {
  MPoly r;
  if (c != 0) r[Mono(nv, 0)] = c;
  return r;
}

MPoly var(int nv, int i) {
  Mono m(nv, 0);
  m[i] = 1;
  return MPoly{{m, Rational(1)}};
}

MPoly power(const MPoly& a, int e) {
  MPoly r = constant(static_cast<int>(a.empty() ? 0 : a.begin()->first.size()), 1);
  if (a.empty()) return e == 0 ? r : MPoly{};
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

Rational factorial(int m) {
  Rational f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

} // namespace

bool verify_er(int r, int n) {
  if (r < 0 || n < 0) throw std::invalid_argument("verify_er: negative size");
  // x_j -> variable j-1; x_0 = 0
  auto x = [&](int j) { return j == 0 ? MPoly{} : var(n, j - 1); };
  auto diff = [&](int j) {
    MPoly d = x(j);
    add_to(d, x(j - 1), -1);
    return d;
  };
  MPoly lhs;
  std::vector<int> lam(r);
  std::function<void(int, int)> rec = [&](int i, int maxv) {
    if (i == r) {
      Rational c = 1;
      std::map<int, int> mult;
      for (int v : lam) ++mult[v];
      for (const auto& [v, m] : mult) c /= factorial(m);
      MPoly term = constant(n, c);
      for (int a = 1; a <= r; ++a) {
        const int f = n - lam[a - 1] - a + 2;
        if (f == 0) return;
        MPoly d = diff(lam[a - 1]);
        term = mul(term, d);
        term = mul(term, constant(n, f));
      }
      add_to(lhs, term);
      return;
    }
    for (int v = 1; v <= maxv; ++v) {
      lam[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, n);
  MPoly er;
  std::vector<int> pick;
  std::function<void(int)> sub = [&](int from) {
    if (static_cast<int>(pick.size()) == r) {
      MPoly m = constant(n, 1);
      for (int j : pick) m = mul(m, x(j));
      add_to(er, m);
      return;
    }
    for (int j = from; j <= n; ++j) {
      pick.push_back(j);
      sub(j + 1);
      pick.pop_back();
    }
  };
  sub(1);
  if (n == 0 && r == 0) er = constant(0, 1);
  return lhs == er;
}

bool verify_x0gen(int n) {
  if (n < 0) throw std::invalid_argument("verify_x0gen: negative n");
  // variable 0 is t, variable 1+j is x_j
  const int nv = n + 2;
  const MPoly t = var(nv, 0);
  auto x = [&](int j) { return var(nv, 1 + j); };
  MPoly one_tx0 = constant(nv, 1);
  add_to(one_tx0, mul(t, x(0)));
  MPoly lhs;
  std::vector<int> m(n + 2, 0);
  // m[1..n]; M_{n+1} = 0 and M_1 <= n, otherwise 1/(n-M_1)! vanishes
  std::function<void(int, int)> rec = [&](int j, int Mnext) {
    if (j == 0) {
      const int M1 = Mnext;
      MPoly term = power(one_tx0, n - M1);
      term = mul(term, constant(nv, 1 / factorial(n - M1)));
      int M = 0;
      for (int jj = n; jj >= 1; --jj) {
        const int coef = n - jj + 1 - M;
        M += m[jj];
        MPoly d = x(jj);
        add_to(d, x(jj - 1), -1);
        term = mul(term, power(mul(t, d), m[jj]));
        term = mul(term, constant(nv, Rational(coef) / factorial(m[jj])));
        if (term.empty()) return;
      }
      add_to(lhs, term);
      return;
    }
    for (int v = 0; Mnext + v <= n; ++v) {
      m[j] = v;
      rec(j - 1, Mnext + v);
    }
    m[j] = 0;
  };
  rec(n, 0);
  MPoly rhs = constant(nv, 1);
  for (int i = 1; i <= n; ++i) {
    MPoly f = constant(nv, 1);
    add_to(f, mul(t, x(i)));
    rhs = mul(rhs, f);
  }
  return lhs == rhs;
}

double gamma0_simplified_rhs(const std::vector<int>& k, double alpha, const std::vector<double>& beta) {
  const int n = static_cast<int>(k.size());
  LogProduct<double> P;
  for (int s = 1; s <= n; ++s) {
    P.gamma(k[s - 1] + 1.0, -1);
    double B = 0;
    for (int j = s; j <= n; ++j) B += beta[j - 1];
    const int e = k[s - 1] - (s > 1 ? k[s - 2] : 0);
    P.gamma(alpha, e);
    P.gamma(B, e);
    P.gamma(alpha + B, -e);
  }
  return P.value();
}

Gamma0Result gamma0_check(const std::vector<int>& k, double alpha, const std::vector<double>& beta,
                          const MCConfig& mc) {
  SelbergParams p;
  p.k = k;
  p.alpha = alpha;
  p.beta = beta;
  Gamma0Result r;
  r.lhs = mc_selberg(p, mc);
  r.rhs = an_selberg_rhs(p);
  r.simplified_rhs = gamma0_simplified_rhs(k, alpha, beta);
  r.er_pass = r.x0gen_pass = true;
  for (int nn = 0; nn <= 5; ++nn) {
    for (int rr = 0; rr <= nn; ++rr) r.er_pass = r.er_pass && verify_er(rr, nn);
    r.x0gen_pass = r.x0gen_pass && verify_x0gen(nn);
  }
  r.pass = within(r.lhs, r.rhs, 3, 0.02) && r.er_pass && r.x0gen_pass;
  return r;
}

// ------------------------------------------------ reduction and examples

SelbergParams keen_reduce(const SelbergParams& p) {
  check_shape(p);
  if (p.n() < 2 || p.k[0] != 1 || p.k[1] != 1) throw std::invalid_argument("keen_reduce: need k_1 = k_2 = 1");
  SelbergParams r = p;
  r.k.erase(r.k.begin());
  r.beta.erase(r.beta.begin());
  r.beta[0] = p.beta[0] + p.beta[1] - p.gamma;
  return r;
}

double keen_factor(const SelbergParams& p) {
  LogProduct<double> P;
  P.gamma(1 - p.gamma);
  P.gamma(p.beta[0]);
  P.gamma(p.beta[0] - p.gamma + 1, -1);
  return P.value();
}

KeenResult keen_check(const SelbergParams& p, const MCConfig& mc, bool run_mc) {
  if (p.variant != Variant::finite) throw std::invalid_argument("keen_check needs the finite variant");
  const SelbergParams red = keen_reduce(p);
  for (const auto* q : {&p, &red})
    if (auto v = validate_params(*q); !v.ok) throw std::invalid_argument("keen_check: " + v.violations.front());
  KeenResult r;
  r.rhs = an_selberg_rhs(red) * keen_factor(p);
  r.rel_err_closed_form = std::abs(an_selberg_rhs(p) / r.rhs - 1);
  if (run_mc) {
    r.lhs = mc_selberg(p, mc);
    r.rel_err_mc = std::abs(r.lhs.value / r.rhs - 1);
    r.mc_pass = within(r.lhs, r.rhs, 3, 0.03);
  }
  return r;
}

double example_rhs(int n, int k, double alpha, const std::vector<double>& beta, double g) {
  if (n < 2 || k < 1 || static_cast<int>(beta.size()) != n) throw std::invalid_argument("example_rhs: need n >= 2");
  LogProduct<double> P;
  P.gamma(1 - k * g);
  P.gamma(1 - g, n - 2);
  for (int i = 1; i <= k; ++i) {
    P.gamma(alpha + (i - 1) * g);
    vandermonde_ratio(P, i, g);
  }
  for (int i = 1; i <= k - 1; ++i) {
    P.gamma(beta[n - 1] + (i - 1) * g);
    P.gamma(alpha + beta[n - 1] + (i + k - 2) * g, -1);
  }
  double B = 0;
  for (int i = 1; i <= n; ++i) {
    B += beta[i - 1];
    const double A = i <= n - 2 ? 1 : i == n - 1 ? 1 - (k - 1) * g : alpha + k * g;
    P.gamma(B + (1 - i) * g);
    P.gamma(A + B - i * g, -1);
  }
  return P.value();
}

double example_iterated_rhs(int n, int k, double alpha, const std::vector<double>& beta, double g) {
  if (n < 2 || k < 1 || static_cast<int>(beta.size()) != n) throw std::invalid_argument("example_iterated_rhs: need n >= 2");
  double head = 0;
  for (int i = 1; i <= n - 1; ++i) head += beta[i - 1];
  SelbergParams a2;
  a2.k = {1, k};
  a2.alpha = alpha;
  a2.beta = {head - (n - 2) * g, beta[n - 1]};
  a2.gamma = g;
  LogProduct<double> P = an_selberg_rhs_log(a2);
  P.gamma(1 - g, n - 2);
  double B = 0;
  for (int i = 1; i <= n - 2; ++i) {
    B += beta[i - 1];
    P.gamma(B + (1 - i) * g);
    P.gamma(1 + B - i * g, -1);
  }
  return P.value();
}

double example_a2_rhs(int k, double alpha, double b1, double b2, double g) {
  LogProduct<double> P;
  P.gamma(b1);
  P.gamma(1 - k * g);
  P.gamma(1 + b1 - k * g, -1);
  P.gamma(alpha + b2 + (2 * k - 2) * g);
  P.gamma(alpha + b1 + b2 + (k - 2) * g, -1);
  P.gamma(b1 + b2 - g);
  P.gamma(b2 + (k - 1) * g, -1);
  for (int i = 1; i <= k; ++i) {
    P.gamma(alpha + (i - 1) * g);
    P.gamma(b2 + (i - 1) * g);
    vandermonde_ratio(P, i, g);
    P.gamma(alpha + b2 + (i + k - 2) * g, -1);
  }
  return P.value();
}

namespace {

// scaling exponent shared by both limits, without the power term
double vandermonde_degree(const SelbergParams& p) {
  double e = p.K();
  for (int s = 1; s <= p.n(); ++s) {
    e += p.gamma * p.ks(s) * (p.ks(s) - 1);
    if (s < p.n()) e -= p.gamma * p.ks(s) * p.ks(s + 1);
  }
  return e;
}

} // namespace

double exp1_scaling(const SelbergParams& p, double zeta) {
  SelbergParams f = p;
  f.variant = Variant::finite;
  for (double& b : f.beta) b *= zeta;
  double E = vandermonde_degree(p);
  for (int s = 1; s <= p.n(); ++s) E += p.ks(s) * (p.alpha_s(s) - 1);
  const auto L = an_selberg_rhs_log(f);
  return L.sign * std::exp(L.logabs + E * std::log(zeta));
}

double exp2_scaling(const SelbergParams& p, double zeta) {
  SelbergParams f = p;
  f.variant = Variant::finite;
  f.alpha = zeta;
  double E = vandermonde_degree(p);
  for (int s = 1; s <= p.n(); ++s) E += p.ks(s) * (p.beta[s - 1] - 1);
  const auto L = an_selberg_rhs_log(f);
  return L.sign * std::exp(L.logabs + E * std::log(zeta));
}

} // namespace anselberg
