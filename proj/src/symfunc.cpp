#include "anselberg/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace anselberg {

namespace {

std::mutex table_mutex;

} // namespace

const std::vector<Partition>& ordered_basis(int degree) {
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard lk(table_mutex);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;
  auto v = partitions_of(degree);
  std::reverse(v.begin(), v.end());
  return cache.emplace(degree, std::move(v)).first->second;
}

int basis_index(const Partition& lambda) {
  const auto& b = ordered_basis(lambda.weight());
  auto it = std::lower_bound(b.begin(), b.end(), lambda);
  if (it == b.end() || !(*it == lambda)) throw std::logic_error("basis_index: partition not found");
  return static_cast<int>(it - b.begin());
}

namespace {

// Number of distinct exponent vectors α (a rearrangement of λ) with ν-α a
// rearrangement of μ, all of length l(ν).
long count_splits(const std::vector<int>& nu, std::size_t i, std::map<int, int>& lam, std::map<int, int>& mu) {
  if (i == nu.size()) return 1;
  long total = 0;
  for (auto& [v, cnt] : lam) {
    if (cnt == 0 || v > nu[i]) continue;
    auto jt = mu.find(nu[i] - v);
    if (jt == mu.end() || jt->second == 0) continue;
    --cnt;
    --jt->second;
    total += count_splits(nu, i + 1, lam, mu);
    ++cnt;
    ++jt->second;
  }
  return total;
}

std::map<Partition, long> compute_product(const Partition& a, const Partition& b) {
  std::map<Partition, long> out;
  const int w = a.weight() + b.weight();
  const int maxlen = a.length() + b.length();
  for (const auto& nu : partitions_of(w, maxlen)) {
    if (nu.length() < std::max(a.length(), b.length())) continue;
    std::map<int, int> la, mb;
    for (int v : a.parts()) ++la[v];
    for (int v : b.parts()) ++mb[v];
    la[0] += nu.length() - a.length();
    mb[0] += nu.length() - b.length();
    const long c = count_splits(nu.parts(), 0, la, mb);
    if (c) out.emplace(nu, c);
  }
  return out;
}

} // namespace

const std::map<Partition, long>& monomial_product(const Partition& lambda, const Partition& mu) {
  static std::map<std::pair<Partition, Partition>, std::map<Partition, long>> cache;
  static std::mutex m;
  const auto key = lambda <= mu ? std::make_pair(lambda, mu) : std::make_pair(mu, lambda);
  {
    std::lock_guard lk(m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto prod = compute_product(key.first, key.second);
  std::lock_guard lk(m);
  return cache.emplace(key, std::move(prod)).first->second;
}

const std::vector<std::vector<long>>& power_to_monomial(int degree) {
  static std::map<int, std::vector<std::vector<long>>> cache;
  static std::mutex m;
  {
    std::lock_guard lk(m);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;
  }
  const auto& basis = ordered_basis(degree);
  std::vector<std::vector<long>> rows;
  for (const auto& rho : basis) {
    SymFunc<long> acc = SymFunc<long>::one();
    for (int r : rho.parts()) acc = acc * SymFunc<long>::monomial(Partition{r});
    std::vector<long> row(basis.size(), 0);
    for (const auto& [p, c] : acc.terms) row[basis_index(p)] = c;
    rows.push_back(std::move(row));
  }
  std::lock_guard lk(m);
  return cache.emplace(degree, std::move(rows)).first->second;
}

const std::vector<std::vector<Rational>>& monomial_to_power(int degree) {
  static std::map<int, std::vector<std::vector<Rational>>> cache;
  static std::mutex m;
  {
    std::lock_guard lk(m);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;
  }
  // p_ρ = Σ_λ A_{ρλ} m_λ, so m_λ = Σ_ρ (A^{-1})_{λρ} p_ρ.
  const auto& A = power_to_monomial(degree);
  const std::size_t N = A.size();
  std::vector<std::vector<Rational>> M(N, std::vector<Rational>(2 * N));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) M[i][j] = A[i][j];
    M[i][N + i] = 1;
  }
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t piv = col;
    while (M[piv][col] == 0) ++piv;
    std::swap(M[piv], M[col]);
    const Rational inv = 1 / M[col][col];
    for (auto& x : M[col]) x *= inv;
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col || M[r][col] == 0) continue;
      const Rational f = M[r][col];
      for (std::size_t c = 0; c < 2 * N; ++c) M[r][c] -= f * M[col][c];
    }
  }
  std::vector<std::vector<Rational>> inv(N, std::vector<Rational>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) inv[i][j] = M[i][N + j];
  std::lock_guard lk(m);
  return cache.emplace(degree, std::move(inv)).first->second;
}

GramSchmidtEngine<QtRational>& macdonald_engine() {
  static GramSchmidtEngine<QtRational> engine([](const Partition& rho) {
    QtRational w(static_cast<long>(z_factor(rho)));
    for (int r : rho.parts())
      w *= (QtRational(1) - QtRational::monomial(1, r, 0)) / (QtRational(1) - QtRational::monomial(1, 0, r));
    return w;
  });
  return engine;
}

QtRational scalar_product(const SymFunc<QtRational>& f, const SymFunc<QtRational>& g) {
  return macdonald_engine().scalar_product(f, g);
}

const SymFunc<QtRational>& macdonald_P(const Partition& lambda) { return macdonald_engine().P(lambda); }

const std::map<Partition, QtRational>& qt_lr_coeffs(const Partition& mu, const Partition& nu) {
  return macdonald_engine().lr(mu, nu);
}

QtRational qt_lr_coeff(const Partition& mu, const Partition& nu, const Partition& lambda) {
  if (lambda.weight() != mu.weight() + nu.weight()) return QtRational(0);
  const auto& c = qt_lr_coeffs(mu, nu);
  auto it = c.find(lambda);
  return it == c.end() ? QtRational(0) : it->second;
}

SymFunc<QtRational> skew_P(const Partition& lambda, const Partition& mu, int nvars) {
  if (!mu.contained_in(lambda)) return {};
  const QtRational pre = hook_polys(mu).b / hook_polys(lambda).b;
  return macdonald_engine().lr_sum(lambda, mu, nvars, [&](const Partition& nu) { return pre * hook_polys(nu).b; });
}

SymFunc<QtRational> lr_skew_sum(const Partition& lambda, const Partition& mu, int nvars) {
  return macdonald_engine().lr_sum(lambda, mu, nvars, [](const Partition&) { return QtRational(1); });
}

namespace {

// Σ over distinct rearrangements α of κ (padded to n) of q^{Σ α_i λ_i} t^{Σ α_i (n-i)}.
BiPoly principal_monomial_sum(const Partition& kappa, const Partition& lambda, int n) {
  std::vector<std::pair<int, int>> mult;
  for (int v : kappa.parts()) {
    if (!mult.empty() && mult.back().first == v) ++mult.back().second;
    else mult.push_back({v, 1});
  }
  if (n > kappa.length()) mult.push_back({0, n - kappa.length()});
  std::map<std::pair<int, int>, long> counts;
  std::function<void(int, int, int)> rec = [&](int i, int qe, int te) {
    if (i == n) {
      ++counts[{qe, te}];
      return;
    }
    for (auto& [v, cnt] : mult) {
      if (cnt == 0) continue;
      --cnt;
      rec(i + 1, qe + v * lambda.part(i + 1), te + v * (n - 1 - i));
      ++cnt;
    }
  };
  rec(0, 0, 0);
  BiPoly out;
  for (const auto& [e, c] : counts) out += BiPoly::monomial(Integer(c), e.first, e.second);
  return out;
}

} // namespace

QtRational specialize(const SymFunc<QtRational>& f, const Partition& lambda, int n, const QtRational& z) {
  if (lambda.length() > n)
    throw std::invalid_argument("specialize: l(" + lambda.to_string() + ") > n=" + std::to_string(n));
  std::map<int, QtRational> by_degree;
  for (const auto& [kappa, c] : f.terms) {
    if (kappa.length() > n) continue;
    by_degree[kappa.weight()] += c * QtRational::from_polys(principal_monomial_sum(kappa, lambda, n), BiPoly(1));
  }
  QtRational out;
  for (const auto& [d, v] : by_degree) out += v * z.pow(d);
  return out;
}

QtRational principal_specialization(const Partition& mu, int n) {
  if (mu.length() > n) return QtRational(0);
  QtRational r = QtRational::monomial(1, 0, static_cast<int>(n_stat(mu)));
  for (int i = 1; i <= mu.length(); ++i)
    for (int j = 1; j <= mu.part(i); ++j) {
      const ArmLeg s = arm_leg(mu, i, j);
      r *= (QtRational(1) - QtRational::monomial(1, s.arm_co, n - s.leg_co)) /
           (QtRational(1) - QtRational::monomial(1, s.arm, s.leg + 1));
    }
  return r;
}

namespace {

template <class F> F jack_weight(const Partition& rho, const F& alpha) {
  F w = F(static_cast<long>(z_factor(rho)));
  for (int i = 0; i < rho.length(); ++i) w *= alpha;
  return w;
}

GramSchmidtEngine<QtRational>& formal_jack_engine() {
  static GramSchmidtEngine<QtRational> engine(
      [](const Partition& rho) { return jack_weight(rho, QtRational::q()); });
  return engine;
}

} // namespace

const SymFunc<Rational>& jack_P_rational(const Partition& lambda, const Rational& alpha) {
  if (alpha == 0) throw std::invalid_argument("Jack parameter must be nonzero");
  static std::map<Rational, std::unique_ptr<GramSchmidtEngine<Rational>>> engines;
  static std::mutex m;
  GramSchmidtEngine<Rational>* e;
  {
    std::lock_guard lk(m);
    auto& slot = engines[alpha];
    if (!slot)
      slot = std::make_unique<GramSchmidtEngine<Rational>>(
          [alpha](const Partition& rho) { return jack_weight(rho, alpha); });
    e = slot.get();
  }
  return e->P(lambda);
}

const SymFunc<double>& jack_P_double(const Partition& lambda, double alpha) {
  if (alpha == 0) throw std::invalid_argument("Jack parameter must be nonzero");
  static std::map<double, std::unique_ptr<GramSchmidtEngine<double>>> engines;
  static std::mutex m;
  GramSchmidtEngine<double>* e;
  {
    std::lock_guard lk(m);
    auto& slot = engines[alpha];
    if (!slot)
      slot = std::make_unique<GramSchmidtEngine<double>>(
          [alpha](const Partition& rho) { return jack_weight(rho, alpha); });
    e = slot.get();
  }
  return e->P(lambda);
}

SymFunc<QtRational> jack_P(const Partition& lambda, const JackParam& alpha) {
  if (alpha.formal) return formal_jack_engine().P(lambda);
  return jack_P_rational(lambda, alpha.value).mapped<QtRational>([](const Rational& r) { return QtRational(r); });
}

} // namespace anselberg
