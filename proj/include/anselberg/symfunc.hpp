#pragma once

#include "anselberg/partitions.hpp"
#include "anselberg/qt_rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace anselberg {

template <class F> F field_from_rational(const Rational& r);
template <> inline QtRational field_from_rational<QtRational>(const Rational& r) { return QtRational(r); }
template <> inline Rational field_from_rational<Rational>(const Rational& r) { return r; }
template <> inline double field_from_rational<double>(const Rational& r) { return r.get_d(); }

template <class F> bool field_is_zero(const F& x) { return x == F(0); }
template <> inline bool field_is_zero<QtRational>(const QtRational& x) { return x.is_zero(); }

/// Partitions of `degree` in increasing lexicographic order, a linear
/// extension of dominance: (1^d) first, (d) last.
const std::vector<Partition>& ordered_basis(int degree);
/// Index of λ in ordered_basis(|λ|).
int basis_index(const Partition& lambda);

/// m_λ m_μ = Σ_ν c_ν m_ν with integer c_ν (cached, thread-safe).
const std::map<Partition, long>& monomial_product(const Partition& lambda, const Partition& mu);
/// Row ρ gives p_ρ in the monomial basis; indices follow ordered_basis(d).
const std::vector<std::vector<long>>& power_to_monomial(int degree);
/// Row λ gives m_λ in the power-sum basis.
const std::vector<std::vector<Rational>>& monomial_to_power(int degree);

/// Symmetric function in the monomial basis, m_λ -> coefficient. Zero
/// coefficients are never stored. Components of different degrees may mix.
template <class F> struct SymFunc {
  std::map<Partition, F> terms;

  static SymFunc monomial(const Partition& lambda, F c = F(1)) {
    SymFunc s;
    if (!field_is_zero(c)) s.terms.emplace(lambda, std::move(c));
    return s;
  }
  static SymFunc one() { return monomial(Partition{}); }

  bool is_zero() const { return terms.empty(); }
  F coeff(const Partition& lambda) const {
    auto it = terms.find(lambda);
    return it == terms.end() ? F(0) : it->second;
  }
  /// Degree of a homogeneous function; -1 for zero; throws if mixed.
  int degree() const {
    int d = -1;
    for (const auto& [p, c] : terms) {
      if (d >= 0 && p.weight() != d) throw std::invalid_argument("symmetric function is not homogeneous");
      d = p.weight();
    }
    return d;
  }
  void add_term(const Partition& lambda, const F& c) {
    if (field_is_zero(c)) return;
    auto [it, fresh] = terms.emplace(lambda, c);
    if (!fresh) {
      it->second += c;
      if (field_is_zero(it->second)) terms.erase(it);
    }
  }
  SymFunc& operator+=(const SymFunc& o) {
    for (const auto& [p, c] : o.terms) add_term(p, c);
    return *this;
  }
  SymFunc& operator-=(const SymFunc& o) {
    for (const auto& [p, c] : o.terms) add_term(p, -c);
    return *this;
  }
  SymFunc scaled(const F& c) const {
    SymFunc r;
    if (field_is_zero(c)) return r;
    for (const auto& [p, x] : terms) r.terms.emplace(p, x * c);
    return r;
  }
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    std::map<Partition, F> acc;
    for (const auto& [la, ca] : a.terms)
      for (const auto& [lb, cb] : b.terms) {
        const F cab = ca * cb;
        for (const auto& [nu, k] : monomial_product(la, lb)) {
          F v = cab * F(k);
          auto [it, fresh] = acc.emplace(nu, v);
          if (!fresh) it->second += v;
        }
      }
    SymFunc r;
    for (auto& [p, c] : acc)
      if (!field_is_zero(c)) r.terms.emplace(p, std::move(c));
    return r;
  }
  friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.terms == b.terms; }

  /// Drop monomials with more than n parts (they vanish in n variables).
  SymFunc restricted(int nvars) const {
    SymFunc r;
    for (const auto& [p, c] : terms)
      if (p.length() <= nvars) r.terms.emplace(p, c);
    return r;
  }
  template <class G, class Conv> SymFunc<G> mapped(Conv conv) const {
    SymFunc<G> r;
    for (const auto& [p, c] : terms) r.add_term(p, conv(c));
    return r;
  }
};

/// Power-sum coordinates of a homogeneous f of degree d, ordered_basis(d) order.
template <class F> std::vector<F> to_power_sums(const SymFunc<F>& f, int degree) {
  const auto& basis = ordered_basis(degree);
  const auto& inv = monomial_to_power(degree);
  std::vector<F> out(basis.size(), F(0));
  for (const auto& [p, c] : f.terms) {
    if (p.weight() != degree) throw std::invalid_argument("to_power_sums: wrong degree");
    const auto& row = inv[basis_index(p)];
    for (std::size_t r = 0; r < row.size(); ++r)
      if (row[r] != 0) out[r] += c * field_from_rational<F>(row[r]);
  }
  return out;
}

template <class F> SymFunc<F> from_power_sums(const std::vector<F>& coords, int degree) {
  const auto& basis = ordered_basis(degree);
  const auto& fwd = power_to_monomial(degree);
  std::vector<F> m(basis.size(), F(0));
  for (std::size_t r = 0; r < coords.size(); ++r) {
    if (field_is_zero(coords[r])) continue;
    for (std::size_t c = 0; c < basis.size(); ++c)
      if (fwd[r][c] != 0) m[c] += coords[r] * F(fwd[r][c]);
  }
  SymFunc<F> out;
  for (std::size_t c = 0; c < basis.size(); ++c) out.add_term(basis[c], m[c]);
  return out;
}

/// Orthogonal basis built by Gram–Schmidt from the monomial basis in the
/// order of ordered_basis, under the pairing <p_λ, p_μ> = δ w(λ).
/// Tables are built lazily per degree under a mutex; returned references stay
/// valid for the engine's lifetime.
template <class F> class GramSchmidtEngine {
public:
  using Weight = std::function<F(const Partition&)>;
  explicit GramSchmidtEngine(Weight w) : weight_(std::move(w)) {}

  const SymFunc<F>& P(const Partition& lambda) {
    const auto& tab = table(lambda.weight());
    return tab.P[basis_index(lambda)];
  }
  /// <P_λ, P_λ>.
  const F& norm(const Partition& lambda) {
    const auto& tab = table(lambda.weight());
    return tab.norm[basis_index(lambda)];
  }

  F scalar_product(const SymFunc<F>& f, const SymFunc<F>& g) {
    if (f.is_zero() || g.is_zero()) return F(0);
    const int d = f.degree();
    if (g.degree() != d) throw std::invalid_argument("scalar product of different degrees");
    const auto& tab = table(d);
    const auto a = to_power_sums(f, d), b = to_power_sums(g, d);
    F s(0);
    for (std::size_t r = 0; r < a.size(); ++r)
      if (!field_is_zero(a[r]) && !field_is_zero(b[r])) s += a[r] * b[r] * tab.w[r];
    return s;
  }

  /// Coefficients of f in the P basis (f may mix degrees).
  std::map<Partition, F> expand(SymFunc<F> f) {
    std::map<Partition, F> out;
    while (!f.is_zero()) {
      // Largest key in the total order: highest degree, then lex-largest.
      auto it = std::max_element(f.terms.begin(), f.terms.end(), [](const auto& x, const auto& y) {
        if (x.first.weight() != y.first.weight()) return x.first.weight() < y.first.weight();
        return x.first < y.first;
      });
      const Partition lam = it->first;
      const F c = it->second;
      f -= P(lam).scaled(c);
      out.emplace(lam, c);
    }
    return out;
  }

  /// f^λ_{μν} for all λ, from the P-expansion of P_μ P_ν (cached).
  const std::map<Partition, F>& lr(const Partition& mu, const Partition& nu) {
    const auto key = mu <= nu ? std::make_pair(mu, nu) : std::make_pair(nu, mu);
    {
      std::lock_guard lk(mu_);
      auto it = lr_.find(key);
      if (it != lr_.end()) return it->second;
    }
    auto coeffs = expand(P(key.first) * P(key.second));
    std::lock_guard lk(mu_);
    return lr_.emplace(key, std::move(coeffs)).first->second;
  }

  /// Σ_ν f^λ_{μν} c_ν P_ν in n variables, where c_ν = scale(ν) (P_ν and
  /// monomials with more than n parts dropped).
  template <class Scale> SymFunc<F> lr_sum(const Partition& lambda, const Partition& mu, int nvars, Scale scale) {
    SymFunc<F> out;
    if (!mu.contained_in(lambda)) return out;
    for (const auto& nu : partitions_of(lambda.weight() - mu.weight(), nvars)) {
      const auto& c = lr(mu, nu);
      auto it = c.find(lambda);
      if (it == c.end() || field_is_zero(it->second)) continue;
      out += P(nu).restricted(nvars).scaled(it->second * scale(nu));
    }
    return out;
  }

private:
  struct Table {
    std::vector<F> w;             // pairing weight per power-sum index
    std::vector<SymFunc<F>> P;    // per basis index
    std::vector<F> norm;
  };

  const Table& table(int d) {
    std::lock_guard lk(mu_);
    auto it = tables_.find(d);
    if (it != tables_.end()) return *it->second;
    auto tab = std::make_unique<Table>();
    const auto& basis = ordered_basis(d);
    const auto& inv = monomial_to_power(d);
    const std::size_t N = basis.size();
    for (const auto& rho : basis) tab->w.push_back(weight_(rho));
    std::vector<std::vector<F>> phat; // p-coordinates of each P
    for (std::size_t j = 0; j < N; ++j) {
      std::vector<F> mj(N, F(0));
      for (std::size_t r = 0; r < N; ++r)
        if (inv[j][r] != 0) mj[r] = field_from_rational<F>(inv[j][r]);
      SymFunc<F> Pj = SymFunc<F>::monomial(basis[j]);
      std::vector<F> pj = mj;
      for (std::size_t i = 0; i < j; ++i) {
        F ip(0);
        for (std::size_t r = 0; r < N; ++r)
          if (!field_is_zero(mj[r]) && !field_is_zero(phat[i][r])) ip += mj[r] * phat[i][r] * tab->w[r];
        if (field_is_zero(ip)) continue;
        const F c = ip / tab->norm[i];
        Pj -= tab->P[i].scaled(c);
        for (std::size_t r = 0; r < N; ++r)
          if (!field_is_zero(phat[i][r])) pj[r] -= c * phat[i][r];
      }
      F nj(0);
      for (std::size_t r = 0; r < N; ++r)
        if (!field_is_zero(pj[r])) nj += pj[r] * pj[r] * tab->w[r];
      tab->P.push_back(std::move(Pj));
      tab->norm.push_back(nj);
      phat.push_back(std::move(pj));
    }
    return *tables_.emplace(d, std::move(tab)).first->second;
  }

  Weight weight_;
  std::mutex mu_;
  std::map<int, std::unique_ptr<Table>> tables_;
  std::map<std::pair<Partition, Partition>, std::map<Partition, F>> lr_;
};

/// Evaluate Σ c_λ m_λ at the alphabet x (m_λ = 0 when l(λ) > |x|).
/// `conv` maps coefficients F into the value ring R; `one` is R's unit.
template <class R, class F, class Conv>
R evaluate(const SymFunc<F>& f, const std::vector<R>& x, Conv conv, const R& one) {
  const int n = static_cast<int>(x.size());
  int maxpart = 0;
  for (const auto& [p, c] : f.terms) maxpart = std::max(maxpart, p.part(1));
  std::vector<std::vector<R>> pw(n);
  for (int i = 0; i < n; ++i) {
    pw[i].push_back(one);
    for (int k = 1; k <= maxpart; ++k) pw[i].push_back(pw[i].back() * x[i]);
  }
  R total = one * conv(F(0));
  for (const auto& [lam, c] : f.terms) {
    if (lam.length() > n) continue;
    // distinct values of λ padded with zeros, with multiplicities
    std::vector<std::pair<int, int>> mult;
    for (int v : lam.parts()) {
      if (!mult.empty() && mult.back().first == v) ++mult.back().second;
      else mult.push_back({v, 1});
    }
    if (n > lam.length()) mult.push_back({0, n - lam.length()});
    R mval = one * conv(F(0));
    std::vector<R> partial(n + 1, one);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        mval = mval + partial[n];
        return;
      }
      for (auto& [v, cnt] : mult) {
        if (cnt == 0) continue;
        --cnt;
        partial[i + 1] = partial[i] * pw[i][v];
        rec(i + 1);
        ++cnt;
      }
    };
    rec(0);
    total = total + mval * conv(c);
  }
  return total;
}

// ---------------------------------------------------------------- Macdonald

/// Engine with the (q,t) pairing z_λ Π (1-q^{λ_i})/(1-t^{λ_i}).
GramSchmidtEngine<QtRational>& macdonald_engine();

QtRational scalar_product(const SymFunc<QtRational>& f, const SymFunc<QtRational>& g);
const SymFunc<QtRational>& macdonald_P(const Partition& lambda);
/// f^λ_{μν}(q,t) for all λ with nonzero coefficient.
const std::map<Partition, QtRational>& qt_lr_coeffs(const Partition& mu, const Partition& nu);
QtRational qt_lr_coeff(const Partition& mu, const Partition& nu, const Partition& lambda);
/// Skew Macdonald polynomial defined by the coproduct
/// P_λ(x,y) = Σ_μ P_{λ/μ}(x) P_μ(y), i.e.
/// P_{λ/μ} = Σ_ν (b_μ b_ν / b_λ) f^λ_{μν} P_ν, restricted to n variables.
SymFunc<QtRational> skew_P(const Partition& lambda, const Partition& mu, int nvars);
/// The unnormalised sum Σ_ν f^λ_{μν} P_ν in n variables. It differs from
/// skew_P by the b-factors and does not satisfy the coproduct identity.
SymFunc<QtRational> lr_skew_sum(const Partition& lambda, const Partition& mu, int nvars);

/// u^{(n)}_{λ;z}(f): substitute x_i = z q^{λ_i} t^{n-i}. Throws if l(λ) > n.
QtRational specialize(const SymFunc<QtRational>& f, const Partition& lambda, int n,
                      const QtRational& z = QtRational(1));
/// u^{(n)}_0(P_μ) by the principal specialisation product; 0 when l(μ) > n.
QtRational principal_specialization(const Partition& mu, int n);

// --------------------------------------------------------------------- Jack

/// α either a formal symbol or an exact rational. The formal symbol is
/// represented by the generator q of Q(q,t).
struct JackParam {
  bool formal = true;
  Rational value = 1;
  static JackParam symbol() { return {true, 1}; }
  static JackParam exact(const Rational& a) {
    if (a == 0) throw std::invalid_argument("Jack parameter must be nonzero");
    return {false, a};
  }
};

/// P^{(α)}_λ by Gram–Schmidt under <p_λ, p_μ> = δ z_λ α^{l(λ)}. For a formal
/// α the coefficients live in Q(α) with α written as q.
SymFunc<QtRational> jack_P(const Partition& lambda, const JackParam& alpha);
/// Exact rational α.
const SymFunc<Rational>& jack_P_rational(const Partition& lambda, const Rational& alpha);
/// Floating α (used when 1/γ is irrational).
const SymFunc<double>& jack_P_double(const Partition& lambda, double alpha);

} // namespace anselberg
