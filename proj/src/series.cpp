#include "anselberg/series.hpp"

#include <stdexcept>

namespace anselberg {

SeriesRing::SeriesRing(std::vector<std::string> names, std::vector<int> weights, int cap)
    : names_(std::move(names)), weights_(std::move(weights)), cap_(cap) {
  if (names_.size() != weights_.size()) throw std::invalid_argument("SeriesRing: names/weights size mismatch");
  if (cap_ < 0) throw std::invalid_argument("SeriesRing: negative cap");
  for (int w : weights_)
    if (w < 0) throw std::invalid_argument("SeriesRing: negative weight");
}

int SeriesRing::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw std::out_of_range("SeriesRing: unknown variable " + name);
}

int SeriesRing::degree(const std::vector<int>& exps) const {
  int d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) d += weights_[i] * exps[i];
  return d;
}

Series Series::constant(RingPtr ring, const QtRational& c) {
  Series s(ring);
  s.add_term(Exps(ring->nvars(), 0), c);
  return s;
}

Series Series::var(RingPtr ring, const std::string& name) {
  Exps e(ring->nvars(), 0);
  e[ring->index(name)] = 1;
  return monomial(ring, QtRational(1), std::move(e));
}

Series Series::monomial(RingPtr ring, const QtRational& c, Exps exps) {
  if (static_cast<int>(exps.size()) != ring->nvars()) throw std::invalid_argument("Series: exponent length");
  Series s(ring);
  s.add_term(exps, c);
  return s;
}

int Series::min_degree() const {
  if (terms_.empty()) return 0;
  int d = ring_->degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) d = std::min(d, ring_->degree(e));
  return d;
}

QtRational Series::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QtRational(0) : it->second;
}

void Series::add_term(const Exps& e, const QtRational& c) {
  if (c.is_zero() || ring_->degree(e) > ring_->cap()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Series Series::operator-() const {
  Series r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Series& Series::operator+=(const Series& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  Series r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  const int cap = a.ring_->cap();
  const int n = a.ring_->nvars();
  std::vector<std::pair<const Series::Exps*, int>> bd;
  for (const auto& [e, c] : b.terms_) bd.push_back({&e, a.ring_->degree(e)});
  // accumulate per monomial before reducing: sums of products are cheaper
  // than repeated normalised additions when many terms collide
  std::map<Series::Exps, std::vector<QtRational>> acc;
  Series::Exps ex(n);
  for (const auto& [ea, ca] : a.terms_) {
    const int da = a.ring_->degree(ea);
    if (da > cap) continue;
    auto jt = b.terms_.begin();
    for (std::size_t j = 0; j < bd.size(); ++j, ++jt) {
      if (da + bd[j].second > cap) continue;
      for (int i = 0; i < n; ++i) ex[i] = ea[i] + (*bd[j].first)[i];
      acc[ex].push_back(ca * jt->second);
    }
  }
  for (auto& [e, v] : acc) {
    QtRational s = v[0];
    for (std::size_t i = 1; i < v.size(); ++i) s += v[i];
    if (!s.is_zero()) r.terms_.emplace(e, std::move(s));
  }
  return r;
}

Series Series::scaled(const QtRational& c) const {
  Series r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

Series Series::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Series::pow: negative exponent");
  Series r = constant(ring_, QtRational(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string Series::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (e[i] == 0) continue;
      out += "*" + ring_->name(i);
      if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

namespace {

void require_monomial(const Series& X) {
  if (!X.is_monomial() || X.min_degree() <= 0)
    throw std::invalid_argument("infinite product argument must be a monomial of positive degree");
}

// Σ_{k ≤ K} c_k X^k with X^k built incrementally.
template <class Coef> Series geometric_sum(const Series& X, Coef coef) {
  // an argument truncated away leaves only the constant term
  if (X.is_zero()) return Series::constant(X.ring(), QtRational(1));
  require_monomial(X);
  const int K = X.ring()->cap() / X.min_degree();
  Series out(X.ring());
  Series Xk = Series::constant(X.ring(), QtRational(1));
  for (int k = 0; k <= K; ++k) {
    out += coef(k) * Xk;
    Xk = Xk * X;
  }
  return out;
}

} // namespace

Series qpoch_ratio_series(const Series& A, const Series& X) {
  for (const auto& [e, c] : A.terms())
    if (A.ring()->degree(e) != 0) throw std::invalid_argument("qpoch_ratio_series: A must have degree 0");
  const RingPtr& R = X.ring();
  Series ck = Series::constant(R, QtRational(1));
  int last = 0;
  return geometric_sum(X, [&](int k) {
    for (; last < k; ++last) {
      const int j = last + 1;
      ck = ck * (Series::constant(R, QtRational(1)) - A.scaled(QtRational::monomial(1, j - 1, 0)));
      ck = ck.scaled((QtRational(1) - QtRational::monomial(1, j, 0)).inverse());
    }
    return ck;
  });
}

Series qpoch_inf_inverse_series(const Series& X) {
  const RingPtr& R = X.ring();
  return geometric_sum(X, [&](int k) { return Series::constant(R, qpoch_int(QtRational::q(), k).inverse()); });
}

Series qpoch_inf_series(const Series& X) {
  const RingPtr& R = X.ring();
  return geometric_sum(X, [&](int k) {
    QtRational c = QtRational::monomial(k % 2 ? -1 : 1, k * (k - 1) / 2, 0) / qpoch_int(QtRational::q(), k);
    return Series::constant(R, c);
  });
}

Series qpoch_int_series(const Series& A, int N) {
  if (N < 0) throw std::invalid_argument("qpoch_int_series: N < 0");
  Series r = Series::constant(A.ring(), QtRational(1));
  for (int j = 0; j < N; ++j)
    r = r * (Series::constant(A.ring(), QtRational(1)) - A.scaled(QtRational::monomial(1, j, 0)));
  return r;
}

Series qpoch_partition_series(const Series& A, const Partition& lambda) {
  Series r = Series::constant(A.ring(), QtRational(1));
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j)
      r = r * (Series::constant(A.ring(), QtRational(1)) - A.scaled(QtRational::monomial(1, j - 1, 1 - i)));
  return r;
}

} // namespace anselberg
