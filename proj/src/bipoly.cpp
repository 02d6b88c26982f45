#include "anselberg/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace anselberg {

namespace upoly {

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly r = a.size() >= b.size() ? a : b;
  const UPoly& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  if (r.size() < b.size()) r.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

UPoly scale(const UPoly& a, const Integer& c) {
  if (c == 0) return {};
  UPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

Integer content(const UPoly& a) {
  Integer g = 0;
  for (const auto& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer max_norm(const UPoly& a) {
  Integer m = 0;
  for (const auto& x : a)
    if (abs(x) > m) m = abs(x);
  return m;
}

Integer eval(const UPoly& a, const Integer& x) {
  Integer r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

std::optional<UPoly> exact_div(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.empty()) return UPoly{};
  if (a.size() < b.size()) return std::nullopt;
  UPoly r = a;
  const std::size_t db = b.size() - 1;
  UPoly quo(a.size() - db);
  const Integer& lc = b.back();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), lc.get_mpz_t());
    const std::size_t shift = i - db;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    quo[shift] = std::move(c);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return std::nullopt;
  trim(quo);
  return quo;
}

namespace {

UPoly divide_content(const UPoly& a, const Integer& c) {
  UPoly r = a;
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

// Symmetric residue of a modulo m.
Integer mods(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

UPoly prem(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  const int db = degree(b);
  const Integer& lc = b.back();
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    Integer c = r.back();
    for (auto& x : r) x *= lc;
    for (int j = 0; j <= db; ++j) mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    trim(r);
  }
  return r;
}

UPoly primitive(const UPoly& a) {
  if (a.empty()) return a;
  Integer c = content(a);
  if (a.back() < 0) c = -c;
  return divide_content(a, c);
}

UPoly gcd_prs(UPoly a, UPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = prem(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  return primitive(a);
}

// a, b primitive and nonzero.
UPoly gcd_primitive(const UPoly& a, const UPoly& b) {
  if (a.size() == 1 || b.size() == 1) return UPoly{Integer(1)};
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const std::size_t bits = mpz_sizeinbase(xi.get_mpz_t(), 2);
    if (bits * std::max(a.size(), b.size()) > 4'000'000) break;
    Integer g;
    Integer ea = eval(a, xi), eb = eval(b, xi);
    mpz_gcd(g.get_mpz_t(), ea.get_mpz_t(), eb.get_mpz_t());
    UPoly cand;
    while (g != 0) {
      Integer d = mods(g, xi);
      cand.push_back(d);
      g -= d;
      mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
    }
    trim(cand);
    if (!cand.empty()) {
      cand = primitive(cand);
      if (exact_div(a, cand) && exact_div(b, cand)) return cand;
    }
    xi = xi * 73794 / 27011;
  }
  return gcd_prs(a, b);
}

} // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.empty()) return primitive(b).empty() ? UPoly{} : scale(primitive(b), content(b));
  if (b.empty()) return scale(primitive(a), content(a));
  const Integer ca = content(a), cb = content(b);
  Integer c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  UPoly g = gcd_primitive(divide_content(a, ca), divide_content(b, cb));
  return scale(g, c);
}

} // namespace upoly

BiPoly::BiPoly(Integer c) {
  if (c != 0) coeffs_.push_back(UPoly{std::move(c)});
}

BiPoly BiPoly::monomial(Integer c, int qexp, int texp) {
  if (qexp < 0 || texp < 0) throw std::invalid_argument("BiPoly::monomial: negative exponent");
  BiPoly r;
  if (c == 0) return r;
  r.coeffs_.resize(qexp + 1);
  r.coeffs_[qexp].resize(texp + 1);
  r.coeffs_[qexp][texp] = std::move(c);
  return r;
}

void BiPoly::trim() {
  for (auto& u : coeffs_) upoly::trim(u);
  while (!coeffs_.empty() && coeffs_.back().empty()) coeffs_.pop_back();
}

bool BiPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_[0].size() == 1 && coeffs_[0][0] == 1;
}

bool BiPoly::is_constant() const { return coeffs_.size() <= 1 && (coeffs_.empty() || coeffs_[0].size() <= 1); }

int BiPoly::deg_t() const {
  int d = -1;
  for (const auto& u : coeffs_) d = std::max(d, upoly::degree(u));
  return d;
}

std::pair<int, int> BiPoly::low_exponents() const {
  if (is_zero()) return {0, 0};
  int lq = -1, lt = 1 << 30;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& u = coeffs_[i];
    if (u.empty()) continue;
    if (lq < 0) lq = static_cast<int>(i);
    for (std::size_t j = 0; j < u.size(); ++j)
      if (u[j] != 0) {
        lt = std::min(lt, static_cast<int>(j));
        break;
      }
  }
  return {lq, lt};
}

Integer BiPoly::coefficient(int qexp, int texp) const {
  if (qexp < 0 || texp < 0 || qexp >= static_cast<int>(coeffs_.size())) return 0;
  const auto& u = coeffs_[qexp];
  return texp < static_cast<int>(u.size()) ? u[texp] : Integer(0);
}

std::size_t BiPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& u : coeffs_)
    for (const auto& x : u)
      if (x != 0) ++n;
  return n;
}

BiPoly::Term BiPoly::leading_term() const {
  Term best{0, 0, 0};
  int best_total = -1;
  for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i) {
    const auto& u = coeffs_[i];
    if (u.empty()) continue;
    const int j = static_cast<int>(u.size()) - 1;
    const int total = i + j;
    if (total > best_total || (total == best_total && i > best.qexp)) {
      best = {i, j, u[j]};
      best_total = total;
    }
  }
  return best;
}

std::vector<BiPoly::Term> BiPoly::terms() const {
  std::vector<Term> out;
  for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i)
    for (int j = 0; j < static_cast<int>(coeffs_[i].size()); ++j)
      if (coeffs_[i][j] != 0) out.push_back({i, j, coeffs_[i][j]});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    const int ta = a.qexp + a.texp, tb = b.qexp + b.texp;
    if (ta != tb) return ta > tb;
    return a.qexp > b.qexp;
  });
  return out;
}

Integer BiPoly::content() const {
  Integer g = 0;
  for (const auto& u : coeffs_)
    for (const auto& x : u) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return g;
    }
  return g;
}

Integer BiPoly::max_norm() const {
  Integer m = 0;
  for (const auto& u : coeffs_) m = std::max(m, upoly::max_norm(u));
  return m;
}

UPoly BiPoly::eval_t(const Integer& x) const {
  UPoly r(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = upoly::eval(coeffs_[i], x);
  upoly::trim(r);
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& u : r.coeffs_)
    for (auto& x : u) x = -x;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    auto& u = coeffs_[i];
    const auto& v = o.coeffs_[i];
    if (u.size() < v.size()) u.resize(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) u[j] += v[j];
  }
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    auto& u = coeffs_[i];
    const auto& v = o.coeffs_[i];
    if (u.size() < v.size()) u.resize(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) u[j] -= v[j];
  }
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  const int da = a.deg_t(), db = b.deg_t();
  std::vector<UPoly> r(a.coeffs_.size() + b.coeffs_.size() - 1, UPoly(da + db + 1));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const auto& u = a.coeffs_[i];
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (u[k] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        const auto& v = b.coeffs_[j];
        auto& out = r[i + j];
        for (std::size_t l = 0; l < v.size(); ++l)
          mpz_addmul(out[k + l].get_mpz_t(), u[k].get_mpz_t(), v[l].get_mpz_t());
      }
    }
  }
  return BiPoly(std::move(r));
}

BiPoly BiPoly::scaled(const Integer& c) const {
  if (c == 0) return BiPoly();
  BiPoly r = *this;
  for (auto& u : r.coeffs_)
    for (auto& x : u) x *= c;
  return r;
}

BiPoly BiPoly::shifted(int qexp, int texp) const {
  if (qexp < 0 || texp < 0) throw std::invalid_argument("BiPoly::shifted: negative exponent");
  if (is_zero()) return *this;
  std::vector<UPoly> r(qexp);
  for (const auto& u : coeffs_) {
    UPoly v;
    if (!u.empty()) {
      v.assign(texp, Integer(0));
      v.insert(v.end(), u.begin(), u.end());
    }
    r.push_back(std::move(v));
  }
  return BiPoly(std::move(r));
}

BiPoly BiPoly::unshifted(int qexp, int texp) const {
  const auto [lq, lt] = low_exponents();
  if (!is_zero() && (qexp > lq || texp > lt))
    throw std::invalid_argument("BiPoly::unshifted: monomial does not divide");
  if (is_zero()) return *this;
  std::vector<UPoly> r(coeffs_.begin() + qexp, coeffs_.end());
  for (auto& u : r)
    if (!u.empty()) u.erase(u.begin(), u.begin() + texp);
  return BiPoly(std::move(r));
}

BiPoly BiPoly::divided(const Integer& c) const {
  BiPoly r = *this;
  for (auto& u : r.coeffs_)
    for (auto& x : u) {
      if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
        throw std::invalid_argument("BiPoly::divided: inexact division");
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
  return r;
}

bool BiPoly::make_leading_positive() {
  if (is_zero() || leading_term().coeff > 0) return false;
  *this = -*this;
  return true;
}

std::string BiPoly::to_string(const char* qname, const char* tname) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : terms()) {
    Integer c = term.coeff;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const bool has_var = term.qexp > 0 || term.texp > 0;
    bool need_star = false;
    if (c != 1 || !has_var) {
      os << c.get_str();
      need_star = true;
    }
    if (term.qexp > 0) {
      os << (need_star ? "*" : "") << qname;
      if (term.qexp > 1) os << '^' << term.qexp;
      need_star = true;
    }
    if (term.texp > 0) {
      os << (need_star ? "*" : "") << tname;
      if (term.texp > 1) os << '^' << term.texp;
    }
  }
  return os.str();
}

std::optional<BiPoly> BiPoly::exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return BiPoly();
  if (a.deg_q() < b.deg_q() || a.deg_t() < b.deg_t()) return std::nullopt;
  if (b.is_constant()) {
    const Integer& c = b.coeffs_[0][0];
    for (const auto& u : a.coeffs_)
      for (const auto& x : u)
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
    return a.divided(c);
  }
  std::vector<UPoly> r = a.coeffs_;
  const int db = b.deg_q();
  std::vector<UPoly> quo(a.deg_q() - db + 1);
  const UPoly& lc = b.coeffs_.back();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    upoly::trim(r[i]);
    if (r[i].empty()) continue;
    auto c = upoly::exact_div(r[i], lc);
    if (!c) return std::nullopt;
    const int shift = i - db;
    for (int j = 0; j <= db; ++j) r[shift + j] = upoly::sub(r[shift + j], upoly::mul(*c, b.coeffs_[j]));
    quo[shift] = std::move(*c);
  }
  for (int i = 0; i < db; ++i) {
    upoly::trim(r[i]);
    if (!r[i].empty()) return std::nullopt;
  }
  return BiPoly(std::move(quo));
}

namespace {

Integer mods(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

} // namespace

BiPoly BiPoly::gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) return BiPoly();
  if (a.is_zero() || b.is_zero()) {
    BiPoly r = a.is_zero() ? b : a;
    r.make_leading_positive();
    return r;
  }
  const auto [aq, at] = a.low_exponents();
  const auto [bq, bt] = b.low_exponents();
  BiPoly a1 = a.unshifted(aq, at), b1 = b.unshifted(bq, bt);
  const Integer ca = a1.content(), cb = b1.content();
  Integer c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (ca != 1) a1 = a1.divided(ca);
  if (cb != 1) b1 = b1.divided(cb);
  BiPoly g = gcd_primitive(a1, b1);
  return g.scaled(c).shifted(std::min(aq, bq), std::min(at, bt));
}

BiPoly BiPoly::gcd_primitive(const BiPoly& a, const BiPoly& b) {
  if (a.is_constant() || b.is_constant()) return BiPoly(1);
  if (a == b) {
    BiPoly r = a;
    r.make_leading_positive();
    return r;
  }
  // Heuristic: evaluate t at an integer, take the univariate gcd in q and
  // rebuild the t-dependence from balanced xi-adic digits. Verified by trial
  // division; falls back to a primitive PRS.
  if (a.deg_t() == 0 && b.deg_t() == 0) {
    UPoly ua = a.eval_t(0), ub = b.eval_t(0);
    UPoly g = upoly::gcd(ua, ub);
    std::vector<UPoly> c(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] != 0) c[i] = UPoly{g[i]};
    BiPoly r(std::move(c));
    r.make_leading_positive();
    return r;
  }
  Integer xi = 2 * std::min(a.max_norm(), b.max_norm()) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const std::size_t bits = mpz_sizeinbase(xi.get_mpz_t(), 2);
    if (bits * std::max(a.deg_t(), b.deg_t()) * std::max(a.deg_q() + 1, b.deg_q() + 1) > 4'000'000)
      break;
    UPoly g = upoly::gcd(a.eval_t(xi), b.eval_t(xi));
    std::vector<UPoly> cand(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      Integer rem = g[i];
      while (rem != 0) {
        Integer d = mods(rem, xi);
        cand[i].push_back(d);
        rem -= d;
        mpz_divexact(rem.get_mpz_t(), rem.get_mpz_t(), xi.get_mpz_t());
      }
    }
    BiPoly h(std::move(cand));
    if (!h.is_zero()) {
      const Integer ch = h.content();
      if (ch != 1) h = h.divided(ch);
      h.make_leading_positive();
      if (exact_div(a, h) && exact_div(b, h)) return h;
    }
    xi = xi * 73794 / 27011;
  }
  return gcd_prs(a, b);
}

BiPoly BiPoly::gcd_prs(const BiPoly& a0, const BiPoly& b0) {
  // Treat as univariate in q over Z[t].
  auto tcontent = [](const BiPoly& p) {
    UPoly c;
    for (const auto& u : p.coeffs_) {
      c = upoly::gcd(c, u);
      if (c.size() == 1) break;
    }
    return c;
  };
  auto divide_t = [](const BiPoly& p, const UPoly& c) {
    std::vector<UPoly> r;
    for (const auto& u : p.coeffs_) r.push_back(u.empty() ? UPoly{} : *upoly::exact_div(u, c));
    return BiPoly(std::move(r));
  };
  auto tprimitive = [&](const BiPoly& p) {
    if (p.is_zero()) return p;
    return divide_t(p, tcontent(p));
  };
  const UPoly ca = tcontent(a0), cb = tcontent(b0);
  const UPoly cg = upoly::gcd(ca, cb);
  BiPoly a = divide_t(a0, ca), b = divide_t(b0, cb);
  if (a.deg_q() < b.deg_q()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.deg_q() == 0) {
      a = BiPoly(1);
      break;
    }
    std::vector<UPoly> r = a.coeffs_;
    const int db = b.deg_q();
    const UPoly& lc = b.coeffs_.back();
    while (static_cast<int>(r.size()) - 1 >= db) {
      const int shift = static_cast<int>(r.size()) - 1 - db;
      UPoly c = r.back();
      for (auto& u : r) u = upoly::mul(u, lc);
      for (int j = 0; j <= db; ++j) r[shift + j] = upoly::sub(r[shift + j], upoly::mul(c, b.coeffs_[j]));
      while (!r.empty() && r.back().empty()) r.pop_back();
    }
    a = std::move(b);
    b = tprimitive(BiPoly(std::move(r)));
  }
  std::vector<UPoly> cgv{cg};
  BiPoly res = BiPoly(std::move(cgv)) * a;
  const Integer cc = res.content();
  if (cc != 0 && cc != 1) res = res.divided(cc);
  res.make_leading_positive();
  return res;
}

} // namespace anselberg
