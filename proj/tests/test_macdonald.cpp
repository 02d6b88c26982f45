#include "anselberg/symfunc.hpp"

#include "doctest.h"

#include <cmath>

using namespace anselberg;

namespace {
QtRational P(const char* s) { return QtRational::parse(s); }
using SF = SymFunc<QtRational>;
SF m(const Partition& l) { return SF::monomial(l); }

// Classical Littlewood–Richardson coefficients from Schur products in the
// monomial basis (Schur via Kostka numbers from semistandard tableaux count).
long kostka(const Partition& shape, const std::vector<int>& content) {
  // fill rows top to bottom with letters 1..k, column-strict
  const int k = static_cast<int>(content.size());
  std::vector<int> filled(shape.length(), 0);
  std::vector<std::vector<int>> tab(shape.length());
  std::function<long(int)> place_letter = [&](int letter) -> long {
    if (letter > k) return 1;
    // distribute content[letter-1] boxes as a horizontal strip
    std::vector<int> add(shape.length(), 0);
    std::function<long(int, int)> rec = [&](int row, int left) -> long {
      if (row == shape.length()) {
        if (left) return 0;
        for (int r = 0; r < shape.length(); ++r) filled[r] += add[r];
        long res = place_letter(letter + 1);
        for (int r = 0; r < shape.length(); ++r) filled[r] -= add[r];
        return res;
      }
      long total = 0;
      const int cap = shape.part(row + 1) - filled[row];
      for (int a = 0; a <= std::min(cap, left); ++a) {
        // horizontal strip: new boxes in row r must sit under old boxes of row r-1
        if (row > 0 && filled[row] + a > filled[row - 1]) break;
        add[row] = a;
        total += rec(row + 1, left - a);
      }
      add[row] = 0;
      return total;
    };
    return rec(0, content[letter - 1]);
  };
  return place_letter(1);
}

SymFunc<Rational> schur(const Partition& l) {
  SymFunc<Rational> s;
  for (const auto& mu : partitions_of(l.weight())) {
    const long K = kostka(l, mu.parts());
    if (K) s.add_term(mu, Rational(K));
  }
  return s;
}
} // namespace

TEST_CASE("basis tables round trip") {
  for (int d = 0; d <= 6; ++d) {
    const auto& basis = ordered_basis(d);
    for (const auto& l : basis) {
      SymFunc<Rational> f = SymFunc<Rational>::monomial(l);
      CHECK(from_power_sums(to_power_sums(f, d), d) == f);
    }
  }
  // m_1 m_1 = m_2 + 2 m_11
  const auto& prod = monomial_product({1}, {1});
  CHECK(prod.at(Partition{2}) == 1);
  CHECK(prod.at(Partition{1, 1}) == 2);
  CHECK(monomial_product({2, 1}, {1}).at(Partition{2, 1, 1}) == 2);
}

TEST_CASE("scalar product") {
  const SF p1 = m({1});
  CHECK(scalar_product(p1, p1) == P("(1-q)/(1-t)"));
  CHECK_THROWS_AS(scalar_product(macdonald_P({1}), macdonald_P({2})), std::invalid_argument);
  CHECK(scalar_product(macdonald_P({1}), macdonald_P({1})) == hook_polys({1}).c_prime / hook_polys({1}).c);
}

TEST_CASE("Macdonald polynomials: examples") {
  CHECK(macdonald_P({1}) == m({1}));
  SF p2 = m({2});
  p2.add_term({1, 1}, P("(1-t)*(1+q)/(1-q*t)"));
  CHECK(macdonald_P({2}) == p2);
  CHECK(macdonald_P({1, 1}) == m({1, 1}));
}

TEST_CASE("Macdonald polynomials: orthogonality, norms, triangularity") {
  for (int d = 1; d <= 5; ++d) {
    const auto& basis = ordered_basis(d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const SF& Pi = macdonald_P(basis[i]);
      CHECK(scalar_product(Pi, Pi) == hook_polys(basis[i]).b.inverse());
      for (std::size_t j = 0; j < i; ++j) CHECK(scalar_product(Pi, macdonald_P(basis[j])).is_zero());
    }
  }
  for (int d = 1; d <= 6; ++d)
    for (const auto& l : ordered_basis(d)) {
      const SF& Pl = macdonald_P(l);
      CHECK(Pl.coeff(l).is_one());
      for (const auto& [mu, c] : Pl.terms) CHECK(dominance_leq(mu, l));
    }
}

TEST_CASE("Macdonald polynomials: stability and homogeneity") {
  const QtRational z = P("2*q + 3");
  for (int d = 1; d <= 5; ++d)
    for (const auto& l : ordered_basis(d))
      for (int n = l.length() + 1; n <= l.length() + 2; ++n) {
        // evaluate in n variables with the last one zero vs n-1 variables
        std::vector<QtRational> x, xz;
        for (int i = 0; i < n - 1; ++i) x.push_back(QtRational(i + 2) + QtRational::t().pow(i));
        xz = x;
        xz.push_back(QtRational(0));
        auto id = [](const QtRational& c) { return c; };
        const QtRational a = evaluate(macdonald_P(l), x, id, QtRational(1));
        const QtRational b = evaluate(macdonald_P(l), xz, id, QtRational(1));
        CHECK(a == b);
        std::vector<QtRational> zx;
        for (const auto& v : x) zx.push_back(v * z);
        CHECK(evaluate(macdonald_P(l), zx, id, QtRational(1)) == a * z.pow(d));
      }
}

TEST_CASE("q,t Littlewood-Richardson coefficients") {
  CHECK(qt_lr_coeff({1}, {1}, {2}).is_one());
  CHECK(qt_lr_coeff({1}, {1}, {1, 1}) == P("(1+t)*(1-q)/(1-q*t)"));
  CHECK(qt_lr_coeff({1}, {1}, {3}).is_zero());
  CHECK(qt_lr_coeff({1}, {1}, {1, 1}).subs(QtRational::t(), QtRational::t()).is_one());
  for (int a = 0; a <= 5; ++a)
    for (const auto& mu : partitions_of(a))
      for (int b = 0; a + b <= 5; ++b)
        for (const auto& nu : partitions_of(b)) {
          const auto& f = qt_lr_coeffs(mu, nu);
          const auto prod = schur(mu) * schur(nu);
          // expand the Schur product in the Schur basis by peeling off leading terms
          SymFunc<Rational> rest = prod;
          std::map<Partition, Rational> classical;
          while (!rest.is_zero()) {
            const Partition top = rest.terms.rbegin()->first;
            const Rational c = rest.terms.rbegin()->second;
            classical[top] = c;
            rest -= schur(top).scaled(c);
          }
          for (const auto& [lam, c] : f) {
            CHECK(lam.weight() == a + b);
            CHECK(mu.contained_in(lam));
            CHECK(nu.contained_in(lam));
            const QtRational at_qt = c.subs(QtRational::t(), QtRational::t());
            auto it = classical.find(lam);
            CHECK(at_qt == QtRational(it == classical.end() ? Rational(0) : it->second));
          }
          for (const auto& [lam, c] : classical) CHECK(f.count(lam) == 1);
        }
}

TEST_CASE("skew Macdonald polynomials") {
  for (const auto& l : partitions_up_to(4)) {
    CHECK(skew_P(l, l, 3) == SF::one());
    CHECK(skew_P(l, {}, 8) == macdonald_P(l));
  }
  // coproduct normalisation: P_2(x,y) contains (1-t)(1+q)/(1-qt) m_1(x) m_1(y)
  CHECK(skew_P({2}, {1}, 2) == macdonald_P({1}).scaled(P("(1-t)*(1+q)/(1-q*t)")));
  CHECK(skew_P({1, 1}, {1}, 2) == macdonald_P({1}));
  // the bare LR sum uses f^{(2)}_{(1)(1)} = 1
  CHECK(lr_skew_sum({2}, {1}, 2) == macdonald_P({1}));
  CHECK(lr_skew_sum({1, 1}, {1}, 2) == macdonald_P({1}).scaled(P("(1+t)*(1-q)/(1-q*t)")));
  CHECK(skew_P({1}, {2}, 2).is_zero());
}

TEST_CASE("coproduct with 2+2 variables") {
  // P_λ(x1,x2,y1,y2) = Σ_μ P_{λ/μ}(x) P_μ(y) at generic rational points
  auto id = [](const QtRational& c) { return c; };
  const std::vector<QtRational> x{P("3"), P("5/7")}, y{P("2/3"), P("11")};
  std::vector<QtRational> xy = x;
  xy.insert(xy.end(), y.begin(), y.end());
  for (const auto& l : partitions_up_to(4)) {
    const QtRational lhs = evaluate(macdonald_P(l), xy, id, QtRational(1));
    QtRational rhs;
    for (const auto& mu : partitions_up_to(l.weight()))
      if (mu.contained_in(l))
        rhs += evaluate(skew_P(l, mu, 2), x, id, QtRational(1)) * evaluate(macdonald_P(mu), y, id, QtRational(1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("principal specialisation") {
  CHECK(principal_specialization({1}, 3) == P("(1-t^3)/(1-t)"));
  CHECK(specialize(macdonald_P({1}), {}, 2, QtRational::q() + 5) == (QtRational::q() + 5) * (1 + QtRational::t()));
  for (int d = 0; d <= 5; ++d)
    for (const auto& l : partitions_of(d))
      for (int n = std::max(1, l.length()); n <= l.length() + 2; ++n)
        CHECK(principal_specialization(l, n) == specialize(macdonald_P(l), {}, n));
  const Partition l{2}, mu{1, 1};
  CHECK(specialize(macdonald_P(mu), l, 2) * principal_specialization(l, 2) ==
        specialize(macdonald_P(l), mu, 2) * principal_specialization(mu, 2));
  for (const auto& a : partitions_up_to(3, 3))
    for (const auto& b : partitions_up_to(3, 3))
      CHECK(specialize(macdonald_P(b), a, 3) * principal_specialization(a, 3) ==
            specialize(macdonald_P(a), b, 3) * principal_specialization(b, 3));
  CHECK_THROWS_AS(specialize(macdonald_P({1}), {1, 1}, 1), std::invalid_argument);
}

TEST_CASE("Jack polynomials") {
  const JackParam formal = JackParam::symbol();
  for (int r = 1; r <= 4; ++r) {
    std::vector<int> ones(r, 1);
    CHECK(jack_P(Partition(ones), formal) == m(Partition(ones)));
  }
  SF j2 = m({2});
  j2.add_term({1, 1}, P("2/(q+1)")); // α written as q
  CHECK(jack_P({2}, formal) == j2);
  SF s2 = m({2});
  s2.add_term({1, 1}, QtRational(1));
  CHECK(jack_P({2}, JackParam::exact(1)) == s2);
  for (const auto& l : partitions_up_to(4)) {
    const auto s = schur(l);
    CHECK(jack_P_rational(l, 1) == s);
  }
  CHECK_THROWS_AS(JackParam::exact(0), std::invalid_argument);
}

TEST_CASE("Jack polynomials as limits of Macdonald polynomials") {
  // q = t^α, t = 1 - ε, Richardson extrapolation over ε ∈ {1e-3, 1e-4}
  for (const Rational alpha : {Rational(1, 2), Rational(2)}) {
    const ExtFloat a = ExtFloat(alpha.get_num().get_str()) / ExtFloat(alpha.get_den().get_str());
    for (const auto& l : partitions_up_to(4)) {
      const auto& J = jack_P_rational(l, alpha);
      for (const auto& [mu, c] : macdonald_P(l).terms) {
        auto at = [&](const char* eps) {
          const ExtFloat t = 1 - ExtFloat(eps);
          return c.eval<ExtFloat>(pow(t, a), t);
        };
        const ExtFloat e1("1e-3"), e2("1e-4");
        const ExtFloat v = (e1 * at("1e-4") - e2 * at("1e-3")) / (e1 - e2);
        const double exact = J.coeff(mu).get_d();
        CHECK(std::abs(v.convert_to<double>() / exact - 1) <= 1e-6);
      }
    }
  }
}
