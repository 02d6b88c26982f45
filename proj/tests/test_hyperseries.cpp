#include "anselberg/hyperseries.hpp"

#include "doctest.h"

using namespace anselberg;

namespace {
QtRational P(const char* s) { return QtRational::parse(s); }
} // namespace

TEST_CASE("series arithmetic and truncation") {
  const RingPtr R = SeriesRing::make({"x", "y", "a"}, {1, 1, 0}, 3);
  const Series x = Series::var(R, "x"), y = Series::var(R, "y"), a = Series::var(R, "a");
  CHECK((x + y).pow(4).is_zero());
  CHECK((x + y).pow(3).coeff({2, 1, 0}) == QtRational(3));
  CHECK((a * x).pow(3).coeff({3, 0, 3}).is_one());
  CHECK((x - x).is_zero());
  CHECK_THROWS_AS(Series::var(R, "w"), std::out_of_range);
  // (x;q)_∞ · 1/(x;q)_∞ = 1 through the cap
  CHECK(qpoch_inf_series(x) * qpoch_inf_inverse_series(x) == Series::constant(R, QtRational(1)));
  // ratio with A = 0 is 1/(X;q)_∞, with A = q it is 1/(1-X)
  CHECK(qpoch_ratio_series(Series(R), x) == qpoch_inf_inverse_series(x));
  Series geo(R);
  for (int k = 0; k <= 3; ++k) geo += x.pow(k);
  CHECK(qpoch_ratio_series(Series::constant(R, QtRational::q()), x) == geo);
  CHECK_THROWS_AS(qpoch_ratio_series(x, x), std::invalid_argument);
  CHECK(qpoch_ratio_series(a, x).coeff({2, 0, 0}) == P("1/((1-q)*(1-q^2))"));
}

TEST_CASE("phi_series: classical reduction") {
  const RingPtr R = SeriesRing::make({"z", "a"}, {1, 0}, 5);
  const Series z = Series::var(R, "z"), a = Series::var(R, "a");
  const Series phi = phi_series({{a}, {}, {1}, {{z}}}, {5});
  for (int k = 0; k <= 5; ++k) {
    const Series expected = qpoch_int_series(a, k).scaled(qpoch_int(QtRational::q(), k).inverse());
    Series got(R);
    for (const auto& [e, c] : phi.terms())
      if (e[0] == k) got.add_term({0, e[1]}, c);
    Series want(R);
    for (const auto& [e, c] : expected.terms()) want.add_term({0, e[1]}, c);
    CHECK(got == want);
  }
  // lower parameter q^{-1}: (q^{-1};q,t)_(2) vanishes
  CHECK_THROWS_AS(phi_series({{a, Series::constant(R, 1)}, {QtRational::monomial(1, -1, 0)}, {1}, {{z}}}, {4}),
                  std::domain_error);
  CHECK_THROWS_AS(phi_series({{a}, {}, {2, 1}, {{z, z}, {z}}}, {2}), std::invalid_argument);
}

TEST_CASE("phi_series: summand vanishes off the interlacing range") {
  const RingPtr R = SeriesRing::make({"x1", "x2", "y1", "y2", "y3", "a"}, {1, 1, 1, 1, 1, 0}, 4);
  const Series a = Series::var(R, "a");
  const auto x = symbolic_alphabet(R, "x", 2), y = symbolic_alphabet(R, "y", 3);
  for (const auto& shape : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {1, 3}}) {
    const PhiSpec spec{{a}, {}, shape,
                       {std::vector<Series>(x.begin(), x.begin() + shape[0]),
                        std::vector<Series>(y.begin(), y.begin() + shape[1])}};
    CHECK(phi_series(spec, {4}, true) == phi_series(spec, {4}, false));
  }
}

TEST_CASE("Littlewood-Richardson summation identity") {
  auto ok = [](int m, int n, Partition l, Partition mu) { return verify_lr_identity(m, n, l, mu).pass; };
  CHECK(ok(1, 1, {1}, {1}));
  CHECK(ok(2, 3, {2, 1}, {}));
  const auto v = verify_lr_identity(1, 2, {1}, {2, 2});
  CHECK(v.pass);
  CHECK(v.lhs == "0");
  CHECK(v.rhs == "0");
  CHECK_FALSE(v.checks[0].second);
  CHECK(ok(0, 2, {}, {2, 1}));
  CHECK(ok(2, 2, {2}, {1, 1}));
  CHECK(ok(1, 3, {3}, {2, 1, 1}));
  CHECK_THROWS_AS(verify_lr_identity(2, 1, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(verify_lr_identity(1, 2, {1, 1}, {}), std::invalid_argument);
}

TEST_CASE("Cauchy identity") {
  CHECK(verify_cauchy(1, 1, 3).pass);
  CHECK(verify_cauchy(2, 2, 4).pass);
  const auto r0 = verify_cauchy(2, 2, 0);
  CHECK(r0.pass);
  CHECK(r0.lhs == "(1)");
}

TEST_CASE("q-binomial theorem and the all-ones shape") {
  CHECK(verify_q_binomial(1, 5).pass);
  CHECK(verify_q_binomial(2, 4).pass);
  CHECK(verify_equal_one_shape(2, 5).pass);
  CHECK(verify_equal_one_shape(3, 4).pass);
}

TEST_CASE("A_n q-binomial theorems") {
  CHECK(verify_an_qbinomial({2}, QBinomialMode::thm3, {4}).pass);
  CHECK(verify_an_qbinomial({1, 1}, QBinomialMode::thm3, {5}).pass);
  CHECK(verify_an_qbinomial({1, 2}, QBinomialMode::thm3, {5}).pass);
  CHECK(verify_an_qbinomial({1, 2}, QBinomialMode::cor1, {4}).pass);
  CHECK(verify_an_qbinomial({2, 2}, QBinomialMode::cor1, {4}).pass);
  CHECK(verify_an_qbinomial({1, 2}, QBinomialMode::thm2, {4}).pass);
  CHECK(verify_an_qbinomial({1, 1, 2}, QBinomialMode::thm2, {3}).pass);
  CHECK_THROWS_AS(verify_an_qbinomial({2, 1}, QBinomialMode::thm3, {3}), std::invalid_argument);
  CHECK(parse_qbinomial_mode("cor1") == QBinomialMode::cor1);
  CHECK_THROWS_AS(parse_qbinomial_mode("thm9"), std::invalid_argument);
}

TEST_CASE("complement identities") {
  CHECK(verify_complement_identities({1}, {}, {1}, 2, 2).pass);
  CHECK(verify_complement_identities({2, 1}, {1}, {1, 1}, 2, 2).pass);
  for (const auto& l : partitions_up_to(4, 2, 2))
    for (const auto& om : partitions_up_to(l.weight()))
      for (const auto& nu : partitions_of(l.weight() - om.weight(), 2, 2)) {
        const auto r = verify_complement_identities(l, om, nu, 2, 2);
        for (const auto& [name, ok] : r.checks) CHECK_MESSAGE(ok, name << " " << l.to_string() << om.to_string()
                                                                        << nu.to_string());
      }
  CHECK_THROWS_AS(verify_complement_identities({3}, {}, {}, 2, 2), std::invalid_argument);
}
