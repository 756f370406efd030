#include <doctest.h>

#include <cmath>
#include <random>

#include "distkit/gegenbauer.hpp"

using namespace distkit;
using namespace distkit::gegenbauer;

namespace {

Rational rand_rational(std::mt19937_64& rng, long span = 30) {
  std::uniform_int_distribution<long> num(-span, span), den(1, 17);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("low-degree values") {
  for (std::size_t d = 2; d <= 12; ++d) {
    CHECK(eval(d, 0, 0.37) == 1.0);
    CHECK(eval(d, 1, Quad(Rational(1, 2))) == Quad(Rational(static_cast<long>(d), 2)));
    // G_2 = (d+2)(d t^2 - 1)/2
    for (long n : {-3L, 0L, 1L, 5L}) {
      Rational t(n, 4);
      Rational expect = Rational(static_cast<long>(d) + 2) * (Rational(static_cast<long>(d)) * t * t - 1) / 2;
      CHECK(eval(d, 2, Quad(t)) == Quad(expect));
    }
  }
  CHECK(eval(3, 1, 0.5) == doctest::Approx(1.5));
  CHECK(eval(3, 2, Quad(1)) == Quad(5));
}

TEST_CASE("harmonic dimensions") {
  CHECK(harm_dim(3, 0) == 1);
  CHECK(harm_dim(3, 1) == 3);
  CHECK(harm_dim(3, 2) == 5);
  CHECK(harm_dim(3, 3) == 7);
  for (std::size_t l = 1; l <= 12; ++l) CHECK(harm_dim(2, l) == 2);
  CHECK(harm_dim(7, 2) == 27);
  for (std::size_t d = 2; d <= 25; ++d)
    for (std::size_t l = 0; l <= 10; ++l) CHECK(harm_dim(d, l) == harm_dim_closed_form(d, l));
}

TEST_CASE("circle: G_l(cos x) = 2 cos(l x)") {
  for (std::size_t l = 1; l <= 12; ++l)
    for (double x : {0.0, 0.3, 1.1, 2.0, 3.1}) CHECK(eval(2, l, std::cos(x)) == doctest::Approx(2 * std::cos(l * x)).scale(1));
}

TEST_CASE("two-sphere: G_l = (2l+1) P_l") {
  for (unsigned l = 0; l <= 12; ++l)
    for (double t : {-1.0, -0.6, -0.1, 0.0, 0.45, 0.9, 1.0})
      CHECK(eval(3, l, t) == doctest::Approx((2.0 * l + 1) * std::legendre(l, t)).scale(1));
}

TEST_CASE("three-sphere: G_l / h_l = U_l(t) / (l+1)") {
  for (std::size_t l = 0; l <= 12; ++l) {
    CHECK(harm_dim(4, l) == Integer(static_cast<long>((l + 1) * (l + 1))));
    for (double x : {0.2, 0.9, 1.7, 2.8}) {
      double u = std::sin((l + 1) * x) / std::sin(x);
      double h = static_cast<double>((l + 1) * (l + 1));
      CHECK(eval(4, l, std::cos(x)) / h == doctest::Approx(u / (l + 1)).scale(1));
    }
  }
}

TEST_CASE("three-term recurrence holds exactly") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = 2 + trial % 9;
    Quad t(rand_rational(rng, 5));
    for (std::size_t l = 1; l <= 10; ++l) {
      Quad lhs = t * eval(d, l, t);
      Quad rhs = Quad(lambda(d, l + 1)) * eval(d, l + 1, t) + Quad(Rational(1) - lambda(d, l - 1)) * eval(d, l - 1, t);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("monomial forms match the recurrence") {
  for (std::size_t d = 2; d <= 8; ++d)
    for (std::size_t l = 0; l <= 10; ++l) {
      const auto& p = polynomial(d, l);
      CHECK(p.degree() == l);
      for (long n : {-2L, 1L, 3L}) {
        Quad t(Rational(n, 3));
        CHECK(p(t) == eval(d, l, t));
      }
    }
}

TEST_CASE("expansion examples") {
  for (std::size_t d = 2; d <= 10; ++d) {
    auto one = expand(Polynomial<Quad>({Quad(1)}), d);
    REQUIRE(one.coeffs.size() == 1);
    CHECK(one.coeffs[0] == Quad(1));
    Quad alpha = parse_quad("(sqrt(5)-1)/4");
    auto lin = expand(Polynomial<Quad>({-alpha, Quad(1)}), d);
    REQUIRE(lin.coeffs.size() == 2);
    CHECK(lin.coeffs[0] == -alpha);
    CHECK(lin.coeffs[1] == Quad(Rational(1, static_cast<long>(d))));
  }
}

TEST_CASE("two-distance closed form over random rationals") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    Quad a(rand_rational(rng)), b(rand_rational(rng));
    std::size_t d = 2 + static_cast<std::size_t>(rng() % 30);
    Quad dd(static_cast<long>(d));
    std::vector<Quad> roots{a, b};
    auto e = expand(Polynomial<Quad>::from_roots(roots), d);
    REQUIRE(e.coeffs.size() == 3);
    CHECK(e.coeffs[0] == a * b + Quad(1) / dd);
    CHECK(e.coeffs[1] == -(a + b) / dd);
    CHECK(e.coeffs[2] == Quad(2) / (dd * (dd + Quad(2))));
  }
}

TEST_CASE("expand and reconstruct are inverse") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t d = 2 + trial % 11;
    std::size_t deg = static_cast<std::size_t>(trial % 11);
    std::vector<Quad> c;
    std::vector<double> cd;
    for (std::size_t i = 0; i <= deg; ++i) {
      Rational r = rand_rational(rng);
      Quad v = trial % 3 == 0 ? Quad(r, rand_rational(rng), 5) : Quad(r);
      c.push_back(v);
      cd.push_back(v.to_double());
    }
    if (c.back().is_zero()) c.back() = Quad(1), cd.back() = 1.0;
    Polynomial<Quad> p(c);
    CHECK(expand(p, d).reconstruct() == p);

    Polynomial<double> pd(cd);
    auto back = expand(pd, d).reconstruct();
    double scale = 0;
    for (double x : cd) scale = std::max(scale, std::abs(x));
    for (std::size_t i = 0; i <= deg; ++i) CHECK(std::abs(back.coeff(i) - cd[i]) <= 1e-12 * scale);
  }
}

TEST_CASE("expansion agrees with evaluation") {
  Polynomial<Quad> p({Quad(3), Quad(-1), Quad(0), Quad(Rational(2, 7)), Quad(1)});
  for (std::size_t d : {2u, 5u, 9u}) {
    auto e = expand(p, d);
    for (long n : {-4L, 0L, 3L}) {
      Quad t(Rational(n, 5));
      Quad s(0);
      for (std::size_t i = 0; i < e.coeffs.size(); ++i) s += e.coeffs[i] * eval(d, i, t);
      CHECK(s == p(t));
    }
  }
}

TEST_CASE("linearization examples") {
  for (std::size_t k = 0; k <= 4; ++k) {
    auto t = linearization(3, k, k);
    CHECK(t.q[0] == Rational(harm_dim(3, k)));
  }
  auto p = linearization(4, 1, 2);
  for (std::size_t i = 0; i < p.q.size(); i += 2) CHECK(p.q[i] == 0);
  for (std::size_t d = 2; d <= 10; ++d)
    for (const Rational& v : linearization(d, 1, 1).q) CHECK(v >= 0);
}

TEST_CASE("linearization tables are consistent for d <= 10, k, l <= 5") {
  for (std::size_t d = 2; d <= 10; ++d)
    for (std::size_t k = 0; k <= 5; ++k)
      for (std::size_t l = 0; l <= 5; ++l) {
        auto t = linearization(d, k, l);
        CAPTURE(d);
        CAPTURE(k);
        CAPTURE(l);
        CHECK(linearization_violations(t).empty());
        // independent restatement of the three properties
        for (std::size_t i = 0; i < t.q.size(); ++i) {
          CHECK(t.q[i] >= 0);
          bool support = i + std::min(k, l) >= std::max(k, l) && i <= k + l && (i + k + l) % 2 == 0;
          if (t.q[i] != 0) CHECK(support);
          // strictly positive on the whole support once the weight is nontrivial; on
          // the circle 4 cos(kx) cos(lx) keeps only the two extreme terms
          if (d >= 3) CHECK((t.q[i] != 0) == support);
          if (d == 2 && k > 0 && l > 0) CHECK((t.q[i] != 0) == (i == k + l || i + std::min(k, l) == std::max(k, l)));
        }
        CHECK(t.q[0] == (k == l ? Rational(harm_dim(d, k)) : Rational(0)));
      }
}

TEST_CASE("a corrupted table is reported") {
  auto t = linearization(5, 2, 3);
  t.q[1] = -t.q[1];
  CHECK_FALSE(linearization_violations(t).empty());
  auto u = linearization(5, 2, 2);
  u.q[0] += 1;
  CHECK_FALSE(linearization_violations(u).empty());
}
