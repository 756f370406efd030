#include <doctest.h>

#include <random>

#include "distkit/bounds.hpp"
#include "distkit/catalog.hpp"
#include "distkit/geometry.hpp"

using namespace distkit;
using namespace distkit::bounds;

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Quad q(const char* s) { return parse_quad(s); }

std::vector<Quad> midpoint_pair(long d) {
  // normalised edge midpoints of U_d: inner products (d-3)/(2(d-1)) and -2/(d-1)
  return {Quad(Rational(-2, d - 1)), Quad(Rational(d - 3, 2 * (d - 1)))};
}

}  // namespace

TEST_CASE("Fisher-type numbers") {
  CHECK(fisher(2, 2) == 5);
  CHECK(fisher(3, 2) == 9);
  CHECK(fisher(22, 2) == 275);
  for (std::size_t d = 1; d <= 30; ++d) {
    CHECK(fisher(d, 1) == d + 1);
    CHECK(fisher_antipodal(d, 2) == 2 * d);
  }
  CHECK(fisher_antipodal(3, 3) == 12);
  for (std::size_t d = 1; d <= 12; ++d)
    for (std::size_t k = 1; k <= 8; ++k) {
      CHECK(fisher(d, k) == binom(d + k - 1, k) + binom(d + k - 2, k - 1));
      CHECK(fisher_antipodal(d, k) == 2 * binom(d + k - 2, k - 1));
      CHECK(fisher(d + 1, k) > fisher(d, k));
      // S^0 has two points, so N_1(k) = 2 for every k
      if (d >= 2) CHECK(fisher(d, k + 1) > fisher(d, k));
      if (d == 1) CHECK(fisher(d, k) == 2);
    }
  auto c = fisher_certificate(7, 2);
  CHECK(c.floor == 35);
  CHECK(c.value == Quad(35));
}

TEST_CASE("LP bound: pentagon and simplex") {
  std::vector<Quad> pent{q("(sqrt(5)-1)/4"), q("-(sqrt(5)+1)/4")};
  auto e = gegenbauer::expand(annihilator(pent), 2);
  CHECK(e.coeffs[0] == Quad(Rational(1, 4)));
  CHECK(annihilator(pent)(Quad(1)) == Quad(Rational(5, 4)));
  auto c = lp_bound(pent, 2);
  REQUIRE(c.applicable);
  CHECK(c.value == Quad(5));
  CHECK(c.floor == 5);
  for (long d = 2; d <= 12; ++d) {
    std::vector<Quad> s{Quad(Rational(-1, d))};
    auto b = lp_bound(s, static_cast<std::size_t>(d));
    REQUIRE(b.applicable);
    CHECK(b.value == Quad(d + 1));
  }
}

TEST_CASE("LP bound not applicable on a sign failure") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-90, -1);
  for (int trial = 0; trial < 30; ++trial) {
    long d = 2 + trial % 8;
    // alpha + beta < 0 and alpha beta + 1/d <= 0
    Rational a(num(rng), 100), b(1, 2 * d);
    a.canonicalize();
    b = -Rational(1, d) / a;  // alpha beta = -1/d exactly, b > 0
    if (a + b >= 0 || b >= 1) continue;
    std::vector<Quad> in{Quad(a), Quad(b)};
    CHECK_FALSE(lp_bound(in, static_cast<std::size_t>(d)).applicable);
  }
  CHECK_THROWS(lp_bound(std::vector<Quad>{}, 3));
  CHECK_THROWS(positive_coeff_bound(std::vector<Quad>{Quad(Rational(1, 2)), Quad(Rational(1, 2))}, 3));
  CHECK_THROWS(lp_bound(std::vector<Quad>{Quad(1)}, 3));
}

TEST_CASE("positive-coefficient bound") {
  std::vector<Quad> pent{q("(sqrt(5)-1)/4"), q("-(sqrt(5)+1)/4")};
  CHECK(positive_coeff_bound(pent, 2).floor == 5);
  for (long d = 3; d <= 40; ++d) {
    auto c = positive_coeff_bound(midpoint_pair(d), static_cast<std::size_t>(d));
    // alpha + beta = (d - 7) / (2(d - 1)) >= 0 exactly from d = 7 on
    if (d >= 7) CHECK(c.floor == Integer(d * (d + 1) / 2));
    CHECK(c.floor <= Integer(static_cast<long>(fisher(static_cast<std::size_t>(d), 2))));
  }
  auto m7 = positive_coeff_bound(midpoint_pair(7), 7);
  CHECK(m7.floor == 28);
}

TEST_CASE("two-distance closed form") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> num(-99, 99);
  for (int trial = 0; trial < 100; ++trial) {
    Quad a(Rational(num(rng), 100)), b(Rational(num(rng), 100));
    if (a == b) continue;
    std::size_t d = 2 + static_cast<std::size_t>(trial % 20);
    auto m = musin_coefficients(a, b, d);
    auto e = gegenbauer::expand(annihilator(std::vector<Quad>{a, b}), d);
    CHECK(m.f0 == e.coeffs[0]);
    CHECK(m.f1 == e.coeffs[1]);
    CHECK(m.f2 == e.coeffs[2]);
    auto c = musin_bound(a, b, d);
    CHECK(c.applicable == (a + b >= Quad(0)));
    if (c.applicable) CHECK(c.floor == Integer(static_cast<long>(d * (d + 1) / 2)));
  }
}

TEST_CASE("sign decisions are symbolic") {
  // alpha + beta = 0 exactly in Q(sqrt 2): f_1 = 0 must not count
  std::vector<Quad> zero_sum{q("sqrt(2)/3"), q("-sqrt(2)/3")};
  auto c = positive_coeff_bound(zero_sum, 4);
  REQUIRE(c.evidence.size() == 3);
  CHECK(c.evidence[1].sign == 0);
  CHECK_FALSE(c.evidence[1].counted);
  CHECK(c.floor == 1 + 9);
  // f_1 = 1e-20 / d: tiny but positive
  std::vector<Quad> tiny{Quad(Rational(1, 3)), Quad(Rational(-1, 3) - Rational(1, mpz_class("100000000000000000000")))};
  auto t = positive_coeff_bound(tiny, 4);
  CHECK(t.evidence[1].sign == 1);
  CHECK(t.evidence[1].counted);
  CHECK(t.floor == 1 + 4 + 9);
}

TEST_CASE("antipodal bound") {
  std::vector<Quad> ico{Quad::sqrt_of(Rational(1, 5)), -Quad::sqrt_of(Rational(1, 5))};
  auto c = positive_coeff_bound_antipodal(ico, 3, 3);
  CHECK(c.floor == 12);
  REQUIRE(c.evidence.size() == 3);
  CHECK(c.evidence[0].coeff == Quad(Rational(2, 15)));
  CHECK(c.evidence[1].coeff == Quad(0));
  CHECK(c.evidence[2].coeff == Quad(Rational(2, 15)));

  std::vector<Quad> with_minus{Quad(-1), Quad::sqrt_of(Rational(1, 5)), -Quad::sqrt_of(Rational(1, 5))};
  auto w = positive_coeff_bound_antipodal(with_minus, 3, 3);
  CHECK(w.floor == 12);
  CHECK_FALSE(w.notes.empty());

  for (std::size_t d = 2; d <= 10; ++d) {
    std::vector<Quad> cross{Quad(0)};
    CHECK(positive_coeff_bound_antipodal(cross, d, 2).floor == Integer(static_cast<long>(2 * d)));
  }

  // parity rule broken: the coefficient is named in the notes
  std::vector<Quad> odd{Quad(Rational(1, 3)), Quad(Rational(-1, 5))};
  auto bad = positive_coeff_bound_antipodal(odd, 4, 3);
  bool flagged = false;
  for (const auto& n : bad.notes) flagged = flagged || n.find("parity") != std::string::npos;
  CHECK(flagged);
}

TEST_CASE("catalog sets respect the bounds") {
  for (const auto& e : catalog::standard_suite()) {
    if (!e.config.exact) continue;
    ExactGram g;
    try {
      g = center_and_normalize(*e.config.exact).gram;
    } catch (const GeometryError&) {
      continue;  // not spherical
    }
    CAPTURE(e.label());
    auto prof = distance_profile(g);
    auto sp = inner_spectrum(g);
    const std::size_t d = span_dim(e.config.points);
    const std::size_t n = g.n;
    const std::size_t k = prof.class_count();
    CHECK(n <= fisher(d, prof.max_local()));
    if (is_antipodal(g).antipodal) CHECK(n <= fisher_antipodal(d, prof.max_local()));
    auto pc = positive_coeff_bound(sp.classes, d);
    CHECK(Integer(static_cast<long>(n)) <= pc.floor);
    CHECK(pc.floor <= Integer(static_cast<long>(fisher(d, k))));
    auto lp = lp_bound(sp.classes, d);
    if (lp.applicable) CHECK(Integer(static_cast<long>(n)) <= lp.floor);
  }
}

TEST_CASE("LP bound is attained on the extremal examples") {
  for (const char* name : {"pentagon", "icosahedron"}) {
    auto e = catalog::construct(name);
    auto g = center_and_normalize(*e.config.exact).gram;
    auto sp = inner_spectrum(g);
    std::vector<Quad> in;
    for (const Quad& v : sp.classes)
      if (v != Quad(-1)) in.push_back(v);
    if (std::string(name) == "pentagon") {
      CHECK(lp_bound(in, 2).floor == 5);
    } else {
      CHECK(positive_coeff_bound_antipodal(in, 3, 3).floor == 12);
    }
  }
}

TEST_CASE("saturated-subset recursion") {
  auto c3 = lds_recursion(3);
  CHECK(c3.f == 8);
  CHECK(c3.cap >= 7);
  auto c5 = lds_recursion(5);
  CHECK(c5.f == 13);
  CHECK(c5.f < 16);
  CHECK(c5.cap == 16);
  for (std::size_t d = 2; d <= 40; ++d) {
    auto c = lds_recursion(d);
    CAPTURE(d);
    CHECK(c.width_bound == static_cast<int>(d * (d + 1) / 2 + 2));
    CHECK(c.f <= c.width_bound);
    CHECK(c.width_holds);
    CHECK(c.terms.size() == d - 1);
    for (const auto& t : c.terms) CHECK(t.sum <= c.f);
  }
  CHECK_FALSE(lds_recursion(30).substitutions.empty());
}
