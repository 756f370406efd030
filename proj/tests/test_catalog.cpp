#include <doctest.h>

#include <chrono>
#include <cmath>
#include <sstream>

#include "distkit/catalog.hpp"
#include "distkit/designs.hpp"
#include "distkit/geometry.hpp"

using namespace distkit;
using namespace distkit::catalog;

namespace {

std::vector<std::size_t> sorted_multiplicities(const DistanceProfile<double>& p) {
  auto m = p.multiplicities;
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

TEST_CASE("every suite entry reproduces its expected profile") {
  auto start = std::chrono::steady_clock::now();
  auto suite = standard_suite();
  CHECK(suite.size() >= 40);
  for (const auto& e : suite) {
    auto v = verify(e);
    CAPTURE(v.label);
    for (const auto& c : v.checks) {
      CAPTURE(c.field);
      CAPTURE(c.expected);
      CAPTURE(c.observed);
      CHECK(c.ok);
    }
    CHECK(v.ok());
  }
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(30));
}

TEST_CASE("named two-distance sets") {
  struct Row {
    const char* name;
    std::size_t n;
    std::size_t dim;
  };
  for (Row r : {Row{"pentagon", 5, 2}, Row{"octahedron", 6, 3}, Row{"prism3", 6, 3}, Row{"petersen10", 10, 4},
                Row{"clebsch16", 16, 5}, Row{"schlafli27", 27, 6}, Row{"d7_29", 29, 7}, Row{"d8_45", 45, 8}}) {
    auto e = construct(r.name);
    CAPTURE(r.name);
    CHECK(e.config.points.size() == r.n);
    CHECK(span_dim(e.config.points) == r.dim);
    auto prof = distance_profile(e.config.points);
    CHECK(prof.class_count() == 2);
  }
}

TEST_CASE("clebsch16 and d8_45 squared classes") {
  auto c = construct("clebsch16");
  auto pc = distance_profile(*c.config.exact);
  CHECK(pc.classes == std::vector<Quad>{Quad(2), Quad(4)});
  auto d8 = construct("d8_45");
  auto p8 = distance_profile(*d8.config.exact);
  CHECK(p8.classes == std::vector<Quad>{Quad(2), Quad(4)});
  CHECK(d8.config.points.size() == 45);
}

TEST_CASE("midpoint simplices") {
  for (std::size_t d = 2; d <= 12; ++d) {
    auto e = construct("midpoint_simplex", {{"d", std::to_string(d)}});
    CAPTURE(d);
    CHECK(e.config.points.size() == d * (d + 1) / 2);
    auto prof = distance_profile(*e.config.exact);
    // the three edge midpoints of a triangle form an equilateral triangle
    CHECK(prof.class_count() == (d == 2 ? 1u : 2u));
  }
  auto m7 = construct("midpoint_simplex", {{"d", "7"}});
  auto g = center_and_normalize(*m7.config.exact).gram;
  auto sp = inner_spectrum(g);
  REQUIRE(sp.classes.size() == 2);
  CHECK((sp.classes[0] + sp.classes[1]).sign() >= 0);
  CHECK(g.n == 28);
}

TEST_CASE("chain_2k is k-distance and locally two-distance") {
  for (std::size_t k = 3; k <= 8; ++k) {
    auto e = construct("chain_2k", {{"k", std::to_string(k)}});
    CAPTURE(k);
    CHECK(e.config.points.size() == 2 * (k - 1));
    CHECK(span_dim(e.config.points) == 2 * k - 3);
    auto prof = distance_profile(e.config.points);
    CHECK(prof.class_count() == k);
    CHECK(prof.max_local() == 2);
  }
}

TEST_CASE("figure1") {
  auto e = construct("figure1");
  REQUIRE(e.config.exact);
  auto prof = distance_profile(*e.config.exact);
  CHECK(e.config.points.size() == 8);
  CHECK(prof.total_local() == 24);
  CHECK(prof.max_local() == 3);
  CHECK(prof.is_proper_locally_k(3));
  REQUIRE(prof.class_count() == 4);
  Quad s3 = Quad::sqrt_of(3);
  CHECK(prof.classes[0] == Quad(1));
  CHECK(prof.classes[1] == Quad(2));
  CHECK(prof.classes[2] == Quad(2) + s3);
  CHECK(prof.classes[3] == (Quad(1) + s3) * (Quad(1) + s3));
}

TEST_CASE("graph_embed reproduces the explicit constructions") {
  // normalised midpoint pair at d = 4: disjoint edges -2/3, edges sharing a vertex 1/6
  auto emb = graph_embed(kneser2_graph(5), Quad(Rational(-2, 3)), Quad(Rational(1, 6)));
  REQUIRE(emb.feasible);
  REQUIRE(emb.points);
  CHECK(emb.points->size() == 10);
  CHECK(emb.rank == 4);
  auto pe = distance_profile(*emb.points);
  auto pm = distance_profile(construct("petersen10").config.points);
  CHECK(pe.class_count() == 2);
  CHECK(sorted_multiplicities(pe) == sorted_multiplicities(pm));

  auto cl = construct("clebsch16");
  auto clg = center_and_normalize(*cl.config.exact).gram;
  auto cls = inner_spectrum(clg).classes;
  REQUIRE(cls.size() == 2);
  // the Clebsch graph is 5-regular: its edges are the class holding 16 * 5 / 2 = 40 pairs
  auto cprof = distance_profile(clg);
  REQUIRE(cprof.multiplicities.size() == 2);
  // squared distance 2 - 2 (x, y) reverses the order of the classes
  const std::size_t edge = cprof.multiplicities[0] == 40 ? 1 : 0;
  auto ce = graph_embed(clebsch_graph(), cls[edge], cls[1 - edge]);
  REQUIRE(ce.feasible);
  CHECK(ce.rank == 5);
  CHECK(sorted_multiplicities(distance_profile(*ce.points)) == sorted_multiplicities(distance_profile(cl.config.points)));

  auto s27 = construct("schlafli27");
  CHECK(span_dim(s27.config.points) == 6);
  auto ps = distance_profile(s27.config.points);
  CHECK(ps.class_count() == 2);
  CHECK(sorted_multiplicities(ps) == std::vector<std::size_t>{135, 216});
}

TEST_CASE("graph_embed of K_{d+1} is the regular simplex") {
  for (std::size_t d = 2; d <= 9; ++d) {
    auto emb = graph_embed(complete_graph(d + 1), Quad(Rational(-1, static_cast<long>(d))), Quad(Rational(1, 2)));
    REQUIRE(emb.feasible);
    CHECK(emb.rank == d);
    auto prof = distance_profile(*emb.points);
    CHECK(prof.class_count() == 1);
    CHECK(prof.classes[0] == doctest::Approx(2.0 + 2.0 / static_cast<double>(d)));
  }
}

TEST_CASE("graph_embed infeasible and malformed input") {
  auto emb = graph_embed(kneser2_graph(5), Quad(Rational(9, 10)), Quad(Rational(-9, 10)));
  CHECK_FALSE(emb.feasible);
  CHECK(emb.min_eigenvalue < 0);
  CHECK_FALSE(emb.points);
  GraphSpec bad{3, {{false, true, false}, {false, false, false}, {false, false, false}}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_THROWS_AS(graph_embed(bad, Quad(0), Quad(Rational(1, 2))), std::invalid_argument);
  GraphSpec loop{2, {{true, false}, {false, false}}};
  CHECK_THROWS_AS(loop.validate(), std::invalid_argument);
}

TEST_CASE("graph families") {
  auto k = kneser2_graph(5);
  for (std::size_t i = 0; i < k.n; ++i) CHECK(k.degree(i) == 3);
  auto c = clebsch_graph();
  CHECK(c.n == 16);
  for (std::size_t i = 0; i < 16; ++i) CHECK(c.degree(i) == 5);
  auto l = lines27_graph();
  CHECK(l.n == 27);
  for (std::size_t i = 0; i < 27; ++i) CHECK(l.degree(i) == 10);
}

TEST_CASE("construct rejects bad input") {
  CHECK_THROWS_AS(construct("dodecahedron"), std::invalid_argument);
  CHECK_THROWS_AS(construct("midpoint_simplex"), std::invalid_argument);
  CHECK_THROWS_AS(construct("midpoint_simplex", {{"d", "1"}}), std::invalid_argument);
  CHECK_THROWS_AS(construct("midpoint_simplex", {{"d", "x"}}), std::invalid_argument);
  CHECK_THROWS_AS(construct("chain_2k", {{"k", "2"}}), std::invalid_argument);
  CHECK_THROWS_AS(construct("simplex_plus_ray", {{"d", "3"}, {"s", "1"}}), std::invalid_argument);
  CHECK_THROWS_AS(construct("pentagon", {{"d", "3"}}), std::invalid_argument);
}

TEST_CASE("list covers every constructor") {
  auto l = list();
  for (const char* name : {"regular_simplex", "simplex_plus_ray", "chain_2k", "pentagon", "octahedron", "prism3",
                           "icosahedron", "midpoint_simplex", "petersen10", "clebsch16", "schlafli27", "d7_29", "d8_45",
                           "cross_polytope", "figure1"}) {
    bool found = false;
    for (const auto& i : l) found = found || i.name == name;
    CAPTURE(name);
    CHECK(found);
  }
}

TEST_CASE("simplex plus ray: generic parameters are proper") {
  for (const char* s : {"2", "3", "-3/7", "1/3", "5/2"}) {
    for (std::size_t d : {2u, 3u, 5u}) {
      auto e = construct("simplex_plus_ray", {{"d", std::to_string(d)}, {"s", s}});
      auto prof = distance_profile(*e.config.exact);
      CAPTURE(s);
      CAPTURE(d);
      CHECK(prof.is_proper_locally_k(2));
      CHECK(verify(e).ok());
    }
  }
}

TEST_CASE("simplex plus ray: the exceptional parameters degenerate") {
  for (std::size_t d : {2u, 3u, 4u}) {
    auto ex = simplex_plus_ray_exceptions(d);
    CAPTURE(d);
    REQUIRE_FALSE(ex.empty());
    bool has_zero = false, has_one = false;
    for (double s : ex) {
      has_zero = has_zero || std::abs(s) < 1e-9;
      has_one = has_one || std::abs(s - 1) < 1e-9;
    }
    CHECK(has_zero);
    CHECK(has_one);
    for (double s : ex) {
      if (std::abs(s - 1) < 1e-9) continue;
      std::ostringstream os;
      os.precision(17);
      os << s;
      auto e = construct("simplex_plus_ray", {{"d", std::to_string(d)}, {"s", os.str()}});
      auto prof = distance_profile(e.config.points.with_tol(1e-8));
      CAPTURE(s);
      CHECK(prof.class_count() <= 2);
    }
  }
}

TEST_CASE("icosahedron subsets") {
  auto fam = icosahedron_subsets();
  MESSAGE("two-distance 6-subsets: " << fam.two_distance_subsets << ", signatures: " << fam.representatives.size());
  CHECK(fam.two_distance_subsets > 0);
  CHECK(fam.representatives.size() == fam.signatures.size());
  CHECK_FALSE(fam.representatives.empty());
  auto ico = construct("icosahedron");
  for (const auto& idx : fam.representatives) {
    CHECK(idx.size() == 6);
    auto prof = distance_profile(ico.config.exact->subset(idx));
    CHECK(prof.class_count() == 2);
  }
}

TEST_CASE("known tables") {
  auto ds = known_tables("DS2");
  CHECK(ds.lookup(6)->lo == 27);
  auto star = known_tables("DSstar2");
  auto e23 = star.lookup(23);
  REQUIRE(e23);
  CHECK(e23->lo == 276);
  CHECK(e23->hi == 277);
  CHECK(known_tables("LDSstar2").lookup(23)->lo == 277);
  CHECK_THROWS_AS(known_tables("DS9"), std::invalid_argument);
}
