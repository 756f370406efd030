#include <doctest.h>

#include <cmath>

#include "distkit/catalog.hpp"
#include "distkit/geometry.hpp"
#include "distkit/search.hpp"

using namespace distkit;
using namespace distkit::search;

namespace {

SearchConfig coarse(bool parallel) {
  SearchConfig c;
  c.step = 1e-2;
  c.parallel = parallel;
  return c;
}

const SubCheck* find_sub(const SearchReport& r, const std::string& prefix) {
  for (const auto& s : r.sub_checks)
    if (s.name.rfind(prefix, 0) == 0) return &s;
  return nullptr;
}

}  // namespace

TEST_CASE("line helpers") {
  CHECK(line_max_local({0, 1, 2, 3}, 1e-6) == 3);
  CHECK(line_max_local({0, 1, 3, 4}, 1e-6) == 3);
  CHECK(line_violation({0, 1, 2, 3}) >= 1.0);
  CHECK_THROWS(line_max_local({0, 1, 2}, 1e-6));
  CHECK_THROWS(line_violation({0, 1, 2.5}));
  for (double x : {-2.0, 0.5, 1.7, 3.0})
    for (double y : {-1.3, 2.2, 4.1}) {
      if (std::abs(x - y) < 1e-9 || x == 0 || x == 1 || y == 0 || y == 1) continue;
      CHECK(line_max_local({0, 1, x, y}, 1e-6) >= 3);
      CHECK(line_violation({0, 1, x, y}) >= 1.0 - 1e-12);
    }
}

TEST_CASE("planar violation") {
  // a regular pentagon plus nothing is two-distance: no violation
  std::vector<std::array<double, 2>> pent;
  for (int i = 0; i < 5; ++i) pent.push_back({std::cos(2 * M_PI * i / 5), std::sin(2 * M_PI * i / 5)});
  CHECK(planar_violation(pent) == doctest::Approx(0.0).scale(1));
  // five collinear points: the midpoint sees two, an endpoint sees four distances
  std::vector<std::array<double, 2>> line{{-1, 0}, {-0.5, 0}, {0, 0}, {0.5, 0}, {1, 0}};
  CHECK(planar_violation(line) > 0.1);
}

TEST_CASE("refute_line4 on a coarse grid") {
  auto r = refute_line4(coarse(true));
  CHECK(r.claim == "line4");
  CHECK(r.min_local == 3);
  CHECK(r.best_score > r.margin);
  CHECK(r.margin == doctest::Approx(10 * r.merge_tol));
  CHECK(r.verdict == "supports-nonexistence");
  CHECK(r.cells > 0);
  REQUIRE(r.sub_checks.size() >= 2);
  for (const auto& s : r.sub_checks) {
    CAPTURE(s.name);
    CHECK(s.passed);
  }
  auto serial = refute_line4(coarse(false));
  CHECK(serial.best_score == r.best_score);
  CHECK(serial.best_params == r.best_params);
  CHECK(serial.cells == r.cells);
  CHECK(serial.min_local == r.min_local);
}

TEST_CASE("refute_midpoint5 on a coarse grid") {
  auto r = refute_midpoint5(coarse(true));
  CHECK(r.claim == "midpoint5");
  CHECK(r.best_score > r.margin);
  CHECK(r.verdict == "supports-nonexistence");
  // the closest approach is the golden-ratio configuration, sqrt 5 - 2 below one
  CHECK(r.best_score == doctest::Approx(std::sqrt(5.0) - 2).epsilon(1e-2));
  REQUIRE(find_sub(r, "collinear"));
  REQUIRE(find_sub(r, "rectangle"));
  CHECK(find_sub(r, "collinear")->passed);
  CHECK(find_sub(r, "rectangle")->passed);
  auto serial = refute_midpoint5(coarse(false));
  CHECK(serial.best_score == r.best_score);
  CHECK(serial.best_params == r.best_params);
}

TEST_CASE("searches are deterministic") {
  auto a = refute_midpoint5(coarse(true));
  auto b = refute_midpoint5(coarse(true));
  CHECK(a.best_score == b.best_score);
  CHECK(a.best_params == b.best_params);
  CHECK(a.cells == b.cells);
}

TEST_CASE("a margin above the best score downgrades the verdict") {
  SearchConfig c = coarse(true);
  c.merge_tol = 0.05;  // margin 0.5 exceeds the best midpoint5 score
  auto r = refute_midpoint5(c);
  CHECK(r.verdict == "inconclusive");
}

TEST_CASE("invalid search configuration") {
  SearchConfig c;
  c.step = 0;
  CHECK_THROWS(refute_line4(c));
  c.step = 1e-2;
  c.extent = -1;
  CHECK_THROWS(refute_midpoint5(c));
  c.extent = 5;
  c.merge_tol = 0.1;
  CHECK_THROWS(refute_line4(c));
  c.merge_tol = 0;
  CHECK_THROWS(refute_line4(c));
}

TEST_CASE("decomposition: simplex plus ray point") {
  auto e = catalog::construct("simplex_plus_ray", {{"d", "3"}, {"s", "2"}});
  auto r = verify_decomposition(e.config.points);
  CHECK(r.verdict == "consistent");
  REQUIRE(r.decompositions.size() == 1);
  const auto& d = r.decompositions[0];
  CHECK(d.subset.size() == 3);  // the facet opposite the ray vertex
  CHECK(d.subset_dim == 2);
  CHECK(d.dimension_ok);
  CHECK(d.locus_ok);
  CHECK(d.cardinality_ok);
  CHECK(d.ds_star + d.lds >= 5);
}

TEST_CASE("decomposition: chain_2k(4)") {
  auto e = catalog::construct("chain_2k", {{"k", "4"}});
  auto r = verify_decomposition(e.config.points);
  CHECK(r.verdict == "consistent");
  REQUIRE_FALSE(r.decompositions.empty());
  for (const auto& d : r.decompositions) {
    CHECK(d.subset.size() == 2);
    CHECK(d.subset_dim == 1);
    CHECK(d.remainder_dim <= 4);
    CHECK(d.dimension_ok);
  }
}

TEST_CASE("decomposition: two-distance input is vacuous") {
  auto r = verify_decomposition(catalog::construct("pentagon").config.points);
  CHECK(r.verdict == "vacuous (not proper)");
  CHECK(r.decompositions.empty());
}

TEST_CASE("decomposition: every proper catalog set is consistent") {
  for (const auto& e : catalog::standard_suite()) {
    auto prof = distance_profile(e.config.points);
    if (!prof.is_proper_locally_k(2)) continue;
    CAPTURE(e.label());
    CHECK(verify_decomposition(e.config.points).verdict == "consistent");
  }
}
