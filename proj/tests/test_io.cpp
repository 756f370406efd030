#include <doctest.h>

#include <sstream>

#include "distkit/catalog.hpp"
#include "distkit/geometry.hpp"
#include "distkit/io.hpp"

using namespace distkit;
using namespace distkit::io;

namespace {

PointFile parse(const std::string& text, std::optional<double> tol = {}) {
  std::istringstream in(text);
  return read_points(in, "mem", tol);
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("point files") {
  auto pf = parse("# unit square\n2 4\n0 0\n1 0\n\n1 1\n0 1\n");
  CHECK(pf.config.points.size() == 4);
  CHECK(pf.config.points.dim() == 2);
  CHECK(pf.exact_ok);
  CHECK_FALSE(pf.from_gram);
  CHECK(pf.tol == doctest::Approx(kDefaultTol));
  REQUIRE(pf.config.exact);
  CHECK(pf.config.exact->sq_distance(0, 2) == Quad(2));

  auto pent = parse("2 2\n(sqrt(5)-1)/4 1/2\n-0.25 sqrt(3)/2\n");
  CHECK(pent.config.points.point(0)[0] == doctest::Approx((std::sqrt(5.0) - 1) / 4));
  CHECK(pent.config.points.point(1)[0] == -0.25);
}

TEST_CASE("tol directive and override") {
  CHECK(parse("# tol 1e-6\n1 2\n0\n1\n").tol == doctest::Approx(1e-6));
  CHECK(parse("# tol 1e-6\n1 2\n0\n1\n", 1e-7).tol == doctest::Approx(1e-7));
  CHECK(parse("# tol 1e-6\n1 2\n0\n1\n").config.points.tol() == doctest::Approx(1e-6));
  CHECK(error_of("# tol 0.5\n1 2\n0\n1\n").find("tol") != std::string::npos);
  CHECK(error_of("# tol abc\n1 2\n0\n1\n").find("mem:1") != std::string::npos);
}

TEST_CASE("diagnostics name the line and field") {
  std::string e = error_of("2 3\n0 0\n1 x\n0 1\n");
  CHECK(e.find("mem:3") != std::string::npos);
  CHECK(e.find("column 2") != std::string::npos);
  e = error_of("2 3\n0 0\n1 0 4\n0 1\n");
  CHECK(e.find("mem:3") != std::string::npos);
  CHECK(e.find("expected 2 fields") != std::string::npos);
  CHECK(error_of("2 3\n0 0\n1 0\n").find("declares 3 rows, found 2") != std::string::npos);
  CHECK(error_of("two 3\n").find("'dim'") != std::string::npos);
  CHECK(error_of("2 -1\n").find("'n'") != std::string::npos);
  CHECK(error_of("2\n0 0\n").find("header") != std::string::npos);
  CHECK(error_of("# only a comment\n").find("empty") != std::string::npos);
  CHECK_THROWS_AS(read_points_file("/nonexistent/points.txt"), InputError);
}

TEST_CASE("mixed quadratic fields fall back to floating point") {
  auto pf = parse("2 2\nsqrt(2) 0\n0 sqrt(3)\n");
  CHECK(pf.exact_ok);  // coordinates sit on separate axes: no cross products
  auto mixed = parse("2 2\nsqrt(2) sqrt(3)\n1 1\n");
  CHECK_FALSE(mixed.exact_ok);
  CHECK_FALSE(mixed.exact_failure.empty());
  CHECK_FALSE(mixed.config.exact);
  CHECK(mixed.config.points.size() == 2);
  CHECK(error_of("gram 2 2\n1 sqrt(2)\nsqrt(3) 1\n").find("symmetric") != std::string::npos);
}

TEST_CASE("gram files") {
  auto pf = parse("gram 2 3\n1 -1/2 -1/2\n-1/2 1 -1/2\n-1/2 -1/2 1\n");
  CHECK(pf.from_gram);
  CHECK(pf.exact_ok);
  REQUIRE(pf.config.exact);
  CHECK(pf.config.points.size() == 3);
  CHECK(pf.config.points.dim() == 2);
  auto prof = distance_profile(*pf.config.exact);
  REQUIRE(prof.class_count() == 1);
  CHECK(prof.classes[0] == Quad(3));
  auto fprof = distance_profile(pf.config.points);
  CHECK(fprof.classes[0] == doctest::Approx(3.0));
}

TEST_CASE("weights") {
  std::istringstream in("# pentagon\n1/5\n0.2\n1/5\n\n1/5\n1/5\n");
  auto w = read_weights(in, "w");
  REQUIRE(w.exact.size() == 5);
  for (const auto& q : w.exact) CHECK(q == Quad(Rational(1, 5)));
  CHECK(w.values[1] == doctest::Approx(0.2));
  std::istringstream two("1/2 1/2\n");
  CHECK_THROWS_AS(read_weights(two, "w"), InputError);
  std::istringstream none("# nothing\n");
  CHECK_THROWS_AS(read_weights(none, "w"), InputError);
  std::istringstream bad("1/0\n");
  CHECK_THROWS_AS(read_weights(bad, "w"), InputError);
}

TEST_CASE("write and read round trip over the suite") {
  for (const auto& e : catalog::standard_suite()) {
    CAPTURE(e.label());
    std::ostringstream out;
    write_points(out, e.config);
    auto back = parse(out.str());
    REQUIRE(back.config.points.size() == e.config.points.size());
    CHECK(back.config.points.tol() == doctest::Approx(e.config.points.tol()));
    if (e.config.exact) {
      REQUIRE(back.config.exact);
      auto a = distance_profile(*e.config.exact);
      auto b = distance_profile(*back.config.exact);
      CHECK(a.classes == b.classes);
      CHECK(a.multiplicities == b.multiplicities);
    } else {
      auto a = distance_profile(e.config.points);
      auto b = distance_profile(back.config.points);
      CHECK(a.class_count() == b.class_count());
      CHECK(a.multiplicities == b.multiplicities);
    }
    // writing is a fixed point after one round trip
    std::ostringstream again;
    write_points(again, back.config);
    CHECK(again.str() == out.str());
  }
}

TEST_CASE("fnv1a64 reference vectors") {
  CHECK(fnv1a64("") == "cbf29ce484222325");
  CHECK(fnv1a64("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a64("foobar") == "85944171f73967e8");
}
