#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "distkit/catalog.hpp"
#include "distkit/cli.hpp"
#include "distkit/geometry.hpp"
#include "distkit/io.hpp"

using namespace distkit;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

// Paths in the golden records are relative to the test source directory.
struct InTestDir {
  fs::path saved = fs::current_path();
  InTestDir() { fs::current_path(DISTKIT_TEST_DIR); }
  ~InTestDir() { fs::current_path(saved); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> out;
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Golden {
  const char* file;
  const char* args;
  int code;
};

const Golden kGolden[] = {
    {"analyze_pentagon", "analyze data/pentagon.gram --exact", 0},
    {"analyze_icosahedron", "analyze data/icosahedron.pts", 0},
    {"bounds_fisher", "bounds --dim 22 --k 2", 0},
    {"bounds_pentagon", "bounds --dim 2 --inner (sqrt(5)-1)/4,-(sqrt(5)+1)/4", 0},
    {"bounds_icosahedron", "bounds --dim 3 --k 3 --antipodal --inner sqrt(5)/5,-sqrt(5)/5", 0},
    {"bounds_lds", "bounds --dim 5 --lds", 0},
    {"design_pentagon", "design-check data/pentagon.gram --strength 4 --exact --normalize --weights data/pentagon.weights", 0},
    {"weights_pentagon", "weights data/pentagon.gram --k 2 --exact --normalize", 0},
    {"section_icosahedron", "section data/icosahedron.pts --exact --normalize", 0},
    {"decompose_simplex_ray", "decompose data/simplex_ray.pts", 0},
    {"gegenbauer_eval", "gegenbauer eval --dim 3 --degree 4 --at 1/3", 0},
    {"gegenbauer_expand", "gegenbauer expand --dim 4 --coeffs 1/8,-1/2,1", 0},
    {"gegenbauer_linearize", "gegenbauer linearize --dim 5 --k 2 --l 3", 0},
    {"tables_ds2", "tables DS2", 0},
    {"catalog_verify_figure1", "catalog verify figure1", 0},
    {"search_line4", "search line4 --step 0.05", 0},
    {"search_midpoint5_wide", "search midpoint5 --config data/wide_merge.json", 2},
};

}  // namespace

TEST_CASE("golden records") {
  InTestDir here;
  const bool update = std::getenv("DISTKIT_UPDATE_GOLDEN") != nullptr;
  for (const Golden& g : kGolden) {
    CAPTURE(g.file);
    Run r = run(words(g.args));
    CHECK(r.code == g.code);
    CHECK(r.err.empty());
    fs::path path = fs::path("golden") / (std::string(g.file) + ".json");
    if (update) {
      std::ofstream(path) << r.out;
      continue;
    }
    REQUIRE(fs::exists(path));
    CHECK(r.out == slurp(path));
  }
}

TEST_CASE("records are byte-stable and well formed") {
  InTestDir here;
  for (const Golden& g : kGolden) {
    CAPTURE(g.file);
    Run a = run(words(g.args));
    Run b = run(words(g.args));
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    for (const char* key : {"tool", "version", "command", "input_digest", "mode", "basis", "status", "results"})
      CHECK(j.contains(key));
    CHECK(j["command"] == g.args);
    CHECK(j["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
    CHECK((j["status"] == "ok") == (g.code == 0));
  }
}

TEST_CASE("serial and parallel searches print the same results") {
  auto a = nlohmann::json::parse(run(words("search midpoint5 --step 0.05")).out);
  auto b = nlohmann::json::parse(run(words("search midpoint5 --step 0.05 --serial")).out);
  CHECK(a["results"] == b["results"]);
}

TEST_CASE("exit codes") {
  InTestDir here;
  CHECK(run({}).code == cli::kInputError);
  CHECK(run(words("analyze")).code == cli::kInputError);
  CHECK(run(words("analyze data/pentagon.gram --frobnicate")).code == cli::kInputError);
  CHECK(run(words("analyze data/no_such_file.pts")).code == cli::kInputError);

  Run bad = run(words("analyze data/short_row.pts"));
  CHECK(bad.code == cli::kInputError);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("data/short_row.pts:4") != std::string::npos);
  CHECK(bad.err.find("expected 2 fields") != std::string::npos);

  // float mode accepts a mixed-field file; --exact refuses it
  CHECK(run(words("analyze data/mixed_fields.pts")).code == cli::kOk);
  Run mixed = run(words("analyze data/mixed_fields.pts --exact"));
  CHECK(mixed.code == cli::kInputError);
  CHECK(mixed.err.find("--exact") != std::string::npos);

  // the pentagon as emitted is not on the unit sphere
  Run sph = run(words("design-check data/pentagon.gram --strength 2"));
  CHECK(sph.code == cli::kInputError);
  CHECK(sph.err.find("not spherical") != std::string::npos);

  CHECK(run(words("catalog verify dodecahedron")).code == cli::kInputError);
  CHECK(run(words("catalog emit pentagon --param d=3")).code == cli::kInputError);
  CHECK(run(words("search line4 --step 0")).code == cli::kInputError);
  CHECK(run(words("search planar")).code == cli::kInputError);
  CHECK(run(words("gegenbauer eval --dim 3 --degree 2 --at x")).code == cli::kInputError);
  CHECK(run(words("bounds --dim 3 --inner 1/2,1/2")).code == cli::kInputError);

  CHECK(run(words("search midpoint5 --config data/wide_merge.json")).code == cli::kMismatch);
  CHECK(run(words("search midpoint5 --config data/wide_merge.json --step 0.1")).code == cli::kMismatch);
  CHECK(run(words("--version")).code == cli::kOk);
  CHECK(run(words("--help")).code == cli::kOk);
}

TEST_CASE("--out writes the record to a file") {
  fs::path tmp = fs::temp_directory_path() / "distkit_cli_out.json";
  fs::remove(tmp);
  Run r = run({"bounds", "--dim", "3", "--k", "2", "--out", tmp.string()});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.empty());
  REQUIRE(fs::exists(tmp));
  auto j = nlohmann::json::parse(slurp(tmp));
  CHECK(j["status"] == "ok");
  fs::remove(tmp);
}

TEST_CASE("emit then analyze reproduces every suite entry") {
  fs::path dir = fs::temp_directory_path() / "distkit_cli_emit";
  fs::create_directories(dir);
  for (const auto& e : catalog::standard_suite()) {
    CAPTURE(e.label());
    std::ostringstream pts;
    io::write_points(pts, e.config);
    fs::path file = dir / "entry.pts";
    std::ofstream(file) << pts.str();
    const bool exact = e.config.exact.has_value();
    std::vector<std::string> args{"analyze", file.string()};
    if (exact) args.push_back("--exact");
    Run r = run(args);
    REQUIRE(r.code == cli::kOk);
    auto prof = nlohmann::json::parse(r.out)["results"]["profile"];
    if (exact) {
      auto want = distance_profile(*e.config.exact);
      CHECK(prof["class_count"] == want.class_count());
      CHECK(prof["max_local"] == want.max_local());
      CHECK(prof["multiplicities"].get<std::vector<std::size_t>>() == want.multiplicities);
      std::vector<std::string> cls;
      for (const Quad& q : want.classes) cls.push_back(q.str());
      CHECK(prof["sq_classes"].get<std::vector<std::string>>() == cls);
    } else {
      auto want = distance_profile(e.config.points);
      CHECK(prof["class_count"] == want.class_count());
      CHECK(prof["max_local"] == want.max_local());
      CHECK(prof["multiplicities"].get<std::vector<std::size_t>>() == want.multiplicities);
    }
  }
  fs::remove_all(dir);
}

TEST_CASE("catalog emit matches the library writer") {
  for (const char* name : {"pentagon", "icosahedron", "figure1", "clebsch16"}) {
    CAPTURE(name);
    Run r = run({"catalog", "emit", name});
    CHECK(r.code == cli::kOk);
    std::ostringstream want;
    io::write_points(want, catalog::construct(name).config);
    CHECK(r.out == want.str());
  }
}
