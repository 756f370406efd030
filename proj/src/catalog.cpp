#include "distkit/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "distkit/designs.hpp"
#include "distkit/geometry.hpp"

namespace distkit::catalog {

namespace {

using Coords = std::vector<std::vector<Quad>>;

Quad frac(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return Quad(r);
}

Quad root(long m) { return Quad::sqrt_of(Rational(m)); }

std::vector<Quad> sorted_quads(std::vector<Quad> v) {
  std::sort(v.begin(), v.end());
  return v;
}

long param_int(const Params& p, const std::string& key, long lo, long hi) {
  auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("missing parameter '" + key + "'");
  long v = 0;
  try {
    std::size_t used = 0;
    v = std::stol(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw std::invalid_argument("parameter '" + key + "' is not an integer: '" + it->second + "'");
  }
  if (v < lo || v > hi) {
    throw std::invalid_argument("parameter " + key + "=" + std::to_string(v) + " outside [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return v;
}

Configuration from_coords(std::size_t dim, Coords coords) {
  std::vector<double> flat;
  for (const auto& p : coords) {
    for (const Quad& c : p) flat.push_back(c.to_double());
  }
  Configuration cfg{PointSet(dim, std::move(flat)), gram_of(dim, coords), std::move(coords)};
  return cfg;
}

Configuration from_gram(ExactGram g) {
  PointSet pts = points_from_gram(to_float(g), g.dim, default_tolerance());
  return Configuration{std::move(pts), std::move(g), std::nullopt};
}

// Unit regular simplex U_d in R^d: (x_i, x_j) = -1/d.
ExactGram simplex_gram(std::size_t d) {
  ExactGram g{d, d + 1, {}};
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t j = 0; j <= d; ++j) g.entries.push_back(i == j ? frac(1) : frac(-1, static_cast<long>(d)));
  }
  return g;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_of(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) out.emplace_back(i, j);
  }
  return out;
}

CatalogEntry make(std::string name, Params params, Configuration cfg, Expected e, std::string source) {
  return CatalogEntry{std::move(name), std::move(params), std::move(cfg), std::move(e), std::move(source)};
}

// ---- constructors ----------------------------------------------------------

CatalogEntry regular_simplex(std::size_t d) {
  Expected e;
  e.cardinality = d + 1;
  e.classes = 1;
  e.max_local = 1;
  e.span_dim = d;
  e.spherical = true;
  e.antipodal = d == 1;
  e.sq_classes = std::vector<Quad>{frac(2) + frac(2, static_cast<long>(d))};
  if (d >= 2) e.design_strength = 2;
  return make("regular_simplex", {{"d", std::to_string(d)}}, from_gram(simplex_gram(d)), e,
              "unit regular simplex, (x_i, x_j) = -1/d");
}

CatalogEntry simplex_plus_ray(std::size_t d, const Rational& s) {
  ExactGram g = simplex_gram(d);
  ExactGram out{d, d + 2, {}};
  const Quad sq(s);
  for (std::size_t i = 0; i <= d + 1; ++i) {
    for (std::size_t j = 0; j <= d + 1; ++j) {
      if (i <= d && j <= d) {
        out.entries.push_back(g.at(i, j));
      } else if (i == d + 1 && j == d + 1) {
        out.entries.push_back(sq * sq);
      } else {
        std::size_t other = i == d + 1 ? j : i;
        out.entries.push_back(sq * g.at(0, other));
      }
    }
  }
  const Quad edge = frac(2) + frac(2, static_cast<long>(d));
  const Quad a = (frac(1) - sq) * (frac(1) - sq);
  const Quad b = frac(1) + sq * sq + frac(2, static_cast<long>(d)) * sq;
  if (a.is_zero()) throw std::invalid_argument("simplex_plus_ray: s = 1 puts y on a simplex vertex");
  std::set<Quad> classes{edge, a, b};
  Expected e;
  e.cardinality = d + 2;
  e.classes = classes.size();
  e.max_local = 2;
  e.proper_locally = classes.size() > 2;
  e.sq_classes = std::vector<Quad>(classes.begin(), classes.end());
  e.span_dim = d;
  e.spherical = sq * sq == frac(1);
  return make("simplex_plus_ray", {{"d", std::to_string(d)}, {"s", format_rational(s)}}, from_gram(std::move(out)),
              e, "regular simplex plus a point on a vertex-centre line");
}

CatalogEntry chain_2k(std::size_t k) {
  // points x_1, y_1, ..., x_{k-1}, y_{k-1}; blocks for different j are orthogonal
  const std::size_t n = 2 * (k - 1);
  const std::size_t dim = 2 * k - 3;
  ExactGram g{dim, n, std::vector<Quad>(n * n, frac(0))};
  std::vector<double> coords(n * dim, 0.0);
  std::vector<Quad> sq{frac(2), frac(4)};
  for (std::size_t j = 1; j < k; ++j) {
    const std::size_t xi = 2 * (j - 1);
    const std::size_t yi = xi + 1;
    const long jj = static_cast<long>(j * j);
    g.at(xi, xi) = g.at(yi, yi) = frac(1);
    g.at(xi, yi) = g.at(yi, xi) = j == 1 ? frac(-1) : frac(2 - jj, jj);
    if (j == 1) {
      coords[xi * dim + 0] = 1.0;
      coords[yi * dim + 0] = -1.0;
    } else {
      const double a = 1.0 / static_cast<double>(j);
      const double b = std::sqrt(static_cast<double>(jj - 1)) / static_cast<double>(j);
      coords[xi * dim + 2 * j - 3] = a;
      coords[xi * dim + 2 * j - 2] = b;
      coords[yi * dim + 2 * j - 3] = a;
      coords[yi * dim + 2 * j - 2] = -b;
      sq.push_back(frac(4 * (jj - 1), jj));
    }
  }
  Expected e;
  e.cardinality = n;
  e.classes = k;
  e.max_local = 2;
  e.proper_locally = true;
  e.sq_classes = sorted_quads(sq);
  e.span_dim = dim;
  e.spherical = true;
  e.antipodal = false;
  Configuration cfg{PointSet(dim, std::move(coords)), std::move(g), std::nullopt};
  return make("chain_2k", {{"k", std::to_string(k)}}, std::move(cfg), e,
              "x_1 = e_1, y_1 = -e_1, j x_j = e + sqrt(j^2-1) e', j y_j = e - sqrt(j^2-1) e'");
}

CatalogEntry pentagon() {
  // side 1: R^2 = (5 + sqrt5)/10, cos 72 = (sqrt5 - 1)/4, cos 144 = -(sqrt5 + 1)/4
  const Quad r2 = (frac(5) + root(5)) / frac(10);
  const Quad cosines[] = {frac(1), (root(5) - frac(1)) / frac(4), -(root(5) + frac(1)) / frac(4)};
  ExactGram g{2, 5, {}};
  std::vector<double> coords;
  const double rr = std::sqrt(r2.to_double());
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      std::size_t step = (i + 5 - j) % 5;
      g.entries.push_back(r2 * cosines[std::min(step, 5 - step)]);
    }
    const double ang = 2.0 * M_PI * static_cast<double>(i) / 5.0;
    coords.push_back(rr * std::cos(ang));
    coords.push_back(rr * std::sin(ang));
  }
  Expected e;
  e.cardinality = 5;
  e.classes = 2;
  e.max_local = 2;
  e.sq_classes = std::vector<Quad>{frac(1), (frac(3) + root(5)) / frac(2)};
  e.span_dim = 2;
  e.spherical = true;
  e.antipodal = false;
  e.design_strength = 4;
  e.attains = bounds::BoundKind::lp;
  Configuration cfg{PointSet(2, std::move(coords)), std::move(g), std::nullopt};
  return make("pentagon", {}, std::move(cfg), e, "regular pentagon with unit side, distances {1, tau}");
}

CatalogEntry cross_polytope(std::size_t d, std::string name = "cross_polytope") {
  Coords pts;
  for (std::size_t i = 0; i < d; ++i) {
    for (long s : {1L, -1L}) {
      std::vector<Quad> p(d, frac(0));
      p[i] = frac(s);
      pts.push_back(p);
    }
  }
  Expected e;
  e.cardinality = 2 * d;
  e.classes = 2;
  e.max_local = 2;
  e.sq_classes = std::vector<Quad>{frac(2), frac(4)};
  e.span_dim = d;
  e.spherical = true;
  e.antipodal = true;
  e.design_strength = 3;
  e.attains = bounds::BoundKind::positive_coeff_antipodal;
  Params params;
  if (name == "cross_polytope") params["d"] = std::to_string(d);
  return make(std::move(name), params, from_coords(d, std::move(pts)), e, "{+-e_i}");
}

CatalogEntry prism3() {
  const Quad h = root(3) / frac(2);
  Coords pts;
  for (long z : {0L, 1L}) {
    pts.push_back({frac(0), frac(0), frac(z)});
    pts.push_back({frac(1), frac(0), frac(z)});
    pts.push_back({frac(1, 2), h, frac(z)});
  }
  Expected e;
  e.cardinality = 6;
  e.classes = 2;
  e.max_local = 2;
  e.sq_classes = std::vector<Quad>{frac(1), frac(2)};
  e.span_dim = 3;
  e.spherical = true;
  e.antipodal = false;
  return make("prism3", {}, from_coords(3, std::move(pts)), e, "right prism over a unit triangle, square sides");
}

Coords icosahedron_coords() {
  const Quad phi = (frac(1) + root(5)) / frac(2);
  Coords pts;
  for (long s1 : {1L, -1L}) {
    for (long s2 : {1L, -1L}) {
      const Quad a = frac(s1);
      const Quad b = frac(s2) * phi;
      pts.push_back({frac(0), a, b});
      pts.push_back({a, b, frac(0)});
      pts.push_back({b, frac(0), a});
    }
  }
  return pts;
}

CatalogEntry icosahedron() {
  Expected e;
  e.cardinality = 12;
  e.classes = 3;
  e.max_local = 3;
  e.sq_classes = std::vector<Quad>{frac(4), frac(6) + frac(2) * root(5), frac(10) + frac(2) * root(5)};
  e.span_dim = 3;
  e.spherical = true;
  e.antipodal = true;
  e.design_strength = 5;
  e.attains = bounds::BoundKind::positive_coeff_antipodal;
  return make("icosahedron", {}, from_coords(3, icosahedron_coords()), e, "(0, +-1, +-phi) and cyclic shifts");
}

CatalogEntry hexagon() {
  const Quad h = root(3) / frac(2);
  Coords pts{{frac(1), frac(0)},      {frac(1, 2), h},  {frac(-1, 2), h},
             {frac(-1), frac(0)},     {frac(-1, 2), -h}, {frac(1, 2), -h}};
  Expected e;
  e.cardinality = 6;
  e.classes = 3;
  e.max_local = 3;
  e.sq_classes = std::vector<Quad>{frac(1), frac(3), frac(4)};
  e.span_dim = 2;
  e.spherical = true;
  e.antipodal = true;
  e.design_strength = 5;
  e.attains = bounds::BoundKind::positive_coeff_antipodal;
  return make("hexagon", {}, from_coords(2, std::move(pts)), e, "sixth roots of unity");
}

CatalogEntry midpoint_simplex(std::size_t d, std::string name = "midpoint_simplex") {
  // midpoints of a unit simplex: self (d-1)/(2d), shared vertex (d-3)/(4d), disjoint -1/d
  const auto edges = pairs_of(d + 1);
  const long dl = static_cast<long>(d);
  ExactGram g{d, edges.size(), {}};
  for (const auto& [a, b] : edges) {
    for (const auto& [c, f] : edges) {
      int shared = (a == c) + (a == f) + (b == c) + (b == f);
      g.entries.push_back(shared == 2 ? frac(dl - 1, 2 * dl) : shared == 1 ? frac(dl - 3, 4 * dl) : frac(-1, dl));
    }
  }
  Expected e;
  e.cardinality = edges.size();
  // d = 2: three midpoints of a triangle form an equilateral triangle
  e.classes = d == 2 ? 1 : 2;
  e.max_local = e.classes;
  e.sq_classes = d == 2 ? std::vector<Quad>{frac(dl + 1, 2 * dl)}
                        : std::vector<Quad>{frac(dl + 1, 2 * dl), frac(dl + 1, dl)};
  e.span_dim = d;
  e.spherical = true;
  e.antipodal = d == 3;
  if (d >= 7) e.attains = bounds::BoundKind::positive_coeff;
  Params params;
  if (name == "midpoint_simplex") params["d"] = std::to_string(d);
  return make(std::move(name), params, from_gram(std::move(g)), e, "midpoints of the edges of a regular simplex");
}

CatalogEntry clebsch16() {
  Coords pts;
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<Quad> p(5, frac(1));
    p[i] = frac(0);
    pts.push_back(p);
  }
  for (const auto& [i, j] : pairs_of(5)) {
    std::vector<Quad> p(5, frac(0));
    p[i] = p[j] = frac(1);
    pts.push_back(p);
  }
  pts.emplace_back(5, frac(0));
  Expected e;
  e.cardinality = 16;
  e.classes = 2;
  e.max_local = 2;
  e.sq_classes = std::vector<Quad>{frac(2), frac(4)};
  e.span_dim = 5;
  e.spherical = true;
  e.antipodal = false;
  return make("clebsch16", {}, from_coords(5, std::move(pts)), e, "Clebsch graph: sum - e_i, e_i + e_j, origin");
}

CatalogEntry schlafli27() {
  Embedding emb = graph_embed(lines27_graph(), frac(-1, 2), frac(1, 4));
  if (!emb.feasible) throw std::logic_error("27-line Gram matrix is not PSD");
  emb.gram.dim = emb.rank;
  Expected e;
  e.cardinality = 27;
  e.classes = 2;
  e.max_local = 2;
  e.sq_classes = std::vector<Quad>{frac(3, 2), frac(3)};
  e.span_dim = 6;
  e.spherical = true;
  e.antipodal = false;
  Configuration cfg{std::move(*emb.points), std::move(emb.gram), std::nullopt};
  return make("schlafli27", {}, std::move(cfg), e, "Schlaefli graph embedding, inner products {1/4, -1/2}");
}

CatalogEntry d7_29() {
  const Quad c = (frac(3) + root(2)) / frac(7);
  const Quad c0 = (frac(2) + frac(3) * root(2)) / frac(7);
  Coords pts;
  for (std::size_t i = 0; i < 7; ++i) {
    std::vector<Quad> p(7, c);
    p[i] = c - frac(1);
    pts.push_back(p);
  }
  for (const auto& [i, j] : pairs_of(7)) {
    std::vector<Quad> p(7, frac(0));
    p[i] = p[j] = frac(1);
    pts.push_back(p);
  }
  pts.emplace_back(7, c0);
  Expected e;
  e.cardinality = 29;
  e.classes = 2;
  e.max_local = 2;
  e.sq_classes = std::vector<Quad>{frac(2), frac(4)};
  e.span_dim = 7;
  e.spherical = false;
  return make("d7_29", {}, from_coords(7, std::move(pts)), e, "optimal 29-point two-distance set in R^7");
}

CatalogEntry d8_45() {
  Coords x1;
  for (std::size_t i = 0; i < 8; ++i) {
    std::vector<Quad> p(8, frac(-1, 12));
    p[i] = frac(11, 12);
    x1.push_back(p);
  }
  x1.emplace_back(8, frac(-1, 3));
  Coords pts = x1;
  for (const auto& [i, j] : pairs_of(x1.size())) {
    std::vector<Quad> p(8);
    for (std::size_t c = 0; c < 8; ++c) p[c] = -(x1[i][c] + x1[j][c]);
    pts.push_back(p);
  }
  Expected e;
  e.cardinality = 45;
  e.classes = 2;
  e.max_local = 2;
  e.sq_classes = std::vector<Quad>{frac(2), frac(4)};
  e.span_dim = 8;
  e.spherical = false;
  return make("d8_45", {}, from_coords(8, std::move(pts)), e, "regular simplex X_1 with X_2 = {-(x+y)}");
}

CatalogEntry figure1() {
  const Quad h = root(3) / frac(2);
  const Quad half = frac(1, 2);
  Coords pts{{frac(0), frac(0)}, {frac(1), frac(0)}, {frac(1), frac(1)}, {frac(0), frac(1)},
             {half, -h},         {frac(1) + h, half}, {half, frac(1) + h}, {-h, half}};
  Expected e;
  e.cardinality = 8;
  e.classes = 4;
  e.max_local = 3;
  e.proper_locally = true;
  e.total_local = 24;
  e.sq_classes = std::vector<Quad>{frac(1), frac(2), frac(2) + root(3), frac(4) + frac(2) * root(3)};
  e.span_dim = 2;
  e.spherical = false;
  return make("figure1", {}, from_coords(2, std::move(pts)), e,
              "unit square with outward equilateral apexes on each side");
}

struct Builder {
  std::string params;
  std::string description;
  std::function<CatalogEntry(const Params&)> build;
};

const std::map<std::string, Builder>& registry() {
  static const std::map<std::string, Builder> reg = {
      {"regular_simplex",
       {"d (1..64)", "unit regular simplex U_d",
        [](const Params& p) { return regular_simplex(static_cast<std::size_t>(param_int(p, "d", 1, 64))); }}},
      {"simplex_plus_ray",
       {"d (2..64), s (rational)", "U_d plus y = s x_0 on a vertex-centre line",
        [](const Params& p) {
          auto d = static_cast<std::size_t>(param_int(p, "d", 2, 64));
          auto it = p.find("s");
          if (it == p.end()) throw std::invalid_argument("missing parameter 's'");
          return simplex_plus_ray(d, parse_rational(it->second));
        }}},
      {"chain_2k",
       {"k (3..32)", "2(k-1) points in R^{2k-3}, k-distance and locally two-distance",
        [](const Params& p) { return chain_2k(static_cast<std::size_t>(param_int(p, "k", 3, 32))); }}},
      {"pentagon", {"", "regular pentagon R_5", [](const Params&) { return pentagon(); }}},
      {"octahedron", {"", "regular octahedron", [](const Params&) { return cross_polytope(3, "octahedron"); }}},
      {"prism3", {"", "triangular prism with square sides", [](const Params&) { return prism3(); }}},
      {"icosahedron", {"", "regular icosahedron", [](const Params&) { return icosahedron(); }}},
      {"hexagon", {"", "regular hexagon", [](const Params&) { return hexagon(); }}},
      {"midpoint_simplex",
       {"d (2..40)", "edge midpoints of a regular simplex",
        [](const Params& p) { return midpoint_simplex(static_cast<std::size_t>(param_int(p, "d", 2, 40))); }}},
      {"petersen10", {"", "edge midpoints of the 4-simplex (Petersen graph)",
                      [](const Params&) { return midpoint_simplex(4, "petersen10"); }}},
      {"clebsch16", {"", "16 points in R^5 from the Clebsch graph", [](const Params&) { return clebsch16(); }}},
      {"schlafli27", {"", "27 points in R^6 from the Schlaefli graph", [](const Params&) { return schlafli27(); }}},
      {"d7_29", {"", "29-point two-distance set in R^7", [](const Params&) { return d7_29(); }}},
      {"d8_45", {"", "45-point two-distance set in R^8", [](const Params&) { return d8_45(); }}},
      {"cross_polytope",
       {"d (1..64)", "{+-e_i}",
        [](const Params& p) { return cross_polytope(static_cast<std::size_t>(param_int(p, "d", 1, 64))); }}},
      {"figure1", {"", "square with four equilateral apexes", [](const Params&) { return figure1(); }}},
  };
  return reg;
}

std::string join_quads(const std::vector<Quad>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "}";
}

void check(Verification& v, std::string field, const std::string& expected, const std::string& observed) {
  v.checks.push_back(FieldCheck{std::move(field), expected, observed, expected == observed});
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

// ---- graphs ----------------------------------------------------------------

GraphSpec GraphSpec::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  GraphSpec g{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  for (const auto& [i, j] : edges) {
    if (i >= n || j >= n) throw std::invalid_argument("edge endpoint out of range");
    if (i == j) throw std::invalid_argument("loop at vertex " + std::to_string(i));
    g.adjacency[i][j] = g.adjacency[j][i] = true;
  }
  return g;
}

std::size_t GraphSpec::degree(std::size_t i) const {
  return static_cast<std::size_t>(std::count(adjacency[i].begin(), adjacency[i].end(), true));
}

void GraphSpec::validate() const {
  if (adjacency.size() != n) throw std::invalid_argument("adjacency has wrong row count");
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency[i].size() != n) throw std::invalid_argument("adjacency row " + std::to_string(i) + " has wrong length");
    if (adjacency[i][i]) throw std::invalid_argument("loop at vertex " + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j) {
      if (adjacency[i][j] != adjacency[j][i]) {
        throw std::invalid_argument("asymmetric adjacency at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
}

GraphSpec complete_graph(std::size_t n) { return GraphSpec::from_edges(n, pairs_of(n)); }

GraphSpec kneser2_graph(std::size_t m) {
  const auto verts = pairs_of(m);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const auto& [a, b] = verts[i];
      const auto& [c, d] = verts[j];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
    }
  }
  return GraphSpec::from_edges(verts.size(), edges);
}

GraphSpec clebsch_graph() {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = i + 1; j < 16; ++j) {
      int h = __builtin_popcount(static_cast<unsigned>(i ^ j));
      if (h == 1 || h == 4) edges.emplace_back(i, j);
    }
  }
  return GraphSpec::from_edges(16, edges);
}

GraphSpec lines27_graph() {
  // a_i (0..5), b_i (6..11), c_ij (12..26)
  const auto cs = pairs_of(6);
  auto c_index = [&](std::size_t k) { return 12 + k; };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      if (i != j) edges.emplace_back(i, 6 + j);
    }
  }
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const auto& [p, q] = cs[k];
    for (std::size_t i = 0; i < 6; ++i) {
      if (i == p || i == q) {
        edges.emplace_back(i, c_index(k));
        edges.emplace_back(6 + i, c_index(k));
      }
    }
    for (std::size_t l = k + 1; l < cs.size(); ++l) {
      const auto& [r, s] = cs[l];
      if (p != r && p != s && q != r && q != s) edges.emplace_back(c_index(k), c_index(l));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return GraphSpec::from_edges(27, edges);
}

// ---- catalog ---------------------------------------------------------------

std::string CatalogEntry::label() const {
  if (params.empty()) return name;
  std::string s = name + "(";
  bool first = true;
  for (const auto& [k, v] : params) {
    s += (first ? "" : ",") + k + "=" + v;
    first = false;
  }
  return s + ")";
}

bool Verification::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const FieldCheck& c) { return c.ok; });
}

std::vector<CatalogInfo> list() {
  std::vector<CatalogInfo> out;
  for (const auto& [name, b] : registry()) out.push_back(CatalogInfo{name, b.params, b.description});
  return out;
}

CatalogEntry construct(const std::string& name, const Params& params) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown catalog entry '" + name + "'");
  // accepted names are the leading words of the "d (2..64), s (rational)" description
  std::set<std::string> accepted;
  std::stringstream names(it->second.params);
  for (std::string piece; std::getline(names, piece, ',');) {
    std::stringstream words(piece);
    std::string w;
    if (words >> w) accepted.insert(w);
  }
  for (const auto& [key, value] : params) {
    if (accepted.count(key) == 0) throw std::invalid_argument(name + ": unknown parameter '" + key + "'");
  }
  return it->second.build(params);
}

Verification verify(const CatalogEntry& entry) {
  Verification v;
  v.label = entry.label();
  const Expected& e = entry.expected;
  const Configuration& cfg = entry.config;
  v.exact = cfg.exact.has_value();
  check(v, "cardinality", std::to_string(e.cardinality), std::to_string(cfg.points.size()));
  check(v, "span_dim", std::to_string(e.span_dim), std::to_string(span_dim(cfg.points)));

  std::vector<Quad> observed_sq;
  std::size_t classes = 0;
  std::size_t max_local = 0;
  std::size_t total_local = 0;
  bool k_distance_proper = false;
  if (v.exact) {
    auto prof = distance_profile(*cfg.exact);
    observed_sq = prof.classes;
    classes = prof.class_count();
    max_local = prof.max_local();
    total_local = prof.total_local();
    k_distance_proper = prof.is_proper_locally_k(max_local);
  } else {
    auto prof = distance_profile(cfg.points);
    classes = prof.class_count();
    max_local = prof.max_local();
    total_local = prof.total_local();
    k_distance_proper = prof.is_proper_locally_k(max_local);
  }
  check(v, "classes", std::to_string(e.classes), std::to_string(classes));
  check(v, "max_local", std::to_string(e.max_local), std::to_string(max_local));
  if (e.proper_locally) check(v, "proper_locally", yes_no(*e.proper_locally), yes_no(k_distance_proper));
  if (e.total_local) check(v, "total_local", std::to_string(*e.total_local), std::to_string(total_local));
  if (e.sq_classes && v.exact) check(v, "sq_classes", join_quads(*e.sq_classes), join_quads(observed_sq));

  std::optional<NormalizedGram<Quad>> norm;
  if (v.exact) {
    try {
      norm = center_and_normalize(*cfg.exact);
    } catch (const GeometryError&) {
    }
  }
  const bool spherical = v.exact ? norm.has_value() : is_concyclic(cfg.points);
  check(v, "spherical", yes_no(e.spherical), yes_no(spherical));
  if (!spherical || !norm) return v;

  Gram<Quad>& unit = norm->gram;
  unit.dim = e.span_dim;
  if (e.antipodal) check(v, "antipodal", yes_no(*e.antipodal), yes_no(is_antipodal(unit).antipodal));
  if (e.design_strength) {
    auto w = designs::uniform_weights<Quad>(unit.n);
    auto rep = designs::moment_sums<Quad>(unit, w, *e.design_strength + 1);
    check(v, "design_strength", std::to_string(*e.design_strength), std::to_string(rep.strength));
  }
  if (e.attains) {
    auto inner = inner_spectrum(unit).classes;
    bounds::BoundCertificate cert;
    switch (*e.attains) {
      case bounds::BoundKind::lp: cert = bounds::lp_bound(inner, unit.dim); break;
      case bounds::BoundKind::positive_coeff: cert = bounds::positive_coeff_bound(inner, unit.dim); break;
      case bounds::BoundKind::positive_coeff_antipodal:
        cert = bounds::positive_coeff_bound_antipodal(inner, unit.dim, inner.size());
        break;
      default: throw std::logic_error("unsupported bound kind in catalog expectation");
    }
    check(v, "attains_" + bounds::to_string(*e.attains), std::to_string(e.cardinality),
          cert.applicable ? cert.floor.get_str() : "not applicable");
  }
  return v;
}

std::vector<CatalogEntry> standard_suite() {
  std::vector<CatalogEntry> out;
  for (const char* name : {"pentagon", "octahedron", "prism3", "icosahedron", "hexagon", "petersen10", "clebsch16",
                           "schlafli27", "d7_29", "d8_45", "figure1"}) {
    out.push_back(construct(name));
  }
  for (std::size_t d = 2; d <= 12; ++d) out.push_back(construct("midpoint_simplex", {{"d", std::to_string(d)}}));
  for (std::size_t k = 3; k <= 8; ++k) out.push_back(construct("chain_2k", {{"k", std::to_string(k)}}));
  for (std::size_t d = 2; d <= 10; ++d) out.push_back(construct("cross_polytope", {{"d", std::to_string(d)}}));
  for (std::size_t d = 2; d <= 6; ++d) out.push_back(construct("regular_simplex", {{"d", std::to_string(d)}}));
  out.push_back(construct("simplex_plus_ray", {{"d", "3"}, {"s", "2"}}));
  return out;
}

SubsetFamily icosahedron_subsets() {
  const ExactGram g = gram_of(3, icosahedron_coords());
  SubsetFamily fam;
  std::set<std::string> seen;
  std::vector<std::size_t> idx(6);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == 6) {
      auto prof = distance_profile(g.subset(idx));
      if (prof.class_count() != 2) return;
      ++fam.two_distance_subsets;
      // signature: classes, multiplicities and the sorted per-point class-degree vectors
      std::vector<std::string> rows;
      for (std::size_t i = 0; i < 6; ++i) {
        std::vector<std::size_t> cnt(prof.class_count(), 0);
        for (std::size_t j = 0; j < 6; ++j) {
          if (i != j) ++cnt[prof.class_of(i, j)];
        }
        std::ostringstream r;
        for (std::size_t c : cnt) r << c << ".";
        rows.push_back(r.str());
      }
      std::sort(rows.begin(), rows.end());
      std::ostringstream sig;
      for (const Quad& c : prof.classes) sig << c.str(true) << ";";
      sig << "|";
      for (std::size_t m : prof.multiplicities) sig << m << ";";
      sig << "|";
      for (const auto& r : rows) sig << r << " ";
      if (seen.insert(sig.str()).second) {
        fam.representatives.push_back(idx);
        fam.signatures.push_back(sig.str());
      }
      return;
    }
    for (std::size_t i = start; i < 12; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return fam;
}

std::vector<double> simplex_plus_ray_exceptions(std::size_t d, double extent, double step) {
  if (d < 2) throw std::invalid_argument("simplex_plus_ray needs d >= 2");
  if (!(step > 0.0) || !(extent > 0.0)) throw std::invalid_argument("extent and step must be positive");
  const double dd = static_cast<double>(d);
  const double edge = 2.0 + 2.0 / dd;
  // class coincidences plus y hitting x_0
  const std::function<double(double)> eqs[] = {
      [&](double s) { return (1 - s) * (1 - s) - edge; },
      [&](double s) { return 1 + s * s + 2 * s / dd - edge; },
      [&](double s) { return (1 - s) * (1 - s) - (1 + s * s + 2 * s / dd); },
      [](double s) { return 1 - s; },
  };
  std::vector<double> roots;
  const auto steps = static_cast<long>(std::ceil(2 * extent / step));
  for (const auto& f : eqs) {
    for (long i = 0; i < steps; ++i) {
      double lo = -extent + static_cast<double>(i) * step;
      double hi = lo + step;
      double flo = f(lo);
      double fhi = f(hi);
      if (flo == 0.0) {
        roots.push_back(lo);
        continue;
      }
      if ((flo < 0) == (fhi < 0) || fhi == 0.0) continue;
      for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        double mid = 0.5 * (lo + hi);
        if ((f(mid) < 0) == (flo < 0)) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double r : roots) {
    if (out.empty() || std::fabs(r - out.back()) > 1e-9) out.push_back(r);
  }
  return out;
}

}  // namespace distkit::catalog
