#include "distkit/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "distkit/geometry.hpp"
#include "distkit/kernels.hpp"
#include "distkit/tables.hpp"
#include "distkit/bounds.hpp"

namespace distkit::search {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Distances from point i to all others, sorted, in a fixed-size buffer.
template <std::size_t N, class Dist>
std::array<double, N - 1> sorted_row(std::size_t i, Dist&& dist) {
  std::array<double, N - 1> row{};
  std::size_t k = 0;
  for (std::size_t j = 0; j < N; ++j) {
    if (j != i) row[k++] = dist(i, j);
  }
  std::sort(row.begin(), row.end());
  return row;
}

template <std::size_t M>
std::size_t distinct_count(const std::array<double, M>& row, double abs_tol) {
  std::size_t c = 1;
  for (std::size_t k = 1; k < M; ++k) c += row[k] - row[k - 1] > abs_tol;
  return c;
}

// Smallest achievable max-spread when splitting a sorted row into two runs.
template <std::size_t M>
double two_cluster_spread(const std::array<double, M>& row) {
  double best = row[M - 1] - row[0];
  for (std::size_t k = 1; k < M; ++k) best = std::min(best, std::max(row[k - 1] - row[0], row[M - 1] - row[k]));
  return best;
}

struct CellScore {
  std::size_t max_local = 0;
  double violation = 0.0;
};

// Lexicographic key: count first, violation second.
double encode(const CellScore& s) { return static_cast<double>(s.max_local) + s.violation / (1.0 + s.violation); }

CellScore decode(double key) {
  double c = std::floor(key);
  double f = key - c;
  return CellScore{static_cast<std::size_t>(c), f >= 1.0 ? std::numeric_limits<double>::infinity() : f / (1.0 - f)};
}

template <class F>
kernels::GridMin run_grid(bool parallel, std::size_t nx, std::size_t ny, F&& f) {
  return parallel ? kernels::parallel::grid_min(nx, ny, f) : kernels::serial::grid_min(nx, ny, f);
}

CellScore line_score(const std::array<double, 4>& xs, double merge_tol, double min_sep) {
  double minpair = std::numeric_limits<double>::infinity();
  double maxpair = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      double d = std::fabs(xs[i] - xs[j]);
      minpair = std::min(minpair, d);
      maxpair = std::max(maxpair, d);
    }
  }
  if (minpair < min_sep) return CellScore{0, kNaN};
  CellScore s;
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    auto row = sorted_row<4>(i, [&](std::size_t a, std::size_t b) { return std::fabs(xs[a] - xs[b]); });
    s.max_local = std::max(s.max_local, distinct_count(row, merge_tol * maxpair));
    worst = std::max(worst, std::min(row[1] - row[0], row[2] - row[1]));
  }
  s.violation = worst / minpair;
  return s;
}

CellScore planar_score(const std::array<std::array<double, 2>, 5>& pts, double merge_tol, double min_sep) {
  double dist[5][5];
  double minpair = std::numeric_limits<double>::infinity();
  double maxpair = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    dist[i][i] = 0.0;
    for (std::size_t j = i + 1; j < 5; ++j) {
      double d = std::hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]);
      dist[i][j] = dist[j][i] = d;
      minpair = std::min(minpair, d);
      maxpair = std::max(maxpair, d);
    }
  }
  if (minpair < min_sep) return CellScore{0, kNaN};
  CellScore s;
  double worst = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    auto row = sorted_row<5>(i, [&](std::size_t a, std::size_t b) { return dist[a][b]; });
    s.max_local = std::max(s.max_local, distinct_count(row, merge_tol * maxpair));
    worst = std::max(worst, two_cluster_spread(row));
  }
  s.violation = worst / minpair;
  return s;
}

std::array<std::array<double, 2>, 5> midpoint_family(double p, double q) {
  return {{{1.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0}, {p, q}, {-p, -q}}};
}

std::size_t grid_points(double lo, double hi, double step) {
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

void validate(const SearchConfig& c) {
  if (!(c.extent > 0.0) || !(c.step > 0.0) || c.step >= c.extent) {
    throw std::invalid_argument("search needs 0 < step < extent");
  }
  if (!(c.merge_tol > 0.0) || c.merge_tol >= 0.1) throw std::invalid_argument("merge tolerance must be in (0, 0.1)");
}

std::string verdict_for(double best, double margin) {
  return best > margin ? "supports-nonexistence" : "inconclusive";
}

std::string fmt(double v) { return format_double(v); }

}  // namespace

std::size_t line_max_local(const std::vector<double>& xs, double merge_tol) {
  if (xs.size() != 4) throw std::invalid_argument("line checks take four points");
  return line_score({xs[0], xs[1], xs[2], xs[3]}, merge_tol, 0.0).max_local;
}

double line_violation(const std::vector<double>& xs) {
  if (xs.size() != 4) throw std::invalid_argument("line checks take four points");
  return line_score({xs[0], xs[1], xs[2], xs[3]}, 1e-6, 0.0).violation;
}

double planar_violation(const std::vector<std::array<double, 2>>& pts) {
  if (pts.size() != 5) throw std::invalid_argument("planar checks take five points");
  return planar_score({pts[0], pts[1], pts[2], pts[3], pts[4]}, 1e-6, 0.0).violation;
}

SearchReport refute_line4(const SearchConfig& config) {
  validate(config);
  SearchReport r;
  r.claim = "line4";
  r.space = "x1 = 0, x2 = 1, (x3, x4) in [-L, L]^2";
  r.extent = config.extent;
  r.step = config.step;
  r.merge_tol = config.merge_tol;
  r.margin = 10.0 * config.merge_tol;
  const double lo = -config.extent;
  const std::size_t n = grid_points(lo, config.extent, config.step);
  const double sep = 0.5 * config.step;
  auto cell = [&](std::size_t i, std::size_t j) {
    CellScore s = line_score({0.0, 1.0, lo + static_cast<double>(i) * config.step,
                              lo + static_cast<double>(j) * config.step},
                             config.merge_tol, sep);
    return s.violation != s.violation ? kNaN : encode(s);
  };
  kernels::GridMin g = run_grid(config.parallel, n, n, cell);
  CellScore best = decode(g.value);
  r.cells = g.evaluated;
  r.min_local = best.max_local;
  r.best_score = best.violation;
  r.best_params = {lo + static_cast<double>(g.ix) * config.step, lo + static_cast<double>(g.iy) * config.step};
  r.verdict = verdict_for(r.best_score, r.margin);

  std::size_t ap = line_max_local({0, 1, 2, 3}, config.merge_tol);
  r.sub_checks.push_back({"arithmetic progression {0,1,2,3}", ap == 3, "max_x |A(x)| = " + std::to_string(ap)});
  const std::size_t m = grid_points(lo, config.extent, config.step);
  kernels::GridMin shift = run_grid(config.parallel, m, 1, [&](std::size_t i, std::size_t) {
    double x = lo + static_cast<double>(i) * config.step;
    CellScore s = line_score({0.0, 1.0, x, x + 1.0}, config.merge_tol, sep);
    return s.violation != s.violation ? kNaN : encode(s);
  });
  CellScore sb = decode(shift.value);
  r.sub_checks.push_back({"family {0,1,x,x+1}", sb.max_local >= 3 && sb.violation > r.margin,
                          "min max_x |A(x)| = " + std::to_string(sb.max_local) + ", min violation " +
                              fmt(sb.violation)});
  return r;
}

SearchReport refute_midpoint5(const SearchConfig& config) {
  validate(config);
  SearchReport r;
  r.claim = "midpoint5";
  r.space = "y = (+-1, 0), x3 = 0, x1 = -x2 = (p, q), p in [-L, L], q in (0, L]";
  r.extent = config.extent;
  r.step = config.step;
  r.merge_tol = config.merge_tol;
  r.margin = 10.0 * config.merge_tol;
  const double lo = -config.extent;
  const std::size_t nx = grid_points(lo, config.extent, config.step);
  const std::size_t ny = grid_points(config.step, config.extent, config.step);
  const double sep = 0.5 * config.step;
  auto cell = [&](std::size_t i, std::size_t j) {
    double p = lo + static_cast<double>(i) * config.step;
    double q = config.step * static_cast<double>(j + 1);
    CellScore s = planar_score(midpoint_family(p, q), config.merge_tol, sep);
    return s.violation != s.violation ? kNaN : encode(s);
  };
  kernels::GridMin g = run_grid(config.parallel, nx, ny, cell);
  CellScore best = decode(g.value);
  r.cells = g.evaluated;
  r.min_local = best.max_local;
  r.best_score = best.violation;
  r.best_params = {lo + static_cast<double>(g.ix) * config.step, config.step * static_cast<double>(g.iy + 1)};
  r.verdict = verdict_for(r.best_score, r.margin);

  // collinear: q = 0, the outermost point sees at least three distances
  kernels::GridMin col = run_grid(config.parallel, nx, 1, [&](std::size_t i, std::size_t) {
    CellScore s = planar_score(midpoint_family(lo + static_cast<double>(i) * config.step, 0.0), config.merge_tol, sep);
    return s.violation != s.violation ? kNaN : encode(s);
  });
  CellScore cb = decode(col.value);
  r.sub_checks.push_back({"collinear sub-case", cb.max_local >= 3 && cb.violation > r.margin,
                          "min max_x |A(x)| = " + std::to_string(cb.max_local) + ", min violation " + fmt(cb.violation)});

  // rectangle: |x1| = |y1|, so gamma = d(x1, x3) coincides with beta = d(y1, x3)
  double worst_gap = 0.0;
  double rect_min = std::numeric_limits<double>::infinity();
  const std::size_t steps = 3600;
  for (std::size_t k = 1; k < steps; ++k) {
    double th = M_PI * static_cast<double>(k) / static_cast<double>(steps);
    auto pts = midpoint_family(std::cos(th), std::sin(th));
    double gamma = std::hypot(pts[3][0], pts[3][1]);
    worst_gap = std::max(worst_gap, std::fabs(gamma - 1.0));
    CellScore s = planar_score(pts, config.merge_tol, sep);
    if (s.violation == s.violation) rect_min = std::min(rect_min, s.violation);
  }
  r.sub_checks.push_back({"rectangle sub-case", worst_gap < 1e-12 && rect_min > r.margin,
                          "gamma = beta throughout (max gap " + fmt(worst_gap) + "), min violation " + fmt(rect_min)});
  return r;
}

SearchReport verify_decomposition(const PointSet& points) {
  SearchReport r;
  r.claim = "decomposition";
  r.space = "saturated subsets of the input";
  auto prof = distance_profile(points);
  r.min_local = prof.max_local();
  if (!prof.is_proper_locally_k(2)) {
    if (prof.max_local() > 2) throw GeometryError("profile too rich: the input is not locally two-distance");
    r.verdict = "vacuous (not proper)";
    return r;
  }
  const std::size_t d = span_dim(points);
  const auto ds_star = tables::known_tables("DSstar2");
  const auto lds = tables::known_tables("LDS2");
  bool all = true;
  for (const auto& dec : saturated_subsets(points)) {
    DecompositionCheck c;
    c.subset = dec.subset;
    c.subset_dim = dec.subset_dim;
    c.remainder_size = dec.remainder.size();
    c.remainder_dim = dec.remainder_dim;
    c.dimension_ok = dec.complement_bound_holds;
    c.locus_ok = dec.remainder_in_locus;
    const std::size_t i = dec.subset_dim;
    if (auto e = ds_star.lookup(i)) {
      c.ds_star = e->hi;
    } else {
      c.ds_star = static_cast<int>(bounds::fisher(std::max<std::size_t>(i, 1), 2));
    }
    const std::size_t j = d >= i ? d - i : 0;
    if (j == 0) {
      c.lds = 1;
    } else if (auto e = lds.lookup(j)) {
      c.lds = e->hi;
    } else {
      c.lds = static_cast<int>((j + 2) * (j + 1) / 2);
    }
    c.cardinality_ok = dec.subset.size() <= static_cast<std::size_t>(c.ds_star) &&
                       dec.remainder.size() <= static_cast<std::size_t>(c.lds) &&
                       points.size() <= static_cast<std::size_t>(c.ds_star + c.lds);
    all = all && c.dimension_ok && c.locus_ok && c.cardinality_ok;
    r.decompositions.push_back(std::move(c));
  }
  r.verdict = all ? "consistent" : "violation";
  return r;
}

}  // namespace distkit::search
