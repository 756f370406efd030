#include "distkit/geometry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "distkit/kernels.hpp"

namespace distkit {

namespace {

// Singular values below kRankTol * sigma_max count as zero.
constexpr double kRankTol = 1e-8;
// Relative residual accepted when deciding that a linear system is consistent.
constexpr double kConsistencyTol = 1e-7;

template <class T>
struct Clustering {
  std::vector<T> reps;
  std::vector<std::size_t> ids;
};

// Deterministic class merge: stable sort, then one sweep.  Floating values
// merge when the gap to the previous value is <= threshold; exact values merge
// only when equal.
template <class T>
Clustering<T> cluster(const std::vector<T>& values, double threshold) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  Clustering<T> out;
  out.ids.assign(values.size(), 0);
  std::vector<std::size_t> counts;
  std::vector<double> sums;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const T& v = values[order[k]];
    bool fresh = k == 0;
    if (!fresh) {
      const T& prev = values[order[k - 1]];
      if constexpr (ScalarTraits<T>::exact) {
        fresh = !(v == prev);
      } else {
        fresh = v - prev > threshold;
      }
    }
    if (fresh) {
      out.reps.push_back(v);
      counts.push_back(0);
      sums.push_back(0.0);
    }
    out.ids[order[k]] = out.reps.size() - 1;
    ++counts.back();
    if constexpr (!ScalarTraits<T>::exact) sums.back() += v;
  }
  if constexpr (!ScalarTraits<T>::exact) {
    for (std::size_t c = 0; c < out.reps.size(); ++c) out.reps[c] = sums[c] / static_cast<double>(counts[c]);
  }
  return out;
}

template <class T>
DistanceProfile<T> build_profile(std::size_t n, const std::vector<T>& sq, double threshold) {
  Clustering<T> cl = cluster(sq, threshold);
  DistanceProfile<T> prof;
  prof.n = n;
  prof.classes = std::move(cl.reps);
  prof.pair_class = std::move(cl.ids);
  prof.multiplicities.assign(prof.classes.size(), 0);
  prof.per_point.assign(n, {});
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      std::size_t c = prof.pair_class[p];
      ++prof.multiplicities[c];
      prof.per_point[i].push_back(c);
      prof.per_point[j].push_back(c);
    }
  }
  for (auto& s : prof.per_point) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return prof;
}

void require_pairs(std::size_t n) {
  if (n < 2) throw GeometryError("degenerate: a distance profile needs at least two points");
}

template <class T>
InnerSpectrum<T> build_spectrum(const Gram<T>& g, double threshold) {
  std::vector<T> values;
  values.reserve(g.n * (g.n - 1) / 2);
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i + 1; j < g.n; ++j) values.push_back(g.at(i, j));
  }
  Clustering<T> cl = cluster(values, threshold);
  InnerSpectrum<T> sp;
  sp.classes = std::move(cl.reps);
  sp.per_point.assign(g.n, {});
  std::size_t p = 0;
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i + 1; j < g.n; ++j, ++p) {
      sp.per_point[i].push_back(cl.ids[p]);
      sp.per_point[j].push_back(cl.ids[p]);
    }
  }
  for (auto& s : sp.per_point) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return sp;
}

Eigen::MatrixXd as_matrix(const PointSet& points) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(points.dim()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto p = points.point(i);
    for (std::size_t k = 0; k < points.dim(); ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = p[k];
    }
  }
  return m;
}

std::size_t numeric_rank(const Eigen::JacobiSVD<Eigen::MatrixXd>& svd) {
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > kRankTol * sv(0)) ++r;
  }
  return r;
}

// Solves A x = b allowing singular A; free variables are set to zero.
// Floating mode pivots on the largest entry and treats |v| <= zero_tol as 0.
template <class T>
std::optional<std::vector<T>> solve_any(std::vector<std::vector<T>> a, std::vector<T> b, double zero_tol) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  auto is_zero = [&](const T& v) {
    if constexpr (ScalarTraits<T>::exact) {
      return v.is_zero();
    } else {
      return std::fabs(v) <= zero_tol;
    }
  };
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (is_zero(a[i][c])) continue;
      if constexpr (ScalarTraits<T>::exact) {
        best = i;
        break;
      } else {
        if (best == rows || std::fabs(a[i][c]) > std::fabs(a[best][c])) best = i;
      }
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    std::swap(b[r], b[best]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      T f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!is_zero(b[i])) return std::nullopt;
  }
  std::vector<T> x(cols, T(0L));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
  return x;
}

template <class T>
std::optional<NormalizedGram<T>> normalize_gram(const Gram<T>& g, double zero_tol) {
  // unknowns lambda_1..lambda_n, mu:  2 (G lambda)_j + mu = G_jj,  sum lambda = 1
  const std::size_t n = g.n;
  std::vector<std::vector<T>> a(n + 1, std::vector<T>(n + 1, T(0L)));
  std::vector<T> b(n + 1, T(0L));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) a[j][i] = g.at(j, i) + g.at(j, i);
    a[j][n] = T(1L);
    b[j] = g.at(j, j);
  }
  for (std::size_t i = 0; i < n; ++i) a[n][i] = T(1L);
  b[n] = T(1L);
  auto sol = solve_any(a, b, zero_tol);
  if (!sol) return std::nullopt;
  std::vector<T> glam(n, T(0L));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) glam[i] += g.at(i, k) * (*sol)[k];
  }
  T quad(0L);
  for (std::size_t i = 0; i < n; ++i) quad += (*sol)[i] * glam[i];
  NormalizedGram<T> out;
  out.radius_sq = (*sol)[n] + quad;
  if constexpr (ScalarTraits<T>::exact) {
    if (out.radius_sq.sign() <= 0) return std::nullopt;
  } else {
    if (!(out.radius_sq > zero_tol)) return std::nullopt;
  }
  out.gram = Gram<T>{g.dim, n, std::vector<T>(n * n, T(0L))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.gram.at(i, j) = (g.at(i, j) - glam[i] - glam[j] + quad) / out.radius_sq;
    }
  }
  // verify: every centred squared norm is exactly (or nearly) 1
  for (std::size_t i = 0; i < n; ++i) {
    if constexpr (ScalarTraits<T>::exact) {
      if (!(out.gram.at(i, i) == T(1L))) return std::nullopt;
    } else {
      if (std::fabs(out.gram.at(i, i) - 1.0) > kConsistencyTol) return std::nullopt;
    }
  }
  return out;
}

}  // namespace

template <class T>
std::size_t DistanceProfile<T>::max_local() const {
  std::size_t m = 0;
  for (const auto& s : per_point) m = std::max(m, s.size());
  return m;
}

template <class T>
std::size_t DistanceProfile<T>::total_local() const {
  std::size_t t = 0;
  for (const auto& s : per_point) t += s.size();
  return t;
}

template <class T>
std::size_t DistanceProfile<T>::class_of(std::size_t i, std::size_t j) const {
  if (i == j) throw std::invalid_argument("class_of needs distinct points");
  if (i > j) std::swap(i, j);
  return pair_class[i * (2 * n - i - 1) / 2 + (j - i - 1)];
}

template struct DistanceProfile<double>;
template struct DistanceProfile<Quad>;

DistanceProfile<double> distance_profile(const PointSet& points) {
  require_pairs(points.size());
  std::vector<double> sq = kernels::parallel::pairwise_sq_distances(points);
  double top = *std::max_element(sq.begin(), sq.end());
  double threshold = points.tol() * top;
  if (top <= 0.0 || *std::min_element(sq.begin(), sq.end()) <= threshold) {
    throw GeometryError("not a proper point set: two points coincide");
  }
  return build_profile(points.size(), sq, threshold);
}

DistanceProfile<double> distance_profile(const Gram<double>& gram, double tol) {
  require_pairs(gram.n);
  std::vector<double> sq;
  for (std::size_t i = 0; i < gram.n; ++i) {
    for (std::size_t j = i + 1; j < gram.n; ++j) sq.push_back(gram.sq_distance(i, j));
  }
  double top = *std::max_element(sq.begin(), sq.end());
  double threshold = tol * top;
  if (top <= 0.0 || *std::min_element(sq.begin(), sq.end()) <= threshold) {
    throw GeometryError("not a proper point set: two points coincide");
  }
  return build_profile(gram.n, sq, threshold);
}

DistanceProfile<Quad> distance_profile(const ExactGram& gram) {
  require_pairs(gram.n);
  std::vector<Quad> sq;
  for (std::size_t i = 0; i < gram.n; ++i) {
    for (std::size_t j = i + 1; j < gram.n; ++j) {
      sq.push_back(gram.sq_distance(i, j));
      if (sq.back().sign() <= 0) throw GeometryError("not a proper point set: two points coincide");
    }
  }
  return build_profile(gram.n, sq, 0.0);
}

std::vector<std::vector<double>> naive_per_point_distances(const PointSet& points) {
  const std::size_t n = points.size();
  double top = 0.0;
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto a = points.point(i);
      auto b = points.point(j);
      double s = 0.0;
      for (std::size_t k = 0; k < points.dim(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
      d[i][j] = s;
      top = std::max(top, s);
    }
  }
  std::vector<std::vector<double>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      bool seen = false;
      for (double v : out[i]) seen = seen || std::fabs(v - d[i][j]) <= points.tol() * top;
      if (!seen) out[i].push_back(d[i][j]);
    }
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

bool on_unit_sphere(const Gram<double>& gram, double tol) {
  for (std::size_t i = 0; i < gram.n; ++i) {
    if (std::fabs(gram.at(i, i) - 1.0) > tol) return false;
  }
  return true;
}

bool on_unit_sphere(const ExactGram& gram) {
  for (std::size_t i = 0; i < gram.n; ++i) {
    if (!(gram.at(i, i) == Quad(1L))) return false;
  }
  return true;
}

InnerSpectrum<double> inner_spectrum(const Gram<double>& gram, double tol) {
  require_pairs(gram.n);
  if (!on_unit_sphere(gram, tol)) throw GeometryError("not spherical: points are not unit vectors");
  return build_spectrum(gram, tol);
}

InnerSpectrum<double> inner_spectrum(const PointSet& points) {
  return inner_spectrum(gram_of(points), points.tol());
}

InnerSpectrum<Quad> inner_spectrum(const ExactGram& gram) {
  require_pairs(gram.n);
  if (!on_unit_sphere(gram)) throw GeometryError("not spherical: points are not unit vectors");
  return build_spectrum(gram, 0.0);
}

namespace {

template <class T, class Near>
AntipodalPairing pair_up(std::size_t n, Near near) {
  AntipodalPairing out;
  out.partner.assign(n, AntipodalPairing::npos);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && near(i, j)) {
        out.partner[i] = j;
        break;
      }
    }
  }
  out.antipodal = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t p = out.partner[i];
    if (p == AntipodalPairing::npos || out.partner[p] != i) {
      out.antipodal = false;
      continue;
    }
    if (i < p) out.half.push_back(i);
  }
  if (!out.antipodal) out.half.clear();
  return out;
}

}  // namespace

AntipodalPairing is_antipodal(const Gram<double>& gram, double tol) {
  double top = 0.0;
  double low = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < gram.n; ++i) {
    top = std::max(top, gram.at(i, i));
    low = std::min(low, gram.at(i, i));
  }
  if (top <= 0.0 || top - low > tol * top) {
    throw GeometryError("not spherical: points are not at a common distance from the origin");
  }
  double threshold = tol * 4.0 * top;
  return pair_up<double>(gram.n, [&](std::size_t i, std::size_t j) {
    return gram.at(i, i) + gram.at(j, j) + 2.0 * gram.at(i, j) <= threshold;
  });
}

AntipodalPairing is_antipodal(const PointSet& points) { return is_antipodal(gram_of(points), points.tol()); }

AntipodalPairing is_antipodal(const ExactGram& gram) {
  for (std::size_t i = 0; i < gram.n; ++i) {
    if (!(gram.at(i, i) == gram.at(0, 0)) || gram.at(0, 0).sign() <= 0) {
      throw GeometryError("not spherical: points are not at a common distance from the origin");
    }
  }
  return pair_up<Quad>(gram.n, [&](std::size_t i, std::size_t j) {
    return (gram.at(i, j) + gram.at(i, i)).is_zero();
  });
}

std::size_t span_dim(const PointSet& points) {
  if (points.size() < 2) return 0;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(points.size() - 1), static_cast<Eigen::Index>(points.dim()));
  auto x0 = points.point(0);
  for (std::size_t i = 1; i < points.size(); ++i) {
    auto p = points.point(i);
    for (std::size_t k = 0; k < points.dim(); ++k) {
      m(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(k)) = p[k] - x0[k];
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return numeric_rank(svd);
}

double AffineSubspace::distance(std::span<const double> p) const {
  std::vector<double> r(p.begin(), p.end());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= base[k];
  for (const auto& dir : directions) {
    double c = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) c += r[k] * dir[k];
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= c * dir[k];
  }
  double s = 0.0;
  for (double v : r) s += v * v;
  return std::sqrt(s);
}

std::optional<AffineSubspace> equidistant_locus(const PointSet& points, std::size_t ambient_dim) {
  if (points.dim() != ambient_dim) {
    throw std::invalid_argument("point dimension does not match the ambient dimension");
  }
  const auto d = static_cast<Eigen::Index>(ambient_dim);
  AffineSubspace out;
  auto y0 = points.point(0);
  if (points.size() == 1) {
    out.base.assign(y0.begin(), y0.end());
    for (Eigen::Index k = 0; k < d; ++k) {
      std::vector<double> e(ambient_dim, 0.0);
      e[static_cast<std::size_t>(k)] = 1.0;
      out.directions.push_back(std::move(e));
    }
    return out;
  }
  // (y_i - y_0) . z = |y_i - y_0|^2 / 2 with x = y_0 + z
  const auto rows = static_cast<Eigen::Index>(points.size() - 1);
  Eigen::MatrixXd a(rows, d);
  Eigen::VectorXd b(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    auto p = points.point(static_cast<std::size_t>(i) + 1);
    double s = 0.0;
    for (Eigen::Index k = 0; k < d; ++k) {
      double diff = p[static_cast<std::size_t>(k)] - y0[static_cast<std::size_t>(k)];
      a(i, k) = diff;
      s += diff * diff;
    }
    b(i) = 0.5 * s;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  std::size_t rank = numeric_rank(svd);
  if (rank == 0) return std::nullopt;
  svd.setThreshold(kRankTol);
  Eigen::VectorXd z = svd.solve(b);
  double residual = (a * z - b).norm();
  if (residual > kConsistencyTol * (1.0 + b.norm())) return std::nullopt;
  out.base.resize(ambient_dim);
  for (Eigen::Index k = 0; k < d; ++k) out.base[static_cast<std::size_t>(k)] = y0[static_cast<std::size_t>(k)] + z(k);
  for (Eigen::Index c = static_cast<Eigen::Index>(rank); c < d; ++c) {
    std::vector<double> dir(ambient_dim);
    for (Eigen::Index k = 0; k < d; ++k) dir[static_cast<std::size_t>(k)] = svd.matrixV()(k, c);
    out.directions.push_back(std::move(dir));
  }
  return out;
}

NormalizedSet center_and_normalize(const PointSet& points, bool intrinsic) {
  if (points.size() < 2) throw GeometryError("degenerate: need at least two points to find a sphere");
  auto locus = equidistant_locus(points, points.dim());
  if (!locus) throw GeometryError("not concyclic: no point is equidistant from every input point");
  // base is y0 + minimum-norm offset, i.e. the circumcentre inside the affine hull
  const std::vector<double>& c = locus->base;
  std::vector<double> radii;
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto p = points.point(i);
    double s = 0.0;
    for (std::size_t k = 0; k < points.dim(); ++k) s += (p[k] - c[k]) * (p[k] - c[k]);
    radii.push_back(s);
  }
  double r2 = std::accumulate(radii.begin(), radii.end(), 0.0) / static_cast<double>(radii.size());
  for (double v : radii) {
    if (std::fabs(v - r2) > kConsistencyTol * r2) {
      throw GeometryError("not concyclic: points are not on a common sphere");
    }
  }
  double r = std::sqrt(r2);
  std::vector<double> coords;
  coords.reserve(points.size() * points.dim());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto p = points.point(i);
    for (std::size_t k = 0; k < points.dim(); ++k) coords.push_back((p[k] - c[k]) / r);
  }
  PointSet unit(points.dim(), std::move(coords), points.tol());
  if (intrinsic) {
    Eigen::MatrixXd m = as_matrix(unit);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
    std::size_t rank = std::max<std::size_t>(numeric_rank(svd), 1);
    Eigen::MatrixXd reduced = m * svd.matrixV().leftCols(static_cast<Eigen::Index>(rank));
    std::vector<double> rc;
    rc.reserve(points.size() * rank);
    for (Eigen::Index i = 0; i < reduced.rows(); ++i) {
      for (Eigen::Index k = 0; k < reduced.cols(); ++k) rc.push_back(reduced(i, k));
    }
    unit = PointSet(rank, std::move(rc), points.tol());
  }
  return NormalizedSet{std::move(unit), c, r};
}

NormalizedGram<Quad> center_and_normalize(const ExactGram& gram) {
  if (gram.n < 2) throw GeometryError("degenerate: need at least two points to find a sphere");
  auto out = normalize_gram(gram, 0.0);
  if (!out) throw GeometryError("not concyclic: points are not on a common sphere");
  return *out;
}

NormalizedGram<double> center_and_normalize(const Gram<double>& gram, double /*tol*/) {
  if (gram.n < 2) throw GeometryError("degenerate: need at least two points to find a sphere");
  double top = 0.0;
  for (double v : gram.entries) top = std::max(top, std::fabs(v));
  auto out = normalize_gram(gram, 1e-10 * std::max(top, 1.0));
  if (!out) throw GeometryError("not concyclic: points are not on a common sphere");
  return *out;
}

bool is_concyclic(const PointSet& points) {
  try {
    center_and_normalize(points);
    return true;
  } catch (const GeometryError&) {
    return false;
  }
}

std::size_t two_profile_count(const DistanceProfile<double>& profile) {
  return static_cast<std::size_t>(std::count_if(profile.per_point.begin(), profile.per_point.end(),
                                                [](const auto& s) { return s.size() == 2; }));
}

std::vector<SaturatedDecomposition<double>> saturated_subsets(const PointSet& points) {
  DistanceProfile<double> prof = distance_profile(points);
  if (!prof.is_locally_k(2)) {
    throw GeometryError("profile too rich: some point sees more than two distances");
  }
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& s = prof.per_point[i];
    if (s.size() == 2) groups[{s[0], s[1]}].push_back(i);
  }
  std::vector<SaturatedDecomposition<double>> out;
  const std::size_t d = points.dim();
  for (auto& [pair, members] : groups) {
    if (members.size() < 2) continue;
    SaturatedDecomposition<double> dec;
    dec.subset = members;
    dec.class_lo = pair.first;
    dec.class_hi = pair.second;
    dec.alpha_sq = prof.classes[pair.first];
    dec.beta_sq = prof.classes[pair.second];
    PointSet y = points.subset(members);
    dec.subset_dim = span_dim(y);
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!std::binary_search(members.begin(), members.end(), i)) dec.remainder.push_back(i);
    }
    dec.remainder_locus = equidistant_locus(y, d);
    if (!dec.remainder.empty()) {
      PointSet rest = points.subset(dec.remainder);
      dec.remainder_dim = span_dim(rest);
      double scale = std::sqrt(prof.classes.back());
      dec.remainder_in_locus = dec.remainder_locus.has_value();
      if (dec.remainder_locus) {
        for (std::size_t i : dec.remainder) {
          if (dec.remainder_locus->distance(points.point(i)) > 1e-6 * scale) dec.remainder_in_locus = false;
        }
      }
      dec.complement_bound_holds = dec.remainder_dim + dec.subset_dim <= d;
      dec.subset_concyclic = members.size() <= 2 || is_concyclic(y);
    }
    out.push_back(std::move(dec));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.subset.size() != b.subset.size()) return a.subset.size() > b.subset.size();
    if (a.alpha_sq != b.alpha_sq) return a.alpha_sq < b.alpha_sq;
    return a.beta_sq < b.beta_sq;
  });
  return out;
}

}  // namespace distkit
