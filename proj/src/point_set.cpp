#include "distkit/point_set.hpp"

#include <Eigen/Dense>

#include <charconv>
#include <cstdlib>

#include "distkit/kernels.hpp"

namespace distkit {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double default_tolerance() {
  if (const char* env = std::getenv("DISTKIT_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0 && v < 1e-3) return v;
    throw std::invalid_argument("DISTKIT_TOL must be a number in (0, 1e-3)");
  }
  return kDefaultTol;
}

namespace {

void check_tol(double tol) {
  if (!(tol > 0.0 && tol < 1e-3)) {
    throw std::invalid_argument("tolerance must lie in (0, 1e-3)");
  }
}

}  // namespace

PointSet::PointSet(std::size_t dim, std::vector<double> coords, double tol)
    : dim_(dim), coords_(std::move(coords)), tol_(tol) {
  if (dim_ == 0) throw std::invalid_argument("dimension must be positive");
  if (coords_.empty() || coords_.size() % dim_ != 0) {
    throw std::invalid_argument("coordinate count is not a positive multiple of the dimension");
  }
  check_tol(tol_);
}

PointSet::PointSet(std::size_t dim, const std::vector<std::vector<double>>& points, double tol)
    : dim_(dim), tol_(tol) {
  if (dim_ == 0) throw std::invalid_argument("dimension must be positive");
  if (points.empty()) throw std::invalid_argument("point set must be nonempty");
  coords_.reserve(points.size() * dim);
  for (const auto& p : points) {
    if (p.size() != dim) throw std::invalid_argument("point has wrong number of coordinates");
    coords_.insert(coords_.end(), p.begin(), p.end());
  }
  check_tol(tol_);
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
  std::vector<double> c;
  c.reserve(indices.size() * dim_);
  for (std::size_t i : indices) {
    auto p = point(i);
    c.insert(c.end(), p.begin(), p.end());
  }
  return PointSet(dim_, std::move(c), tol_);
}

PointSet PointSet::with_tol(double tol) const { return PointSet(dim_, coords_, tol); }

ExactGram gram_of(std::size_t dim, const std::vector<std::vector<Quad>>& points) {
  ExactGram g{dim, points.size(), std::vector<Quad>(points.size() * points.size())};
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i; j < points.size(); ++j) {
      Quad s;
      for (std::size_t k = 0; k < dim; ++k) s += points[i][k] * points[j][k];
      g.at(i, j) = s;
      g.at(j, i) = s;
    }
  }
  return g;
}

Gram<double> gram_of(const PointSet& points) {
  return Gram<double>{points.dim(), points.size(), kernels::parallel::gram(points)};
}

Gram<double> to_float(const ExactGram& g) {
  Gram<double> out{g.dim, g.n, {}};
  out.entries.reserve(g.entries.size());
  for (const Quad& q : g.entries) out.entries.push_back(q.to_double());
  return out;
}

PointSet points_from_gram(const Gram<double>& g, std::size_t dim_hint, double tol) {
  const auto n = static_cast<Eigen::Index>(g.n);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = g.at(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const Eigen::VectorXd& ev = es.eigenvalues();
  double top = ev.cwiseAbs().maxCoeff();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = n; k-- > 0;) {
    if (ev(k) > 1e-8 * top) keep.push_back(k);
  }
  std::size_t rank = keep.size();
  std::size_t dim = dim_hint == 0 ? std::max<std::size_t>(rank, 1) : dim_hint;
  if (rank > dim) {
    throw GeometryError("degenerate: Gram matrix has rank " + std::to_string(rank) +
                        " exceeding dimension " + std::to_string(dim));
  }
  std::vector<double> coords(g.n * dim, 0.0);
  for (std::size_t c = 0; c < rank; ++c) {
    double s = std::sqrt(ev(keep[c]));
    for (std::size_t i = 0; i < g.n; ++i) {
      coords[i * dim + c] = es.eigenvectors()(static_cast<Eigen::Index>(i), keep[c]) * s;
    }
  }
  return PointSet(dim, std::move(coords), tol);
}

}  // namespace distkit
