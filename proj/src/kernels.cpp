#include "distkit/kernels.hpp"

#include <stdexcept>

namespace distkit::kernels {

void gegenbauer_values(std::size_t d, std::size_t degree, double t, std::span<double> out) {
  if (d < 2) throw std::invalid_argument("Gegenbauer dimension must be >= 2");
  const double dd = static_cast<double>(d);
  auto lambda = [dd](std::size_t l) {
    return l == 0 ? 0.0 : static_cast<double>(l) / (dd + 2.0 * static_cast<double>(l) - 2.0);
  };
  out[0] = 1.0;
  if (degree == 0) return;
  out[1] = dd * t;
  for (std::size_t l = 1; l < degree; ++l) {
    out[l + 1] = (t * out[l] - (1.0 - lambda(l - 1)) * out[l - 1]) / lambda(l + 1);
  }
}

namespace {

struct Kahan {
  double sum = 0.0;
  double c = 0.0;
  void add(double v) {
    double y = v - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

// Row i contribution to every moment: w_i * sum_j w_j G_l((x_i, x_j)).
void moment_row(const Gram<double>& g, std::span<const double> w, std::size_t strength,
                std::size_t i, std::span<double> row, std::vector<double>& scratch) {
  std::vector<Kahan> acc(strength);
  for (std::size_t j = 0; j < g.n; ++j) {
    gegenbauer_values(g.dim, strength, g.at(i, j), scratch);
    for (std::size_t l = 1; l <= strength; ++l) acc[l - 1].add(w[j] * scratch[l]);
  }
  for (std::size_t l = 0; l < strength; ++l) row[l] = w[i] * acc[l].sum;
}

void check_moment_args(const Gram<double>& g, std::span<const double> w) {
  if (w.size() != g.n) throw std::invalid_argument("weight count does not match point count");
}

}  // namespace

namespace serial {

std::vector<double> gram(const PointSet& points) {
  const std::size_t n = points.size();
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto a = points.point(i);
      auto b = points.point(j);
      double s = 0.0;
      for (std::size_t k = 0; k < points.dim(); ++k) s += a[k] * b[k];
      out[i * n + j] = s;
    }
  }
  return out;
}

std::vector<double> pairwise_sq_distances(const PointSet& points) {
  const std::size_t n = points.size();
  std::vector<double> out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto a = points.point(i);
      auto b = points.point(j);
      double s = 0.0;
      for (std::size_t k = 0; k < points.dim(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
      out.push_back(s);
    }
  }
  return out;
}

std::vector<double> moment_sums(const Gram<double>& g, std::span<const double> weights,
                                std::size_t strength) {
  check_moment_args(g, weights);
  std::vector<Kahan> total(strength);
  std::vector<double> scratch(strength + 1);
  std::vector<double> row(strength);
  for (std::size_t i = 0; i < g.n; ++i) {
    moment_row(g, weights, strength, i, row, scratch);
    for (std::size_t l = 0; l < strength; ++l) total[l].add(row[l]);
  }
  std::vector<double> out(strength);
  for (std::size_t l = 0; l < strength; ++l) out[l] = total[l].sum;
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<double> gram(const PointSet& points) {
  const std::size_t n = points.size();
  const std::size_t dim = points.dim();
  std::vector<double> out(n * n);
  const auto rows = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    auto a = points.point(i);
    for (std::size_t j = 0; j < n; ++j) {
      auto b = points.point(j);
      double s = 0.0;
      for (std::size_t k = 0; k < dim; ++k) s += a[k] * b[k];
      out[i * n + j] = s;
    }
  }
  return out;
}

std::vector<double> pairwise_sq_distances(const PointSet& points) {
  const std::size_t n = points.size();
  const std::size_t dim = points.dim();
  std::vector<double> out(n * (n - 1) / 2);
  const auto rows = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (long long ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    // offset of row i in the packed upper triangle
    std::size_t base = i * (2 * n - i - 1) / 2;
    auto a = points.point(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      auto b = points.point(j);
      double s = 0.0;
      for (std::size_t k = 0; k < dim; ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
      out[base + (j - i - 1)] = s;
    }
  }
  return out;
}

std::vector<double> moment_sums(const Gram<double>& g, std::span<const double> weights,
                                std::size_t strength) {
  check_moment_args(g, weights);
  std::vector<double> rows(g.n * strength);
  const auto n = static_cast<long long>(g.n);
#pragma omp parallel
  {
    std::vector<double> scratch(strength + 1);
#pragma omp for schedule(static)
    for (long long ii = 0; ii < n; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      moment_row(g, weights, strength, i, std::span<double>(rows.data() + i * strength, strength),
                 scratch);
    }
  }
  // fixed-order reduction: identical to the serial kernel bit for bit
  std::vector<Kahan> total(strength);
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t l = 0; l < strength; ++l) total[l].add(rows[i * strength + l]);
  }
  std::vector<double> out(strength);
  for (std::size_t l = 0; l < strength; ++l) out[l] = total[l].sum;
  return out;
}

}  // namespace parallel

}  // namespace distkit::kernels
