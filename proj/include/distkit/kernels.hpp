#pragma once

// Data-parallel inner loops.  Every kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::parallel with identical
// results up to floating-point reassociation; the tests compare the two and
// bench/ times them against each other.

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "distkit/point_set.hpp"

namespace distkit::kernels {

/// G_0..G_t of dimension d at t, via the three-term recurrence, in double.
void gegenbauer_values(std::size_t d, std::size_t degree, double t, std::span<double> out);

/// Result of a two-parameter grid minimisation.
struct GridMin {
  double value = std::numeric_limits<double>::infinity();
  std::size_t ix = 0;
  std::size_t iy = 0;
  std::size_t evaluated = 0;
};

namespace serial {

std::vector<double> gram(const PointSet& points);
/// Squared distances for i < j, packed row by row.
std::vector<double> pairwise_sq_distances(const PointSet& points);
/// M_1..M_t = sum_{x,y} w(x) w(y) G_i((x,y)) over a unit-norm Gram matrix.
std::vector<double> moment_sums(const Gram<double>& g, std::span<const double> weights,
                                std::size_t strength);

template <class F>
GridMin grid_min(std::size_t nx, std::size_t ny, F&& score) {
  GridMin best;
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      double v = score(i, j);
      if (v != v) continue;  // NaN marks a skipped cell
      ++best.evaluated;
      if (v < best.value) best = {v, i, j, best.evaluated};
    }
  }
  return best;
}

}  // namespace serial

namespace parallel {

std::vector<double> gram(const PointSet& points);
std::vector<double> pairwise_sq_distances(const PointSet& points);
std::vector<double> moment_sums(const Gram<double>& g, std::span<const double> weights,
                                std::size_t strength);

/// Same contract as serial::grid_min.  Rows are reduced independently and the
/// per-row minima are combined in row order, so ties resolve identically.
template <class F>
GridMin grid_min(std::size_t nx, std::size_t ny, F&& score) {
  std::vector<GridMin> rows(nx);
  const auto n = static_cast<long long>(nx);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    GridMin row;
    for (std::size_t j = 0; j < ny; ++j) {
      double v = score(i, j);
      if (v != v) continue;
      ++row.evaluated;
      if (v < row.value) {
        row.value = v;
        row.ix = i;
        row.iy = j;
      }
    }
    rows[i] = row;
  }
  GridMin best;
  std::size_t total = 0;
  for (const GridMin& r : rows) {
    total += r.evaluated;
    if (r.value < best.value) best = r;
  }
  best.evaluated = total;
  return best;
}

}  // namespace parallel

}  // namespace distkit::kernels
