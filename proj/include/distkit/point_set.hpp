#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "distkit/quadratic.hpp"
#include "distkit/scalar.hpp"

namespace distkit {

/// Error raised by geometric operations on malformed or unsuitable input.
/// The message is a short keyword ("degenerate", "not spherical", ...) followed
/// by detail, so callers and the CLI can match on the prefix.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultTol = 1e-9;

/// Relative comparison tolerance: kDefaultTol unless DISTKIT_TOL is set.
double default_tolerance();

/// A finite set of n points in R^dim, stored row-major, with the relative
/// tolerance used for every numeric comparison made about it.
class PointSet {
 public:
  /// Empty set in R^1; placeholder for deferred construction.
  PointSet() : dim_(1), tol_(kDefaultTol) {}
  PointSet(std::size_t dim, std::vector<double> coords, double tol = default_tolerance());
  PointSet(std::size_t dim, const std::vector<std::vector<double>>& points,
           double tol = default_tolerance());

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return coords_.size() / dim_; }
  double tol() const { return tol_; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  std::span<const double> coords() const { return coords_; }

  PointSet subset(std::span<const std::size_t> indices) const;
  PointSet with_tol(double tol) const;

 private:
  std::size_t dim_;
  std::vector<double> coords_;
  double tol_;
};

/// Symmetric Gram matrix of n vectors spanning (at most) R^dim.  This is the
/// carrier of exact-mode analysis: squared distances, inner products and
/// moment sums are all functions of it.
template <class T>
struct Gram {
  std::size_t dim = 0;
  std::size_t n = 0;
  std::vector<T> entries;

  const T& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  T& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }

  T sq_distance(std::size_t i, std::size_t j) const {
    return at(i, i) + at(j, j) - at(i, j) - at(i, j);
  }

  Gram subset(std::span<const std::size_t> indices) const {
    Gram out{dim, indices.size(), {}};
    out.entries.reserve(indices.size() * indices.size());
    for (std::size_t a : indices) {
      for (std::size_t b : indices) out.entries.push_back(at(a, b));
    }
    return out;
  }
};

using ExactGram = Gram<Quad>;

/// Gram matrix of exact coordinate vectors.
ExactGram gram_of(std::size_t dim, const std::vector<std::vector<Quad>>& points);
Gram<double> gram_of(const PointSet& points);
Gram<double> to_float(const ExactGram& g);

/// Coordinates realising a PSD Gram matrix in R^rank (eigen-factorisation).
/// `dim_hint`, when nonzero, pads or checks the output dimension.
PointSet points_from_gram(const Gram<double>& g, std::size_t dim_hint, double tol);

/// A configuration as handled by the CLI and catalog: floating coordinates
/// always, plus an exact Gram matrix when the construction is exact.
struct Configuration {
  PointSet points;
  std::optional<ExactGram> exact;
  std::optional<std::vector<std::vector<Quad>>> exact_coords;
};

}  // namespace distkit
