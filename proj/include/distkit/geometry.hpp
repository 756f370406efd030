#pragma once

// Distance spectra, (local) k-distance classification, antipodality, affine
// machinery and saturated-subset decomposition.
//
// Distances are classified by their squares.  In floating mode the sorted
// squared distances are swept once and adjacent values whose gap is at most
// tol * (largest squared distance) are merged; in exact mode classes are
// exact equality in Q(sqrt(m)).

#include <cstddef>
#include <optional>
#include <vector>

#include "distkit/point_set.hpp"

namespace distkit {

template <class T>
struct DistanceProfile {
  std::size_t n = 0;
  /// Sorted class representatives (squared distances).
  std::vector<T> classes;
  /// Number of unordered pairs in each class; sums to n(n-1)/2.
  std::vector<std::size_t> multiplicities;
  /// Class index of pair (i, j), i < j, packed row by row.
  std::vector<std::size_t> pair_class;
  /// A_X(x) for each point as sorted class indices.
  std::vector<std::vector<std::size_t>> per_point;

  std::size_t class_count() const { return classes.size(); }
  std::size_t max_local() const;
  std::size_t total_local() const;
  bool is_k_distance(std::size_t k) const { return classes.size() == k; }
  bool is_locally_k(std::size_t k) const { return max_local() <= k; }
  /// Locally k-distance with more than k global classes (a set with fewer
  /// classes is an s-distance set for some s < k, not a proper one).
  bool is_proper_locally_k(std::size_t k) const { return is_locally_k(k) && classes.size() > k; }
  std::size_t class_of(std::size_t i, std::size_t j) const;
};

DistanceProfile<double> distance_profile(const PointSet& points);
DistanceProfile<double> distance_profile(const Gram<double>& gram, double tol);
DistanceProfile<Quad> distance_profile(const ExactGram& gram);

/// Reference implementation: naive double loop with direct threshold
/// comparison against every existing class.  Used as a test oracle.
std::vector<std::vector<double>> naive_per_point_distances(const PointSet& points);

template <class T>
struct InnerSpectrum {
  /// Sorted distinct inner products (x, y), x != y.
  std::vector<T> classes;
  /// A_inn(x) for every point, as class indices.
  std::vector<std::vector<std::size_t>> per_point;

  std::vector<T> values_at(std::size_t i) const {
    std::vector<T> out;
    for (std::size_t c : per_point[i]) out.push_back(classes[c]);
    return out;
  }
};

InnerSpectrum<double> inner_spectrum(const PointSet& points);
InnerSpectrum<double> inner_spectrum(const Gram<double>& gram, double tol);
InnerSpectrum<Quad> inner_spectrum(const ExactGram& gram);

struct AntipodalPairing {
  bool antipodal = false;
  /// partner[i] = index of -x_i, or npos.
  std::vector<std::size_t> partner;
  /// One representative of every {x, -x}; X = half u (-half) when antipodal.
  std::vector<std::size_t> half;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

AntipodalPairing is_antipodal(const PointSet& points);
AntipodalPairing is_antipodal(const Gram<double>& gram, double tol);
AntipodalPairing is_antipodal(const ExactGram& gram);

/// Dimension of the affine hull (rank of x_i - x_0).
std::size_t span_dim(const PointSet& points);

struct AffineSubspace {
  std::vector<double> base;
  std::vector<std::vector<double>> directions;
  std::size_t dim() const { return directions.size(); }
  /// Distance from p to the subspace.
  double distance(std::span<const double> p) const;
};

/// Points of R^ambient_dim equidistant from every point of Y; nullopt when the
/// linear system is inconsistent.
std::optional<AffineSubspace> equidistant_locus(const PointSet& points, std::size_t ambient_dim);

template <class T>
struct SaturatedDecomposition {
  std::vector<std::size_t> subset;
  /// The shared per-point pair {alpha^2, beta^2} as class indices and values.
  std::size_t class_lo = 0;
  std::size_t class_hi = 0;
  T alpha_sq{};
  T beta_sq{};
  std::size_t subset_dim = 0;
  std::vector<std::size_t> remainder;
  std::size_t remainder_dim = 0;
  std::optional<AffineSubspace> remainder_locus;
  /// Every remainder point lies on remainder_locus.
  bool remainder_in_locus = true;
  /// dim(X \ Y) <= d - dim(Y).
  bool complement_bound_holds = true;
  /// Points of Y lie on a common sphere (within tolerance).
  bool subset_concyclic = true;
};

/// All saturated subsets of a locally two-distance set, ordered by size
/// descending then by the smaller squared distance ascending.
std::vector<SaturatedDecomposition<double>> saturated_subsets(const PointSet& points);

/// Number of points that see exactly two distances.
std::size_t two_profile_count(const DistanceProfile<double>& profile);

struct NormalizedSet {
  PointSet points;
  std::vector<double> center;
  double radius = 0.0;
};

/// Translate and scale onto the unit sphere about the circumcentre.  With
/// `intrinsic` the result is expressed in an orthonormal basis of the linear
/// span of the normalised vectors, so an (m-1)-sphere section comes back in R^m.
NormalizedSet center_and_normalize(const PointSet& points, bool intrinsic = false);

template <class T>
struct NormalizedGram {
  Gram<T> gram;
  T radius_sq{};
};

/// Gram-matrix form: circumcentre as an affine combination of the points,
/// solved exactly in exact mode.
NormalizedGram<Quad> center_and_normalize(const ExactGram& gram);
NormalizedGram<double> center_and_normalize(const Gram<double>& gram, double tol);

/// Whether all points lie on one sphere (any centre).
bool is_concyclic(const PointSet& points);

/// Whether all points already lie on the unit sphere about the origin.
bool on_unit_sphere(const Gram<double>& gram, double tol);
bool on_unit_sphere(const ExactGram& gram);

}  // namespace distkit
