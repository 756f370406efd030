#pragma once

// Weighted spherical designs.
//
// (X, w) is a weighted t-design iff M_i = sum_{x,y} w(x) w(y) G_i((x, y))
// vanishes for i = 1..t.  Each M_i is the squared norm of a characteristic
// matrix product, so it is never negative; harmonic bases are never formed.
//
// Every operation is templated on the scalar: Quad for exact verification,
// double for floating input.  `tol` is ignored in exact mode.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "distkit/gegenbauer.hpp"
#include "distkit/geometry.hpp"
#include "distkit/point_set.hpp"

namespace distkit::designs {

/// Scale-aware zero test for floating moments: |M_i| <= kMomentZero * sum w^2 * h_i.
inline constexpr double kMomentZero = 1e-10;

template <class T>
struct WeightedSet {
  Gram<T> gram;
  std::vector<T> weights;
};

/// Validates unit norms, positivity and sum(w) = 1.
template <class T>
WeightedSet<T> make_weighted(Gram<T> gram, std::vector<T> weights, double tol = default_tolerance());

template <class T>
std::vector<T> uniform_weights(std::size_t n);

template <class T>
struct MomentReport {
  std::size_t strength_checked = 0;
  /// moments[i-1] = M_i.
  std::vector<T> moments;
  std::vector<bool> vanishes;
  /// Zero threshold per moment (0 in exact mode).
  std::vector<double> thresholds;
  /// Largest t' <= strength_checked with M_1..M_t' all zero.
  std::size_t strength = 0;
  /// Every M_i >= -threshold.
  bool nonnegative = true;
};

template <class T>
MomentReport<T> moment_sums(const Gram<T>& gram, std::span<const T> weights, std::size_t t,
                            double tol = default_tolerance());

/// Serial reference used by tests and the benchmark; floating only.
MomentReport<double> moment_sums_serial(const Gram<double>& gram, std::span<const double> weights,
                                        std::size_t t);

template <class T>
struct DesignVerdict {
  MomentReport<T> report;
  bool is_design = false;
  /// |X| equals the lower bound N_d(t/2) (even t) or N'_d((t+1)/2) (odd t).
  bool tight = false;
  std::uint64_t lower_bound = 0;
};

template <class T>
DesignVerdict<T> is_weighted_design(const Gram<T>& gram, std::span<const T> weights, std::size_t t,
                                    double tol = default_tolerance());

/// Lower bound on the size of a weighted t-design on S^{d-1}.
std::uint64_t design_lower_bound(std::size_t d, std::size_t t);

template <class T>
struct WeightConstruction {
  std::size_t k = 0;
  bool antipodal = false;
  std::vector<T> weights;
  /// Expansion of F_x for every point (antipodal: for every half-set point, by index).
  std::vector<gegenbauer::Expansion<T>> expansions;
  /// |X| = N_d(k) (or N'_d(k)); only then is the tight-design conclusion guaranteed.
  bool hypotheses_met = false;
  T weight_sum{};
  DesignVerdict<T> verdict;
  std::size_t global_classes = 0;
  std::vector<std::string> notes;
};

/// w(x) = leading Gegenbauer coefficient of
/// F_x(t) = t^{k-|A(x)|} prod_{a in A(x)} (t - a) / (1 - a).
/// Throws GeometryError("weight construction failed") when some weight is not
/// positive and "profile too rich" when a point sees more than k inner products.
template <class T>
WeightConstruction<T> design_weights(const Gram<T>& gram, std::size_t k, double tol = default_tolerance());

/// Antipodal variant: for y in a half-set, F_y(t) = t^{k-1-2|B|} prod_{b in B} (t^2 - b) / (1 - b)
/// with B the nonzero squared inner products to points other than +-y;
/// w(y) = w(-y) = f_{k-1}/2.
template <class T>
WeightConstruction<T> design_weights_antipodal(const Gram<T>& gram, std::size_t k,
                                               double tol = default_tolerance());

enum class SectionClass { near, far };

template <class T>
struct Section {
  std::size_t base = 0;
  std::vector<std::size_t> indices;
  T distance_sq{};
  /// Section re-centred onto its own unit sphere in dimension d-1.
  Gram<T> gram;
  std::size_t class_count = 0;
  DesignVerdict<T> verdict;
};

/// Distance class of a tight 5-design X seen from one of its points, as a
/// tight 4-design on S^{d-2}.  Throws GeometryError("strength mismatch") when
/// (X, w) is not a tight 5-design.
template <class T>
Section<T> tight_section(const Gram<T>& gram, std::span<const T> weights, std::size_t base,
                         SectionClass which, double tol = default_tolerance());

}  // namespace distkit::designs
