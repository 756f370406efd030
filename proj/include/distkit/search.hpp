#pragma once

// Grid refutations of small nonexistence claims and a checker for the
// saturated-subset decomposition.  A grid search is evidence, never proof:
// verdicts read "supports-nonexistence" or "inconclusive".

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "distkit/point_set.hpp"

namespace distkit::search {

struct SearchConfig {
  double extent = 5.0;
  double step = 1e-3;
  /// Class-merge tolerance for the per-point distance count.
  double merge_tol = 1e-6;
  bool parallel = true;
};

struct SubCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct DecompositionCheck {
  std::vector<std::size_t> subset;
  std::size_t subset_dim = 0;
  std::size_t remainder_size = 0;
  std::size_t remainder_dim = 0;
  bool dimension_ok = false;
  bool locus_ok = false;
  int ds_star = 0;
  int lds = 0;
  bool cardinality_ok = false;
};

struct SearchReport {
  std::string claim;
  std::string space;
  double extent = 0.0;
  double step = 0.0;
  double merge_tol = 0.0;
  std::size_t cells = 0;
  /// Smallest max_x |A_X(x)| seen on the grid.
  std::size_t min_local = 0;
  /// Smallest violation of the refuted property (0 would be a counterexample).
  double best_score = 0.0;
  std::vector<double> best_params;
  /// Verdict requires best_score > margin = 10 * merge_tol.
  double margin = 0.0;
  std::string verdict;
  std::vector<SubCheck> sub_checks;
  std::vector<DecompositionCheck> decompositions;
};

/// Four collinear points {0, 1, x3, x4}: the violation of "locally two-distance"
/// is max over points of the smallest gap between its distances, relative to the
/// smallest pairwise distance.
SearchReport refute_line4(const SearchConfig& config = {});

/// The five-point planar family y_{1,2} = (+-1, 0), x_3 = 0, x_{1,2} = +-(p, q):
/// violation is the worst per-point two-cluster spread of distances, relative to
/// the smallest pairwise distance.
SearchReport refute_midpoint5(const SearchConfig& config = {});

/// Per-saturated-subset check of dim(X \ Y) <= d - dim(Y) and
/// |X| <= DS*_i(2) + LDS_{d-i}(2) with i = dim(Y), d the affine dimension of X.
SearchReport verify_decomposition(const PointSet& points);

/// Per-point class count and violation scores, exposed for tests.
std::size_t line_max_local(const std::vector<double>& xs, double merge_tol);
double line_violation(const std::vector<double>& xs);
double planar_violation(const std::vector<std::array<double, 2>>& pts);

}  // namespace distkit::search
