#pragma once

// Named extremal configurations, graph-based two-distance embeddings and the
// verification pipeline that checks each construction against its expected
// profile.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "distkit/bounds.hpp"
#include "distkit/point_set.hpp"
#include "distkit/tables.hpp"

namespace distkit::catalog {

using Params = std::map<std::string, std::string>;

/// Simple undirected graph; adjacency is validated (symmetric, loop-free).
struct GraphSpec {
  std::size_t n = 0;
  std::vector<std::vector<bool>> adjacency;

  static GraphSpec from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i][j]; }
  std::size_t degree(std::size_t i) const;
  /// Throws std::invalid_argument naming the first offending pair.
  void validate() const;
};

GraphSpec complete_graph(std::size_t n);
/// Kneser graph K(m, 2): 2-subsets of [m], adjacent when disjoint.
GraphSpec kneser2_graph(std::size_t m);
/// Folded 5-cube: F_2^4, adjacent at Hamming distance 1 or 4.
GraphSpec clebsch_graph();
/// Intersection graph of the 27 lines on a cubic surface (complement of the
/// Schlaefli graph), 10-regular.
GraphSpec lines27_graph();

struct Embedding {
  bool feasible = false;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  std::size_t rank = 0;
  /// M = I + a A + b (J - I - A), exact.
  ExactGram gram;
  std::optional<PointSet> points;
};

/// Unit vectors with Gram matrix M when M is PSD (eigenvalues >= -1e-9 * the
/// largest); otherwise infeasible with the most negative eigenvalue.
Embedding graph_embed(const GraphSpec& graph, const Quad& a, const Quad& b, double tol = default_tolerance());

struct Expected {
  std::size_t cardinality = 0;
  std::size_t classes = 0;
  std::size_t max_local = 0;
  std::optional<bool> proper_locally;
  std::optional<std::size_t> total_local;
  /// Squared distance classes in the construction's own scale.
  std::optional<std::vector<Quad>> sq_classes;
  std::size_t span_dim = 0;
  bool spherical = false;
  std::optional<bool> antipodal;
  /// Uniform-weight design strength (exactly this, not more).
  std::optional<std::size_t> design_strength;
  /// Bound that |X| attains, evaluated on the normalised inner products.
  std::optional<bounds::BoundKind> attains;
};

struct CatalogEntry {
  std::string name;
  Params params;
  Configuration config;
  Expected expected;
  std::string source;
  std::string label() const;
};

struct FieldCheck {
  std::string field;
  std::string expected;
  std::string observed;
  bool ok = false;
};

struct Verification {
  std::string label;
  bool exact = false;
  std::vector<FieldCheck> checks;
  bool ok() const;
};

struct CatalogInfo {
  std::string name;
  std::string params;
  std::string description;
};

std::vector<CatalogInfo> list();

/// Throws std::invalid_argument for unknown names, missing or out-of-range parameters.
CatalogEntry construct(const std::string& name, const Params& params = {});

Verification verify(const CatalogEntry& entry);

/// The full expected-profile suite: every named configuration over its
/// standard parameter range.
std::vector<CatalogEntry> standard_suite();

/// Distinct two-distance 6-vertex subsets of the icosahedron up to their
/// distance-profile signature.
struct SubsetFamily {
  std::vector<std::vector<std::size_t>> representatives;
  std::vector<std::string> signatures;
  std::size_t two_distance_subsets = 0;
};
SubsetFamily icosahedron_subsets();

/// Parameters s where simplex_plus_ray(d, s) stops being a proper locally
/// two-distance set (coincidence of distance classes or of points), located by
/// a sign-change scan over [-extent, extent] refined by bisection.
std::vector<double> simplex_plus_ray_exceptions(std::size_t d, double extent = 10.0, double step = 1e-3);

/// Re-exported from tables.
using tables::known_tables;

}  // namespace distkit::catalog
