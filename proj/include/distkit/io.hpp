#pragma once

// Point-set, Gram and weight file formats.
//
// Point file:   "dim n", then n lines of dim coordinates, optional "# tol v".
//               Coordinates are decimals, fractions or quadratic expressions
//               without spaces ("(1+sqrt(5))/2").
// Gram file:    "gram dim n", then n lines of n exact entries.
// Weights file: one weight per line, same token syntax.
// Blank lines and lines starting with '#' (other than the tol directive) are ignored.

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "distkit/point_set.hpp"

namespace distkit::io {

/// Malformed input; the message names the line and field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PointFile {
  Configuration config;
  bool from_gram = false;
  /// Set when every token parsed exactly and the Gram matrix stays in one field.
  bool exact_ok = false;
  std::string exact_failure;
  double tol = kDefaultTol;
  std::string raw;
};

PointFile read_points(std::istream& in, const std::string& source, std::optional<double> tol_override = {});
PointFile read_points_file(const std::string& path, std::optional<double> tol_override = {});

struct WeightsFile {
  std::vector<Quad> exact;
  std::vector<double> values;
  std::string raw;
};

WeightsFile read_weights(std::istream& in, const std::string& source);
WeightsFile read_weights_file(const std::string& path);

/// Writes exact coordinates when present, else an exact Gram file when
/// present, else shortest round-trip decimals.
void write_points(std::ostream& out, const Configuration& config);

/// FNV-1a 64-bit digest as 16 hex digits.
std::string fnv1a64(const std::string& bytes);

}  // namespace distkit::io
