#pragma once

// Upper bounds for (locally) k-distance sets on spheres and in R^d.
//
// All bounds driven by inner products are evaluated exactly in Q(sqrt(m)):
// the positive-coefficient bound counts strictly positive Gegenbauer
// coefficients, so sign decisions must never depend on rounding.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "distkit/gegenbauer.hpp"
#include "distkit/quadratic.hpp"

namespace distkit::bounds {

/// N_d(k) = C(d+k-1, k) + C(d+k-2, k-1).
std::uint64_t fisher(std::size_t d, std::size_t k);
/// N'_d(k) = 2 C(d+k-2, k-1).
std::uint64_t fisher_antipodal(std::size_t d, std::size_t k);

enum class BoundKind {
  fisher,
  fisher_antipodal,
  lp,
  positive_coeff,
  positive_coeff_antipodal,
  musin,
  lds_recursion,
};

std::string to_string(BoundKind kind);

struct CoefficientEvidence {
  std::size_t index = 0;
  Quad coeff;
  int sign = 0;
  Integer harm_dim;
  /// Whether this coefficient contributes to the bound.
  bool counted = false;
};

struct BoundCertificate {
  BoundKind kind = BoundKind::fisher;
  bool applicable = true;
  /// Exact bound value (rational or quadratic); `floor` is the usable cardinality bound.
  Quad value;
  Integer floor;
  std::size_t dim = 0;
  std::size_t k = 0;
  std::vector<Quad> inner;
  std::vector<CoefficientEvidence> evidence;
  std::vector<std::string> notes;
};

BoundCertificate fisher_certificate(std::size_t d, std::size_t k);
BoundCertificate fisher_antipodal_certificate(std::size_t d, std::size_t k);

/// F_X(t) = prod (t - alpha) over the given inner products.
Polynomial<Quad> annihilator(std::span<const Quad> inner);

/// |X| <= F_X(1) / f_0 when f_0 > 0 and every f_i >= 0; otherwise the
/// certificate is marked not applicable and lists the offending coefficients.
BoundCertificate lp_bound(std::span<const Quad> inner, std::size_t d);

/// |X| <= sum of h_i over strictly positive f_i.
BoundCertificate positive_coeff_bound(std::span<const Quad> inner, std::size_t d);

/// Antipodal k-distance sets: F over the inner products other than -1 (degree
/// k-1), |X| <= 2 * sum of h_i over f_i > 0.  A value -1 in `inner` is dropped
/// with a note; coefficients that break the parity rule f_i = 0 for
/// i = k mod 2 are reported in the notes.
BoundCertificate positive_coeff_bound_antipodal(std::span<const Quad> inner, std::size_t d,
                                                std::size_t k);

/// Two-distance closed form: f_0 = ab + 1/d, f_1 = -(a+b)/d, f_2 = 2/(d(d+2)),
/// and |X| <= C(d+1, 2) when a + b >= 0.
struct MusinForm {
  Quad f0;
  Quad f1;
  Quad f2;
};
MusinForm musin_coefficients(const Quad& alpha, const Quad& beta, std::size_t d);
BoundCertificate musin_bound(const Quad& alpha, const Quad& beta, std::size_t d);

struct LdsTerm {
  std::size_t i = 0;
  int ds_star = 0;        // DS*_i(2) used
  bool ds_star_known = true;
  int lds = 0;            // LDS_{d-i}(2) used
  bool lds_known = true;
  int sum = 0;
};

struct LdsCertificate {
  std::size_t dim = 0;
  /// f(d) = max_i DS*_i(2) + LDS_{d-i}(2).
  int f = 0;
  std::vector<LdsTerm> terms;
  int ds = 0;
  bool ds_known = true;
  /// max{DS_d(2), f(d)}: the cap on LDS_d(2).
  int cap = 0;
  /// d(d+1)/2 + 2
  int width_bound = 0;
  bool width_holds = true;
  std::vector<std::string> substitutions;
};

/// Cardinality cap for proper locally two-distance sets in R^d from the
/// saturated-subset recursion, using the shipped tables; entries outside table
/// coverage fall back to the inductive caps N_i(2) for DS*_i(2) and
/// C(j+2, 2) for LDS_j(2), each flagged in `substitutions`.
LdsCertificate lds_recursion(std::size_t d);

}  // namespace distkit::bounds
