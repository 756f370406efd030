#pragma once

// Gegenbauer polynomials G_l^(d) normalised so that G_l^(d)(1) equals the
// dimension h_l of the space of degree-l harmonic polynomials on R^d:
//
//   G_0 = 1,  G_1 = d t,
//   t G_l = lambda_{l+1} G_{l+1} + (1 - lambda_{l-1}) G_{l-1},
//   lambda_l = l / (d + 2l - 2).
//
// Monomial forms are exact rationals; change of basis between monomials and
// {G_i} is an upper-triangular solve.

#include <cstddef>
#include <string>
#include <vector>

#include "distkit/polynomial.hpp"
#include "distkit/quadratic.hpp"

namespace distkit::gegenbauer {

inline constexpr std::size_t kMaxDegree = 32;

/// lambda_l for dimension d (lambda_0 = 0).
Rational lambda(std::size_t d, std::size_t l);

/// Exact monomial coefficients of G_l^(d); memoised per (d, l).
const Polynomial<Quad>& polynomial(std::size_t d, std::size_t l);

/// G_l^(d)(t) by the three-term recurrence.
template <class T>
T eval(std::size_t d, std::size_t l, const T& t);

/// h_l = G_l^(d)(1), evaluated exactly.
Integer harm_dim(std::size_t d, std::size_t l);

/// C(d+l-1, l) - C(d+l-3, l-2); independent cross-check of harm_dim.
Integer harm_dim_closed_form(std::size_t d, std::size_t l);

/// poly(t) = sum_i coeffs[i] G_i^(d)(t).
template <class T>
struct Expansion {
  std::size_t dim = 0;
  std::vector<T> coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
  /// Back to monomial form.
  Polynomial<T> reconstruct() const;
};

template <class T>
Expansion<T> expand(const Polynomial<T>& poly, std::size_t d);

/// G_k G_l = sum_i q_i(k, l) G_i.
struct LinearizationTable {
  std::size_t dim = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  std::vector<Rational> q;
};

LinearizationTable linearization(std::size_t d, std::size_t k, std::size_t l);

/// Checks nonnegativity, q_0 = h_k delta_{kl}, and the support/parity rule
/// (q_i != 0 only if |k-l| <= i <= k+l and i = k+l mod 2; both ends nonzero).  Returns one message per
/// violation; empty when the table is consistent.
std::vector<std::string> linearization_violations(const LinearizationTable& table);

}  // namespace distkit::gegenbauer
