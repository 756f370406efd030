#pragma once

// Scalar policy shared by the exact (Quad) and floating (double) code paths.

#include <cmath>
#include <string>

#include "distkit/quadratic.hpp"

namespace distkit {

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double lift(const Rational& r) { return r.get_d(); }
  static double from_int(long v) { return static_cast<double>(v); }
  static int sign(double v, double tol) { return v > tol ? 1 : (v < -tol ? -1 : 0); }
  static double abs(double v) { return std::fabs(v); }
  static std::string str(double v);
};

template <>
struct ScalarTraits<Quad> {
  static constexpr bool exact = true;
  static Quad lift(const Rational& r) { return Quad(r); }
  static Quad from_int(long v) { return Quad(v); }
  static int sign(const Quad& v, double /*tol*/) { return v.sign(); }
  static Quad abs(const Quad& v) { return v.sign() < 0 ? -v : v; }
  static std::string str(const Quad& v) { return v.str(); }
};

template <class T>
concept Scalar = requires { ScalarTraits<T>::exact; };

/// Shortest round-trippable decimal form of a double.
std::string format_double(double v);

inline std::string ScalarTraits<double>::str(double v) { return format_double(v); }

}  // namespace distkit
