#pragma once

// Exact arithmetic in the rationals and in real quadratic fields Q(sqrt(m)).
//
// Every exact quantity the library handles (inner products of the regular
// pentagon and icosahedron, the Figure-style configurations built from
// equilateral triangles, the 29-point set in R^7) lives in a single field
// Q(sqrt(m)) with m squarefree.  A Quad value carries its own radicand; a value
// with zero irrational part is normalised to radicand 0 so that rationals mix
// freely with any field.  Mixing two distinct irrational fields throws.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace distkit {

using Rational = mpq_class;
using Integer = mpz_class;

class FieldMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses an exact decimal or fraction ("0.25", "-3/8", "1e-3") into a rational.
Rational parse_rational(std::string_view text);

/// Canonical text form of a rational ("3/5", "-2", "0").
std::string format_rational(const Rational& value);

/// Squarefree decomposition n = s^2 * m for n > 0.  Returns {s, m}.
std::pair<Integer, Integer> squarefree_split(const Integer& n);

class Quad {
 public:
  Quad() = default;
  Quad(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Quad(const Rational& value) : a_(value) { a_.canonicalize(); }  // NOLINT
  Quad(Rational rational, Rational irrational, Integer radicand);

  /// sqrt(r) for a nonnegative rational r, written as s*sqrt(m).
  static Quad sqrt_of(const Rational& r);

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  const Integer& radicand() const { return m_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  int sign() const;
  double to_double() const;

  Quad operator-() const;
  Quad& operator+=(const Quad& rhs);
  Quad& operator-=(const Quad& rhs);
  Quad& operator*=(const Quad& rhs);
  Quad& operator/=(const Quad& rhs);

  friend Quad operator+(Quad lhs, const Quad& rhs) { return lhs += rhs; }
  friend Quad operator-(Quad lhs, const Quad& rhs) { return lhs -= rhs; }
  friend Quad operator*(Quad lhs, const Quad& rhs) { return lhs *= rhs; }
  friend Quad operator/(Quad lhs, const Quad& rhs) { return lhs /= rhs; }

  friend bool operator==(const Quad& lhs, const Quad& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && (lhs.b_ == 0 || lhs.m_ == rhs.m_);
  }
  friend bool operator<(const Quad& lhs, const Quad& rhs) { return (lhs - rhs).sign() < 0; }
  friend bool operator>(const Quad& lhs, const Quad& rhs) { return rhs < lhs; }
  friend bool operator<=(const Quad& lhs, const Quad& rhs) { return !(rhs < lhs); }
  friend bool operator>=(const Quad& lhs, const Quad& rhs) { return !(lhs < rhs); }

  /// Galois conjugate a - b*sqrt(m).
  Quad conjugate() const;
  /// Field norm a^2 - m*b^2.
  Rational norm() const;

  /// Largest integer <= value, decided exactly.
  Integer floor() const;

  /// Square root inside Q(sqrt(m)) (or of a rational into a new field) when it
  /// exists; nullopt otherwise or for negative input.
  std::optional<Quad> try_sqrt() const;

  /// "3/5 + 1/5*sqrt(5)" style rendering; `compact` drops the spaces so the
  /// string survives whitespace-separated file formats.
  std::string str(bool compact = false) const;

 private:
  void normalise();

  Rational a_{0};
  Rational b_{0};
  Integer m_{0};
};

std::ostream& operator<<(std::ostream& os, const Quad& q);

/// Parses arithmetic over integers, decimals, fractions and sqrt(rational):
/// "(1+sqrt(5))/2", "-1/4*sqrt(5) - 1/4", "sqrt(3)/2", "0.125".
Quad parse_quad(std::string_view text);

inline double to_double(double v) { return v; }
inline double to_double(const Quad& q) { return q.to_double(); }
inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace distkit
