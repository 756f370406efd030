#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "distkit/scalar.hpp"

namespace distkit {

/// Dense univariate polynomial, coefficients in ascending degree.
template <class T>
class Polynomial {
 public:
  Polynomial() : coeffs_{T(0L)} {}
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(T(0L));
    trim();
  }

  static Polynomial monomial(std::size_t degree, T coef = T(1L)) {
    std::vector<T> c(degree + 1, T(0L));
    c[degree] = coef;
    return Polynomial(std::move(c));
  }

  /// prod (t - root)
  static Polynomial from_roots(std::span<const T> roots) {
    Polynomial p({T(1L)});
    for (const T& r : roots) p = p * Polynomial({-r, T(1L)});
    return p;
  }

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0L); }
  const T& leading() const { return coeffs_.back(); }

  template <class U>
  U operator()(const U& t) const {
    U acc = U(coeffs_.back());
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * t + U(coeffs_[i]);
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0L));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + b.scaled(T(-1L));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0L));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
  }

  Polynomial scaled(const T& s) const {
    std::vector<T> c = coeffs_;
    for (T& x : c) x = x * s;
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    if constexpr (ScalarTraits<T>::exact) {
      while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
    } else {
      while (coeffs_.size() > 1 && coeffs_.back() == T(0L)) coeffs_.pop_back();
    }
  }

  std::vector<T> coeffs_;
};

}  // namespace distkit
