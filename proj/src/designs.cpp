#include "distkit/designs.hpp"

#include <algorithm>
#include <cmath>

#include "distkit/bounds.hpp"
#include "distkit/kernels.hpp"

namespace distkit::designs {

namespace {

template <class T>
bool is_zero_value(const T& v, double tol) {
  if constexpr (ScalarTraits<T>::exact) {
    return v.is_zero();
  } else {
    return std::fabs(v) <= tol;
  }
}

template <class T>
void require_unit(const Gram<T>& gram, double tol) {
  bool ok = false;
  if constexpr (ScalarTraits<T>::exact) {
    ok = on_unit_sphere(gram);
  } else {
    ok = on_unit_sphere(gram, tol);
  }
  if (!ok) throw GeometryError("not spherical: design checks need unit vectors");
}

template <class T>
InnerSpectrum<T> spectrum_of(const Gram<T>& gram, double tol) {
  if constexpr (ScalarTraits<T>::exact) {
    return inner_spectrum(gram);
  } else {
    return inner_spectrum(gram, tol);
  }
}

template <class T>
std::size_t global_class_count(const Gram<T>& gram, double tol) {
  if constexpr (ScalarTraits<T>::exact) {
    return distance_profile(gram).class_count();
  } else {
    return distance_profile(gram, tol).class_count();
  }
}

template <class T>
AntipodalPairing pairing_of(const Gram<T>& gram, double tol) {
  if constexpr (ScalarTraits<T>::exact) {
    return is_antipodal(gram);
  } else {
    return is_antipodal(gram, tol);
  }
}

template <class T>
T rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return ScalarTraits<T>::lift(r);
}

// Distinct values up to the comparison policy.
template <class T>
std::vector<T> distinct(std::vector<T> values, double tol) {
  std::sort(values.begin(), values.end());
  std::vector<T> out;
  for (const T& v : values) {
    if (out.empty() || !is_zero_value<T>(v - out.back(), tol)) out.push_back(v);
  }
  return out;
}

}  // namespace

template <class T>
std::vector<T> uniform_weights(std::size_t n) {
  return std::vector<T>(n, rational<T>(1, static_cast<long>(n)));
}

template <class T>
WeightedSet<T> make_weighted(Gram<T> gram, std::vector<T> weights, double tol) {
  require_unit(gram, tol);
  if (weights.size() != gram.n) throw std::invalid_argument("weight count does not match point count");
  T sum = ScalarTraits<T>::from_int(0);
  for (const T& w : weights) {
    if (ScalarTraits<T>::sign(w, 0.0) <= 0) throw std::invalid_argument("weights must be positive");
    sum += w;
  }
  if (!is_zero_value<T>(sum - ScalarTraits<T>::from_int(1), tol * static_cast<double>(gram.n))) {
    throw std::invalid_argument("weights must sum to 1");
  }
  return WeightedSet<T>{std::move(gram), std::move(weights)};
}

std::uint64_t design_lower_bound(std::size_t d, std::size_t t) {
  if (t == 0) return 1;
  return t % 2 == 0 ? bounds::fisher(d, t / 2) : bounds::fisher_antipodal(d, (t + 1) / 2);
}

namespace {

template <class T>
MomentReport<T> finish_report(std::vector<T> moments, std::span<const T> weights, std::size_t dim) {
  MomentReport<T> rep;
  rep.strength_checked = moments.size();
  double wsq = 0.0;
  for (const T& w : weights) wsq += to_double(w) * to_double(w);
  bool prefix = true;
  for (std::size_t i = 1; i <= moments.size(); ++i) {
    double thr = 0.0;
    if constexpr (!ScalarTraits<T>::exact) {
      thr = kMomentZero * wsq * gegenbauer::harm_dim(dim, i).get_d();
    }
    const T& m = moments[i - 1];
    bool zero = is_zero_value<T>(m, thr);
    if (ScalarTraits<T>::sign(m, thr) < 0) rep.nonnegative = false;
    rep.vanishes.push_back(zero);
    rep.thresholds.push_back(thr);
    prefix = prefix && zero;
    if (prefix) rep.strength = i;
  }
  rep.moments = std::move(moments);
  return rep;
}

}  // namespace

template <class T>
MomentReport<T> moment_sums(const Gram<T>& gram, std::span<const T> weights, std::size_t t, double tol) {
  require_unit(gram, tol);
  if (t < 1) throw std::invalid_argument("strength must be >= 1");
  if (weights.size() != gram.n) throw std::invalid_argument("weight count does not match point count");
  std::vector<T> moments;
  if constexpr (ScalarTraits<T>::exact) {
    moments.assign(t, Quad(0L));
    for (std::size_t i = 0; i < gram.n; ++i) {
      for (std::size_t j = 0; j < gram.n; ++j) {
        // G_1..G_t at (x_i, x_j) via one recurrence sweep
        const Quad& s = gram.at(i, j);
        Quad ww = weights[i] * weights[j];
        Quad prev(1L);
        Quad cur = Quad(static_cast<long>(gram.dim)) * s;
        moments[0] += ww * cur;
        for (std::size_t l = 1; l < t; ++l) {
          Quad next = (s * cur - Quad(Rational(1) - gegenbauer::lambda(gram.dim, l - 1)) * prev) /
                      Quad(gegenbauer::lambda(gram.dim, l + 1));
          prev = std::move(cur);
          cur = std::move(next);
          moments[l] += ww * cur;
        }
      }
    }
  } else {
    moments = kernels::parallel::moment_sums(gram, weights, t);
  }
  return finish_report<T>(std::move(moments), weights, gram.dim);
}

MomentReport<double> moment_sums_serial(const Gram<double>& gram, std::span<const double> weights,
                                        std::size_t t) {
  return finish_report<double>(kernels::serial::moment_sums(gram, weights, t), weights, gram.dim);
}

template <class T>
DesignVerdict<T> is_weighted_design(const Gram<T>& gram, std::span<const T> weights, std::size_t t, double tol) {
  DesignVerdict<T> v;
  v.report = moment_sums(gram, weights, t, tol);
  v.is_design = v.report.strength >= t;
  v.lower_bound = design_lower_bound(gram.dim, t);
  v.tight = v.is_design && gram.n == v.lower_bound;
  return v;
}

template <class T>
WeightConstruction<T> design_weights(const Gram<T>& gram, std::size_t k, double tol) {
  require_unit(gram, tol);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  InnerSpectrum<T> sp = spectrum_of(gram, tol);
  WeightConstruction<T> out;
  out.k = k;
  out.weight_sum = ScalarTraits<T>::from_int(0);
  const T one = ScalarTraits<T>::from_int(1);
  for (std::size_t x = 0; x < gram.n; ++x) {
    std::vector<T> a = sp.values_at(x);
    if (a.size() > k) {
      throw GeometryError("profile too rich: point " + std::to_string(x) + " sees " +
                          std::to_string(a.size()) + " inner products, more than k");
    }
    Polynomial<T> f = Polynomial<T>::monomial(k - a.size());
    for (const T& alpha : a) {
      f = f * Polynomial<T>({-alpha, one}).scaled(one / (one - alpha));
    }
    auto e = gegenbauer::expand(f, gram.dim);
    const T& w = e.coeffs[k];
    if (ScalarTraits<T>::sign(w, 0.0) <= 0) {
      throw GeometryError("weight construction failed: f_k at point " + std::to_string(x) + " is not positive");
    }
    out.weights.push_back(w);
    out.weight_sum += w;
    out.expansions.push_back(std::move(e));
  }
  out.global_classes = global_class_count(gram, tol);
  out.hypotheses_met = gram.n == bounds::fisher(gram.dim, k);
  if (!out.hypotheses_met) out.notes.push_back("theorem hypotheses not met: |X| != N_d(k)");
  // checked strength 2k+1 so the verdict shows where the design stops
  out.verdict = is_weighted_design<T>(gram, out.weights, 2 * k, tol);
  return out;
}

template <class T>
WeightConstruction<T> design_weights_antipodal(const Gram<T>& gram, std::size_t k, double tol) {
  require_unit(gram, tol);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  AntipodalPairing pairing = pairing_of(gram, tol);
  if (!pairing.antipodal) throw GeometryError("not antipodal: some point has no antipode");
  WeightConstruction<T> out;
  out.k = k;
  out.antipodal = true;
  out.weights.assign(gram.n, ScalarTraits<T>::from_int(0));
  out.weight_sum = ScalarTraits<T>::from_int(0);
  const T one = ScalarTraits<T>::from_int(1);
  const T two = ScalarTraits<T>::from_int(2);
  for (std::size_t y : pairing.half) {
    std::vector<T> squares;
    for (std::size_t z = 0; z < gram.n; ++z) {
      if (z == y || z == pairing.partner[y]) continue;
      squares.push_back(gram.at(y, z) * gram.at(y, z));
    }
    std::vector<T> nonzero;
    for (const T& b : distinct(squares, tol)) {
      if (!is_zero_value<T>(b, tol)) nonzero.push_back(b);
    }
    if (2 * nonzero.size() + 1 > k) {
      throw GeometryError("profile too rich: half-set point " + std::to_string(y) +
                          " has too many squared inner products for k");
    }
    Polynomial<T> f = Polynomial<T>::monomial(k - 1 - 2 * nonzero.size());
    for (const T& b : nonzero) {
      f = f * Polynomial<T>({-b, ScalarTraits<T>::from_int(0), one}).scaled(one / (one - b));
    }
    auto e = gegenbauer::expand(f, gram.dim);
    const T& lead = e.coeffs[k - 1];
    if (ScalarTraits<T>::sign(lead, 0.0) <= 0) {
      throw GeometryError("weight construction failed: f_{k-1} at point " + std::to_string(y) +
                          " is not positive");
    }
    T w = lead / two;
    out.weights[y] = w;
    out.weights[pairing.partner[y]] = w;
    out.weight_sum += w + w;
    out.expansions.push_back(std::move(e));
  }
  out.global_classes = global_class_count(gram, tol);
  out.hypotheses_met = gram.n == bounds::fisher_antipodal(gram.dim, k);
  if (!out.hypotheses_met) out.notes.push_back("theorem hypotheses not met: |X| != N'_d(k)");
  out.verdict = is_weighted_design<T>(gram, out.weights, 2 * k - 1, tol);
  return out;
}

template <class T>
Section<T> tight_section(const Gram<T>& gram, std::span<const T> weights, std::size_t base,
                         SectionClass which, double tol) {
  if (base >= gram.n) throw std::out_of_range("base index out of range");
  if (gram.dim < 3) throw GeometryError("strength mismatch: sections need d >= 3");
  DesignVerdict<T> v = is_weighted_design(gram, weights, 5, tol);
  if (!v.tight) {
    throw GeometryError("strength mismatch: input is not a tight 5-design (verified strength " +
                        std::to_string(v.report.strength) + ", " + std::to_string(gram.n) +
                        " points, tight size " + std::to_string(v.lower_bound) + ")");
  }
  // squared distances from the base, the antipode (distance^2 = 4) excluded
  const T four = ScalarTraits<T>::from_int(4);
  std::vector<T> seen;
  for (std::size_t j = 0; j < gram.n; ++j) {
    if (j == base) continue;
    T s = gram.sq_distance(base, j);
    if (!is_zero_value<T>(s - four, tol)) seen.push_back(s);
  }
  std::vector<T> classes = distinct(seen, tol);
  if (classes.size() != 2) {
    throw GeometryError("strength mismatch: expected two non-antipodal distance classes, found " +
                        std::to_string(classes.size()));
  }
  Section<T> out;
  out.base = base;
  out.distance_sq = which == SectionClass::near ? classes[0] : classes[1];
  for (std::size_t j = 0; j < gram.n; ++j) {
    if (j != base && is_zero_value<T>(gram.sq_distance(base, j) - out.distance_sq, tol)) out.indices.push_back(j);
  }
  Gram<T> sub = gram.subset(out.indices);
  if constexpr (ScalarTraits<T>::exact) {
    out.gram = center_and_normalize(sub).gram;
  } else {
    out.gram = center_and_normalize(sub, tol).gram;
  }
  out.gram.dim = gram.dim - 1;
  out.class_count = global_class_count(out.gram, tol);
  auto w = uniform_weights<T>(out.indices.size());
  out.verdict = is_weighted_design<T>(out.gram, w, 4, tol);
  return out;
}

#define DISTKIT_INSTANTIATE(T)                                                                        \
  template std::vector<T> uniform_weights<T>(std::size_t);                                            \
  template WeightedSet<T> make_weighted<T>(Gram<T>, std::vector<T>, double);                          \
  template MomentReport<T> moment_sums<T>(const Gram<T>&, std::span<const T>, std::size_t, double);   \
  template DesignVerdict<T> is_weighted_design<T>(const Gram<T>&, std::span<const T>, std::size_t,    \
                                                  double);                                            \
  template WeightConstruction<T> design_weights<T>(const Gram<T>&, std::size_t, double);              \
  template WeightConstruction<T> design_weights_antipodal<T>(const Gram<T>&, std::size_t, double);    \
  template Section<T> tight_section<T>(const Gram<T>&, std::span<const T>, std::size_t, SectionClass, \
                                       double);

DISTKIT_INSTANTIATE(double)
DISTKIT_INSTANTIATE(Quad)

#undef DISTKIT_INSTANTIATE

}  // namespace distkit::designs
