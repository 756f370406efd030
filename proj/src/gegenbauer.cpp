#include "distkit/gegenbauer.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace distkit::gegenbauer {

namespace {

void check_dim(std::size_t d) {
  if (d < 2) throw std::invalid_argument("Gegenbauer dimension must be >= 2");
}

template <class T>
T lift(const Quad& q) {
  if constexpr (ScalarTraits<T>::exact) {
    return q;
  } else {
    return q.to_double();
  }
}

template <class T>
T lift_rational(const Rational& r) {
  return ScalarTraits<T>::lift(r);
}

class PolynomialCache {
 public:
  const Polynomial<Quad>& get(std::size_t d, std::size_t l) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find({d, l});
      if (it != table_.end()) return *it->second;
    }
    std::unique_lock lock(mutex_);
    auto& rows = series_[d];
    if (rows.empty()) {
      rows.push_back(Polynomial<Quad>({Quad(1L)}));
      rows.push_back(Polynomial<Quad>({Quad(0L), Quad(static_cast<long>(d))}));
    }
    const Polynomial<Quad> t({Quad(0L), Quad(1L)});
    while (rows.size() <= l) {
      std::size_t m = rows.size() - 1;  // build G_{m+1}
      Polynomial<Quad> next =
          (t * rows[m] - rows[m - 1].scaled(Quad(Rational(1) - lambda(d, m - 1))))
              .scaled(Quad(Rational(1) / lambda(d, m + 1)));
      rows.push_back(std::move(next));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto key = std::make_pair(d, i);
      if (table_.find(key) == table_.end()) table_[key] = std::make_unique<Polynomial<Quad>>(rows[i]);
    }
    return *table_[{d, l}];
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::size_t, std::vector<Polynomial<Quad>>> series_;
  // stable addresses: references handed out stay valid as the cache grows
  std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<Polynomial<Quad>>> table_;
};

PolynomialCache& cache() {
  static PolynomialCache instance;
  return instance;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

Rational lambda(std::size_t d, std::size_t l) {
  check_dim(d);
  if (l == 0) return Rational(0);
  Rational r(static_cast<long>(l), static_cast<long>(d + 2 * l - 2));
  r.canonicalize();
  return r;
}

const Polynomial<Quad>& polynomial(std::size_t d, std::size_t l) {
  check_dim(d);
  if (l > kMaxDegree) throw std::invalid_argument("Gegenbauer degree exceeds the supported maximum");
  return cache().get(d, l);
}

template <class T>
T eval(std::size_t d, std::size_t l, const T& t) {
  check_dim(d);
  T prev = ScalarTraits<T>::from_int(1);
  if (l == 0) return prev;
  T cur = ScalarTraits<T>::from_int(static_cast<long>(d)) * t;
  for (std::size_t m = 1; m < l; ++m) {
    T next = (t * cur - lift_rational<T>(Rational(1) - lambda(d, m - 1)) * prev) / lift_rational<T>(lambda(d, m + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

template double eval<double>(std::size_t, std::size_t, const double&);
template Quad eval<Quad>(std::size_t, std::size_t, const Quad&);

Integer harm_dim(std::size_t d, std::size_t l) {
  Quad v = eval<Quad>(d, l, Quad(1L));
  if (!v.is_rational() || v.rational_part().get_den() != 1) {
    throw std::logic_error("G_l(1) is not an integer");
  }
  return v.rational_part().get_num();
}

Integer harm_dim_closed_form(std::size_t d, std::size_t l) {
  check_dim(d);
  const auto dd = static_cast<long>(d);
  const auto ll = static_cast<long>(l);
  return binomial(dd + ll - 1, ll) - binomial(dd + ll - 3, ll - 2);
}

template <class T>
Polynomial<T> Expansion<T>::reconstruct() const {
  Polynomial<T> out({ScalarTraits<T>::from_int(0)});
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Polynomial<Quad>& g = polynomial(dim, i);
    std::vector<T> c;
    for (const Quad& q : g.coeffs()) c.push_back(lift<T>(q) * coeffs[i]);
    out = out + Polynomial<T>(std::move(c));
  }
  return out;
}

template <class T>
Expansion<T> expand(const Polynomial<T>& poly, std::size_t d) {
  check_dim(d);
  const std::size_t deg = poly.degree();
  if (deg > kMaxDegree) throw std::invalid_argument("polynomial degree exceeds the supported maximum");
  std::vector<T> rest = poly.coeffs();
  Expansion<T> out;
  out.dim = d;
  out.coeffs.assign(deg + 1, ScalarTraits<T>::from_int(0));
  for (std::size_t i = deg + 1; i-- > 0;) {
    const Polynomial<Quad>& g = polynomial(d, i);
    T f = rest[i] / lift<T>(g.leading());
    out.coeffs[i] = f;
    for (std::size_t j = 0; j <= i; ++j) rest[j] -= f * lift<T>(g[j]);
  }
  return out;
}

template struct Expansion<double>;
template struct Expansion<Quad>;
template Expansion<double> expand<double>(const Polynomial<double>&, std::size_t);
template Expansion<Quad> expand<Quad>(const Polynomial<Quad>&, std::size_t);

LinearizationTable linearization(std::size_t d, std::size_t k, std::size_t l) {
  Polynomial<Quad> prod = polynomial(d, k) * polynomial(d, l);
  Expansion<Quad> e = expand(prod, d);
  LinearizationTable t{d, k, l, {}};
  for (const Quad& q : e.coeffs) {
    if (!q.is_rational()) throw std::logic_error("linearization coefficient is irrational");
    t.q.push_back(q.rational_part());
  }
  return t;
}

std::vector<std::string> linearization_violations(const LinearizationTable& table) {
  std::vector<std::string> out;
  const std::size_t k = table.k;
  const std::size_t l = table.l;
  const std::size_t lo = k > l ? k - l : l - k;
  for (std::size_t i = 0; i < table.q.size(); ++i) {
    const Rational& q = table.q[i];
    std::string where = "q_" + std::to_string(i) + "(" + std::to_string(k) + "," + std::to_string(l) +
                        ") at d=" + std::to_string(table.dim);
    if (q < 0) out.push_back(where + " is negative");
    bool support = i >= lo && i <= k + l && (i % 2) == ((k + l) % 2);
    if (q != 0 && !support) out.push_back(where + " is nonzero outside the support");
    // the ends of the support are always hit; interior terms vanish on the circle
    if (q == 0 && (i == lo || i == k + l)) out.push_back(where + " vanishes at an end of the support");
  }
  Rational expect0 = k == l ? Rational(harm_dim(table.dim, k)) : Rational(0);
  if (table.q.empty() || table.q[0] != expect0) out.push_back("q_0 differs from h_k delta_{k,l}");
  return out;
}

}  // namespace distkit::gegenbauer
