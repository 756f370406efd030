#include "distkit/bounds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "distkit/tables.hpp"

namespace distkit::bounds {

namespace {

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::uint64_t to_u64(const Integer& v) {
  if (v < 0 || v > Integer(std::to_string(std::numeric_limits<std::uint64_t>::max()))) {
    throw std::overflow_error("bound does not fit in 64 bits");
  }
  return std::stoull(v.get_str());
}

void check_inner(std::span<const Quad> inner) {
  if (inner.empty()) throw std::invalid_argument("inner-product list is empty");
  for (const Quad& a : inner) {
    if (a < Quad(-1L) || a >= Quad(1L)) {
      throw std::invalid_argument("inner product " + a.str() + " outside [-1, 1)");
    }
  }
  for (std::size_t i = 0; i < inner.size(); ++i)
    for (std::size_t j = i + 1; j < inner.size(); ++j)
      if (inner[i] == inner[j]) throw std::invalid_argument("inner product " + inner[i].str() + " listed twice");
}

std::vector<CoefficientEvidence> evidence_for(const gegenbauer::Expansion<Quad>& e) {
  std::vector<CoefficientEvidence> out;
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
    CoefficientEvidence ev;
    ev.index = i;
    ev.coeff = e.coeffs[i];
    ev.sign = e.coeffs[i].sign();
    ev.harm_dim = gegenbauer::harm_dim(e.dim, i);
    out.push_back(std::move(ev));
  }
  return out;
}

BoundCertificate integer_certificate(BoundKind kind, std::size_t d, std::size_t k, const Integer& v) {
  BoundCertificate c;
  c.kind = kind;
  c.dim = d;
  c.k = k;
  c.value = Quad(Rational(v));
  c.floor = v;
  return c;
}

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::fisher: return "fisher";
    case BoundKind::fisher_antipodal: return "fisher-antipodal";
    case BoundKind::lp: return "lp";
    case BoundKind::positive_coeff: return "positive-coeff";
    case BoundKind::positive_coeff_antipodal: return "positive-coeff-antipodal";
    case BoundKind::musin: return "musin";
    case BoundKind::lds_recursion: return "lds-recursion";
  }
  return "unknown";
}

std::uint64_t fisher(std::size_t d, std::size_t k) {
  if (d < 1 || k < 1) throw std::invalid_argument("fisher bound needs d >= 1 and k >= 1");
  return to_u64(binomial(d + k - 1, k) + binomial(d + k - 2, k - 1));
}

std::uint64_t fisher_antipodal(std::size_t d, std::size_t k) {
  if (d < 1 || k < 1) throw std::invalid_argument("fisher bound needs d >= 1 and k >= 1");
  return to_u64(2 * binomial(d + k - 2, k - 1));
}

BoundCertificate fisher_certificate(std::size_t d, std::size_t k) {
  return integer_certificate(BoundKind::fisher, d, k, Integer(std::to_string(fisher(d, k))));
}

BoundCertificate fisher_antipodal_certificate(std::size_t d, std::size_t k) {
  return integer_certificate(BoundKind::fisher_antipodal, d, k,
                             Integer(std::to_string(fisher_antipodal(d, k))));
}

Polynomial<Quad> annihilator(std::span<const Quad> inner) { return Polynomial<Quad>::from_roots(inner); }

BoundCertificate lp_bound(std::span<const Quad> inner, std::size_t d) {
  check_inner(inner);
  Polynomial<Quad> f = annihilator(inner);
  auto e = gegenbauer::expand(f, d);
  BoundCertificate c;
  c.kind = BoundKind::lp;
  c.dim = d;
  c.k = inner.size();
  c.inner.assign(inner.begin(), inner.end());
  c.evidence = evidence_for(e);
  if (e.coeffs[0].sign() <= 0) {
    c.applicable = false;
    c.notes.push_back("f_0 = " + e.coeffs[0].str() + " is not positive");
  }
  for (auto& ev : c.evidence) {
    ev.counted = true;
    if (ev.index > 0 && ev.sign < 0) {
      c.applicable = false;
      c.notes.push_back("f_" + std::to_string(ev.index) + " = " + ev.coeff.str() + " is negative");
    }
  }
  if (c.applicable) {
    c.value = f(Quad(1L)) / e.coeffs[0];
    c.floor = c.value.floor();
  } else {
    for (auto& ev : c.evidence) ev.counted = false;
  }
  return c;
}

BoundCertificate positive_coeff_bound(std::span<const Quad> inner, std::size_t d) {
  check_inner(inner);
  auto e = gegenbauer::expand(annihilator(inner), d);
  BoundCertificate c;
  c.kind = BoundKind::positive_coeff;
  c.dim = d;
  c.k = inner.size();
  c.inner.assign(inner.begin(), inner.end());
  c.evidence = evidence_for(e);
  Integer total = 0;
  for (auto& ev : c.evidence) {
    ev.counted = ev.sign > 0;
    if (ev.counted) total += ev.harm_dim;
  }
  c.value = Quad(Rational(total));
  c.floor = total;
  return c;
}

BoundCertificate positive_coeff_bound_antipodal(std::span<const Quad> inner, std::size_t d,
                                                std::size_t k) {
  std::vector<Quad> kept;
  bool dropped = false;
  for (const Quad& a : inner) {
    if (a == Quad(-1L)) {
      dropped = true;
    } else {
      kept.push_back(a);
    }
  }
  if (k < 2) throw std::invalid_argument("antipodal bound needs k >= 2");
  if (kept.size() != k - 1) {
    throw std::invalid_argument("antipodal k-distance set needs exactly k-1 inner products besides -1");
  }
  check_inner(kept);
  auto e = gegenbauer::expand(annihilator(kept), d);
  BoundCertificate c;
  c.kind = BoundKind::positive_coeff_antipodal;
  c.dim = d;
  c.k = k;
  c.inner = kept;
  if (dropped) c.notes.push_back("inner product -1 excluded");
  c.evidence = evidence_for(e);
  Integer total = 0;
  for (auto& ev : c.evidence) {
    if (ev.index % 2 == k % 2 && ev.sign != 0) {
      c.notes.push_back("parity violation: f_" + std::to_string(ev.index) + " = " + ev.coeff.str() +
                        " should vanish");
    }
    ev.counted = ev.sign > 0;
    if (ev.counted) total += ev.harm_dim;
  }
  c.value = Quad(Rational(2 * total));
  c.floor = 2 * total;
  return c;
}

MusinForm musin_coefficients(const Quad& alpha, const Quad& beta, std::size_t d) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
  Rational inv_d(1, static_cast<long>(d));
  Rational f2(2, static_cast<long>(d * (d + 2)));
  f2.canonicalize();
  return MusinForm{alpha * beta + Quad(inv_d), -(alpha + beta) * Quad(inv_d), Quad(f2)};
}

BoundCertificate musin_bound(const Quad& alpha, const Quad& beta, std::size_t d) {
  const Quad pair[] = {alpha, beta};
  check_inner(pair);
  MusinForm m = musin_coefficients(alpha, beta, d);
  BoundCertificate c;
  c.kind = BoundKind::musin;
  c.dim = d;
  c.k = 2;
  c.inner = {alpha, beta};
  const Quad coeffs[] = {m.f0, m.f1, m.f2};
  for (std::size_t i = 0; i < 3; ++i) {
    c.evidence.push_back(
        CoefficientEvidence{i, coeffs[i], coeffs[i].sign(), gegenbauer::harm_dim(d, i), i != 1});
  }
  if ((alpha + beta).sign() < 0) {
    c.applicable = false;
    c.notes.push_back("alpha + beta < 0");
    return c;
  }
  Integer v = binomial(d + 1, 2);
  c.value = Quad(Rational(v));
  c.floor = v;
  return c;
}

LdsCertificate lds_recursion(std::size_t d) {
  if (d < 2) throw std::invalid_argument("lds_recursion needs d >= 2");
  const auto ds_star = tables::known_tables("DSstar2");
  const auto lds = tables::known_tables("LDS2");
  const auto ds = tables::known_tables("DS2");
  LdsCertificate cert;
  cert.dim = d;
  for (std::size_t i = 1; i + 1 <= d; ++i) {
    LdsTerm term;
    term.i = i;
    if (auto e = ds_star.lookup(i)) {
      term.ds_star = e->hi;
    } else {
      term.ds_star = static_cast<int>(fisher(i, 2));
      term.ds_star_known = false;
      cert.substitutions.push_back("DS*_" + std::to_string(i) + "(2) <= N_" + std::to_string(i) + "(2)");
    }
    const std::size_t j = d - i;
    if (auto e = lds.lookup(j)) {
      term.lds = e->hi;
    } else {
      term.lds = static_cast<int>((j + 2) * (j + 1) / 2);
      term.lds_known = false;
      cert.substitutions.push_back("LDS_" + std::to_string(j) + "(2) <= C(" + std::to_string(j + 2) + ",2)");
    }
    term.sum = term.ds_star + term.lds;
    cert.f = std::max(cert.f, term.sum);
    cert.terms.push_back(term);
  }
  if (auto e = ds.lookup(d)) {
    cert.ds = e->hi;
  } else {
    cert.ds = static_cast<int>((d + 2) * (d + 1) / 2);
    cert.ds_known = false;
    cert.substitutions.push_back("DS_" + std::to_string(d) + "(2) <= C(" + std::to_string(d + 2) + ",2)");
  }
  cert.cap = std::max(cert.ds, cert.f);
  cert.width_bound = static_cast<int>(d * (d + 1) / 2 + 2);
  cert.width_holds = cert.f <= cert.width_bound;
  return cert;
}

}  // namespace distkit::bounds
