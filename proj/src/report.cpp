#include "distkit/report.hpp"

#ifndef DISTKIT_VERSION
#define DISTKIT_VERSION "0.0.0"
#endif

namespace distkit::report {

namespace {

template <class T>
Json profile_json(const DistanceProfile<T>& p) {
  Json j;
  j["n"] = p.n;
  j["sq_classes"] = values(p.classes);
  if constexpr (ScalarTraits<T>::exact) {
    // distances themselves when the square root stays in the field
    Json d = Json::array();
    for (const Quad& c : p.classes) {
      auto r = c.try_sqrt();
      d.push_back(r ? r->str() : "sqrt(" + c.str() + ")");
    }
    j["distances"] = d;
  } else {
    Json d = Json::array();
    for (double c : p.classes) d.push_back(std::sqrt(c));
    j["distances"] = d;
  }
  j["multiplicities"] = p.multiplicities;
  Json per = Json::array();
  for (const auto& row : p.per_point) per.push_back(row.size());
  j["per_point_counts"] = per;
  j["class_count"] = p.class_count();
  j["max_local"] = p.max_local();
  j["total_local"] = p.total_local();
  j["proper_locally"] = p.is_proper_locally_k(p.max_local());
  return j;
}

template <class T>
Json spectrum_json(const InnerSpectrum<T>& s) {
  Json j;
  j["inner_products"] = values(s.classes);
  Json per = Json::array();
  for (const auto& row : s.per_point) per.push_back(row.size());
  j["per_point_counts"] = per;
  return j;
}

template <class T>
Json moments_json(const designs::MomentReport<T>& r) {
  Json j;
  j["strength_checked"] = r.strength_checked;
  Json m = Json::array();
  for (std::size_t i = 0; i < r.moments.size(); ++i) {
    Json e;
    e["i"] = i + 1;
    e["M"] = value(r.moments[i]);
    e["vanishes"] = static_cast<bool>(r.vanishes[i]);
    if constexpr (!ScalarTraits<T>::exact) e["threshold"] = r.thresholds[i];
    m.push_back(e);
  }
  j["moments"] = m;
  j["strength"] = r.strength;
  j["nonnegative"] = r.nonnegative;
  return j;
}

template <class T>
Json verdict_json(const designs::DesignVerdict<T>& v) {
  Json j = moments_json(v.report);
  j["is_design"] = v.is_design;
  j["lower_bound"] = v.lower_bound;
  j["tight"] = v.tight;
  return j;
}

template <class T>
Json weights_json(const designs::WeightConstruction<T>& w) {
  Json j;
  j["k"] = w.k;
  j["antipodal"] = w.antipodal;
  j["weights"] = values(w.weights);
  j["weight_sum"] = value(w.weight_sum);
  j["hypotheses_met"] = w.hypotheses_met;
  j["global_classes"] = w.global_classes;
  j["notes"] = w.notes;
  j["design"] = verdict_json(w.verdict);
  return j;
}

template <class T>
Json section_json(const designs::Section<T>& s) {
  Json j;
  j["base"] = s.base;
  j["indices"] = s.indices;
  j["distance_sq"] = value(s.distance_sq);
  j["size"] = s.indices.size();
  j["dim"] = s.gram.dim;
  j["class_count"] = s.class_count;
  j["design"] = verdict_json(s.verdict);
  return j;
}

}  // namespace

const char* version() { return DISTKIT_VERSION; }

Json envelope(const std::string& command, const std::string& digest, const Mode& mode,
              const std::vector<std::string>& basis, const std::string& status, Json results) {
  Json j;
  j["tool"] = "distkit";
  j["version"] = version();
  j["command"] = command;
  j["input_digest"] = "fnv1a64:" + digest;
  Json m;
  m["arithmetic"] = mode.exact ? "exact" : "float";
  if (!mode.exact) m["tol"] = mode.tol;
  j["mode"] = m;
  j["basis"] = basis;
  j["status"] = status;
  j["results"] = std::move(results);
  return j;
}

Json value(double v) { return v; }
Json value(const Quad& v) { return v.str(); }
Json value(const Rational& v) { return format_rational(v); }
Json value(const Integer& v) { return v.get_str(); }

Json to_json(const DistanceProfile<double>& p) { return profile_json(p); }
Json to_json(const DistanceProfile<Quad>& p) { return profile_json(p); }
Json to_json(const InnerSpectrum<double>& s) { return spectrum_json(s); }
Json to_json(const InnerSpectrum<Quad>& s) { return spectrum_json(s); }

Json to_json(const bounds::BoundCertificate& c) {
  Json j;
  j["kind"] = bounds::to_string(c.kind);
  j["applicable"] = c.applicable;
  j["dim"] = c.dim;
  j["k"] = c.k;
  if (!c.inner.empty()) j["inner"] = values(c.inner);
  if (c.applicable) {
    j["value"] = c.value.str();
    j["bound"] = c.floor.get_str();
  }
  if (!c.evidence.empty()) {
    Json ev = Json::array();
    for (const auto& e : c.evidence) {
      Json x;
      x["i"] = e.index;
      x["f"] = e.coeff.str();
      x["sign"] = e.sign;
      x["h"] = e.harm_dim.get_str();
      x["counted"] = e.counted;
      ev.push_back(x);
    }
    j["coefficients"] = ev;
  }
  j["notes"] = c.notes;
  return j;
}

Json to_json(const bounds::LdsCertificate& c) {
  Json j;
  j["dim"] = c.dim;
  j["f"] = c.f;
  Json terms = Json::array();
  for (const auto& t : c.terms) {
    Json x;
    x["i"] = t.i;
    x["ds_star"] = t.ds_star;
    x["ds_star_known"] = t.ds_star_known;
    x["lds"] = t.lds;
    x["lds_known"] = t.lds_known;
    x["sum"] = t.sum;
    terms.push_back(x);
  }
  j["terms"] = terms;
  j["ds"] = c.ds;
  j["ds_known"] = c.ds_known;
  j["cap"] = c.cap;
  j["width_bound"] = c.width_bound;
  j["width_holds"] = c.width_holds;
  j["substitutions"] = c.substitutions;
  return j;
}

Json to_json(const designs::MomentReport<double>& r) { return moments_json(r); }
Json to_json(const designs::MomentReport<Quad>& r) { return moments_json(r); }
Json to_json(const designs::DesignVerdict<double>& v) { return verdict_json(v); }
Json to_json(const designs::DesignVerdict<Quad>& v) { return verdict_json(v); }
Json to_json(const designs::WeightConstruction<double>& w) { return weights_json(w); }
Json to_json(const designs::WeightConstruction<Quad>& w) { return weights_json(w); }
Json to_json(const designs::Section<double>& s) { return section_json(s); }
Json to_json(const designs::Section<Quad>& s) { return section_json(s); }

Json to_json(const catalog::Verification& v) {
  Json j;
  j["entry"] = v.label;
  j["exact"] = v.exact;
  j["ok"] = v.ok();
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    Json x;
    x["field"] = c.field;
    x["expected"] = c.expected;
    x["observed"] = c.observed;
    x["ok"] = c.ok;
    checks.push_back(x);
  }
  j["checks"] = checks;
  return j;
}

Json to_json(const search::SearchReport& r) {
  Json j;
  j["claim"] = r.claim;
  j["verdict"] = r.verdict;
  if (!r.decompositions.empty() || r.claim == "decomposition") {
    j["max_local"] = r.min_local;
    Json ds = Json::array();
    for (const auto& d : r.decompositions) {
      Json x;
      x["subset"] = d.subset;
      x["subset_dim"] = d.subset_dim;
      x["remainder_size"] = d.remainder_size;
      x["remainder_dim"] = d.remainder_dim;
      x["dimension_ok"] = d.dimension_ok;
      x["locus_ok"] = d.locus_ok;
      x["ds_star"] = d.ds_star;
      x["lds"] = d.lds;
      x["cardinality_ok"] = d.cardinality_ok;
      ds.push_back(x);
    }
    j["decompositions"] = ds;
    return j;
  }
  j["space"] = r.space;
  j["extent"] = r.extent;
  j["step"] = r.step;
  j["merge_tol"] = r.merge_tol;
  j["cells"] = r.cells;
  j["min_max_local"] = r.min_local;
  j["best_score"] = r.best_score;
  j["best_params"] = r.best_params;
  j["margin"] = r.margin;
  Json subs = Json::array();
  for (const auto& s : r.sub_checks) {
    Json x;
    x["name"] = s.name;
    x["passed"] = s.passed;
    x["detail"] = s.detail;
    subs.push_back(x);
  }
  j["sub_checks"] = subs;
  return j;
}

Json to_json(const tables::KnownTable& t) {
  Json j;
  j["family"] = t.family;
  j["description"] = t.description;
  j["reference"] = t.citation;
  Json es = Json::array();
  for (const auto& e : t.entries) {
    Json x;
    x["key"] = e.key;
    if (e.exact()) {
      x["value"] = e.lo;
    } else {
      x["value"] = Json::array({e.lo, e.hi});
    }
    if (!e.note.empty()) x["note"] = e.note;
    es.push_back(x);
  }
  j["entries"] = es;
  j["rendered"] = tables::render(t);
  return j;
}

Json to_json(const gegenbauer::Expansion<Quad>& e) {
  Json j;
  j["dim"] = e.dim;
  j["coefficients"] = values(e.coeffs);
  return j;
}

Json to_json(const gegenbauer::LinearizationTable& t) {
  Json j;
  j["dim"] = t.dim;
  j["k"] = t.k;
  j["l"] = t.l;
  j["q"] = values(t.q);
  j["violations"] = gegenbauer::linearization_violations(t);
  return j;
}

}  // namespace distkit::report
