#include "distkit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "distkit/io.hpp"
#include "distkit/report.hpp"

namespace distkit::cli {

namespace {

using report::Json;

struct Outcome {
  std::string status = "ok";
  std::vector<std::string> basis;
  Json results;
  std::string digest_input;
  std::optional<std::string> raw_text;  // emitted verbatim instead of a JSON record
};

struct Common {
  bool exact = false;
  std::optional<double> tol;
  std::string out_path;
  bool normalize = false;
};

std::vector<Quad> parse_list(const std::string& text, const std::string& field) {
  std::vector<Quad> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(parse_quad(tok));
    } catch (const std::exception& e) {
      throw io::InputError("field '" + field + "': cannot parse '" + tok + "' (" + e.what() + ")");
    }
  }
  if (out.empty()) throw io::InputError("field '" + field + "': empty list");
  return out;
}

io::PointFile load(const std::string& path, const Common& c) {
  io::PointFile pf;
  if (path == "-") {
    pf = io::read_points(std::cin, "<stdin>", c.tol);
  } else {
    pf = io::read_points_file(path, c.tol);
  }
  if (c.exact && !pf.exact_ok) {
    throw io::InputError(path + ": --exact requested but the input is not representable in one quadratic field: " +
                         pf.exact_failure);
  }
  return pf;
}

report::Mode mode_of(const Common& c, double tol) { return report::Mode{c.exact, tol}; }

// Unit-sphere Gram in the requested arithmetic, normalising first on request.
template <class T>
Gram<T> unit_gram(const io::PointFile& pf, const Common& c) {
  Gram<T> g;
  if constexpr (ScalarTraits<T>::exact) {
    g = *pf.config.exact;
    if (c.normalize) g = center_and_normalize(g).gram;
  } else {
    g = pf.config.exact && pf.from_gram ? to_float(*pf.config.exact) : gram_of(pf.config.points);
    if (c.normalize) g = center_and_normalize(g, pf.tol).gram;
  }
  if (c.normalize) g.dim = span_dim(pf.config.points);
  return g;
}

template <class T>
std::vector<T> weights_for(const std::string& path, std::size_t n, std::string& raw) {
  if (path.empty()) return designs::uniform_weights<T>(n);
  io::WeightsFile wf = io::read_weights_file(path);
  raw = wf.raw;
  if (wf.exact.size() != n) {
    throw io::InputError(path + ": " + std::to_string(wf.exact.size()) + " weights for " + std::to_string(n) + " points");
  }
  if constexpr (ScalarTraits<T>::exact) {
    return wf.exact;
  } else {
    return wf.values;
  }
}

// ---- subcommands -------------------------------------------------------------

Outcome analyze(const std::string& path, const Common& c) {
  io::PointFile pf = load(path, c);
  Outcome o;
  o.digest_input = pf.raw;
  o.basis = {"distance classification", "per-point distance sets"};
  Json r;
  r["n"] = pf.config.points.size();
  r["dim"] = pf.config.points.dim();
  r["span_dim"] = span_dim(pf.config.points);
  bool spherical = false;
  if (c.exact) {
    const ExactGram& g = *pf.config.exact;
    r["profile"] = report::to_json(distance_profile(g));
    try {
      auto norm = center_and_normalize(g);
      spherical = true;
      r["spherical"] = true;
      r["radius_sq"] = norm.radius_sq.str();
      r["inner"] = report::to_json(inner_spectrum(norm.gram));
      r["antipodal"] = is_antipodal(norm.gram).antipodal;
    } catch (const GeometryError&) {
    }
  } else {
    Gram<double> g = pf.from_gram ? to_float(*pf.config.exact) : gram_of(pf.config.points);
    r["profile"] = report::to_json(distance_profile(g, pf.tol));
    try {
      auto norm = center_and_normalize(g, pf.tol);
      spherical = true;
      r["spherical"] = true;
      r["radius_sq"] = norm.radius_sq;
      r["inner"] = report::to_json(inner_spectrum(norm.gram, pf.tol));
      r["antipodal"] = is_antipodal(norm.gram, pf.tol).antipodal;
    } catch (const GeometryError&) {
    }
  }
  if (!spherical) r["spherical"] = false;
  o.results = r;
  return o;
}

struct BoundsArgs {
  std::size_t dim = 0;
  std::size_t k = 0;
  std::string inner;
  bool antipodal = false;
  bool lds = false;
};

Outcome bounds_cmd(const BoundsArgs& a) {
  Outcome o;
  Json r;
  if (a.dim == 0) throw io::InputError("field 'dim': required");
  if (a.k > 0) {
    r["fisher"] = report::to_json(bounds::fisher_certificate(a.dim, a.k));
    r["fisher_antipodal"] = report::to_json(bounds::fisher_antipodal_certificate(a.dim, a.k));
    o.basis.push_back("Fisher-type bound");
  }
  if (!a.inner.empty()) {
    auto inner = parse_list(a.inner, "inner");
    if (a.antipodal) {
      std::size_t k = a.k > 0 ? a.k : inner.size();
      r["positive_coeff_antipodal"] = report::to_json(bounds::positive_coeff_bound_antipodal(inner, a.dim, k));
      o.basis.push_back("antipodal positive-coefficient bound");
    } else {
      r["lp"] = report::to_json(bounds::lp_bound(inner, a.dim));
      r["positive_coeff"] = report::to_json(bounds::positive_coeff_bound(inner, a.dim));
      o.basis.insert(o.basis.end(), {"linear programming bound", "positive-coefficient bound"});
      if (inner.size() == 2) {
        r["two_distance"] = report::to_json(bounds::musin_bound(inner[0], inner[1], a.dim));
        o.basis.push_back("two-distance closed form");
      }
    }
  }
  if (a.lds) {
    r["lds_recursion"] = report::to_json(bounds::lds_recursion(a.dim));
    o.basis.push_back("saturated-subset recursion");
  }
  if (r.empty()) throw io::InputError("bounds: give --k, --inner or --lds");
  o.results = r;
  return o;
}

template <class T>
Outcome design_check(const io::PointFile& pf, const Common& c, std::size_t t, const std::string& wpath) {
  Outcome o;
  Gram<T> g = unit_gram<T>(pf, c);
  std::string wraw;
  auto w = weights_for<T>(wpath, g.n, wraw);
  auto ws = designs::make_weighted<T>(g, w, pf.tol);
  o.digest_input = pf.raw + wraw;
  o.basis = {"addition-formula moment sums"};
  o.results = report::to_json(designs::is_weighted_design<T>(ws.gram, ws.weights, t, pf.tol));
  return o;
}

template <class T>
Outcome weights_cmd(const io::PointFile& pf, const Common& c, std::size_t k, bool antipodal) {
  Outcome o;
  Gram<T> g = unit_gram<T>(pf, c);
  o.digest_input = pf.raw;
  o.basis = {antipodal ? "antipodal annihilator weights" : "annihilator weights", "addition-formula moment sums"};
  auto w = antipodal ? designs::design_weights_antipodal<T>(g, k, pf.tol) : designs::design_weights<T>(g, k, pf.tol);
  o.results = report::to_json(w);
  return o;
}

template <class T>
Outcome section_cmd(const io::PointFile& pf, const Common& c, std::size_t base, const std::string& cls,
                    const std::string& wpath) {
  Outcome o;
  Gram<T> g = unit_gram<T>(pf, c);
  std::string wraw;
  auto w = weights_for<T>(wpath, g.n, wraw);
  o.digest_input = pf.raw + wraw;
  o.basis = {"tight design sections"};
  designs::SectionClass which;
  if (cls == "near") {
    which = designs::SectionClass::near;
  } else if (cls == "far") {
    which = designs::SectionClass::far;
  } else {
    throw io::InputError("field 'class': expected near or far, got '" + cls + "'");
  }
  o.results = report::to_json(designs::tight_section<T>(g, w, base, which, pf.tol));
  return o;
}

catalog::Params parse_params(const std::vector<std::string>& kv) {
  catalog::Params p;
  for (const auto& s : kv) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw io::InputError("field 'param': expected k=v, got '" + s + "'");
    p[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return p;
}

Outcome catalog_verify(const std::string& name, const catalog::Params& params) {
  Outcome o;
  o.basis = {"catalog expected profiles"};
  std::vector<catalog::CatalogEntry> entries;
  if (name == "all") {
    entries = catalog::standard_suite();
  } else {
    entries.push_back(catalog::construct(name, params));
  }
  Json list = Json::array();
  std::size_t bad = 0;
  for (const auto& e : entries) {
    auto v = catalog::verify(e);
    bad += !v.ok();
    list.push_back(report::to_json(v));
  }
  o.results["entries"] = list;
  o.results["mismatches"] = bad;
  if (bad > 0) o.status = "mismatch";
  return o;
}

Outcome tables_cmd(const std::vector<std::string>& fams) {
  Outcome o;
  o.basis = {"shipped tables"};
  Json list = Json::array();
  for (const auto& f : fams.empty() ? tables::families() : fams) list.push_back(report::to_json(tables::known_tables(f)));
  o.results["tables"] = list;
  return o;
}

search::SearchConfig load_search_config(const std::string& path, search::SearchConfig cfg) {
  std::ifstream f(path);
  if (!f) throw io::InputError(path + ": cannot open file");
  Json j;
  try {
    j = Json::parse(f);
  } catch (const std::exception& e) {
    throw io::InputError(path + ": invalid JSON (" + e.what() + ")");
  }
  for (const auto& [key, ptr] : std::initializer_list<std::pair<const char*, double*>>{
           {"extent", &cfg.extent}, {"step", &cfg.step}, {"merge_tol", &cfg.merge_tol}}) {
    if (j.contains(key)) {
      if (!j[key].is_number()) throw io::InputError(path + ": field '" + key + "': expected a number");
      *ptr = j[key].get<double>();
    }
  }
  return cfg;
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"distkit: distance sets, spherical designs and their bounds", "distkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", report::version());
  Common c;
  double tol_value = 0.0;
  auto add_common = [&](CLI::App* sub, bool numeric) {
    sub->add_option("--out", c.out_path, "write the record to a file instead of stdout");
    if (numeric) {
      sub->add_flag("--exact", c.exact, "quadratic-field arithmetic; fails if the input is not representable");
      sub->add_option("--tol", tol_value, "relative comparison tolerance")->check(CLI::Range(1e-300, 1e-3));
    }
  };

  std::function<Outcome()> action;

  std::string path;
  auto* analyze_cmd = app.add_subcommand("analyze", "distance profile, sphericity and antipodality");
  analyze_cmd->add_option("file", path, "point or Gram file ('-' for stdin)")->required();
  add_common(analyze_cmd, true);
  analyze_cmd->callback([&] { action = [&] { return analyze(path, c); }; });

  BoundsArgs ba;
  auto* bounds_sub = app.add_subcommand("bounds", "cardinality bounds");
  bounds_sub->add_option("--dim", ba.dim, "dimension d")->required();
  bounds_sub->add_option("--k", ba.k, "number of distances k");
  bounds_sub->add_option("--inner", ba.inner, "comma-separated inner products");
  bounds_sub->add_flag("--antipodal", ba.antipodal, "antipodal positive-coefficient bound");
  bounds_sub->add_flag("--lds", ba.lds, "locally two-distance recursion");
  add_common(bounds_sub, false);
  bounds_sub->callback([&] { action = [&] { return bounds_cmd(ba); }; });

  std::size_t strength = 0;
  std::string wpath;
  auto* design_sub = app.add_subcommand("design-check", "weighted spherical design test");
  design_sub->add_option("file", path, "point or Gram file")->required();
  design_sub->add_option("--strength", strength, "strength t")->required()->check(CLI::Range(1, 32));
  design_sub->add_option("--weights", wpath, "weights file (default uniform)");
  design_sub->add_flag("--normalize", c.normalize, "centre and scale onto the unit sphere first");
  add_common(design_sub, true);

  std::size_t k = 0;
  bool antipodal = false;
  auto* weights_sub = app.add_subcommand("weights", "annihilator weights of a locally k-distance set");
  weights_sub->add_option("file", path, "point or Gram file")->required();
  weights_sub->add_option("--k", k, "k")->required()->check(CLI::Range(1, 16));
  weights_sub->add_flag("--antipodal", antipodal, "antipodal construction");
  weights_sub->add_flag("--normalize", c.normalize, "centre and scale onto the unit sphere first");
  add_common(weights_sub, true);

  std::size_t base = 0;
  std::string cls = "near";
  auto* section_sub = app.add_subcommand("section", "distance-class section of a tight 5-design");
  section_sub->add_option("file", path, "point or Gram file")->required();
  section_sub->add_option("--base", base, "base point index (0-based)");
  section_sub->add_option("--class", cls, "near or far");
  section_sub->add_option("--weights", wpath, "weights file (default uniform)");
  section_sub->add_flag("--normalize", c.normalize, "centre and scale onto the unit sphere first");
  add_common(section_sub, true);

  std::string name;
  std::vector<std::string> kv;
  auto* catalog_sub = app.add_subcommand("catalog", "named configurations");
  catalog_sub->require_subcommand(1);
  auto* cat_list = catalog_sub->add_subcommand("list", "list entries");
  auto* cat_emit = catalog_sub->add_subcommand("emit", "write an entry as a point file");
  cat_emit->add_option("name", name)->required();
  cat_emit->add_option("--param", kv, "k=v");
  cat_emit->add_option("--out", c.out_path);
  auto* cat_verify = catalog_sub->add_subcommand("verify", "check an entry (or 'all') against its expected profile");
  cat_verify->add_option("name", name)->required();
  cat_verify->add_option("--param", kv, "k=v");
  cat_verify->add_option("--out", c.out_path);
  cat_list->callback([&] {
    action = [&] {
      Outcome o;
      o.basis = {"catalog"};
      Json list = Json::array();
      for (const auto& info : catalog::list()) {
        Json e;
        e["name"] = info.name;
        e["params"] = info.params;
        e["description"] = info.description;
        list.push_back(e);
      }
      o.results["entries"] = list;
      return o;
    };
  });
  cat_emit->callback([&] {
    action = [&] {
      Outcome o;
      std::ostringstream ss;
      io::write_points(ss, catalog::construct(name, parse_params(kv)).config);
      o.raw_text = ss.str();
      return o;
    };
  });
  cat_verify->callback([&] { action = [&] { return catalog_verify(name, parse_params(kv)); }; });

  std::vector<std::string> fams;
  auto* tables_sub = app.add_subcommand("tables", "shipped tables of known values");
  tables_sub->add_option("family", fams, "DS2, DS2planar, DSstar2, LDS2, LDSstar2, misc (default all)");
  add_common(tables_sub, false);
  tables_sub->callback([&] { action = [&] { return tables_cmd(fams); }; });

  auto* decompose_sub = app.add_subcommand("decompose", "saturated-subset decomposition check");
  decompose_sub->add_option("file", path, "point file")->required();
  add_common(decompose_sub, true);
  decompose_sub->callback([&] {
    action = [&] {
      io::PointFile pf = load(path, c);
      Outcome o;
      o.digest_input = pf.raw;
      o.basis = {"saturated-subset decomposition"};
      auto rep = search::verify_decomposition(pf.config.points);
      if (rep.verdict == "violation") o.status = "mismatch";
      o.results = report::to_json(rep);
      return o;
    };
  });

  std::string claim;
  search::SearchConfig scfg;
  std::string config_path;
  bool serial = false;
  auto* search_sub = app.add_subcommand("search", "grid refutations: line4, midpoint5");
  search_sub->add_option("claim", claim)->required()->check(CLI::IsMember({"line4", "midpoint5"}));
  auto* step_opt = search_sub->add_option("--step", scfg.step, "grid step");
  auto* extent_opt = search_sub->add_option("--extent", scfg.extent, "half-width L");
  search_sub->add_option("--config", config_path, "JSON file with extent, step, merge_tol");
  search_sub->add_flag("--serial", serial, "use the serial reference kernel");
  add_common(search_sub, false);
  search_sub->callback([&] {
    action = [&] {
      search::SearchConfig cfg = scfg;
      if (!config_path.empty()) {
        cfg = load_search_config(config_path, search::SearchConfig{});
        if (step_opt->count()) cfg.step = scfg.step;
        if (extent_opt->count()) cfg.extent = scfg.extent;
      }
      cfg.parallel = !serial;
      Outcome o;
      o.basis = {"grid refutation (numerical evidence)"};
      auto rep = claim == "line4" ? search::refute_line4(cfg) : search::refute_midpoint5(cfg);
      if (rep.verdict != "supports-nonexistence") o.status = "inconclusive";
      o.results = report::to_json(rep);
      return o;
    };
  });

  std::size_t gdim = 0;
  std::size_t degree = 0;
  std::string at;
  std::string coeffs;
  std::size_t lk = 0;
  std::size_t ll = 0;
  auto* geg = app.add_subcommand("gegenbauer", "Gegenbauer polynomials");
  geg->require_subcommand(1);
  auto* geg_eval = geg->add_subcommand("eval", "G_l^(d)(t), exact");
  geg_eval->add_option("--dim", gdim)->required()->check(CLI::Range(2, 1000));
  geg_eval->add_option("--degree", degree)->required()->check(CLI::Range(0, 32));
  geg_eval->add_option("--at", at)->required();
  geg_eval->add_option("--out", c.out_path);
  auto* geg_expand = geg->add_subcommand("expand", "monomial coefficients to Gegenbauer coefficients");
  geg_expand->add_option("--dim", gdim)->required()->check(CLI::Range(2, 1000));
  geg_expand->add_option("--coeffs", coeffs, "comma-separated ascending monomial coefficients")->required();
  geg_expand->add_option("--out", c.out_path);
  auto* geg_lin = geg->add_subcommand("linearize", "G_k G_l in the Gegenbauer basis");
  geg_lin->add_option("--dim", gdim)->required()->check(CLI::Range(2, 1000));
  geg_lin->add_option("--k", lk)->required()->check(CLI::Range(0, 16));
  geg_lin->add_option("--l", ll)->required()->check(CLI::Range(0, 16));
  geg_lin->add_option("--out", c.out_path);
  geg_eval->callback([&] {
    action = [&] {
      Outcome o;
      o.basis = {"three-term recurrence"};
      Quad t = parse_list(at, "at").at(0);
      o.results["dim"] = gdim;
      o.results["degree"] = degree;
      o.results["t"] = t.str();
      o.results["value"] = gegenbauer::eval<Quad>(gdim, degree, t).str();
      o.results["polynomial"] = report::values(gegenbauer::polynomial(gdim, degree).coeffs());
      return o;
    };
  });
  geg_expand->callback([&] {
    action = [&] {
      Outcome o;
      o.basis = {"Gegenbauer change of basis"};
      Polynomial<Quad> p(parse_list(coeffs, "coeffs"));
      o.results = report::to_json(gegenbauer::expand(p, gdim));
      return o;
    };
  });
  geg_lin->callback([&] {
    action = [&] {
      Outcome o;
      o.basis = {"Gegenbauer linearization"};
      auto t = gegenbauer::linearization(gdim, lk, ll);
      if (!gegenbauer::linearization_violations(t).empty()) o.status = "mismatch";
      o.results = report::to_json(t);
      return o;
    };
  });

  // numeric commands dispatch on arithmetic mode after parsing
  design_sub->callback([&] {
    action = [&] {
      io::PointFile pf = load(path, c);
      return c.exact ? design_check<Quad>(pf, c, strength, wpath) : design_check<double>(pf, c, strength, wpath);
    };
  });
  weights_sub->callback([&] {
    action = [&] {
      io::PointFile pf = load(path, c);
      return c.exact ? weights_cmd<Quad>(pf, c, k, antipodal) : weights_cmd<double>(pf, c, k, antipodal);
    };
  });
  section_sub->callback([&] {
    action = [&] {
      io::PointFile pf = load(path, c);
      return c.exact ? section_cmd<Quad>(pf, c, base, cls, wpath) : section_cmd<double>(pf, c, base, cls, wpath);
    };
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << report::version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "distkit: " << e.what() << '\n';
    return kInputError;
  }
  if (tol_value > 0.0) c.tol = tol_value;

  Outcome o;
  try {
    if (!action) throw io::InputError("no command");
    o = action();
  } catch (const io::InputError& e) {
    err << "distkit: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    err << "distkit: parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const FieldMismatch& e) {
    err << "distkit: " << e.what() << '\n';
    return kInputError;
  } catch (const GeometryError& e) {
    err << "distkit: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "distkit: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "distkit: " << e.what() << '\n';
    return kInputError;
  }

  std::string text;
  if (o.raw_text) {
    text = *o.raw_text;
  } else {
    const std::string command = join(args);
    const double tol = c.tol ? *c.tol : default_tolerance();
    Json rec = report::envelope(command, io::fnv1a64(o.digest_input.empty() ? command : o.digest_input),
                                mode_of(c, tol), o.basis, o.status, std::move(o.results));
    text = rec.dump(2) + "\n";
  }
  if (c.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out_path);
    if (!f) {
      err << "distkit: cannot write " << c.out_path << '\n';
      return kInputError;
    }
    f << text;
  }
  return o.status == "ok" ? kOk : kMismatch;
}

}  // namespace distkit::cli
