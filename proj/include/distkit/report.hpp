#pragma once

// JSON records emitted by the CLI.  One object per invocation:
//
//   { "tool", "version", "command", "input_digest", "mode", "basis", "status", "results" }
//
// Exact values serialize as strings ("1/2 + 1/2*sqrt(5)"); floating values as
// JSON numbers, with the tolerance recorded in "mode".  Key order is fixed so
// exact-mode output is byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "distkit/bounds.hpp"
#include "distkit/catalog.hpp"
#include "distkit/designs.hpp"
#include "distkit/gegenbauer.hpp"
#include "distkit/geometry.hpp"
#include "distkit/search.hpp"
#include "distkit/tables.hpp"

namespace distkit::report {

using Json = nlohmann::ordered_json;

struct Mode {
  bool exact = false;
  double tol = kDefaultTol;
};

const char* version();

Json envelope(const std::string& command, const std::string& digest, const Mode& mode,
              const std::vector<std::string>& basis, const std::string& status, Json results);

Json value(double v);
Json value(const Quad& v);
Json value(const Rational& v);
Json value(const Integer& v);

template <class T>
Json values(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(value(x));
  return a;
}

Json to_json(const DistanceProfile<double>& p);
Json to_json(const DistanceProfile<Quad>& p);
Json to_json(const InnerSpectrum<double>& s);
Json to_json(const InnerSpectrum<Quad>& s);
Json to_json(const bounds::BoundCertificate& c);
Json to_json(const bounds::LdsCertificate& c);
Json to_json(const designs::MomentReport<double>& r);
Json to_json(const designs::MomentReport<Quad>& r);
Json to_json(const designs::DesignVerdict<double>& v);
Json to_json(const designs::DesignVerdict<Quad>& v);
Json to_json(const designs::WeightConstruction<double>& w);
Json to_json(const designs::WeightConstruction<Quad>& w);
Json to_json(const designs::Section<double>& s);
Json to_json(const designs::Section<Quad>& s);
Json to_json(const catalog::Verification& v);
Json to_json(const search::SearchReport& r);
Json to_json(const tables::KnownTable& t);
Json to_json(const gegenbauer::Expansion<Quad>& e);
Json to_json(const gegenbauer::LinearizationTable& t);

}  // namespace distkit::report
