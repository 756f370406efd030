#include "distkit/tables.hpp"

#include <stdexcept>

namespace distkit::tables {

namespace {

TableEntry at(std::size_t index, int value, std::string prefix, std::string note = {}) {
  return TableEntry{prefix + "=" + std::to_string(index), index, value, value, std::move(note)};
}

// maximum size of a two-distance set on S^{d-1}
TableEntry spherical_two_distance(std::size_t d) {
  const int tri = static_cast<int>(d * (d + 1) / 2);
  switch (d) {
    case 1: return at(d, 2, "d", "S^0 has two points");
    case 2: return at(d, 5, "d");
    case 3: return at(d, 6, "d");
    case 4: return at(d, 10, "d");
    case 5: return at(d, 16, "d");
    case 6: return at(d, 27, "d");
    case 22: return at(d, 275, "d", "Musin");
    case 23: return TableEntry{"d=23", 23, 276, 277, "Musin: 276 or 277"};
    default: return at(d, tri, "d", "d(d+1)/2, Musin");
  }
}

KnownTable ds2() {
  KnownTable t{"DS2", "maximum cardinality of a two-distance set in R^d", "d", "DS_d(2)",
               "Kelly; Croft; Einhorn-Schoenberg; Lisonek", {}};
  const int v[] = {3, 5, 6, 10, 16, 27, 29, 45};
  for (std::size_t d = 1; d <= 8; ++d) t.entries.push_back(at(d, v[d - 1], "d"));
  return t;
}

KnownTable ds2_planar() {
  KnownTable t{"DS2planar", "maximum cardinality of a k-distance set in R^2", "k", "DS_2(k)",
               "Erdos-Fishburn and later planar classifications", {}};
  const int v[] = {3, 5, 7, 9, 12};
  for (std::size_t k = 1; k <= 5; ++k) t.entries.push_back(at(k, v[k - 1], "k"));
  return t;
}

KnownTable ds_star2() {
  KnownTable t{"DSstar2", "maximum cardinality of a two-distance set on S^{d-1}", "d", "DS*_d(2)",
               "Delsarte-Goethals-Seidel; Musin", {}};
  for (std::size_t d = 1; d < 40; ++d) t.entries.push_back(spherical_two_distance(d));
  return t;
}

KnownTable lds2() {
  KnownTable t{"LDS2", "maximum cardinality of a locally two-distance set in R^d", "d", "LDS_d(2)",
               "saturated-subset recursion with the DS2 classification", {}};
  const int v[] = {3, 5, 7, 10, 16, 27, 29, 45};
  for (std::size_t d = 1; d <= 8; ++d) {
    t.entries.push_back(at(d, v[d - 1], "d", d == 3 ? "exceeds DS_3(2) = 6" : ""));
  }
  return t;
}

KnownTable lds_star2() {
  KnownTable t{"LDSstar2", "maximum cardinality of a locally two-distance set on S^{d-1}", "d",
               "LDS*_d(2)", "equal to DS*_d(2) except d = 3, 7, 23", {}};
  for (std::size_t d = 2; d < 40; ++d) {
    if (d == 3) {
      t.entries.push_back(at(d, 7, "d", "exceeds DS*_3(2) = 6"));
    } else if (d == 7) {
      t.entries.push_back(at(d, 29, "d", "exceeds DS*_7(2) = 28"));
    } else if (d == 23) {
      t.entries.push_back(at(d, 277, "d", "determined although DS*_23(2) is not"));
    } else {
      TableEntry e = spherical_two_distance(d);
      e.note = "equals DS*_d(2)";
      t.entries.push_back(e);
    }
  }
  return t;
}

KnownTable misc() {
  KnownTable t{"misc", "other determined values", "key", "value",
               "planar and three-dimensional classifications", {}};
  t.entries.push_back(TableEntry{"DS_3(3)", 0, 12, 12, "regular icosahedron is the unique optimum"});
  t.entries.push_back(TableEntry{"LDS_2(3)", 0, 8, 8,
                                 "planar locally three-distance sets; sometimes written LDS_3(3)"});
  t.entries.push_back(TableEntry{"LDS*_1(2)", 0, 2, 2, "S^0"});
  return t;
}

}  // namespace

std::optional<TableEntry> KnownTable::lookup(std::size_t index) const {
  for (const auto& e : entries) {
    if (e.index == index && index != 0) return e;
  }
  return std::nullopt;
}

std::vector<std::string> families() { return {"DS2", "DS2planar", "DSstar2", "LDS2", "LDSstar2", "misc"}; }

KnownTable known_tables(std::string_view family) {
  if (family == "DS2") return ds2();
  if (family == "DS2planar") return ds2_planar();
  if (family == "DSstar2") return ds_star2();
  if (family == "LDS2") return lds2();
  if (family == "LDSstar2") return lds_star2();
  if (family == "misc") return misc();
  throw std::invalid_argument("unknown table family '" + std::string(family) + "'");
}

std::string render(const KnownTable& table) {
  std::string head = table.index_name;
  std::string row = table.value_name;
  for (const auto& e : table.entries) {
    std::string idx = table.index_name == "key" ? e.key : std::to_string(e.index);
    std::string val = e.exact() ? std::to_string(e.lo) : std::to_string(e.lo) + "|" + std::to_string(e.hi);
    head += " " + idx;
    row += " " + val;
  }
  return head + "\n" + row + "\n";
}

}  // namespace distkit::tables
