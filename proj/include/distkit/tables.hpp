#pragma once

// Known extremal values shipped as data.  Nothing here is computed.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace distkit::tables {

struct TableEntry {
  std::string key;
  std::size_t index = 0;
  /// Known value, or a closed interval [lo, hi] when only bracketed.
  int lo = 0;
  int hi = 0;
  std::string note;

  bool exact() const { return lo == hi; }
};

struct KnownTable {
  std::string family;
  std::string description;
  std::string index_name;
  std::string value_name;
  std::string citation;
  std::vector<TableEntry> entries;

  std::optional<TableEntry> lookup(std::size_t index) const;
};

/// Family names: DS2, DS2planar, DSstar2, LDS2, LDSstar2, misc.
std::vector<std::string> families();

/// Throws std::invalid_argument for an unknown family.
KnownTable known_tables(std::string_view family);

/// Two-row text table: header row of indices, value row; intervals as lo|hi.
std::string render(const KnownTable& table);

}  // namespace distkit::tables
