#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clasp2/diagram.hpp"

namespace clasp2 {

class CensusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CensusEntry {
  std::string name;
  std::string pd;
  Diagram diagram;
  // Clasp signs and provenance note; only set for exceptional-knot rows.
  int eps1 = 0;
  int eps2 = 0;
  std::string provenance;
};

/// Named knot table. Lookup is by exact name; `3_1`, `11n74` style names.
class Census {
 public:
  Census() = default;
  explicit Census(std::vector<CensusEntry> entries);

  const std::vector<CensusEntry>& entries() const { return entries_; }
  const CensusEntry* find(const std::string& name) const;
  const CensusEntry& at(const std::string& name) const;
  void append(const std::vector<CensusEntry>& more);

 private:
  std::vector<CensusEntry> entries_;
};

/// Reads `name<TAB>PD[...]` lines; blank lines and `#` comments are skipped.
/// Each diagram must be a knot whose Conway polynomial has constant term 1
/// (skipped when `check_conway` is false). Errors carry the line number.
Census load_census(const std::filesystem::path& path, bool check_conway = true);

/// Reads `name<TAB>eps1<TAB>eps2<TAB>PD[...][<TAB>provenance]` lines.
std::vector<CensusEntry> load_exceptional(const std::filesystem::path& path, bool check_conway = true);

/// Directory holding the shipped data files: $CLASP2_DATA if set, otherwise
/// the source-tree `data` directory recorded at build time.
std::filesystem::path default_data_dir();

/// Census plus exceptional knots from the default data directory, loaded once.
const Census& shipped_census();

}  // namespace clasp2
