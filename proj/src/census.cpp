#include "clasp2/census.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "clasp2/skein.hpp"

namespace clasp2 {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, '\t')) out.push_back(field);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \r\n") - b + 1);
}

template <typename RowFn>
void read_rows(const std::filesystem::path& path, RowFn&& fn) {
  std::ifstream in(path);
  if (!in) throw CensusError("cannot open " + path.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const std::string where = path.filename().string() + ":" + std::to_string(lineno);
    try {
      fn(split_tabs(trim(line)), where);
    } catch (const PdParseError& e) {
      throw CensusError(where + ": " + e.what());
    } catch (const DiagramValidationError& e) {
      throw CensusError(where + ": " + e.what());
    }
  }
}

Diagram checked_knot(const std::string& name, const std::string& pd, bool check_conway, const std::string& where) {
  Diagram d = Diagram::parse(pd);
  if (!d.is_knot()) throw CensusError(where + ": entry " + name + " is not a knot");
  if (check_conway && conway(d).coefficient(0, 0) != 1)
    throw CensusError(where + ": entry " + name + " has Conway constant term other than 1");
  return d;
}

int parse_sign(const std::string& s, const std::string& where) {
  if (s == "+1" || s == "1" || s == "+") return 1;
  if (s == "-1" || s == "-") return -1;
  throw CensusError(where + ": bad clasp sign '" + s + "'");
}

}  // namespace

Census::Census(std::vector<CensusEntry> entries) { append(entries); }

const CensusEntry* Census::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

const CensusEntry& Census::at(const std::string& name) const {
  if (const auto* e = find(name)) return *e;
  throw CensusError("unknown census entry " + name);
}

void Census::append(const std::vector<CensusEntry>& more) {
  for (const auto& e : more) {
    if (find(e.name)) throw CensusError("duplicate census entry " + e.name);
    entries_.push_back(e);
  }
}

Census load_census(const std::filesystem::path& path, bool check_conway) {
  std::vector<CensusEntry> rows;
  std::set<std::string> names;
  read_rows(path, [&](const std::vector<std::string>& f, const std::string& where) {
    if (f.size() != 2) throw CensusError(where + ": expected name<TAB>PD");
    if (!names.insert(f[0]).second) throw CensusError(where + ": duplicate census entry " + f[0]);
    rows.push_back({f[0], f[1], checked_knot(f[0], f[1], check_conway, where), 0, 0, ""});
  });
  return Census(std::move(rows));
}

std::vector<CensusEntry> load_exceptional(const std::filesystem::path& path, bool check_conway) {
  std::vector<CensusEntry> rows;
  std::set<std::string> names;
  read_rows(path, [&](const std::vector<std::string>& f, const std::string& where) {
    if (f.size() != 4 && f.size() != 5) throw CensusError(where + ": expected name<TAB>eps1<TAB>eps2<TAB>PD");
    if (!names.insert(f[0]).second) throw CensusError(where + ": duplicate entry " + f[0]);
    rows.push_back({f[0], f[3], checked_knot(f[0], f[3], check_conway, where), parse_sign(f[1], where),
                    parse_sign(f[2], where), f.size() == 5 ? f[4] : ""});
  });
  return rows;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("CLASP2_DATA"); env && *env) return env;
  return CLASP2_DATA_DIR;
}

const Census& shipped_census() {
  static const Census census = [] {
    Census c = load_census(default_data_dir() / "census.tsv");
    const auto ex = default_data_dir() / "exceptional.tsv";
    if (std::filesystem::exists(ex)) c.append(load_exceptional(ex));
    return c;
  }();
  return census;
}

}  // namespace clasp2
