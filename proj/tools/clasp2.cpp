// Command-line front end. Every command prints one JSON document on stdout.
//
// Exit codes: 0 success, 1 usage or internal error, 2 unknown census name,
// 3 parse or validation error, 4 skein budget exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "clasp2/census.hpp"
#include "clasp2/clasp.hpp"
#include "clasp2/diagram.hpp"
#include "clasp2/openbook.hpp"
#include "clasp2/report.hpp"
#include "clasp2/skein.hpp"
#include "clasp2/tangle.hpp"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kError = 1, kUnknownName = 2, kParseError = 3, kBudgetExceeded = 4 };

struct UnknownName : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int jobs = 1;
  std::uint64_t node_budget = clasp2::SkeinConfig{}.node_budget;
  std::size_t memo_capacity = clasp2::SkeinConfig{}.memo_capacity;
  int bound = 50;
  int n_bound = 6;
  int max_cosets = clasp2::Budgets{}.max_cosets;
  int max_target_order = clasp2::Budgets{}.max_target_order;
  std::string data_dir;
};

json integer(const clasp2::Integer& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
    return static_cast<long long>(n);
  return n.str();
}

bool looks_like_pd(const std::string& s) {
  return s.rfind("PD[", 0) == 0 || s.rfind("X[", 0) == 0 || s.rfind("Loop[", 0) == 0;
}

struct Resolved {
  std::string source;  // "census" or "pd"
  clasp2::Diagram diagram;
};

clasp2::Diagram census_knot(const std::string& name) {
  if (name.starts_with("mirror(") && name.ends_with(")")) return census_knot(name.substr(7, name.size() - 8)).mirror();
  const auto* e = clasp2::shipped_census().find(name);
  if (!e) throw UnknownName("unknown census name: " + name);
  return e->diagram;
}

// A PD code, or census names joined by '#', each optionally as mirror(name).
Resolved resolve(const std::string& target) {
  if (looks_like_pd(target)) return {"pd", clasp2::Diagram::parse(target)};
  std::optional<clasp2::Diagram> d;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = target.find('#', pos);
    const auto part = census_knot(target.substr(pos, end - pos));
    d = d ? clasp2::connected_sum(*d, part) : part;
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return {"census", *d};
}

json params_json(const clasp2::ClaspParams& p) {
  return {{"eps1", p.eps1}, {"eps2", p.eps2}, {"l1", p.l1}, {"l2", p.l2}, {"l", p.l}, {"type", to_string(p.type)}};
}

json invariants_json(const clasp2::Diagram& d, clasp2::SkeinEngine& engine) {
  json out;
  out["components"] = d.num_components();
  out["crossings"] = d.crossing_count();
  out["homfly"] = engine.homfly(d).to_string();
  out["conway"] = engine.conway(d).to_string();
  out["p0"] = engine.p0(d).to_string();
  if (d.is_knot()) {
    const auto [a2, a4] = engine.conway_coefficients(d);
    out["a2"] = integer(a2);
    out["a4"] = integer(a4);
  } else {
    out["a2"] = nullptr;
    out["a4"] = nullptr;
  }
  return out;
}

json cmd_invariants(const std::string& target, clasp2::SkeinEngine& engine) {
  const auto r = resolve(target);
  json out = invariants_json(r.diagram, engine);
  out["input"] = target;
  out["source"] = r.source;
  return out;
}

json cmd_clasp_obstruct(const std::string& target, bool witness, const Options& o, clasp2::SkeinEngine& engine) {
  const auto r = resolve(target);
  if (!r.diagram.is_knot()) throw std::invalid_argument("clasp-obstruct needs a knot");
  const auto [a2_big, a4_big] = engine.conway_coefficients(r.diagram);
  const auto a2 = static_cast<long long>(a2_big), a4 = static_cast<long long>(a4_big);
  json out{{"input", target}, {"a2", a2}, {"a4", a4}, {"bound", o.bound}};
  out["typeX_parity_obstruction"] = clasp2::typeX_parity_obstruction(a2, a4);
  out["kadokami_kawamura_excluded"] = clasp2::kadokami_kawamura_excluded(a2, a4);
  for (auto [key, type] : {std::pair{"type_x_params", clasp2::DiskType::X}, std::pair{"type_ii_params", clasp2::DiskType::II}}) {
    json list = json::array();
    for (const auto& p : clasp2::enumerate_params(a2, a4, type, o.bound)) list.push_back(params_json(p));
    out[key] = list;
  }
  const auto p0 = engine.p0(r.diagram);
  json squares = json::array();
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) {
      const auto s = clasp2::typeX_sum_of_squares_search(p0, e1, e2);
      json row{{"eps1", e1}, {"eps2", e2}, {"status", to_string(s.status)}, {"note", s.note}};
      if (s.f1) row["f1"] = s.f1->to_string();
      if (s.f2) row["f2"] = s.f2->to_string();
      squares.push_back(row);
    }
  out["typeX_sum_of_squares"] = squares;
  if (witness) {
    json list = json::array();
    for (const auto& w : clasp2::find_type_ii_witnesses(r.diagram, engine)) {
      list.push_back({{"crossings", {w.c1, w.c2}},
                      {"params", params_json(w.params)},
                      {"p1", w.p1.to_string()},
                      {"p2", w.p2.to_string()},
                      {"p3", w.p3.to_string()}});
    }
    out["type_ii_witnesses"] = list;
  }
  return out;
}

json cmd_montesinos(const std::string& desc, const std::string& compare, clasp2::SkeinEngine& engine) {
  const auto m = clasp2::parse_montesinos(desc);
  json fractions = json::array();
  for (const auto& r : m) fractions.push_back(r.is_infinite() ? json(nullptr) : json(clasp2::continued_fraction(r)));
  const auto d = clasp2::montesinos_diagram(m);
  json out = invariants_json(d, engine);
  out["desc"] = clasp2::to_string(m);
  out["continued_fractions"] = fractions;
  out["pd"] = d.to_pd_string();
  json matches = json::array();
  if (d.is_knot()) {
    const auto h = engine.homfly(d);
    for (const auto& e : clasp2::shipped_census().entries()) {
      const auto g = engine.homfly(e.diagram);
      if (g == h)
        matches.push_back({{"name", e.name}, {"mirror", false}});
      else if (g.mirror_v() == h)
        matches.push_back({{"name", e.name}, {"mirror", true}});
    }
  }
  out["census_homfly_matches"] = matches;
  if (!compare.empty()) out["equivalent"] = clasp2::montesinos_equivalent(m, clasp2::parse_montesinos(compare));
  return out;
}

json cmd_catalog(const Options& o, clasp2::SkeinEngine& engine) {
  const auto catalog = clasp2::theorem1_catalog(o.n_bound);
  const auto inv = clasp2::catalog_invariants(catalog, engine, o.jobs);
  json rows = json::array();
  std::size_t k = 0;
  for (const auto& e : catalog) {
    json row{{"family", e.family}, {"name", e.name}, {"note", e.note}};
    row["n"] = e.n ? json(*e.n) : json(nullptr);
    row["sign"] = e.sign;
    row["montesinos"] = e.montesinos ? json(clasp2::to_string(*e.montesinos)) : json(nullptr);
    if (e.diagram) {
      row["crossings"] = e.diagram->crossing_count();
      row["conway"] = inv[k].conway.to_string();
      row["p0"] = inv[k].p0.to_string();
      ++k;
    }
    rows.push_back(row);
  }
  return {{"n_bound", o.n_bound}, {"count", rows.size()}, {"entries", rows}};
}

json classification_json(const clasp2::Classification& c) {
  json out{{"triple", {c.triple.a, c.triple.b, c.triple.c}},
           {"verdict", to_string(c.verdict)},
           {"method", c.method},
           {"h1_order", c.h1_order == 0 ? json("infinite") : json(c.h1_order)}};
  out["group_order"] = c.group_order ? json(*c.group_order) : json(nullptr);
  if (c.witness) out["witness"] = {{"target", c.witness->target}, {"images", c.witness->images}};
  return out;
}

json cmd_openbook(const std::string& triple, std::optional<int> scan, const Options& o) {
  const clasp2::Budgets budgets{o.max_cosets, o.max_target_order};
  if (scan) {
    const auto triples = clasp2::sorted_triples(*scan);
    const auto report = clasp2::s3_openbook_report(*scan, budgets, o.jobs);
    json rows = json::array();
    int counts[3] = {0, 0, 0};
    for (const auto& c : clasp2::classify_all(triples, budgets, o.jobs)) {
      ++counts[static_cast<int>(c.verdict)];
      json row = classification_json(c);
      for (const auto& r : report)
        if (r.triple == c.triple) row["family"] = r.family, row["case"] = r.monodromy_case;
      rows.push_back(row);
    }
    return {{"range", *scan},
            {"count", rows.size()},
            {"trivial", counts[0]},
            {"nontrivial", counts[1]},
            {"inconclusive", counts[2]},
            {"rows", rows}};
  }
  const auto t = clasp2::parse_triple(triple);
  const auto c = clasp2::classify_triple(t, budgets);
  json out = classification_json(c);
  json relators = json::array();
  for (const auto& w : clasp2::pi1_presentation(t).relators) relators.push_back(clasp2::word_to_string(w));
  out["relators"] = relators;
  out["in_trivial_list"] = clasp2::in_trivial_list(t);
  return out;
}

json cmd_corollary12(const std::vector<std::string>& inject, const Options& o, clasp2::SkeinEngine& engine) {
  std::vector<std::pair<std::string, clasp2::Diagram>> knots;
  for (const auto& name : clasp2::clasp_excess_targets()) {
    const auto* e = clasp2::shipped_census().find(name);
    if (!e) throw UnknownName("census is missing " + name);
    knots.emplace_back(name, e->diagram);
  }
  for (const auto& target : inject) knots.emplace_back(target, resolve(target).diagram);
  const auto report = clasp2::clasp_excess_report(knots, clasp2::theorem1_catalog(o.n_bound), engine, o.jobs);
  json rows = json::array();
  for (const auto& r : report.rows) {
    json matches = json::array();
    for (const auto& m : r.matches) matches.push_back({{"name", m.name}, {"mirror", m.mirrored}});
    rows.push_back({{"name", r.name},
                    {"a2", integer(r.a2)},
                    {"a4", integer(r.a4)},
                    {"conway", r.conway.to_string()},
                    {"p0", r.p0.to_string()},
                    {"a2_even", r.a2_even},
                    {"a4_unit", r.a4_unit},
                    {"typeX_obstruction", r.typeX_obstructed},
                    {"catalog_matches", matches},
                    {"verdict", r.verdict}});
  }
  return {{"n_bound", o.n_bound},
          {"catalog_size", report.catalog_size},
          {"catalog_without_diagram", report.catalog_skipped},
          {"note", report.note},
          {"rows", rows}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clasp number and fibered knot toolkit"};
  app.set_config("--config", "", "key=value file using the long option names; flags take precedence");
  app.allow_config_extras(false);
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--jobs", o.jobs, "worker threads for batch computations")->check(CLI::PositiveNumber);
  app.add_option("--node-budget", o.node_budget, "skein tree nodes per evaluation");
  app.add_option("--memo-capacity", o.memo_capacity, "skein memo entries");
  app.add_option("--bound", o.bound, "box bound for clasp parameter search")->check(CLI::NonNegativeNumber);
  app.add_option("--n-bound", o.n_bound, "parameter bound for the catalog families")->check(CLI::NonNegativeNumber);
  app.add_option("--max-cosets", o.max_cosets, "coset enumeration limit")->check(CLI::PositiveNumber);
  app.add_option("--max-target-order", o.max_target_order, "largest cyclic target in the witness search");
  app.add_option("--data-dir", o.data_dir, "directory with census.tsv and exceptional.tsv");

  std::string target;
  auto* inv = app.add_subcommand("invariants", "HOMFLY, Conway, p0, a2, a4 of a census name or PD code");
  inv->add_option("target", target, "census name, name#name, mirror(name) or PD[...]")->required();

  bool witness = false;
  auto* obstruct = app.add_subcommand("clasp-obstruct", "clasp disk obstructions and parameter solutions");
  obstruct->add_option("target", target, "census name or PD[...]")->required();
  obstruct->add_flag("--witness", witness, "search crossing pairs for a type II clasp disk");

  std::string desc, compare;
  auto* mont = app.add_subcommand("montesinos", "diagram and invariants of K(r1,r2,r3)");
  mont->add_option("--desc", desc, "r1,r2,r3")->required();
  mont->add_option("--compare", compare, "second description to test for equivalence");

  auto* cat = app.add_subcommand("catalog", "genus two, clasp number two, type II fibered knots");

  std::string triple;
  std::optional<int> scan;
  auto* ob = app.add_subcommand("openbook", "fundamental group of open books on the pair of pants");
  auto* triple_opt = ob->add_option("--triple", triple, "a,b,c");
  auto* scan_opt = ob->add_option("--scan", scan, "classify all |a|<=|b|<=|c|<=R")->check(CLI::PositiveNumber);
  triple_opt->excludes(scan_opt);
  ob->require_option(1);

  std::vector<std::string> inject;
  auto* cor = app.add_subcommand("corollary12", "clasp number three for five genus two knots");
  cor->add_option("--inject", inject, "extra knots to test alongside the five targets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  if (!o.data_dir.empty()) ::setenv("CLASP2_DATA", o.data_dir.c_str(), 1);
  clasp2::SkeinEngine engine(clasp2::SkeinConfig{o.memo_capacity, o.node_budget});

  try {
    json out;
    if (*inv) out = cmd_invariants(target, engine);
    else if (*obstruct) out = cmd_clasp_obstruct(target, witness, o, engine);
    else if (*mont) out = cmd_montesinos(desc, compare, engine);
    else if (*cat) out = cmd_catalog(o, engine);
    else if (*ob) out = cmd_openbook(triple, scan, o);
    else if (*cor) out = cmd_corollary12(inject, o, engine);
    std::cout << out.dump(2) << '\n';
    return kOk;
  } catch (const UnknownName& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnknownName;
  } catch (const clasp2::SkeinBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const clasp2::PdParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const clasp2::DiagramValidationError& e) {
    std::cerr << "invalid diagram: " << e.what() << '\n';
    return kParseError;
  } catch (const clasp2::CensusError& e) {
    std::cerr << "census error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
}
