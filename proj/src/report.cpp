#include "clasp2/report.hpp"

#include <atomic>
#include <optional>
#include <stdexcept>
#include <thread>

#include "clasp2/clasp.hpp"

namespace clasp2 {

const std::vector<std::string>& clasp_excess_targets() {
  static const std::vector<std::string> names{"11n74", "11n116", "11n142", "12n462", "12n838"};
  return names;
}

std::vector<CatalogInvariants> catalog_invariants(const std::vector<CatalogEntry>& catalog, SkeinEngine& engine,
                                                  int jobs, int* skipped) {
  std::vector<const CatalogEntry*> todo;
  for (const auto& e : catalog)
    if (e.diagram) todo.push_back(&e);
  if (skipped) *skipped = static_cast<int>(catalog.size() - todo.size());

  std::vector<std::optional<CatalogInvariants>> out(todo.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      const CatalogEntry& e = *todo[i];
      out[i] = CatalogInvariants{e.family, e.name, engine.conway(*e.diagram), engine.p0(*e.diagram)};
    }
  };
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < jobs; ++k) pool.emplace_back(work);
  }
  std::vector<CatalogInvariants> result;
  for (auto& r : out) result.push_back(std::move(*r));
  return result;
}

std::vector<CatalogMatch> match_catalog(const LaurentPoly& conway, const LaurentPoly& p0,
                                        const std::vector<CatalogInvariants>& catalog) {
  std::vector<CatalogMatch> out;
  const LaurentPoly p0_mirror = p0.mirror_v();
  for (const auto& c : catalog) {
    if (c.conway != conway) continue;
    if (c.p0 == p0)
      out.push_back({c.name, false});
    else if (c.p0 == p0_mirror)
      out.push_back({c.name, true});
  }
  return out;
}

ClaspExcessReport clasp_excess_report(const std::vector<std::pair<std::string, Diagram>>& knots,
                                      const std::vector<CatalogEntry>& catalog, SkeinEngine& engine, int jobs) {
  ClaspExcessReport report;
  const auto invariants = catalog_invariants(catalog, engine, jobs, &report.catalog_skipped);
  report.catalog_size = static_cast<int>(catalog.size());
  for (const auto& [name, d] : knots) {
    if (!d.is_knot()) throw std::invalid_argument(name + " is not a knot");
    ClaspExcessRow row;
    row.name = name;
    row.conway = engine.conway(d);
    row.p0 = engine.p0(d);
    row.a2 = row.conway.coefficient(0, 2);
    row.a4 = row.conway.coefficient(0, 4);
    row.a2_even = row.a2 % 2 == 0;
    row.a4_unit = row.a4 == 1 || row.a4 == -1;
    row.typeX_obstructed = typeX_parity_obstruction(static_cast<long long>(row.a2), static_cast<long long>(row.a4));
    row.matches = match_catalog(row.conway, row.p0, invariants);
    const bool ok = row.a2_even && row.a4_unit && row.typeX_obstructed && row.matches.empty();
    row.verdict = ok ? "cl >= 3" : "not established";
    report.rows.push_back(std::move(row));
  }
  report.note =
      "catalog non-membership is certified only up to the invariants compared: Conway polynomial and p^0, "
      "each up to mirror image";
  if (report.catalog_skipped > 0)
    report.note += "; " + std::to_string(report.catalog_skipped) + " catalog entries have no diagram and were not compared";
  return report;
}

}  // namespace clasp2
