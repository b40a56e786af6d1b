#pragma once

#include <string>
#include <utility>
#include <vector>

#include "clasp2/diagram.hpp"
#include "clasp2/laurent.hpp"
#include "clasp2/skein.hpp"
#include "clasp2/tangle.hpp"

namespace clasp2 {

/// The eleven- and twelve-crossing knots whose clasp number exceeds their
/// genus: 11n74, 11n116, 11n142, 12n462, 12n838.
const std::vector<std::string>& clasp_excess_targets();

struct CatalogInvariants {
  std::string family;
  std::string name;
  LaurentPoly conway;
  LaurentPoly p0;
};

/// (Conway, p^0) of every catalog entry that carries a diagram, computed on
/// `jobs` threads. Entries without diagrams are counted in `skipped`.
std::vector<CatalogInvariants> catalog_invariants(const std::vector<CatalogEntry>& catalog, SkeinEngine& engine,
                                                  int jobs, int* skipped = nullptr);

struct CatalogMatch {
  std::string name;
  bool mirrored = false;
};

/// Catalog entries with the same Conway polynomial and the same p^0 as the
/// knot or as its mirror image.
std::vector<CatalogMatch> match_catalog(const LaurentPoly& conway, const LaurentPoly& p0,
                                        const std::vector<CatalogInvariants>& catalog);

struct ClaspExcessRow {
  std::string name;
  Integer a2;
  Integer a4;
  LaurentPoly conway;
  LaurentPoly p0;
  bool a2_even = false;
  bool a4_unit = false;
  bool typeX_obstructed = false;
  std::vector<CatalogMatch> matches;
  std::string verdict;  // "cl >= 3" when every check passes, else "not established"
};

struct ClaspExcessReport {
  std::vector<ClaspExcessRow> rows;
  int catalog_size = 0;
  int catalog_skipped = 0;
  std::string note;
};

/// For each knot: a2 even and a4 = +-1 (genus two fibered candidates with
/// odd a4), the type X parity obstruction, and no catalog entry sharing
/// (Conway, p^0) up to mirror image. Together these rule out clasp number two.
ClaspExcessReport clasp_excess_report(const std::vector<std::pair<std::string, Diagram>>& knots,
                                      const std::vector<CatalogEntry>& catalog, SkeinEngine& engine, int jobs = 1);

}  // namespace clasp2
