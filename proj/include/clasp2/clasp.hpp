#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "clasp2/diagram.hpp"
#include "clasp2/laurent.hpp"
#include "clasp2/skein.hpp"

namespace clasp2 {

enum class DiskType { X, II };

std::string to_string(DiskType t);

/// Data of a clasp disk with two clasps: clasp signs, the linking numbers
/// l1 = lk(K_ou), l2 = lk(K_uo), and l = lk(alpha, beta_+).
struct ClaspParams {
  int eps1 = 1;
  int eps2 = 1;
  int l1 = 0;
  int l2 = 0;
  int l = 0;
  DiskType type = DiskType::II;

  friend auto operator<=>(const ClaspParams&, const ClaspParams&) = default;
};

/// Conway polynomial forced by the clasp data.
LaurentPoly conway_model(const ClaspParams& p);

struct LinkParams {
  int l = 0;
  int l1 = 0;
  int l2 = 0;
  friend bool operator==(const LinkParams&, const LinkParams&) = default;
};

/// Recovers (l, l1, l2) from the pairwise linking numbers of K_oo = K1+K2+K3.
LinkParams link_to_params(int lk12, int lk13, int lk23);
/// Inverse of link_to_params: returns {lk12, lk13, lk23}.
std::array<int, 3> params_to_links(const LinkParams& p);

/// All parameters in the box |l1|,|l2|,|l| <= bound whose Conway model has
/// the given z^2 and z^4 coefficients, sorted by (eps1, eps2, l1, l2, l).
std::vector<ClaspParams> enumerate_params(long long a2, long long a4, DiskType type, int bound);

/// True when a4 is odd and a2 even: no type X clasp disk can exist.
bool typeX_parity_obstruction(long long a2, long long a4);

/// True when a4 = 3 mod 8 and a2 = 2 mod 4: clasp number two is impossible.
bool kadokami_kawamura_excluded(long long a2, long long a4);

/// p^0 forced by the clasp data and the companion knots' p^0. `p3` must be
/// given exactly for type II. Throws std::invalid_argument otherwise.
LaurentPoly p0_model(const ClaspParams& p, const LaurentPoly& p1, const LaurentPoly& p2,
                     const std::optional<LaurentPoly>& p3);

enum class SearchStatus { found, refuted, inconclusive };

std::string to_string(SearchStatus s);

struct SumOfSquaresResult {
  SearchStatus status = SearchStatus::inconclusive;
  // (p0 - v^{2(eps1+eps2)}) / (v^-2 - 1) when the division is exact.
  std::optional<LaurentPoly> quotient;
  std::optional<LaurentPoly> f1;
  std::optional<LaurentPoly> f2;
  std::string note;
};

/// Looks for f1, f2, each supported on exponents of one parity inside
/// [-deg_bound, deg_bound] with coefficients bounded by coeff_bound, such that
/// the quotient above equals eps1 f1^2 + eps2 f2^2. A non-exact division
/// refutes the sign pair outright; an unsuccessful search is inconclusive.
SumOfSquaresResult typeX_sum_of_squares_search(const LaurentPoly& p0_knot, int eps1, int eps2, int deg_bound = 6,
                                               int coeff_bound = 8);

/// A pair of crossings of a knot diagram playing the role of two clasps.
/// Switching both must give a diagram with HOMFLY 1, smoothing both a
/// 3-component link; companion p^0 values are those of K1, K2, K3.
struct ClaspWitness {
  int c1 = -1;
  int c2 = -1;
  ClaspParams params;
  LaurentPoly p1, p2, p3;
  LaurentPoly predicted_p0;
  LaurentPoly predicted_conway;
};

/// Searches crossing pairs of `knot` for type II witnesses whose measured
/// data reproduce both the Conway polynomial and p^0 of the knot.
std::vector<ClaspWitness> find_type_ii_witnesses(const Diagram& knot, SkeinEngine& engine, std::size_t max_results = 1);

}  // namespace clasp2
