#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clasp2/census.hpp"
#include "clasp2/diagram.hpp"

namespace clasp2 {

/// p/q in lowest terms with q >= 0; 1/0 is the unique infinity.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(long long p, long long q);  // throws on 0/0
  static ExtendedRational infinity() { return {1, 0}; }

  long long p() const { return p_; }
  long long q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }

  /// Accepts "p/q", "n", "inf" and "1/0".
  static ExtendedRational parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;

 private:
  long long p_ = 0;
  long long q_ = 1;
};

using MontesinosDesc = std::array<ExtendedRational, 3>;

/// Parses "r1,r2,r3".
MontesinosDesc parse_montesinos(std::string_view text);
std::string to_string(const MontesinosDesc& m);

/// [a1, ..., an] with r = a_n + 1/(a_{n-1} + ... + 1/a_1), quotients taken
/// with remainder of least absolute value (ties toward zero).
std::vector<long long> continued_fraction(const ExtendedRational& r);

/// Value of the continued fraction, in the same order as above.
ExtendedRational evaluate_continued_fraction(const std::vector<long long>& a);

/// Unoriented 4-ended tangle with ports NE, NW, SW, SE.
class Tangle {
 public:
  enum Port { NE = 0, NW = 1, SW = 2, SE = 3 };

  static Tangle zero();      // [0]: NW-NE and SW-SE
  static Tangle infinity();  // [1/0]: NW-SW and NE-SE
  static Tangle horizontal(long long n);  // [n]
  static Tangle vertical(long long n);    // [1/n]
  static Tangle rational(const ExtendedRational& r);

  friend Tangle operator+(const Tangle& a, const Tangle& b);
  friend Tangle operator*(const Tangle& a, const Tangle& b);

  int crossing_count() const { return static_cast<int>(slots_.size()); }

  /// Joins NE to NW and SE to SW; orientation is traced from crossing 0.
  Diagram numerator_closure() const;
  /// Joins NW to SW and NE to SE.
  Diagram denominator_closure() const;

 private:
  friend class MorseDiagram;

  static Tangle single(bool positive);
  static Tangle glue(const Tangle& a, const Tangle& b, std::array<std::pair<Port, Port>, 2> joins,
                     std::array<std::pair<int, Port>, 4> ports);
  Diagram close(std::array<std::pair<Port, Port>, 2> joins) const;

  int nodes_ = 0;
  // Node ids of each crossing's corners in counterclockwise order; the
  // under-strand joins slots 0 and 2.
  std::vector<std::array<int, 4>> slots_;
  std::vector<std::pair<int, int>> arcs_;
  std::array<int, 4> ports_{};
};

/// Planar diagram assembled top to bottom from pieces acting on adjacent
/// strand positions: crossings, 4-ended tangles, caps and cups. The closure
/// joins each bottom position to the top position with the same index.
class MorseDiagram {
 public:
  explicit MorseDiagram(int strands);

  int width() const { return static_cast<int>(open_.size()); }

  /// One crossing on positions i, i+1, the tangle [1] or [-1].
  MorseDiagram& crossing(int i, bool positive);
  /// Braid word with generators +-(i+1) acting on positions i, i+1.
  MorseDiagram& braid(const std::vector<int>& word);
  MorseDiagram& tangle(int i, const Tangle& t);
  /// Joins positions i and i+1.
  MorseDiagram& cap(int i);
  /// Opens a new pair of positions at i, i+1.
  MorseDiagram& cup(int i);

  /// Requires the current width to equal the starting width. Components are
  /// numbered and oriented by walking down from the top positions in order.
  Diagram closure() const;

 private:
  void join(int a, int b);

  int nodes_ = 0;
  std::vector<std::array<int, 4>> slots_;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<int> top_;
  std::vector<std::optional<std::size_t>> down_arc_;  // first arc below each top node
  std::vector<int> open_;                             // dangling node of each position
};

/// Closure of Q(r1) + Q(r2) + Q(r3). May be a link; check `is_knot()`.
Diagram montesinos_diagram(const MontesinosDesc& m);

/// Equal multisets of fractional parts and equal sums. Throws
/// std::invalid_argument on infinite entries.
bool montesinos_equivalent(const MontesinosDesc& a, const MontesinosDesc& b);

/// Genus zero fibered link made of the (2,3) torus knot and the two cores of
/// the torus it lies on, drawn as the boundary of a pair of pants: two annuli
/// with Hopf-linked cores and framings 1 and 2, joined by a half-twisted band.
/// Components: 0 and 2 are the annulus edges away from the band, 1 is the
/// edge running through the band. Oriented as the boundary of that surface.
Diagram exceptional_link();

/// Plumbs Hopf bands of signs eps1, eps2 onto the pants surface of
/// `exceptional_link()` along two of its three essential arcs. Arcs are named
/// by the boundary components they join; `shared` in {1,2,3} is the component
/// met by both arcs, and eps1 goes with the arc whose other end has the lower
/// index.
Diagram exceptional_knot(int shared, int eps1, int eps2);

struct CatalogEntry {
  std::string family;  // "i", "ii", "iii", "iv"
  std::string name;
  std::optional<long long> n;
  int sign = 0;  // the +- in 2/(4n +- 1); 0 when absent
  std::optional<MontesinosDesc> montesinos;
  std::optional<Diagram> diagram;
  std::string note;
};

/// Knots of the genus two, clasp number two, type II fibered classification,
/// with the parametrised Montesinos families for 1 <= |n| <= n_bound.
/// Exceptional knots come from `census` entries named Kex_*; if none are
/// present the twelve entries are emitted without diagrams and a note.
std::vector<CatalogEntry> theorem1_catalog(int n_bound, const Census& census = shipped_census());

}  // namespace clasp2
