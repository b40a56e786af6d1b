#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clasp2 {

class PdParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DiagramValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One crossing in PD form. Slots are listed counterclockwise starting at the
/// incoming under-strand: edge[0] enters under, edge[2] leaves under, and the
/// over-strand runs edge[1] -> edge[3] when `over_from_b` (a positive crossing
/// by the convention d = b + 1) or edge[3] -> edge[1] otherwise.
struct Crossing {
  std::array<int, 4> edge{};
  bool over_from_b = true;

  int sign() const { return over_from_b ? 1 : -1; }
  int over_in_slot() const { return over_from_b ? 1 : 3; }
  int over_out_slot() const { return over_from_b ? 3 : 1; }
  bool is_incoming_slot(int s) const { return s == 0 || s == over_in_slot(); }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// A (crossing, slot) position in a diagram.
struct SlotRef {
  int crossing = -1;
  int slot = -1;
};

/// Oriented link diagram stored as a PD code.
///
/// Edge labels are 0-based internally (1-based in text). Each component's
/// labels form a consecutive run and orientation follows increasing labels.
/// Components without crossings are kept as a free-loop counter; component
/// indices list the crossing components first, then the free loops.
class Diagram {
 public:
  struct Run {
    int first = 0;
    int length = 0;

    friend bool operator==(const Run&, const Run&) = default;
  };

  Diagram() = default;

  static Diagram unknot() { return unlink(1); }
  static Diagram unlink(int k);

  /// Builds a diagram from 0-based quadruples, inferring over-strand
  /// directions and validating labels. Throws DiagramValidationError.
  static Diagram from_quadruples(const std::vector<std::array<int, 4>>& quads, int free_loops = 0);

  /// Builds a diagram whose crossings already carry their over-strand
  /// direction; labels must run consecutively along each component.
  static Diagram from_oriented(std::vector<Crossing> crossings, int free_loops = 0);

  /// Parses `PD[X[a,b,c,d], ..., Loop[k]]`; `PD[]` is the unknot.
  static Diagram parse(std::string_view text);

  std::string to_pd_string() const;

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return 2 * crossing_count(); }
  int free_loops() const { return free_loops_; }
  int num_components() const { return static_cast<int>(runs_.size()) + free_loops_; }
  bool is_knot() const { return num_components() == 1; }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Run>& runs() const { return runs_; }
  int sign(int k) const { return crossings_.at(static_cast<std::size_t>(k)).sign(); }

  /// Component index of an edge label.
  int component_of_edge(int e) const;
  int next_edge(int e) const;

  /// Edge labels of each crossing component in traversal order; free loops
  /// contribute empty lists at the end.
  std::vector<std::vector<int>> components() const;

  int linking_number(int i, int j) const;
  /// Sum of pairwise linking numbers.
  int total_linking_number() const;
  int writhe() const;

  Diagram switch_crossing(int k) const;
  Diagram smooth_crossing(int k) const;
  Diagram mirror() const;
  /// Keeps only the listed components (crossings with dropped strands vanish).
  Diagram sublink(const std::vector<int>& keep) const;
  Diagram simplify() const;
  /// Reverses the orientation of one component.
  Diagram reverse_component(int i) const;

  /// Number of circles after smoothing every crossing.
  int seifert_circle_count() const;

  /// String invariant under relabeling that preserves the run structure and
  /// under reordering of components and split pieces.
  std::string canonical_code() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  enum class Route : std::uint8_t { keep, straight, smooth };

  Diagram(std::vector<Crossing> crossings, std::vector<Run> runs, int free_loops)
      : crossings_(std::move(crossings)), runs_(std::move(runs)), free_loops_(free_loops) {}

  /// Removes every crossing whose route is not `keep`, joining strands through
  /// it straight or by the oriented smoothing, then relabels. When
  /// `drop_component` is non-empty, strands of flagged old components are
  /// discarded afterwards.
  Diagram rewire(const std::vector<Route>& route, const std::vector<bool>& drop_component = {}) const;

  bool find_reducing_move(std::vector<Route>& route) const;

  std::vector<Crossing> crossings_;
  std::vector<Run> runs_;
  int free_loops_ = 0;
};

Diagram connected_sum(const Diagram& d1, const Diagram& d2);

/// Split union: `d2` drawn far away from `d1`.
Diagram disjoint_union(const Diagram& d1, const Diagram& d2);

}  // namespace clasp2
