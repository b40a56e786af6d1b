#include "clasp2/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>

namespace clasp2 {

namespace {

enum class Dir : std::uint8_t { unknown, in, out };

Dir opposite(Dir d) { return d == Dir::in ? Dir::out : Dir::in; }

struct Occurrence {
  int crossing;
  int slot;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

// Strand exit slot when passing through crossing `c` from incoming slot `s`.
int straight_exit(const Crossing& c, int s) { return s == 0 ? 2 : c.over_out_slot(); }
int smooth_exit(const Crossing& c, int s) { return s == 0 ? c.over_out_slot() : 2; }

class PdParser {
 public:
  explicit PdParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  void parse(std::vector<std::array<int, 4>>& quads, int& loops) {
    expect("PD[");
    bool any = false;
    if (!accept("]")) {
      do {
        any = true;
        if (accept("X[")) {
          std::array<int, 4> q{};
          for (int i = 0; i < 4; ++i) {
            if (i > 0) expect(",");
            q[static_cast<std::size_t>(i)] = integer();
          }
          expect("]");
          quads.push_back(q);
        } else if (accept("Loop[")) {
          const int k = integer();
          expect("]");
          loops += k;
        } else {
          fail("expected X[ or Loop[");
        }
      } while (accept(","));
      expect("]");
    }
    if (pos_ != s_.size()) fail("trailing characters");
    if (!any) loops = 1;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PdParseError("PD parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  bool accept(std::string_view tok) {
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  int integer() {
    int value = 0;
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Diagram Diagram::unlink(int k) {
  if (k < 0) throw std::invalid_argument("unlink: negative component count");
  return Diagram({}, {}, k);
}

Diagram Diagram::from_quadruples(const std::vector<std::array<int, 4>>& quads, int free_loops) {
  if (free_loops < 0) throw DiagramValidationError("negative free loop count");
  const int n = static_cast<int>(quads.size());
  const int edges = 2 * n;
  std::vector<std::vector<Occurrence>> occ(static_cast<std::size_t>(edges));
  for (int k = 0; k < n; ++k) {
    for (int s = 0; s < 4; ++s) {
      const int e = quads[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
      if (e < 0 || e >= edges)
        throw DiagramValidationError("edge label " + std::to_string(e + 1) + " outside 1.." + std::to_string(edges));
      occ[static_cast<std::size_t>(e)].push_back({k, s});
    }
  }
  for (int e = 0; e < edges; ++e)
    if (occ[static_cast<std::size_t>(e)].size() != 2)
      throw DiagramValidationError("edge label " + std::to_string(e + 1) + " occurs " +
                                   std::to_string(occ[static_cast<std::size_t>(e)].size()) + " times");

  // Components by connectivity alone; orientation is settled afterwards.
  UnionFind uf(edges);
  for (const auto& q : quads) {
    uf.unite(q[0], q[2]);
    uf.unite(q[1], q[3]);
  }
  std::map<int, std::pair<int, int>> range;  // root -> (min, count)
  for (int e = 0; e < edges; ++e) {
    auto [it, fresh] = range.try_emplace(uf.find(e), e, 0);
    it->second.first = std::min(it->second.first, e);
    ++it->second.second;
  }
  auto succ = [&](int e) {
    const auto& [lo, len] = range.at(uf.find(e));
    return lo + (e - lo + 1) % len;
  };
  for (const auto& [root, r] : range) {
    for (int e = r.first; e < r.first + r.second; ++e)
      if (uf.find(e) != root) throw DiagramValidationError("component labels are not a consecutive run");
  }

  std::vector<std::array<Dir, 4>> dir(static_cast<std::size_t>(n));
  std::queue<Occurrence> pending;
  auto assign = [&](int k, int s, Dir d) {
    Dir& cur = dir[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
    if (cur == d) return;
    if (cur != Dir::unknown) throw DiagramValidationError("inconsistent strand orientation");
    cur = d;
    pending.push({k, s});
  };
  auto propagate = [&] {
    while (!pending.empty()) {
      const auto [k, s] = pending.front();
      pending.pop();
      const Dir d = dir[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
      const int e = quads[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
      for (const auto& o : occ[static_cast<std::size_t>(e)])
        if (o.crossing != k || o.slot != s) assign(o.crossing, o.slot, opposite(d));
      assign(k, (s + 2) % 4, opposite(d));
    }
  };
  for (int k = 0; k < n; ++k) {
    assign(k, 0, Dir::in);
    assign(k, 2, Dir::out);
  }
  propagate();
  for (;;) {
    bool unresolved = false;
    bool progress = false;
    for (int k = 0; k < n && !progress; ++k) {
      if (dir[static_cast<std::size_t>(k)][1] != Dir::unknown) continue;
      unresolved = true;
      const int b = quads[static_cast<std::size_t>(k)][1];
      const int d = quads[static_cast<std::size_t>(k)][3];
      const bool forward = succ(b) == d;
      const bool backward = succ(d) == b;
      if (forward != backward) {
        assign(k, 1, forward ? Dir::in : Dir::out);
        propagate();
        progress = true;
      }
    }
    if (!unresolved) break;
    if (!progress) throw DiagramValidationError("ambiguous over-strand orientation");
  }

  std::vector<Crossing> crossings(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    crossings[static_cast<std::size_t>(k)].edge = quads[static_cast<std::size_t>(k)];
    crossings[static_cast<std::size_t>(k)].over_from_b = dir[static_cast<std::size_t>(k)][1] == Dir::in;
  }

  return from_oriented(std::move(crossings), free_loops);
}

Diagram Diagram::from_oriented(std::vector<Crossing> crossings, int free_loops) {
  if (free_loops < 0) throw DiagramValidationError("negative free loop count");
  const int edges = 2 * static_cast<int>(crossings.size());
  std::vector<int> next(static_cast<std::size_t>(edges), -1);
  std::vector<int> heads(static_cast<std::size_t>(edges), 0);
  std::vector<int> tails(static_cast<std::size_t>(edges), 0);
  for (const auto& c : crossings) {
    for (int s = 0; s < 4; ++s) {
      const int e = c.edge[static_cast<std::size_t>(s)];
      if (e < 0 || e >= edges)
        throw DiagramValidationError("edge label " + std::to_string(e + 1) + " outside 1.." + std::to_string(edges));
      if (c.is_incoming_slot(s)) {
        ++heads[static_cast<std::size_t>(e)];
        next[static_cast<std::size_t>(e)] = c.edge[static_cast<std::size_t>(straight_exit(c, s))];
      } else {
        ++tails[static_cast<std::size_t>(e)];
      }
    }
  }
  for (int e = 0; e < edges; ++e)
    if (heads[static_cast<std::size_t>(e)] != 1 || tails[static_cast<std::size_t>(e)] != 1)
      throw DiagramValidationError("edge label " + std::to_string(e + 1) + " does not run between two crossings");

  // Following the orientation must step through consecutive labels.
  std::vector<Run> runs;
  std::vector<char> seen(static_cast<std::size_t>(edges), 0);
  for (int e0 = 0; e0 < edges; ++e0) {
    if (seen[static_cast<std::size_t>(e0)]) continue;
    int len = 0;
    for (int e = e0; !seen[static_cast<std::size_t>(e)]; e = next[static_cast<std::size_t>(e)]) {
      seen[static_cast<std::size_t>(e)] = 1;
      ++len;
    }
    for (int i = 0; i < len; ++i) {
      const int e = e0 + i;
      const int want = e0 + (i + 1) % len;
      if (e >= edges || next[static_cast<std::size_t>(e)] != want)
        throw DiagramValidationError("labels along a component are not consecutive after edge " +
                                     std::to_string(std::min(e, edges - 1) + 1));
    }
    runs.push_back({e0, len});
  }
  return Diagram(std::move(crossings), std::move(runs), free_loops);
}

Diagram Diagram::parse(std::string_view text) {
  std::vector<std::array<int, 4>> quads;
  int loops = 0;
  PdParser(text).parse(quads, loops);
  for (auto& q : quads)
    for (auto& e : q) e -= 1;
  return from_quadruples(quads, loops);
}

std::string Diagram::to_pd_string() const {
  if (crossings_.empty() && free_loops_ == 1) return "PD[]";
  std::ostringstream out;
  out << "PD[";
  bool first = true;
  for (const auto& c : crossings_) {
    if (!first) out << ',';
    first = false;
    out << "X[" << c.edge[0] + 1 << ',' << c.edge[1] + 1 << ',' << c.edge[2] + 1 << ',' << c.edge[3] + 1 << ']';
  }
  if (free_loops_ > 0) out << (first ? "" : ",") << "Loop[" << free_loops_ << ']';
  out << ']';
  return out.str();
}

int Diagram::component_of_edge(int e) const {
  for (std::size_t i = 0; i < runs_.size(); ++i)
    if (e >= runs_[i].first && e < runs_[i].first + runs_[i].length) return static_cast<int>(i);
  throw std::out_of_range("edge label out of range");
}

int Diagram::next_edge(int e) const {
  const Run& r = runs_[static_cast<std::size_t>(component_of_edge(e))];
  return r.first + (e - r.first + 1) % r.length;
}

std::vector<std::vector<int>> Diagram::components() const {
  std::vector<std::vector<int>> out;
  for (const auto& r : runs_) {
    std::vector<int> labels(static_cast<std::size_t>(r.length));
    std::iota(labels.begin(), labels.end(), r.first);
    out.push_back(std::move(labels));
  }
  out.resize(out.size() + static_cast<std::size_t>(free_loops_));
  return out;
}

int Diagram::linking_number(int i, int j) const {
  if (i == j) throw std::invalid_argument("linking_number: identical components");
  if (i < 0 || j < 0 || i >= num_components() || j >= num_components())
    throw std::out_of_range("linking_number: component index out of range");
  int twice = 0;
  for (const auto& c : crossings_) {
    const int a = component_of_edge(c.edge[0]);
    const int b = component_of_edge(c.edge[static_cast<std::size_t>(c.over_in_slot())]);
    if ((a == i && b == j) || (a == j && b == i)) twice += c.sign();
  }
  return twice / 2;
}

int Diagram::total_linking_number() const {
  int twice = 0;
  for (const auto& c : crossings_)
    if (component_of_edge(c.edge[0]) != component_of_edge(c.edge[static_cast<std::size_t>(c.over_in_slot())]))
      twice += c.sign();
  return twice / 2;
}

int Diagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings_) w += c.sign();
  return w;
}

Diagram Diagram::switch_crossing(int k) const {
  if (k < 0 || k >= crossing_count()) throw std::out_of_range("switch_crossing: index out of range");
  Diagram out = *this;
  Crossing& c = out.crossings_[static_cast<std::size_t>(k)];
  const auto e = c.edge;
  if (c.over_from_b)
    c.edge = {e[1], e[2], e[3], e[0]};
  else
    c.edge = {e[3], e[0], e[1], e[2]};
  c.over_from_b = !c.over_from_b;
  return out;
}

Diagram Diagram::mirror() const {
  Diagram out = *this;
  for (int k = 0; k < crossing_count(); ++k) out = out.switch_crossing(k);
  return out;
}

Diagram Diagram::smooth_crossing(int k) const {
  if (k < 0 || k >= crossing_count()) throw std::out_of_range("smooth_crossing: index out of range");
  std::vector<Route> route(crossings_.size(), Route::keep);
  route[static_cast<std::size_t>(k)] = Route::smooth;
  return rewire(route);
}

Diagram Diagram::reverse_component(int i) const {
  if (i < 0 || i >= num_components()) throw std::out_of_range("reverse_component: component index out of range");
  if (i >= static_cast<int>(runs_.size())) return *this;
  const Run r = runs_[static_cast<std::size_t>(i)];
  const auto relabel = [&](int e) { return component_of_edge(e) == i ? r.first + (r.first + r.length - 1 - e) : e; };
  std::vector<Crossing> out;
  for (const auto& c : crossings_) {
    Crossing n = c;
    if (component_of_edge(c.edge[0]) == i) {
      n.edge = {c.edge[2], c.edge[3], c.edge[0], c.edge[1]};
      n.over_from_b = !n.over_from_b;
    }
    if (component_of_edge(c.edge[static_cast<std::size_t>(c.over_in_slot())]) == i) n.over_from_b = !n.over_from_b;
    for (int& e : n.edge) e = relabel(e);
    out.push_back(n);
  }
  return from_oriented(std::move(out), free_loops_);
}

Diagram Diagram::sublink(const std::vector<int>& keep) const {
  std::vector<bool> drop(static_cast<std::size_t>(num_components()), true);
  for (int i : keep) {
    if (i < 0 || i >= num_components()) throw std::out_of_range("sublink: component index out of range");
    drop[static_cast<std::size_t>(i)] = false;
  }
  std::vector<Route> route(crossings_.size(), Route::keep);
  for (std::size_t k = 0; k < crossings_.size(); ++k) {
    const auto& c = crossings_[k];
    const int a = component_of_edge(c.edge[0]);
    const int b = component_of_edge(c.edge[static_cast<std::size_t>(c.over_in_slot())]);
    if (drop[static_cast<std::size_t>(a)] || drop[static_cast<std::size_t>(b)]) route[k] = Route::straight;
  }
  return rewire(route, drop);
}

Diagram Diagram::rewire(const std::vector<Route>& route, const std::vector<bool>& drop_component) const {
  const int n = crossing_count();
  const int edges = edge_count();
  std::vector<SlotRef> head(static_cast<std::size_t>(edges));
  std::vector<SlotRef> tail(static_cast<std::size_t>(edges));
  for (int k = 0; k < n; ++k) {
    const auto& c = crossings_[static_cast<std::size_t>(k)];
    for (int s = 0; s < 4; ++s) {
      auto& ref = c.is_incoming_slot(s) ? head : tail;
      ref[static_cast<std::size_t>(c.edge[static_cast<std::size_t>(s)])] = {k, s};
    }
  }
  auto kept = [&](int k) { return route[static_cast<std::size_t>(k)] == Route::keep; };
  auto pass = [&](int e) {
    const auto [k, s] = head[static_cast<std::size_t>(e)];
    const auto& c = crossings_[static_cast<std::size_t>(k)];
    const int out = route[static_cast<std::size_t>(k)] == Route::straight ? straight_exit(c, s) : smooth_exit(c, s);
    return c.edge[static_cast<std::size_t>(out)];
  };
  std::vector<int> comp(static_cast<std::size_t>(edges));
  for (std::size_t i = 0; i < runs_.size(); ++i)
    for (int e = runs_[i].first; e < runs_[i].first + runs_[i].length; ++e)
      comp[static_cast<std::size_t>(e)] = static_cast<int>(i);
  auto dropped = [&](int component) {
    return !drop_component.empty() && drop_component[static_cast<std::size_t>(component)];
  };

  struct Chain {
    int first_edge;
    int min_edge;
  };
  std::vector<Chain> chains;
  std::vector<char> seen(static_cast<std::size_t>(edges), 0);
  // Chains indexed by the kept slot at which they start (tail) and end (head).
  std::vector<int> chain_at_slot(static_cast<std::size_t>(4 * n), -1);
  for (int e = 0; e < edges; ++e) {
    const SlotRef t = tail[static_cast<std::size_t>(e)];
    if (!kept(t.crossing)) continue;
    const int id = static_cast<int>(chains.size());
    int cur = e;
    int lo = e;
    seen[static_cast<std::size_t>(cur)] = 1;
    while (!kept(head[static_cast<std::size_t>(cur)].crossing)) {
      cur = pass(cur);
      seen[static_cast<std::size_t>(cur)] = 1;
      lo = std::min(lo, cur);
    }
    const SlotRef h = head[static_cast<std::size_t>(cur)];
    chain_at_slot[static_cast<std::size_t>(4 * t.crossing + t.slot)] = id;
    chain_at_slot[static_cast<std::size_t>(4 * h.crossing + h.slot)] = id;
    chains.push_back({e, lo});
  }

  int loops = 0;
  for (int i = 0; i < free_loops_; ++i)
    if (!dropped(static_cast<int>(runs_.size()) + i)) ++loops;
  for (int e = 0; e < edges; ++e) {
    if (seen[static_cast<std::size_t>(e)]) continue;
    int cur = e;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = 1;
      cur = pass(cur);
    }
    if (!dropped(comp[static_cast<std::size_t>(e)])) ++loops;
  }

  // The chain following chain c leaves the kept crossing where c arrives.
  std::vector<int> succ_chain(chains.size());
  for (int k = 0; k < n; ++k) {
    if (!kept(k)) continue;
    const auto& c = crossings_[static_cast<std::size_t>(k)];
    for (int s : {0, c.over_in_slot()}) {
      succ_chain[static_cast<std::size_t>(chain_at_slot[static_cast<std::size_t>(4 * k + s)])] =
          chain_at_slot[static_cast<std::size_t>(4 * k + straight_exit(c, s))];
    }
  }

  std::vector<int> cycle_of(chains.size(), -1);
  std::vector<std::vector<int>> cycles;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (cycle_of[i] >= 0) continue;
    // Start each new component at its chain carrying the smallest old label.
    std::size_t best = i;
    for (std::size_t j = succ_chain[i]; j != i; j = static_cast<std::size_t>(succ_chain[j]))
      if (chains[j].min_edge < chains[best].min_edge) best = j;
    std::vector<int> cyc;
    std::size_t j = best;
    do {
      cycle_of[j] = static_cast<int>(cycles.size());
      cyc.push_back(static_cast<int>(j));
      j = static_cast<std::size_t>(succ_chain[j]);
    } while (j != best);
    cycles.push_back(std::move(cyc));
  }
  std::sort(cycles.begin(), cycles.end(), [&](const auto& a, const auto& b) {
    return chains[static_cast<std::size_t>(a.front())].min_edge < chains[static_cast<std::size_t>(b.front())].min_edge;
  });

  std::vector<int> label(chains.size());
  std::vector<Run> runs;
  int next = 0;
  for (const auto& cyc : cycles) {
    runs.push_back({next, static_cast<int>(cyc.size())});
    for (int id : cyc) label[static_cast<std::size_t>(id)] = next++;
  }

  std::vector<Crossing> out;
  for (int k = 0; k < n; ++k) {
    if (!kept(k)) continue;
    Crossing c = crossings_[static_cast<std::size_t>(k)];
    for (int s = 0; s < 4; ++s)
      c.edge[static_cast<std::size_t>(s)] = label[static_cast<std::size_t>(chain_at_slot[static_cast<std::size_t>(4 * k + s)])];
    out.push_back(c);
  }
  return Diagram(std::move(out), std::move(runs), loops);
}

bool Diagram::find_reducing_move(std::vector<Route>& route) const {
  const int n = crossing_count();
  std::vector<SlotRef> other(static_cast<std::size_t>(4 * n));
  {
    std::vector<SlotRef> first(static_cast<std::size_t>(edge_count()));
    for (int k = 0; k < n; ++k) {
      for (int s = 0; s < 4; ++s) {
        const int e = crossings_[static_cast<std::size_t>(k)].edge[static_cast<std::size_t>(s)];
        SlotRef& f = first[static_cast<std::size_t>(e)];
        if (f.crossing < 0) {
          f = {k, s};
        } else {
          other[static_cast<std::size_t>(4 * k + s)] = f;
          other[static_cast<std::size_t>(4 * f.crossing + f.slot)] = {k, s};
        }
      }
    }
  }
  // Walking a face: leave along slot s, arrive at (k', s'), leave again at s'+1.
  auto step = [&](SlotRef at) {
    const SlotRef arrive = other[static_cast<std::size_t>(4 * at.crossing + at.slot)];
    return SlotRef{arrive.crossing, (arrive.slot + 1) % 4};
  };
  for (int k = 0; k < n; ++k) {
    for (int s = 0; s < 4; ++s) {
      const SlotRef a{k, s};
      const SlotRef b = step(a);
      if (b.crossing == k && b.slot == s) {
        route[static_cast<std::size_t>(k)] = Route::straight;
        return true;
      }
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int s = 0; s < 4; ++s) {
      const SlotRef a{k, s};
      const SlotRef b = step(a);
      const SlotRef c = step(b);
      if (c.crossing != k || c.slot != s || b.crossing == k) continue;
      const SlotRef arrive = other[static_cast<std::size_t>(4 * k + s)];
      if (arrive.slot % 2 != s % 2) continue;
      if (sign(k) == sign(b.crossing)) continue;
      route[static_cast<std::size_t>(k)] = Route::straight;
      route[static_cast<std::size_t>(b.crossing)] = Route::straight;
      return true;
    }
  }
  return false;
}

Diagram Diagram::simplify() const {
  Diagram cur = *this;
  for (;;) {
    std::vector<Route> route(cur.crossings_.size(), Route::keep);
    if (!cur.find_reducing_move(route)) return cur;
    cur = cur.rewire(route);
  }
}

int Diagram::seifert_circle_count() const {
  return rewire(std::vector<Route>(crossings_.size(), Route::smooth)).free_loops();
}

std::string Diagram::canonical_code() const {
  const int n = crossing_count();
  const int edges = edge_count();
  std::vector<int> comp(static_cast<std::size_t>(edges));
  for (std::size_t i = 0; i < runs_.size(); ++i)
    for (int e = runs_[i].first; e < runs_[i].first + runs_[i].length; ++e) comp[static_cast<std::size_t>(e)] = static_cast<int>(i);
  std::vector<SlotRef> head(static_cast<std::size_t>(edges));
  for (int k = 0; k < n; ++k) {
    const auto& c = crossings_[static_cast<std::size_t>(k)];
    for (int s : {0, c.over_in_slot()}) head[static_cast<std::size_t>(c.edge[static_cast<std::size_t>(s)])] = {k, s};
  }

  // Split into connected pieces (components sharing crossings).
  UnionFind uf(static_cast<int>(runs_.size()));
  for (const auto& c : crossings_)
    uf.unite(comp[static_cast<std::size_t>(c.edge[0])], comp[static_cast<std::size_t>(c.edge[1])]);
  std::map<int, std::vector<int>> piece_edges;
  for (int e = 0; e < edges; ++e) piece_edges[uf.find(comp[static_cast<std::size_t>(e)])].push_back(e);

  std::vector<std::string> piece_codes;
  std::vector<int> relabel(static_cast<std::size_t>(edges), -1);
  for (const auto& [root, members] : piece_edges) {
    std::optional<std::vector<int>> best;
    for (int start : members) {
      for (int e : members) relabel[static_cast<std::size_t>(e)] = -1;
      std::vector<int> order;  // old labels in new-label order
      std::vector<int> lengths;
      auto take_component = [&](int e0) {
        const Run& r = runs_[static_cast<std::size_t>(comp[static_cast<std::size_t>(e0)])];
        lengths.push_back(r.length);
        for (int i = 0, e = e0; i < r.length; ++i, e = r.first + (e - r.first + 1) % r.length) {
          relabel[static_cast<std::size_t>(e)] = static_cast<int>(order.size());
          order.push_back(e);
        }
      };
      take_component(start);
      for (std::size_t idx = 0; idx < order.size(); ++idx) {
        const auto [k, s] = head[static_cast<std::size_t>(order[idx])];
        const auto& c = crossings_[static_cast<std::size_t>(k)];
        for (int t = 0; t < 4; ++t) {
          const int e = c.edge[static_cast<std::size_t>((s + t) % 4)];
          if (relabel[static_cast<std::size_t>(e)] < 0) take_component(e);
        }
      }
      std::vector<std::array<int, 5>> tuples;
      for (int e : order) {
        const auto [k, s] = head[static_cast<std::size_t>(e)];
        if (s != 0) continue;
        const auto& c = crossings_[static_cast<std::size_t>(k)];
        tuples.push_back({relabel[static_cast<std::size_t>(c.edge[0])], relabel[static_cast<std::size_t>(c.edge[1])],
                          relabel[static_cast<std::size_t>(c.edge[2])], relabel[static_cast<std::size_t>(c.edge[3])],
                          c.sign()});
      }
      std::sort(tuples.begin(), tuples.end());
      std::vector<int> code = lengths;
      code.push_back(-1);
      for (const auto& t : tuples) code.insert(code.end(), t.begin(), t.end());
      if (!best || code < *best) best = std::move(code);
    }
    std::string text;
    for (int x : *best) {
      text += std::to_string(x);
      text += ' ';
    }
    piece_codes.push_back(std::move(text));
  }
  std::sort(piece_codes.begin(), piece_codes.end());
  std::string out = "L" + std::to_string(free_loops_);
  for (const auto& p : piece_codes) out += "|" + p;
  return out;
}

Diagram connected_sum(const Diagram& d1, const Diagram& d2) {
  if (!d1.is_knot() || !d2.is_knot()) throw std::invalid_argument("connected_sum: both inputs must be knots");
  if (d1.crossing_count() == 0) return d2;
  if (d2.crossing_count() == 0) return d1;
  const int e1 = d1.edge_count();
  const int e2 = d2.edge_count();
  std::vector<std::array<int, 4>> quads;
  for (const auto& c : d1.crossings()) {
    auto q = c.edge;
    for (int s = 0; s < 4; ++s)
      if (q[static_cast<std::size_t>(s)] == e1 - 1 && c.is_incoming_slot(s)) q[static_cast<std::size_t>(s)] = e1 + e2 - 1;
    quads.push_back(q);
  }
  for (const auto& c : d2.crossings()) {
    std::array<int, 4> q{};
    for (int s = 0; s < 4; ++s) {
      const int e = c.edge[static_cast<std::size_t>(s)];
      if (e == 0)
        q[static_cast<std::size_t>(s)] = c.is_incoming_slot(s) ? e1 - 1 : e1 + e2 - 1;
      else
        q[static_cast<std::size_t>(s)] = e1 + e - 1;
    }
    quads.push_back(q);
  }
  return Diagram::from_quadruples(quads);
}

Diagram disjoint_union(const Diagram& d1, const Diagram& d2) {
  std::vector<Crossing> crossings = d1.crossings();
  const int offset = d1.edge_count();
  for (Crossing c : d2.crossings()) {
    for (auto& e : c.edge) e += offset;
    crossings.push_back(c);
  }
  return Diagram::from_oriented(std::move(crossings), d1.free_loops() + d2.free_loops());
}

}  // namespace clasp2
