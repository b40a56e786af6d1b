#include "clasp2/tangle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include <boost/rational.hpp>

#include "clasp2/laurent.hpp"

namespace clasp2 {

namespace {

long long floor_div(long long x, long long d) {
  const long long q = x / d;
  return (x % d != 0 && ((x < 0) != (d < 0))) ? q - 1 : q;
}

long long ceil_div(long long x, long long d) { return -floor_div(-x, d); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long long parse_int(std::string_view s) {
  s = trim(s);
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(std::string(s), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return value;
}

// Over-strand of a positive twist runs from the NW corner to the SE corner.
// Chosen so that K(-2/3, inf, -2/3) is the sum of two positive trefoils.
constexpr bool kPositiveTwistNorthwestOver = true;

// Turns a closed network into an oriented diagram. Crossing corners and
// connector nodes are joined by arcs; corners have one arc, connectors two.
// Each `preferred` (node, arc) pair starts a component walk along that arc,
// fixing the orientation and order of the components it reaches first.
Diagram close_network(int nodes, const std::vector<std::array<int, 4>>& slots,
                      const std::vector<std::pair<int, int>>& arcs,
                      const std::vector<std::pair<int, std::size_t>>& preferred) {
  const auto n = static_cast<std::size_t>(nodes);
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    incident[static_cast<std::size_t>(arcs[i].first)].push_back(i);
    incident[static_cast<std::size_t>(arcs[i].second)].push_back(i);
  }
  std::vector<int> slot_at(n, -1);  // 4k + s
  for (std::size_t k = 0; k < slots.size(); ++k)
    for (int s = 0; s < 4; ++s) slot_at[static_cast<std::size_t>(slots[k][static_cast<std::size_t>(s)])] =
        static_cast<int>(4 * k) + s;
  for (std::size_t v = 0; v < n; ++v)
    if (incident[v].size() != (slot_at[v] >= 0 ? 1u : 2u)) throw std::logic_error("diagram network is not 4-valent");

  // Pair each crossing slot with the slot at the other end of its strand.
  std::vector<bool> visited(n, false);
  const auto walk_from = [&](std::size_t start, std::size_t arc) {
    std::size_t node = start;
    visited[node] = true;
    while (true) {
      const auto& [x, y] = arcs[arc];
      node = static_cast<std::size_t>(x) == node ? static_cast<std::size_t>(y) : static_cast<std::size_t>(x);
      visited[node] = true;
      if (slot_at[node] >= 0 || node == start) return node;
      arc = incident[node][0] == arc ? incident[node][1] : incident[node][0];
    }
  };
  const auto walk = [&](std::size_t start) { return walk_from(start, incident[start][0]); };
  const std::size_t nslots = 4 * slots.size();
  std::vector<int> partner(nslots, -1);
  for (std::size_t v = 0; v < n; ++v)
    if (slot_at[v] >= 0 && partner[static_cast<std::size_t>(slot_at[v])] < 0) {
      const std::size_t w = walk(v);
      partner[static_cast<std::size_t>(slot_at[v])] = slot_at[w];
      partner[static_cast<std::size_t>(slot_at[w])] = slot_at[v];
    }
  int free_loops = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (!visited[v]) {
      walk(v);
      ++free_loops;
    }

  // Orient each component and number its edges consecutively. `label[x]` is
  // the edge at slot x; `entry[x]` says the strand enters the crossing there.
  std::vector<int> label(nslots, -1);
  std::vector<bool> entry(nslots, false);
  std::vector<std::size_t> starts;
  for (const auto& [node, arc] : preferred) {
    const std::size_t w = walk_from(static_cast<std::size_t>(node), arc);
    if (slot_at[w] >= 0) starts.push_back(static_cast<std::size_t>(slot_at[w]));
  }
  for (std::size_t x = 0; x < nslots; ++x) starts.push_back(x);
  int next = 0;
  for (const std::size_t start : starts) {
    if (label[start] >= 0) continue;
    std::size_t in = start;
    do {
      entry[in] = true;
      const std::size_t out = (in & ~std::size_t{3}) | ((in + 2) & 3);
      const auto to = static_cast<std::size_t>(partner[out]);
      label[out] = next;
      label[to] = next;
      ++next;
      in = to;
    } while (in != start);
  }

  std::vector<Crossing> crossings;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const std::size_t rot = entry[4 * k] ? 0 : 2;
    Crossing c;
    for (std::size_t s = 0; s < 4; ++s) c.edge[s] = label[4 * k + (s + rot) % 4];
    c.over_from_b = entry[4 * k + (1 + rot) % 4];
    crossings.push_back(c);
  }
  return Diagram::from_oriented(std::move(crossings), free_loops);
}

}  // namespace

ExtendedRational::ExtendedRational(long long p, long long q) {
  if (p == 0 && q == 0) throw std::invalid_argument("0/0 is not an extended rational");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) {
    p_ = 1;
    q_ = 0;
    return;
  }
  const long long g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

ExtendedRational ExtendedRational::parse(std::string_view text) {
  text = trim(text);
  if (text == "inf" || text == "oo" || text == "infinity") return infinity();
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_int(text), 1};
  return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

std::string ExtendedRational::to_string() const {
  if (is_infinite()) return "inf";
  if (q_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "/" + std::to_string(q_);
}

MontesinosDesc parse_montesinos(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  MontesinosDesc m;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto comma = text.find(',');
    if ((i < 2) != (comma != std::string_view::npos))
      throw std::invalid_argument("a Montesinos description needs exactly three entries");
    m[i] = ExtendedRational::parse(text.substr(0, comma));
    if (comma != std::string_view::npos) text.remove_prefix(comma + 1);
  }
  return m;
}

std::string to_string(const MontesinosDesc& m) {
  return "K(" + m[0].to_string() + "," + m[1].to_string() + "," + m[2].to_string() + ")";
}

std::vector<long long> continued_fraction(const ExtendedRational& r) {
  if (r.is_infinite()) throw std::invalid_argument("continued fraction of infinity");
  std::vector<long long> quotients;
  long long p = r.p();
  long long q = r.q();
  while (true) {
    const long long a = p >= 0 ? ceil_div(2 * p - q, 2 * q) : -ceil_div(-2 * p - q, 2 * q);
    quotients.push_back(a);
    const long long rem = p - a * q;
    if (rem == 0) break;
    p = q;
    q = rem;
    if (q < 0) {
      p = -p;
      q = -q;
    }
  }
  std::reverse(quotients.begin(), quotients.end());
  return quotients;
}

ExtendedRational evaluate_continued_fraction(const std::vector<long long>& a) {
  if (a.empty()) throw std::invalid_argument("empty continued fraction");
  ExtendedRational x(a.front(), 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    // a_i + 1/x with x = p/q
    x = x.is_infinite() ? ExtendedRational(a[i], 1) : ExtendedRational(a[i] * x.p() + x.q(), x.p());
  }
  return x;
}

Tangle Tangle::single(bool positive) {
  // Corner nodes NW=0, SW=1, SE=2, NE=3 (counterclockwise), then ports.
  Tangle t;
  t.nodes_ = 8;
  const bool sw_over = positive != kPositiveTwistNorthwestOver;
  t.slots_.push_back(sw_over ? std::array<int, 4>{0, 1, 2, 3} : std::array<int, 4>{1, 2, 3, 0});
  t.ports_ = {4, 5, 6, 7};
  t.arcs_ = {{5, 0}, {6, 1}, {7, 2}, {4, 3}};
  return t;
}

Tangle Tangle::zero() {
  Tangle t;
  t.nodes_ = 4;
  t.ports_ = {0, 1, 2, 3};
  t.arcs_ = {{1, 0}, {2, 3}};
  return t;
}

Tangle Tangle::infinity() {
  Tangle t;
  t.nodes_ = 4;
  t.ports_ = {0, 1, 2, 3};
  t.arcs_ = {{1, 2}, {0, 3}};
  return t;
}

Tangle Tangle::horizontal(long long n) {
  Tangle t = zero();
  for (long long i = 0; i < (n < 0 ? -n : n); ++i) t = i == 0 ? single(n > 0) : t + single(n > 0);
  return t;
}

Tangle Tangle::vertical(long long n) {
  Tangle t = infinity();
  for (long long i = 0; i < (n < 0 ? -n : n); ++i) t = i == 0 ? single(n > 0) : t * single(n > 0);
  return t;
}

Tangle Tangle::rational(const ExtendedRational& r) {
  if (r.is_infinite()) return infinity();
  const auto a = continued_fraction(r);
  const bool odd = a.size() % 2 == 1;
  Tangle t = odd ? horizontal(a[0]) : vertical(a[0]);
  for (std::size_t i = 1; i < a.size(); ++i) {
    // 1-based index i+1; the twist kind alternates starting from a_1's.
    const bool add = (i % 2 == 1) != odd;
    t = add ? t + horizontal(a[i]) : t * vertical(a[i]);
  }
  return t;
}

Tangle Tangle::glue(const Tangle& a, const Tangle& b, std::array<std::pair<Port, Port>, 2> joins,
                    std::array<std::pair<int, Port>, 4> ports) {
  Tangle t;
  const int off = a.nodes_;
  t.nodes_ = a.nodes_ + b.nodes_;
  t.slots_ = a.slots_;
  for (auto s : b.slots_) {
    for (int& x : s) x += off;
    t.slots_.push_back(s);
  }
  t.arcs_ = a.arcs_;
  for (const auto& [x, y] : b.arcs_) t.arcs_.emplace_back(x + off, y + off);
  for (const auto& [pa, pb] : joins) t.arcs_.emplace_back(a.ports_[pa], b.ports_[pb] + off);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& [which, p] = ports[i];
    t.ports_[i] = which == 0 ? a.ports_[p] : b.ports_[p] + off;
  }
  return t;
}

Tangle operator+(const Tangle& a, const Tangle& b) {
  using P = Tangle::Port;
  return Tangle::glue(a, b, {{{P::NE, P::NW}, {P::SE, P::SW}}}, {{{1, P::NE}, {0, P::NW}, {0, P::SW}, {1, P::SE}}});
}

Tangle operator*(const Tangle& a, const Tangle& b) {
  using P = Tangle::Port;
  return Tangle::glue(a, b, {{{P::SW, P::NW}, {P::SE, P::NE}}}, {{{0, P::NE}, {0, P::NW}, {1, P::SW}, {1, P::SE}}});
}

Diagram Tangle::numerator_closure() const { return close({{{NE, NW}, {SE, SW}}}); }

Diagram Tangle::denominator_closure() const { return close({{{NW, SW}, {NE, SE}}}); }

Diagram Tangle::close(std::array<std::pair<Port, Port>, 2> joins) const {
  std::vector<std::pair<int, int>> arcs = arcs_;
  for (const auto& [x, y] : joins) arcs.emplace_back(ports_[x], ports_[y]);
  return close_network(nodes_, slots_, arcs, {});
}

MorseDiagram::MorseDiagram(int strands) {
  if (strands < 0) throw std::invalid_argument("negative strand count");
  for (int j = 0; j < strands; ++j) {
    top_.push_back(nodes_);
    open_.push_back(nodes_++);
  }
  down_arc_.assign(top_.size(), std::nullopt);
}

void MorseDiagram::join(int a, int b) {
  for (int x : {a, b}) {
    const auto it = std::find(top_.begin(), top_.end(), x);
    if (it != top_.end() && !down_arc_[static_cast<std::size_t>(it - top_.begin())])
      down_arc_[static_cast<std::size_t>(it - top_.begin())] = arcs_.size();
  }
  arcs_.emplace_back(a, b);
}

MorseDiagram& MorseDiagram::crossing(int i, bool positive) { return tangle(i, Tangle::single(positive)); }

MorseDiagram& MorseDiagram::braid(const std::vector<int>& word) {
  for (int g : word) {
    if (g == 0) throw std::invalid_argument("braid generator 0");
    crossing(std::abs(g) - 1, g > 0);
  }
  return *this;
}

MorseDiagram& MorseDiagram::tangle(int i, const Tangle& t) {
  if (i < 0 || i + 1 >= width()) throw std::out_of_range("tangle position out of range");
  const int off = nodes_;
  nodes_ += t.nodes_;
  for (auto s : t.slots_) {
    for (int& x : s) x += off;
    slots_.push_back(s);
  }
  for (const auto& [x, y] : t.arcs_) arcs_.emplace_back(x + off, y + off);
  const auto at = static_cast<std::size_t>(i);
  join(open_[at], t.ports_[Tangle::NW] + off);
  join(open_[at + 1], t.ports_[Tangle::NE] + off);
  open_[at] = t.ports_[Tangle::SW] + off;
  open_[at + 1] = t.ports_[Tangle::SE] + off;
  return *this;
}

MorseDiagram& MorseDiagram::cap(int i) {
  if (i < 0 || i + 1 >= width()) throw std::out_of_range("cap position out of range");
  const auto at = open_.begin() + i;
  join(*at, *(at + 1));
  open_.erase(at, at + 2);
  return *this;
}

MorseDiagram& MorseDiagram::cup(int i) {
  if (i < 0 || i > width()) throw std::out_of_range("cup position out of range");
  const int a = nodes_++;
  const int b = nodes_++;
  arcs_.emplace_back(a, b);
  open_.insert(open_.begin() + i, {a, b});
  return *this;
}

Diagram MorseDiagram::closure() const {
  if (open_.size() != top_.size()) throw std::logic_error("closure needs as many bottom as top positions");
  std::vector<std::pair<int, int>> arcs = arcs_;
  std::vector<std::pair<int, std::size_t>> preferred;
  for (std::size_t j = 0; j < top_.size(); ++j) {
    arcs.emplace_back(open_[j], top_[j]);
    preferred.emplace_back(top_[j], down_arc_[j].value_or(arcs.size() - 1));
  }
  return close_network(nodes_, slots_, arcs, preferred);
}

Diagram montesinos_diagram(const MontesinosDesc& m) {
  return (Tangle::rational(m[0]) + Tangle::rational(m[1]) + Tangle::rational(m[2])).numerator_closure();
}

bool montesinos_equivalent(const MontesinosDesc& a, const MontesinosDesc& b) {
  using Q = boost::rational<Integer>;
  const auto parts = [](const MontesinosDesc& m, Q& sum) {
    std::vector<Q> frac;
    for (const auto& r : m) {
      if (r.is_infinite()) throw std::invalid_argument("Montesinos equivalence needs finite entries");
      const Q x(Integer(r.p()), Integer(r.q()));
      sum += x;
      frac.push_back(x - Q(Integer(floor_div(r.p(), r.q()))));
    }
    std::sort(frac.begin(), frac.end());
    return frac;
  };
  Q sa(0);
  Q sb(0);
  const auto fa = parts(a, sa);
  const auto fb = parts(b, sb);
  return sa == sb && fa == fb;
}

namespace {

// Hopf band signs on the arcs joining boundary components (1,2), (2,3), (1,3);
// 0 leaves the arc alone.
Diagram plumbed_pants(int s12, int s23, int s13) {
  MorseDiagram m(4);
  // A Hopf band across a plain strip doubles it with a full twist.
  if (s12 != 0) m.tangle(0, Tangle::horizontal(2 * s12));
  if (s23 != 0) m.tangle(2, Tangle::horizontal(2 * s23));
  // Cores: a Hopf link cabled by the two edges of each annulus.
  for (int k = 0; k < 2; ++k) m.crossing(1, true).crossing(0, true).crossing(2, true).crossing(1, true);
  m.crossing(0, true).crossing(0, true);
  for (int k = 0; k < 4; ++k) m.crossing(2, true);
  m.tangle(1, Tangle::horizontal(1));
  if (s13 != 0) {
    // Band sum of the outer edges along a push-off of the arc through the
    // band, which passes over one edge of the half twist and under the other.
    // The push-off inherits the half twist; the Hopf band adds a full one.
    m.crossing(0, true).crossing(1, false);
    m.tangle(2, Tangle::horizontal(1 + 2 * s13));
    m.crossing(1, true).crossing(0, false);
  }
  return m.closure();
}

}  // namespace

Diagram exceptional_link() { return plumbed_pants(0, 0, 0).reverse_component(1); }

Diagram exceptional_knot(int shared, int eps1, int eps2) {
  if (std::abs(eps1) != 1 || std::abs(eps2) != 1) throw std::invalid_argument("Hopf band signs must be +-1");
  switch (shared) {
    case 1: return plumbed_pants(eps1, 0, eps2);
    case 2: return plumbed_pants(eps1, eps2, 0);
    case 3: return plumbed_pants(0, eps2, eps1);
    default: throw std::invalid_argument("shared boundary component must be 1, 2 or 3");
  }
}

std::vector<CatalogEntry> theorem1_catalog(int n_bound, const Census& census) {
  if (n_bound < 0) throw std::invalid_argument("n_bound must be non-negative");
  std::vector<CatalogEntry> out;

  const Diagram& t = census.at("3_1").diagram;
  const Diagram& f = census.at("4_1").diagram;
  const auto sum = [&](std::string name, const Diagram& a, const Diagram& b) {
    out.push_back({"i", std::move(name), std::nullopt, 0, std::nullopt, connected_sum(a, b), ""});
  };
  sum("3_1#3_1", t, t);
  sum("3_1#4_1", t, f);
  sum("4_1#4_1", f, f);
  sum("3_1#mirror(3_1)", t, t.mirror());

  const ExtendedRational r12(1, 2);
  const auto two_bridge = [&](std::string name, MontesinosDesc m) {
    out.push_back({"ii", std::move(name), std::nullopt, 0, m, montesinos_diagram(m), to_string(m)});
  };
  two_bridge("6_2", {ExtendedRational(-2, 3), ExtendedRational(2, 1), r12});
  two_bridge("6_3", {ExtendedRational(-2, 3), ExtendedRational(-2, 1), r12});
  two_bridge("7_7", {ExtendedRational(-2, 5), ExtendedRational(2, 1), r12});
  two_bridge("mirror(7_6)", {ExtendedRational(-2, 5), ExtendedRational(-2, 1), r12});

  // n = 0 is skipped: 1/(2n) becomes the infinity tangle (a connected sum of
  // two-bridge knots from (i)) and 2/(4n+-1) an integer, giving the
  // two-bridge knots of (ii).
  const auto montesinos = [&](long long n, int sign, MontesinosDesc m) {
    out.push_back({"iii", to_string(m), n, sign, m, montesinos_diagram(m), ""});
  };
  for (long long n = -n_bound; n <= n_bound; ++n) {
    if (n == 0) continue;
    for (int sign : {1, -1}) {
      const ExtendedRational r(2, 4 * n + sign);
      montesinos(n, sign, {r12, ExtendedRational(-2, 3), r});
      montesinos(n, sign, {r12, ExtendedRational(-2, 5), r});
    }
    const ExtendedRational r(1, 2 * n);
    montesinos(n, 0, {r, ExtendedRational(2, 3), ExtendedRational(-2, 3)});
    montesinos(n, 0, {r, ExtendedRational(2, 3), ExtendedRational(-2, 5)});
    montesinos(n, 0, {r, ExtendedRational(2, 5), ExtendedRational(-2, 3)});
    montesinos(n, 0, {r, ExtendedRational(2, 5), ExtendedRational(-2, 5)});
  }

  bool any_exceptional = false;
  for (const auto& e : census.entries()) {
    if (e.name.rfind("Kex", 0) != 0) continue;
    any_exceptional = true;
    out.push_back({"iv", e.name, std::nullopt, 0, std::nullopt, e.diagram, e.provenance});
  }
  if (!any_exceptional) {
    for (int i = 1; i <= 3; ++i)
      for (const char* e1 : {"+", "-"})
        for (const char* e2 : {"+", "-"})
          out.push_back({"iv", "Kex_" + std::to_string(i) + std::string(e1) + e2, std::nullopt, 0, std::nullopt,
                         std::nullopt, "exceptional-knot data file missing; no diagram"});
  }
  return out;
}

}  // namespace clasp2
