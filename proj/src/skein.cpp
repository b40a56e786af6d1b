#include "clasp2/skein.hpp"

#include <vector>

namespace clasp2 {

namespace {

const LaurentPoly& unlink_factor() {
  static const LaurentPoly f = (LaurentPoly::v(-1) - LaurentPoly::v(1)) * LaurentPoly::z(-1);
  return f;
}

const LaurentPoly& p0_unlink_factor() {
  static const LaurentPoly f = LaurentPoly::v(-2) - 1;
  return f;
}

}  // namespace

int first_ascending_crossing(const Diagram& d) {
  const auto& crossings = d.crossings();
  std::vector<int> head_crossing(static_cast<std::size_t>(d.edge_count()));
  std::vector<int> head_slot(static_cast<std::size_t>(d.edge_count()));
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    const auto& c = crossings[k];
    for (int s : {0, c.over_in_slot()}) {
      head_crossing[static_cast<std::size_t>(c.edge[static_cast<std::size_t>(s)])] = static_cast<int>(k);
      head_slot[static_cast<std::size_t>(c.edge[static_cast<std::size_t>(s)])] = s;
    }
  }
  std::vector<char> visited(crossings.size(), 0);
  for (const auto& run : d.runs()) {
    for (int e = run.first; e < run.first + run.length; ++e) {
      const int k = head_crossing[static_cast<std::size_t>(e)];
      if (visited[static_cast<std::size_t>(k)]) continue;
      visited[static_cast<std::size_t>(k)] = 1;
      if (head_slot[static_cast<std::size_t>(e)] == 0) return k;
    }
  }
  return -1;
}

LaurentPoly SkeinEngine::homfly(const Diagram& d) {
  Budget b;
  return eval(Kind::homfly, d, b);
}

LaurentPoly SkeinEngine::conway(const Diagram& d) {
  Budget b;
  return eval(Kind::conway, d, b);
}

LaurentPoly SkeinEngine::p0(const Diagram& d) {
  Budget b;
  return eval(Kind::p0, d, b);
}

std::pair<Integer, Integer> SkeinEngine::conway_coefficients(const Diagram& d) {
  if (!d.is_knot()) throw std::invalid_argument("conway_coefficients: input must be a knot");
  const LaurentPoly c = conway(d);
  return {c.coefficient(0, 2), c.coefficient(0, 4)};
}

LaurentPoly SkeinEngine::eval(Kind kind, const Diagram& input, Budget& budget) {
  if (++budget.used > config_.node_budget)
    throw SkeinBudgetExceeded("skein recursion exceeded node budget of " + std::to_string(config_.node_budget));
  const Diagram d = input.simplify();
  const int k = first_ascending_crossing(d);
  if (k < 0) {
    const unsigned extra = static_cast<unsigned>(d.num_components() - 1);
    switch (kind) {
      case Kind::homfly:
        return unlink_factor().pow(extra);
      case Kind::conway:
        return extra == 0 ? LaurentPoly(1) : LaurentPoly();
      case Kind::p0:
        return p0_unlink_factor().pow(extra);
    }
  }

  std::string key = static_cast<char>(kind) + d.canonical_code();
  LaurentPoly result;
  if (lookup(key, result)) return result;

  const bool positive = d.sign(k) > 0;
  const Diagram switched = d.switch_crossing(k);
  switch (kind) {
    case Kind::homfly: {
      // v^-1 P+ - v P- = z P0
      const LaurentPoly s = eval(kind, switched, budget);
      const LaurentPoly o = eval(kind, d.smooth_crossing(k), budget);
      result = positive ? s.shifted(2, 0) + o.shifted(1, 1) : s.shifted(-2, 0) - o.shifted(-1, 1);
      break;
    }
    case Kind::conway: {
      // C+ - C- = z C0
      const LaurentPoly s = eval(kind, switched, budget);
      const LaurentPoly o = eval(kind, d.smooth_crossing(k), budget);
      result = positive ? s + o.shifted(0, 1) : s - o.shifted(0, 1);
      break;
    }
    case Kind::p0: {
      // v^-2 p+ - p- = p0 for a self-crossing; the smoothing drops out when
      // the crossing joins two components.
      const Diagram smoothed = d.smooth_crossing(k);
      const bool self = smoothed.num_components() > d.num_components();
      const LaurentPoly s = eval(kind, switched, budget);
      if (!self) {
        result = s.shifted(positive ? 2 : -2, 0);
      } else {
        const LaurentPoly o = eval(kind, smoothed, budget);
        result = positive ? (s + o).shifted(2, 0) : s.shifted(-2, 0) - o;
      }
      break;
    }
  }
  store(key, result);
  return result;
}

bool SkeinEngine::lookup(const std::string& key, LaurentPoly& out) {
  std::lock_guard lock(mutex_);
  auto it = index_.find(key);
  if (it == index_.end()) return false;
  lru_.splice(lru_.begin(), lru_, it->second);
  out = it->second->second;
  return true;
}

void SkeinEngine::store(const std::string& key, const LaurentPoly& value) {
  if (config_.memo_capacity == 0) return;
  std::lock_guard lock(mutex_);
  if (index_.contains(key)) return;
  lru_.emplace_front(key, value);
  index_.emplace(key, lru_.begin());
  while (lru_.size() > config_.memo_capacity) {
    index_.erase(lru_.back().first);
    lru_.pop_back();
  }
}

std::size_t SkeinEngine::cache_size() const {
  std::lock_guard lock(mutex_);
  return lru_.size();
}

void SkeinEngine::clear_cache() {
  std::lock_guard lock(mutex_);
  lru_.clear();
  index_.clear();
}

SkeinEngine& default_engine() {
  static SkeinEngine engine;
  return engine;
}

LaurentPoly homfly(const Diagram& d) { return default_engine().homfly(d); }
LaurentPoly conway(const Diagram& d) { return default_engine().conway(d); }
LaurentPoly p0(const Diagram& d) { return default_engine().p0(d); }
std::pair<Integer, Integer> conway_coefficients(const Diagram& d) { return default_engine().conway_coefficients(d); }

}  // namespace clasp2
