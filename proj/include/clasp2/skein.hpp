#pragma once

#include <cstddef>
#include <cstdint>
#include <list>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "clasp2/diagram.hpp"
#include "clasp2/laurent.hpp"

namespace clasp2 {

class SkeinBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SkeinConfig {
  std::size_t memo_capacity = std::size_t{1} << 20;
  std::uint64_t node_budget = 10'000'000;
};

/// Memoized skein-tree evaluation of HOMFLY, Conway and p^0.
///
/// Each node is simplified, looked up by canonical code, and otherwise split
/// at the first crossing met from below while walking components in order
/// from their lowest edge. A diagram with no such crossing is descending and
/// hence an unlink. The memo table is shared and guarded by a mutex; values
/// are computed outside the lock, so concurrent callers may duplicate work but
/// never see a torn entry.
class SkeinEngine {
 public:
  explicit SkeinEngine(SkeinConfig config = {}) : config_(config) {}

  SkeinEngine(const SkeinEngine&) = delete;
  SkeinEngine& operator=(const SkeinEngine&) = delete;

  LaurentPoly homfly(const Diagram& d);
  LaurentPoly conway(const Diagram& d);
  LaurentPoly p0(const Diagram& d);

  /// (a2, a4) of a knot. Throws std::invalid_argument for links.
  std::pair<Integer, Integer> conway_coefficients(const Diagram& d);

  std::size_t cache_size() const;
  void clear_cache();
  const SkeinConfig& config() const { return config_; }

 private:
  enum class Kind : char { homfly = 'H', conway = 'C', p0 = 'P' };
  struct Budget {
    std::uint64_t used = 0;
  };

  LaurentPoly eval(Kind kind, const Diagram& d, Budget& budget);
  bool lookup(const std::string& key, LaurentPoly& out);
  void store(const std::string& key, const LaurentPoly& value);

  SkeinConfig config_;
  mutable std::mutex mutex_;
  std::list<std::pair<std::string, LaurentPoly>> lru_;
  std::unordered_map<std::string, std::list<std::pair<std::string, LaurentPoly>>::iterator> index_;
};

/// Process-wide engine with the default configuration.
SkeinEngine& default_engine();

LaurentPoly homfly(const Diagram& d);
LaurentPoly conway(const Diagram& d);
LaurentPoly p0(const Diagram& d);
std::pair<Integer, Integer> conway_coefficients(const Diagram& d);

/// Index of the first crossing reached along its under-strand when walking
/// components in order from their lowest edge, or -1 for a descending diagram.
int first_ascending_crossing(const Diagram& d);

}  // namespace clasp2
