#include "clasp2/openbook.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace clasp2 {

std::string to_string(const OpenBookTriple& t) {
  return std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c);
}

OpenBookTriple parse_triple(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '(' && ch != ')') s += ch;
  std::array<int, 3> v{};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? s.find(',', pos) : s.size();
    if (end == std::string::npos) throw std::invalid_argument("expected a,b,c: " + text);
    const std::string part = s.substr(pos, end - pos);
    std::size_t used = 0;
    try {
      v[static_cast<std::size_t>(i)] = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer in triple: " + text);
    }
    if (used != part.size()) throw std::invalid_argument("bad integer in triple: " + text);
    pos = end + 1;
  }
  return {v[0], v[1], v[2]};
}

Word free_reduce(Word w) {
  Word out;
  for (int l : w) {
    if (l == 0 || std::abs(l) > 2) throw std::invalid_argument("letters are +-1 and +-2");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int l : w) {
    s += std::abs(l) == 1 ? 'x' : 'y';
    if (l < 0) s += "^-1";
  }
  return s;
}

Presentation pi1_presentation(const OpenBookTriple& t) {
  Word xy_a;
  for (int i = 0; i < std::abs(t.a); ++i) {
    if (t.a > 0)
      xy_a.insert(xy_a.end(), {1, 2});
    else
      xy_a.insert(xy_a.end(), {-2, -1});
  }
  const auto power = [](int letter, int e) { return Word(static_cast<std::size_t>(std::abs(e)), e > 0 ? letter : -letter); };
  Word r1 = xy_a, r2 = xy_a;
  const Word xb = power(1, t.b), yc = power(2, t.c);
  r1.insert(r1.end(), xb.begin(), xb.end());
  r2.insert(r2.end(), yc.begin(), yc.end());
  return {2, {free_reduce(r1), free_reduce(r2)}};
}

std::vector<std::int64_t> smith_invariants(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Bring the smallest nonzero entry of the remaining block to (t, t) and
    // clear its row and column; repeat until it divides everything.
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || std::abs(m[i][j]) < std::abs(m[pr][pc]))) pr = i, pc = j;
      if (pr == rows) return diag;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const std::int64_t q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const std::int64_t q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(std::abs(m[t][t]));
  }
  return diag;
}

std::int64_t abelianization_order(const Presentation& p) {
  std::vector<std::vector<std::int64_t>> m;
  for (const auto& r : p.relators) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(p.num_generators), 0);
    for (int l : r) row[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
    m.push_back(row);
  }
  const auto d = smith_invariants(m);
  if (static_cast<int>(d.size()) < p.num_generators) return 0;
  return std::accumulate(d.begin(), d.end(), std::int64_t{1}, std::multiplies<>());
}

namespace {

class CosetTable {
 public:
  CosetTable(const Presentation& p, int max_cosets)
      : cols_(2 * p.num_generators), max_cosets_(max_cosets), limit_(16 * static_cast<std::size_t>(max_cosets)) {
    for (const auto& r : p.relators) {
      if (r.empty()) continue;
      Word cols;
      for (int l : r) cols.push_back(2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0));
      relators_.push_back(cols);
    }
    add_row();
  }

  std::optional<std::int64_t> run() {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        if (!scan(c, r, true)) return std::nullopt;
      }
      for (int x = 0; x < cols_ && alive(c); ++x)
        if (entry(c, x) < 0 && !define(c, x)) return std::nullopt;
    }
    return live_;
  }

 private:
  int& entry(std::size_t c, int x) { return table_[c * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(x)]; }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  void add_row() {
    parent_.push_back(static_cast<int>(parent_.size()));
    table_.resize(table_.size() + static_cast<std::size_t>(cols_), -1);
    ++live_;
  }

  bool define(std::size_t c, int x) {
    if (live_ >= max_cosets_) {
      lookahead();
      if (live_ >= max_cosets_ || !alive(c)) return alive(c) ? false : true;
    }
    if (parent_.size() >= limit_) return false;
    const auto d = parent_.size();
    add_row();
    entry(c, x) = static_cast<int>(d);
    entry(d, x ^ 1) = static_cast<int>(c);
    return true;
  }

  // Scans c under r; defines missing cosets when `fill` is set. Returns false
  // only when a definition is needed but no room is left.
  bool scan(std::size_t c, const Word& r, bool fill) {
    const int n = static_cast<int>(r.size());
    int f = static_cast<int>(c), b = static_cast<int>(c);
    int i = 0, j = n - 1;
    while (true) {
      while (i <= j && entry(static_cast<std::size_t>(f), r[static_cast<std::size_t>(i)]) >= 0)
        f = entry(static_cast<std::size_t>(f), r[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && entry(static_cast<std::size_t>(b), r[static_cast<std::size_t>(j)] ^ 1) >= 0)
        b = entry(static_cast<std::size_t>(b), r[static_cast<std::size_t>(j--)] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        const int x = r[static_cast<std::size_t>(i)];
        entry(static_cast<std::size_t>(f), x) = b;
        entry(static_cast<std::size_t>(b), x ^ 1) = f;
        return true;
      }
      if (!fill) return true;
      if (!define(static_cast<std::size_t>(f), r[static_cast<std::size_t>(i)])) return false;
      if (!alive(c)) return true;
    }
  }

  void lookahead() {
    for (std::size_t c = 0; c < parent_.size(); ++c)
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        scan(c, r, false);
      }
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::deque<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    queue.push_back(l);
    --live_;
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      for (int x = 0; x < cols_; ++x) {
        const int f = entry(static_cast<std::size_t>(e), x);
        if (f < 0) continue;
        if (entry(static_cast<std::size_t>(f), x ^ 1) == e) entry(static_cast<std::size_t>(f), x ^ 1) = -1;
        const int e1 = rep(e), f1 = rep(f);
        if (entry(static_cast<std::size_t>(e1), x) >= 0)
          merge(f1, entry(static_cast<std::size_t>(e1), x), queue);
        else if (entry(static_cast<std::size_t>(f1), x ^ 1) >= 0)
          merge(e1, entry(static_cast<std::size_t>(f1), x ^ 1), queue);
        else {
          entry(static_cast<std::size_t>(e1), x) = f1;
          entry(static_cast<std::size_t>(f1), x ^ 1) = e1;
        }
      }
    }
  }

  int cols_;
  std::int64_t max_cosets_;
  std::size_t limit_;
  std::vector<Word> relators_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::int64_t live_ = 0;
};

using Perm = std::array<int, 5>;

Perm compose(const Perm& p, const Perm& q) {  // apply p, then q
  Perm r{};
  for (std::size_t i = 0; i < 5; ++i) r[i] = q[static_cast<std::size_t>(p[i])];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r{};
  for (std::size_t i = 0; i < 5; ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

constexpr Perm kIdentity{0, 1, 2, 3, 4};

std::string cycles(const Perm& p, int n) {
  std::string s;
  std::array<bool, 5> seen{};
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)] || p[static_cast<std::size_t>(i)] == i) continue;
    s += '(';
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      if (s.back() != '(') s += ' ';
      s += std::to_string(j + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

}  // namespace

std::optional<std::int64_t> todd_coxeter(const Presentation& p, int max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("max_cosets must be positive");
  CosetTable table(p, max_cosets);
  return table.run();
}

std::optional<Witness> nontriviality_witness(const Presentation& p, int max_target_order) {
  for (int n = 2; n <= max_target_order; ++n) {
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        if (i == 0 && j == 0) continue;
        const bool ok = std::ranges::all_of(p.relators, [&](const Word& r) {
          long long s = 0;
          for (int l : r) s += (std::abs(l) == 1 ? i : j) * (l > 0 ? 1 : -1);
          return ((s % n) + n) % n == 0;
        });
        if (ok) return Witness{"Z" + std::to_string(n), {std::to_string(i), std::to_string(j)}};
      }
  }
  for (int n = 2; n <= 5; ++n) {
    std::vector<Perm> group;
    Perm q = kIdentity;
    do group.push_back(q);
    while (std::next_permutation(q.begin(), q.begin() + n));
    for (const auto& gx : group)
      for (const auto& gy : group) {
        if (gx == kIdentity && gy == kIdentity) continue;
        const std::array<Perm, 4> img{gx, inverse(gx), gy, inverse(gy)};
        const bool ok = std::ranges::all_of(p.relators, [&](const Word& r) {
          Perm acc = kIdentity;
          for (int l : r) acc = compose(acc, img[static_cast<std::size_t>(2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0))]);
          return acc == kIdentity;
        });
        if (ok) return Witness{"S" + std::to_string(n), {cycles(gx, n), cycles(gy, n)}};
      }
  }
  return std::nullopt;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::trivial: return "trivial-pi1";
    case Verdict::nontrivial: return "nontrivial-pi1";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

Classification classify_triple(const OpenBookTriple& t, const Budgets& budgets) {
  Classification out;
  out.triple = t;
  const Presentation p = pi1_presentation(t);
  out.h1_order = abelianization_order(p);
  if (out.h1_order != 1) {
    out.verdict = Verdict::nontrivial;
    out.method = "abelianization";
    return out;
  }
  out.group_order = todd_coxeter(p, budgets.max_cosets);
  if (out.group_order) {
    out.verdict = *out.group_order == 1 ? Verdict::trivial : Verdict::nontrivial;
    out.method = "todd-coxeter";
    return out;
  }
  out.witness = nontriviality_witness(p, budgets.max_target_order);
  out.verdict = out.witness ? Verdict::nontrivial : Verdict::inconclusive;
  out.method = out.witness ? "homomorphism" : "none";
  return out;
}

std::vector<Classification> classify_all(const std::vector<OpenBookTriple>& triples, const Budgets& budgets,
                                         int jobs) {
  std::vector<Classification> out(triples.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < triples.size(); i = next++) out[i] = classify_triple(triples[i], budgets);
  };
  if (jobs <= 1) {
    work();
    return out;
  }
  std::vector<std::jthread> pool;
  for (int k = 0; k < jobs; ++k) pool.emplace_back(work);
  pool.clear();
  return out;
}

std::vector<OpenBookTriple> sorted_triples(int range) {
  std::vector<OpenBookTriple> out;
  for (int a = -range; a <= range; ++a)
    for (int b = -range; b <= range; ++b)
      for (int c = -range; c <= range; ++c)
        if (std::abs(a) <= std::abs(b) && std::abs(b) <= std::abs(c)) out.push_back({a, b, c});
  return out;
}

namespace {

std::vector<OpenBookTriple> sorted_relabelings(const OpenBookTriple& t) {
  std::array<int, 3> v{t.a, t.b, t.c};
  std::ranges::sort(v);
  std::vector<OpenBookTriple> out;
  do {
    if (std::abs(v[0]) <= std::abs(v[1]) && std::abs(v[1]) <= std::abs(v[2])) out.push_back({v[0], v[1], v[2]});
  } while (std::ranges::next_permutation(v).found);
  return out;
}

std::optional<OpenBookRow> listed_family(const OpenBookTriple& t) {
  const auto sign = [](int e) { return e > 0 ? std::string("+") : std::string("-"); };
  const auto perms = sorted_relabelings(t);
  for (const auto& p : perms)
    if (p.a == 0 && std::abs(p.b) == 1 && std::abs(p.c) == 1) {
      const int s1 = std::max(p.b, p.c), s2 = std::min(p.b, p.c);
      return OpenBookRow{t, "H" + sign(s1) + "#H" + sign(s2), "i"};
    }
  for (const auto& p : perms)
    if (p.a == 1 && p.b == -1) return OpenBookRow{t, "P(2," + std::to_string(-2 * p.c) + ",-2)", "ii"};
  for (const auto& p : perms)
    if (p.a == -1 && p.b == 1) return OpenBookRow{t, "mirror P(2," + std::to_string(2 * p.c) + ",-2)", "ii"};
  for (const auto& p : perms) {
    if (p == OpenBookTriple{-1, 2, 3}) return OpenBookRow{t, "L^ex", "iii"};
    if (p == OpenBookTriple{1, -2, -3}) return OpenBookRow{t, "mirror L^ex", "iii"};
  }
  return std::nullopt;
}

}  // namespace

bool in_trivial_list(const OpenBookTriple& t) { return listed_family(t).has_value(); }

std::vector<OpenBookRow> s3_openbook_report(int range, const Budgets& budgets, int jobs) {
  if (range < 1) throw std::invalid_argument("range must be at least 1");
  const auto triples = sorted_triples(range);
  std::vector<OpenBookRow> out;
  for (const auto& c : classify_all(triples, budgets, jobs)) {
    if (c.verdict != Verdict::trivial) continue;
    auto row = listed_family(c.triple);
    out.push_back(row ? *row : OpenBookRow{c.triple, "unlisted", ""});
  }
  return out;
}

}  // namespace clasp2
