#include "clasp2/clasp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace clasp2 {

std::string to_string(DiskType t) { return t == DiskType::X ? "X" : "II"; }

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::refuted:
      return "refuted";
    case SearchStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

struct Coefficients {
  long long a2;
  long long a4;
};

Coefficients model_coefficients(const ClaspParams& p) {
  const long long e1 = p.eps1, e2 = p.eps2, l1 = p.l1, l2 = p.l2, l = p.l;
  if (p.type == DiskType::X) return {e1 * l1 + e2 * l2 + e1 * e2, e1 * e2 * (l1 * l2 - l * (l + 1))};
  return {e1 * l1 + e2 * l2, e1 * e2 * (l1 * l2 - l * l)};
}

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

void check_sign(int e) {
  if (e != 1 && e != -1) throw std::invalid_argument("clasp sign must be +1 or -1");
}

}  // namespace

LaurentPoly conway_model(const ClaspParams& p) {
  check_sign(p.eps1);
  check_sign(p.eps2);
  const auto [a2, a4] = model_coefficients(p);
  return LaurentPoly(1) + LaurentPoly::monomial(a2, 0, 2) + LaurentPoly::monomial(a4, 0, 4);
}

LinkParams link_to_params(int lk12, int lk13, int lk23) { return {-lk12, lk13 + lk12, lk23 + lk12}; }

std::array<int, 3> params_to_links(const LinkParams& p) { return {-p.l, p.l1 + p.l, p.l2 + p.l}; }

std::vector<ClaspParams> enumerate_params(long long a2, long long a4, DiskType type, int bound) {
  if (bound < 0) throw std::invalid_argument("enumerate_params: negative bound");
  std::vector<ClaspParams> out;
  for (int e1 : {-1, 1}) {
    for (int e2 : {-1, 1}) {
      for (int l1 = -bound; l1 <= bound; ++l1) {
        for (int l2 = -bound; l2 <= bound; ++l2) {
          ClaspParams p{e1, e2, l1, l2, 0, type};
          if (model_coefficients(p).a2 != a2) continue;
          for (int l = -bound; l <= bound; ++l) {
            p.l = l;
            if (model_coefficients(p).a4 == a4) out.push_back(p);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool typeX_parity_obstruction(long long a2, long long a4) { return mod(a4, 2) == 1 && mod(a2, 2) == 0; }

bool kadokami_kawamura_excluded(long long a2, long long a4) { return mod(a4, 8) == 3 && mod(a2, 4) == 2; }

LaurentPoly p0_model(const ClaspParams& p, const LaurentPoly& p1, const LaurentPoly& p2,
                     const std::optional<LaurentPoly>& p3) {
  check_sign(p.eps1);
  check_sign(p.eps2);
  if (p.type == DiskType::II && !p3) throw std::invalid_argument("p0_model: type II needs the third companion");
  if (p.type == DiskType::X && p3) throw std::invalid_argument("p0_model: type X takes two companions");
  const LaurentPoly w = LaurentPoly::v(-1) - LaurentPoly::v(1);
  const int e1 = p.eps1, e2 = p.eps2;
  LaurentPoly out = LaurentPoly::v(2 * (e1 + e2));
  out += e1 * (w * p1 * p1).shifted(e1 + 2 * e2 + 2 * p.l1, 0);
  out += e2 * (w * p2 * p2).shifted(e2 + 2 * e1 + 2 * p.l2, 0);
  if (p.type == DiskType::II) out += e1 * e2 * (w * w * p1 * p2 * *p3).shifted(2 * (p.l1 + p.l2 + p.l) + e1 + e2, 0);
  return out;
}

namespace {

// Dense Laurent polynomial on exponents [-span, span].
class Dense {
 public:
  explicit Dense(int span) : span_(span), c_(static_cast<std::size_t>(2 * span + 1), 0) {}
  long long& at(int e) { return c_[static_cast<std::size_t>(e + span_)]; }
  long long at(int e) const { return c_[static_cast<std::size_t>(e + span_)]; }
  int span() const { return span_; }

 private:
  int span_;
  std::vector<long long> c_;
};

long long isqrt_exact(long long x) {
  if (x < 0) return -1;
  auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(x))));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x ? r : -1;
}

// Square root of s with one-parity support inside [-deg, deg] and bounded
// coefficients, or nullopt.
std::optional<LaurentPoly> bounded_sqrt(const Dense& s, int deg, int coeff) {
  int lo = -s.span();
  while (lo <= s.span() && s.at(lo) == 0) ++lo;
  if (lo > s.span()) return LaurentPoly();
  int hi = s.span();
  while (s.at(hi) == 0) --hi;
  if (mod(lo, 2) != 0 || mod(hi, 2) != 0) return std::nullopt;
  const long long a0 = isqrt_exact(s.at(lo));
  if (a0 <= 0 || a0 > coeff) return std::nullopt;
  const int base = lo / 2;
  const int len = (hi - lo) / 2 + 1;
  if (base < -deg || base + len - 1 > deg) return std::nullopt;
  std::vector<long long> a(static_cast<std::size_t>(len), 0);
  a[0] = a0;
  for (int k = 1; k < len; ++k) {
    long long rest = s.at(lo + k);
    for (int i = 1; i < k; ++i) rest -= a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(k - i)];
    if (rest % (2 * a0) != 0) return std::nullopt;
    const long long ak = rest / (2 * a0);
    if (ak != 0 && k % 2 == 1) return std::nullopt;
    if (std::llabs(ak) > coeff) return std::nullopt;
    a[static_cast<std::size_t>(k)] = ak;
  }
  // Verify the upper half, which the recurrence did not consume.
  for (int k = len; k <= hi - lo; ++k) {
    long long sum = 0;
    for (int i = k - len + 1; i < len; ++i) sum += a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(k - i)];
    if (sum != s.at(lo + k)) return std::nullopt;
  }
  LaurentPoly f;
  for (int k = 0; k < len; ++k)
    if (a[static_cast<std::size_t>(k)] != 0) f += LaurentPoly::monomial(a[static_cast<std::size_t>(k)], base + k, 0);
  return f;
}

}  // namespace

SumOfSquaresResult typeX_sum_of_squares_search(const LaurentPoly& p0_knot, int eps1, int eps2, int deg_bound,
                                               int coeff_bound) {
  check_sign(eps1);
  check_sign(eps2);
  if (deg_bound < 0 || coeff_bound < 0) throw std::invalid_argument("sum-of-squares search: negative bound");
  if (!p0_knot.is_v_only()) throw std::invalid_argument("sum-of-squares search: p0 must not involve z");
  SumOfSquaresResult res;
  const auto q = (p0_knot - LaurentPoly::v(2 * (eps1 + eps2))).divide_exact_v(LaurentPoly::v(-2) - 1);
  if (!q) {
    res.status = SearchStatus::refuted;
    res.note = "p0 - v^(2(eps1+eps2)) is not divisible by v^-2 - 1";
    return res;
  }
  res.quotient = *q;
  const int span = 2 * deg_bound;
  Dense target(span);
  for (const auto& t : q->terms()) {
    if (t.exp.v < -span || t.exp.v > span) {
      res.note = "quotient has exponents outside the search window";
      return res;
    }
    if (boost::multiprecision::abs(t.coeff) > Integer(1) << 60) {
      res.note = "quotient coefficients too large for the search";
      return res;
    }
    target.at(t.exp.v) = static_cast<long long>(t.coeff);
  }

  // Equal signs cannot cancel leading terms, so f1 lives in half the span of q.
  int lo_exp = -deg_bound, hi_exp = deg_bound;
  if (eps1 == eps2) {
    if (q->is_zero()) {
      res.status = SearchStatus::found;
      res.f1 = LaurentPoly();
      res.f2 = LaurentPoly();
      return res;
    }
    lo_exp = std::max(-deg_bound, static_cast<int>(std::floor(*q->min_v() / 2.0)));
    hi_exp = std::min(deg_bound, static_cast<int>(std::ceil(*q->max_v() / 2.0)));
  }

  for (int parity = 0; parity < 2; ++parity) {
    std::vector<int> exps;
    for (int e = lo_exp; e <= hi_exp; ++e)
      if (mod(e, 2) == parity) exps.push_back(e);
    const std::size_t m = exps.size();
    std::vector<long long> coef(m, -coeff_bound);
    // sq = f1^2 as a dense polynomial, kept up to date under single-coefficient moves.
    Dense sq(span);
    auto shift_coef = [&](std::size_t i, long long d) {
      const int e = exps[i];
      for (std::size_t j = 0; j < m; ++j) sq.at(e + exps[j]) += 2 * d * coef[j];
      sq.at(2 * e) += d * d;
      coef[i] += d;
    };
    {
      std::vector<long long> start = coef;
      std::fill(coef.begin(), coef.end(), 0);
      for (std::size_t i = 0; i < m; ++i) shift_coef(i, start[i]);
    }
    Dense rest(span);
    for (;;) {
      for (int e = -span; e <= span; ++e) rest.at(e) = eps2 * (target.at(e) - eps1 * sq.at(e));
      if (auto f2 = bounded_sqrt(rest, deg_bound, coeff_bound)) {
        LaurentPoly f1;
        for (std::size_t i = 0; i < m; ++i)
          if (coef[i] != 0) f1 += LaurentPoly::monomial(coef[i], exps[i], 0);
        res.status = SearchStatus::found;
        res.f1 = f1;
        res.f2 = *f2;
        return res;
      }
      std::size_t i = 0;
      while (i < m && coef[i] == coeff_bound) {
        shift_coef(i, -2LL * coeff_bound);
        ++i;
      }
      if (i == m) break;
      shift_coef(i, 1);
    }
  }
  res.note = "no decomposition with |exponent| <= " + std::to_string(deg_bound) + " and |coefficient| <= " +
             std::to_string(coeff_bound);
  return res;
}

std::vector<ClaspWitness> find_type_ii_witnesses(const Diagram& knot, SkeinEngine& engine, std::size_t max_results) {
  if (!knot.is_knot()) throw std::invalid_argument("find_type_ii_witnesses: input must be a knot");
  std::vector<ClaspWitness> out;
  const LaurentPoly target_conway = engine.conway(knot);
  const LaurentPoly target_p0 = engine.p0(knot);
  const int n = knot.crossing_count();
  for (int c1 = 0; c1 < n; ++c1) {
    for (int c2 = 0; c2 < n; ++c2) {
      if (c1 == c2) continue;
      const int c2_after = c2 - (c2 > c1 ? 1 : 0);
      const Diagram oo = knot.smooth_crossing(c1).smooth_crossing(c2_after);
      if (oo.num_components() != 3) continue;
      const Diagram ou = knot.smooth_crossing(c1).switch_crossing(c2_after);
      const Diagram uo = knot.switch_crossing(c1).smooth_crossing(c2);
      if (ou.num_components() != 2 || uo.num_components() != 2) continue;
      const int l1 = ou.linking_number(0, 1);
      const int l2 = uo.linking_number(0, 1);
      if (engine.homfly(knot.switch_crossing(c1).switch_crossing(c2)) != LaurentPoly(1)) continue;
      std::array<int, 3> perm{0, 1, 2};
      do {
        const auto lp = link_to_params(oo.linking_number(perm[0], perm[1]), oo.linking_number(perm[0], perm[2]),
                                       oo.linking_number(perm[1], perm[2]));
        if (lp.l1 != l1 || lp.l2 != l2) continue;
        ClaspWitness w;
        w.c1 = c1;
        w.c2 = c2;
        w.params = {knot.sign(c1), knot.sign(c2), l1, l2, lp.l, DiskType::II};
        w.p1 = engine.p0(oo.sublink({perm[0]}));
        w.p2 = engine.p0(oo.sublink({perm[1]}));
        w.p3 = engine.p0(oo.sublink({perm[2]}));
        w.predicted_conway = conway_model(w.params);
        w.predicted_p0 = p0_model(w.params, w.p1, w.p2, w.p3);
        if (w.predicted_conway != target_conway || w.predicted_p0 != target_p0) continue;
        out.push_back(std::move(w));
        if (out.size() >= max_results) return out;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

}  // namespace clasp2
