#include "clasp2/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace clasp2 {

LaurentPoly::LaurentPoly(long long c) : LaurentPoly(Integer(c)) {}

LaurentPoly::LaurentPoly(Integer c) {
  if (c != 0) terms_.push_back({{0, 0}, std::move(c)});
}

LaurentPoly LaurentPoly::monomial(Integer c, int v_exp, int z_exp) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({{v_exp, z_exp}, std::move(c)});
  return p;
}

LaurentPoly LaurentPoly::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return LaurentPoly(std::move(out));
}

Integer LaurentPoly::coefficient(int v_exp, int z_exp) const {
  const Monomial m{v_exp, z_exp};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.exp < key; });
  if (it != terms_.end() && it->exp == m) return it->coeff;
  return 0;
}

bool LaurentPoly::is_z_only() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.exp.v == 0; });
}

bool LaurentPoly::is_v_only() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.exp.z == 0; });
}

std::optional<int> LaurentPoly::min_z() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exp.z;
}

std::optional<int> LaurentPoly::max_z() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().exp.z;
}

std::optional<int> LaurentPoly::min_v() const {
  if (terms_.empty()) return std::nullopt;
  int m = terms_.front().exp.v;
  for (const auto& t : terms_) m = std::min(m, t.exp.v);
  return m;
}

std::optional<int> LaurentPoly::max_v() const {
  if (terms_.empty()) return std::nullopt;
  int m = terms_.front().exp.v;
  for (const auto& t : terms_) m = std::max(m, t.exp.v);
  return m;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (this == &o) {
    const LaurentPoly copy = o;
    return *this += copy;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      out.push_back(*b++);
    } else {
      Integer c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      prod.push_back({{s.exp.v + t.exp.v, s.exp.z + t.exp.z}, s.coeff * t.coeff});
  return LaurentPoly::from_unsorted(std::move(prod));
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n != 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n != 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int dv, int dz) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) {
    t.exp.v += dv;
    t.exp.z += dz;
  }
  return r;  // uniform shift preserves the order
}

LaurentPoly LaurentPoly::substitute_v(int value) const {
  if (value != 1 && value != -1) throw std::invalid_argument("substitute_v: value must be +1 or -1");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Integer c = (value == -1 && (t.exp.v % 2 != 0)) ? Integer(-t.coeff) : t.coeff;
    out.push_back({{0, t.exp.z}, std::move(c)});
  }
  return from_unsorted(std::move(out));
}

LaurentPoly LaurentPoly::invert_v() const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  for (auto& t : out) t.exp.v = -t.exp.v;
  return from_unsorted(std::move(out));
}

LaurentPoly LaurentPoly::mirror_v() const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  for (auto& t : out) {
    t.exp.v = -t.exp.v;
    if (t.exp.v % 2 != 0) t.coeff = -t.coeff;
  }
  return from_unsorted(std::move(out));
}

std::optional<LaurentPoly> LaurentPoly::divide_exact_v(const LaurentPoly& divisor) const {
  if (!is_v_only() || !divisor.is_v_only())
    throw std::invalid_argument("divide_exact_v: operands must not involve z");
  if (divisor.is_zero()) throw std::invalid_argument("divide_exact_v: division by zero");
  if (is_zero()) return LaurentPoly{};

  // Dense coefficient arrays of the v-normalized polynomials, index = degree.
  auto dense = [](const LaurentPoly& p, int lo, int hi) {
    std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& t : p.terms_) c[static_cast<std::size_t>(t.exp.v - lo)] = t.coeff;
    return c;
  };
  const int alo = *min_v(), ahi = *max_v();
  const int dlo = *divisor.min_v(), dhi = *divisor.max_v();
  std::vector<Integer> rem = dense(*this, alo, ahi);
  const std::vector<Integer> den = dense(divisor, dlo, dhi);
  const int dd = dhi - dlo;
  const int ad = ahi - alo;
  if (ad < dd) return std::nullopt;

  std::vector<Integer> quo(static_cast<std::size_t>(ad - dd + 1));
  for (int k = ad - dd; k >= 0; --k) {
    const Integer& top = rem[static_cast<std::size_t>(k + dd)];
    if (top == 0) continue;
    if (top % den.back() != 0) return std::nullopt;
    Integer q = top / den.back();
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * den[static_cast<std::size_t>(j)];
    quo[static_cast<std::size_t>(k)] = std::move(q);
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;

  std::vector<Term> out;
  for (std::size_t k = 0; k < quo.size(); ++k)
    if (quo[k] != 0) out.push_back({{static_cast<int>(k) + alo - dlo, 0}, quo[k]});
  return from_unsorted(std::move(out));
}

namespace {

void append_factor(std::ostringstream& os, char var, int e, bool& first) {
  if (e == 0) return;
  if (!first) os << '*';
  os << var;
  if (e != 1) os << '^' << e;
  first = false;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool leading = true;
  for (const auto& t : terms_) {
    Integer mag = t.coeff < 0 ? Integer(-t.coeff) : t.coeff;
    if (leading) {
      if (t.coeff < 0) os << '-';
    } else {
      os << (t.coeff < 0 ? " - " : " + ");
    }
    leading = false;
    os << mag;
    bool first = false;
    append_factor(os, 'v', t.exp.v, first);
    append_factor(os, 'z', t.exp.z, first);
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  LaurentPoly parse() {
    if (text_.empty()) fail("empty input");
    std::vector<Term> terms;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      // Accept "a + -b", "a - b", and a leading sign.
      bool saw_op = false;
      while (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        if (text_[pos_] == '-') sign = -sign;
        saw_op = true;
        ++pos_;
      }
      if (!first && !saw_op) fail("expected '+' or '-'");
      first = false;
      terms.push_back(parse_term(sign));
    }
    LaurentPoly p;
    for (auto& t : terms) p += LaurentPoly::monomial(t.coeff, t.exp.v, t.exp.z);
    return p;
  }

 private:
  Term parse_term(int sign) {
    Term t{{0, 0}, Integer(sign)};
    bool need_factor = true;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      t.coeff *= parse_unsigned();
      need_factor = false;
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        need_factor = true;
      } else {
        return t;
      }
    }
    if (!need_factor) return t;
    for (;;) {
      if (pos_ >= text_.size()) fail("expected variable");
      char var = text_[pos_];
      if (var != 'v' && var != 'z') fail("expected 'v' or 'z'");
      ++pos_;
      int e = 1;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        e = parse_exponent();
      }
      (var == 'v' ? t.exp.v : t.exp.z) += e;
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      return t;
    }
  }

  int parse_exponent() {
    bool paren = pos_ < text_.size() && text_[pos_] == '(';
    if (paren) ++pos_;
    int sign = 1;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      if (text_[pos_] == '-') sign = -1;
      ++pos_;
    }
    Integer e = parse_unsigned();
    if (paren) {
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
    }
    if (e > 1000000) fail("exponent out of range");
    return sign * e.convert_to<int>();
  }

  Integer parse_unsigned() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

LaurentPoly extract_p_i(const LaurentPoly& homfly, int num_components, int i) {
  if (num_components < 1) throw std::invalid_argument("extract_p_i: need at least one component");
  if (i < 0) throw std::invalid_argument("extract_p_i: negative index");
  const int k = num_components - 1;
  const LaurentPoly normalized = homfly.shifted(-k, k);
  LaurentPoly out;
  for (const auto& t : normalized.terms()) {
    if (t.exp.z < 0 || t.exp.z % 2 != 0)
      throw std::invalid_argument("extract_p_i: normalized polynomial has odd or negative z-exponent");
    if (t.exp.z == 2 * i) out += LaurentPoly::monomial(t.coeff, t.exp.v, 0);
  }
  return out;
}

}  // namespace clasp2
